"""First homology of the space a 4-coloured graph encodes.

Dual cell structure of a 3-gem: graph vertices are tetrahedra, a c-coloured
edge is the triangle opposite the tetrahedron corner of colour c, an
{a,b}-cycle is a triangulation edge and a residue missing colour x is a
triangulation vertex of colour x.  H1 comes from the edge-path presentation
of the 2-skeleton, abelianized and put in Smith normal form.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from gemforge.colored_graph import (
    COLOUR_PAIRS,
    COLOUR_TRIPLES,
    COLOURS,
    ColouredGraph,
    GraphError,
    is_connected,
    is_gem,
    residue_labels,
)


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int
    torsion: tuple[int, ...]

    @classmethod
    def from_factors(cls, free_rank: int, factors) -> "AbelianGroup":
        """Canonical form of Z^free_rank + sum Z_d for arbitrary cyclic orders d."""
        ds = [abs(int(d)) for d in factors if abs(int(d)) != 1]
        free_rank += sum(1 for d in ds if d == 0)
        ds = sorted(d for d in ds if d)
        # gcd/lcm smoothing until every factor divides the next
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                g = gcd(ds[i], ds[j])
                ds[i], ds[j] = g, ds[i] * ds[j] // g
        return cls(free_rank, tuple(d for d in ds if d != 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FacePoset:
    """Cells of the dual pseudocomplex with the incidences needed for pi_1.

    ``cells[k]`` lists k-cells; 0-cells are ``(triple, label)``, 1-cells
    ``(pair, label)``, 2-cells ``(colour, vertex)`` with ``vertex`` the smaller
    endpoint, 3-cells graph vertices.  ``edge_ends[e]`` is the oriented pair of
    0-cell indices of 1-cell ``e``; ``boundary[t]`` is the signed 1-cell word of
    2-cell ``t``.
    """

    cells: tuple[tuple, tuple, tuple, tuple]
    edge_ends: tuple[tuple[int, int], ...]
    boundary: tuple[tuple[tuple[int, int], ...], ...]
    faces_of_triangle: tuple[tuple[int, int, int], ...]
    base_vertex: int


def face_poset(g: ColouredGraph) -> FacePoset:
    if not is_connected(g):
        raise GraphError("face poset needs a connected graph")
    verts: list[tuple] = []
    vert_id: dict[tuple, int] = {}
    for triple in COLOUR_TRIPLES:
        _, count = residue_labels(g, triple)
        for lab in range(count):
            vert_id[(triple, lab)] = len(verts)
            verts.append((triple, lab))

    def zero_cell(v: int, missing: int) -> int:
        triple = tuple(c for c in COLOURS if c != missing)
        return vert_id[(triple, residue_labels(g, triple)[0][v])]

    edges: list[tuple] = []
    edge_id: dict[tuple, int] = {}
    ends: list[tuple[int, int]] = []
    for pair in COLOUR_PAIRS:
        labels, count = residue_labels(g, pair)
        rep = [-1] * count
        for v, lab in enumerate(labels):
            if rep[lab] < 0:
                rep[lab] = v
        u, w = (c for c in COLOURS if c not in pair)
        for lab in range(count):
            edge_id[(pair, lab)] = len(edges)
            edges.append((pair, lab))
            # oriented from the triangulation vertex of colour u to the one of colour w
            ends.append((zero_cell(rep[lab], u), zero_cell(rep[lab], w)))

    def one_cell(v: int, x: int, y: int) -> int:
        pair = (min(x, y), max(x, y))
        return edge_id[(pair, residue_labels(g, pair)[0][v])]

    rows = g.rows()
    triangles: list[tuple] = []
    boundary = []
    faces = []
    for c in COLOURS:
        a, b, d = (x for x in COLOURS if x != c)
        for v in range(g.vertex_count):
            if v > rows[c][v]:
                continue
            triangles.append((c, v))
            # walk corner a -> b -> d -> a; triangle edge between corners x, y is the cycle of the other two colours
            boundary.append(((one_cell(v, c, d), 1), (one_cell(v, c, a), 1), (one_cell(v, c, b), -1)))
            faces.append((zero_cell(v, a), zero_cell(v, b), zero_cell(v, d)))
    return FacePoset(
        cells=(tuple(verts), tuple(edges), tuple(triangles), tuple(range(g.vertex_count))),
        edge_ends=tuple(ends),
        boundary=tuple(boundary),
        faces_of_triangle=tuple(faces),
        base_vertex=zero_cell(0, 3),
    )


def spanning_tree(fp: FacePoset, method: str = "bfs") -> set[int]:
    """1-cells of a spanning tree of the 1-skeleton rooted at the base 0-cell."""
    nverts = len(fp.cells[0])
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nverts)]
    for e, (s, t) in enumerate(fp.edge_ends):
        adj[s].append((e, t))
        adj[t].append((e, s))
    seen = [False] * nverts
    seen[fp.base_vertex] = True
    tree: set[int] = set()
    if method == "bfs":
        queue = deque([fp.base_vertex])
        while queue:
            x = queue.popleft()
            for e, y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    tree.add(e)
                    queue.append(y)
    elif method == "dfs":
        stack = [fp.base_vertex]
        while stack:
            x = stack.pop()
            for e, y in reversed(adj[x]):
                if not seen[y]:
                    seen[y] = True
                    tree.add(e)
                    stack.append(y)
    else:
        raise ValueError(f"unknown spanning tree method {method!r}")
    if not all(seen):
        raise GraphError("1-skeleton is disconnected")
    return tree


@dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]


def pi1_presentation(fp: FacePoset, tree: str = "bfs") -> Presentation:
    """Generators are non-tree 1-cells; relators are 2-cell boundaries with tree letters deleted.

    Letters are ``(generator index, +-1)``.
    """
    in_tree = spanning_tree(fp, tree)
    gens = tuple(e for e in range(len(fp.cells[1])) if e not in in_tree)
    gen_index = {e: i for i, e in enumerate(gens)}
    relators = tuple(
        tuple((gen_index[e], s) for e, s in word if e in gen_index) for word in fp.boundary
    )
    return Presentation(gens, relators)


class SmithForm(NamedTuple):
    factors: tuple[int, ...]
    rank: int


def smith_normal_form(matrix) -> SmithForm:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix (exact integers)."""
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    k = a[i][t] // p
                    if k:
                        a[i] = [x - k * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    k = a[t][j] // p
                    if k:
                        for row in a:
                            row[j] -= k * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                break
            # a remainder is smaller than the pivot: move it into pivot position
            best = None
            for i in range(t, rows):
                if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best][t])):
                    best = i
            a[t], a[best] = a[best], a[t]
            best = None
            for j in range(t, cols):
                if a[t][j] and (best is None or abs(a[t][j]) < abs(a[t][best])):
                    best = j
            for row in a:
                row[t], row[best] = row[best], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    group = AbelianGroup.from_factors(0, diag)
    factors = (1,) * (len(diag) - len(group.torsion)) + group.torsion
    return SmithForm(factors, len(diag))


def abelianize(pres: Presentation) -> AbelianGroup:
    """Z^generators modulo the relators, with unit-coefficient eliminations done sparsely first."""
    rows: list[dict[int, int]] = []
    for word in pres.relators:
        row: dict[int, int] = {}
        for gen, s in word:
            row[gen] = row.get(gen, 0) + s
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)
    live = set(range(len(pres.generators)))
    col_rows: dict[int, set[int]] = {c: set() for c in live}
    for r, row in enumerate(rows):
        for c in row:
            col_rows[c].add(r)
    alive = set(range(len(rows)))
    progress = True
    while progress:
        progress = False
        for r in sorted(alive):
            row = rows[r]
            unit = next((c for c in sorted(row) if abs(row[c]) == 1), None)
            if unit is None:
                continue
            # solve relator r for generator `unit` and substitute everywhere
            u = row[unit]
            for r2 in list(col_rows[unit]):
                if r2 == r:
                    continue
                other = rows[r2]
                k = other[unit] * u
                for c, v in row.items():
                    nv = other.get(c, 0) - k * v
                    if nv:
                        if c not in other:
                            col_rows[c].add(r2)
                        other[c] = nv
                    elif c in other:
                        del other[c]
                        col_rows[c].discard(r2)
                if not other:
                    alive.discard(r2)
            for c in row:
                col_rows[c].discard(r)
            live.discard(unit)
            alive.discard(r)
            del col_rows[unit]
            progress = True
    cols = sorted(live)
    dense = [[rows[r].get(c, 0) for c in cols] for r in sorted(alive)]
    snf = smith_normal_form(dense) if dense and cols else SmithForm((), 0)
    return AbelianGroup.from_factors(len(cols) - snf.rank, snf.factors)


def h1(g: ColouredGraph, tree: str = "bfs") -> AbelianGroup:
    if not is_gem(g):
        raise GraphError("H1 is only computed for gems (closed 3-manifolds)")
    return abelianize(pi1_presentation(face_poset(g), tree))
