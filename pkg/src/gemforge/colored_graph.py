"""Four-coloured graphs given by fixed-point-free involutions.

A graph on ``N`` vertices is stored as a ``(4, N)`` integer table whose row
``c`` is the involution of colour ``c``.  Edges are never materialized, so
parallel edges of different colours cost nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from gemforge import _kernels

COLOURS = (0, 1, 2, 3)
COLOUR_PAIRS = tuple(combinations(COLOURS, 2))
COLOUR_TRIPLES = tuple(combinations(COLOURS, 3))


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside an operation's contract."""


@dataclass(frozen=True, eq=False)
class ColouredGraph:
    involutions: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        table = np.array(self.involutions, dtype=np.int64, copy=True)
        if table.ndim != 2 or table.shape[0] != 4 or table.shape[1] == 0:
            raise GraphError(f"expected a (4, N) involution table, got shape {table.shape}")
        n = table.shape[1]
        if table.min() < 0 or table.max() >= n:
            raise GraphError("involution entries out of range")
        idx = np.arange(n)
        for c in COLOURS:
            row = table[c]
            if np.any(row[row] != idx):
                raise GraphError(f"colour {c} is not an involution")
            if np.any(row == idx):
                raise GraphError(f"colour {c} has a fixed point")
        table.flags.writeable = False
        object.__setattr__(self, "involutions", table)

    @classmethod
    def from_involutions(cls, rows: Iterable[Iterable[int]]) -> "ColouredGraph":
        return cls(np.asarray([list(r) for r in rows], dtype=np.int64))

    @property
    def vertex_count(self) -> int:
        return int(self.involutions.shape[1])

    def involution(self, colour: int) -> np.ndarray:
        return self.involutions[colour]

    def rows(self) -> list[list[int]]:
        """Involution table as plain lists (cached)."""
        if "rows" not in self._cache:
            self._cache["rows"] = self.involutions.tolist()
        return self._cache["rows"]

    def __eq__(self, other):
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return np.array_equal(self.involutions, other.involutions)

    def __hash__(self):
        return hash(self.involutions.tobytes())


def residue_labels(g: ColouredGraph, colours: Iterable[int]) -> tuple[list[int], int]:
    """Component label per vertex for the subgraph on ``colours``, plus component count.

    Labels are assigned in order of the smallest vertex of each component.
    """
    cols = sorted(set(colours))
    if not cols:
        raise GraphError("residues need at least one colour")
    if any(c not in COLOURS for c in cols):
        raise GraphError(f"unknown colour in {cols}")
    key = ("labels", tuple(cols))
    if key not in g._cache:
        g._cache[key] = _kernels.component_labels(g.involutions, cols)
    return g._cache[key]


def residues(g: ColouredGraph, colours: Iterable[int]) -> list[list[int]]:
    """Vertex sets of the connected components of the subgraph spanned by ``colours``."""
    labels, count = residue_labels(g, colours)
    parts: list[list[int]] = [[] for _ in range(count)]
    for v, lab in enumerate(labels):
        parts[lab].append(v)
    return parts


def is_connected(g: ColouredGraph) -> bool:
    return residue_labels(g, COLOURS)[1] == 1


def census(g: ColouredGraph) -> dict[tuple[int, int], list[int]]:
    """Sorted bicoloured-cycle lengths for each of the six colour pairs."""
    return {pair: sorted(len(r) for r in residues(g, pair)) for pair in COLOUR_PAIRS}


def is_bipartite(g: ColouredGraph) -> bool:
    side = [-1] * g.vertex_count
    rows = g.rows()
    for start in range(g.vertex_count):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for row in rows:
                w = row[v]
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def residue_euler_characteristic(g: ColouredGraph, triple: tuple[int, int, int], component: list[int]) -> int:
    """Euler characteristic of the surface a 3-coloured residue encodes.

    Faces are the bicoloured cycles inside the residue, edges ``3|R|/2`` and
    vertices ``|R|``.
    """
    members = set(component)
    faces = 0
    for pair in combinations(triple, 2):
        labels, _ = residue_labels(g, pair)
        faces += len({labels[v] for v in members})
    size = len(component)
    return faces - 3 * size // 2 + size


def is_gem(g: ColouredGraph) -> bool:
    """True iff every 3-coloured residue is a 2-sphere, i.e. the graph encodes a closed 3-manifold."""
    if not is_connected(g):
        raise GraphError("gem check needs a connected graph")
    for triple in COLOUR_TRIPLES:
        for comp in residues(g, triple):
            if residue_euler_characteristic(g, triple, comp) != 2:
                return False
    return True
