"""Colour-permuting isomorphisms of connected 4-coloured graphs.

An isomorphism is a pair ``(f, phi)`` with ``f`` a vertex bijection and ``phi``
a colour permutation such that ``f(eps_k(v)) = eps'_{phi[k]}(f(v))``.  On a
connected graph it is determined by ``phi`` and the image of one vertex, so
trying all 24 colour permutations times all images of vertex 0 decides
isomorphism exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from gemforge import _kernels
from gemforge.colored_graph import COLOUR_PAIRS, ColouredGraph, GraphError, census, is_connected, residues
from gemforge.lins_mandel import LMParams, build, coords, epsilon, index

PERMUTATIONS = tuple(permutations(range(4)))
IDENTITY_PHI = (0, 1, 2, 3)


@dataclass(frozen=True)
class IsoWitness:
    f: tuple[int, ...]
    phi: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))
        if sorted(self.phi) != [0, 1, 2, 3]:
            raise GraphError(f"phi is not a permutation of the colours: {self.phi}")
        if sorted(self.f) != list(range(len(self.f))):
            raise GraphError("f is not a bijection")

    @classmethod
    def identity(cls, size: int) -> "IsoWitness":
        return cls(tuple(range(size)), IDENTITY_PHI)

    def then(self, other: "IsoWitness") -> "IsoWitness":
        """Apply ``self`` first, then ``other``."""
        return IsoWitness(tuple(other.f[x] for x in self.f), tuple(other.phi[k] for k in self.phi))

    def inverse(self) -> "IsoWitness":
        f_inv = [0] * len(self.f)
        for v, w in enumerate(self.f):
            f_inv[w] = v
        phi_inv = [0] * 4
        for k, c in enumerate(self.phi):
            phi_inv[c] = k
        return IsoWitness(tuple(f_inv), tuple(phi_inv))

    def to_json(self) -> dict:
        return {"phi": list(self.phi), "f": list(self.f)}


def _require_connected(*graphs: ColouredGraph) -> None:
    for g in graphs:
        if not is_connected(g):
            raise GraphError("isomorphism search needs connected graphs")


def verify(g: ColouredGraph, h: ColouredGraph, w: IsoWitness) -> bool:
    if g.vertex_count != h.vertex_count:
        raise GraphError(f"vertex counts differ: {g.vertex_count} vs {h.vertex_count}")
    if len(w.f) != g.vertex_count:
        return False
    a, b, f = g.rows(), h.rows(), w.f
    for k in range(4):
        ak, bk = a[k], b[w.phi[k]]
        for v in range(g.vertex_count):
            if f[ak[v]] != bk[f[v]]:
                return False
    return True


def propagate(g: ColouredGraph, h: ColouredGraph, phi, seed: tuple[int, int]) -> IsoWitness | None:
    """Extend ``f(seed[0]) = seed[1]`` along coloured edges; None on any conflict."""
    _require_connected(g, h)
    if g.vertex_count != h.vertex_count:
        raise GraphError(f"vertex counts differ: {g.vertex_count} vs {h.vertex_count}")
    f = _kernels.propagate(g.involutions, h.involutions, tuple(phi), seed[0], seed[1])
    if f is None:
        return None
    return IsoWitness(f, phi)


def census_compatible(g: ColouredGraph, h: ColouredGraph, phi) -> bool:
    """Necessary condition: {a,b}-cycles of g have the lengths of {phi a, phi b}-cycles of h."""
    cg, ch = _census(g), _census(h)
    return all(cg[(a, b)] == ch[tuple(sorted((phi[a], phi[b])))] for a, b in COLOUR_PAIRS)


def _census(g: ColouredGraph):
    if "census" not in g._cache:
        g._cache["census"] = census(g)
    return g._cache["census"]


def are_isomorphic(g: ColouredGraph, h: ColouredGraph, prune: bool = True) -> IsoWitness | None:
    """First witness in (phi lexicographic, image of vertex 0) order, or None if none exists.

    ``prune`` skips colour permutations that fail the residue-census test; it
    never changes the answer or the first witness found.
    """
    _require_connected(g, h)
    if g.vertex_count != h.vertex_count:
        return None
    phis = [phi for phi in PERMUTATIONS if not prune or census_compatible(g, h, phi)]
    if not phis:
        return None
    hit = _kernels.search(g.involutions, h.involutions, phis, 0)
    if hit is None:
        return None
    idx, _, f = hit
    return IsoWitness(f, phis[idx])


# Named maps between Lins-Mandel graphs.

def _inv(x: int, mod: int) -> int:
    if mod == 1:
        return 0
    if gcd(x, mod) != 1:
        raise GraphError(f"{x} is not invertible mod {mod}")
    return pow(x, -1, mod)


def _table_witness(params: LMParams, fn, phi) -> IsoWitness:
    f = [0] * (2 * params.n * params.p)
    for i in range(params.n):
        for j in range(2 * params.p):
            f[index(i, j, params)] = index(*fn(i, j), params)
    return IsoWitness(f, phi)


def _iterate_f2(target: LMParams, start_j: int, first: int, second: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Image of (i, j) obtained by alternately applying eps'_first, eps'_second from (-i, start_j)."""
    n, p = target.n, target.p
    images = {}
    for i in range(n):
        v = ((-i) % n, start_j % (2 * p))
        for j in range(2 * p):
            images[(i, j)] = v
            v = epsilon(first if j % 2 == 0 else second, v, target)
    return images


def _check_distinct_second_coords(target: LMParams) -> None:
    g = build(target)
    comps = residues(g, (0, 3))
    if len(comps) != target.n:
        return
    for comp in comps:
        js = [coords(v, target)[1] for v in comp]
        assert len(set(js)) == len(js), f"{{0,3}}-residue with repeated second coordinate in {target}"


def f2_case(params: LMParams) -> str:
    p, q, m, n = params.p, params.q, params.m, params.n
    if p % 2 == 0:
        return "a"
    if q % 2 == 1 and m == (-1) % n:
        return "b'"
    if q % 2 == 0 and m == 1 % n:
        return "b''"
    raise GraphError(f"no f2 map for {params}: need p even, or p,q odd with m=-1, or p odd, q even with m=1")


def named_map(which: str, params: LMParams) -> tuple[IsoWitness, LMParams]:
    """Witness for one of the maps f1, f2, f3, r, s, together with its target parameters.

    The witness verifies ``build(params) -> build(target)``.
    """
    n, p, q, m = params.astuple()
    if which == "f1":
        target = LMParams(n, p, -q, m)
        return _table_witness(params, lambda i, j: (-i, 1 - j), IDENTITY_PHI), target
    if which == "r":
        return _table_witness(params, lambda i, j: (i + 1, j), IDENTITY_PHI), params
    if which == "s":
        sigma = IDENTITY_PHI if p % 2 == 0 else (0, 2, 1, 3)
        return _table_witness(params, lambda i, j: (-i, p + j), sigma), params
    if which == "f3":
        if gcd(n, m) != 1:
            raise GraphError(f"f3 needs gcd(n, m) = 1, got {params}")
        m_inv = _inv(m, n)
        target = LMParams(n, p, q, m_inv)
        phi = (3, 2, 1, 0) if q % 2 == 1 else (3, 1, 2, 0)
        return _table_witness(params, lambda i, j: (-m_inv * i, 1 + q - j), phi), target
    if which == "f2":
        case = f2_case(params)
        if case == "a":
            target = LMParams(n, p, _inv(q, 2 * p), m)
            images = _iterate_f2(target, 0, 3, 0)
            phi = (1, 0, 3, 2)
        else:
            source = params if case == "b'" else params.twin()
            q_inv = _inv(source.q, 2 * p)
            target = LMParams(n, p, q_inv, -1)
            images = _iterate_f2(target, q_inv + 1, 0, 3)
            phi = (2, 3, 0, 1)
            if case == "b''":
                # the twin tuple names the same graph
                target = target.twin()
        _check_distinct_second_coords(target)
        w = _table_witness(params, lambda i, j: images[(i, j)], phi)
        return w, target
    raise GraphError(f"unknown named map {which!r}")
