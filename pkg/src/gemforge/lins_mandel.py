"""Lins-Mandel graphs G(n, p, q, m).

Vertices are pairs ``(i, j)`` with ``i`` mod ``n`` and ``j`` mod ``2p``, stored
at dense index ``i * 2p + j`` so each {1,2}-cycle occupies a contiguous block.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from gemforge.colored_graph import COLOUR_PAIRS, ColouredGraph, GraphError


@dataclass(frozen=True, order=True)
class LMParams:
    n: int
    p: int
    q: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1:
            raise GraphError(f"n and p must be positive, got n={self.n}, p={self.p}")
        object.__setattr__(self, "q", self.q % (2 * self.p))
        object.__setattr__(self, "m", self.m % self.n)

    @property
    def coprime_pq(self) -> bool:
        return gcd(self.p, self.q) == 1

    @property
    def sign_q(self) -> int:
        """(-1)^q as a residue mod n; parity is well defined since 2p is even."""
        return 1 % self.n if self.q % 2 == 0 else (-1) % self.n

    def reduced(self) -> "LMParams":
        """(n, p/k, q/k, m) with k = gcd(p, q); encodes a homeomorphic space."""
        k = gcd(self.p, self.q)
        return LMParams(self.n, self.p // k, self.q // k, self.m)

    def twin(self) -> "LMParams":
        """The other parameter tuple naming the very same graph: (n, p, q+p, -m)."""
        return LMParams(self.n, self.p, self.q + self.p, -self.m)

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.p, self.q, self.m)

    def __str__(self):
        return f"({self.n},{self.p},{self.q},{self.m})"


def mu(j: int, p: int) -> int:
    j %= 2 * p
    return 1 if 1 <= j <= p else -1


def epsilon(k: int, v: tuple[int, int], params: LMParams) -> tuple[int, int]:
    n, p, q, m = params.astuple()
    i, j = v
    if k == 0:
        i2, j2 = i + m * mu(j - q, p), 1 - j + 2 * q
    elif k == 1:
        i2, j2 = i, j - (-1) ** (j % 2)
    elif k == 2:
        i2, j2 = i, j + (-1) ** (j % 2)
    elif k == 3:
        i2, j2 = i + mu(j, p), 1 - j
    else:
        raise GraphError(f"unknown colour {k}")
    return i2 % n, j2 % (2 * p)


def index(i: int, j: int, params: LMParams) -> int:
    return (i % params.n) * 2 * params.p + (j % (2 * params.p))


def coords(v: int, params: LMParams) -> tuple[int, int]:
    return divmod(v, 2 * params.p)


def build(params: LMParams) -> ColouredGraph:
    n, p = params.n, params.p
    size = 2 * p * n
    table = np.empty((4, size), dtype=np.int64)
    for i in range(n):
        for j in range(2 * p):
            v = i * 2 * p + j
            for k in range(4):
                table[k, v] = index(*epsilon(k, (i, j), params), params)
    return ColouredGraph(table)


def graphs_equal(a: LMParams, b: LMParams) -> bool:
    """Equality of labelled graphs (identical involution tables), not isomorphism."""
    if (a.n, a.p) != (b.n, b.p):
        return False
    return build(a) == build(b)


def predicted_census(params: LMParams) -> dict[tuple[int, int], list[int]]:
    """Bicoloured-cycle lengths per colour pair from the closed-form residue lists."""
    if not params.coprime_pq:
        raise GraphError(f"predicted census needs gcd(p, q) = 1, got {params}")
    n, p, q, m = params.astuple()
    d = gcd(n, m)
    if p % 2 == 0:
        short = [4] * (n * (p - 2) // 2)
        out = {
            (1, 2): [2 * p] * n,
            (0, 3): [2 * p] * n,
            (2, 3): [2 * n] * 2 + short,
            (0, 1): [2 * n // d] * (2 * d) + short,
            (1, 3): [4] * (n * p // 2),
            (0, 2): [4] * (n * p // 2),
        }
    else:
        e = gcd(n, (m - params.sign_q) % n)
        short = [4] * (n * (p - 1) // 2)
        out = {
            (1, 2): [2 * p] * n,
            (0, 3): [2 * p * n // e] * e,
            (2, 3): [2 * n] + short,
            (0, 1): [2 * n // d] * d + short,
            (1, 3): [2 * n] + short,
            (0, 2): [2 * n // d] * d + short,
        }
    return {pair: sorted(out[pair]) for pair in COLOUR_PAIRS}


def is_gem_parametric(params: LMParams) -> bool:
    """Manifold condition: p even, or p odd with m in {0, (-1)^q}.

    The condition is stated for gcd(p, q) = 1, so other tuples are first
    reduced to (n, p/k, q/k, m).
    """
    params = params.reduced()
    if params.p % 2 == 0:
        return True
    return params.m in (0, params.sign_q)


def all_params(n_max: int, p_max: int, n_min: int = 1, p_min: int = 1):
    """Every tuple with n_min <= n <= n_max, p_min <= p <= p_max, q in Z_2p, m in Z_n."""
    for n in range(n_min, n_max + 1):
        for p in range(p_min, p_max + 1):
            for q in range(2 * p):
                for m in range(n):
                    yield LMParams(n, p, q, m)
