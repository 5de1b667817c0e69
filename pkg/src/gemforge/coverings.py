"""Branched cyclic coverings of two-bridge links and the Lins-Mandel dictionary."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from gemforge.colored_graph import GraphError
from gemforge.lins_mandel import LMParams, is_gem_parametric

COVERING_LADDER = ("strictly-cyclic", "almost-strictly-cyclic", "meridian-cyclic", "singly-cyclic", "monodromy-cyclic")
GEOMETRIES = ("hyperbolic", "euclidean", "spherical", "nil", "sl2r", "unknown")


@dataclass(frozen=True)
class TwoBridge:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1:
            raise GraphError(f"alpha must be positive, got {self.alpha}")
        beta = self.beta % self.alpha
        if gcd(self.alpha, beta) != 1:
            raise GraphError(f"gcd(alpha, beta) must be 1, got b({self.alpha},{self.beta})")
        object.__setattr__(self, "beta", beta)

    @property
    def is_knot(self) -> bool:
        return self.alpha % 2 == 1

    @property
    def is_toroidal(self) -> bool:
        return self.beta in (1 % self.alpha, (-1) % self.alpha)

    @property
    def is_hyperbolic(self) -> bool:
        return not self.is_toroidal

    @property
    def beta_squared_special(self) -> bool:
        """beta^2 = alpha +- 1, read mod 2*alpha (alpha even, beta odd)."""
        sq = (self.beta * self.beta) % (2 * self.alpha)
        return sq in ((self.alpha + 1) % (2 * self.alpha), (self.alpha - 1) % (2 * self.alpha))

    def __str__(self):
        return f"b({self.alpha},{self.beta})"


@dataclass(frozen=True)
class CoveringDesc:
    """b-fold singly-cyclic covering of a two-component link, first winding normalized to 1."""

    b: int
    link: TwoBridge
    k: int

    def __post_init__(self):
        if self.b < 2:
            raise GraphError(f"fold count must be >= 2, got {self.b}")
        object.__setattr__(self, "k", self.k % self.b)
        if self.k == 0:
            raise GraphError("winding k must be nonzero mod b")

    @property
    def covering_type(self) -> str:
        return covering_type(self.b, [1, self.k])

    def to_json(self) -> dict:
        return {"kind": "link", "b": self.b, "alpha": self.link.alpha, "beta": self.link.beta,
                "k": self.k, "type": self.covering_type}

    def __str__(self):
        return f"M_{{{self.b},{self.k}}}({self.link.alpha},{self.link.beta})"


@dataclass(frozen=True)
class KnotCovering:
    b: int
    link: TwoBridge

    def to_json(self) -> dict:
        return {"kind": "knot", "b": self.b, "alpha": self.link.alpha, "beta": self.link.beta}

    def __str__(self):
        return f"{self.b}-fold cyclic covering of {self.link}"


@dataclass(frozen=True)
class CoveringRecord:
    source: LMParams
    normalized: LMParams
    covering: CoveringDesc | KnotCovering = field(compare=False)


def covering_type(b: int, windings) -> str:
    ks = [k % b for k in windings]
    if not ks or any(k == 0 for k in ks):
        raise GraphError("every winding must be a nonzero residue mod b")
    if reduce(gcd, ks, b) != 1:
        raise GraphError(f"windings {ks} do not generate Z_{b}")
    if all(k == ks[0] for k in ks):
        return "strictly-cyclic"
    if all(k in (ks[0], (-ks[0]) % b) for k in ks):
        return "almost-strictly-cyclic"
    units = [gcd(b, k) == 1 for k in ks]
    if all(units):
        return "meridian-cyclic"
    if any(units):
        return "singly-cyclic"
    return "monodromy-cyclic"


def ladder_rank(label: str) -> int:
    """0 for the strongest label, 4 for the weakest."""
    return COVERING_LADDER.index(label)


def normalize(params: LMParams) -> LMParams:
    """S(n, kp, kq, m) -> S(n, p, q, m) with gcd(p, q) = 1 (homeomorphic spaces)."""
    return params.reduced()


def lm_to_covering(params: LMParams) -> CoveringRecord:
    norm = normalize(params)
    n, p, q, m = norm.astuple()
    if not is_gem_parametric(norm):
        raise GraphError(f"{params} does not encode a manifold")
    if n < 2:
        raise GraphError("branched cyclic coverings need n >= 2")
    link = TwoBridge(p, q)
    if p % 2 == 0:
        if m == 0:
            raise GraphError(f"{params}: p even with m = 0 has no covering assigned (the space is S^3)")
        return CoveringRecord(params, norm, CoveringDesc(n, link, -m))
    if m != norm.sign_q:
        raise GraphError(f"{params}: p odd needs m = (-1)^q for the knot covering description")
    return CoveringRecord(params, norm, KnotCovering(n, link))


def theorem2_equivalent(b: int, link: TwoBridge, k: int, k2: int) -> bool:
    """Homeomorphism of M_{b,k}(alpha, beta) and M_{b,k'}(alpha, beta) for hyperbolic two-component links."""
    if link.alpha % 2:
        raise GraphError(f"{link} is a knot; the criterion covers two-component links")
    if link.is_toroidal:
        raise GraphError(f"{link} is toroidal")
    if b < 2:
        raise GraphError("fold count must be >= 2")
    if gcd(b, k) != 1 or gcd(b, k2) != 1:
        raise GraphError("criterion needs meridian-cyclic coverings: gcd(b, k) = gcd(b, k') = 1")
    k, k2 = k % b, k2 % b
    allowed = {k, pow(k, -1, b)}
    if link.beta_squared_special:
        allowed |= {(-x) % b for x in allowed}
    return k2 in allowed


def theorem3_equivalent(n: int, p: int, q: int, m: int, m2: int) -> bool:
    """Homeomorphism of S(n,p,q,m) and S(n,p,q,m') when gcd(n, m) = gcd(n, m') = 1."""
    if n < 3 or p < 3:
        raise GraphError("criterion needs n, p >= 3")
    if p % 2:
        raise GraphError("criterion needs p even")
    if gcd(p, q) != 1:
        raise GraphError("criterion needs gcd(p, q) = 1")
    if q % p in (1, p - 1):
        raise GraphError("criterion needs q != +-1 mod p")
    if gcd(n, m) != 1 or gcd(n, m2) != 1:
        raise GraphError("criterion needs gcd(n, m) = gcd(n, m') = 1")
    m, m2 = m % n, m2 % n
    allowed = {m, pow(m, -1, n)}
    if TwoBridge(p, q).beta_squared_special:
        allowed |= {(-x) % n for x in allowed}
    return m2 in allowed


def conjectured_classes(n: int, p: int, q: int) -> list[list[int]]:
    """Conjectured homeomorphism classes among m with gcd(n, m) != 1 (m != 0)."""
    if n < 3 or p < 3 or p % 2 or gcd(p, q) != 1 or q % p in (1, p - 1):
        raise GraphError("conjecture needs n, p >= 3, p even, gcd(p, q) = 1 and q != +-1 mod p")
    special = TwoBridge(p, q).beta_squared_special
    ms = [m for m in range(1, n) if gcd(n, m) != 1]
    classes: dict[int, list[int]] = {}
    for m in ms:
        key = min(m, (-m) % n) if special else m
        classes.setdefault(key, []).append(m)
    return sorted(classes.values())


def _geometry_direct(params: LMParams) -> str:
    n, p, q, m = params.astuple()
    if m == 0 or (p == 1 and m == (-1) % n):
        return "spherical"  # S^3
    if n == 2 and m == 1:
        return "spherical"  # lens space L(p, q)
    if p == 2 and n >= 1 and gcd(n, m) == 1 and q == 1:
        return "spherical"  # S(p', 2, 1, q') is a lens space
    q_mod = q % p
    plus_minus_one = q_mod in (1 % p, (-1) % p)
    if gcd(n, m) == 1 and not plus_minus_one:
        if (n, p) == (3, 5):
            return "euclidean" if (q, m) in ((2, 1), (3, 2)) else "unknown"
        if (p == 5 and n >= 4) or (p != 5 and n >= 3):
            return "hyperbolic"
        return "unknown"
    if plus_minus_one and m == params.sign_q:
        total = Fraction(1, n) + Fraction(1, p)
        if total > Fraction(1, 2):
            return "spherical"
        if total == Fraction(1, 2):
            return "nil"
        return "sl2r"
    return "unknown"


def geometry(params: LMParams) -> str:
    """Geometry label where the classification applies, ``unknown`` otherwise.

    Works on the coprime normalization and also tries the equal-graph tuple
    (n, p, q+p, -m), since both name the same graph.
    """
    norm = normalize(params)
    if not is_gem_parametric(norm):
        raise GraphError(f"{params} does not encode a manifold")
    label = _geometry_direct(norm)
    if label == "unknown":
        label = _geometry_direct(norm.twin())
    return label
