"""Number-theoretic isomorphism criteria for Lins-Mandel graphs with n, p >= 3.

q-conditions are equalities in Z_2p when p is even and congruences mod p when
p is odd; m-conditions live in Z_n.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from gemforge.colored_graph import GraphError
from gemforge.lins_mandel import LMParams

A_PRIME = "A-prime"
A_DOUBLE_PRIME = "A-double-prime"
B = "B"
EQUAL = "equal-by-lemma1"
OUT_OF_SCOPE = "out-of-scope"


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool | None
    rule_applied: str
    matched_condition: str

    def __post_init__(self):
        if (self.rule_applied == OUT_OF_SCOPE) != (self.isomorphic is None):
            raise ValueError("out-of-scope verdicts, and only those, carry no answer")

    def to_json(self) -> dict:
        return {"isomorphic": self.isomorphic, "rule": self.rule_applied, "condition": self.matched_condition}


def rigidity(census_a, census_b, n: int, p: int, n2: int, p2: int) -> bool:
    """Whether two graphs with these parameters can be isomorphic as far as (n, p) goes.

    For n, p >= 3 exactly n bicoloured cycles of length 2p pin down (n, p).
    """
    if min(n, p, n2, p2) < 3:
        raise GraphError("rigidity only holds for n, p >= 3 (small cases degenerate to lens spaces)")
    if (n, p) != (n2, p2):
        return False
    return census_a[(1, 2)] == [2 * p] * n and census_b[(1, 2)] == [2 * p] * n


def _check(params: LMParams) -> None:
    if params.n < 3 or params.p < 3:
        raise GraphError(f"classifier needs n, p >= 3, got {params}")
    if not params.coprime_pq:
        raise GraphError(f"classifier needs gcd(p, q) = 1, got {params}")
    if params.p % 2 == 0:
        # p even with gcd(p, q) = 1 forces q odd, so q is a unit mod 2p
        assert gcd(params.q, 2 * params.p) == 1


def in_scope(params: LMParams) -> bool:
    return params.p % 2 == 0 or params.m == params.sign_q


def _q_forms(q: int, mod: int) -> dict[int, str]:
    """The residues +-q^(+-1) mod ``mod``, each with a readable label."""
    inv = pow(q, -1, mod)
    out: dict[int, str] = {}
    for value, label in ((q, "q"), (inv, "q^-1"), (-q, "-q"), (-inv, "-q^-1")):
        out.setdefault(value % mod, label)
    return out


def _m_forms(m: int, n: int, with_inverse: bool) -> dict[int, str]:
    out: dict[int, str] = {m % n: "m"}
    if with_inverse:
        out.setdefault(pow(m, -1, n) if n > 1 else 0, "m^-1")
    return out


def theorem1(a: LMParams, b: LMParams) -> IsoVerdict:
    _check(a)
    _check(b)
    if not in_scope(a) or not in_scope(b):
        return IsoVerdict(None, OUT_OF_SCOPE, "p odd needs m = (-1)^q on both sides")
    rule = (A_DOUBLE_PRIME if gcd(a.n, a.m) == 1 else A_PRIME) if a.p % 2 == 0 else B
    if (a.n, a.p) != (b.n, b.p):
        return IsoVerdict(False, rule, "n'!=n or p'!=p")
    if b == a:
        return IsoVerdict(True, EQUAL, "identical parameters")
    if b == a.twin():
        return IsoVerdict(True, EQUAL, "q'=q+p, m'=-m")

    n, p = a.n, a.p
    if rule == B:
        forms = _q_forms(a.q % p, p)
        label = forms.get(b.q % p)
        if label is None:
            return IsoVerdict(False, B, "q' not = +-q^(+-1) mod p")
        return IsoVerdict(True, B, f"q'={label} mod p")

    q_forms = _q_forms(a.q, 2 * p)
    m_forms = _m_forms(a.m, n, with_inverse=rule == A_DOUBLE_PRIME)
    q_label = q_forms.get(b.q)
    m_label = m_forms.get(b.m)
    if q_label is not None and m_label is not None:
        return IsoVerdict(True, rule, f"q'={q_label}, m'={m_label}")
    q_label = q_forms.get((b.q - p) % (2 * p))
    m_label = m_forms.get((-b.m) % n)
    if q_label is not None and m_label is not None:
        return IsoVerdict(True, rule, f"q'={q_label}+p, m'=-{m_label}")
    return IsoVerdict(False, rule, "no (q', m') branch matches")


def q_squared_special(p: int, q: int) -> bool:
    """q^2 = p +- 1 read in Z_2p (p even, q odd); well defined for q mod p."""
    sq = (q * q) % (2 * p)
    return sq in ((p + 1) % (2 * p), (p - 1) % (2 * p))


def corollary_m_classes(n: int, p: int, q: int) -> list[list[int]]:
    """Partition of the nonzero residues m mod n into isomorphism classes of G(n,p,q,m)."""
    if n < 3 or p < 3:
        raise GraphError("m-classes need n, p >= 3")
    if p % 2:
        raise GraphError("m-classes are only stated for p even")
    if gcd(p, q) != 1:
        raise GraphError("m-classes need gcd(p, q) = 1")
    special = q_squared_special(p, q)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in range(1, n):
        partners = {m}
        if gcd(n, m) == 1:
            partners.add(pow(m, -1, n))
        if special:
            partners |= {(-x) % n for x in partners}
        for x in partners:
            parent[find(x)] = find(m)
    classes: dict[int, list[int]] = {}
    for m in range(1, n):
        classes.setdefault(find(m), []).append(m)
    return sorted(classes.values())
