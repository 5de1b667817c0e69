"""Exhaustive cross-validation over a box of (n, p) values.

Per tuple the two gem checks, the census prediction and H1 are compared; per
pair inside each (n, p) cell the brute-force isomorphism search is compared
with the arithmetic classifier.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import gcd

from gemforge.arithmetic_classifier import in_scope, theorem1
from gemforge.colored_graph import GraphError, census, is_gem
from gemforge.coverings import conjectured_classes
from gemforge.homology import h1
from gemforge.isomorphism import are_isomorphic
from gemforge.lins_mandel import LMParams, build, is_gem_parametric, predicted_census

DEFAULT_CEILING = 8
MIN_PARAM = 3


def ceiling() -> int:
    return int(os.environ.get("GEMFORGE_CEILING", DEFAULT_CEILING))


def prior_claim(a: LMParams, b: LMParams) -> bool | None:
    """Earlier published criterion for gcd(n, m) = 1: q' = +-q^(+-1) mod p and m' = +-m^(+-1).

    Known to fail for p even; kept to flag where it disagrees with brute force.
    """
    if gcd(a.n, a.m) != 1 or (a.n, a.p) != (b.n, b.p):
        return None
    n, p = a.n, a.p
    q_inv = pow(a.q % p, -1, p)
    qs = {x % p for x in (a.q, -a.q, q_inv, -q_inv)}
    m_inv = pow(a.m, -1, n)
    ms = {x % n for x in (a.m, -a.m, m_inv, -m_inv)}
    return b.q % p in qs and b.m in ms


def _tuple_record(params: LMParams, graph, h1_cache: dict) -> dict:
    gem_direct = is_gem(graph)
    match = None
    if params.coprime_pq:
        match = predicted_census(params) == census(graph)
    group = None
    if gem_direct:
        group = h1(graph)
        h1_cache[params] = group
    return {
        "params": list(params.astuple()),
        "coprime": params.coprime_pq,
        "gem_parametric": is_gem_parametric(params),
        "gem_direct": gem_direct,
        "census_match": match,
        "h1": group.to_json() if group is not None else None,
    }


def survey_cell(n: int, p: int) -> dict:
    """Records for one (n, p) cell; cells are independent."""
    params = [LMParams(n, p, q, m) for q in range(2 * p) for m in range(n)]
    graphs = {x: build(x) for x in params}
    h1_cache: dict = {}
    tuples = [_tuple_record(x, graphs[x], h1_cache) for x in params]

    pairs = []
    scoped = [x for x in params if x.coprime_pq and in_scope(x)]
    for a, b in combinations(scoped, 2):
        verdict = theorem1(a, b)
        witness = are_isomorphic(graphs[a], graphs[b])
        brute = witness is not None
        claim = prior_claim(a, b)
        pairs.append({
            "a": list(a.astuple()),
            "b": list(b.astuple()),
            "brute_force": brute,
            "theorem1": verdict.isomorphic,
            "rule": verdict.rule_applied,
            "condition": verdict.matched_condition,
            "agree": verdict.isomorphic == brute,
            "witness": witness.to_json() if witness is not None else None,
            "prior_claim": claim,
            "prior_claim_mismatch": claim is not None and claim != brute,
        })

    hits = []
    if p % 2 == 0:
        for q in range(2 * p):
            try:
                classes = conjectured_classes(n, p, q)
            except GraphError:
                continue
            for cls in classes:
                groups = {m: h1_cache[LMParams(n, p, q, m)] for m in cls}
                if len(set(groups.values())) > 1:
                    hits.append({
                        "n": n, "p": p, "q": q, "class": cls,
                        "h1": {str(m): g.to_json() for m, g in groups.items()},
                    })
    return {"tuples": tuples, "pairs": pairs, "conjecture_hits": hits}


def survey(n_max: int, p_max: int, jobs: int = 1) -> dict:
    limit = ceiling()
    if n_max > limit or p_max > limit:
        raise GraphError(f"survey range exceeds the ceiling {limit} (set GEMFORGE_CEILING to raise it)")
    cells = [(n, p) for n in range(MIN_PARAM, n_max + 1) for p in range(MIN_PARAM, p_max + 1)]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(survey_cell, *zip(*cells)))
    else:
        results = [survey_cell(n, p) for n, p in cells]
    report = {
        "range": {"n": [MIN_PARAM, n_max], "p": [MIN_PARAM, p_max]},
        "tuples": [],
        "pairs": [],
        "discrepancies": [],
        "conjecture_hits": [],
    }
    for res in results:
        report["tuples"].extend(res["tuples"])
        report["pairs"].extend(res["pairs"])
        report["conjecture_hits"].extend(res["conjecture_hits"])
    report["discrepancies"] = [
        {"a": r["a"], "b": r["b"], "brute_force": r["brute_force"], "theorem1": r["theorem1"]}
        for r in report["pairs"] if not r["agree"]
    ]
    return report


def summary(report: dict) -> str:
    tuples, pairs = report["tuples"], report["pairs"]
    lines = [
        f"range: n in {report['range']['n']}, p in {report['range']['p']}",
        f"tuples: {len(tuples)}",
        f"  gem checks disagree: {sum(t['gem_parametric'] != t['gem_direct'] for t in tuples)}",
        f"  census mismatches: {sum(t['census_match'] is False for t in tuples)}",
        f"  gems with H1 computed: {sum(t['h1'] is not None for t in tuples)}",
        f"pairs: {len(pairs)} ({sum(r['brute_force'] for r in pairs)} isomorphic)",
        f"  discrepancies (brute force vs classifier): {len(report['discrepancies'])}",
    ]
    mism = [r for r in pairs if r["prior_claim_mismatch"]]
    lines.append(f"  prior literature mismatches: {len(mism)}")
    for r in mism[:10]:
        lines.append(f"    G{tuple(r['a'])} vs G{tuple(r['b'])}: prior claim {r['prior_claim']}, brute force {r['brute_force']}")
    if len(mism) > 10:
        lines.append(f"    ... {len(mism) - 10} more")
    lines.append(f"conjecture evidence: {len(report['conjecture_hits'])} H1 disagreements inside conjectured classes")
    return "\n".join(lines)
