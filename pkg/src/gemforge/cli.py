"""Command-line interface.

Exit codes: 0 success, 2 usage or parameter error, 3 brute-force/classifier disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys

from gemforge import __version__, _kernels
from gemforge.arithmetic_classifier import corollary_m_classes, theorem1
from gemforge.colored_graph import COLOUR_PAIRS, GraphError, census, is_gem
from gemforge.coverings import CoveringDesc, geometry, lm_to_covering, theorem2_equivalent, theorem3_equivalent
from gemforge.homology import h1
from gemforge.isomorphism import are_isomorphic
from gemforge.lins_mandel import LMParams, build, coords, is_gem_parametric, predicted_census
from gemforge.survey import summary, survey

EXIT_USAGE = 2
EXIT_DISAGREE = 3


class Output:
    def __init__(self, fmt: str, path: str | None):
        self.fmt = fmt
        self.path = path

    def emit(self, record: dict, text: str) -> None:
        body = json.dumps(record, indent=1) if self.fmt == "json" else text
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(body + "\n")
        else:
            print(body)


def _params(values) -> LMParams:
    return LMParams(*values)


def _pair_key(pair) -> str:
    return f"{pair[0]}{pair[1]}"


def cmd_build(args, out: Output) -> int:
    params = _params(args.params)
    g = build(params)
    rows = g.rows()
    record = {
        "params": list(params.astuple()),
        "vertex_count": g.vertex_count,
        "coords": [list(coords(v, params)) for v in range(g.vertex_count)],
        "involutions": rows,
    }
    lines = [f"G{params}: {g.vertex_count} vertices", "vertex (i,j): e0 e1 e2 e3"]
    for v in range(g.vertex_count):
        lines.append(f"{v:4d} {coords(v, params)}: " + " ".join(str(rows[k][v]) for k in range(4)))
    out.emit(record, "\n".join(lines))
    return 0


def cmd_census(args, out: Output) -> int:
    params = _params(args.params)
    actual = census(build(params))
    predicted = predicted_census(params) if params.coprime_pq else None
    record = {
        "params": list(params.astuple()),
        "census": {_pair_key(k): v for k, v in actual.items()},
        "predicted": {_pair_key(k): v for k, v in predicted.items()} if predicted else None,
        "match": predicted == actual if predicted else None,
    }
    lines = [f"census of G{params}"]
    for pair in COLOUR_PAIRS:
        lengths = actual[pair]
        counts = {L: lengths.count(L) for L in sorted(set(lengths), reverse=True)}
        desc = ", ".join(f"{c} of length {L}" for L, c in counts.items())
        lines.append(f"  {{{pair[0]},{pair[1]}}}: {desc}")
    if predicted is not None:
        lines.append(f"matches closed-form prediction: {str(predicted == actual).lower()}")
    out.emit(record, "\n".join(lines))
    return 0


def cmd_gem_check(args, out: Output) -> int:
    params = _params(args.params)
    par = is_gem_parametric(params)
    direct = is_gem(build(params))
    record = {"params": list(params.astuple()), "parametric": par, "direct": direct}
    out.emit(record, f"gem: {str(par).lower()} (parametric), {str(direct).lower()} (direct)")
    return 0 if par == direct else EXIT_DISAGREE


def _theorem1_or_none(a: LMParams, b: LMParams):
    try:
        return theorem1(a, b)
    except GraphError:
        return None


def cmd_iso(args, out: Output) -> int:
    a, b = _params(args.params[:4]), _params(args.params[4:])
    witness = are_isomorphic(build(a), build(b))
    verdict = _theorem1_or_none(a, b)
    record = {
        "a": list(a.astuple()),
        "b": list(b.astuple()),
        "brute_force": witness is not None,
        "witness": witness.to_json() if witness else None,
        "theorem1": verdict.to_json() if verdict else None,
    }
    lines = [f"G{a} vs G{b}", f"brute force: {'isomorphic' if witness else 'not isomorphic'}"]
    if witness:
        lines.append(f"  phi = {list(witness.phi)}, f(0) = {witness.f[0]}")
    if verdict is None:
        lines.append("classifier: not applicable (needs n, p >= 3 and gcd(p, q) = 1)")
    elif verdict.isomorphic is None:
        lines.append(f"classifier: out of scope ({verdict.matched_condition})")
    else:
        word = "isomorphic" if verdict.isomorphic else "not isomorphic"
        lines.append(f"classifier: {word} [{verdict.rule_applied}: {verdict.matched_condition}]")
    out.emit(record, "\n".join(lines))
    if verdict is not None and verdict.isomorphic is not None and verdict.isomorphic != (witness is not None):
        return EXIT_DISAGREE
    return 0


def cmd_classify(args, out: Output) -> int:
    vals = args.values
    if len(vals) == 3:
        classes = corollary_m_classes(*vals)
        record = {"n": vals[0], "p": vals[1], "q": vals[2], "m_classes": classes}
        out.emit(record, "m-classes: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in classes))
        return 0
    if len(vals) == 8:
        verdict = theorem1(_params(vals[:4]), _params(vals[4:]))
        out.emit(verdict.to_json(), f"{verdict.isomorphic} [{verdict.rule_applied}: {verdict.matched_condition}]")
        return 0
    raise GraphError("classify takes n p q (m-classes) or two parameter tuples (8 integers)")


def cmd_homology(args, out: Output) -> int:
    params = _params(args.params)
    group = h1(build(params))
    out.emit({"params": list(params.astuple()), "h1": group.to_json()}, f"H1(S{params}) = {group}")
    return 0


def cmd_covering(args, out: Output) -> int:
    params = _params(args.params)
    record: dict = {"params": list(params.astuple()), "geometry": geometry(params)}
    lines = [f"S{params}", f"geometry: {record['geometry']}"]
    try:
        cov = lm_to_covering(params)
    except GraphError as exc:
        record["covering"] = None
        lines.append(f"covering: none ({exc})")
    else:
        record["normalized"] = list(cov.normalized.astuple())
        record["covering"] = cov.covering.to_json()
        if cov.normalized != params:
            lines.append(f"normalized to S{cov.normalized}")
        lines.append(f"covering: {cov.covering}")
        if isinstance(cov.covering, CoveringDesc):
            lines.append(f"type: {cov.covering.covering_type}")
    if args.m2 is not None:
        n, p, q, m = params.astuple()
        same = theorem3_equivalent(n, p, q, m, args.m2)
        link_cov = lm_to_covering(params).covering
        via_links = theorem2_equivalent(n, link_cov.link, -m, -args.m2)
        record["compare"] = {"m2": args.m2 % n, "theorem3": same, "theorem2": via_links}
        lines.append(f"S{params} ~ S{LMParams(n, p, q, args.m2)}: {str(same).lower()} (links: {str(via_links).lower()})")
    out.emit(record, "\n".join(lines))
    return 0


def cmd_survey(args, out: Output) -> int:
    n_max = args.max_n if args.max_n is not None else args.n_max
    p_max = args.max_p if args.max_p is not None else args.p_max
    if n_max is None or p_max is None:
        raise GraphError("survey needs bounds: survey N P or --max-n N --max-p P")
    report = survey(n_max, p_max, jobs=args.jobs)
    out.emit(report, summary(report))
    return EXIT_DISAGREE if report["discrepancies"] else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="gemforge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({_kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def tuple_cmd(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("params", type=int, nargs=4, metavar="INT", help="n p q m")
        sp.set_defaults(func=func)
        return sp

    tuple_cmd("build", cmd_build, "involution table of G(n,p,q,m)")
    tuple_cmd("census", cmd_census, "bicoloured cycle census")
    tuple_cmd("gem-check", cmd_gem_check, "parametric and direct gem checks")
    tuple_cmd("homology", cmd_homology, "first homology of S(n,p,q,m)")
    sp = tuple_cmd("covering", cmd_covering, "branched covering description and geometry")
    sp.add_argument("--m2", type=int, help="compare with S(n,p,q,m2) by the homeomorphism criteria")

    sp = sub.add_parser("iso", parents=[common], help="decide isomorphism of two graphs")
    sp.add_argument("params", type=int, nargs=8, metavar="INT")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("classify", parents=[common], help="arithmetic verdict (8 ints) or m-classes (n p q)")
    sp.add_argument("values", type=int, nargs="+")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("survey", parents=[common], help="exhaustive cross-validation over n, p in [3, max]")
    sp.add_argument("n_max", type=int, nargs="?")
    sp.add_argument("p_max", type=int, nargs="?")
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--max-p", type=int)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes over (n, p) cells")
    sp.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, args.out)
    try:
        return args.func(args, out)
    except GraphError as exc:
        print(f"gemforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
