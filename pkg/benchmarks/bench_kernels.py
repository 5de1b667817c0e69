"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit
from itertools import combinations

import numpy as np

from gemforge import _pykernels
from gemforge.colored_graph import COLOUR_PAIRS
from gemforge.isomorphism import PERMUTATIONS
from gemforge.lins_mandel import LMParams, build

try:
    from gemforge import _ckernels
except ImportError:
    _ckernels = None

PHIS = np.asarray(PERMUTATIONS, dtype=np.int64)


def residue_workload(kernels, tables):
    for t in tables:
        for pair in COLOUR_PAIRS:
            kernels.component_labels(t, np.asarray(pair, dtype=np.int64))


def search_workload(kernels, tables):
    for a, b in combinations(tables, 2):
        kernels.search(a, b, PHIS, 0)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    # one (n, p) cell: every non-isomorphic pair forces a full 24 x |V| search
    tables = [build(LMParams(6, 6, q, m)).involutions for q in (1, 5, 7, 11) for m in range(1, 6)]
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{len(tables)} graphs with {tables[0].shape[1]} vertices")
    for name, workload in (("residues", residue_workload), ("search", search_workload)):
        times = {}
        for label, mod in backends:
            times[label] = min(timeit.repeat(lambda: workload(mod, tables), number=1, repeat=args.repeat))
            print(f"{name:9s} {label:7s} {times[label] * 1000:9.1f} ms")
        if len(times) == 2:
            print(f"{name:9s} speedup {times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
