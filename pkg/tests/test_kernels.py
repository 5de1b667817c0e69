import numpy as np
import pytest

from gemforge import _kernels, _pykernels
from gemforge.colored_graph import COLOUR_PAIRS, COLOUR_TRIPLES
from gemforge.isomorphism import PERMUTATIONS
from gemforge.lins_mandel import LMParams, build

ck = pytest.importorskip("gemforge._ckernels")

GRAPHS = [(3, 4, 1, 1), (3, 4, 1, 2), (5, 8, 3, 2), (5, 8, 3, 3), (3, 5, 2, 1), (4, 6, 2, 1)]


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("t", GRAPHS)
def test_component_labels_agree(t):
    table = build(LMParams(*t)).involutions
    for colours in COLOUR_PAIRS + COLOUR_TRIPLES:
        c = np.asarray(colours, dtype=np.int64)
        a = ck.component_labels(table, c)
        b = _pykernels.component_labels(table, c)
        assert list(a[0]) == list(b[0]) and a[1] == b[1]


@pytest.mark.parametrize("pair", [((3, 4, 1, 1), (3, 4, 1, 2)), ((5, 8, 3, 2), (5, 8, 3, 3)), ((5, 8, 3, 2), (5, 8, 3, 2))])
def test_search_and_propagate_agree(pair):
    ta, tb = (build(LMParams(*t)).involutions for t in pair)
    phis = np.asarray(PERMUTATIONS, dtype=np.int64)
    a = ck.search(ta, tb, phis, 0)
    b = _pykernels.search(ta, tb, phis, 0)
    if a is None:
        assert b is None
    else:
        assert a[0] == b[0] and a[1] == b[1] and list(a[2]) == list(b[2])
    for phi in PERMUTATIONS[:6]:
        ph = np.asarray(phi, dtype=np.int64)
        for target in range(0, ta.shape[1], 7):
            x = ck.propagate(ta, tb, ph, 0, target)
            y = _pykernels.propagate(ta, tb, ph, 0, target)
            assert (x is None and y is None) or list(x) == list(y)
