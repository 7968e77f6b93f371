import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stci import _fallback, _kernels
from conftest import available_backends


def test_backend_selected():
    assert _kernels.BACKEND in ("cython", "python")


def test_min_coin_small(backend):
    t = np.asarray(backend.min_coin_tables([3, 4, 6], 12))
    assert t[0].tolist()[:7] == [0, _kernels.INF, _kernels.INF, 1, _kernels.INF, _kernels.INF, 2]
    assert t[2, 12] == 2 and t[1, 5] >= _kernels.INF


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=5, unique=True), st.integers(0, 400))
def test_min_coin_backends_agree(coins, limit):
    results = [np.asarray(mod.min_coin_tables(coins, limit)) for _, mod in available_backends()]
    for r in results[1:]:
        assert np.array_equal(results[0], r)


def _pack(polys):
    coeffs, exps, offsets = [], [], [0]
    for terms in polys:
        for e, c in terms:
            coeffs.append(c)
            exps.append(e)
        offsets.append(len(coeffs))
    return coeffs, np.asarray(exps, dtype=np.int64).reshape(-1, 4), offsets


@pytest.mark.parametrize("q", [3, 5, 7])
def test_common_zeros_backends_agree(q):
    polys = [[((0, 2, 0, 0), 1), ((1, 0, 1, 0), q - 1)], [((0, 0, 2, 0), 1), ((1, 0, 0, 1), q - 1)]]
    coeffs, exps, offsets = _pack(polys)
    results = [np.asarray(mod.common_zeros(q, 4, coeffs, exps, offsets)) for _, mod in available_backends()]
    for r in results[1:]:
        assert np.array_equal(results[0], r)
    assert len(results[0]) == q + 1


def test_no_equations_gives_all_points():
    out = np.asarray(_fallback.common_zeros(3, 3, [], np.zeros((0, 3), dtype=np.int64), [0]))
    assert len(out) == 1 + 3 + 9
