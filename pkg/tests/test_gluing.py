from itertools import combinations_with_replacement
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stci.curves import make_extension, parameterize
from stci.errors import InvalidGenerators, NotBadExtension
from stci.gluing import (
    Reason,
    SemigroupSplit,
    bad_extension_gluing,
    check_all_splits,
    check_split,
    find_witness,
    witness_ok,
)
from stci.oracle import vanishes_on


def points(exps):
    top = max(exps)
    return [(top, 0)] + [(top - e, e) for e in exps]


def lattice_index_multiple(t, gens):
    """Smallest k >= 1 with k*t in the integer span of gens (rank two, in Z^2)."""
    # Hermite basis {(a, b), (0, c)} by Euclid on the first coordinate
    first, c = None, 0
    for v in gens:
        if first is None:
            first = list(v)
            continue
        x, y = first, list(v)
        while y[0]:
            q = x[0] // y[0]
            x, y = y, [x[0] - q * y[0], x[1] - q * y[1]]
        first, c = x, gcd(c, y[1])
    a, b = first
    if a < 0:
        a, b = -a, -b
    for k in range(1, 10**4):
        x, y = k * t[0], k * t[1]
        if x % a:
            continue
        r = y - (x // a) * b
        if (c == 0 and r == 0) or (c and r % c == 0):
            return k
    raise AssertionError("no multiple found")


def brute_glues(exps, i0):
    pts = points(exps)
    t = pts[i0]
    others = [p for j, p in enumerate(pts) if j != i0]
    k = lattice_index_multiple(t, others)
    target = (k * t[0], k * t[1])
    for combo in combinations_with_replacement(range(len(others)), k):
        if (sum(others[j][0] for j in combo), sum(others[j][1] for j in combo)) == target:
            return True, k
    return False, k


@st.composite
def curves(draw):
    k = draw(st.integers(3, 4))
    exps = sorted(draw(st.sets(st.integers(1, 14), min_size=k, max_size=k)))
    if gcd(*exps) != 1:
        exps = sorted({1, *exps[1:]})
    return tuple(exps)


def test_reference_curves():
    rep = check_all_splits((2, 3, 4, 8))
    assert rep.glues and rep.first_gluing.i0 == 2
    assert rep.first_gluing.witness == (1, 1, 0)
    assert witness_ok((2, 3, 4, 8), 2, rep.first_gluing.delta, rep.first_gluing.witness)
    rep = check_all_splits((2, 4, 7, 8))
    assert not rep.glues
    assert [d.reason for d in rep.decisions] == [
        Reason.ENDPOINT_TRIVIAL_INTERSECTION, Reason.DELTA_ONE, Reason.DELTA_ONE,
        Reason.CONDITION_II_FAILS, Reason.ENDPOINT_TRIVIAL_INTERSECTION, Reason.NON_SINGLETON_RANK_TWO]


def test_ex45_never_glues():
    for s in range(1, 12):
        assert not check_all_splits((3, 4, 6, 6 * s + 7)).glues


def test_duplicate_exponent_can_glue_with_delta_one():
    rep = check_all_splits((1, 2, 4, 4))
    d = rep.decisions[3]
    assert d.glues and d.delta == 1


@settings(max_examples=120, deadline=None)
@given(curves())
def test_matches_lattice_definition(exps):
    for i0 in range(len(exps) + 1):
        d = check_split(SemigroupSplit(exps, (i0,)))
        ok, k = brute_glues(exps, i0)
        assert d.glues == ok, (exps, i0)
        if d.glues:
            assert d.delta == k
            assert witness_ok(exps, i0, d.delta, d.witness)


def test_find_witness_lexicographic():
    # 2*3 = 6 from coins (2, 4, 8), at most 2 coins: (1, 1, 0) beats (3, 0, 0)
    assert find_witness((2, 4, 8), 6, 2) == ((1, 1, 0), 2)
    assert find_witness((2, 4, 8), 7, 5) == (None, None)
    assert find_witness((4, 8), 12, 1) == (None, 2)


def test_split_validation():
    with pytest.raises(InvalidGenerators):
        check_all_splits((1, 2))
    with pytest.raises(InvalidGenerators):
        SemigroupSplit((2, 4, 6), (1,))
    with pytest.raises(ValueError):
        SemigroupSplit((2, 3, 4), ())
    assert SemigroupSplit((2, 3, 4), (1, 2, 3)).t1 == (0,)


def test_bad_extension():
    spec = make_extension((1, 2, 4), 3, 4)
    g = bad_extension_gluing(spec)
    assert g.decision.glues and g.decision.delta == 3
    assert vanishes_on(g.F, parameterize(spec))
    with pytest.raises(NotBadExtension):
        bad_extension_gluing(make_extension((3, 4, 6), 1, 25))
