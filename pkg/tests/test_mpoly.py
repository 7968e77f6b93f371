import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stci.errors import HomVarOccurs, PolyParseError, RuleConflict, VarCountMismatch
from stci.mpoly import (
    RewriteRule,
    SparsePoly,
    dehomogenize,
    divide_by_var_power,
    embed,
    gamma_ell,
    homogenize,
    parse_poly,
    reduce,
    substitute_monomials,
    to_text,
)

NV = 4


@st.composite
def polys(draw, nvars=NV, max_terms=5, max_exp=4):
    terms = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, max_exp)] * nvars), st.integers(-9, 9)),
        max_size=max_terms))
    return SparsePoly(nvars, terms)


def test_text_format():
    p = parse_poly("x3^25 - 6*x0^2*x1*x2^2*x3^19*x4", 5)
    assert to_text(p) == "-6*x0^2*x1*x2^2*x3^19*x4 + x3^25"
    assert to_text(SparsePoly.zero(3)) == "0"
    assert parse_poly("x1**2 − x0*x2") == parse_poly("x1^2-x0*x2")
    assert to_text(parse_poly("-x0 + 3", 2)) == "-x0 + 3"


@pytest.mark.parametrize("bad", ["x1^", "2**", "x1 +", "y2", "x1^-2", "", "(x1)"])
def test_parse_errors(bad):
    with pytest.raises(PolyParseError):
        parse_poly(bad)


@settings(max_examples=100, deadline=None)
@given(polys())
def test_round_trip(p):
    assert parse_poly(to_text(p), NV) == p
    assert to_text(parse_poly(to_text(p), NV)) == to_text(p)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == 0
    assert a**3 == a * a * a


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_evaluate_is_homomorphism(a, b):
    pt = (2, -1, 3, 1)
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt, 7) == (a.evaluate(pt) + b.evaluate(pt)) % 7


def test_gamma_ell_and_embed():
    p = parse_poly("x1*x2 - x0^2*x3", 4)
    assert gamma_ell(p, 3) == parse_poly("x1*x2 - x0^2*x3^3", 4)
    assert embed(p, 5).nvars == 5
    with pytest.raises(VarCountMismatch):
        embed(p, 3)


def test_homogenize_round_trip():
    p = parse_poly("x2^3 - x1 + 4", 3)
    h = homogenize(p, 0)
    assert h.is_homogeneous()
    assert h == parse_poly("x2^3 - x0^2*x1 + 4*x0^3", 3)
    assert dehomogenize(h, 0) == p
    with pytest.raises(HomVarOccurs):
        homogenize(h, 0)


def test_divide_by_var_power():
    p = parse_poly("x0^3*x1 + x0^2", 2)
    assert divide_by_var_power(p, 0, 2) == parse_poly("x0*x1 + 1", 2)
    with pytest.raises(ValueError):
        divide_by_var_power(p, 0, 3)


def test_substitute_monomials():
    # twisted cubic generic zero
    images = [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert not substitute_monomials(parse_poly("x1^2 - x0*x2", 4), images)
    assert substitute_monomials(parse_poly("x1^2 - x0*x3", 4), images) == parse_poly("x0^4*x1^2 - x0^3*x1^3", 2)


def test_rule_validation():
    RewriteRule.binomial(1, 2, 1, 3, 4)
    with pytest.raises(ValueError):
        RewriteRule(1, 2, (0, 1, 1, 0))  # replacement contains x1
    with pytest.raises(ValueError):
        RewriteRule(1, 2, (0, 0, 0, 3))  # degree mismatch
    with pytest.raises(ValueError):
        RewriteRule(1, 2, (2, 0, 0, 0))  # b = 0


def test_reduce_conflicts():
    p = parse_poly("x1^3", 4)
    r = RewriteRule.binomial(1, 2, 1, 3, 4)
    with pytest.raises(RuleConflict):
        reduce(p, [r, RewriteRule.binomial(1, 3, 1, 2, 4)])
    with pytest.raises(VarCountMismatch):
        reduce(parse_poly("x1^3", 3), [r])
    assert reduce(p, [r]) == parse_poly("x0*x1*x3", 4)


def _single_step_normal_form(p, rules, rng):
    """Apply one rule at a time, to a random reducible term, until nothing applies."""
    terms = dict(p.items())
    while True:
        hits = [(e, r) for e in terms for r in rules if e[r.var_index] >= r.threshold]
        if not hits:
            return SparsePoly(p.nvars, terms)
        e, r = rng.choice(hits)
        c = terms.pop(e)
        new = list(e)
        new[r.var_index] -= r.threshold
        new = tuple(x + y for x, y in zip(new, r.replacement))
        terms[new] = terms.get(new, 0) + c
        terms = {k: v for k, v in terms.items() if v}


SHAPES = [
    [RewriteRule.binomial(1, 2, 1, 3, 5), RewriteRule.binomial(2, 3, 2, 3, 5)],  # (3,4,6) x_n form
    [RewriteRule.binomial(1, 2, 1, 2, 5), RewriteRule.binomial(2, 2, 1, 3, 5)],  # (1,2,4) chain
]


@settings(max_examples=80, deadline=None)
@given(polys(nvars=5, max_terms=6, max_exp=7), st.sampled_from(SHAPES), st.integers(0, 10**6))
def test_reduce_confluent(p, rules, seed):
    nf = reduce(p, rules)
    assert _single_step_normal_form(p, rules, random.Random(seed)) == nf
    for e, _ in nf.items():
        assert all(e[r.var_index] < r.threshold for r in rules)
    # reduction is modulo the rule binomials: the difference vanishes on any common zero
    assert reduce(nf, rules) == nf
