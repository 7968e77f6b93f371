"""Monomial curves, their extensions, and the equation builders (G, F, F*)."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb, gcd, prod
from typing import Sequence

from .errors import ConditionFails, DoesNotVanish, NotCoprime, ShapeMismatch, VarCountMismatch
from .mpoly import (
    RewriteRule,
    SparsePoly,
    divide_by_var_power,
    embed,
    reduce,
    substitute_monomials,
)
from .numsg import Representation, SemigroupGens, as_gens, degree


class Kind(str, Enum):
    NICE = "nice"
    BAD = "bad"


@dataclass(frozen=True)
class MonomialCurve:
    """The projective curve with generic zero (u^m_n, u^(m_n-m_1) v^m_1, ..., v^m_n)."""

    gens: SemigroupGens

    def __init__(self, gens):
        object.__setattr__(self, "gens", as_gens(gens))

    @property
    def n(self) -> int:
        return len(self.gens)

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.gens.gens

    @property
    def nvars(self) -> int:
        return self.n + 1


@dataclass(frozen=True)
class ExtensionSpec:
    base: MonomialCurve
    ell: int
    m: int
    rep: Representation
    kind: Kind

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def delta(self) -> int:
        return self.rep.weight

    @property
    def exponents(self) -> tuple[int, ...]:
        """(l*m_1, ..., l*m_n, m) in this order; never sorted."""
        return tuple(self.ell * g for g in self.base.exponents) + (self.m,)

    @property
    def nvars(self) -> int:
        return self.n + 2


@dataclass(frozen=True)
class Parameterization:
    """Per-coordinate images ``(i, j)`` meaning ``u**i * v**j``."""

    images: tuple[tuple[int, int], ...]
    hom_degree: int

    def point(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(u**i * v**j for i, j in self.images)


def make_extension(base, ell: int, m: int) -> ExtensionSpec:
    if not isinstance(base, MonomialCurve):
        base = MonomialCurve(base)
    if ell < 1 or m < 1:
        raise ValueError("ell and m must be positive")
    if gcd(ell, m) != 1:
        raise NotCoprime(f"gcd({ell}, {m}) = {gcd(ell, m)} != 1")
    rep = degree(m, base.gens)
    kind = Kind.NICE if rep.weight > ell else Kind.BAD
    return ExtensionSpec(base, ell, m, rep, kind)


def parameterize(obj, affine: bool = False) -> Parameterization:
    """Generic zero of a curve, an extension, or a raw exponent list.

    Projective: x0 -> u^M and the coordinate with exponent a -> u^(M-a) v^a,
    with M the largest exponent. Affine: x0 -> 1 and a -> v^a.
    """
    if isinstance(obj, ExtensionSpec):
        exps = obj.exponents
    elif isinstance(obj, MonomialCurve):
        exps = obj.exponents
    else:
        exps = tuple(int(a) for a in obj)
    top = max(exps)
    if affine:
        return Parameterization(((0, 0),) + tuple((0, a) for a in exps), top)
    return Parameterization(((top, 0),) + tuple((top - a, a) for a in exps), top)


def _rep_monomial(spec: ExtensionSpec) -> list[int]:
    exps = [0] * spec.nvars
    for i, s in enumerate(spec.rep.coeffs, start=1):
        exps[i] = s
    return exps


def affine_G(spec: ExtensionSpec) -> SparsePoly:
    """x_1^s_1 ... x_n^s_n - x_(n+1)^l, with x0 present but unused."""
    last = [0] * spec.nvars
    last[-1] = spec.ell
    return SparsePoly(spec.nvars, [(_rep_monomial(spec), 1), (last, -1)])


def projective_F(spec: ExtensionSpec) -> SparsePoly:
    """Homogenized G, signed so the nice case leads with the representation monomial.

    nice: x^s - x0^(delta-l) x_(n+1)^l; bad: x_(n+1)^l - x0^(l-delta) x^s.
    """
    rep = _rep_monomial(spec)
    last = [0] * spec.nvars
    last[-1] = spec.ell
    if spec.kind is Kind.NICE:
        last[0] = spec.delta - spec.ell
        return SparsePoly(spec.nvars, [(rep, 1), (last, -1)])
    rep[0] = spec.ell - spec.delta
    return SparsePoly(spec.nvars, [(last, 1), (rep, -1)])


# -- base-curve binomials -------------------------------------------------------

FORMS = ("xn", "chain")


def binomial_rules(gens, form: str, nvars: int | None = None) -> list[RewriteRule]:
    """Smallest binomials of the requested shape vanishing on the base curve.

    ``xn``:    x_i^a_i - x0^(a_i-b_i) x_n^b_i,      a_i m_i = b_i m_n
    ``chain``: x_i^a_i - x0^(a_i-b_i) x_(i+1)^b_i,  a_i m_i = b_i m_(i+1)
    """
    g = as_gens(gens).gens
    n = len(g)
    nvars = n + 1 if nvars is None else nvars
    if form not in FORMS:
        raise ShapeMismatch(f"unknown shape {form!r}; expected one of {FORMS}")
    rules = []
    for i in range(1, n):
        target = n if form == "xn" else i + 1
        d = gcd(g[i - 1], g[target - 1])
        rules.append(RewriteRule.binomial(i, g[target - 1] // d, g[i - 1] // d, target, nvars))
    return rules


@dataclass(frozen=True)
class RationalNormal:
    n: int


@dataclass(frozen=True)
class PlaneCurve:
    m1: int
    m2: int


@dataclass(frozen=True)
class BinomialShape:
    gens: tuple[int, ...]
    form: str


@dataclass(frozen=True)
class Custom:
    gens: tuple[int, ...]
    polys: tuple[SparsePoly, ...] = field(default=())


# (gens, form) pairs whose binomials are known to cut the base curve set-theoretically
ESTABLISHED_SHAPES = {((1, 2, 4), "chain"), ((3, 4, 6), "xn")}


def family_gens(family) -> tuple[int, ...]:
    if isinstance(family, RationalNormal):
        return tuple(range(1, family.n + 1))
    if isinstance(family, PlaneCurve):
        return (family.m1, family.m2)
    return tuple(family.gens)


def is_established(family) -> bool:
    """Whether the returned equations are known to cut out the curve (not just contain it)."""
    if isinstance(family, (RationalNormal, PlaneCurve)):
        return True
    if isinstance(family, BinomialShape):
        return len(family.gens) == 2 or (tuple(family.gens), family.form) in ESTABLISHED_SHAPES
    return False


def default_family(gens):
    gens = tuple(as_gens(gens).gens)
    if len(gens) == 2:
        return PlaneCurve(*gens)
    for shape_gens, form in sorted(ESTABLISHED_SHAPES):
        if shape_gens == gens:
            return BinomialShape(gens, form)
    if gens == tuple(range(1, len(gens) + 1)) and len(gens) <= 3:
        return RationalNormal(len(gens))
    return None


def base_equations(family) -> list[SparsePoly]:
    """f_1, ..., f_(n-1) in x0..x_n for a supported base family."""
    if isinstance(family, RationalNormal):
        if family.n == 2:
            return base_equations(PlaneCurve(1, 2))
        if family.n == 3:
            # twisted cubic: quadric cone plus a cubic tangent along the curve
            return [SparsePoly(4, [((0, 2, 0, 0), 1), ((1, 0, 1, 0), -1)]),
                    SparsePoly(4, [((0, 0, 3, 0), 1), ((0, 1, 1, 1), -2), ((1, 0, 0, 2), 1)])]
        raise ValueError(f"no built-in equations for the rational normal curve in P^{family.n}")
    if isinstance(family, PlaneCurve):
        m1, m2 = family.m1, family.m2
        as_gens((m1, m2))
        return [SparsePoly(3, [((0, m2, 0), 1), ((m2 - m1, 0, m1), -1)])]
    if isinstance(family, BinomialShape):
        return [r.polynomial() for r in binomial_rules(family.gens, family.form)]
    if isinstance(family, Custom):
        curve = MonomialCurve(family.gens)
        param = parameterize(curve)
        for f in family.polys:
            if f.nvars != curve.nvars:
                raise VarCountMismatch(f"{f} is not in {curve.nvars} variables")
            if substitute_monomials(f, param.images):
                raise DoesNotVanish(f"{f} does not vanish on C{family.gens}")
        return list(family.polys)
    raise TypeError(f"unsupported family {family!r}")


# -- F* -----------------------------------------------------------------------

@dataclass(frozen=True)
class FStarResult:
    form: str
    p: int
    weights: tuple[int, ...]  # p_i (xn form) or q_(i-1) (chain form), indexed by i = 1..n-1
    gamma: int
    alpha: int
    beta: int  # smallest x0 exponent among the non-leading terms of F*
    margin: int  # delta - l - gamma; positive iff the largeness inequality holds
    F: SparsePoly
    reduced: SparsePoly  # normal form of F^p, equal to x0^gamma * F*
    fstar: SparsePoly
    rules: tuple[RewriteRule, ...]

    @property
    def hypothesis_holds(self) -> bool:
        return self.margin > 0


def _classify_rules(spec: ExtensionSpec, rules: Sequence[RewriteRule]) -> str:
    n = spec.n
    if not rules:
        if any(spec.rep.coeffs[:-1]):
            raise ShapeMismatch("m is not a multiple of m_n, so rewriting rules are required")
        return "xn"
    if sorted(r.var_index for r in rules) != list(range(1, n)):
        raise ShapeMismatch(f"need exactly one rule for each of x1..x{n - 1}")
    targets = []
    for r in rules:
        t = r.target
        if t is None or any(e for j, e in enumerate(r.replacement) if j not in (0, t)):
            raise ShapeMismatch(f"rule for x{r.var_index} is not a binomial x0^c*x_j^b shape")
        gens = spec.base.exponents
        if r.threshold * gens[r.var_index - 1] != r.b * gens[t - 1]:
            raise ShapeMismatch(f"rule for x{r.var_index} does not vanish on the base curve")
        targets.append((r.var_index, t))
    if all(t == n for _, t in targets):
        return "xn"
    if all(t == i + 1 for i, t in targets):
        return "chain"
    raise ShapeMismatch("rules mix the x_n form and the chain form")


def _weights(form: str, rules: Sequence[RewriteRule], n: int) -> tuple[int, tuple[int, ...]]:
    if not rules:
        return 1, ()
    by_index = {r.var_index: r for r in rules}
    a = [by_index[i].threshold for i in range(1, n)]
    b = [by_index[i].b for i in range(1, n)]
    p = prod(a)
    if form == "xn":
        return p, tuple(bi * p // ai for ai, bi in zip(a, b))
    # q_(i-1) = a_1..a_(i-1) * b_i..b_(n-1) is the weight of s_i
    return p, tuple(prod(a[:i]) * prod(b[i:]) for i in range(n - 1))


@dataclass(frozen=True)
class FStarParameters:
    form: str
    p: int
    weights: tuple[int, ...]
    gamma: int
    alpha: int
    margin: int
    rules: tuple[RewriteRule, ...]


def fstar_parameters(spec: ExtensionSpec, rules: Sequence[RewriteRule] = ()) -> FStarParameters:
    """p, the weights, gamma = sum((p - w_i) s_i) and alpha = p s_n + sum(w_i s_i)."""
    if spec.kind is not Kind.NICE:
        raise ConditionFails(f"extension is bad (delta={spec.delta} <= l={spec.ell}); use the gluing equation")
    rules = tuple(embed_rule(r, spec.nvars) for r in rules)
    form = _classify_rules(spec, rules)
    p, w = _weights(form, rules, spec.n)
    s = spec.rep.coeffs
    gamma = sum((p - wi) * si for wi, si in zip(w, s[:-1]))
    alpha = p * s[-1] + sum(wi * si for wi, si in zip(w, s[:-1]))
    return FStarParameters(form, p, w, gamma, alpha, spec.delta - spec.ell - gamma, rules)


def build_fstar(spec: ExtensionSpec, rules: Sequence[RewriteRule] = (), strict: bool = False) -> FStarResult:
    """Raise F to the p-th power, rewrite with the base binomials, divide out x0^gamma.

    The result is certified at runtime: x0^gamma must divide the normal form,
    and what remains must be x_n^alpha plus terms divisible by x0. With
    ``strict`` the sufficient inequality s_n > l + sum((p - w_i - 1) s_i)
    is also required up front.
    """
    par = fstar_parameters(spec, rules)
    p, gamma, alpha, n, nv = par.p, par.gamma, par.alpha, spec.n, spec.nvars
    if strict and par.margin <= 0:
        raise ConditionFails(
            f"s_n={spec.rep.coeffs[-1]} does not exceed l + sum((p - w_i - 1) s_i) = "
            f"{spec.rep.coeffs[-1] - par.margin}")

    F = projective_F(spec)
    reduced = reduce(F**p, par.rules)
    lead = [0] * nv
    lead[0], lead[n] = gamma, alpha
    if reduced.coefficient(lead) != 1:
        raise ShapeMismatch("reduced p-th power lacks the expected x0^gamma * x_n^alpha term")
    if reduced.min_exponent(0) < gamma:
        raise ConditionFails(
            f"x0^{gamma} does not divide the reduced F^{p} (min x0 exponent {reduced.min_exponent(0)}); "
            "F* would not be a polynomial")
    fstar = divide_by_var_power(reduced, 0, gamma)
    pure = [0] * nv
    pure[n] = alpha
    rest = [e[0] for e in fstar.terms if list(e) != pure]
    beta = min(rest, default=0)
    if rest and beta < 1:
        raise ConditionFails("F* has a term other than x_n^alpha that is not divisible by x0")
    return FStarResult(par.form, p, par.weights, gamma, alpha, beta, par.margin, F, reduced, fstar, par.rules)


def embed_rule(rule: RewriteRule, nvars: int) -> RewriteRule:
    if rule.nvars == nvars:
        return rule
    if rule.nvars > nvars:
        raise VarCountMismatch("rule has more variables than the target ring")
    return RewriteRule(rule.var_index, rule.threshold, rule.replacement + (0,) * (nvars - rule.nvars))


def power_by_binomial_theorem(F: SparsePoly, p: int) -> SparsePoly:
    """F^p for a binomial F, term by term; an independent route to ``F**p``."""
    if len(F) != 2:
        return F**p
    (e1, c1), (e2, c2) = F.items()
    out = {}
    for k in range(p + 1):
        exps = tuple((p - k) * x + k * y for x, y in zip(e1, e2))
        out[exps] = comb(p, k) * c1 ** (p - k) * c2**k
    return SparsePoly(F.nvars, out)
