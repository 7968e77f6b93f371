"""Independent checks: symbolic vanishing, toric binomials, finite-field zero sets."""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Sequence

import numpy as np

from . import _kernels
from .curves import (
    ExtensionSpec,
    Parameterization,
    build_fstar,
    fstar_parameters,
    power_by_binomial_theorem,
    projective_F,
)
from .errors import BoundTooLarge, TooLarge, VarCountMismatch
from .mpoly import RewriteRule, SparsePoly, reduce, substitute_monomials

EVIDENCE_LABEL = "EVIDENCE: finite-field enumeration (char p), not a proof in characteristic zero"
MAX_TORIC_BOUND = 12
MAX_POINTS = 10**7
MAX_PROJECTIVE_DIM = 5
DEFAULT_PRIMES = (5, 7, 11)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


@dataclass(frozen=True)
class FiniteFieldConfig:
    q: int
    caveat_ack: bool = True

    def __post_init__(self):
        if not (3 <= self.q <= 101 and _is_prime(self.q)):
            raise ValueError(f"q must be a prime in [3, 101], got {self.q}")


def default_primes(exponents: Sequence[int]) -> list[int]:
    """Default field sizes, skipping q that divides a difference of exponents.

    The filter is advisory: when it would drop every prime, the full set is kept.
    """
    exps = [0, *exponents]
    diffs = {abs(a - b) for a, b in combinations(exps, 2) if a != b}
    keep = [q for q in DEFAULT_PRIMES if not any(d % q == 0 for d in diffs)]
    return keep or list(DEFAULT_PRIMES)


def vanishes_on(p: SparsePoly, param: Parameterization) -> bool:
    """Exact certificate that the curve lies on p = 0: the (u, v) substitution is zero."""
    if p.nvars != len(param.images):
        raise VarCountMismatch(f"{p.nvars} variables vs {len(param.images)} coordinates")
    return not substitute_monomials(p, param.images)


def vanishes_numerically(p: SparsePoly, param: Parameterization, samples: int = 20, seed: int = 0) -> bool:
    """Secondary check: evaluate at random integer curve points exactly."""
    rng = random.Random(seed)
    for _ in range(samples):
        u, v = rng.randint(-9, 9), rng.randint(-9, 9)
        if p.evaluate(param.point(u, v)):
            return False
    return True


def toric_binomials(exponents: Sequence[int], degree_bound: int, coprime_only: bool = False) -> list[SparsePoly]:
    """All binomials x^A - x^B of degree <= bound with equal (u, v)-weight.

    Coordinates follow the projective generic zero of ``exponents``. Each
    binomial is oriented with its graded-lex larger monomial first.
    """
    if degree_bound > MAX_TORIC_BOUND:
        raise BoundTooLarge(f"degree bound {degree_bound} > {MAX_TORIC_BOUND}")
    weights = (0, *(int(e) for e in exponents))
    nvars = len(weights)
    out = []
    for d in range(1, degree_bound + 1):
        groups = defaultdict(list)
        for combo in combinations_with_replacement(range(nvars), d):
            exps = [0] * nvars
            for i in combo:
                exps[i] += 1
            groups[sum(w * e for w, e in zip(weights, exps))].append(tuple(exps))
        for key in sorted(groups):
            monos = sorted(groups[key], reverse=True)
            for a, b in combinations(monos, 2):
                if coprime_only and any(x and y for x, y in zip(a, b)):
                    continue
                out.append(SparsePoly(nvars, [(a, 1), (b, -1)]))
    return out


def contains_up_to_sign(pool: Sequence[SparsePoly], p: SparsePoly) -> bool:
    members = set(pool)
    return p in members or -p in members


@dataclass
class ZeroSetReport:
    q: int
    hypersurface_points: frozenset
    curve_points: frozenset
    extras: frozenset
    missing: frozenset
    excluded_line: int | None = None
    label: str = field(default=EVIDENCE_LABEL)

    @property
    def agrees(self) -> bool:
        return not self.extras and not self.missing

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "label": self.label,
            "hypersurface_points": len(self.hypersurface_points),
            "curve_points": len(self.curve_points),
            "extras": sorted(list(p) for p in self.extras),
            "missing": sorted(list(p) for p in self.missing),
            "excluded_line": self.excluded_line,
        }


def _normalize(point: Sequence[int], q: int) -> tuple[int, ...] | None:
    for x in point:
        if x % q:
            inv = pow(x, -1, q)
            return tuple(y * inv % q for y in point)
    return None


def curve_points(param: Parameterization, q: int) -> set[tuple[int, ...]]:
    """Images of (1 : t) for t in F_q and of (0 : 1)."""
    pts = set()
    for u, v in [(1, t) for t in range(q)] + [(0, 1)]:
        pt = tuple(pow(u, i, q) * pow(v, j, q) % q for i, j in param.images)
        norm = _normalize(pt, q)
        if norm is not None:
            pts.add(norm)
    return pts


def _pack(equations: Sequence[SparsePoly], q: int):
    coeffs, exps, offsets = [], [], [0]
    for f in equations:
        for e, c in f.sorted_terms():
            if c % q:
                coeffs.append(c % q)
                exps.append(e)
        offsets.append(len(coeffs))
    return coeffs, exps, offsets


def zero_set_compare(
    equations: Sequence[SparsePoly],
    curve: Parameterization,
    cfg: FiniteFieldConfig,
    exclude_line: int | None = None,
) -> ZeroSetReport:
    """Exhaustively compare the common zeros over F_q with the parameterized points.

    ``exclude_line=k`` drops the points with x0 = ... = x_(k-1) = 0 from the
    zero set before comparing.
    """
    nvars = len(curve.images)
    dim = nvars - 1
    if dim > MAX_PROJECTIVE_DIM or cfg.q**dim > MAX_POINTS:
        raise TooLarge(f"P^{dim}(F_{cfg.q}) is too large to enumerate")
    for f in equations:
        if f.nvars != nvars:
            raise VarCountMismatch(f"{f} has {f.nvars} variables, expected {nvars}")
    coeffs, exps, offsets = _pack(equations, cfg.q)
    if not exps:
        exps = np.zeros((0, nvars), dtype=np.int64)
    found = _kernels.common_zeros(cfg.q, nvars, coeffs, exps, offsets)
    zeros = {tuple(int(x) for x in row) for row in found}
    if exclude_line is not None:
        zeros = {pt for pt in zeros if any(pt[:exclude_line])}
    on_curve = curve_points(curve, cfg.q)
    # points of the curve that fail an equation
    missing = {pt for pt in on_curve if any(f.evaluate(pt, cfg.q) for f in equations)}
    if exclude_line is not None:
        on_curve_cmp = {pt for pt in on_curve if any(pt[:exclude_line])}
    else:
        on_curve_cmp = on_curve
    extras = zeros - on_curve_cmp
    return ZeroSetReport(cfg.q, frozenset(zeros), frozenset(on_curve), frozenset(extras),
                         frozenset(missing), exclude_line)


def check_eq1(spec: ExtensionSpec, rules: Sequence[RewriteRule], fstar: SparsePoly | None = None) -> bool:
    """Recompute the normal form of F^p from scratch and compare with x0^gamma * F*.

    F^p is expanded by the binomial theorem here, independently of the
    repeated squaring used by ``build_fstar``. ``fstar`` defaults to the
    constructed polynomial; pass another one to test it instead.
    """
    par = fstar_parameters(spec, rules)
    if fstar is None:
        fstar = build_fstar(spec, rules).fstar
    lhs = reduce(power_by_binomial_theorem(projective_F(spec), par.p), par.rules)
    shift = [0] * spec.nvars
    shift[0] = par.gamma
    return lhs == SparsePoly.monomial(shift) * fstar
