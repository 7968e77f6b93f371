"""Gluing criteria for the semigroup of a projective monomial curve.

A curve with exponents e_1..e_k (largest M) has the semigroup generated by
T = {(M, 0)} u {(M - e_i, e_i)}. Coordinate 0 stands for (M, 0) and
coordinate i for (M - e_i, e_i).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce as _fold
from math import gcd
from typing import Sequence

from . import _kernels
from .curves import ExtensionSpec, Kind, projective_F
from .errors import InvalidGenerators, NotBadExtension
from .mpoly import SparsePoly
from .numsg import coin_tables


class Reason(str, Enum):
    NON_SINGLETON_RANK_TWO = "NonSingletonRankTwo"
    ENDPOINT_TRIVIAL_INTERSECTION = "EndpointTrivialIntersection"
    CONDITION_I_FAILS = "ConditionIFails"
    CONDITION_II_FAILS = "ConditionIIFails"
    DELTA_ONE = "DeltaOne"


@dataclass(frozen=True)
class SemigroupSplit:
    exponents: tuple[int, ...]
    t1: tuple[int, ...]  # coordinates in T_1; the rest form T_2

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) < 2 or min(exps) <= 0:
            raise InvalidGenerators(f"need at least two positive exponents, got {exps}")
        if _fold(gcd, exps) != 1:
            raise InvalidGenerators(f"exponents must have gcd 1: {exps}")
        coords = set(range(len(exps) + 1))
        t1 = tuple(sorted(set(self.t1)))
        if not t1 or not set(t1) < coords:
            raise ValueError("T_1 must be a nonempty proper subset of the coordinates")
        rest = tuple(sorted(coords - set(t1)))
        if len(t1) > len(rest):
            t1 = rest
        object.__setattr__(self, "t1", t1)

    @property
    def is_endpoint(self) -> bool:
        if len(self.t1) != 1:
            return False
        i = self.t1[0]
        if i == 0:
            return True
        top = max(self.exponents)
        return self.exponents[i - 1] == top and self.exponents.count(top) == 1

    @property
    def singleton(self) -> int | None:
        return self.t1[0] if len(self.t1) == 1 else None


@dataclass(frozen=True)
class GluingDecision:
    split: SemigroupSplit
    glues: bool
    reason: Reason | None = None
    delta: int | None = None
    witness: tuple[int, ...] | None = None  # d_j for j != i0, in coordinate order
    slack: int | None = None  # d = delta - sum(d_j), the multiple of (M, 0)

    @property
    def i0(self) -> int | None:
        return self.split.singleton

    def describe(self) -> str:
        if self.i0 is None:
            return f"T1={list(self.split.t1)}: NO GLUE [{self.reason.value}]"
        head = f"i0={self.i0}"
        if self.i0:
            head += f" (m={self.split.exponents[self.i0 - 1]})"
        if self.glues:
            return (f"{head}: GLUES Delta={self.delta} witness d=({','.join(map(str, self.witness))})"
                    f" slack={self.slack}")
        extra = f" Delta={self.delta}" if self.delta is not None else ""
        return f"{head}: NO GLUE [{self.reason.value}]{extra}"


def witness_ok(exponents: Sequence[int], i0: int, delta: int, d: Sequence[int]) -> bool:
    """Recheck conditions (I) and (II) for a candidate witness."""
    others = [e for j, e in enumerate(exponents, start=1) if j != i0]
    return (len(d) == len(others) and all(x >= 0 for x in d)
            and sum(x * e for x, e in zip(d, others)) == delta * exponents[i0 - 1]
            and sum(d) <= delta)


def find_witness(coins: Sequence[int], target: int, budget: int):
    """Lexicographically smallest d >= 0 with sum(d*coins) = target and sum(d) <= budget.

    Returns ``(witness, min_count)``; the witness is None when the fewest-coin
    count exceeds the budget, and min_count is None when target is unreachable.
    """
    coins = list(coins)
    k = len(coins)
    # suffix[j][v]: fewest coins from coins[j:] making v
    rev = coin_tables(coins[::-1], target)
    suffix = [rev[k - 1 - j] for j in range(k)]
    best = int(suffix[0][target])
    if best >= _kernels.INF:
        return None, None
    if best > budget:
        return None, best
    d = []
    rem, used = target, 0
    for j, c in enumerate(coins):
        for x in range(rem // c + 1):
            left = rem - x * c
            if j == k - 1:
                ok = left == 0
            else:
                ok = suffix[j + 1][left] < _kernels.INF and used + x + int(suffix[j + 1][left]) <= budget
            if ok:
                d.append(x)
                rem, used = left, used + x
                break
    return tuple(d), best


def check_split(split: SemigroupSplit) -> GluingDecision:
    exps = split.exponents
    i0 = split.singleton
    if i0 is None:
        return GluingDecision(split, False, Reason.NON_SINGLETON_RANK_TWO)
    if split.is_endpoint:
        return GluingDecision(split, False, Reason.ENDPOINT_TRIVIAL_INTERSECTION)
    others = [e for j, e in enumerate(exps, start=1) if j != i0]
    delta = _fold(gcd, others)
    witness, fewest = find_witness(others, delta * exps[i0 - 1], delta)
    if witness is not None:
        return GluingDecision(split, True, None, delta, witness, delta - sum(witness))
    if delta == 1:
        reason = Reason.DELTA_ONE
    elif fewest is None:
        reason = Reason.CONDITION_I_FAILS
    else:
        reason = Reason.CONDITION_II_FAILS
    return GluingDecision(split, False, reason, delta)


@dataclass(frozen=True)
class GluingReport:
    exponents: tuple[int, ...]
    decisions: tuple[GluingDecision, ...]

    @property
    def glues(self) -> bool:
        return any(d.glues for d in self.decisions)

    @property
    def first_gluing(self) -> GluingDecision | None:
        return next((d for d in self.decisions if d.glues), None)


def check_all_splits(exponents: Sequence[int]) -> GluingReport:
    """Every singleton split in coordinate order, then the non-singleton verdict."""
    exps = tuple(int(e) for e in exponents)
    if len(exps) < 3:
        raise InvalidGenerators("gluing needs at least three exponents")
    decisions = [check_split(SemigroupSplit(exps, (i,))) for i in range(len(exps) + 1)]
    decisions.append(check_split(SemigroupSplit(exps, (0, 1))))
    return GluingReport(exps, tuple(decisions))


@dataclass(frozen=True)
class BadExtensionGluing:
    decision: GluingDecision
    F: SparsePoly


def bad_extension_gluing(spec: ExtensionSpec) -> BadExtensionGluing:
    """Glue T_1 = {(l m_n - m, m)} onto the rest; the relation is the bad-case F.

    Delta for that split is gcd(l m_1, ..., l m_n) = l, and the representation
    of m is itself a witness with slack l - delta(m).
    """
    if spec.kind is not Kind.BAD:
        raise NotBadExtension(f"delta(m)={spec.delta} > l={spec.ell}: the extension is nice")
    exps = spec.exponents
    i0 = len(exps)
    split = SemigroupSplit(exps, (i0,))
    delta = _fold(gcd, exps[:-1])
    witness = tuple(spec.rep.coeffs)
    if delta != spec.ell or not witness_ok(exps, i0, delta, witness):
        raise AssertionError("representation does not certify the gluing")
    searched = check_split(split)
    if not searched.glues:
        raise AssertionError("witness search disagrees with the representation witness")
    decision = GluingDecision(split, True, None, delta, witness, delta - sum(witness))
    return BadExtensionGluing(decision, projective_F(spec))
