"""Numerical semigroup arithmetic: membership, degree, minimal representations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from math import gcd
from typing import Iterable, Sequence

from . import _kernels
from .errors import InvalidGenerators, NotInSemigroup, TargetTooLarge

#: Largest target the O(n*m) tables are built for.
MAX_TARGET = 10**7


@dataclass(frozen=True)
class SemigroupGens:
    """Strictly increasing positive generators m_1 < ... < m_n with gcd 1."""

    gens: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        if len(gens) < 2:
            raise InvalidGenerators(f"need at least two generators, got {gens}")
        if gens[0] <= 0 or any(a >= b for a, b in zip(gens, gens[1:])):
            raise InvalidGenerators(f"generators must be positive and strictly increasing: {gens}")
        if _fold(gcd, gens) != 1:
            raise InvalidGenerators(f"generators must have gcd 1: {gens}")

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]


@dataclass(frozen=True)
class Representation:
    """m = sum(coeffs[i] * gens[i]) with non-negative coefficients."""

    coeffs: tuple[int, ...]
    target: int

    @property
    def weight(self) -> int:
        return sum(self.coeffs)


def as_gens(gens) -> SemigroupGens:
    return gens if isinstance(gens, SemigroupGens) else SemigroupGens(tuple(gens))


def _check_target(m: int):
    if m < 0:
        raise ValueError(f"target must be non-negative, got {m}")
    if m > MAX_TARGET:
        raise TargetTooLarge(
            f"target {m} exceeds the supported bound {MAX_TARGET} (tables need O(n*m) memory)")


def coin_tables(coins: Sequence[int], limit: int):
    """Fewest-coins tables for prefixes of ``coins``; see ``_fallback.min_coin_tables``."""
    _check_target(limit)
    return _kernels.min_coin_tables(list(coins), limit)


def is_member(m: int, gens) -> bool:
    g = as_gens(gens)
    _check_target(m)
    return bool(coin_tables(g.gens, m)[-1, m] < _kernels.INF)


def _largest_first(tables, coins, i, rem, budget):
    """Yield coefficient k for coin i, largest first, that keeps ``budget`` exact."""
    g = coins[i]
    for k in range(rem // g, -1, -1):
        left = rem - k * g
        if i == 0:
            if left == 0 and k == budget:
                yield k
        elif tables[i - 1, left] + k == budget:
            yield k


def degree(m: int, gens) -> Representation:
    """Minimal-weight representation of ``m``.

    Ties are broken by maximizing s_n, then s_(n-1), and so on down to s_1.
    """
    g = as_gens(gens)
    _check_target(m)
    tables = coin_tables(g.gens, m)
    best = int(tables[-1, m])
    if best >= _kernels.INF:
        raise NotInSemigroup(f"{m} is not in the semigroup generated by {g.gens}")
    coeffs = [0] * len(g)
    rem, budget = m, best
    for i in range(len(g) - 1, -1, -1):
        k = next(_largest_first(tables, g.gens, i, rem, budget))
        coeffs[i] = k
        rem -= k * g.gens[i]
        budget -= k
    return Representation(tuple(coeffs), m)


def minimal_representations(m: int, gens, limit: int | None = None) -> list[Representation]:
    """All minimal-weight representations, in the same order the tie-break prefers."""
    g = as_gens(gens)
    _check_target(m)
    tables = coin_tables(g.gens, m)
    best = int(tables[-1, m])
    if best >= _kernels.INF:
        raise NotInSemigroup(f"{m} is not in the semigroup generated by {g.gens}")
    out: list[Representation] = []
    coeffs = [0] * len(g)

    def walk(i, rem, budget):
        if limit is not None and len(out) >= limit:
            return
        if i < 0:
            out.append(Representation(tuple(coeffs), m))
            return
        for k in _largest_first(tables, g.gens, i, rem, budget):
            coeffs[i] = k
            walk(i - 1, rem - k * g.gens[i], budget - k)
        coeffs[i] = 0

    walk(len(g) - 1, m, best)
    return out


def delta_gcds(gens: Iterable[int]) -> list[int]:
    """Entry i is the gcd of every entry except the i-th."""
    gens = [int(x) for x in gens]
    if len(gens) < 3:
        raise InvalidGenerators("delta_gcds needs at least three integers")
    return [_fold(gcd, gens[:i] + gens[i + 1:]) for i in range(len(gens))]
