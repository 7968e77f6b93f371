"""Exact sparse multivariate polynomials over the integers.

Variables are x0, x1, ..., x_(nvars-1); a monomial is a tuple of exponents.
Terms are kept in a dict keyed by exponent tuple with nonzero ``int``
coefficients. Values are treated as immutable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import HomVarOccurs, PolyParseError, RuleConflict, VarCountMismatch

Monomial = tuple[int, ...]


def _grlex_key(exps: Monomial):
    return (sum(exps), exps)


class SparsePoly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        self.nvars = int(nvars)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise VarCountMismatch(f"monomial {exps} does not have {self.nvars} exponents")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = acc.get(exps, 0) + int(coeff)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already normalized
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def var(cls, i, nvars, power=1):
        exps = [0] * nvars
        exps[i] = power
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        return cls(len(exps), {exps: coeff})

    # -- container protocol -------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order (x0 > x1 > ...)."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, exps) -> int:
        return self._terms.get(tuple(exps), 0)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise VarCountMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, int):
            return SparsePoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return SparsePoly.zero(self.nvars)
            return SparsePoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == SparsePoly.constant(other, self.nvars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- queries ------------------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def min_exponent(self, var: int) -> int:
        return min((e[var] for e in self._terms), default=0)

    def evaluate(self, point: Sequence[int], modulus: int | None = None) -> int:
        if len(point) != self.nvars:
            raise VarCountMismatch(f"point has {len(point)} coordinates, need {self.nvars}")
        total = 0
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= pow(x, e, modulus) if modulus else x**e
            total += v
        return total % modulus if modulus else total

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {to_text(self)!r})"


# -- text form ----------------------------------------------------------------

def _monomial_text(exps: Monomial) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def to_text(p: SparsePoly) -> str:
    if not p:
        return "0"
    out = []
    for k, (exps, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(exps)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\*\*|\^)|([+\-*]))")


def parse_poly(text: str, nvars: int | None = None) -> SparsePoly:
    """Parse the ``to_text`` grammar: signed sums of ``c*x0^a*x3`` style terms.

    ``nvars`` defaults to one more than the largest variable index present.
    Both ``-`` and the Unicode minus sign are accepted, as is ``**`` for ``^``.
    """
    src = text.replace("−", "-").strip()
    if not src:
        raise PolyParseError("empty polynomial")
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            if src[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character at {pos}: {src[pos:pos + 10]!r}")
        num, var, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", int(var)))
        elif caret is not None:
            tokens.append(("pow", None))
        else:
            tokens.append(("op", op))
        pos = m.end()

    terms: list[tuple[dict[int, int], int]] = []
    i = 0
    sign = 1
    expect_term = True
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            expect_term = True
            if val == "-":
                sign = -sign
            i += 1
            continue
        if not expect_term:
            raise PolyParseError(f"missing operator before token {i}")
        coeff = 1
        powers: dict[int, int] = {}
        while True:
            kind, val = tokens[i]
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "var":
                i += 1
                e = 1
                if i < len(tokens) and tokens[i][0] == "pow":
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != "num":
                        raise PolyParseError("exponent must be a non-negative integer")
                    e = tokens[i + 1][1]
                    i += 2
                powers[val] = powers.get(val, 0) + e
            else:
                raise PolyParseError(f"unexpected token {val!r}")
            if i < len(tokens) and tokens[i] == ("op", "*"):
                i += 1
                if i >= len(tokens):
                    raise PolyParseError("dangling '*'")
                continue
            break
        terms.append((powers, sign * coeff))
        sign = 1
        expect_term = False
    if expect_term:
        raise PolyParseError("expression ends with an operator")
    width = max((max(pw, default=-1) for pw, _ in terms), default=-1) + 1
    if nvars is None:
        nvars = max(width, 1)
    elif width > nvars:
        raise VarCountMismatch(f"x{width - 1} appears but only {nvars} variables were declared")
    out = []
    for powers, c in terms:
        exps = [0] * nvars
        for v, e in powers.items():
            exps[v] = e
        out.append((exps, c))
    return SparsePoly(nvars, out)


# -- structural operators -----------------------------------------------------

def embed(p: SparsePoly, nvars: int) -> SparsePoly:
    """Same polynomial viewed in a ring with more (trailing) variables."""
    if nvars < p.nvars:
        raise VarCountMismatch("embed cannot drop variables")
    pad = (0,) * (nvars - p.nvars)
    return SparsePoly._raw(nvars, {e + pad: c for e, c in p.items()})


def gamma_ell(p: SparsePoly, ell: int, var: int = -1) -> SparsePoly:
    """Substitute ``x_var -> x_var**ell`` (default: the last variable)."""
    if ell < 1:
        raise ValueError("ell must be positive")
    var %= p.nvars
    out = {}
    for e, c in p.items():
        e = list(e)
        e[var] *= ell
        out[tuple(e)] = c
    return SparsePoly._raw(p.nvars, out)


def homogenize(p: SparsePoly, hom_var: int) -> SparsePoly:
    if any(e[hom_var] for e in p._terms):
        raise HomVarOccurs(f"x{hom_var} already occurs in {p}")
    top = p.total_degree()
    out = {}
    for e, c in p.items():
        e = list(e)
        e[hom_var] = top - sum(e)
        out[tuple(e)] = c
    return SparsePoly._raw(p.nvars, out)


def dehomogenize(p: SparsePoly, var: int) -> SparsePoly:
    """Set ``x_var = 1``."""
    out: dict[Monomial, int] = {}
    for e, c in p.items():
        e = list(e)
        e[var] = 0
        k = tuple(e)
        out[k] = out.get(k, 0) + c
    return SparsePoly._raw(p.nvars, {e: c for e, c in out.items() if c})


def divide_by_var_power(p: SparsePoly, var: int, k: int) -> SparsePoly:
    if p.min_exponent(var) < k and p:
        raise ValueError(f"x{var}^{k} does not divide the polynomial")
    out = {}
    for e, c in p.items():
        e = list(e)
        e[var] -= k
        out[tuple(e)] = c
    return SparsePoly._raw(p.nvars, out)


def substitute_monomials(p: SparsePoly, images: Sequence[Sequence[int]]) -> SparsePoly:
    """Replace x_i by the monomial ``u**images[i][0] * v**images[i][1]``; result is in (u, v)."""
    if len(images) != p.nvars:
        raise VarCountMismatch(f"{len(images)} images for {p.nvars} variables")
    out: dict[Monomial, int] = {}
    for exps, c in p.items():
        u = sum(e * img[0] for e, img in zip(exps, images))
        v = sum(e * img[1] for e, img in zip(exps, images))
        out[(u, v)] = out.get((u, v), 0) + c
    return SparsePoly._raw(2, {e: c for e, c in out.items() if c})


# -- rewriting ----------------------------------------------------------------

@dataclass(frozen=True)
class RewriteRule:
    """``x_var_index ** threshold -> x ** replacement``, degree preserving.

    The replacement is free of x_1..x_var_index (x0 is allowed), which is
    what makes increasing-index reduction terminate.
    """

    var_index: int
    threshold: int
    replacement: Monomial

    def __post_init__(self):
        rep = tuple(int(e) for e in self.replacement)
        object.__setattr__(self, "replacement", rep)
        if self.var_index < 1 or self.var_index >= len(rep):
            raise ValueError(f"var_index {self.var_index} out of range")
        if any(e < 0 for e in rep):
            raise ValueError("negative exponent in replacement")
        if any(rep[1:self.var_index + 1]):
            raise ValueError("replacement must not involve x1..x_var_index")
        b = sum(rep[1:])
        if not self.threshold > b > 0:
            raise ValueError(f"need threshold > b > 0, got a={self.threshold}, b={b}")
        if sum(rep) != self.threshold:
            raise ValueError("replacement must have total degree equal to the threshold")

    @classmethod
    def binomial(cls, var_index: int, a: int, b: int, target: int, nvars: int) -> "RewriteRule":
        """Rule for ``x_i^a - x0^(a-b) * x_target^b``."""
        rep = [0] * nvars
        rep[0] = a - b
        rep[target] += b
        return cls(var_index, a, tuple(rep))

    @property
    def nvars(self) -> int:
        return len(self.replacement)

    @property
    def b(self) -> int:
        return sum(self.replacement[1:])

    @property
    def target(self) -> int | None:
        """Index of the single non-x0 variable in the replacement, if there is one."""
        hits = [j for j, e in enumerate(self.replacement) if j and e]
        return hits[0] if len(hits) == 1 else None

    def polynomial(self) -> SparsePoly:
        lhs = [0] * self.nvars
        lhs[self.var_index] = self.threshold
        return SparsePoly(self.nvars, [(lhs, 1), (self.replacement, -1)])


def _check_rules(p: SparsePoly, rules: Sequence[RewriteRule]):
    seen = set()
    for r in rules:
        if r.var_index in seen:
            raise RuleConflict(f"two rules rewrite x{r.var_index}")
        seen.add(r.var_index)
        if r.nvars != p.nvars:
            raise VarCountMismatch(f"rule has {r.nvars} variables, polynomial {p.nvars}")


def reduce(p: SparsePoly, rules: Sequence[RewriteRule]) -> SparsePoly:
    """Normal form of ``p`` modulo the rule binomials.

    Rules are applied in increasing variable order, each as one whole-quotient
    step ``x_i^e -> x_i^(e mod a) * replacement^(e // a)``.
    """
    _check_rules(p, rules)
    ordered = sorted(rules, key=lambda r: r.var_index)
    out: dict[Monomial, int] = {}
    for exps, c in p.items():
        e = list(exps)
        for r in ordered:
            q, e[r.var_index] = divmod(e[r.var_index], r.threshold)
            if q:
                for j, x in enumerate(r.replacement):
                    if x:
                        e[j] += q * x
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return SparsePoly._raw(p.nvars, {e: c for e, c in out.items() if c})
