"""Multivariate formal power series truncated per variable.

A series lives in variables drawn from ``q, t, x, y`` (always kept in that
order) and stores only exponent tuples within the per-variable bounds.
Coefficients are exact rationals (``int``/``Fraction``), exact
:class:`CyclotomicNumber` values, or Python ``complex`` floats.  Rational
constants combine with either of the other kinds; mixing cyclotomic and
floating coefficients raises :class:`ScalarKindError`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .cyclotomic import CyclotomicNumber

VARIABLES = ("q", "t", "x", "y")
DEFAULT_TRUNCATION = {"q": 8, "t": 40, "x": 16, "y": 16}


class TruncationError(ValueError):
    """Series with different variables or bounds were combined, or a
    coefficient beyond the truncation was requested."""


class ScalarKindError(TypeError):
    """Exact and floating coefficients were mixed."""


def scalar_kind(c) -> str:
    if isinstance(c, CyclotomicNumber):
        return "cyclotomic"
    if isinstance(c, (complex, float)):
        return "complex"
    if isinstance(c, (int, Fraction)):
        return "rational"
    raise ScalarKindError(f"unsupported coefficient type {type(c).__name__}")


def join_kinds(a: str | None, b: str | None) -> str | None:
    # rationals embed everywhere; only cyclotomic vs complex is a conflict
    if a in (None, "rational") or a == b:
        return b if b is not None else a
    if b in (None, "rational"):
        return a
    raise ScalarKindError(f"cannot mix {a} and {b} coefficients")


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    """Immutable truncated power series.

    ``bounds[v]`` is the largest exponent of ``v`` kept.  Construct through
    :meth:`from_terms`, :meth:`one`, :meth:`monomial` or
    :meth:`binomial_factor`.
    """

    __slots__ = ("variables", "bounds", "_terms", "kind")

    def __init__(self, variables: Iterable[str], bounds: Mapping[str, int] | Iterable[int],
                 terms: Mapping[tuple, object] = (), kind: str | None = None):
        variables = tuple(variables)
        if not isinstance(bounds, Mapping):
            bounds = dict(zip(variables, bounds))
        unknown = [v for v in variables if v not in VARIABLES]
        if unknown or len(set(variables)) != len(variables):
            raise ValueError(f"variables must be distinct names from {VARIABLES}, got {variables}")
        order = sorted(range(len(variables)), key=lambda i: VARIABLES.index(variables[i]))
        self.variables = tuple(variables[i] for i in order)
        self.bounds = tuple(int(bounds[v]) for v in self.variables)
        if any(b < 0 for b in self.bounds):
            raise ValueError("truncation bounds must be non-negative")
        clean = {}
        k = kind
        for exps, c in dict(terms).items():
            exps = tuple(exps[i] for i in order)
            if _is_zero(c):
                continue
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent {exps}")
            if any(e > b for e, b in zip(exps, self.bounds)):
                continue
            k = join_kinds(k, scalar_kind(c))
            clean[exps] = c
        self._terms = clean
        self.kind = k

    # -- constructors --------------------------------------------------
    @classmethod
    def from_terms(cls, variables, bounds, terms, kind=None) -> "TruncatedSeries":
        return cls(variables, bounds, terms, kind)

    @classmethod
    def zero(cls, variables, bounds, kind=None):
        return cls(variables, bounds, {}, kind)

    @classmethod
    def one(cls, variables, bounds, kind=None):
        variables = tuple(variables)
        return cls(variables, bounds, {(0,) * len(variables): 1}, kind)

    @classmethod
    def monomial(cls, coef, exponents: Mapping[str, int], variables, bounds):
        variables = tuple(variables)
        exps = tuple(exponents.get(v, 0) for v in variables)
        return cls(variables, bounds, {exps: coef})

    @classmethod
    def binomial_factor(cls, coef, exponents: Mapping[str, int], power: int, variables, bounds):
        """Expansion of (1 + coef * monomial)^power, ``power`` any integer."""
        variables = tuple(variables)
        if not isinstance(bounds, Mapping):
            bounds = dict(zip(variables, bounds))
        exps = tuple(exponents.get(v, 0) for v in variables)
        if not any(exps):
            raise ValueError("binomial factor needs a non-constant monomial")
        jmax = min(bounds[v] // e for v, e in zip(variables, exps) if e)
        terms = {}
        binom = 1  # generalized binomial C(power, j)
        c_pow = 1
        for j in range(jmax + 1):
            if j:
                binom = binom * (power - j + 1) // j  # exact: C(power, j) is an integer
                c_pow = c_pow * coef
            if binom == 0:
                break
            terms[tuple(e * j for e in exps)] = binom * c_pow
        return cls(variables, bounds, terms, _kind_or_none(coef))

    # -- basic access --------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def bound(self, var: str) -> int:
        return self.bounds[self.variables.index(var)]

    def _key(self, exps) -> tuple:
        if isinstance(exps, Mapping):
            extra = set(exps) - set(self.variables)
            if extra:
                raise KeyError(f"variables {sorted(extra)} not in series {self.variables}")
            exps = tuple(exps.get(v, 0) for v in self.variables)
        return tuple(exps)

    def coefficient(self, exps=None, **kw):
        """Coefficient at an exponent tuple, mapping, or keyword exponents
        (``s.coefficient(q=2, t=4)``); unnamed variables default to 0."""
        key = self._key(exps if exps is not None else kw)
        for e, b, v in zip(key, self.bounds, self.variables):
            if e > b:
                raise TruncationError(f"{v}^{e} lies beyond the truncation {v}<={b}")
        return self._terms.get(key, 0)

    def extract(self, var: str, k: int) -> "TruncatedSeries":
        """Coefficient of var^k, as a series in the remaining variables."""
        i = self.variables.index(var)
        if k > self.bounds[i]:
            raise TruncationError(f"{var}^{k} lies beyond the truncation {var}<={self.bounds[i]}")
        rest = self.variables[:i] + self.variables[i + 1:]
        bnds = self.bounds[:i] + self.bounds[i + 1:]
        terms = {e[:i] + e[i + 1:]: c for e, c in self._terms.items() if e[i] == k}
        return TruncatedSeries(rest, bnds, terms, self.kind)

    def substitute(self, var: str, value) -> "TruncatedSeries":
        """Evaluate ``var`` at a scalar; exact because the series is a
        polynomial in ``var`` below its bound."""
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        bnds = self.bounds[:i] + self.bounds[i + 1:]
        out: dict = {}
        powers = {}
        for e, c in self._terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k
            key = e[:i] + e[i + 1:]
            out[key] = out.get(key, 0) + c * powers[k]
        return TruncatedSeries(rest, bnds, out, join_kinds(self.kind, _kind_or_none(value)))

    def truncate(self, bounds: Mapping[str, int]) -> "TruncatedSeries":
        new = {v: min(b, bounds.get(v, b)) for v, b in zip(self.variables, self.bounds)}
        return TruncatedSeries(self.variables, new, self._terms, self.kind)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, self.bounds,
                               {e: fn(c) for e, c in self._terms.items()})

    def constant_term(self):
        return self._terms.get((0,) * len(self.variables), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if self.variables != other.variables or self.bounds != other.bounds:
            raise TruncationError(
                f"incompatible series: {dict(zip(self.variables, self.bounds))} vs "
                f"{dict(zip(other.variables, other.bounds))}")

    def _scalar_series(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, self.bounds, {(0,) * len(self.variables): c})

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self._scalar_series(other)
        self._check(other)
        kind = join_kinds(self.kind, other.kind)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return TruncatedSeries(self.variables, self.bounds, out, kind)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.variables, self.bounds,
                               {e: -c for e, c in self._terms.items()}, self.kind)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self._scalar_series(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            kind = join_kinds(self.kind, _kind_or_none(other))
            return TruncatedSeries(self.variables, self.bounds,
                                   {e: c * other for e, c in self._terms.items()}, kind)
        self._check(other)
        kind = join_kinds(self.kind, other.kind)
        bounds = self.bounds
        out: dict = {}
        b_items = list(other._terms.items())
        for ea, ca in self._terms.items():
            for eb, cb in b_items:
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(x > b for x, b in zip(e, bounds)):
                    continue
                p = ca * cb
                out[e] = out[e] + p if e in out else p
        return TruncatedSeries(self.variables, self.bounds, out, kind)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        c0 = self.constant_term()
        if _is_zero(c0):
            raise ZeroDivisionError("series with zero constant term is not a unit")
        inv0 = c0 if c0 in (1, -1) else 1 / (Fraction(c0) if isinstance(c0, int) else c0)
        one = TruncatedSeries.one(self.variables, self.bounds)
        h = one - self * inv0  # no constant term, hence nilpotent below the bounds
        g = one
        for _ in range(sum(self.bounds)):
            g = one + h * g
        return g * inv0

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = TruncatedSeries.one(self.variables, self.bounds, self.kind)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self._scalar_series(other)
        return (self.variables == other.variables and self.bounds == other.bounds
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.variables, self.bounds, frozenset(self._terms.items())))

    def __repr__(self):
        b = ", ".join(f"{v}<={n}" for v, n in zip(self.variables, self.bounds))
        return f"TruncatedSeries[{b}]({format_series(self)})"


def _kind_or_none(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return None
    return scalar_kind(c)


def series_product(factors: Iterable[TruncatedSeries]) -> TruncatedSeries:
    """Exact product of series sharing variables and truncation bounds."""
    factors = list(factors)
    if not factors:
        raise ValueError("series_product needs at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return acc


def format_monomial(variables, exps) -> str:
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_series(s: TruncatedSeries) -> str:
    if not len(s):
        return "0"
    out = []
    for exps, c in s.items():
        mono = format_monomial(s.variables, exps)
        cs = str(c)
        if not mono:
            out.append(cs)
        elif cs == "1":
            out.append(mono)
        else:
            out.append(f"({cs})*{mono}")
    return " + ".join(out)
