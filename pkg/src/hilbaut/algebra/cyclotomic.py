"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Values are stored in the power basis 1, z, ..., z^(phi(m)-1) of
Q(zeta_m) = Q[z]/Phi_m(z), as an integer numerator vector over a common
positive denominator.  Every constructor and ring operation returns the
canonical form: reduced modulo Phi_m, in lowest terms, and moved down to the
smallest cyclotomic field containing the value.  Canonical conductors are
never congruent to 2 mod 4 (Q(zeta_2d) = Q(zeta_d) for odd d), so two values
are equal exactly when their (conductor, numerator, denominator) agree.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from numbers import Rational
from typing import Mapping, Sequence, Union

__all__ = [
    "CyclotomicNumber",
    "cyc_normalize",
    "cyc_as_integer",
    "root_of_unity",
    "cyclotomic_polynomial",
    "euler_phi",
]

Scalar = Union[int, Fraction]


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    result = m
    for p in _prime_factors(m):
        result -= result // p
    return result


def _canonical_conductor(m: int) -> int:
    return m // 2 if m % 4 == 2 else m


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; division is exact by construction
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e is z^e reduced modulo Phi_m, for 0 <= e < m (z^m = 1)."""
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _reduce_exponents(m: int, coeffs: Mapping[int, int]) -> list[int]:
    table = _power_table(m)
    out = [0] * euler_phi(m)
    for e, c in coeffs.items():
        if c:
            row = table[e % m]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


@lru_cache(maxsize=None)
def _galois_kernels(m: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """For each maximal proper cyclotomic subfield Q(zeta_d) of Q(zeta_m):
    (d, automorphism exponents k fixing it), with k != 1."""
    out = []
    for p in _prime_factors(m):
        d = _canonical_conductor(m // p)
        if d == m:
            continue
        ks = tuple(k for k in range(2, m) if k % d == 1 % d and gcd(k, m) == 1)
        out.append((d, ks))
    return tuple(out)


@lru_cache(maxsize=None)
def _descent_solver(m: int, d: int):
    """Rows and inverse matrix expressing an element of Q(zeta_d) inside
    Q(zeta_m) in the power basis of Q(zeta_d)."""
    table = _power_table(m)
    phi_m, phi_d = euler_phi(m), euler_phi(d)
    step = m // d
    cols = [table[(j * step) % m] for j in range(phi_d)]
    mat = [[Fraction(cols[j][i]) for j in range(phi_d)] for i in range(phi_m)]
    # pick phi_d independent rows greedily
    rows: list[int] = []
    basis: list[list[Fraction]] = []
    for i in range(phi_m):
        vec = list(mat[i])
        for b, piv in _with_pivots(basis):
            if vec[piv]:
                f = vec[piv] / b[piv]
                vec = [x - f * y for x, y in zip(vec, b)]
        if any(vec):
            rows.append(i)
            basis.append(vec)
        if len(rows) == phi_d:
            break
    sub = [mat[i] for i in rows]
    return tuple(rows), _invert(sub)


def _with_pivots(basis):
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        yield b, piv


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _apply_galois(m: int, num: Sequence[int], k: int) -> list[int]:
    return _reduce_exponents(m, {(j * k) % m: c for j, c in enumerate(num) if c})


def _descend(m: int, num: list[int]) -> tuple[int, list[int], int]:
    """Move num (over denominator 1) to the smallest conductor; returns
    (conductor, numerator, extra denominator)."""
    extra_den = 1
    while m > 1:
        if not any(num[1:]):
            return 1, [num[0]], extra_den
        for d, ks in _galois_kernels(m):
            if d == 1:
                continue  # covered by the rational fast path above
            if all(_apply_galois(m, num, k) == num for k in ks):
                rows, inv = _descent_solver(m, d)
                picked = [num[i] for i in rows]
                sol = [sum(a * b for a, b in zip(row, picked)) for row in inv]
                den = reduce(lambda a, b: a * b // gcd(a, b), (s.denominator for s in sol), 1)
                num = [int(s * den) for s in sol]
                extra_den *= den
                m = d
                break
        else:
            return m, num, extra_den
    return 1, [num[0]], extra_den


def _make(m: int, num: list[int], den: int) -> "CyclotomicNumber":
    m, num, extra = _descend(m, num)
    den *= extra
    g = reduce(gcd, num, den)
    if den < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
        den //= g
    obj = object.__new__(CyclotomicNumber)
    obj._m = m
    obj._num = tuple(num)
    obj._den = den
    return obj


def _lift(c: "CyclotomicNumber", m: int) -> list[int]:
    if c._m == m:
        return list(c._num)
    step = m // c._m
    return _reduce_exponents(m, {j * step: v for j, v in enumerate(c._num) if v})


class CyclotomicNumber:
    """An exact element of Q(zeta_m), zeta_m = exp(2*pi*i/m).

    Build values with :func:`root_of_unity`, :func:`cyc_normalize` or
    :meth:`from_rational`; integers and fractions mix freely with them.
    """

    __slots__ = ("_m", "_num", "_den")

    def __init__(self, value: Scalar = 0):
        r = Fraction(value)
        self._m = 1
        self._num = (r.numerator,)
        self._den = r.denominator

    @classmethod
    def from_rational(cls, value: Scalar) -> "CyclotomicNumber":
        return cls(value)

    @property
    def conductor(self) -> int:
        return self._m

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Power-basis coefficients (length phi(conductor))."""
        return tuple(Fraction(c, self._den) for c in self._num)

    # -- coercion -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CyclotomicNumber(Fraction(other))
        return None

    # -- ring operations -----------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._m == 1 and o._num[0] == 0:
            return self
        m = self._m * o._m // gcd(self._m, o._m)
        a, b = _lift(self, m), _lift(o, m)
        return _make(m, [x * o._den + y * self._den for x, y in zip(a, b)], self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(CyclotomicNumber)
        obj._m, obj._num, obj._den = self._m, tuple(-c for c in self._num), self._den
        return obj

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._m == 1:
            c = o._num[0]
            return _make(self._m, [x * c for x in self._num], self._den * o._den)
        if self._m == 1:
            return o * self
        m = self._m * o._m // gcd(self._m, o._m)
        a, b = _lift(self, m), _lift(o, m)
        prod: dict[int, int] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = prod.get(i + j, 0) + x * y
        return _make(m, _reduce_exponents(m, prod), self._den * o._den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta_m -> zeta_m^k (gcd(k, m) = 1)."""
        if gcd(k, self._m) != 1:
            raise ValueError(f"{k} is not a unit modulo {self._m}")
        return _make(self._m, _apply_galois(self._m, self._num, k), self._den)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_m) down to Q."""
        acc = CyclotomicNumber(1)
        for k in range(1, self._m + 1):
            if gcd(k, self._m) == 1:
                acc = acc * self.galois(k)
        return acc.as_rational()

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self._m == 1:
            return CyclotomicNumber(Fraction(self._den, self._num[0]))
        # product of the other conjugates over the norm
        acc = CyclotomicNumber(1)
        for k in range(2, self._m + 1):
            if gcd(k, self._m) == 1:
                acc = acc * self.galois(k)
        n = (acc * self).as_rational()
        return acc * Fraction(1) / n

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._m == 1:
            if o._num[0] == 0:
                raise ZeroDivisionError("division by zero")
            return _make(self._m, [x * o._den for x in self._num], self._den * o._num[0])
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = CyclotomicNumber(1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates and conversions -----------------------------------
    def is_zero(self) -> bool:
        return self._m == 1 and self._num[0] == 0

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self._m == 1

    def as_rational(self) -> Fraction | None:
        if self._m != 1:
            return None
        return Fraction(self._num[0], self._den)

    def as_integer(self) -> int | None:
        if self._m != 1 or self._den != 1:
            return None
        return self._num[0]

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self._m)
        return sum(c * z**j for j, c in enumerate(self._num)) / self._den

    def __abs__(self):
        return abs(complex(self))

    def terms(self) -> list[tuple[Fraction, int, int]]:
        """Nonzero (coefficient, k, m) triples with value sum(c * zeta_m^k)."""
        return [(Fraction(c, self._den), j, self._m) for j, c in enumerate(self._num) if c]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return False
            return NotImplemented
        return self._m == o._m and self._den == o._den and self._num == o._num

    def __hash__(self):
        if self._m == 1:
            return hash(Fraction(self._num[0], self._den))
        return hash((self._m, self._num, self._den))

    def __repr__(self):
        return f"CyclotomicNumber({self})"

    def __str__(self):
        if self._m == 1:
            return str(Fraction(self._num[0], self._den))
        parts = []
        for c, j, m in self.terms():
            mono = "1" if j == 0 else (f"z{m}" if j == 1 else f"z{m}^{j}")
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def root_of_unity(k: int, m: int) -> CyclotomicNumber:
    """exp(2*pi*i*k/m) as an exact cyclotomic number."""
    return cyc_normalize(m, {k: 1})


def cyc_normalize(m: int, coeffs: Mapping[int, Scalar] | Sequence[Scalar]) -> CyclotomicNumber:
    """Canonical form of sum(coeffs[k] * zeta_m^k).

    ``coeffs`` is either a mapping exponent -> rational or a dense sequence
    indexed by exponent.  Exponents may exceed m or be negative.
    """
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    if not isinstance(coeffs, Mapping):
        coeffs = dict(enumerate(coeffs))
    fr = {e: Fraction(c) for e, c in coeffs.items() if c}
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in fr.values()), 1)
    ints = {e: int(c * den) for e, c in fr.items()}
    if m % 4 == 2:
        d = m // 2
        moved: dict[int, int] = {}
        for e, c in ints.items():
            # zeta_{2d}^e = (-1)^e * zeta_d^(e*(d+1)/2)
            e2 = (e * ((d + 1) // 2)) % d
            moved[e2] = moved.get(e2, 0) + (c if e % 2 == 0 else -c)
        ints, m = moved, d
    return _make(m, _reduce_exponents(m, ints), den)


def cyc_as_integer(c: CyclotomicNumber | Scalar) -> int | None:
    """The integer equal to ``c``, or None if ``c`` is not an integer."""
    if isinstance(c, CyclotomicNumber):
        return c.as_integer()
    r = Fraction(c)
    return r.numerator if r.denominator == 1 else None
