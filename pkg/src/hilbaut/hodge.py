"""Twisted Hodge numbers h^{p,q}(S^[n], L_n) from those of (S, L).

For the q = 0 column the generating function is

    Σ_{n,p} h^{p,0}(S^[n], L_n) x^p t^n
        = (1 + x t)^{h10} / ((1 - t)^{h00} (1 - x^2 t)^{h20})

and the full table is predicted by the product

    Π_{k>=1} Π_{p,q} (1 - s x^{p+k-1} y^{q+k-1} t^k)^{-s h^{p,q}},  s = (-1)^{p+q},

which is proved for trivial L (Göttsche–Soergel) and at y = 0, and
conjectural otherwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .algebra import TruncatedSeries
from .errors import ConventionError, InputError

__all__ = [
    "HodgeRow",
    "HodgeTable",
    "hodge_p0_series",
    "h_top_minus_one",
    "aut_dimension",
    "conjectural_hodge_series",
    "coefficient_status",
    "hodge_grid",
]


@dataclass(frozen=True)
class HodgeRow:
    h00: int
    h10: int
    h20: int

    def __post_init__(self):
        if min(self.h00, self.h10, self.h20) < 0:
            raise InputError(f"Hodge numbers must be non-negative, got {tuple(self)}", field="hodge_row")

    def __iter__(self):
        return iter((self.h00, self.h10, self.h20))


@dataclass(frozen=True)
class HodgeTable:
    """``grid[p][q] = h^{p,q}(S, L)``."""

    grid: tuple[tuple[int, int, int], ...]
    untwisted: bool = False

    def __post_init__(self):
        grid = tuple(tuple(int(v) for v in row) for row in self.grid)
        if len(grid) != 3 or any(len(r) != 3 for r in grid) or any(v < 0 for r in grid for v in r):
            raise InputError("Hodge table must be a 3x3 grid of non-negative integers", field="hodge_table")
        object.__setattr__(self, "grid", grid)

    def row_q0(self) -> HodgeRow:
        return HodgeRow(self.grid[0][0], self.grid[1][0], self.grid[2][0])


def hodge_p0_series(row: HodgeRow, nmax: int, pmax: int | None = None) -> TruncatedSeries:
    """Coefficient of x^p t^n is h^{p,0}(S^[n], L_n)."""
    pmax = 2 * nmax if pmax is None else pmax
    v, b = ("t", "x"), {"t": nmax, "x": pmax}
    s = TruncatedSeries.one(v, b)
    if nmax == 0:
        return s
    s = s * TruncatedSeries.binomial_factor(1, {"x": 1, "t": 1}, row.h10, v, b)
    s = s * TruncatedSeries.binomial_factor(-1, {"t": 1}, -row.h00, v, b)
    s = s * TruncatedSeries.binomial_factor(-1, {"x": 2, "t": 1}, -row.h20, v, b)
    return s


def _closed_form(row: HodgeRow, n: int) -> int:
    # the x^{2n-1} t^n term needs one factor x t and n-1 factors x^2 t
    if n == 1:
        return row.h10
    top = row.h20 + n - 2
    return row.h10 * comb(top, n - 1) if top >= 0 else 0


def h_top_minus_one(row: HodgeRow, n: int) -> int:
    """h^{2n-1,0}(S^[n], L_n) = h10 * C(h20 + n - 2, n - 1), checked against
    the generating function."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}", field="n")
    value = _closed_form(row, n)
    from_series = hodge_p0_series(row, n, 2 * n - 1).coefficient(t=n, x=2 * n - 1)
    if value != from_series:
        raise ConventionError(f"closed form gives {value} but the series coefficient is {from_series} "
                              f"for row {tuple(row)}, n = {n}")
    return value


def aut_dimension(canonical_dual_row: HodgeRow, n: int) -> int:
    """dim Aut(S^[n]) = h^0(S^[n], T) = h^{2n-1,0}(S^[n], ω^∨), computed from
    the Hodge row of (S, ω_S^∨)."""
    if canonical_dual_row.h20 != 1:
        warnings.warn(f"h^2,0(S, ω^∨) = h^2,2(S) must be 1, got {canonical_dual_row.h20}; "
                      "the result is not the dimension of an automorphism group", stacklevel=2)
    return h_top_minus_one(canonical_dual_row, n)


def conjectural_hodge_series(table: HodgeTable, nmax: int, pmax: int | None = None,
                             qmax: int | None = None) -> TruncatedSeries:
    """Coefficient of x^p y^q t^n is the predicted h^{p,q}(S^[n], L_n)."""
    pmax = 2 * nmax if pmax is None else pmax
    qmax = 2 * nmax if qmax is None else qmax
    v, b = ("t", "x", "y"), {"t": nmax, "x": pmax, "y": qmax}
    acc = TruncatedSeries.one(v, b)
    for k in range(1, nmax + 1):
        for p in range(3):
            for q in range(3):
                h = table.grid[p][q]
                if not h:
                    continue
                s = (-1) ** (p + q)
                mono = {"x": p + k - 1, "y": q + k - 1, "t": k}
                acc = acc * TruncatedSeries.binomial_factor(-s, mono, -s * h, v, b)
    return acc


def coefficient_status(table: HodgeTable, q: int) -> str:
    """'proved' where the product is a theorem (q = 0, or L trivial),
    'conjectural' elsewhere."""
    return "proved" if q == 0 or table.untwisted else "conjectural"


def hodge_grid(series: TruncatedSeries, n: int) -> list[list[int]]:
    """Hodge diamond of S^[n] as grid[p][q], read off a conjectural series."""
    px, py = series.bound("x"), series.bound("y")
    size = 2 * n + 1
    return [[series.coefficient(t=n, x=p, y=q) if p <= px and q <= py else 0 for q in range(size)]
            for p in range(size)]
