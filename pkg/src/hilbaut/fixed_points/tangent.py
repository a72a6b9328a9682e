"""Tangent spaces of the punctual Hilbert scheme at monomial ideals.

T_{I} Hilb = Hom_A(I, A/I) for A = C[x, y].  A homomorphism is fixed by the
images φ(x^i y^j) = Σ α^{u,v}_{i,j} x^u y^v of the minimal generators
(i, j) ∈ G(λ), (u, v) ∈ D(λ), subject to the first syzygies between
consecutive generators.  Everything splits by the Z^2-degree (u - i, v - j),
and the diagonal action (x, y) -> (ε1 x, ε2 y) scales a homomorphism of
degree (d1, d2) by ε1^{-d1} ε2^{-d2}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..algebra import CyclotomicNumber, root_of_unity
from ..errors import InputError
from ..surface import root_exponent
from .partitions import PartitionDiagram, diagram

__all__ = [
    "TangentWeightReport",
    "hom_degrees",
    "syzygy_constraints",
    "monomial_tangent_weights",
    "grid_criterion_nondegenerate",
    "curvilinear_fixed_directions",
    "local_weight",
    "is_one",
]

FLOAT_TOL = 1e-9


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = Fraction(rows[r][col]) / p[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rank += 1
    return rank


def syzygy_constraints(d: PartitionDiagram, degree: tuple[int, int]) -> tuple[list[int], list[list[int]]]:
    """Unknowns and linear constraints of Hom(I_λ, A/I_λ) in one Z^2-degree.

    Unknowns are the generator indices k with G_k + degree ∈ D(λ).  For
    consecutive generators G_k, G_{k+1} with lcm L_k the relation
    y^b G_k = x^a G_{k+1} forces, at the target cell L_k + degree ∈ D(λ),
    coefficient(α_k) - coefficient(α_{k+1}) = 0.
    """
    d1, d2 = degree
    gens = d.generators
    unknowns = [k for k, (i, j) in enumerate(gens) if d.contains(i + d1, j + d2)]
    col = {k: c for c, k in enumerate(unknowns)}
    rows = []
    for k in range(len(gens) - 1):
        (i0, j0), (i1, j1) = gens[k], gens[k + 1]
        lcm = (i0, j1)  # i0 > i1 and j1 > j0
        if not d.contains(lcm[0] + d1, lcm[1] + d2):
            continue
        row = [0] * len(unknowns)
        if k in col:
            row[col[k]] += 1
        if k + 1 in col:
            row[col[k + 1]] -= 1
        if any(row):
            rows.append(row)
    return unknowns, rows


@lru_cache(maxsize=None)
def hom_degrees(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Z^2-degrees of a homogeneous basis of Hom(I_λ, A/I_λ), with repetition,
    sorted."""
    d = diagram(parts)
    candidates = sorted({(u - i, v - j) for (i, j) in d.generators for (u, v) in d.cells})
    out = []
    for deg in candidates:
        unknowns, rows = syzygy_constraints(d, deg)
        dim = len(unknowns) - (_rank(rows) if rows else 0)
        out.extend([deg] * dim)
    return tuple(out)


def _root(eps) -> tuple[int, int] | None:
    if isinstance(eps, CyclotomicNumber):
        return root_exponent(eps)
    if isinstance(eps, int) and eps in (1, -1):
        return (0, 1) if eps == 1 else (1, 2)
    return None


def local_weight(eps1, eps2, d1: int, d2: int):
    """ε1^{d1} ε2^{d2} (exponents may be negative)."""
    r1, r2 = _root(eps1), _root(eps2)
    if r1 is not None and r2 is not None:
        (k1, m1), (k2, m2) = r1, r2
        m = m1 * m2 // gcd(m1, m2)
        return root_of_unity((d1 * k1 * (m // m1) + d2 * k2 * (m // m2)) % m, m)
    if isinstance(eps1, CyclotomicNumber) or isinstance(eps2, CyclotomicNumber):
        raise InputError(f"local eigenvalues ({eps1}, {eps2}) must be roots of unity", field="eps")
    return complex(eps1) ** d1 * complex(eps2) ** d2


def is_one(w) -> bool:
    if isinstance(w, complex):
        return abs(w - 1) < FLOAT_TOL
    return w == 1


@dataclass(frozen=True)
class TangentWeightReport:
    partition: tuple[int, ...]
    eps: tuple
    degrees: tuple[tuple[int, int], ...]
    weights: tuple
    degenerate: bool
    fixed_subspace_dim: int

    def weight_multiset(self) -> Counter:
        return Counter(self.weights)


def monomial_tangent_weights(parts, eps1, eps2) -> TangentWeightReport:
    parts = diagram(parts).parts
    degs = hom_degrees(parts)
    weights = tuple(local_weight(eps1, eps2, -a, -b) for a, b in degs)
    fixed = sum(1 for w in weights if is_one(w))
    return TangentWeightReport(parts, (eps1, eps2), degs, weights, fixed > 0, fixed)


def grid_criterion_nondegenerate(parts, eps1, eps2) -> bool:
    """Sufficient test: no generator (i, j) and cell (u, v) with
    ε1^{i-u} ε2^{j-v} = 1."""
    d = diagram(parts)
    exps = {(i - u, j - v) for (i, j) in d.generators for (u, v) in d.cells}
    return not any(is_one(local_weight(eps1, eps2, a, b)) for a, b in exps)


def curvilinear_fixed_directions(n: int, eps1, eps2) -> list[tuple[str, int]]:
    """Exponents i for which the curvilinear ideals (y + Σ α_i x^i, x^n)
    (axis 'xy') or (x + Σ α_i y^i, y^n) (axis 'yx') may carry α_i != 0 and
    stay fixed.  For n = 2 the whole pencil of length-2 subschemes is fixed
    iff ε1 = ε2, reported as [('all', 1)]."""
    if n < 2:
        raise InputError(f"curvilinear ideals need n >= 2, got {n}", field="n")
    if n == 2:
        return [("all", 1)] if is_one(local_weight(eps1, eps2, 1, -1)) else []
    out = [("xy", i) for i in range(1, n) if is_one(local_weight(eps1, eps2, i, -1))]
    out += [("yx", i) for i in range(1, n) if is_one(local_weight(eps1, eps2, -1, i))]
    return out
