"""Traces of the operator induced by an automorphism on the Fock space
``F = ⊕_n H*(S^[n])``.

The weight-n part of F has a basis of creation monomials
``q_{n_1}(u_1) ... q_{n_k}(u_k)|0>`` with ``Σ n_i = n``; if the ``u_i`` run
through an eigenbasis of ``f*`` the monomials are eigenvectors, so traces are
products over (weight, eigenvalue) of symmetric/exterior factors:

    Σ_n tr(f^[n]* | H*(S^[n])) q^n
        = Π_m Π_{i,j} (1 + λ_ij T q^m)^{[i odd]} (1 - λ_ij T q^m)^{-[i even]}

with ``T = t^(2(m-1)+i)`` ("shifted": q_m(u) raises cohomological degree by
2(m-1)+deg u) or ``T = t^i`` ("paper-literal").  Both agree at t = -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .algebra import CyclotomicNumber, TruncatedSeries, cyc_as_integer
from .errors import BoundExceeded, InputError, NonIntegralError
from .surface import AutomorphismSpec, SurfaceSpec, identity_spec

__all__ = [
    "DEGREE_MODES",
    "ENUMERATION_BOUND",
    "FockTraceOptions",
    "NakajimaBasisVector",
    "fock_trace_series",
    "weight_coefficient",
    "lefschetz_number",
    "poincare_series",
    "betti_numbers",
    "degree_modes_differ",
    "basis_size",
    "enumerate_basis",
    "vanishing_vectors",
    "induced_spectral_radius",
    "entropy",
]

DEGREE_MODES = ("shifted", "paper-literal")
ENUMERATION_BOUND = 10**7


@dataclass(frozen=True)
class FockTraceOptions:
    max_weight: int = 4
    degree_mode: str = "shifted"
    evaluate_t: object = None  # scalar substituted for t, or None to keep t

    def __post_init__(self):
        if self.max_weight < 0:
            raise InputError(f"max_weight must be >= 0, got {self.max_weight}", field="max_weight")
        if self.degree_mode not in DEGREE_MODES:
            raise InputError(f"degree mode must be one of {DEGREE_MODES}, got {self.degree_mode!r}",
                             field="degree_mode")


def _t_exponent(mode: str, m: int, i: int) -> int:
    return 2 * (m - 1) + i if mode == "shifted" else i


def fock_trace_series(spec: AutomorphismSpec, opt: FockTraceOptions) -> TruncatedSeries:
    """Graded trace generating function; a series in (q, t), or in q alone
    when ``opt.evaluate_t`` is set."""
    nmax = opt.max_weight
    groups = spec.spectrum.grouped()
    if opt.evaluate_t is None:
        variables = ("q", "t")
        bounds = {"q": nmax, "t": 4 * nmax}
    else:
        variables, bounds = ("q",), {"q": nmax}
    acc = TruncatedSeries.one(variables, bounds)
    for m in range(1, nmax + 1):
        for i, lam, mult in groups:
            e = _t_exponent(opt.degree_mode, m, i)
            odd = i % 2 == 1
            if opt.evaluate_t is None:
                coef, mono = lam, {"q": m, "t": e}
            else:
                coef, mono = lam * opt.evaluate_t**e, {"q": m}
            if odd:
                acc = acc * TruncatedSeries.binomial_factor(coef, mono, mult, variables, bounds)
            else:
                acc = acc * TruncatedSeries.binomial_factor(-coef, mono, -mult, variables, bounds)
    return acc


def weight_coefficient(spec: AutomorphismSpec, n: int, degree_mode: str = "shifted") -> TruncatedSeries:
    """The q^n coefficient as a polynomial in t."""
    return fock_trace_series(spec, FockTraceOptions(n, degree_mode)).extract("q", n)


def _require_finite(spec: AutomorphismSpec, what: str):
    if spec.order is None:
        raise InputError(f"{what} needs an automorphism of finite order", field="automorphism.order")


def lefschetz_number(spec: AutomorphismSpec, n: int) -> int:
    """Σ_k (-1)^k tr(f^[n]* | H^k(S^[n])), certified to be an integer."""
    _require_finite(spec, "the Lefschetz number")
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}", field="n")
    s = fock_trace_series(spec, FockTraceOptions(n, "shifted", evaluate_t=-1))
    c = s.coefficient(q=n)
    value = cyc_as_integer(c)
    if value is None:
        raise NonIntegralError(f"trace at weight {n} evaluates to {c}, which is not an integer; "
                               "the spectrum is not closed under Galois conjugation")
    return value


def poincare_series(surface: SurfaceSpec, nmax: int) -> TruncatedSeries:
    """Σ_n P(S^[n], t) q^n from the Betti numbers of S."""
    return fock_trace_series(identity_spec(surface), FockTraceOptions(nmax, "shifted"))


def betti_numbers(surface: SurfaceSpec, n: int) -> list[int]:
    """b_0 .. b_{4n} of S^[n]."""
    coeff = poincare_series(surface, n).extract("q", n)
    return [cyc_as_integer(coeff.coefficient(t=k)) for k in range(4 * n + 1)]


def degree_modes_differ(spec: AutomorphismSpec, n: int) -> bool:
    return weight_coefficient(spec, n, "shifted") != weight_coefficient(spec, n, "paper-literal")


# --- explicit basis ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class NakajimaBasisVector:
    """q_{n_1}(u_{j_1}) ... q_{n_k}(u_{j_k})|0>; ``parts`` holds sorted
    (weight n_i, label j_i) pairs, label j indexing the eigenbasis of H*(S)
    in spectrum order."""

    parts: tuple[tuple[int, int], ...]

    @property
    def weight(self) -> int:
        return sum(m for m, _ in self.parts)

    def is_zero(self, labels: list[tuple[int, object]]) -> bool:
        seen = set()
        for m, j in self.parts:
            if labels[j][0] % 2 == 1:
                if (m, j) in seen:
                    return True
                seen.add((m, j))
        return False

    def degree(self, labels: list[tuple[int, object]]) -> int:
        return sum(2 * (m - 1) + labels[j][0] for m, j in self.parts)

    def eigenvalue(self, labels: list[tuple[int, object]]):
        value = 1
        for _, j in self.parts:
            value = value * labels[j][1]
        return value

    def describe(self, labels: list[tuple[int, object]]) -> str:
        if not self.parts:
            return "|0>"
        return " ".join(f"q_{m}(u{j}:H^{labels[j][0]})" for m, j in self.parts) + "|0>"


def _counting_series(n: int, n_even: int, n_odd: int) -> TruncatedSeries:
    acc = TruncatedSeries.one(("q",), {"q": n})
    for m in range(1, n + 1):
        if n_even:
            acc = acc * TruncatedSeries.binomial_factor(-1, {"q": m}, -n_even, ("q",), {"q": n})
        if n_odd:
            acc = acc * TruncatedSeries.binomial_factor(1, {"q": m}, n_odd, ("q",), {"q": n})
    return acc


def basis_size(spec: AutomorphismSpec, n: int, include_vanishing: bool = False) -> int:
    """Number of creation monomials of weight n.  With ``include_vanishing``
    the monomials repeating an odd label at equal weight are counted too."""
    dims = spec.spectrum.dims
    n_odd = sum(d for i, d in enumerate(dims) if i % 2)
    n_even = sum(dims) - n_odd
    if include_vanishing:
        return _counting_series(n, n_even + n_odd, 0).coefficient(q=n)
    return _counting_series(n, n_even, n_odd).coefficient(q=n)


def _monomials(n: int, count: int, odd: list[bool], keep_zero: bool) -> Iterator[tuple]:
    slots = [(m, j) for m in range(1, n + 1) for j in range(count)]

    def rec(start: int, remaining: int, prefix: list):
        if remaining == 0:
            yield tuple(prefix)
            return
        for s in range(start, len(slots)):
            m, j = slots[s]
            if m > remaining:
                break
            nxt = s + 1 if (odd[j] and not keep_zero) else s
            prefix.append((m, j))
            yield from rec(nxt, remaining - m, prefix)
            prefix.pop()

    yield from rec(0, n, [])


def _labels(spec: AutomorphismSpec) -> list[tuple[int, object]]:
    return list(spec.spectrum)


def enumerate_basis(spec: AutomorphismSpec, n: int,
                    bound: int = ENUMERATION_BOUND) -> list[tuple[NakajimaBasisVector, object, int]]:
    """(vector, eigenvalue, cohomological degree) for every nonzero creation
    monomial of weight n."""
    size = basis_size(spec, n)
    if size > bound:
        raise BoundExceeded(f"weight {n} has {size} basis vectors, above the bound {bound}")
    labels = _labels(spec)
    odd = [i % 2 == 1 for i, _ in labels]
    out = []
    for parts in _monomials(n, len(labels), odd, keep_zero=False):
        v = NakajimaBasisVector(parts)
        out.append((v, v.eigenvalue(labels), v.degree(labels)))
    return out


def vanishing_vectors(spec: AutomorphismSpec, n: int,
                      bound: int = ENUMERATION_BOUND) -> list[NakajimaBasisVector]:
    """Monomials excluded from the basis because an odd-degree class is
    repeated at the same weight (odd creation operators anticommute)."""
    size = basis_size(spec, n, include_vanishing=True)
    if size > bound:
        raise BoundExceeded(f"weight {n} has {size} monomials, above the bound {bound}")
    labels = _labels(spec)
    odd = [i % 2 == 1 for i, _ in labels]
    vectors = (NakajimaBasisVector(p) for p in _monomials(n, len(labels), odd, keep_zero=True))
    return [v for v in vectors if v.is_zero(labels)]


def induced_spectral_radius(spec: AutomorphismSpec, n: int) -> float:
    """Largest |eigenvalue| of f^[n]* on H*(S^[n])."""
    if not len(spec.spectrum):
        raise InputError("spectrum is empty", field="automorphism.spectrum")
    return max(_modulus(lam) for _, lam, _ in enumerate_basis(spec, n))


def _modulus(lam) -> float:
    if isinstance(lam, CyclotomicNumber):
        sq = (lam * lam.conjugate()).as_rational()
        if sq is not None:
            return math.sqrt(sq)
    return abs(complex(lam))


def entropy(spec: AutomorphismSpec, n: int) -> float:
    """log of the spectral radius; n times the entropy of f."""
    return math.log(induced_spectral_radius(spec, n))

