"""Fixed components of f^[n] assembled from the local data of f.

A fixed subscheme of length n is a disjoint union of pieces, each supported
on a fixed point or on a periodic orbit of f:

* a reduced fixed point (length 1, tangent weights ε1, ε2);
* a monomial thick point I_λ at a fixed point (length |λ|);
* a family of fixed curvilinear thick points at a fixed point;
* a reduced periodic orbit of period k (length k);
* the orbit of a thick point of length ℓ along a period-k orbit (length kℓ).

Pieces at distinct sites have disjoint supports, so the tangent space of the
union splits as the direct sum and weights concatenate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..errors import BoundExceeded, InputError, SpecValidationError
from ..fock import lefschetz_number
from ..surface import AutomorphismSpec, LocalFixedDatum, Violation, validate_datum
from .partitions import partitions
from .tangent import curvilinear_fixed_directions, is_one, monomial_tangent_weights

__all__ = [
    "ENUMERATION_MAX_N",
    "KINDS",
    "Piece",
    "FixedComponent",
    "Crosscheck",
    "FixedLocusReport",
    "site_pieces",
    "enumerate_fixed_components",
]

ENUMERATION_MAX_N = 6

# highest priority first: a component is named after its most special piece
KINDS = ("thick-orbit-family", "periodic-orbit-family", "curvilinear-family",
         "monomial-thick", "reduced-assembly")
_PIECE_KIND = {
    "reduced": "reduced-assembly",
    "monomial": "monomial-thick",
    "curvilinear": "curvilinear-family",
    "orbit": "periodic-orbit-family",
    "thick-orbit": "thick-orbit-family",
}


@dataclass(frozen=True, order=True)
class Piece:
    site: str
    kind: str  # reduced | monomial | curvilinear | orbit | thick-orbit
    length: int
    detail: str
    dimension: int
    fixed_subspace_dim: int
    weights: tuple | None = field(default=None, compare=False)

    def describe(self) -> str:
        return f"{self.kind}[{self.detail}]@{self.site}" if self.detail else f"{self.kind}@{self.site}"


@dataclass(frozen=True)
class FixedComponent:
    kind: str
    pieces: tuple[Piece, ...]
    length: int
    dimension: int
    degenerate: bool | None  # only meaningful when dimension == 0
    fixed_subspace_dim: int | None
    weights: tuple | None

    @property
    def description(self) -> str:
        return " + ".join(p.describe() for p in self.pieces)

    @property
    def isolated(self) -> bool:
        return self.dimension == 0

    @property
    def isolated_nondegenerate(self) -> bool:
        return self.dimension == 0 and self.degenerate is False


@dataclass(frozen=True)
class Crosscheck:
    lefschetz: int
    isolated_nondegenerate: int
    declared_remainder: int | None
    enumerated_total: int
    remainder: int
    status: str  # agree | disagree | unreconciled
    reference: int | None
    reference_agrees: bool | None


@dataclass(frozen=True)
class FixedLocusReport:
    n: int
    components: tuple[FixedComponent, ...]
    isolated_nondegenerate_count: int
    crosscheck: Crosscheck
    notes: tuple[str, ...] = ()

    def count_by_kind(self) -> dict[str, int]:
        return dict(Counter(c.kind for c in self.components))

    @property
    def degenerate_isolated_count(self) -> int:
        return sum(1 for c in self.components if c.dimension == 0 and c.degenerate)

    @property
    def positive_dimensional_count(self) -> int:
        return sum(1 for c in self.components if c.dimension > 0)


def _point_pieces(label: str, eps1, eps2, length: int) -> list[Piece]:
    if length == 1:
        w = (eps1, eps2)
        fixed = sum(1 for x in w if is_one(x))
        return [Piece(label, "reduced", 1, "", 0, fixed, w)]
    out = []
    for lam in partitions(length):
        rep = monomial_tangent_weights(lam, eps1, eps2)
        detail = "lambda=(" + ",".join(map(str, lam)) + ")"
        out.append(Piece(label, "monomial", length, detail, 0, rep.fixed_subspace_dim, rep.weights))
    hits = curvilinear_fixed_directions(length, eps1, eps2)
    for axis in ("all", "xy", "yx"):
        exps = [i for a, i in hits if a == axis]
        if exps:
            detail = f"axis={axis},i={'/'.join(map(str, exps))}"
            out.append(Piece(label, "curvilinear", length, detail, len(exps), 0))
    return out


def _orbit_pieces(label: str, period: int, moving: bool, length: int) -> list[Piece]:
    if length % period:
        return []
    ell = length // period
    detail = f"period={period}" if ell == 1 else f"period={period},thick={ell}"
    if ell == 1:
        # reduced orbit: ker(T - id) is 2-dimensional
        return [Piece(label, "orbit", length, detail, 2 if moving else 0, 2)]
    # orbit of a thick point of length ell: B_ell(x) has dimension ell - 1,
    # plus 2 when the base point moves
    return [Piece(label, "thick-orbit", length, detail, ell + 1 if moving else ell - 1, 0)]


def site_pieces(datum: LocalFixedDatum, n: int):
    """Per-site option lists: (site label, reusable, {length: pieces})."""
    sites = []
    for pt in datum.isolated_points:
        sites.append((pt.label, False,
                      {ell: _point_pieces(pt.label, pt.eps1, pt.eps2, ell) for ell in range(1, n + 1)}))
    for orb in datum.periodic_orbits:
        opts = {ell: _orbit_pieces(orb.label, orb.period, not orb.isolated, ell)
                for ell in range(orb.period, n + 1)}
        sites.append((orb.label, not orb.isolated, opts))
    return sites


def _assemblies(sites, n: int):
    """Multisets of pieces of total length n, at most one piece per
    non-reusable site."""
    def rec(k: int, remaining: int, chosen: list):
        if remaining == 0:
            yield tuple(chosen)
            return
        if k == len(sites):
            return
        _, reusable, options = sites[k]
        yield from rec(k + 1, remaining, chosen)
        for ell in sorted(options):
            if ell > remaining:
                break
            for piece in options[ell]:
                chosen.append(piece)
                if reusable:
                    yield from _reuse(k, piece, remaining - ell, chosen)
                else:
                    yield from rec(k + 1, remaining - ell, chosen)
                chosen.pop()

    def _reuse(k: int, last: Piece, remaining: int, chosen: list):
        # further orbits from the same moving family, in non-decreasing order
        yield from rec(k + 1, remaining, chosen)
        _, _, options = sites[k]
        for ell in sorted(options):
            if ell > remaining:
                break
            for piece in options[ell]:
                if piece < last:
                    continue
                chosen.append(piece)
                yield from _reuse(k, piece, remaining - ell, chosen)
                chosen.pop()

    yield from rec(0, n, [])


def _component(pieces: tuple[Piece, ...]) -> FixedComponent:
    kind = min((_PIECE_KIND[p.kind] for p in pieces), key=KINDS.index)
    dim = sum(p.dimension for p in pieces)
    length = sum(p.length for p in pieces)
    if dim:
        return FixedComponent(kind, pieces, length, dim, None, None, None)
    fixed = sum(p.fixed_subspace_dim for p in pieces)
    if all(p.weights is not None for p in pieces):
        weights = tuple(w for p in pieces for w in p.weights)
    else:
        weights = None
    return FixedComponent(kind, pieces, length, 0, fixed > 0, fixed, weights)


def _check_orders(datum: LocalFixedDatum, spec: AutomorphismSpec):
    if spec.order is None:
        raise InputError("fixed-point enumeration needs an automorphism of finite order",
                         field="automorphism.order")
    violations, warnings = validate_datum(datum, spec)
    for orb in datum.periodic_orbits:
        if spec.order % orb.period:
            violations.append(Violation(None, "period",
                                        f"orbit {orb.label}: period {orb.period} does not divide "
                                        f"the order {spec.order}"))
    if violations:
        raise SpecValidationError(violations)
    return warnings


def enumerate_fixed_components(datum: LocalFixedDatum, n: int, spec: AutomorphismSpec,
                               max_n: int = ENUMERATION_MAX_N) -> FixedLocusReport:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}", field="n")
    if n > max_n:
        raise BoundExceeded(f"fixed-point enumeration is limited to n <= {max_n}, got {n}")
    notes = list(_check_orders(datum, spec))
    components = [_component(p) for p in _assemblies(site_pieces(datum, n), n)]
    components.sort(key=lambda c: (KINDS.index(c.kind), c.description))
    nondeg = sum(1 for c in components if c.isolated_nondegenerate)
    unresolved = any(not c.isolated_nondegenerate for c in components) or bool(datum.fixed_loci)

    lef = lefschetz_number(spec, n)
    declared = [d for d in datum.declared_loci if d.n == n]
    declared_total = sum(d.euler_characteristic for d in declared) if declared else None
    if not unresolved:
        total = nondeg
        status = "agree" if total == lef else "disagree"
    elif declared_total is not None:
        total = nondeg + declared_total
        status = "agree" if total == lef else "disagree"
        notes += [f"positive-dimensional locus: {d.label}, Euler characteristic "
                  f"{d.euler_characteristic} (declared)" for d in declared]
    else:
        total = nondeg
        status = "unreconciled"
        notes.append(f"degenerate or positive-dimensional components present; their Euler "
                     f"characteristics are not computed (remainder {lef - nondeg})")
    for loc in datum.fixed_loci:
        notes.append(f"fixed locus of f not enumerated: {loc.label} (dimension {loc.dimension})")
    if n >= 4 and any(c.kind in ("monomial-thick", "curvilinear-family") for c in components):
        notes.append("for n >= 4 fixed thick points need not be monomial or curvilinear; "
                     "only those two types are enumerated")

    ref = datum.reference_counts.get(n)
    ref_ok = None if ref is None else ref == nondeg
    if ref is not None and not ref_ok:
        notes.append(f"published isolated fixed point count {ref} differs from the enumerated "
                     f"{nondeg} (trace formula: {lef})")
    notes += list(datum.notes)
    check = Crosscheck(lef, nondeg, declared_total, total, lef - total, status, ref, ref_ok)
    return FixedLocusReport(n, tuple(components), nondeg, check, tuple(notes))
