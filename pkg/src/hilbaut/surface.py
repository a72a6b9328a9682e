"""Surfaces, automorphism spectra and local fixed-point data.

An :class:`AutomorphismSpec` records the graded spectrum of ``f*`` on
``H^0..H^4`` of a compact surface; a :class:`LocalFixedDatum` records what is
known about ``f`` near its fixed and periodic points.  Both are plain frozen
values; :func:`preset` returns the shipped examples and
:func:`load_document` / :func:`dump_document` convert to and from the JSON
input format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

from .algebra import CyclotomicNumber, GradedEigenvalues, root_of_unity
from .errors import InputError

__all__ = [
    "SurfaceSpec",
    "AutomorphismSpec",
    "IsolatedPoint",
    "PeriodicOrbit",
    "FixedLocusNote",
    "LocalFixedDatum",
    "Violation",
    "PRESETS",
    "preset",
    "validate",
    "validate_datum",
    "lefschetz_on_surface",
    "identity_spec",
    "load_document",
    "dump_document",
    "root_exponent",
    "complex_spectrum",
    "DeclaredLocus",
]


@dataclass(frozen=True)
class SurfaceSpec:
    name: str
    betti: tuple[int, int, int, int, int]
    # label -> (h^{0,0}, h^{1,0}, h^{2,0}) of (S, L)
    hodge_rows: Mapping[str, tuple[int, int, int]] = field(default_factory=dict)
    # label -> 3x3 grid h^{p,q}(S, L), indexed [p][q]
    hodge_tables: Mapping[str, tuple[tuple[int, ...], ...]] = field(default_factory=dict)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))


@dataclass(frozen=True)
class AutomorphismSpec:
    surface: SurfaceSpec
    order: int | None  # None for infinite order
    spectrum: GradedEigenvalues
    symplectic: bool = False

    @property
    def finite(self) -> bool:
        return self.order is not None


@dataclass(frozen=True)
class IsolatedPoint:
    label: str
    eps1: CyclotomicNumber
    eps2: CyclotomicNumber


@dataclass(frozen=True)
class PeriodicOrbit:
    """A periodic orbit of f.  ``isolated=False`` stands for a continuous
    family of such orbits (e.g. all free orbits of a finite group action)."""

    label: str
    period: int
    isolated: bool = False


@dataclass(frozen=True)
class FixedLocusNote:
    """A positive-dimensional piece of Fix(f), kept opaque."""

    label: str
    dimension: int
    euler_characteristic: int | None = None


@dataclass(frozen=True)
class DeclaredLocus:
    """Known Euler characteristic of the positive-dimensional part of
    Fix(f^[n]), supplied as data rather than computed."""

    n: int
    label: str
    euler_characteristic: int


@dataclass(frozen=True)
class LocalFixedDatum:
    isolated_points: tuple[IsolatedPoint, ...] = ()
    periodic_orbits: tuple[PeriodicOrbit, ...] = ()
    fixed_loci: tuple[FixedLocusNote, ...] = ()
    declared_loci: tuple[DeclaredLocus, ...] = ()
    # published isolated fixed point counts of f^[n], quoted in reports
    reference_counts: Mapping[int, int] = field(default_factory=dict)
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Violation:
    degree: int | None
    rule: str
    message: str

    def __str__(self):
        where = f"H^{self.degree}" if self.degree is not None else "spec"
        return f"{where} [{self.rule}]: {self.message}"


# --- presets ---------------------------------------------------------------

K3 = SurfaceSpec(
    name="K3",
    betti=(1, 0, 22, 0, 1),
    hodge_rows={"trivial": (1, 0, 1), "canonical-dual": (1, 0, 1)},
    hodge_tables={"trivial": ((1, 0, 1), (0, 20, 0), (1, 0, 1))},
)

TORUS = SurfaceSpec(
    name="complex torus",
    betti=(1, 4, 6, 4, 1),
    hodge_rows={"trivial": (1, 2, 1), "canonical-dual": (1, 2, 1)},
    hodge_tables={"trivial": ((1, 2, 1), (2, 4, 2), (1, 2, 1))},
)

# order p -> (mult. of 1 on H^2, mult. of each primitive p-th root, fixed points)
_K3_SYMPLECTIC = {3: (10, 6, 6), 5: (6, 4, 4), 7: (4, 3, 3)}
_K3_REFERENCE = {3: {1: 6, 2: 27}, 5: {1: 4, 2: 14, 3: 36}, 7: {1: 3, 2: 9}}

_LOCAL_TYPE_NOTE = ("local eigenvalues (zeta_p, zeta_p^-1) assumed at every isolated fixed point; "
                    "the actual distribution of local types is not part of the input data")


def identity_spec(surface: SurfaceSpec) -> AutomorphismSpec:
    one = CyclotomicNumber(1)
    spectrum = GradedEigenvalues(tuple((one,) * b for b in surface.betti))
    return AutomorphismSpec(surface, 1, spectrum)


def _k3_symplectic(p: int):
    a, b, m = _K3_SYMPLECTIC[p]
    one = CyclotomicNumber(1)
    h2 = [one] * a
    for i in range(1, p):
        h2 += [root_of_unity(i, p)] * b
    spec = AutomorphismSpec(K3, p, GradedEigenvalues(((one,), (), tuple(h2), (), (one,))),
                            symplectic=True)
    z, zinv = root_of_unity(1, p), root_of_unity(p - 1, p)
    datum = LocalFixedDatum(
        isolated_points=tuple(IsolatedPoint(f"P{k + 1}", z, zinv) for k in range(m)),
        periodic_orbits=(PeriodicOrbit("free orbits", p, isolated=False),),
        reference_counts=_K3_REFERENCE[p],
        notes=(_LOCAL_TYPE_NOTE,),
    )
    return spec, datum


def _torus_involution():
    one, minus = CyclotomicNumber(1), CyclotomicNumber(-1)
    spectrum = GradedEigenvalues(((one,), (minus,) * 4, (one,) * 6, (minus,) * 4, (one,)))
    spec = AutomorphismSpec(TORUS, 2, spectrum, symplectic=True)
    datum = LocalFixedDatum(
        isolated_points=tuple(IsolatedPoint(f"P{k + 1}", minus, minus) for k in range(16)),
        periodic_orbits=(PeriodicOrbit("free orbits", 2, isolated=False),),
        declared_loci=(DeclaredLocus(2, "Kummer surface (closure of the free 2-orbits)", 24),),
        reference_counts={1: 16, 2: 120},
    )
    return spec, datum


def _identity(surface: SurfaceSpec):
    datum = LocalFixedDatum(
        fixed_loci=(FixedLocusNote("whole surface", 2, surface.euler_characteristic),),
        notes=("f = id: every subscheme is fixed",),
    )
    return identity_spec(surface), datum


PRESETS = {
    "k3-identity": lambda: _identity(K3),
    "k3-symplectic-3": lambda: _k3_symplectic(3),
    "k3-symplectic-5": lambda: _k3_symplectic(5),
    "k3-symplectic-7": lambda: _k3_symplectic(7),
    "torus-involution": _torus_involution,
    "torus-identity": lambda: _identity(TORUS),
}


@lru_cache(maxsize=None)
def preset(name: str) -> tuple[AutomorphismSpec, LocalFixedDatum]:
    try:
        return PRESETS[name]()
    except KeyError:
        raise InputError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}",
                         field="preset") from None


# --- validation ------------------------------------------------------------

def _has_order_dividing(lam, m: int) -> bool:
    if isinstance(lam, complex):
        return abs(lam**m - 1) < 1e-9
    return lam**m == 1


def validate(spec: AutomorphismSpec) -> list[Violation]:
    """All invariant violations of ``spec``; empty when it is well formed."""
    out = []
    b = spec.surface.betti
    if len(b) != 5 or any(x < 0 for x in b):
        out.append(Violation(None, "betti", f"need five non-negative Betti numbers, got {b}"))
        return out
    if b[0] != 1 or b[4] != 1:
        out.append(Violation(None, "connected", f"b_0 = b_4 = 1 required, got {b[0]}, {b[4]}"))
    if b[1] != b[3]:
        out.append(Violation(None, "poincare-duality", f"b_1 = b_3 required, got {b[1]}, {b[3]}"))
    levels = spec.spectrum.levels
    if len(levels) > 5:
        extra = [i for i in range(5, len(levels)) if levels[i]]
        for i in extra:
            out.append(Violation(i, "degree-range", "eigenvalues above degree 4"))
    for i in range(5):
        n = len(levels[i]) if i < len(levels) else 0
        if n != b[i]:
            out.append(Violation(i, "dimension", f"{n} eigenvalues but b_{i} = {b[i]}"))
    if spec.order is not None:
        if spec.order < 1:
            out.append(Violation(None, "order", f"order must be positive, got {spec.order}"))
            return out
        for i, lv in enumerate(levels):
            bad = [lam for lam in set(lv) if not _has_order_dividing(lam, spec.order)]
            if bad:
                out.append(Violation(i, "eigenvalue-order",
                                     f"eigenvalue(s) {', '.join(map(str, bad))} are not "
                                     f"roots of unity of order dividing {spec.order}"))
    return out


def validate_datum(datum: LocalFixedDatum, spec: AutomorphismSpec) -> tuple[list[Violation], list[str]]:
    """(violations, warnings) for local data against the automorphism."""
    violations, warnings = [], []
    for pt in datum.isolated_points:
        for name, eps in (("eps1", pt.eps1), ("eps2", pt.eps2)):
            if spec.order is None or not _has_order_dividing(eps, spec.order):
                violations.append(Violation(None, "local-order",
                                            f"{pt.label}.{name} = {eps} is not a root of unity of "
                                            f"order dividing {spec.order}"))
        if spec.symplectic and pt.eps1 * pt.eps2 != 1:
            warnings.append(f"{pt.label}: eps1*eps2 = {pt.eps1 * pt.eps2} != 1 for a symplectic automorphism")
    for orb in datum.periodic_orbits:
        if orb.period < 2:
            violations.append(Violation(None, "period", f"orbit {orb.label}: period must be >= 2"))
    return violations, warnings


def lefschetz_on_surface(spec: AutomorphismSpec):
    """Alternating sum of the traces of f* on H^0..H^4."""
    total = 0
    for i, lam in spec.spectrum:
        total = total + (lam if i % 2 == 0 else -lam)
    return total


# --- JSON document format ----------------------------------------------------

@lru_cache(maxsize=4096)
def root_exponent(c: CyclotomicNumber) -> tuple[int, int] | None:
    """(k, m) in lowest terms with c = exp(2 pi i k/m), or None."""
    m = c.conductor
    n = m if m % 2 == 0 else 2 * m
    for k in range(n):
        if root_of_unity(k, n) == c:
            g = gcd(k, n)
            return (k // g, n // g)
    return None


def _parse_root(value, where: str) -> CyclotomicNumber:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        raise InputError(f"expected a root of unity [k, m] with integers, got {value!r}", field=where)
    k, m = value
    if m < 1:
        raise InputError(f"root of unity needs m >= 1, got {m}", field=where)
    return root_of_unity(k, m)


def _parse_complex(value, where: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        raise InputError(f"expected a complex number [re, im], got {value!r}", field=where)
    return complex(value[0], value[1])


def _int_list(value, n: int | None, where: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InputError(f"expected a list of integers, got {value!r}", field=where)
    if n is not None and len(value) != n:
        raise InputError(f"expected {n} integers, got {len(value)}", field=where)
    return tuple(value)


def _require(doc: Mapping, key: str, where: str):
    if not isinstance(doc, Mapping) or key not in doc:
        raise InputError(f"missing key {key!r}", field=where)
    return doc[key]


def load_document(doc: Mapping) -> tuple[AutomorphismSpec, LocalFixedDatum]:
    """Parse an input document (already decoded from JSON).

    A document produced by the CLI's json output is accepted too: its
    embedded ``request.input`` is used.
    """
    if not isinstance(doc, Mapping):
        raise InputError("input document must be a JSON object")
    if "request" in doc and isinstance(doc["request"], Mapping) and "input" in doc["request"]:
        doc = doc["request"]["input"]
    if "preset" in doc:
        if not isinstance(doc["preset"], str):
            raise InputError("preset name must be a string", field="preset")
        return preset(doc["preset"])

    surf = _require(doc, "surface", "document")
    betti = _int_list(_require(surf, "betti", "surface"), 5, "surface.betti")
    rows = {}
    for label, row in (surf.get("hodge_row") or {}).items():
        rows[label] = _int_list(row, 3, f"surface.hodge_row.{label}")
    tables = {}
    for label, grid in (surf.get("hodge_table") or {}).items():
        if not isinstance(grid, list) or len(grid) != 3:
            raise InputError("expected a 3x3 grid", field=f"surface.hodge_table.{label}")
        tables[label] = tuple(_int_list(r, 3, f"surface.hodge_table.{label}") for r in grid)
    surface = SurfaceSpec(surf.get("name", "surface"), betti, rows, tables)

    aut = _require(doc, "automorphism", "document")
    order = aut.get("order")
    if order in ("infinite", "inf"):
        order = None
    if order is not None and (not isinstance(order, int) or isinstance(order, bool) or order < 1):
        raise InputError(f"order must be a positive integer or 'infinite', got {order!r}",
                         field="automorphism.order")
    spec_raw = _require(aut, "spectrum", "automorphism")
    if not isinstance(spec_raw, Mapping):
        raise InputError("spectrum must map degrees to eigenvalue lists", field="automorphism.spectrum")
    by_degree: dict[int, list] = {}
    for key, values in spec_raw.items():
        try:
            deg = int(key)
        except (TypeError, ValueError):
            raise InputError(f"degree key {key!r} is not an integer", field="automorphism.spectrum") from None
        if deg < 0 or deg > 4:
            raise InputError(f"degree {deg} outside 0..4", field="automorphism.spectrum")
        if not isinstance(values, list):
            raise InputError("expected a list of eigenvalues", field=f"automorphism.spectrum.{deg}")
        parse = _parse_root if order is not None else _parse_complex
        by_degree[deg] = [parse(v, f"automorphism.spectrum.{deg}[{j}]") for j, v in enumerate(values)]
    spectrum = GradedEigenvalues.from_mapping(by_degree, top=4)
    spec = AutomorphismSpec(surface, order, spectrum, symplectic=bool(aut.get("symplectic", False)))

    fd = doc.get("fixed_data") or {}
    points = []
    for j, p in enumerate(fd.get("isolated", [])):
        where = f"fixed_data.isolated[{j}]"
        points.append(IsolatedPoint(str(p.get("label", f"P{j + 1}")),
                                    _parse_root(_require(p, "eps1", where), where + ".eps1"),
                                    _parse_root(_require(p, "eps2", where), where + ".eps2")))
    orbits = []
    for j, o in enumerate(fd.get("orbits", [])):
        where = f"fixed_data.orbits[{j}]"
        period = _require(o, "period", where)
        if not isinstance(period, int) or period < 2:
            raise InputError(f"period must be an integer >= 2, got {period!r}", field=where + ".period")
        orbits.append(PeriodicOrbit(str(o.get("label", f"O{j + 1}")), period, bool(o.get("isolated", False))))
    loci = tuple(FixedLocusNote(str(x["label"]), int(x.get("dimension", 1)), x.get("euler"))
                 for x in fd.get("fixed_loci", []))
    declared = tuple(DeclaredLocus(int(x["n"]), str(x["label"]), int(x["euler"]))
                     for x in fd.get("declared_loci", []))
    refs = {int(k): int(v) for k, v in (fd.get("reference_counts") or {}).items()}
    datum = LocalFixedDatum(tuple(points), tuple(orbits), loci, declared, refs,
                            tuple(fd.get("notes", ())))
    return spec, datum


def _dump_scalar(lam):
    if isinstance(lam, complex):
        return [lam.real, lam.imag]
    c = lam if isinstance(lam, CyclotomicNumber) else CyclotomicNumber(Fraction(lam))
    ke = root_exponent(c)
    if ke is None:
        raise ValueError(f"{lam} is not a root of unity and cannot be written as [k, m]")
    return list(ke)


def dump_document(spec: AutomorphismSpec, datum: LocalFixedDatum) -> dict:
    """Inverse of :func:`load_document` (up to preset expansion)."""
    s = spec.surface
    doc = {
        "surface": {
            "name": s.name,
            "betti": list(s.betti),
            "hodge_row": {k: list(v) for k, v in sorted(s.hodge_rows.items())},
            "hodge_table": {k: [list(r) for r in v] for k, v in sorted(s.hodge_tables.items())},
        },
        "automorphism": {
            "order": spec.order if spec.order is not None else "infinite",
            "symplectic": spec.symplectic,
            "spectrum": {str(i): [_dump_scalar(lam) for lam in lv]
                         for i, lv in enumerate(spec.spectrum.levels) if lv},
        },
        "fixed_data": {
            "isolated": [{"label": p.label, "eps1": _dump_scalar(p.eps1), "eps2": _dump_scalar(p.eps2)}
                         for p in datum.isolated_points],
            "orbits": [{"label": o.label, "period": o.period, "isolated": o.isolated}
                       for o in datum.periodic_orbits],
            "fixed_loci": [{"label": x.label, "dimension": x.dimension, "euler": x.euler_characteristic}
                           for x in datum.fixed_loci],
            "declared_loci": [{"n": x.n, "label": x.label, "euler": x.euler_characteristic}
                              for x in datum.declared_loci],
            "reference_counts": {str(k): v for k, v in sorted(datum.reference_counts.items())},
            "notes": list(datum.notes),
        },
    }
    return doc


def complex_spectrum(by_degree: Mapping[int, list], betti=None, name="synthetic") -> AutomorphismSpec:
    """Infinite-order spec from float eigenvalues (for entropy work)."""
    levels = {i: [complex(v) for v in vals] for i, vals in by_degree.items()}
    if betti is None:
        betti = tuple(len(levels.get(i, ())) for i in range(5))
    return AutomorphismSpec(SurfaceSpec(name, tuple(betti)), None,
                            GradedEigenvalues.from_mapping(levels, top=4))

