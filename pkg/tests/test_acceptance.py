"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import cmath
import random
import time
from collections import Counter

import pytest

from hilbaut.algebra import GradedEigenvalues, ext_trace_series, root_of_unity, sym_trace_series, tensor_trace_series
from hilbaut.fixed_points import (enumerate_fixed_components, grid_criterion_nondegenerate,
                                  monomial_tangent_weights, partitions, transpose)
from hilbaut.fock import betti_numbers, enumerate_basis, induced_spectral_radius, lefschetz_number, weight_coefficient
from hilbaut.hodge import HodgeRow, HodgeTable, aut_dimension, conjectural_hodge_series, h_top_minus_one, hodge_p0_series
from hilbaut.surface import PRESETS, complex_spectrum, preset

from conftest import record_acceptance
from oracles import (ext_power_trace, random_graded_endomorphism, series_t_poly, sym_power_trace,
                     tensor_power_trace)


def criterion(number, summary):
    def wrap(fn):
        def test():
            try:
                detail = fn()
            except Exception as exc:
                record_acceptance(f"ACCEPTANCE criterion {number}: FAIL - {summary}: {exc!r}")
                raise
            record_acceptance(f"ACCEPTANCE criterion {number}: PASS - {summary}" + (f" ({detail})" if detail else ""))
        test.__name__ = fn.__name__
        return test
    return wrap


@criterion(1, "K3 symplectic Lefschetz numbers at n=2 are 27, 14, 9, each under 1 s")
def test_c01_k3_symplectic_lefschetz_n2():
    got = {}
    for p, expected in ((3, 27), (5, 14), (7, 9)):
        spec, _ = preset(f"k3-symplectic-{p}")
        start = time.perf_counter()
        value = lefschetz_number(spec, 2)
        elapsed = time.perf_counter() - start
        assert isinstance(value, int) and value == expected, (p, value)
        assert elapsed < 1.0, (p, elapsed)
        got[p] = (value, round(elapsed, 4))
    return ", ".join(f"p={p}: {v} in {t}s" for p, (v, t) in got.items())


@criterion(2, "weight-1 Lefschetz numbers are 6, 4, 3 and 16")
def test_c02_weight_one():
    values = {name: lefschetz_number(preset(name)[0], 1)
              for name in ("k3-symplectic-3", "k3-symplectic-5", "k3-symplectic-7", "torus-involution")}
    assert list(values.values()) == [6, 4, 3, 16]
    return ", ".join(f"{k}={v}" for k, v in values.items())


@criterion(3, "torus involution n=2: Lefschetz 144, 120 isolated nondegenerate reduced pairs, remainder 24")
def test_c03_torus_involution():
    spec, datum = preset("torus-involution")
    assert lefschetz_number(spec, 2) == 144
    report = enumerate_fixed_components(datum, 2, spec)
    reduced_pairs = [c for c in report.components
                     if c.isolated_nondegenerate and c.kind == "reduced-assembly" and len(c.pieces) == 2]
    assert len(reduced_pairs) == 120 == report.isolated_nondegenerate_count
    x = report.crosscheck
    assert x.lefschetz - x.isolated_nondegenerate == 24 == x.declared_remainder
    assert x.status == "agree"
    return f"crosscheck {x.status}"


@criterion(4, "isolated count at n=2 equals m(m-1)/2 + 2m and the Lefschetz number")
def test_c04_combinatorial_identity():
    out = []
    for p, m in ((3, 6), (5, 4), (7, 3)):
        spec, datum = preset(f"k3-symplectic-{p}")
        count = enumerate_fixed_components(datum, 2, spec).isolated_nondegenerate_count
        assert count == m * (m - 1) // 2 + 2 * m == lefschetz_number(spec, 2)
        out.append(f"p={p}: {count}")
    return ", ".join(out)


@criterion(5, "k3-symplectic-5 n=3: trace formula and enumeration agree; published 36 quoted and flagged")
def test_c05_k3_symplectic_5_n3():
    spec, datum = preset("k3-symplectic-5")
    lef = lefschetz_number(spec, 3)
    report = enumerate_fixed_components(datum, 3, spec)
    x = report.crosscheck
    assert x.enumerated_total == lef and x.status == "agree"
    assert x.reference == 36
    if x.reference != lef:
        assert x.reference_agrees is False
        assert any("36" in note for note in report.notes)
    return f"trace formula {lef}, enumeration {x.enumerated_total}, published {x.reference} (flagged)"


@criterion(6, "K3^[2] Betti numbers (1,0,23,0,276,0,23,0,1)")
def test_c06_poincare():
    k3 = preset("k3-identity")[0].surface
    assert betti_numbers(k3, 2) == [1, 0, 23, 0, 276, 0, 23, 0, 1]


@criterion(7, "basis enumeration reproduces the shifted trace series for every preset, n <= 3")
def test_c07_basis_series_agreement():
    checked = 0
    for name in sorted(PRESETS):
        spec, _ = preset(name)
        for n in range(4):
            acc = {}
            for _, lam, deg in enumerate_basis(spec, n):
                acc[deg] = acc.get(deg, 0) + lam
            expected = {e[0]: c for e, c in weight_coefficient(spec, n).items()}
            assert {k: v for k, v in acc.items() if v != 0} == expected, (name, n)
            checked += 1
    return f"{checked} (preset, n) cases"


@criterion(8, "sym/ext/tensor trace series match explicit power bases for 50 random sets, weights <= 4")
def test_c08_trace_oracles():
    rng = random.Random(20240601)
    for _ in range(50):
        degrees, mat, eig = random_graded_endomorphism(rng)
        by = {}
        for d, lam in eig:
            by.setdefault(d, []).append(lam)
        e = GradedEigenvalues.from_mapping(by)
        tmax = 4 * max(degrees)
        sym, ext, ten = (f(e, 4, tmax) for f in (sym_trace_series, ext_trace_series, tensor_trace_series))
        for n in range(5):
            assert series_t_poly(sym, n) == sym_power_trace(degrees, mat, n)
            assert series_t_poly(ext, n) == ext_power_trace(degrees, mat, n)
            assert series_t_poly(ten, n) == tensor_power_trace(degrees, mat, n)
    return "50 sets"


@criterion(9, "h^{2n-1,0} closed form equals the series for entries <= 3, n <= 6; aut-dim 0 (K3) and 2 (torus)")
def test_c09_hodge_closed_form():
    rows = 0
    for h00 in range(4):
        for h10 in range(4):
            for h20 in range(4):
                row = HodgeRow(h00, h10, h20)
                series = hodge_p0_series(row, 6, 11)
                for n in range(1, 7):
                    assert h_top_minus_one(row, n) == series.coefficient(t=n, x=2 * n - 1)
                rows += 1
    for n in range(1, 6):
        assert aut_dimension(HodgeRow(1, 0, 1), n) == 0
        assert aut_dimension(HodgeRow(1, 2, 1), n) == 2
    return f"{rows} rows"


@criterion(10, "conjectural product at y=0 equals the q=0 generating function up to x<=6, t<=4")
def test_c10_conjecture_reduction():
    # every q = 0 column (64 cases) crossed with the extreme values {0, 3}
    # in the six other positions, plus random tables over the full range
    import itertools
    grids = []
    for col in itertools.product(range(4), repeat=3):
        for rest in itertools.product((0, 3), repeat=6):
            grids.append(((col[0], rest[0], rest[1]), (col[1], rest[2], rest[3]), (col[2], rest[4], rest[5])))
    rng = random.Random(11)
    grids += [tuple(tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(3)) for _ in range(200)]
    for g in grids:
        table = HodgeTable(g)
        reduced = conjectural_hodge_series(table, 4, 6, 0).substitute("y", 0)
        assert reduced == hodge_p0_series(table.row_q0(), 4, 6), g
    return f"{len(grids)} tables"


@criterion(11, "spectral radius of f^[n] equals radius(f)^n to 1e-9 for 10 float spectra, n <= 4")
def test_c11_entropy():
    rng = random.Random(5)
    for _ in range(10):
        lam = rng.uniform(1.05, 6.0)
        unit = cmath.exp(2j * cmath.pi * rng.random())
        h2 = [lam, 1 / lam] + [cmath.exp(2j * cmath.pi * rng.random()) for _ in range(rng.randint(0, 2))]
        h1 = [unit, unit.conjugate()] if rng.random() < 0.5 else []
        spec = complex_spectrum({0: [1], 1: h1, 2: h2, 3: [u.conjugate() for u in h1], 4: [1]})
        r1 = induced_spectral_radius(spec, 1)
        for n in range(1, 5):
            rn = induced_spectral_radius(spec, n)
            assert abs(rn - r1**n) <= 1e-9 * r1**n
    return "10 spectra"


@criterion(12, "all λ ⊢ n <= 6 with (ζ_m^a, ζ_m^b), m <= 7: 2n weights, transposition symmetry, grid criterion sound")
def test_c12_tangent_suite():
    cases = 0
    for m in range(1, 8):
        for a in range(m):
            for b in range(m):
                e1, e2 = root_of_unity(a, m), root_of_unity(b, m)
                for n in range(1, 7):
                    for lam in partitions(n):
                        rep = monomial_tangent_weights(lam, e1, e2)
                        assert len(rep.weights) == 2 * n
                        sw = monomial_tangent_weights(transpose(lam), e2, e1)
                        assert Counter(rep.weights) == Counter(sw.weights)
                        if grid_criterion_nondegenerate(lam, e1, e2):
                            assert not rep.degenerate
                        cases += 1
    return f"{cases} cases"
