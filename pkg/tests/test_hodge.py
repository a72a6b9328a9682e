import itertools
import warnings

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbaut.errors import InputError
from hilbaut.fock import poincare_series
from hilbaut.hodge import (HodgeRow, HodgeTable, aut_dimension, coefficient_status, conjectural_hodge_series,
                           h_top_minus_one, hodge_grid, hodge_p0_series)
from hilbaut.surface import preset

from oracles import hodge_of_second_hilbert

K3_TABLE = ((1, 0, 1), (0, 20, 0), (1, 0, 1))
TORUS_TABLE = ((1, 2, 1), (2, 4, 2), (1, 2, 1))


def test_k3_trivial_row():
    s = hodge_p0_series(HodgeRow(1, 0, 1), 2)
    assert [s.coefficient(t=2, x=p) for p in range(5)] == [1, 0, 1, 0, 1]


@pytest.mark.parametrize("row", [(1, 0, 1), (1, 2, 1), (0, 3, 2)])
def test_t0_is_one(row):
    s = hodge_p0_series(HodgeRow(*row), 3)
    assert s.extract("t", 0).terms == {(0,): 1}


def test_torus_x1_t1():
    assert hodge_p0_series(HodgeRow(1, 2, 1), 2).coefficient(t=1, x=1) == 2


def test_p0_series_against_sympy():
    x, t = sympy.symbols("x t")
    for row in [(1, 2, 1), (2, 1, 3), (0, 3, 2)]:
        h00, h10, h20 = row
        f = (1 + x * t) ** h10 / ((1 - t) ** h00 * (1 - x**2 * t) ** h20)
        poly = sympy.series(f, t, 0, 5).removeO()
        ours = hodge_p0_series(HodgeRow(*row), 4, 8)
        for n in range(5):
            cn = sympy.Poly(sympy.expand(poly).coeff(t, n), x)
            for p in range(9):
                assert ours.coefficient(t=n, x=p) == cn.coeff_monomial(x**p)


@pytest.mark.parametrize("row,n,value", [((1, 0, 3), 4, 0), ((1, 2, 1), 4, 2), ((1, 1, 2), 3, 3)])
def test_h_top_minus_one(row, n, value):
    assert h_top_minus_one(HodgeRow(*row), n) == value


def test_h_top_minus_one_rejects_n0():
    with pytest.raises(InputError):
        h_top_minus_one(HodgeRow(1, 1, 1), 0)


def test_aut_dimension_examples():
    assert aut_dimension(HodgeRow(1, 0, 1), 3) == 0
    assert aut_dimension(HodgeRow(1, 2, 1), 5) == 2


def test_aut_dimension_warns_when_h20_not_one():
    with pytest.warns(UserWarning):
        value = aut_dimension(HodgeRow(1, 2, 2), 3)
    assert value == h_top_minus_one(HodgeRow(1, 2, 2), 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 6))
def test_aut_dimension_independent_of_n(h00, h10, n):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert aut_dimension(HodgeRow(h00, h10, 1), n) == h10


def test_negative_hodge_numbers_rejected():
    with pytest.raises(InputError):
        HodgeRow(1, -1, 1)
    with pytest.raises(InputError):
        HodgeTable(((1, 0), (0, 1)))


# --- conjectural product ---------------------------------------------------------

def test_conjecture_t0():
    s = conjectural_hodge_series(HodgeTable(TORUS_TABLE), 2)
    assert s.extract("t", 0).terms == {(0, 0): 1}


@pytest.mark.parametrize("table", [K3_TABLE, TORUS_TABLE])
def test_second_hilbert_scheme_against_sym2(table):
    s = conjectural_hodge_series(HodgeTable(table, untwisted=True), 2)
    assert hodge_grid(s, 2) == hodge_of_second_hilbert(table)


def test_k3_h22_of_second_hilbert_scheme():
    s = conjectural_hodge_series(HodgeTable(K3_TABLE, untwisted=True), 2)
    assert s.coefficient(t=2, x=2, y=2) == 232
    assert s.coefficient(t=2, x=1, y=1) == 21


@pytest.mark.parametrize("name", ["k3-identity", "torus-identity"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_untwisted_euler_characteristic(name, n):
    surface = preset(name)[0].surface
    table = HodgeTable(surface.hodge_tables["trivial"], untwisted=True)
    s = conjectural_hodge_series(table, n)
    alt = sum((-1) ** (p + q) * s.coefficient(t=n, x=p, y=q)
              for p, q in itertools.product(range(2 * n + 1), repeat=2))
    euler = poincare_series(surface, n).extract("q", n).substitute("t", -1).constant_term()
    assert alt == euler


def test_untwisted_hodge_matches_betti():
    surface = preset("k3-identity")[0].surface
    table = HodgeTable(surface.hodge_tables["trivial"], untwisted=True)
    grid = hodge_grid(conjectural_hodge_series(table, 3), 3)
    betti = poincare_series(surface, 3).extract("q", 3)
    for k in range(13):
        assert sum(grid[p][k - p] for p in range(7) if 0 <= k - p <= 6) == betti.coefficient(t=k)


def test_status_labels():
    assert coefficient_status(HodgeTable(K3_TABLE), 0) == "proved"
    assert coefficient_status(HodgeTable(K3_TABLE), 1) == "conjectural"
    assert coefficient_status(HodgeTable(K3_TABLE, untwisted=True), 1) == "proved"


tables = st.lists(st.integers(0, 3), min_size=9, max_size=9).map(lambda v: (tuple(v[0:3]), tuple(v[3:6]), tuple(v[6:9])))


@settings(max_examples=25, deadline=None)
@given(tables)
def test_conjecture_reduces_at_y0(table):
    t = HodgeTable(table)
    s = conjectural_hodge_series(t, 4, 6, 0)
    row = t.row_q0()
    assert s.substitute("y", 0) == hodge_p0_series(row, 4, 6)
