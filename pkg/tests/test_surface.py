import json
from collections import Counter

import pytest

from hilbaut.algebra import CyclotomicNumber, GradedEigenvalues, cyc_as_integer, root_of_unity
from hilbaut.errors import InputError
from hilbaut.surface import (PRESETS, AutomorphismSpec, SurfaceSpec, dump_document, lefschetz_on_surface,
                             load_document, preset, root_exponent, validate, validate_datum)


def test_k3_symplectic_3_spectrum():
    spec, _ = preset("k3-symplectic-3")
    h2 = Counter(spec.spectrum.levels[2])
    assert h2 == {1: 10, root_of_unity(1, 3): 6, root_of_unity(2, 3): 6}


@pytest.mark.parametrize("name,count", [("torus-involution", 16), ("k3-symplectic-3", 6),
                                        ("k3-symplectic-5", 4), ("k3-symplectic-7", 3)])
def test_isolated_point_counts(name, count):
    _, datum = preset(name)
    assert len(datum.isolated_points) == count


def test_unknown_preset():
    with pytest.raises(InputError):
        preset("enriques")


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_validate(name):
    spec, datum = preset(name)
    assert validate(spec) == []
    violations, warnings = validate_datum(datum, spec)
    assert violations == [] and warnings == []


def test_wrong_dimension_reported():
    spec, _ = preset("k3-identity")
    one = CyclotomicNumber(1)
    bad = AutomorphismSpec(spec.surface, 1, GradedEigenvalues(((one,), (), (one,) * 23, (), (one,))))
    violations = validate(bad)
    assert len(violations) == 1
    assert violations[0].degree == 2 and violations[0].rule == "dimension"


def test_wrong_eigenvalue_order_reported():
    surface = SurfaceSpec("test", (1, 0, 2, 0, 1))
    one = CyclotomicNumber(1)
    spec = AutomorphismSpec(surface, 2, GradedEigenvalues(((one,), (), (one, root_of_unity(1, 3)), (), (one,))))
    violations = validate(spec)
    assert [(v.degree, v.rule) for v in violations] == [(2, "eigenvalue-order")]


def test_betti_rules():
    one = CyclotomicNumber(1)
    spec = AutomorphismSpec(SurfaceSpec("odd", (1, 1, 0, 0, 1)), 1,
                            GradedEigenvalues(((one,), (one,), (), (), (one,))))
    assert [v.rule for v in validate(spec)] == ["poincare-duality"]


def test_symplectic_warning():
    spec, datum = preset("k3-symplectic-3")
    from hilbaut.surface import IsolatedPoint, LocalFixedDatum
    z = root_of_unity(1, 3)
    _, warnings = validate_datum(LocalFixedDatum((IsolatedPoint("P", z, z),)), spec)
    assert len(warnings) == 1


@pytest.mark.parametrize("name,expected", [("torus-involution", 16), ("k3-symplectic-5", 4),
                                           ("k3-identity", 24), ("k3-symplectic-3", 6),
                                           ("k3-symplectic-7", 3), ("torus-identity", 0)])
def test_lefschetz_on_surface(name, expected):
    spec, datum = preset(name)
    value = cyc_as_integer(lefschetz_on_surface(spec))
    assert value == expected
    declared = sum(x.euler_characteristic or 0 for x in datum.fixed_loci)
    assert value == len(datum.isolated_points) + declared


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_document_round_trip(name):
    spec, datum = preset(name)
    doc = json.loads(json.dumps(dump_document(spec, datum)))
    assert load_document(doc) == (spec, datum)


def test_root_exponent():
    assert root_exponent(root_of_unity(3, 12)) == (1, 4)
    assert root_exponent(CyclotomicNumber(-1)) == (1, 2)
    assert root_exponent(CyclotomicNumber(2)) is None


def test_float_spectrum_document():
    doc = {"surface": {"betti": [1, 0, 2, 0, 1]},
           "automorphism": {"order": "infinite",
                            "spectrum": {"0": [[1, 0]], "2": [[2.0, 0], [0.5, 0]], "4": [[1, 0]]}}}
    spec, _ = load_document(doc)
    assert spec.order is None and spec.spectrum.kind == "complex"
    assert validate(spec) == []


@pytest.mark.parametrize("doc,field", [
    ({}, "document"),
    ({"surface": {"betti": [1, 0, 22, 0]}, "automorphism": {}}, "surface.betti"),
    ({"surface": {"betti": [1, 0, 1, 0, 1]}, "automorphism": {"order": 0, "spectrum": {}}}, "automorphism.order"),
    ({"surface": {"betti": [1, 0, 1, 0, 1]}, "automorphism": {"order": 3, "spectrum": {"2": [[1.5, 3]]}}},
     "automorphism.spectrum.2[0]"),
])
def test_bad_documents_name_the_field(doc, field):
    with pytest.raises(InputError) as info:
        load_document(doc)
    assert info.value.field == field
