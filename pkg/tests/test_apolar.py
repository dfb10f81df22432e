# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-15 19:40

import pytest

from punctual.apolar import InverseSystem, apolar_ideal, \
    apolar_local_invariants, generic_inverse_system, inverse_system_of, \
    partials_module, random_inverse_system, standard_form_sample
from punctual.errors import ParseException, ResourceCapException, \
    ValueException
from punctual.golden import CUBIC_QUADRIC, WORKED_DUAL, H14321_SYSTEMS
from punctual.tangent import graded_ideal_from_monomial, \
    graded_socle_dimension


def test_inverse_system_parse():
    fs = InverseSystem.parse("y2*y3^3, y1^2")

    assert fs.n == 3
    assert fs.max_degree == 4
    assert fs.is_homogeneous()
    assert InverseSystem.from_dict(fs.to_dict(), n=3) == fs

    with pytest.raises(ParseException):
        InverseSystem.parse("y1^2, x2")
    with pytest.raises(ValueException):
        InverseSystem.parse("y1 - y1")


def test_worked_apolar_ideal(worked_ideal):
    ideal = apolar_ideal(InverseSystem.parse(WORKED_DUAL, n=3))
    monomial = graded_ideal_from_monomial(worked_ideal)

    assert ideal.hilbert == (1, 3, 3, 2, 1)
    assert ideal == monomial
    assert graded_socle_dimension(ideal) == 2


def test_inverse_system_of(worked_ideal):
    fs = inverse_system_of(graded_ideal_from_monomial(worked_ideal))

    assert sorted(f.format() for f in fs.generators) == ["y1^2", "y2*y3^3"]


@pytest.mark.parametrize("text", [WORKED_DUAL] + [t for t, _ in H14321_SYSTEMS])
def test_duality_round_trip(text):
    fs = InverseSystem.parse(text)
    ideal = apolar_ideal(fs)

    assert apolar_ideal(inverse_system_of(ideal)) == ideal


@pytest.mark.parametrize("text", [WORKED_DUAL] + [t for t, _ in H14321_SYSTEMS])
def test_socle_matches_local_invariants(text):
    fs = InverseSystem.parse(text)
    report = apolar_local_invariants(fs)
    ideal = apolar_ideal(fs)

    assert report.graded
    assert report.hilbert == ideal.hilbert.to_list()
    assert report.socle_dim == graded_socle_dimension(ideal)
    assert report.k == ideal.colength


def test_inhomogeneous_apolar_ideal():
    with pytest.raises(ValueException):
        apolar_ideal(InverseSystem.parse("y1^2 + y2"))


def test_power_of_one_variable():
    report = apolar_local_invariants(InverseSystem.parse("y1^4"))

    assert report.k == 5
    assert report.hilbert == [1, 1, 1, 1, 1]
    assert report.socle_dim == 1


def test_partials():
    assert len(partials_module(InverseSystem.parse("y1^2"))) == 3
    assert len(partials_module(InverseSystem.parse("y1*y2"))) == 4


def test_standard_form():
    fs = standard_form_sample(1, "y2^3", "3*y3^2")
    report = apolar_local_invariants(fs)

    assert not report.graded
    assert report.k == 8
    assert report.hilbert == [1, 3, 2, 1, 1]
    assert report.socle_dim == 1

    with pytest.raises(ValueException):
        standard_form_sample(1, "y1*y3^2")
    with pytest.raises(ValueException):
        standard_form_sample(1, "y2^3", "y3^3")


def test_random_system_needs_seed():
    with pytest.raises(ValueException):
        random_inverse_system([3, 2], 5, None)
    assert random_inverse_system([3, 2], 5, 7) == \
        random_inverse_system([3, 2], 5, 7)


def test_general_cubic_and_quadric():
    fs, report, draws = generic_inverse_system(
        CUBIC_QUADRIC['shape'], CUBIC_QUADRIC['n'], 1,
        lambda r: r.hilbert == CUBIC_QUADRIC['hilbert']
    )

    assert draws >= 1
    assert len(fs.generators) == 2
    assert report.hilbert == [1, 5, 6, 1]
    assert report.socle_dim == CUBIC_QUADRIC['socle_dim']


def test_generic_draw_cap():
    with pytest.raises(ResourceCapException) as e:
        generic_inverse_system([2], 2, 1, lambda r: False, max_draws=2)
    assert e.value.cap == 2
