# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-15 18:12

import pytest

from punctual.apolar import InverseSystem, apolar_ideal
from punctual.errors import InfiniteColengthException, ValueException
from punctual.exact import parse_generators
from punctual.golden import EXCEPTIONAL_IDEALS, H14321_SYSTEMS, T_ZERO
from punctual.monomial import MonomialIdeal, curvilinear_ideal, \
    enumerate_monomial_ideals
from punctual.model import TangentSeries
from punctual.tangent import graded_ideal_from_generators, \
    graded_ideal_from_monomial, graded_socle_dimension, hom_dim_kernel, \
    hom_dim_syzygy, tangent_report, tangent_series, threshold_count, \
    exceptional_ideals


def _exception(label):
    for name, gens, d, hf in EXCEPTIONAL_IDEALS:
        if name == label:
            return MonomialIdeal.parse(gens, 3), d, hf
    raise KeyError(label)


def test_graded_from_monomial(worked_ideal):
    graded = graded_ideal_from_monomial(worked_ideal)

    assert graded.hilbert == (1, 3, 3, 2, 1)
    assert graded.s == 4
    assert graded.colength == 10
    assert graded_ideal_from_monomial(curvilinear_ideal(3, 4)).hilbert == \
        (1, 1, 1, 1)


def test_graded_from_generators():
    polys = parse_generators("x1^2 - x2^2, x1*x2, x2^3, x3")
    graded = graded_ideal_from_generators(polys)

    assert graded.hilbert == (1, 2, 1)
    same = graded_ideal_from_generators(parse_generators("x1, x2, x3^4"))

    assert same.hilbert == (1, 1, 1, 1)
    assert same.generator_degrees() == [1, 1, 4]


def test_graded_from_generators_errors():
    with pytest.raises(ValueException):
        graded_ideal_from_generators(parse_generators("x1^2 + x2"))
    with pytest.raises(InfiniteColengthException):
        graded_ideal_from_generators(
            parse_generators("x1", n=2), degree_cap=5
        )


@pytest.mark.parametrize("gens", [
    "x1^3, x2^2, x1*x3, x1*x2, x3^4",
] + [gens for _, gens, _, _ in EXCEPTIONAL_IDEALS])
def test_minimal_generator_count(gens):
    ideal = MonomialIdeal.parse(gens, 3)
    graded = graded_ideal_from_monomial(ideal)
    expected = [sum(g) for g in ideal.generators]

    for e in range(-1, graded.s + 4):
        count = graded.minimal_generator_count(e)

        assert count == expected.count(e)
        assert count == graded.generator_degrees().count(e)


def test_minimal_generator_count_redundant_generator():
    graded = graded_ideal_from_generators(
        parse_generators("x1^2 - x2^2, x1*x2, x2^3, x3")
    )

    assert [graded.minimal_generator_count(e) for e in range(5)] == \
        [0, 1, 2, 0, 0]


def test_worked_hom(worked_ideal):
    graded = graded_ideal_from_monomial(worked_ideal)

    for d, value in ((1, 5), (2, 3), (3, 0), (4, 0)):
        assert hom_dim_syzygy(worked_ideal, d) == value
        assert hom_dim_kernel(graded, d) == value
    report = tangent_report(worked_ideal)

    assert report.positive_series() == "5T+3T^2"
    assert report.t_pos == 8
    assert report.window == (-5, 4)


def test_socle_dimension(worked_ideal):
    assert graded_socle_dimension(worked_ideal) == 2
    assert graded_socle_dimension(curvilinear_ideal(3, 6)) == 1
    m2 = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1),
                           (0, 1, 1), (0, 0, 2)])

    assert graded_socle_dimension(m2) == 3


def test_curvilinear_threshold():
    for k in range(2, 12):
        report = tangent_report(
            curvilinear_ideal(3, k), 2 * (k - 1), window=(0, k - 1)
        )

        assert report.t_nonneg == 2 * (k - 1)
        assert report.d == 0


@pytest.mark.parametrize("label", sorted(T_ZERO))
def test_exceptional_cells(label):
    ideal, d, hf = _exception(label)
    report = tangent_report(ideal, window=(0, ideal.hilbert.s))

    assert ideal.hilbert == hf
    assert report.d == d
    assert report.t_zero == T_ZERO[label]


def test_report_dict(worked_ideal):
    report = tangent_report(worked_ideal, 18, window=(0, 4))
    d = report.to_dict()

    assert sorted(d['series']) == ['0', '1', '2', '3', '4']
    assert d['T_pos'] == 8
    assert d['D'] == d['T_nonneg'] - 18
    assert TangentSeries.from_dict(d).dims == report.dims


@pytest.mark.parametrize("text,t_pos", H14321_SYSTEMS[:2])
def test_witness_positive_parts(text, t_pos):
    ideal = apolar_ideal(InverseSystem.parse(text, n=4))

    assert tangent_report(ideal).t_pos == t_pos


def test_backends_agree_small():
    for k in range(1, 6):
        for ideal in enumerate_monomial_ideals(3, k):
            graded = graded_ideal_from_monomial(ideal)
            s = ideal.hilbert.s

            for d in range(-(s + 1), s + 1):
                assert hom_dim_syzygy(ideal, d) == hom_dim_kernel(graded, d)


@pytest.mark.slow
def test_backends_agree():
    for k in range(6, 9):
        for ideal in enumerate_monomial_ideals(3, k):
            graded = graded_ideal_from_monomial(ideal)
            s = ideal.hilbert.s

            for d in range(-(s + 1), s + 1):
                assert hom_dim_syzygy(ideal, d) == hom_dim_kernel(graded, d)


def test_series_window(worked_ideal):
    series = tangent_series(worked_ideal, (1, 2))

    assert series == {1: 5, 2: 3}


def test_threshold_counts():
    assert [threshold_count(3, k) for k in range(1, 10)] == \
        [1, 1, 1, 1, 1, 1, 1, 2, 2]


def test_exceptional_up_to_ten():
    found = exceptional_ideals(3, 10)
    listed = {
        MonomialIdeal.parse(gens, 3): d
        for _, gens, d, hf in EXCEPTIONAL_IDEALS if sum(hf) <= 10
    }
    others = []

    for ideal, d in found:
        if ideal == curvilinear_ideal(3, ideal.hilbert.k):
            assert d == 0
        else:
            others.append((ideal, d))
    assert dict(others) == listed
