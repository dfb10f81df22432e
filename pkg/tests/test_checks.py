# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-16 14:30

import pytest

from punctual.checks import CHECKS, h2eq2_inverse_system, table_diff
from punctual.errors import UnknownCheckException
from punctual.golden import semicontinuity_witnesses, EXCEPTIONAL_IDEALS
from punctual.loci import h2eq2_hilbert
from punctual.apolar import apolar_ideal
from punctual.model import GoldenTable


@pytest.mark.parametrize("name", [
    "sec23", "cor44", "n_bound", "strata", "examples5x", "regular",
    "prop56",
])
def test_check_passes(controller, name):
    reports = controller.verify(name)

    assert len(reports) == 1
    assert reports[0].name == name
    assert reports[0].passed, reports[0].details


@pytest.mark.slow
@pytest.mark.parametrize("name", ["lemma53", "witnesses", "prop32"])
def test_slow_check_passes(controller, name):
    report = controller.verify(name)[0]

    assert report.passed, report.details


@pytest.mark.slow
def test_tables_check(controller):
    controller.tables_k = 8
    report = controller.verify("tables")[0]

    assert report.passed, report.details['diffs']


def test_unknown_check(controller):
    with pytest.raises(UnknownCheckException):
        controller.verify("nope")


def test_registry():
    assert sorted(CHECKS) == [
        "cor44", "examples5x", "lemma53", "n_bound", "prop32", "prop56",
        "regular", "sec23", "strata", "tables", "witnesses",
    ]


def test_worked_details(controller):
    details = controller.verify("sec23")[0].details

    assert details['series'] == "5T+3T^2"
    assert details['hom_kernel'] == {'1': 5, '2': 3, '3': 0}
    assert details['inverse_system'] == ["y1^2", "y2*y3^3"]


def test_h3eq1_details(controller):
    assert controller.verify("cor44")[0].details['violating_13'] == \
        ["H=(1,5,6,1)"]


def test_h2eq2_inverse_system():
    ideal = apolar_ideal(h2eq2_inverse_system(3, 4, 2))

    assert ideal.hilbert == h2eq2_hilbert(3, 4, 2)


def test_witness_labels():
    labels = {entry[0] for entry in EXCEPTIONAL_IDEALS}

    for text, label, degree in semicontinuity_witnesses():
        assert label in labels
        assert degree >= 0


def test_table_diff():
    table = GoldenTable(
        table_id="demo", rows={'count': [1, 2, 3]}, columns=[1, 2, 3]
    )

    assert table_diff(table, {'count': [1, 2]}) == []
    assert table_diff(table, {'count': [1, 5, 3]}) == [{
        'table': "demo", 'row': "count", 'k': 2, 'computed': 5,
        'published': 2,
    }]
