# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-15 21:05

import pytest

from punctual.errors import ValueException
from punctual.golden import N_BOUND_VALUES, STRATUM_13421
from punctual.hilbert import expected_dimension
from punctual.loci import N_bound, areole_bound, check_h3eq1_negligible, \
    counterexample_margin, dimension_estimates, fiber_dim, \
    gorenstein_locus_dim, h2eq2_hilbert, h2eq2_tangent_series, h3eq1_bound, \
    margin_1442, margin_1n32, margins_14321, stratum_13421_loci, \
    stratum_1n321_loci


def test_gorenstein_locus():
    assert gorenstein_locus_dim(3, 2, 4) == 11

    with pytest.raises(ValueException):
        gorenstein_locus_dim(3, 2, 2)
    with pytest.raises(ValueException):
        gorenstein_locus_dim(3, 4, 3)


def test_h3eq1_bound():
    assert h3eq1_bound((1, 5, 6, 1)) == 52
    assert h3eq1_bound([1, 5, 6, 1], n=5) == 52

    with pytest.raises(ValueException):
        h3eq1_bound((1, 5, 6, 2))
    with pytest.raises(ValueException):
        h3eq1_bound((1, 5, 6, 1), n=4)


def test_h3eq1_negligible_up_to_twelve():
    reports = check_h3eq1_negligible(12)

    assert reports
    assert all(r.negligible for r in reports)


def test_h3eq1_violation_at_thirteen():
    violating = [r for r in check_h3eq1_negligible(13) if not r.negligible]

    assert [r.name for r in violating] == ["H=(1,5,6,1)"]
    assert violating[0].locus == 52
    assert violating[0].expected == 48


@pytest.mark.parametrize("n, s, t, series", [
    (3, 4, 2, {0: 6, 1: 3, 2: 4}),
    (3, 3, 3, {0: 4, 1: 8}),
])
def test_h2eq2_series(n, s, t, series):
    assert h2eq2_tangent_series(n, s, t) == series


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_h2eq2_total(n, s):
    for t in range(2, s + 1):
        k = h2eq2_hilbert(n, s, t).k
        total = sum(h2eq2_tangent_series(n, s, t).values())
        expected = expected_dimension(n, k) - (2 if t == s else 1)

        assert total == expected


def test_h2eq2_invalid():
    with pytest.raises(ValueException):
        h2eq2_tangent_series(1, 3, 2)
    with pytest.raises(ValueException):
        h2eq2_tangent_series(3, 3, 4)


def test_fiber_dim():
    assert fiber_dim(5, 6, 1) == 9
    assert fiber_dim(4, 3, 2) == 14

    with pytest.raises(ValueException):
        fiber_dim(2, 4, 1)


def test_counterexample_margins():
    assert counterexample_margin("tau_2", 5).locus == 52
    assert counterexample_margin("tau_2", 5).expected == 48
    assert counterexample_margin("tau_geq_3", 5).margin == 4

    for n in range(3, 21):
        assert counterexample_margin("tau_1", n).margin == \
            n * (n - 1) * (n - 5) // 6
    for n in range(5, 21):
        assert counterexample_margin("tau_geq_3", n).margin > 0

    with pytest.raises(ValueException):
        counterexample_margin("tau_4", 5)
    with pytest.raises(ValueException):
        counterexample_margin("tau_geq_3", 2)


def test_dimension_estimates():
    estimate = dimension_estimates(10, 10, base_dim=8)

    assert estimate.bounds == {
        'tangent': 20, 'base_and_tangent_to_fiber': 18,
    }
    assert estimate.estimate == 18
    assert estimate.best == "base_and_tangent_to_fiber"

    with pytest.raises(ValueException):
        dimension_estimates(None, 10)


def test_strata():
    assert stratum_1n321_loci(3) == [7, 8, 6, 7]
    assert stratum_13421_loci() == STRATUM_13421

    with pytest.raises(ValueException):
        stratum_1n321_loci(1)


def test_small_margins():
    assert margin_1n32(4).margin == 0
    assert margin_1n32(4, tau_bounded=False).margin == 1
    assert margin_1442().locus == 30
    assert margin_1442().negligible
    assert all(r.negligible for r in margins_14321())


@pytest.mark.parametrize("args, value", N_BOUND_VALUES)
def test_N_bound(args, value):
    assert N_bound(*args) == value


def test_N_bound_invalid():
    with pytest.raises(ValueException):
        N_bound(0, 3, 2)


def test_areole_bound():
    assert areole_bound(2, 3, [0, 2, 4]) == 9

    with pytest.raises(ValueException):
        areole_bound(2, 3, [0, 2])
