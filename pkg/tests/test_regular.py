# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-16 09:12

from fractions import Fraction
from itertools import permutations

import pytest

from punctual.errors import ValueException
from punctual.exact import Matrix, Polynomial
from punctual.regular import BlockMap, PolyMap, check_k_regular, \
    check_projected, curvilinear_span_dim, monomial_regular_map, \
    project_map, socle_reduction_example, tau_power, tuple_rank


def test_monomial_map_size():
    assert monomial_regular_map(1, 3).N == 3
    assert monomial_regular_map(2, 4).N == 10
    assert monomial_regular_map(3, 3).N == 10

    with pytest.raises(ValueException):
        monomial_regular_map(0, 3)


def test_poly_map_rings():
    with pytest.raises(ValueException):
        PolyMap([])
    with pytest.raises(ValueException):
        PolyMap([Polynomial.var(1, 0), Polynomial.var(2, 0)])
    with pytest.raises(ValueException):
        BlockMap(monomial_regular_map(1, 2), 0)


@pytest.mark.parametrize("n, k", [(1, 3), (2, 3), (2, 4), (3, 3)])
@pytest.mark.parametrize("tau", [1, 2, 3])
def test_monomial_maps_regular(n, k, tau):
    F = tau_power(monomial_regular_map(n, k), tau)
    verdict = check_k_regular(F, k, trials=20, seed=1)

    assert F.ambient == tau * monomial_regular_map(n, k).N
    assert verdict.passed
    assert verdict.tau == tau
    assert verdict.witness is None


def test_line_not_three_regular():
    verdict = check_k_regular(monomial_regular_map(1, 2), 3, trials=20, seed=1)

    assert not verdict.passed
    assert verdict.trials == 1
    assert len(verdict.witness) == 3
    assert verdict.witness == sorted(verdict.witness)


def test_seed_required():
    with pytest.raises(ValueException):
        check_k_regular(monomial_regular_map(1, 3), 3)
    with pytest.raises(ValueException):
        check_projected(monomial_regular_map(1, 3), 3, 3)


def test_deterministic():
    F = monomial_regular_map(1, 2)

    assert check_k_regular(F, 3, trials=5, seed=3).to_dict() == \
        check_k_regular(F, 3, trials=5, seed=3).to_dict()


@pytest.mark.parametrize("F, k, rank", [
    (tau_power(monomial_regular_map(1, 3), 1), 3, 3),
    (tau_power(monomial_regular_map(1, 2), 1), 3, 2),
    (tau_power(monomial_regular_map(2, 3), 2), 3, 6),
])
def test_tuple_order_invariance(F, k, rank):
    points = [(2,), (-1,), (0,)] if F.base.n == 1 \
        else [(1, 0), (0, 2), (-1, -1)]
    verdicts = set()

    for order in permutations(points[:k]):
        rows = [row for p in order for row in F.rows(p)]
        direct = Matrix.from_rows(rows, F.ambient).rank()
        found, witness = tuple_rank(F, list(order))

        assert found == direct == rank
        assert witness == sorted([list(p) for p in points[:k]])
        verdicts.add((found >= k * F.tau, tuple(map(tuple, witness))))
    assert len(verdicts) == 1


def test_projection():
    F = monomial_regular_map(1, 3)
    projected = project_map(F, 2, 1)

    assert projected.ambient == 2
    assert len(projected.rows((1,))[0]) == 2

    with pytest.raises(ValueException):
        project_map(F, 0, 1)


def test_projected_regular():
    verdict = check_projected(monomial_regular_map(1, 3), 3, 3, trials=10, seed=1)

    assert verdict.passed
    assert verdict.draws >= 1


def test_projection_too_small():
    verdict = check_projected(
        monomial_regular_map(1, 3), 3, 2, trials=5, seed=1, max_draws=3
    )

    assert not verdict.passed
    assert verdict.draws == 3


@pytest.mark.parametrize("n, k", [(1, 3), (2, 3), (2, 4), (3, 3)])
def test_curvilinear_jets(n, k):
    t = Polynomial.var(1, 0)
    gamma = [t ** (i + 1) for i in range(n)]

    assert curvilinear_span_dim(monomial_regular_map(n, k), gamma, 1, k) == k


def test_curvilinear_needs_univariate():
    with pytest.raises(ValueException):
        curvilinear_span_dim(
            monomial_regular_map(2, 3), [Polynomial.var(1, 0)], 0, 3
        )


def test_socle_reduction():
    res = socle_reduction_example((1, 0, 0), (0, 1, 0))

    assert res == {'lambda': ["0", "0", "1"], 'verification': True}
    assert not socle_reduction_example(
        (1, 0, 0), (0, 1, 0), lam=(1, 0, 0)
    )['verification']

    with pytest.raises(ValueException):
        socle_reduction_example((0, 0, 0), (0, 0, 0))


@pytest.mark.parametrize("alpha, beta", [
    ((1, 2, 3), (0, 1, 1)),
    ((2, 0, -1), (0, 0, 0)),
    ((1, 1, 1), (1, -1, 0)),
])
def test_socle_reduction_default_lambda(alpha, beta):
    res = socle_reduction_example(alpha, beta)
    lam = [Fraction(v) for v in res['lambda']]

    assert any(lam)
    for vec in (alpha, beta):
        assert sum(a * b for a, b in zip(vec, lam)) == 0
    assert res['verification']


def test_socle_reduction_given_lambda():
    alpha, beta = (1, 2, 3), (0, 1, 1)

    assert socle_reduction_example(alpha, beta, lam=(2, 2, -2))['verification']
    # orthogonal to alpha only
    assert not socle_reduction_example(
        alpha, beta, lam=(3, 0, -1)
    )['verification']
    assert socle_reduction_example(
        (1, 0, 0), (0, 1, 0), lam=(0, 0, 5)
    )['lambda'] == ["0", "0", "5"]

    with pytest.raises(ValueException):
        socle_reduction_example(alpha, beta, lam=(0, 0, 0))
    with pytest.raises(ValueException):
        socle_reduction_example(alpha, beta, lam=(1, 1))
