# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-14 19:31

from fractions import Fraction

import pytest

from punctual.errors import ParseException, ValueException
from punctual.exact import Matrix, Polynomial, contract, monomial_basis, \
    monomials_up_to, parse_generators, row_basis, span_rank, \
    format_monomial, monomial_lcm, monomial_quotient, rref


def test_monomial_basis_grevlex():
    assert monomial_basis(3, 2) == (
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
    )
    assert monomial_basis(2, -1) == ()
    assert len(monomials_up_to(3, 3)) == 20


def test_monomial_helpers():
    assert monomial_lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    assert monomial_quotient((2, 3, 1), (1, 3, 0)) == (1, 0, 1)
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 1), letter="y") == "y2"
    assert format_monomial((0, 0)) == "1"


def test_parse_format():
    p = Polynomial.parse("3/2*x1^2*x3 - x2")

    assert p.n == 3
    assert not p.dual
    assert p.coefficient((2, 0, 1)) == Fraction(3, 2)
    assert p.format() == "3/2*x1^2*x3 - x2"
    assert Polynomial.parse("(y1 + y2)**2").format() == "y1^2 + 2*y1*y2 + y2^2"


def test_parse_errors():
    with pytest.raises(ParseException) as e:
        Polynomial.parse("x1 + 2.5")
    assert e.value.position == 5

    with pytest.raises(ParseException):
        Polynomial.parse("x1 + y2")
    with pytest.raises(ParseException):
        Polynomial.parse("x4", n=3)
    with pytest.raises(ParseException) as e:
        parse_generators("x1, , x2")
    assert e.value.position == 3


def test_arithmetic():
    x1, x2 = Polynomial.var(2, 0), Polynomial.var(2, 1)
    p = (x1 + x2) ** 2 - x1 * x2 * 2

    assert p == x1 ** 2 + x2 ** 2
    assert p.is_homogeneous()
    assert not (p + 1).is_homogeneous()
    assert (p + 1).homogeneous_part(0) == 1
    assert p.degree == 2
    assert p.evaluate([2, 3]) == 13

    with pytest.raises(ValueException):
        Polynomial.zero(2).degree
    with pytest.raises(ValueException):
        p + Polynomial.var(3, 0)


def test_substitute():
    t = Polynomial.var(1, 0)
    p = Polynomial.parse("x1^2")

    assert p.substitute([t + 1]) == t ** 2 + t * 2 + 1


def test_contract():
    f = Polynomial.parse("y1^2*y2")

    assert contract(Polynomial.parse("x1", n=2), f) == Polynomial.parse("y1*y2")
    assert contract(Polynomial.parse("x1^2", n=2), Polynomial.parse("y1*y2")) \
        .is_zero()
    assert contract(Polynomial.parse("x1*x2"), f) == Polynomial.parse("y1", n=2)


def test_matrix_rank_kernel():
    m = Matrix.from_rows([[1, 2], [2, 4]])

    assert m.rank() == 1
    assert m.kernel_basis() == [(Fraction(1), Fraction(-1, 2))]
    assert Matrix.identity(3).rank() == 3
    assert Matrix(2, 3).rank() == 0
    assert len(Matrix(2, 3).kernel_basis()) == 3
    m = Matrix.from_rows([[1, 2, 3], [0, 0, 0], [2, 4, 7], [3, 6, 10]])

    for order in ([0, 1, 2, 3], [3, 2, 1, 0], [1, 3, 0, 2]):
        permuted = m.permuted_rows(order)

        assert permuted.rank() == 2
        assert len(permuted.kernel_basis()) == 1
        assert permuted.entry(0, 0) == m.entry(order[0], 0)


def test_rref():
    reduced, pivots = rref(Matrix.from_rows([[2, 4], [1, 3]]))

    assert pivots == (0, 1)
    assert reduced == Matrix.identity(2)


def test_kernel_vectors_annihilate():
    m = Matrix.from_rows([[1, 1, 0, 2], [0, 1, 1, 1], [1, 2, 1, 3]])

    assert m.rank() == 2
    basis = m.kernel_basis()
    assert len(basis) == 2

    for v in basis:
        assert m.apply(list(v)) == [0, 0, 0]


def test_row_basis_span_rank():
    vectors = [{'a': 1, 'b': 1}, {'b': 2}, {'a': 2, 'b': 4}]
    rows, pivots = row_basis(vectors, ['a', 'b'])

    assert pivots == ['a', 'b']
    assert rows == [{'a': 1}, {'b': 1}]
    assert span_rank(vectors, ['a', 'b']) == 2
    assert span_rank([], ['a']) == 0
