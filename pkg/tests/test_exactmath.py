"""Exact arithmetic layer: Laurent polynomials and symmetric integer matrices."""

from fractions import Fraction

import pytest

from knotct.exactmath import (
    IntSymMatrix,
    LaurentPoly,
    laurent_derivative_at_one,
    signature_of_sym,
)


def test_term_and_coefficient():
    p = LaurentPoly.term(3, -2)
    assert p.coefficient(-2) == 3
    assert p.coefficient(0) == 0


def test_ring_operations():
    p = LaurentPoly.term(1, -1) + LaurentPoly.term(2, 3)
    q = LaurentPoly.term(1, 1)
    assert (p * q).coefficient(0) == 1
    assert (p * q).coefficient(4) == 2
    assert p - p == LaurentPoly.zero()
    assert p * LaurentPoly.one() == p


def test_degree_span_and_shift():
    p = LaurentPoly.term(1, -2) + LaurentPoly.term(3, 1)
    assert p.degree_span() == (-2, 1)
    assert p.shift(3).degree_span() == (1, 4)


def test_invert_variable():
    p = LaurentPoly.term(1, -2) + LaurentPoly.term(3, 1)
    q = p.invert_variable()
    assert q.coefficient(2) == 1 and q.coefficient(-1) == 3
    assert q.invert_variable() == p


def test_substitute_power():
    p = LaurentPoly.term(1, -2) + LaurentPoly.term(3, 1)
    q = p.substitute_power(2)
    assert q.coefficient(-4) == 1 and q.coefficient(2) == 3


def test_evaluate_exact():
    p = LaurentPoly.term(1, -2) + LaurentPoly.term(3, 1)
    assert p.evaluate(Fraction(2)) == Fraction(1, 4) + 6


def test_derivative_at_one():
    # p = x^-2 + 3x: p'(1) = -2 + 3 = 1, p''(1) = 6
    p = LaurentPoly.term(1, -2) + LaurentPoly.term(3, 1)
    assert laurent_derivative_at_one(p, 1) == 1
    assert laurent_derivative_at_one(p, 2) == 6
    assert laurent_derivative_at_one(p, 0) == p.evaluate(Fraction(1))


@pytest.mark.parametrize(
    "rows, sig",
    [
        ([[1]], 1),
        ([[-3]], -1),
        ([[0]], 0),
        ([[0, 1], [1, 0]], 0),
        ([[2, 1], [1, 2]], 2),
        ([[2, 3], [3, 2]], 0),
        ([[1, 0, 0], [0, -1, 0], [0, 0, 5]], 1),
    ],
)
def test_signature_of_sym(rows, sig):
    assert signature_of_sym(IntSymMatrix(rows)) == sig


def test_int_sym_matrix_rejects_asymmetric():
    with pytest.raises(Exception):
        IntSymMatrix([[1, 2], [3, 4]])
