import math
from fractions import Fraction

import pytest

from sgcorona.polys import (IntPolynomial, RationalFn, poly_divexact,
                            poly_gcd, poly_matrix_det, real_root_pairs,
                            squarefree_factors, taylor_shift)

X = IntPolynomial.x()


def test_normalization_strips_trailing_zeros():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial((0, 0)).is_zero
    assert IntPolynomial(()).is_zero


def test_immutable():
    p = X + 1
    with pytest.raises(AttributeError):
        p.coeffs = (5,)


def test_arithmetic():
    assert (X + 1) * (X - 1) == X**2 - 1
    assert (X + 1) ** 3 == X**3 + 3 * X**2 + 3 * X + 1
    assert (X**2 - 1) - (X**2) == IntPolynomial((-1,))
    p = 2 * X**2 + 3
    assert p(2) == 11
    assert p(Fraction(1, 2)) == Fraction(7, 2)
    # composition through call
    assert (X**2)(X + 1) == (X + 1) ** 2


def test_shift_and_derivative():
    assert (X + 1).shift(2) == X**3 + X**2
    assert (X**3 + 2 * X).derivative() == 3 * X**2 + 2
    assert IntPolynomial((4,)).derivative().is_zero


def test_divexact():
    num = (X - 3) * (X**2 + X + 7)
    assert poly_divexact(num, X - 3) == X**2 + X + 7
    with pytest.raises(ValueError):
        poly_divexact(X**2 + 1, X - 1)


def test_gcd_primitive():
    g = poly_gcd((X - 1) * (X + 2), (X - 1) * (X - 5))
    assert g == X - 1
    # content is dropped, result has positive leading coefficient
    g = poly_gcd(2 * (X + 1), 4 * (X + 1) ** 2)
    assert g == X + 1
    assert poly_gcd(IntPolynomial((6,)), IntPolynomial((4,))) == \
        IntPolynomial((1,))


def test_squarefree_factorization():
    p = (X - 1) ** 3 * (X + 2)
    c, parts = squarefree_factors(p)
    assert c == 1
    assert sorted(parts, key=lambda t: t[1]) == [(X + 2, 1), (X - 1, 3)]
    c, parts = squarefree_factors(2 * X**2)
    assert c == 2 and parts == [(X, 2)]


def test_matrix_det_integers():
    m = [[IntPolynomial((a,)) for a in row]
         for row in ((2, 1, 0), (1, 3, 1), (0, 1, 4))]
    # cofactor expansion by hand: 2*(12-1) - 1*(4-0) = 18
    assert poly_matrix_det(m) == IntPolynomial((18,))


def test_matrix_det_polynomials():
    m = [[X, IntPolynomial((1,))], [IntPolynomial((1,)), X]]
    assert poly_matrix_det(m) == X**2 - 1
    assert poly_matrix_det([]) == IntPolynomial((1,))


def test_taylor_shift():
    p = X**3 - 2 * X + 5
    q = taylor_shift(p, -3)  # q(x) = p(x - 3)
    for t in (-2, 0, 1, 7):
        assert q(t) == p(t - 3)


def test_real_roots_with_multiplicity():
    pairs = real_root_pairs(X**3 - 3 * X - 2)
    assert [m for _, m in pairs] == [2, 1]
    assert abs(pairs[0][0] + 1) < 1e-10
    assert abs(pairs[1][0] - 2) < 1e-10


def test_real_roots_irrational():
    # 4x^2 - 4x - 32 has roots (1 +- sqrt(33))/2
    pairs = real_root_pairs(4 * X**2 - 4 * X - 32)
    lo, hi = (1 - math.sqrt(33)) / 2, (1 + math.sqrt(33)) / 2
    assert abs(pairs[0][0] - lo) < 1e-10
    assert abs(pairs[1][0] - hi) < 1e-10


def test_real_roots_rejects_complex():
    with pytest.raises(ValueError):
        real_root_pairs(X**2 + 1)
    with pytest.raises(ValueError):
        real_root_pairs((X**2 + 1) * (X - 2) * (X + 1))


def test_real_roots_zero_root():
    pairs = real_root_pairs(X**3 - X)
    got = [r for r, _ in pairs]
    assert abs(got[0] + 1) < 1e-10
    assert abs(got[1]) < 1e-10
    assert abs(got[2] - 1) < 1e-10


def test_rational_fn_reduces():
    r = RationalFn((X**2 - 1), (X - 1) * (X + 3))
    assert r == RationalFn(X + 1, X + 3)
    assert r != RationalFn(X + 1, X - 3)


def test_str_forms():
    assert str(X**2 - 3 * X - 2) == "x^2 - 3*x - 2"
    assert str(RationalFn(IntPolynomial((2,)), X - 1)) == "(2) / (x - 1)"
