from math import comb

from minksum.polynomial import FPolynomial


def test_arithmetic():
    q = FPolynomial((0, 1))
    two_plus_q = FPolynomial((2, 1))
    assert two_plus_q * two_plus_q == FPolynomial((4, 4, 1))
    assert two_plus_q * FPolynomial((4, 4, 1)) - two_plus_q + FPolynomial((1,)) == FPolynomial((7, 11, 6, 1))
    assert (q - q) == FPolynomial()
    assert -FPolynomial((1, 2)) + FPolynomial((1, 2)) == FPolynomial(())
    assert FPolynomial((3, 0, 0)).degree == 0


def test_simplex_coefficients():
    for a in range(1, 7):
        assert list(FPolynomial.simplex(a).coeffs) == [comb(a, i + 1) for i in range(a)]


def test_str_and_index():
    p = FPolynomial((7, 11, 6, 1))
    assert str(p) == "7 + 11q + 6q^2 + q^3"
    assert p[1] == 11 and p[9] == 0
