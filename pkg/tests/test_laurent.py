import pytest
import sympy
from hypothesis import given, strategies as st

from mcgknots.errors import VerificationError
from mcgknots.groupcalc import LaurentPolynomial

t = sympy.Symbol("t")
polys = st.builds(LaurentPolynomial.from_coefficients,
                  st.lists(st.integers(-5, 5), max_size=6), st.integers(-3, 3))


def to_sympy(f):
    return sum((c * t ** e for e, c in f.terms.items()), sympy.Integer(0))


def test_str_and_normalize():
    f = LaurentPolynomial({-2: -1, -1: 1, 0: -1})
    assert str(f.normalized()) == "t^2 - t + 1"
    assert f.equal_up_to_units(LaurentPolynomial({5: 1, 6: -1, 7: 1}))


def test_negative_power_of_unit():
    assert LaurentPolynomial.monomial(2, -1) ** -3 == LaurentPolynomial.monomial(-6, -1)
    with pytest.raises(Exception):
        LaurentPolynomial({0: 1, 1: 1}) ** -1


def test_evaluation_at_negative_exponent_is_exact():
    f = LaurentPolynomial({-1: 1, 1: 1})
    assert f(2) == sympy.Rational(5, 2)


def test_inexact_division_raises():
    with pytest.raises(VerificationError):
        LaurentPolynomial({2: 1, 0: 1}) // LaurentPolynomial({1: 1, 0: -1})


@given(polys, polys)
def test_ring_operations_match_sympy(f, g):
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f + g) - to_sympy(f) - to_sympy(g)) == 0


@given(polys, polys)
def test_exact_division_inverts_multiplication(f, g):
    if g.is_zero:
        return
    assert (f * g) // g == f
