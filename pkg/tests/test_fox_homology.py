import pytest
import sympy
from hypothesis import given, strategies as st

from mcgknots.errors import DomainError
from mcgknots.freegroup import FreeWord, parse_free_word
from mcgknots.groupcalc import (INFINITE, LaurentPolynomial, Presentation, alexander_poly,
                                branched_cover_homology, fox_derivative, fox_formula_order,
                                group_order, resultant, torus_alexander, torus_group_presentation)
from mcgknots.groupcalc.fox import abelianize, infer_weights
from mcgknots.groupcalc.homology import sylvester_matrix
from mcgknots.groupcalc.presentations import substituted_torus_presentation

t = sympy.Symbol("t")
kc = st.tuples(st.integers(1, 4).map(lambda r: 2 * r + 1), st.integers(1, 2))


def sympy_torus_alexander(k, h):
    q, rem = sympy.div(sympy.expand((t ** (k * h) - 1) * (t - 1)), sympy.expand((t ** k - 1) * (t ** h - 1)), t)
    assert rem == 0
    return sympy.Poly(q, t).all_coeffs()[::-1]


def test_fox_derivative_basic():
    w = parse_free_word("x y x^-1")
    assert str(fox_derivative(w, "x")) == "1 + -1*x y x^-1"
    assert str(fox_derivative(w, "y")) == "x"


def test_fundamental_formula():
    # w - 1 = sum_g (dw/dg)(g - 1), checked after abelianization with generic weights
    w = parse_free_word("x^2 y^-1 x y^3 x^-2")
    weights = {"x": 2, "y": 3}
    lhs = abelianize(fox_derivative(w, "x"), weights) * LaurentPolynomial({2: 1, 0: -1}) + \
        abelianize(fox_derivative(w, "y"), weights) * LaurentPolynomial({3: 1, 0: -1})
    total = 2 * w.exponent_sum("x") + 3 * w.exponent_sum("y")
    assert lhs == LaurentPolynomial({total: 1, 0: -1})


def test_trefoil():
    assert str(torus_alexander(2, 3)) == "t^2 - t + 1"
    p = Presentation.from_json({"generators": ["a", "b"], "relators": ["a b a b^-1 a^-1 b^-1"]})
    assert str(alexander_poly(p, infer_weights(p))) == "t^2 - t + 1"


def test_unknot():
    p = Presentation(("x",), ())
    assert alexander_poly(p, (1,)) == 1


def test_inconsistent_weights():
    with pytest.raises(DomainError, match="inconsistent"):
        alexander_poly(torus_group_presentation(3, 1), (1, 1))


@pytest.mark.parametrize("k, h", [(2, 3), (3, 5), (5, 7), (4, 9), (3, 7)])
def test_torus_alexander_matches_sympy(k, h):
    assert torus_alexander(k, h).coefficients() == sympy_torus_alexander(k, h)


@given(kc)
def test_alexander_on_both_presentations(kc_):
    k, c = kc_
    expected = torus_alexander(k, c * k + 2)
    assert alexander_poly(torus_group_presentation(k, c), (k, 1)).equal_up_to_units(expected)
    assert alexander_poly(substituted_torus_presentation(k, c), (0, 1)).equal_up_to_units(expected)


def test_resultant_small():
    # Res(t - 2, t - 3) = -1
    assert resultant([1, -2], [1, -3]) == -1
    assert resultant([1, 0, 1], [1, 1]) == 2


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=5), st.lists(st.integers(-5, 5), min_size=2, max_size=5))
def test_resultant_matches_sympy(f, g):
    if not f[0] or not g[0]:
        return
    value = resultant(f, g)
    assert value == sympy.Matrix(sylvester_matrix(f, g)).det()
    # sympy's own resultant can differ in sign when g(0) = 0
    assert abs(value) == abs(sympy.resultant(sympy.Poly(f, t), sympy.Poly(g, t)))


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3), st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_resultant_product_formula(roots_f, roots_g):
    f = sympy.Poly(sympy.prod([t - a for a in roots_f]), t).all_coeffs()
    g = sympy.Poly(sympy.prod([t - b for b in roots_g]), t).all_coeffs()
    expected = sympy.prod([a - b for a in roots_f for b in roots_g])
    assert resultant([int(c) for c in f], [int(c) for c in g]) == expected


def test_anchor_orders():
    assert branched_cover_homology(3, 1, 2) == []
    assert branched_cover_homology(5, 1, 2) == []
    assert branched_cover_homology(3, 1, 3) == [5, 5]
    assert branched_cover_homology(3, 2, 6) == [4, 4, 0, 0]
    assert group_order([4, 4, 0, 0]) == INFINITE


@pytest.mark.parametrize("k", [3, 5, 7])
@pytest.mark.parametrize("c", [1, 2])
def test_homology_order_matches_resultant(k, c):
    delta = torus_alexander(k, c * k + 2)
    for n in range(2, 9):
        assert group_order(branched_cover_homology(k, c, n)) == fox_formula_order(delta, n)


def test_fox_formula_requires_knot_polynomial():
    with pytest.raises(DomainError):
        fox_formula_order(LaurentPolynomial({0: 3}), 2)
    with pytest.raises(DomainError):
        branched_cover_homology(3, 1, 1)
