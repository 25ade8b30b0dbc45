from hypothesis import given, strategies as st

from mcgknots.freegroup import FreeAutomorphism, FreeWord, are_conjugate, is_inner, parse_free_word

GENS = ("x", "y", "z")
free_words = st.lists(st.tuples(st.sampled_from(GENS), st.sampled_from([1, -1])), max_size=10).map(FreeWord)


def test_reduction_on_construction():
    assert parse_free_word("x y y^-1 x^-1") == FreeWord()
    assert str(parse_free_word("x x y^-2")) == "x^2 y^-2"


def test_exponent_sum_and_delete():
    w = parse_free_word("x y^3 z x^-1 y")
    assert w.exponent_sum("y") == 4
    assert str(w.delete(["z"])) == "x y^3 x^-1 y"


def test_conjugation_is_inner():
    w = parse_free_word("x y^-1 z")
    phi = FreeAutomorphism.conjugation(GENS, w)
    assert is_inner(phi) == w
    assert is_inner(FreeAutomorphism.identity(GENS)) == FreeWord()


def test_nontrivial_outer():
    phi = FreeAutomorphism(GENS, {"x": parse_free_word("x y"), "y": FreeWord.gen("y"),
                                  "z": FreeWord.gen("z")})
    assert is_inner(phi) is None


@given(free_words)
def test_inner_detection_recovers_conjugator(w):
    assert is_inner(FreeAutomorphism.conjugation(GENS, w)) == w


@given(free_words, free_words)
def test_conjugates_detected(u, g):
    assert are_conjugate(g.inverse() * u * g, u)


@given(free_words, free_words)
def test_group_axioms(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u * u.inverse() == FreeWord()
