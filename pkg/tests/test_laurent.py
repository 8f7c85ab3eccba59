import random
from fractions import Fraction

import pytest

from knotpair.laurent import (
    LaurentPoly,
    RationalLaurent,
    TagMismatchError,
    chebyshev_U,
    chebyshev_U_explicit,
    jones_from_bracket,
    jones_span,
    jones_span_inclusive,
    jones_to_text,
    lp_arith,
    lp_derivative_at_one,
    lp_extremes,
    lp_invert_variable,
    poly_from_text,
    poly_to_text,
)


def P(d, tag="A"):
    return LaurentPoly.from_dict(d, tag)


def test_zero_has_no_stored_coefficients():
    assert P({3: 0, -2: 0}).terms == ()
    assert P({}).is_zero()


def test_basic_arith_examples():
    a = P({1: 1, -1: 1})
    assert lp_arith("add", a, P({-1: -1})) == P({1: 1})
    assert lp_arith("mul", P({}), a) == P({})
    assert lp_arith("mul", P({0: 1, 4: -1}), P({0: 1, 4: 1})) == P({0: 1, 8: -1})
    assert lp_arith("neg", a) == P({1: -1, -1: -1})
    assert lp_arith("scale", a, 3) == P({1: 3, -1: 3})


def test_tag_mismatch_is_usage_error():
    with pytest.raises(TagMismatchError):
        P({1: 1}, "A") + P({1: 1}, "z")


def test_ring_axioms_randomized():
    rng = random.Random(1234)

    def rand_poly():
        return P(
            {rng.randint(-20, 20): rng.randint(-9, 9) for _ in range(rng.randint(0, 6))}
        )

    for _ in range(1000):
        x, y, z = rand_poly(), rand_poly(), rand_poly()
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_invert_variable_involution_and_homomorphism():
    rng = random.Random(99)
    for _ in range(200):
        x = P({rng.randint(-15, 15): rng.randint(-5, 5) for _ in range(4)})
        y = P({rng.randint(-15, 15): rng.randint(-5, 5) for _ in range(4)})
        assert lp_invert_variable(lp_invert_variable(x)) == x
        assert lp_invert_variable(x * y) == lp_invert_variable(x) * lp_invert_variable(y)
        assert lp_invert_variable(x + y) == lp_invert_variable(x) + lp_invert_variable(y)
    assert lp_invert_variable(P({1: 1})) == P({-1: 1})
    assert lp_invert_variable(P({0: 1, 4: -1})) == P({0: 1, -4: -1})


def test_extremes():
    assert lp_extremes(P({-4: -1, 8: 1})) == (-4, 8, 12)
    assert lp_extremes(P({0: 3})) == (0, 0, 0)
    with pytest.raises(ValueError):
        lp_extremes(P({}))


def test_derivative_at_one():
    assert lp_derivative_at_one(P({4: 1})) == 4
    assert lp_derivative_at_one(P({0: 1, 8: -1})) == -8  # 1 - A^(4q), q = 2


def test_chebyshev_initial_values_and_recursion():
    assert chebyshev_U(0) == LaurentPoly.one("x")
    assert chebyshev_U(1) == LaurentPoly.monomial(2, 1, "x")
    assert chebyshev_U(2) == LaurentPoly.from_dict({2: 4, 0: -1}, "x")


def test_chebyshev_explicit_sum_formula():
    for n in range(13):
        assert chebyshev_U(n) == chebyshev_U_explicit(n)


def test_jones_from_bracket_substitution():
    # bracket -A^2 - A^-2 at writhe 0 becomes -t^(1/2) - t^(-1/2)
    j = jones_from_bracket(P({2: -1, -2: -1}), 0)
    assert j.tag == "t"
    assert jones_to_text(j) == "-t^(-1/2) - t^(1/2)"
    assert jones_span(j) == 1
    assert jones_span_inclusive(j) == 2


def test_jones_multiplicative_under_disjoint_union():
    rng = random.Random(5)
    delta = P({2: -1, -2: -1})
    for _ in range(50):
        b1 = P({rng.randint(-8, 8): rng.randint(-4, 4) for _ in range(3)})
        b2 = P({rng.randint(-8, 8): rng.randint(-4, 4) for _ in range(3)})
        if b1.is_zero() or b2.is_zero():
            continue
        w1, w2 = rng.randint(-5, 5), rng.randint(-5, 5)
        lhs = jones_from_bracket(delta * b1 * b2, w1 + w2)
        rhs = (
            jones_from_bracket(b1, w1)
            * jones_from_bracket(b2, w2)
            * jones_from_bracket(delta, 0)
        )
        assert lhs == rhs


def test_rational_laurent_equality_by_cross_multiplication():
    # S_hat form: (1 - A^8) / (A^2 + A^-2) equals A^2 - A^6 over 1
    num = P({0: 1, 8: -1})
    den = P({2: 1, -2: 1})
    frac = RationalLaurent(num, den)
    assert frac.equals(P({2: 1, 6: -1}))
    assert not frac.equals(P({2: 1}))
    with pytest.raises(ZeroDivisionError):
        RationalLaurent(num, P({}))


def test_canonical_text_round_trip():
    cases = [
        P({-4: -1, 0: 2, 8: 1}),
        P({}),
        P({0: 1}),
        P({2: -3, 1: 1, -7: 5}),
        P({2: 1, 0: 1}, "z"),
    ]
    for p in cases:
        assert poly_from_text(poly_to_text(p), p.tag) == p
    assert poly_to_text(P({-4: -1, 0: 2, 8: 1})) == "-A^-4 + 2 + A^8"


def test_parse_error_reports_position():
    with pytest.raises(ValueError):
        poly_from_text("A^2 + + 3")
    with pytest.raises(ValueError):
        poly_from_text("A^2 z")


def test_jones_text_round_trip_quarter_powers():
    j = P({-2: -1, 5: 3}, "t")
    text = jones_to_text(j)
    assert poly_from_text(text, "t", exp_denom=4) == j


def test_exponent_overflow_aborts():
    with pytest.raises(OverflowError):
        LaurentPoly.from_dict({2**63: 1})
