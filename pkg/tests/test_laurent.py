from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeq.laurent import (
    MAX_SERIES_ORDER,
    DeltaSeries,
    LaurentPoly,
    NotDivisible,
    PolynomialParseError,
    ZeroSpecialization,
    exp_series,
    q_content,
    q_integer,
    symmetric_bracket,
)

from conftest import F, P


def naive_product(a: dict, b: dict) -> dict:
    """Independent term-by-term convolution used as the multiplication oracle."""
    out: dict[int, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}


def dense_divmod(a: dict, b: dict) -> tuple[dict, dict]:
    """Independent long division oracle on exponent-shifted dense lists."""
    va, vb = min(a), min(b)
    da, db = max(a) - va, max(b) - vb
    rem = [Fraction(0)] * (da + 1)
    for e, c in a.items():
        rem[e - va] = c
    bs = [Fraction(0)] * (db + 1)
    for e, c in b.items():
        bs[e - vb] = c
    quot = [Fraction(0)] * max(da - db + 1, 0)
    for d in range(da - db, -1, -1):
        c = rem[d + db] / bs[db]
        quot[d] = c
        for j in range(db + 1):
            rem[d + j] -= c * bs[j]
    return (
        {d + va - vb: c for d, c in enumerate(quot) if c},
        {e + va: c for e, c in enumerate(rem) if c},
    )


class TestArithmetic:
    def test_additive_inverse(self, q):
        assert q + (-1) * q == LaurentPoly.zero()

    def test_difference_of_squares(self, q):
        assert (q - 1) * (q + 1) == P("q^2-1")

    def test_inverse_monomial_product(self, q):
        # oracle first: expand (1/q) * (q^2 + 2q) term by term
        a = {-1: Fraction(1)}
        b = {2: Fraction(1), 1: Fraction(2)}
        assert naive_product(a, b) == {1: Fraction(1), 0: Fraction(2)}
        assert LaurentPoly(a) * LaurentPoly(b) == P("q+2")

    def test_scalar_operations(self, q):
        assert 3 * q == P("3*q")
        assert q * Fraction(1, 2) == P("1/2*q")
        assert q - 1 == P("q-1")
        assert 1 - q == P("-q+1")

    def test_powers(self, q):
        assert (q - 1) ** 0 == LaurentPoly.one()
        assert (q - 1) ** 3 == P("q^3-3*q^2+3*q-1")
        with pytest.raises(ValueError):
            (q + 1) ** -1


class TestDivision:
    def test_perfect_square(self, q):
        assert P("q^2-2*q+1").divide_exact(q - 1) == q - 1

    def test_not_divisible(self, q):
        # oracle: long division leaves a nonzero remainder
        _, rem = dense_divmod({3: Fraction(1), 1: Fraction(-2)}, {1: Fraction(1), 0: Fraction(-1)})
        assert rem
        with pytest.raises(NotDivisible):
            P("q^3-2*q").divide_exact(q - 1)

    def test_zero_dividend(self, q):
        assert LaurentPoly.zero().divide_exact(q - 1) == LaurentPoly.zero()

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            LaurentPoly.one().divide_exact(LaurentPoly.zero())

    def test_laurent_shift_division(self, q):
        assert P("q+2").divide_exact(P("q^2+2*q")) == P("q^-1")


class TestEvaluation:
    def test_direct_substitution(self):
        assert P("q^2+2*q").evaluate(2) == 8
        assert P("-2-q^-1").evaluate(2) == F(-5, 2)

    def test_at_one_sums_coefficients(self):
        p = P("5*q^3-2*q+7-3*q^-2")
        assert p.evaluate(1) == 5 - 2 + 7 - 3

    def test_zero_specialization(self):
        with pytest.raises(ZeroSpecialization):
            P("q+1").evaluate(0)


class TestQFamilies:
    def test_q_integer_positive(self):
        assert q_integer(3) == P("q^2+q+1")

    def test_q_integer_zero(self):
        assert q_integer(0) == LaurentPoly.zero()

    def test_q_integer_negative(self, q):
        # oracle: [k]_q (q - 1) = q^k - 1 must hold for negative k too
        assert (P("q^-1-1")).divide_exact(q - 1) == q_integer(-1)
        assert q_integer(-1) == P("-q^-1")
        for k in range(-6, 7):
            assert q_integer(k) * (q - 1) == LaurentPoly.monomial(k) - 1

    def test_q_content(self, q):
        assert q_content(2) == P("q+q^2")
        assert q_content(-2) == P("-1-q^-1")
        assert q_content(0) == LaurentPoly.zero()
        for c in range(-6, 7):
            assert q_content(c) == q * q_integer(c)
            assert q_content(c).evaluate(1) == c

    def test_symmetric_bracket(self, q):
        assert symmetric_bracket(1) == LaurentPoly.one()
        assert symmetric_bracket(0) == LaurentPoly.zero()
        # oracle: expand (q^2 - q^-2)/(q - q^-1) by exact division
        assert (P("q^2-q^-2")).divide_exact(P("q-q^-1")) == symmetric_bracket(2)
        assert symmetric_bracket(2) == P("q+q^-1")
        for x in range(-5, 6):
            qinv = LaurentPoly.monomial(-1)
            assert symmetric_bracket(x) * (q - qinv) == LaurentPoly.monomial(x) - LaurentPoly.monomial(-x)
            assert symmetric_bracket(-x) == -symmetric_bracket(x)


class TestExpSeries:
    def test_single_q(self, q):
        assert exp_series(q, 3) == DeltaSeries((1, 1, F(1, 2), F(1, 6)))

    def test_constant(self):
        s = exp_series(P("5"), 2)
        assert tuple(s) == (5, 0, 0)

    def test_order_cap(self, q):
        exp_series(q, MAX_SERIES_ORDER)
        with pytest.raises(ValueError):
            exp_series(q, MAX_SERIES_ORDER + 1)


class TestTextFormat:
    @pytest.mark.parametrize(
        "text,terms",
        [
            ("q^2+3*q-1-2*q^-1", {2: 1, 1: 3, 0: -1, -1: -2}),
            ("-q", {1: -1}),
            ("7/2", {0: F(7, 2)}),
            ("3/2*q^-4", {-4: F(3, 2)}),
            ("q", {1: 1}),
            ("0", {}),
            ("1+q", {0: 1, 1: 1}),
        ],
    )
    def test_parse(self, text, terms):
        assert LaurentPoly.from_string(text) == LaurentPoly(terms)

    def test_canonical_printing(self):
        assert str(P("-1+q^2+3*q-2*q^-1")) == "q^2+3*q-1-2*q^-1"
        assert str(LaurentPoly.zero()) == "0"
        assert str(P("1/2*q - 1/2")) == "1/2*q-1/2"

    @pytest.mark.parametrize("bad", ["", "q^", "3q", "q+", "2**q", "q^1.5", "+", "x+1"])
    def test_parse_errors(self, bad):
        with pytest.raises(PolynomialParseError):
            LaurentPoly.from_string(bad)

    def test_substitute_power(self):
        assert P("q^2+q^-1").substitute_power(2) == P("q^4+q^-2")
        with pytest.raises(ValueError):
            P("q").substitute_power(0)


small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)
polys = st.builds(
    lambda pairs: LaurentPoly(pairs),
    st.lists(st.tuples(st.integers(-5, 5), small_fractions), max_size=5),
)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


class TestRingProperties:
    @given(polys, polys, polys)
    @settings(max_examples=100, deadline=None)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    @given(polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_exact_division_roundtrip(self, a, b):
        assert (a * b).divide_exact(b) == a

    @given(polys, polys, st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool))
    @settings(max_examples=100, deadline=None)
    def test_evaluation_is_ring_homomorphism(self, a, b, q0):
        assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)
        assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)

    @given(polys)
    @settings(max_examples=100, deadline=None)
    def test_text_roundtrip(self, a):
        assert LaurentPoly.from_string(str(a)) == a
