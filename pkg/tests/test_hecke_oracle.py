import random
from fractions import Fraction
from math import factorial

import pytest

from heckeq.diagrams import dimension, partitions
from heckeq.hecke_oracle import (
    DegenerateSpecialization,
    HeckeElement,
    apply_projector,
    fundamental_invariant,
    hecke_projector,
    irreducible_trace,
    murphy_element,
    projector_element,
    regular_trace,
    reduced_word,
    word_element,
)
from heckeq.invariant import invariant_eigenvalue

from conftest import F, Y


def random_element(n, q0, rng, size=3):
    """A small random element built from random generator words."""
    total = HeckeElement.zero(n, q0)
    for _ in range(size):
        word = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 4)))
        total = total + word_element(n, q0, word) * Fraction(rng.randint(-3, 3))
    return total


class TestGeneratorRelations:
    def test_quadratic(self):
        for q0 in (2, F(3, 2), -3):
            g1 = word_element(3, q0, (1,))
            identity = HeckeElement.identity(3, q0)
            assert g1 * g1 == g1 * (q0 - 1) + identity * Fraction(q0)

    def test_braid(self):
        assert word_element(3, 2, (1, 2, 1)) == word_element(3, 2, (2, 1, 2))
        assert word_element(4, F(5, 3), (2, 3, 2)) == word_element(4, F(5, 3), (3, 2, 3))

    def test_commuting_generators(self):
        assert word_element(4, 2, (1, 3)) == word_element(4, 2, (3, 1))

    def test_left_right_mirror(self):
        # associativity across sides: g_i (x g_j) == (g_i x) g_j
        rng = random.Random(3)
        for _ in range(5):
            x = random_element(4, 2, rng)
            for i in (1, 2, 3):
                for j in (1, 2, 3):
                    left_first = x.times_generator(i, "left").times_generator(j, "right")
                    right_first = x.times_generator(j, "right").times_generator(i, "left")
                    assert left_first == right_first

    def test_empty_word_is_identity(self):
        assert word_element(3, 2, ()) == HeckeElement.identity(3, 2)

    def test_reduced_words(self):
        assert reduced_word((1, 2, 3)) == ()
        assert reduced_word((2, 1, 3)) == (1,)
        for perm in [(3, 2, 1), (2, 3, 1), (4, 3, 2, 1), (2, 4, 1, 3)]:
            word = reduced_word(perm)
            inversions = sum(
                1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
            )
            assert len(word) == inversions
            rebuilt = word_element(len(perm), 2, word)
            assert rebuilt.coeffs == {perm: Fraction(1)}

    def test_rejects_zero_q0(self):
        with pytest.raises(ValueError):
            HeckeElement.identity(3, 0)

    def test_constructor_validates_permutations(self):
        assert HeckeElement(3, 2, {(2, 1, 3): Fraction(1)}).support_size == 1
        assert HeckeElement(3, 2, {(2, 1, 3): Fraction(0)}).support_size == 0
        with pytest.raises(ValueError):
            HeckeElement(3, 2, {(1, 1, 3): Fraction(1)})
        with pytest.raises(ValueError):
            HeckeElement(3, 2, {(1, 2): Fraction(1)})
        with pytest.raises(ValueError):
            HeckeElement(8, 2)  # beyond the oracle's n cap

    def test_mixed_algebras_rejected(self):
        a = HeckeElement.identity(3, 2)
        b = HeckeElement.identity(3, 3)
        c = HeckeElement.identity(4, 2)
        for other in (b, c):
            with pytest.raises(ValueError):
                a + other
            with pytest.raises(ValueError):
                a * other


class TestFundamentalInvariant:
    def test_h3_explicit_form(self):
        q0 = F(7, 2)
        expected = (
            word_element(3, q0, (1,))
            + word_element(3, q0, (2,))
            + word_element(3, q0, (1, 2, 1)) * F(1, q0)
        )
        assert fundamental_invariant(3, q0) == expected

    def test_centrality(self):
        for n in (2, 3, 4, 5):
            invariant = fundamental_invariant(n, 2)
            for i in range(1, n):
                gi = word_element(n, 2, (i,))
                assert gi * invariant == invariant * gi

    def test_quadratic_cayley_annihilates(self):
        q0 = F(2)
        c2 = fundamental_invariant(2, q0)
        identity = HeckeElement.identity(2, q0)
        assert c2 * c2 - c2 * (q0 - 1) - identity * q0 == HeckeElement.zero(2, q0)

    def test_cubic_cayley_annihilates(self):
        # the n = 3 Cayley polynomial, with exact rational coefficients at q0
        q0 = F(2)
        c3 = fundamental_invariant(3, q0)
        identity = HeckeElement.identity(3, q0)
        a2 = (q0 - 1) * (q0 + 4 + 1 / q0)
        a1 = q0**3 - q0**2 - 9 * q0 - 1 + 1 / q0
        a0 = (q0 - 1) * (2 * q0**2 + 5 * q0 + 2)
        combo = c3 * c3 * c3 - c3 * c3 * a2 + c3 * a1 + identity * a0
        assert combo == HeckeElement.zero(3, q0)

    def test_cubic_roots_match_eigenvalues(self):
        # the same polynomial must vanish on each published eigenvalue
        q0 = F(2)
        for rows in ((3,), (2, 1), (1, 1, 1)):
            lam = invariant_eigenvalue(Y(*rows)).evaluate(q0)
            value = (
                lam**3
                - (q0 - 1) * (q0 + 4 + 1 / q0) * lam**2
                + (q0**3 - q0**2 - 9 * q0 - 1 + 1 / q0) * lam
                + (q0 - 1) * (2 * q0**2 + 5 * q0 + 2)
            )
            assert value == 0

    def test_d3_elimination_identity(self):
        q0 = F(3)
        c3 = fundamental_invariant(3, q0)
        identity = HeckeElement.identity(3, q0)
        d3 = (
            word_element(3, q0, (1, 2))
            + word_element(3, q0, (2, 1))
            + word_element(3, q0, (1, 2, 1)) * ((q0 - 1) / q0)
        )
        lhs = c3 * c3
        rhs = identity * (3 * q0) + c3 * (2 * (q0 - 1)) + d3 * (q0 + 1 + 1 / q0)
        assert lhs == rhs


class TestMurphyElements:
    def test_l2_is_first_generator(self):
        assert murphy_element(4, 2, 2) == word_element(4, 2, (1,))

    def test_l2_l4_expansion(self):
        q0 = F(2)
        lhs = murphy_element(4, q0, 2) * murphy_element(4, q0, 4)
        g1 = word_element(4, q0, (1,))
        inner = (
            word_element(4, q0, (3,))
            + word_element(4, q0, (2, 3, 2)) * F(1, q0)
            + word_element(4, q0, (1, 2, 3, 2, 1)) * F(1, q0**2)
        )
        assert lhs == g1 * inner

    def test_murphy_elements_commute(self):
        elements = {i: murphy_element(4, 2, i) for i in (2, 3, 4)}
        for i in elements:
            for j in elements:
                assert elements[i] * elements[j] == elements[j] * elements[i]

    def test_sum_is_invariant(self):
        total = HeckeElement.zero(5, 2)
        for i in range(2, 6):
            total = total + murphy_element(5, 2, i)
        assert total == fundamental_invariant(5, 2)


class TestRegularTrace:
    def test_identity_trace_is_group_order(self):
        for n in (1, 2, 3, 4):
            assert regular_trace(HeckeElement.identity(n, 2)) == factorial(n)

    def test_trace_is_symmetric(self):
        rng = random.Random(11)
        for _ in range(4):
            a = random_element(4, 2, rng)
            b = random_element(4, 2, rng)
            assert regular_trace(a * b) == regular_trace(b * a)

    def test_generator_trace_matches_irrep_sum(self):
        # dim-weighted sum of the three irreducible traces of g_1 at q0 = 2:
        # 1*q0 + 2*(q0-1) + 1*(-1) = 3
        assert regular_trace(word_element(3, 2, (1,))) == 3

    def test_linearity(self):
        rng = random.Random(5)
        a = random_element(4, 2, rng)
        b = random_element(4, 2, rng)
        assert regular_trace(a + b) == regular_trace(a) + regular_trace(b)


class TestProjectors:
    def test_two_point_lagrange(self):
        p = hecke_projector(Y(2), 2, 2)
        assert p.coeffs == (F(1, 3), F(1, 3))
        p11 = hecke_projector(Y(1, 1), 2, 2)
        assert p11.coeffs == (F(2, 3), F(-1, 3))

    def test_projector_algebra_small(self):
        for n in (2, 3, 4):
            projectors = {g: projector_element(hecke_projector(g, n, 2)) for g in partitions(n)}
            total = HeckeElement.zero(n, 2)
            for g, p in projectors.items():
                assert p * p == p
                assert regular_trace(p) == dimension(g) ** 2
                total = total + p
            assert total == HeckeElement.identity(n, 2)
            items = list(projectors.items())
            for i, (g, p) in enumerate(items):
                for h, p2 in items[i + 1 :]:
                    assert p * p2 == HeckeElement.zero(n, 2)

    def test_eigenvector_property(self):
        for n in (2, 3, 4):
            invariant = fundamental_invariant(n, 2)
            for g in partitions(n):
                p = projector_element(hecke_projector(g, n, 2))
                lam = invariant_eigenvalue(g).evaluate(2)
                assert invariant * p == p * lam

    def test_degenerate_specializations_refused(self):
        for q0 in (1, -1):
            with pytest.raises(DegenerateSpecialization):
                hecke_projector(Y(2), 2, q0)

    def test_apply_projector_via_horner(self):
        p = hecke_projector(Y(2, 1), 3, 2)
        x = word_element(3, 2, (1, 2))
        assert apply_projector(p, x) == projector_element(p) * x


class TestIrreducibleTraces:
    @pytest.mark.parametrize(
        "rows,word,expected_fn",
        [
            ((3,), (1, 2), lambda q0: q0**2),
            ((2, 1), (1, 2), lambda q0: -q0),
            ((3,), (1,), lambda q0: q0),
            ((2, 1), (1,), lambda q0: q0 - 1),
            ((1, 1, 1), (1,), lambda q0: Fraction(-1)),
            ((1, 1, 1), (1, 2), lambda q0: Fraction(1)),
        ],
    )
    def test_h3_published_traces(self, rows, word, expected_fn):
        for q0 in (F(2), F(3)):
            assert irreducible_trace(Y(*rows), word, 3, q0) == expected_fn(q0)

    def test_h4_nonconsecutive_word(self):
        for q0 in (F(2), F(3)):
            assert irreducible_trace(Y(3, 1), (1, 3), 4, q0) == q0**2 - 2 * q0
            assert irreducible_trace(Y(4), (1, 3), 4, q0) == q0**2

    def test_identity_word_gives_dimension(self):
        for g in partitions(4):
            assert irreducible_trace(g, (), 4, 2) == dimension(g)


@pytest.mark.slow
class TestDegeneratePairAtSix:
    def test_hook_projector_annihilates_two_row_image(self):
        q0 = F(2)
        p_hook = hecke_projector(Y(4, 1, 1), 6, q0)
        p_rows = hecke_projector(Y(3, 3), 6, q0)
        image = apply_projector(p_rows, word_element(6, q0, (1, 2, 3)))
        assert image.coeffs  # a nonzero vector in the [3,3] component
        assert apply_projector(p_hook, image) == HeckeElement.zero(6, q0)

    def test_projector_algebra_at_six(self):
        q0 = F(2)
        projectors = {g: projector_element(hecke_projector(g, 6, q0)) for g in partitions(6)}
        total = HeckeElement.zero(6, q0)
        for g, p in projectors.items():
            assert apply_projector(hecke_projector(g, 6, q0), p) == p
            assert regular_trace(p) == dimension(g) ** 2
            total = total + p
        assert total == HeckeElement.identity(6, q0)
        items = list(projectors.items())
        for i, (g, p) in enumerate(items):
            for h, _ in items[i + 1 :]:
                assert apply_projector(hecke_projector(h, 6, q0), p) == HeckeElement.zero(6, q0)
