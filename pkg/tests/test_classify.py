"""Coefficient-condition classification against exhaustive ground truth."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onestroke import (
    BudgetExceededError,
    NotPermutationError,
    PermClass,
    Polynomial,
    brute_force_is_one_stroke,
    brute_force_is_permutation,
    classify,
    cycle_decomposition,
    eval_mod,
    is_one_stroke,
    is_permutation,
    iterate_naive,
    one_stroke_conditions,
)

from helpers import (
    F,
    G,
    deg3_one_strokes,
    deg3_permutations,
    image_table,
    table_is_bijective,
)

family_polys = st.builds(
    Polynomial, st.lists(st.integers(0, 7), min_size=1, max_size=5)
)


class TestKnownClassifications:
    def test_single_cycle_cubic(self):
        assert classify(F) is PermClass.ONE_STROKE

    def test_permutation_with_two_cycles(self):
        assert classify(G) is PermClass.PERMUTATION_ONLY

    def test_even_linear_term(self):
        assert classify(Polynomial([0, 2])) is PermClass.NOT_PERMUTATION

    def test_square_is_not_injective(self):
        sq = Polynomial([0, 0, 1])
        assert not is_permutation(sq)
        assert image_table(sq, 2) == [0, 1, 0, 1]
        assert not brute_force_is_permutation(sq, 2)

    def test_constants_never_permute(self):
        assert classify(Polynomial([5])) is PermClass.NOT_PERMUTATION
        assert classify(Polynomial([0])) is PermClass.NOT_PERMUTATION

    def test_identity_permutes_but_is_not_single_cycle(self):
        assert classify(Polynomial([0, 1])) is PermClass.PERMUTATION_ONLY

    def test_odd_translation_is_single_cycle(self):
        assert classify(Polynomial([1, 1])) is PermClass.ONE_STROKE

    def test_negative_coefficients_classify_by_residue(self):
        assert is_one_stroke(Polynomial([1, 1, 0, -4]))


class TestConditionDetail:
    def test_all_five_pass_for_single_cycle(self):
        assert all(c.ok for c in one_stroke_conditions(F))

    def test_two_cycle_cubic_fails_exactly_the_odd_sum_condition(self):
        failed = [c for c in one_stroke_conditions(G) if not c.ok]
        assert len(failed) == 1
        c = failed[0]
        assert "odd-index" in c.label
        assert (c.lhs, c.rhs, c.modulus) == (6, 4, 4)

    def test_condition_count_and_moduli(self):
        conds = one_stroke_conditions(F)
        assert len(conds) == 5
        assert [c.modulus for c in conds] == [2, 2, 2, 4, 4]


class TestAgainstExhaustiveCheck:
    def test_single_cycle_implies_permutation_conditions(self):
        for p in deg3_one_strokes():
            assert is_permutation(p)

    @settings(deadline=None, max_examples=150)
    @given(family_polys, st.integers(2, 10))
    def test_permutation_test_matches_bijectivity(self, p, w):
        assert is_permutation(p) == brute_force_is_permutation(p, w)

    @settings(deadline=None, max_examples=150)
    @given(family_polys, st.integers(3, 10))
    def test_single_cycle_test_matches_cycle_walk(self, p, w):
        if brute_force_is_permutation(p, w):
            assert is_one_stroke(p) == brute_force_is_one_stroke(p, w)
        else:
            assert not is_one_stroke(p)

    @pytest.mark.parametrize("w", [1, 2])
    def test_single_cycle_condition_implies_walk_at_tiny_widths(self, w):
        for p in deg3_one_strokes():
            assert brute_force_is_one_stroke(p, w)


class TestBruteForce:
    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError):
            brute_force_is_permutation(F, 3, budget=4)
        assert brute_force_is_permutation(F, 3, budget=8)

    def test_default_budget_refuses_huge_width(self):
        with pytest.raises(BudgetExceededError):
            brute_force_is_permutation(F, 21)

    def test_bad_budget_rejected(self):
        with pytest.raises(ValueError):
            brute_force_is_permutation(F, 3, budget=0)

    def test_cycle_walk_requires_bijection(self):
        with pytest.raises(NotPermutationError):
            brute_force_is_one_stroke(Polynomial([0, 0, 1]), 3)


class TestCycleDecomposition:
    def test_single_cycle_cubic_orbits(self):
        assert cycle_decomposition(F, 2).cycles == ((0, 1, 2, 3),)
        assert cycle_decomposition(F, 3).cycles == ((0, 1, 6, 7, 4, 5, 2, 3),)
        assert cycle_decomposition(F, 4).cycles == (
            (0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13, 2, 3),
        )

    def test_two_cycle_cubic_orbits(self):
        assert cycle_decomposition(G, 2).cycles == ((0, 1, 2, 3),)
        assert cycle_decomposition(G, 3).cycles == ((0, 1, 2, 3), (4, 5, 6, 7))

    def test_identity_fixed_points(self):
        report = cycle_decomposition(Polynomial([0, 1]), 1)
        assert report.cycles == ((0,), (1,))
        assert report.cycle_count == 2
        assert report.max_cycle_length == 1

    def test_report_counts(self):
        report = cycle_decomposition(G, 3)
        assert report.width == 3
        assert report.cycle_count == 2
        assert report.max_cycle_length == 4

    def test_canonical_order(self):
        for p in deg3_permutations()[:40]:
            report = cycle_decomposition(p, 5)
            mins = [c[0] for c in report.cycles]
            assert mins == sorted(mins)
            assert all(c[0] == min(c) for c in report.cycles)
            assert sorted(x for c in report.cycles for x in c) == list(range(32))

    def test_rejects_non_permutation(self):
        with pytest.raises(NotPermutationError):
            cycle_decomposition(Polynomial([0, 0, 1]), 3)


class TestStructuralIdentities:
    def test_half_shift_by_half_period(self):
        # Adding 2^(w-1) to the input of any permutation adds 2^(w-1)
        # to its output mod 2^w.
        for p in deg3_permutations():
            for w in range(1, 6):
                n, half = 1 << w, 1 << (w - 1)
                table = image_table(p, w)
                for x in range(n):
                    assert table[(x + half) % n] == (table[x] + half) % n

    def test_iterates_of_permutations_stay_bijective(self):
        rng = random.Random(7)
        perms = rng.sample(deg3_permutations(), 20)
        for p in perms:
            table = image_table(p, 8)
            composed = list(range(256))
            for j in range(1, 5):
                composed = [table[v] for v in composed]
                assert table_is_bijective(composed)

    def test_cycle_midpoint_is_half(self):
        for p in deg3_one_strokes():
            for w in range(1, 11):
                half = 1 << (w - 1)
                assert iterate_naive(p, 0, half, w) == half % (1 << w)

    def test_first_iterates_from_zero_decide_single_cycle(self):
        # f(0) odd, f^2(0) = 2 mod 4, f^4(0) = 4 mod 8 together pick out
        # exactly the single-cycle permutations.
        for p in deg3_permutations():
            seeded = (
                eval_mod(p, 0, 3) % 2 == 1
                and iterate_naive(p, 0, 2, 3) % 4 == 2
                and iterate_naive(p, 0, 4, 3) % 8 == 4
            )
            assert seeded == is_one_stroke(p)
