"""Proposition checks: reports, assertions, and generated sweeps."""

from fractions import Fraction

import pytest

from codekraft import (
    ChainViolationError,
    NotRefinementError,
    PropositionId,
    check_chain,
    check_equal_kraft_finiteness,
    check_mcmillan,
    check_monotonicity,
    check_power_law,
    code_power,
    cover_exponent_bound,
    equal_kraft_refinements,
    first_factorization,
    is_irredundant_refinement,
    is_refinement,
    is_ud,
    kraft_sum,
)

from helpers import bcode, binary_codes, random_ud_pairs


class TestMcMillan:
    def test_boundary_prefix_code(self):
        report = check_mcmillan(bcode("0", "10", "11"))
        assert report.passed and report.proposition_id is PropositionId.MCMILLAN
        assert report.get("kraft_sum") == Fraction(1)
        assert report.get("is_ud") is True

    def test_strictly_below_one(self):
        report = check_mcmillan(bcode("1", "10", "100"))
        assert report.passed
        assert report.get("is_ud") is True
        assert report.get("kraft_sum") == Fraction(7, 8)

    def test_trailing_zero_mirror_is_not_ud(self):
        # 100 = 10·0, so the mirror image of the suffix code above collides
        report = check_mcmillan(bcode("0", "10", "100"))
        assert report.passed
        assert report.get("status") == "out of hypothesis"
        assert report.get("kraft_sum") == Fraction(7, 8)

    def test_non_ud_out_of_hypothesis(self):
        report = check_mcmillan(bcode("0", "00"))
        assert report.passed
        assert report.get("status") == "out of hypothesis"
        assert report.get("kraft_sum") == Fraction(3, 4)

    def test_linear_bound_details_recorded(self):
        report = check_mcmillan(bcode("0", "10", "11"), kmax=3)
        m = report.get("cover_exponent_m")
        assert m == 2
        for k in (1, 2, 3):
            assert report.get(f"k={k}.kraft_pow") == Fraction(1)
            assert report.get(f"k={k}.linear_bound") == (m - 1) * k + 1

    def test_empty_code(self):
        report = check_mcmillan(bcode())
        assert report.passed and report.get("kraft_sum") == Fraction(0)


class TestPowerLaw:
    def test_strict_for_ambiguous_code(self):
        report = check_power_law(bcode("0", "01", "10"), kmax=2)
        assert report.passed
        assert report.get("kraft_sum") == Fraction(1)
        assert report.get("k=2.kraft_of_power") == Fraction(7, 8)
        assert report.get("k=2.kraft_pow") == Fraction(1)
        k = report.get("witness_k")
        assert k == 4
        assert report.get(f"k={k}.kraft_of_power") < report.get(f"k={k}.kraft_pow")

    def test_equality_for_prefix_code(self):
        report = check_power_law(bcode("0", "10", "11"), kmax=3)
        assert report.passed
        for k in (1, 2, 3):
            assert report.get(f"k={k}.kraft_of_power") == Fraction(1)

    def test_singleton_powers(self):
        report = check_power_law(bcode("00"), kmax=3)
        assert report.passed
        for k in (1, 2, 3):
            assert report.get(f"k={k}.kraft_of_power") == Fraction(1, 4) ** k

    def test_kmax_validated(self):
        with pytest.raises(ValueError):
            check_power_law(bcode("0"), kmax=1)

    def test_corpus_sweep(self):
        for code in binary_codes(2, 3):
            assert check_power_law(code, kmax=3).passed

    def test_full_corpus_sweep(self):
        # equality at k <= 3 for every UD member, strictness at the
        # witness-derived k for every non-UD member, McMillan throughout
        for code in binary_codes(3, 4):
            assert check_mcmillan(code).passed
            assert check_power_law(code, kmax=3).passed


class TestMonotonicity:
    def test_prefix_pair(self):
        report = check_monotonicity(bcode("0", "10", "11"), bcode("0", "1"), kmax=2)
        assert report.passed
        assert report.get("kraft_coarse") == Fraction(1)
        assert report.get("kraft_fine") == Fraction(1)
        assert report.get("irredundant") is True
        assert report.get("cover_exponent_m") == 2
        assert report.get("k=2.words_checked") == 9

    def test_strict_value_gap(self):
        report = check_monotonicity(bcode("0011"), bcode("0", "011"), kmax=2)
        assert report.passed
        assert report.get("kraft_coarse") == Fraction(1, 16)
        assert report.get("kraft_fine") == Fraction(5, 8)

    def test_reflexive_pair(self):
        code = bcode("0", "10", "11")
        report = check_monotonicity(code, code)
        assert report.passed
        assert report.get("irredundant") is True
        assert report.get("kraft_coarse") == report.get("kraft_fine")

    def test_not_refinement_rejected(self):
        with pytest.raises(NotRefinementError):
            check_monotonicity(bcode("0011"), bcode("01", "1"))

    def test_non_ud_rejected(self):
        with pytest.raises(ValueError):
            check_monotonicity(bcode("0", "00"), bcode("0"))
        with pytest.raises(ValueError):
            check_monotonicity(bcode("0000"), bcode("0", "00"))

    def test_generated_pairs(self):
        for coarse, fine in random_ud_pairs(30, seed=99):
            report = check_monotonicity(coarse, fine, kmax=2)
            assert report.passed


class TestEqualKraftRefinements:
    def test_prefix_code(self):
        result = equal_kraft_refinements(bcode("0", "10", "11"))
        assert result == (bcode("0", "1"), bcode("0", "10", "11"))

    def test_single_word_00(self):
        # {0} refines {00} but halves nothing: K({0}) = 1/2 != 1/4
        assert equal_kraft_refinements(bcode("00")) == (bcode("00"),)

    def test_unit_code(self):
        assert equal_kraft_refinements(bcode("0", "1")) == (bcode("0", "1"),)

    def test_requires_ud(self):
        with pytest.raises(ValueError):
            equal_kraft_refinements(bcode("0", "00"))

    def test_members_verified(self):
        code = bcode("0", "10", "11")
        value = kraft_sum(code)
        for member in equal_kraft_refinements(code):
            assert is_ud(member).is_ud
            assert is_refinement(code, member).holds
            assert kraft_sum(member) == value

    def test_finiteness_report(self):
        report = check_equal_kraft_finiteness(bcode("0", "10", "11"))
        assert report.passed
        assert report.get("count") == 2
        assert report.get("member_0") == "{0, 1}"


class TestChain:
    def test_full_binary_powers_pass(self):
        base = bcode("0", "1")
        chain = [base, code_power(base, 2), code_power(base, 4)]
        report = check_chain(chain)
        assert report.passed
        assert report.get("kraft_sum") == Fraction(1)
        assert report.get("length") == 3
        assert report.get("member_2.cardinality") == 16

    def test_kraft_mismatch_raises(self):
        base = bcode("0", "10")
        with pytest.raises(ChainViolationError) as exc:
            check_chain([base, code_power(base, 2)])
        assert "3/4" in str(exc.value) and "9/16" in str(exc.value)
        assert exc.value.index == 0

    def test_single_member_vacuous(self):
        assert check_chain([bcode("0", "10")]).passed

    def test_empty_chain_vacuous(self):
        assert check_chain([]).passed

    def test_repeat_raises(self):
        code = bcode("0", "1")
        with pytest.raises(ChainViolationError):
            check_chain([code, code])

    def test_order_violation_raises(self):
        # {00,01,10,11} cannot build the length-1 words of {0,1}
        with pytest.raises(ChainViolationError):
            check_chain([bcode("00", "01", "10", "11"), bcode("0", "1")])

    def test_non_ud_member_rejected(self):
        with pytest.raises(ValueError):
            check_chain([bcode("0", "00")])


class TestCoverInclusionOnPairs:
    def test_factor_counts_within_cover_window(self):
        for coarse, fine in random_ud_pairs(20, seed=5):
            m = cover_exponent_bound(coarse, fine)
            for k in (1, 2):
                for word in code_power(coarse, k, max_words=10**6):
                    factorization = first_factorization(word, fine)
                    assert factorization is not None
                    assert k <= len(factorization.factors) <= m * k

    def test_strictness_for_redundant_refinements(self):
        seen_redundant = 0
        for coarse, fine in random_ud_pairs(40, seed=11):
            if not is_irredundant_refinement(coarse, fine):
                seen_redundant += 1
                assert kraft_sum(coarse) < kraft_sum(fine)
        assert seen_redundant > 0
