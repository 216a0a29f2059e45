import pytest

from qmono.algebra import Polynomial, geometric_sum
from qmono.errors import NotApplicableError, ResourceLimitError
from qmono.partitions import Partition, partitions_up_to
from qmono.positivity import (
    UNIVERSE_Q,
    UNIVERSE_QT,
    auxiliary_identity_check,
    auxiliary_product,
    inverted_polynomial,
    positivity_polynomial,
    positivity_report,
    subset_part_sums,
    two_row_closed_form,
)


def qt(terms):
    return Polynomial(UNIVERSE_QT, terms)


class TestAuxiliaryProduct:
    def test_two_one(self):
        # Subsets {1}, {2}, {1,2} have part sums 2, 1, 3.
        assert sorted(subset_part_sums(Partition((2, 1)))) == [1, 2, 3]
        expected = geometric_sum(UNIVERSE_Q, "q", 2) * geometric_sum(
            UNIVERSE_Q, "q", 3
        )
        assert auxiliary_product(Partition((2, 1))) == expected

    def test_single_row(self):
        assert auxiliary_product(Partition((3,))) == geometric_sum(
            UNIVERSE_Q, "q", 3
        )

    def test_column_two(self):
        assert auxiliary_product(Partition((1, 1))) == geometric_sum(
            UNIVERSE_Q, "q", 2
        )

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            auxiliary_product(Partition((1,) * 9))


class TestPositivityPolynomial:
    def test_single_row_is_geometric_in_t(self):
        for n in (1, 2, 4):
            expected = qt({(0, j): 1 for j in range(n)})
            assert positivity_polynomial(Partition((n,))) == expected

    def test_column_two_collapses_to_one(self):
        assert positivity_polynomial(Partition((1, 1))) == Polynomial.one(
            UNIVERSE_QT
        )

    def test_two_one_value(self):
        expected = qt({(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1})
        assert positivity_polynomial(Partition((2, 1))) == expected

    def test_inverted_polynomial_shift(self):
        H = positivity_polynomial(Partition((2, 1)))
        Hbar = inverted_polynomial(H, 1)
        # q * (1 + 2q + 2/q + 1) = 2 + 2q + 2q^2.
        assert Hbar == Polynomial(UNIVERSE_Q, {(0,): 2, (1,): 2, (2,): 2})

    def test_inverted_polynomial_detects_negative_exponents(self):
        H = qt({(0, 2): 1})
        assert inverted_polynomial(H, 1) is None


class TestReports:
    @pytest.mark.parametrize("parts", [(2, 1), (4,), (2, 2), (3, 2, 1), (2, 1, 1)])
    def test_report_passes(self, parts):
        report = positivity_report(Partition(parts))
        assert report.all_coefficients_nonnegative_integers
        assert report.Hbar is not None
        assert report.identity_holds
        assert report.passed()

    def test_single_part_reduces_to_generator_product(self):
        # For one row the factorization collapses onto the complete-generator
        # product, so the identity check doubles as that anchor.
        report = positivity_report(Partition((5,)))
        assert report.passed()

    @pytest.mark.parametrize("w", range(1, 7))
    def test_sweep_small(self, w):
        for mu in partitions_up_to(w):
            if mu.length > 4:
                continue
            assert positivity_report(mu).passed(), mu
            assert auxiliary_identity_check(mu), mu


class TestTwoRowClosedForm:
    def test_two_one(self):
        expected = qt({(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1})
        assert two_row_closed_form(2, 1) == expected

    @pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 1), (5, 2)])
    def test_matches_construction(self, n, k):
        assert two_row_closed_form(n, k) == positivity_polynomial(
            Partition((n, k))
        )

    def test_equal_parts_rejected(self):
        with pytest.raises(NotApplicableError):
            two_row_closed_form(2, 2)
        with pytest.raises(NotApplicableError):
            two_row_closed_form(1, 2)
