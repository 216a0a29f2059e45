import pytest

from qmono.algebra import FactoredFraction, Polynomial, frac_eq
from qmono.errors import ResourceLimitError, UsageError
from qmono.partitions import Partition, partitions_up_to
from qmono.specialize import (
    UNIVERSE_ABQ,
    generator_spec,
    monomial_spec,
    oracle_direct,
    oracle_powersum,
    spec_oracle,
)

ONE = Polynomial.one(UNIVERSE_ABQ)
A = Polynomial.variable(UNIVERSE_ABQ, "a")
B = Polynomial.variable(UNIVERSE_ABQ, "b")
Q = Polynomial.variable(UNIVERSE_ABQ, "q")


class TestPrefixForm:
    def test_single_row_is_the_power_action(self):
        for n in (1, 3, 5):
            got = monomial_spec(Partition((n,))).value
            expected = FactoredFraction(A ** n - B ** n, [ONE - Q ** n])
            assert frac_eq(got, expected)

    def test_column_two(self):
        got = monomial_spec(Partition((1, 1))).value
        expected = FactoredFraction(
            (A - B) * (A * Q - B), [ONE - Q, ONE - Q ** 2]
        )
        assert frac_eq(got, expected)

    def test_two_one_by_hand(self):
        # Two rearrangements: (2,1) and (1,2).
        got = monomial_spec(Partition((2, 1))).value
        expected = FactoredFraction.sum(
            [
                FactoredFraction(
                    (A ** 2 - B ** 2) * (A * Q ** 2 - B),
                    [ONE - Q ** 2, ONE - Q ** 3],
                ),
                FactoredFraction(
                    (A - B) * (A ** 2 * Q - B ** 2),
                    [ONE - Q, ONE - Q ** 3],
                ),
            ],
            universe=UNIVERSE_ABQ,
        )
        assert frac_eq(got, expected)
        assert frac_eq(got, oracle_powersum(Partition((2, 1))).value)

    def test_empty_partition(self):
        assert frac_eq(
            monomial_spec(Partition(())).value, FactoredFraction.one(UNIVERSE_ABQ)
        )

    def test_formula_tags(self):
        assert monomial_spec(Partition((2,))).formula == "theorem1"
        assert monomial_spec(Partition((2,)), "theorem3").formula == "theorem3"
        assert oracle_powersum(Partition((2,))).formula == "oracle-powersum"

    def test_unknown_form(self):
        with pytest.raises(UsageError):
            monomial_spec(Partition((1,)), "theorem2")

    def test_length_cap(self):
        with pytest.raises(ResourceLimitError):
            monomial_spec(Partition((1,) * 9))


class TestTriangularForm:
    def test_single_row(self):
        got = monomial_spec(Partition((4,)), "theorem3").value
        assert frac_eq(got, FactoredFraction(A ** 4 - B ** 4, [ONE - Q ** 4]))

    def test_column_two(self):
        got = monomial_spec(Partition((1, 1)), "theorem3").value
        expected = FactoredFraction(
            (A * Q - B) * (A - B), [ONE - Q, ONE - Q ** 2]
        )
        assert frac_eq(got, expected)
        assert frac_eq(got, monomial_spec(Partition((1, 1))).value)

    @pytest.mark.parametrize("parts", [(2, 1), (3, 2), (2, 2, 1), (3, 1, 1)])
    def test_forms_agree(self, parts):
        mu = Partition(parts)
        assert frac_eq(
            monomial_spec(mu, "theorem1").value,
            monomial_spec(mu, "theorem3").value,
        )


class TestGenerators:
    def test_elementary_on_three_letters(self):
        # e_2(1, q, q^2) = q + q^2 + q^3.
        got = generator_spec("elementary", 2).value.substitute(
            {"a": 1, "b": Q ** 3}
        )
        assert frac_eq(got, FactoredFraction(Q + Q ** 2 + Q ** 3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_complete_is_letter_swapped_elementary(self, n):
        swapped = generator_spec("elementary", n).value.substitute(
            {"a": B, "b": A}
        )
        got = generator_spec("complete", n).value
        assert frac_eq(got, swapped * (-1) ** n)

    def test_power(self):
        got = generator_spec("power", 3).value
        assert frac_eq(got, FactoredFraction(A ** 3 - B ** 3, [ONE - Q ** 3]))

    def test_column_partition_matches_elementary(self):
        for n in (2, 3):
            assert frac_eq(
                generator_spec("elementary", n).value,
                monomial_spec(Partition((1,) * n)).value,
            )

    def test_row_partition_matches_power(self):
        for n in (2, 5):
            assert frac_eq(
                generator_spec("power", n).value,
                monomial_spec(Partition((n,))).value,
            )

    def test_bad_kind(self):
        with pytest.raises(UsageError):
            generator_spec("schur", 2)
        with pytest.raises(UsageError):
            generator_spec("power", 0)


class TestOracles:
    def test_powersum_two_one_is_p2p1_minus_p3(self):
        expected = FactoredFraction.sum(
            [
                FactoredFraction(
                    (A ** 2 - B ** 2) * (A - B), [ONE - Q ** 2, ONE - Q]
                ),
                -FactoredFraction(A ** 3 - B ** 3, [ONE - Q ** 3]),
            ],
            universe=UNIVERSE_ABQ,
        )
        assert frac_eq(oracle_powersum(Partition((2, 1))).value, expected)

    def test_direct_single_part(self):
        got = oracle_direct(Partition((1,)), 3).value
        assert frac_eq(got, FactoredFraction(ONE + Q + Q ** 2))

    def test_direct_two_one(self):
        # x1^2 x2 + x1 x2^2 at (1, q) is q + q^2.
        got = oracle_direct(Partition((2, 1)), 2).value
        assert frac_eq(got, FactoredFraction(Q + Q ** 2))

    def test_direct_needs_enough_letters(self):
        with pytest.raises(UsageError):
            oracle_direct(Partition((2, 1)), 1)

    def test_dispatch(self):
        assert spec_oracle(Partition((2,)), "powersum").formula == "oracle-powersum"
        assert spec_oracle(Partition((2,)), "direct", N=2).formula == "oracle-direct"
        with pytest.raises(UsageError):
            spec_oracle(Partition((2,)), "direct")
        with pytest.raises(UsageError):
            spec_oracle(Partition((2,)), "interpolation")

    def test_permutation_cap(self):
        with pytest.raises(ResourceLimitError):
            oracle_powersum(Partition((1,) * 9))


class TestProperties:
    @pytest.mark.parametrize("w", range(1, 6))
    def test_oracle_agreement(self, w):
        for mu in partitions_up_to(w):
            assert frac_eq(
                monomial_spec(mu).value, oracle_powersum(mu).value
            ), mu

    @pytest.mark.parametrize("w", range(1, 6))
    def test_evaluation_agreement(self, w):
        for mu in partitions_up_to(w):
            for N in range(mu.length, 5):
                got = monomial_spec(mu).value.substitute({"a": 1, "b": Q ** N})
                assert frac_eq(got, oracle_direct(mu, N).value), (mu, N)

    def test_homogeneity(self):
        for mu in partitions_up_to(6):
            for form in ("theorem1", "theorem3"):
                assert monomial_spec(mu, form).is_ab_homogeneous(), (mu, form)

    def test_prefix_recurrence_small(self):
        # (1 - q^w) Z = sum over distinct parts i of (a^i q^(w-i) - b^i) Z'.
        for mu in partitions_up_to(5):
            w = mu.weight
            lhs = monomial_spec(mu).value * (ONE - Q ** w)
            rhs = FactoredFraction.sum(
                [
                    monomial_spec(mu.remove_part(i)).value
                    * (A ** i * Q ** (w - i) - B ** i)
                    for i in set(mu.parts)
                ],
                universe=UNIVERSE_ABQ,
            )
            assert frac_eq(lhs, rhs), mu

    def test_shifted_recurrence_small(self):
        # (1 - q^w) W(a) = sum over parts of (a^i - b^i) W'(qa).
        qa = Polynomial.monomial(UNIVERSE_ABQ, {"q": 1, "a": 1})
        for mu in partitions_up_to(5):
            w = mu.weight
            lhs = monomial_spec(mu, "theorem3").value * (ONE - Q ** w)
            rhs = FactoredFraction.sum(
                [
                    monomial_spec(mu.remove_part(i), "theorem3").value.substitute(
                        {"a": qa}
                    )
                    * (A ** i - B ** i)
                    for i in set(mu.parts)
                ],
                universe=UNIVERSE_ABQ,
            )
            assert frac_eq(lhs, rhs), mu
