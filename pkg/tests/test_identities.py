import math
import random
from fractions import Fraction

import pytest

from qmono.algebra import FactoredFraction, Polynomial, frac_eq
from qmono.errors import ResourceLimitError, UsageError
from qmono.identities import (
    SIDE_CYCLE,
    SIDE_LEFT,
    SIDE_RIGHT,
    SIDES,
    appendix_step,
    constant_identity,
    prop5_expected,
    relabeling_invariant,
    specialization_chain_check,
    symmetrized_constant,
    symmetrized_constant_enumerated,
    symmetrized_side,
    symmetrized_side_enumerated,
    x_only_universe,
    xy_universe,
)
from qmono.partitions import Partition, partitions_up_to, z_of


def _vars(n):
    uni = xy_universe(n)
    x = {i: Polynomial.variable(uni, f"x{i}") for i in range(1, n + 1)}
    y = {i: Polynomial.variable(uni, f"y{i}") for i in range(1, n + 1)}
    return uni, Polynomial.one(uni), x, y


class TestSymmetrizedSides:
    def test_size_one(self):
        uni, one, x, y = _vars(1)
        expected = FactoredFraction(y[1] - x[1], [one - x[1]])
        for side in SIDES:
            assert frac_eq(symmetrized_side(1, side).value, expected)

    def test_size_two_written_out(self):
        uni, one, x, y = _vars(2)
        x1x2 = x[1] * x[2]
        left = FactoredFraction.sum(
            [
                FactoredFraction((y[1] - x[1]) * (y[2] - x1x2), [one - x[1], one - x1x2]),
                FactoredFraction((y[2] - x[2]) * (y[1] - x1x2), [one - x[2], one - x1x2]),
            ],
            universe=uni,
        )
        right = FactoredFraction.sum(
            [
                FactoredFraction((y[1] - x[1] ** 2) * (y[2] - x[2]), [one - x[1], one - x1x2]),
                FactoredFraction((y[2] - x[2] ** 2) * (y[1] - x[1]), [one - x[2], one - x1x2]),
            ],
            universe=uni,
        )
        cycle = FactoredFraction.sum(
            [
                FactoredFraction((y[1] - x[1]) * (y[2] - x[2]), [one - x[1], one - x[2]]),
                FactoredFraction(y[1] * y[2] - x1x2, [one - x1x2]),
            ],
            universe=uni,
        )
        assert frac_eq(symmetrized_side(2, SIDE_LEFT).value, left)
        assert frac_eq(symmetrized_side(2, SIDE_RIGHT).value, right)
        assert frac_eq(symmetrized_side(2, SIDE_CYCLE).value, cycle)
        assert frac_eq(left, right)
        assert frac_eq(left, cycle)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_peeled_assembly_matches_enumeration(self, n):
        for side in SIDES:
            assert frac_eq(
                symmetrized_side(n, side).value,
                symmetrized_side_enumerated(n, side).value,
            )

    @pytest.mark.parametrize("n", [2, 3])
    def test_three_way(self, n):
        left = symmetrized_side(n, SIDE_LEFT).value
        assert frac_eq(left, symmetrized_side(n, SIDE_RIGHT).value)
        assert frac_eq(left, symmetrized_side(n, SIDE_CYCLE).value)

    @pytest.mark.parametrize("n", [2, 3])
    def test_relabeling_invariance(self, n):
        rng = random.Random(n)
        sigma = list(range(1, n + 1))
        i, j = rng.sample(range(n), 2)
        sigma[i], sigma[j] = sigma[j], sigma[i]
        for side in SIDES:
            assert relabeling_invariant(symmetrized_side(n, side), tuple(sigma))

    def test_cap_and_usage(self):
        with pytest.raises(ResourceLimitError):
            symmetrized_side(6, SIDE_LEFT)
        with pytest.raises(UsageError):
            symmetrized_side(2, "thm8-left")
        with pytest.raises(UsageError):
            symmetrized_side(0, SIDE_LEFT)


class TestConstantIdentities:
    def test_prop5_two_one_by_hand(self):
        # (1+q^2)(1-q) + (1+q)(1-q^2) = 2 (1-q^3) over (1-q^3).
        uni = ("q",)
        one = Polynomial.one(uni)
        q = Polynomial.variable(uni, "q")
        lhs = (one + q ** 2) * (one - q) + (one + q) * (one - q ** 2)
        assert lhs == (one - q ** 3) * 2
        got = constant_identity(Partition((2, 1)), "prop5")
        assert frac_eq(got, FactoredFraction.constant(uni, 2))
        assert frac_eq(got, prop5_expected(Partition((2, 1))))

    def test_littlewood_examples(self):
        got = constant_identity(Partition((2, 1)), "littlewood")
        # 1/(2*3) + 1/(1*3) = 1/2 = 1/z.
        assert got.numerator.constant_value() == Fraction(1, 2)
        assert Fraction(1, z_of(Partition((2, 1)))) == Fraction(1, 2)
        got = constant_identity(Partition((1, 1)), "littlewood")
        assert got.numerator.constant_value() == Fraction(1, 2)

    @pytest.mark.parametrize("w", range(1, 7))
    def test_littlewood_sweep(self, w):
        for mu in partitions_up_to(w):
            got = constant_identity(mu, "littlewood")
            assert got.numerator.constant_value() == Fraction(1, z_of(mu)), mu

    def test_unknown_kind(self):
        with pytest.raises(UsageError):
            constant_identity(Partition((2,)), "prop9")


class TestSymmetrizedConstants:
    def test_prop7_small(self):
        for n in (1, 2, 3):
            got = symmetrized_constant(n, "prop7")
            expected = FactoredFraction.constant(
                x_only_universe(n), math.factorial(n)
            )
            assert frac_eq(got, expected)

    def test_prop8_two_by_hand(self):
        # Common denominator x1 x2 (x1 + x2).
        uni = x_only_universe(2)
        x1 = Polynomial.variable(uni, "x1")
        x2 = Polynomial.variable(uni, "x2")
        got = symmetrized_constant(2, "prop8")
        assert frac_eq(got, FactoredFraction(Polynomial.one(uni), [x1, x2]))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_peeled_matches_enumeration(self, n):
        for kind in ("prop7", "prop8"):
            assert frac_eq(
                symmetrized_constant(n, kind),
                symmetrized_constant_enumerated(n, kind),
            )

    def test_prop8_value(self):
        for n in (3, 4):
            uni = x_only_universe(n)
            expected = FactoredFraction(
                Polynomial.one(uni),
                [Polynomial.variable(uni, f"x{i}") for i in range(1, n + 1)],
            )
            assert frac_eq(symmetrized_constant(n, "prop8"), expected)


class TestAppendixRecurrences:
    def test_size_two_left_relation_14_by_hand(self):
        # f_2(x1, x2; y1, 1) = (y1 - x1)/(1 - x1) + (y1 - x1 x2)/(1 - x1 x2).
        uni, one, x, y = _vars(2)
        f2 = symmetrized_side(2, SIDE_LEFT).value.substitute({"y2": 1})
        expected = FactoredFraction.sum(
            [
                FactoredFraction(y[1] - x[1], [one - x[1]]),
                FactoredFraction(y[1] - x[1] * x[2], [one - x[1] * x[2]]),
            ],
            universe=uni,
        )
        assert frac_eq(f2, expected)
        assert appendix_step(2, 14, "L")

    def test_size_two_cycle_relation_13(self):
        assert appendix_step(2, 13, "R")

    @pytest.mark.parametrize("relation", [13, 14])
    @pytest.mark.parametrize("side", ["L", "R"])
    def test_size_three(self, relation, side):
        assert appendix_step(3, relation, side)

    def test_bad_arguments(self):
        with pytest.raises(UsageError):
            appendix_step(1, 13, "L")
        with pytest.raises(UsageError):
            appendix_step(2, 15, "L")
        with pytest.raises(UsageError):
            appendix_step(2, 13, "C")


class TestSpecializationChain:
    @pytest.mark.parametrize("parts", [(2, 1), (3, 1)])
    def test_chain(self, parts):
        assert specialization_chain_check(Partition(parts))
