import math
from collections import Counter

import pytest

from qmono.errors import ResourceLimitError, UsageError
from qmono.partitions import (
    Derangement,
    Partition,
    derangements,
    partitions_of,
    partitions_up_to,
    permutations_with_cycles,
    z_of,
)


class TestPartition:
    def test_validation(self):
        with pytest.raises(UsageError):
            Partition((1, 2))
        with pytest.raises(UsageError):
            Partition((2, 0))
        assert Partition(()).length == 0

    def test_accessors(self):
        mu = Partition((3, 1, 1))
        assert mu.weight == 5
        assert mu.length == 3
        assert mu.multiplicity(1) == 2
        assert mu.multiplicities() == {3: 1, 1: 2}
        assert mu.repetition_factor() == 2
        assert mu.remove_part(3) == Partition((1, 1))
        assert mu.to_json() == [3, 1, 1]

    def test_remove_missing_part(self):
        with pytest.raises(UsageError):
            Partition((2, 1)).remove_part(3)


class TestEnumeration:
    def test_up_to_two(self):
        assert [p.parts for p in partitions_up_to(2)] == [(1,), (2,), (1, 1)]

    def test_weight_four_by_hand(self):
        assert [p.parts for p in partitions_of(4)] == [
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
        ]

    def test_zero_weight(self):
        assert partitions_up_to(0) == []
        assert partitions_of(0) == [Partition(())]

    def test_counts(self):
        # Partition numbers p(1)..p(8): 1 1 2 3 5 7 11 15 22 summed = 66.
        assert len(partitions_up_to(8)) == 66


class TestDerangements:
    def test_two_one(self):
        got = derangements(Partition((2, 1)))
        assert [d.entries for d in got] == [(1, 2), (2, 1)]
        assert [d.prefix_sums for d in got] == [(1, 3), (2, 3)]

    def test_identical_parts(self):
        got = derangements(Partition((1, 1)))
        assert got == [Derangement((1, 1), (1, 2))]

    def test_count_two_one_one(self):
        assert len(derangements(Partition((2, 1, 1)))) == 3

    def test_empty_partition(self):
        assert derangements(Partition(())) == [Derangement((), ())]

    def test_prefix_sum_convention(self):
        d = derangements(Partition((2, 1)))[0]
        assert d.prefix_sum(0) == 0
        assert d.prefix_sum(2) == 3

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            derangements(Partition((1,) * 9))

    @pytest.mark.parametrize("w", range(1, 9))
    def test_count_formula_and_sorting(self, w):
        for mu in partitions_of(w):
            ds = derangements(mu)
            assert len(ds) * mu.repetition_factor() == math.factorial(mu.length)
            for d in ds:
                assert tuple(sorted(d.entries, reverse=True)) == mu.parts
                assert all(
                    a < b for a, b in zip(d.prefix_sums, d.prefix_sums[1:])
                )
                assert d.prefix_sums[-1] == mu.weight


class TestZ:
    def test_examples(self):
        assert z_of(Partition((1, 1, 1))) == 6
        assert z_of(Partition((2, 1))) == 2
        assert z_of(Partition((3, 3))) == 18
        assert z_of(Partition(())) == 1


class TestPermutations:
    def test_n_two(self):
        perms = permutations_with_cycles(2)
        assert perms[0].cycles == ((1,), (2,))
        assert perms[1].cycles == ((1, 2),)

    def test_n_one(self):
        perms = permutations_with_cycles(1)
        assert len(perms) == 1
        assert perms[0].cycles == ((1,),)

    def test_n_three_cycle_types(self):
        perms = permutations_with_cycles(3)
        assert len(perms) == 6
        types = Counter(p.cycle_type().parts for p in perms)
        assert types == {(1, 1, 1): 1, (2, 1): 3, (3,): 2}

    def test_cycles_partition_the_domain(self):
        for p in permutations_with_cycles(4):
            seen = sorted(k for cyc in p.cycles for k in cyc)
            assert seen == [1, 2, 3, 4]
            for cyc in p.cycles:
                for i, k in enumerate(cyc):
                    assert p.mapping[k - 1] == cyc[(i + 1) % len(cyc)]

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            permutations_with_cycles(9)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_cycle_type_counts_match_z(self, n):
        counts = Counter(
            p.cycle_type().parts for p in permutations_with_cycles(n)
        )
        total = 0
        for lam in partitions_of(n):
            expected = math.factorial(n) // z_of(lam)
            assert counts[lam.parts] == expected
            total += expected
        assert total == math.factorial(n)
