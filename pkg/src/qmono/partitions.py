"""Partition combinatorics: enumeration, multiplicities, the centralizer
size z, distinct rearrangements of the parts with their prefix sums, and
full symmetric-group enumeration with cycle decompositions.

Enumeration orders are deterministic: reverse-lexicographic for partitions,
lexicographic for rearrangements and permutations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import ResourceLimitError, UsageError

DERANGEMENT_LENGTH_CAP = 8
PERMUTATION_CAP = 8


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers (possibly empty)."""

    parts: tuple

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise UsageError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise UsageError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> dict:
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def remove_part(self, i: int) -> "Partition":
        if i not in self.parts:
            raise UsageError(f"{i} is not a part of {self.parts}")
        rest = list(self.parts)
        rest.remove(i)
        return Partition(rest)

    def repetition_factor(self) -> int:
        """Product of the factorials of the part multiplicities."""
        out = 1
        for m in self.multiplicities().values():
            out *= math.factorial(m)
        return out

    def to_json(self) -> list:
        return list(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _partitions_rec(n: int, max_part: int, prefix: list, out: list):
    if n == 0:
        out.append(Partition(prefix))
        return
    for p in range(min(n, max_part), 0, -1):
        prefix.append(p)
        _partitions_rec(n - p, p, prefix, out)
        prefix.pop()


def partitions_of(n: int, max_length: int | None = None) -> list:
    """All partitions of n in reverse-lexicographic order; n = 0 gives the
    empty partition."""
    if n < 0:
        raise UsageError("weight must be non-negative")
    out: list = []
    _partitions_rec(n, n if n else 0, [], out)
    if n == 0:
        out = [Partition(())]
    if max_length is not None:
        out = [mu for mu in out if mu.length <= max_length]
    return out


def partitions_up_to(w: int) -> list:
    """All partitions of each weight 1..w, ascending weight, reverse-lex
    within a weight."""
    if w < 0:
        raise UsageError("weight must be non-negative")
    out: list = []
    for n in range(1, w + 1):
        out.extend(partitions_of(n))
    return out


@dataclass(frozen=True)
class Derangement:
    """A distinct rearrangement of a partition's parts with its prefix sums.

    The empty prefix sum is 0 by convention, so ``prefix_sums[i]`` is the sum
    of ``entries[:i + 1]``."""

    entries: tuple
    prefix_sums: tuple

    def prefix_sum(self, i: int) -> int:
        """Sum of the first i entries; i = 0 gives 0."""
        return 0 if i == 0 else self.prefix_sums[i - 1]


def _distinct_permutations(pool: tuple) -> Iterator[tuple]:
    # Lexicographic multiset permutations: pick the smallest unused distinct
    # value first, recurse on the remainder.
    if not pool:
        yield ()
        return
    seen = set()
    for i, v in enumerate(pool):
        if v in seen:
            continue
        seen.add(v)
        for rest in _distinct_permutations(pool[:i] + pool[i + 1:]):
            yield (v,) + rest


def derangements(mu: Partition, cap: int = DERANGEMENT_LENGTH_CAP) -> list:
    """The distinct rearrangements of mu's parts, lexicographic order,
    each with prefix sums filled in."""
    if mu.length > cap:
        raise ResourceLimitError(
            f"partition length {mu.length} exceeds rearrangement cap {cap}"
        )
    pool = tuple(sorted(mu.parts))
    out = []
    for entries in _distinct_permutations(pool):
        sums = []
        acc = 0
        for e in entries:
            acc += e
            sums.append(acc)
        out.append(Derangement(entries, tuple(sums)))
    return out


def z_of(mu: Partition) -> int:
    """The centralizer size of a permutation of cycle type mu:
    product over i of i^m_i * m_i!."""
    out = 1
    for i, m in mu.multiplicities().items():
        out *= i ** m * math.factorial(m)
    return out


@dataclass(frozen=True)
class PermutationWithCycles:
    """A bijection on {1..n} (``mapping[k]`` is the image of k + 1) together
    with its disjoint cycles, each rotated to start at its smallest element
    and sorted by that element."""

    mapping: tuple
    cycles: tuple

    @property
    def n(self) -> int:
        return len(self.mapping)

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles), reverse=True))


def _cycles_of(mapping: tuple) -> tuple:
    n = len(mapping)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        k = mapping[start - 1]
        while k != start:
            cyc.append(k)
            seen[k] = True
            k = mapping[k - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def permutations_with_cycles(n: int, cap: int = PERMUTATION_CAP) -> list:
    """All n! permutations of {1..n} in lexicographic order, decomposed into
    cycles."""
    if n < 0:
        raise UsageError("n must be non-negative")
    if n > cap:
        raise ResourceLimitError(f"permutation degree {n} exceeds cap {cap}")
    out = []
    for mapping in itertools.permutations(range(1, n + 1)):
        out.append(PermutationWithCycles(mapping, _cycles_of(mapping)))
    return out
