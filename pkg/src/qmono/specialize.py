"""Closed forms for monomial symmetric functions evaluated on the two-letter
geometric alphabet (a - b)/(1 - q), together with the generator
specializations and two independent brute-force oracles.

Both closed forms sum over the distinct rearrangements c of the partition's
parts, one product of fractions per rearrangement:

* form "theorem1" uses numerators  a^c_i * q^(prefix sum before i) - b^c_i,
* form "theorem3" uses numerators  a^c_i * q^((length - i) * c_i) - b^c_i,

each over the denominator 1 - q^(prefix sum through i).  The two forms are
equal as rational functions; verifying that equality across partitions is
one of the package's main jobs.

The power-sum oracle expands the monomial function over symmetric-group
cycle decompositions, and the direct oracle evaluates on the explicit finite
alphabet {1, q, ..., q^(N-1)}; both are independent of the closed forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FactoredFraction, Polynomial
from .errors import UsageError
from .partitions import (
    DERANGEMENT_LENGTH_CAP,
    PERMUTATION_CAP,
    Partition,
    derangements,
    permutations_with_cycles,
)

UNIVERSE_ABQ = ("a", "b", "q")

FORM_THEOREM1 = "theorem1"
FORM_THEOREM3 = "theorem3"
FORM_ORACLE_POWERSUM = "oracle-powersum"
FORM_ORACLE_DIRECT = "oracle-direct"
FORM_GENERATOR = "generator"


@dataclass(frozen=True)
class SpecResult:
    """A specialized value over {a, b, q} tagged with the formula used."""

    partition: Partition
    value: FactoredFraction
    formula: str

    def is_ab_homogeneous(self) -> bool:
        """Degree check: with denominators cleared (they involve q only),
        every numerator term has joint (a, b)-degree equal to the weight."""
        return self.value.numerator.is_homogeneous_in(
            ("a", "b"), self.partition.weight
        )


def _one_minus_q_power(m: int) -> Polynomial:
    return Polynomial.one(UNIVERSE_ABQ) - Polynomial.variable(UNIVERSE_ABQ, "q", m)


def _numerator_theorem1(c: int, i: int, length: int, before: int) -> Polynomial:
    # a^c q^(prefix before) - b^c
    return Polynomial(
        UNIVERSE_ABQ,
        {(c, 0, before): 1, (0, c, 0): -1},
    )


def _numerator_theorem3(c: int, i: int, length: int, before: int) -> Polynomial:
    # a^c q^((length - i) c) - b^c, with i counted from 1
    return Polynomial(
        UNIVERSE_ABQ,
        {(c, 0, (length - i) * c): 1, (0, c, 0): -1},
    )


_NUMERATORS = {
    FORM_THEOREM1: _numerator_theorem1,
    FORM_THEOREM3: _numerator_theorem3,
}


def monomial_spec(
    mu: Partition, form: str = FORM_THEOREM1, cap: int = DERANGEMENT_LENGTH_CAP
) -> SpecResult:
    """The monomial symmetric function of shape mu on (a - b)/(1 - q), as a
    single fraction over the common denominator."""
    if form not in _NUMERATORS:
        raise UsageError(f"unknown form {form!r}")
    numerator_of = _NUMERATORS[form]
    length = mu.length
    terms = []
    for d in derangements(mu, cap=cap):
        num = Polynomial.one(UNIVERSE_ABQ)
        den = []
        for i, c in enumerate(d.entries, start=1):
            num = num * numerator_of(c, i, length, d.prefix_sum(i - 1))
            den.append(_one_minus_q_power(d.prefix_sum(i)))
        terms.append(FactoredFraction(num, den))
    return SpecResult(
        mu, FactoredFraction.sum(terms, universe=UNIVERSE_ABQ), form
    )


def generator_spec(kind: str, n: int) -> SpecResult:
    """Specialization of a generator on (a - b)/(1 - q):

    * elementary: product over i = 1..n of (a q^(i-1) - b)/(1 - q^i),
    * complete:   product over i = 1..n of (a - b q^(i-1))/(1 - q^i),
    * power:      (a^n - b^n)/(1 - q^n).
    """
    if n < 1:
        raise UsageError("generator index must be at least 1")
    if kind == "power":
        num = Polynomial(UNIVERSE_ABQ, {(n, 0, 0): 1, (0, n, 0): -1})
        value = FactoredFraction(num, [_one_minus_q_power(n)])
        return SpecResult(Partition((n,)), value, FORM_GENERATOR)
    if kind == "elementary":
        mu = Partition([1] * n)
        num = Polynomial.one(UNIVERSE_ABQ)
        den = []
        for i in range(1, n + 1):
            num = num * Polynomial(UNIVERSE_ABQ, {(1, 0, i - 1): 1, (0, 1, 0): -1})
            den.append(_one_minus_q_power(i))
        return SpecResult(mu, FactoredFraction(num, den), FORM_GENERATOR)
    if kind == "complete":
        mu = Partition((n,))
        num = Polynomial.one(UNIVERSE_ABQ)
        den = []
        for i in range(1, n + 1):
            num = num * Polynomial(UNIVERSE_ABQ, {(1, 0, 0): 1, (0, 1, i - 1): -1})
            den.append(_one_minus_q_power(i))
        return SpecResult(mu, FactoredFraction(num, den), FORM_GENERATOR)
    raise UsageError(f"unknown generator kind {kind!r}")


def oracle_powersum(mu: Partition, cap: int = PERMUTATION_CAP) -> SpecResult:
    """Independent oracle: expand the monomial function over the cycle
    decompositions of the symmetric group on its positions.

    (1 / prod m_i!) * sum over permutations of (-1)^(length - #cycles)
    * product over cycles of (a^s - b^s)/(1 - q^s), where s is the sum of
    the parts whose positions the cycle contains."""
    length = mu.length
    parts = mu.parts
    terms = []
    for perm in permutations_with_cycles(length, cap=cap):
        sign = -1 if (length - len(perm.cycles)) % 2 else 1
        num = Polynomial.constant(UNIVERSE_ABQ, sign)
        den = []
        for cyc in perm.cycles:
            s = sum(parts[j - 1] for j in cyc)
            num = num * Polynomial(UNIVERSE_ABQ, {(s, 0, 0): 1, (0, s, 0): -1})
            den.append(_one_minus_q_power(s))
        terms.append(FactoredFraction(num, den))
    total = FactoredFraction.sum(terms, universe=UNIVERSE_ABQ)
    total = total * Fraction(1, mu.repetition_factor())
    return SpecResult(mu, total, FORM_ORACLE_POWERSUM)


def oracle_direct(mu: Partition, N: int) -> SpecResult:
    """Independent oracle: evaluate the monomial function on the explicit
    alphabet {1, q, ..., q^(N-1)} as a polynomial in q (empty denominator)."""
    if N < mu.length:
        raise UsageError("alphabet size must be at least the partition length")
    padded = tuple(mu.parts) + (0,) * (N - mu.length)
    total = Polynomial.zero(UNIVERSE_ABQ)
    # Small N only; set-dedup of full permutations is plenty here.
    for exps in sorted(set(itertools.permutations(padded))):
        power = sum(i * e for i, e in enumerate(exps))
        total = total + Polynomial.variable(UNIVERSE_ABQ, "q", power)
    return SpecResult(mu, FactoredFraction(total), FORM_ORACLE_DIRECT)


def spec_oracle(mu: Partition, mode: str, N: int | None = None, cap: int = PERMUTATION_CAP) -> SpecResult:
    """Dispatch helper matching the CLI's oracle names."""
    if mode == "powersum":
        return oracle_powersum(mu, cap=cap)
    if mode == "direct":
        if N is None:
            raise UsageError("direct oracle needs an alphabet size N")
        return oracle_direct(mu, N)
    raise UsageError(f"unknown oracle mode {mode!r}")
