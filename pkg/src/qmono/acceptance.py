"""The package's exit criteria as callable checks.

Every check is exact (zero tolerance): each instance either verifies as an
identity of polynomials/fractions or is reported as a failure.  The CLI
``selftest`` command and the acceptance test module both run this list.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import FactoredFraction, Polynomial, frac_eq
from .identities import (
    SIDE_CYCLE,
    SIDE_LEFT,
    SIDE_RIGHT,
    appendix_step,
    constant_identity,
    prop5_expected,
    symmetrized_constant,
    symmetrized_side,
    x_only_universe,
    xy_universe,
)
from .macdonald import (
    alphabet_shift_check,
    coefficient_sum_identities,
    eigencheck,
    eigenvalue_at_zero_matches,
    expansion_agreement,
    generating_shift_check,
    inverse_expansions_check,
    omega_row_is_elementary,
)
from .partitions import Partition, partitions_up_to, z_of
from .positivity import (
    auxiliary_identity_check,
    positivity_polynomial,
    positivity_report,
    two_row_closed_form,
)
from .specialize import (
    UNIVERSE_ABQ,
    generator_spec,
    monomial_spec,
    oracle_direct,
    oracle_powersum,
)

UNIVERSE_QT = ("q", "t")


@dataclass
class CriterionResult:
    number: int
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: str):
        self.instances += 1
        if not ok:
            self.failures.append(label)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] criterion {self.number}: {self.name} "
            f"({self.instances} instances, {len(self.failures)} failures, "
            f"{self.elapsed:.1f}s)"
        )

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "name": self.name,
            "instances": self.instances,
            "failures": list(self.failures),
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def criterion_1_two_forms(max_weight: int = 8) -> CriterionResult:
    """Both closed forms of the monomial specialization agree."""
    r = CriterionResult(1, "two closed forms agree")
    t0 = time.time()
    for mu in partitions_up_to(max_weight):
        z = monomial_spec(mu, "theorem1").value
        w = monomial_spec(mu, "theorem3").value
        r.check(frac_eq(z, w), f"mu={mu}")
    r.elapsed = time.time() - t0
    return r


def criterion_2_powersum_oracle(max_weight: int = 7) -> CriterionResult:
    """The closed form equals the cycle-expansion oracle."""
    r = CriterionResult(2, "power-sum oracle equivalence")
    t0 = time.time()
    for mu in partitions_up_to(max_weight):
        z = monomial_spec(mu).value
        o = oracle_powersum(mu).value
        r.check(frac_eq(z, o), f"mu={mu}")
    r.elapsed = time.time() - t0
    return r


def criterion_3_evaluation_oracle(max_weight: int = 6, max_N: int = 5) -> CriterionResult:
    """Substituting a = 1, b = q^N matches direct evaluation on
    {1, q, ..., q^(N-1)}."""
    r = CriterionResult(3, "finite-alphabet evaluation oracle")
    t0 = time.time()
    q = Polynomial.variable(UNIVERSE_ABQ, "q")
    for mu in partitions_up_to(max_weight):
        z = monomial_spec(mu).value
        for N in range(mu.length, max_N + 1):
            got = z.substitute({"a": 1, "b": q ** N})
            expected = oracle_direct(mu, N).value
            r.check(frac_eq(got, expected), f"mu={mu} N={N}")
    r.elapsed = time.time() - t0
    return r


def criterion_4_gauss_polynomials(max_N: int = 6) -> CriterionResult:
    """The elementary generator at a = 1, b = q^N is q^(k(k-1)/2) times the
    q-binomial product."""
    r = CriterionResult(4, "Gauss polynomial specialization")
    t0 = time.time()
    one = Polynomial.one(UNIVERSE_ABQ)
    q = Polynomial.variable(UNIVERSE_ABQ, "q")
    for N in range(1, max_N + 1):
        for k in range(1, N + 1):
            got = generator_spec("elementary", k).value.substitute(
                {"a": 1, "b": q ** N}
            )
            num = Polynomial.variable(UNIVERSE_ABQ, "q", k * (k - 1) // 2)
            den = []
            for i in range(1, k + 1):
                num = num * (one - q ** (N - i + 1))
                den.append(one - q ** i)
            r.check(frac_eq(got, FactoredFraction(num, den)), f"k={k} N={N}")
    r.elapsed = time.time() - t0
    return r


def criterion_5_recurrences(max_weight: int = 8) -> CriterionResult:
    """Weight-peeling recurrences for both closed forms, generic and at the
    one-letter specializations."""
    r = CriterionResult(5, "peeling recurrences")
    t0 = time.time()
    one = Polynomial.one(UNIVERSE_ABQ)
    one_qt = Polynomial.one(UNIVERSE_QT)
    t = Polynomial.variable(UNIVERSE_QT, "t")
    qa = Polynomial.monomial(UNIVERSE_ABQ, {"q": 1, "a": 1})
    for mu in partitions_up_to(max_weight):
        w = mu.weight
        peel = one - Polynomial.variable(UNIVERSE_ABQ, "q", w)
        peel_qt = one_qt - Polynomial.variable(UNIVERSE_QT, "q", w)

        z = monomial_spec(mu, "theorem1").value
        rhs = [
            monomial_spec(mu.remove_part(i), "theorem1").value
            * Polynomial(UNIVERSE_ABQ, {(i, 0, w - i): 1, (0, i, 0): -1})
            for i in set(mu.parts)
        ]
        r.check(
            frac_eq(z * peel, FactoredFraction.sum(rhs, universe=UNIVERSE_ABQ)),
            f"prefix recurrence mu={mu}",
        )

        wv = monomial_spec(mu, "theorem3").value
        rhs = [
            monomial_spec(mu.remove_part(i), "theorem3").value.substitute({"a": qa})
            * Polynomial(UNIVERSE_ABQ, {(i, 0, 0): 1, (0, i, 0): -1})
            for i in set(mu.parts)
        ]
        r.check(
            frac_eq(wv * peel, FactoredFraction.sum(rhs, universe=UNIVERSE_ABQ)),
            f"shifted recurrence mu={mu}",
        )

        m_spec = z.substitute({"a": 1, "b": t}, universe=UNIVERSE_QT)
        rhs = [
            monomial_spec(mu.remove_part(i)).value.substitute(
                {"a": 1, "b": t}, universe=UNIVERSE_QT
            )
            * Polynomial(UNIVERSE_QT, {(w - i, 0): 1, (0, i): -1})
            for i in set(mu.parts)
        ]
        r.check(
            frac_eq(m_spec * peel_qt, FactoredFraction.sum(rhs, universe=UNIVERSE_QT)),
            f"one-letter recurrence mu={mu}",
        )

        q_qt = Polynomial.variable(UNIVERSE_QT, "q")
        rhs = [
            monomial_spec(mu.remove_part(i)).value.substitute(
                {"a": q_qt, "b": t}, universe=UNIVERSE_QT
            )
            * (one_qt - Polynomial.variable(UNIVERSE_QT, "t", i))
            for i in set(mu.parts)
        ]
        r.check(
            frac_eq(m_spec * peel_qt, FactoredFraction.sum(rhs, universe=UNIVERSE_QT)),
            f"shifted-alphabet recurrence mu={mu}",
        )
    r.elapsed = time.time() - t0
    return r


def _display_example_n2() -> dict:
    """The three displayed size-2 sums, written out term by term."""
    uni = xy_universe(2)
    one = Polynomial.one(uni)
    x1 = Polynomial.variable(uni, "x1")
    x2 = Polynomial.variable(uni, "x2")
    y1 = Polynomial.variable(uni, "y1")
    y2 = Polynomial.variable(uni, "y2")
    x1x2 = x1 * x2
    left = FactoredFraction.sum(
        [
            FactoredFraction((y1 - x1) * (y2 - x1x2), [one - x1, one - x1x2]),
            FactoredFraction((y2 - x2) * (y1 - x1x2), [one - x2, one - x1x2]),
        ],
        universe=uni,
    )
    right = FactoredFraction.sum(
        [
            FactoredFraction((y1 - x1 ** 2) * (y2 - x2), [one - x1, one - x1x2]),
            FactoredFraction((y2 - x2 ** 2) * (y1 - x1), [one - x2, one - x1x2]),
        ],
        universe=uni,
    )
    cycle = FactoredFraction.sum(
        [
            FactoredFraction((y1 - x1) * (y2 - x2), [one - x1, one - x2]),
            FactoredFraction(y1 * y2 - x1x2, [one - x1x2]),
        ],
        universe=uni,
    )
    return {SIDE_LEFT: left, SIDE_RIGHT: right, SIDE_CYCLE: cycle}


def criterion_6_symmetrized(max_n: int = 4) -> CriterionResult:
    """Three-way agreement of the symmetrized sums, pinning the size-2 case
    to its written-out form."""
    r = CriterionResult(6, "three-way symmetrized identity")
    t0 = time.time()
    for n in range(1, max_n + 1):
        left = symmetrized_side(n, SIDE_LEFT).value
        right = symmetrized_side(n, SIDE_RIGHT).value
        cycle = symmetrized_side(n, SIDE_CYCLE).value
        r.check(frac_eq(left, right), f"n={n} left=right")
        r.check(frac_eq(left, cycle), f"n={n} left=cycle")
        if n == 2:
            for side, displayed in _display_example_n2().items():
                computed = symmetrized_side(2, side).value
                r.check(frac_eq(computed, displayed), f"n=2 display {side}")
    r.elapsed = time.time() - t0
    return r


def criterion_7_constants(
    prop5_weight: int = 9,
    prop5_length: int = 6,
    littlewood_weight: int = 10,
    littlewood_length: int = 7,
    max_n: int = 5,
) -> CriterionResult:
    """Constant-valued symmetrizations."""
    from fractions import Fraction

    r = CriterionResult(7, "constant-valued identities")
    t0 = time.time()
    for mu in partitions_up_to(prop5_weight):
        if mu.length > prop5_length:
            continue
        got = constant_identity(mu, "prop5")
        r.check(frac_eq(got, prop5_expected(mu)), f"prop5 mu={mu}")
    for mu in partitions_up_to(littlewood_weight):
        if mu.length > littlewood_length:
            continue
        got = constant_identity(mu, "littlewood")
        expected = FactoredFraction.constant((), Fraction(1, z_of(mu)))
        r.check(frac_eq(got, expected), f"littlewood mu={mu}")
    import math

    for n in range(1, max_n + 1):
        uni = x_only_universe(n)
        got = symmetrized_constant(n, "prop7")
        r.check(
            frac_eq(got, FactoredFraction.constant(uni, math.factorial(n))),
            f"prop7 n={n}",
        )
        got = symmetrized_constant(n, "prop8")
        expected = FactoredFraction(
            Polynomial.one(uni),
            [Polynomial.variable(uni, f"x{i}") for i in range(1, n + 1)],
        )
        r.check(frac_eq(got, expected), f"prop8 n={n}")
    r.elapsed = time.time() - t0
    return r


def criterion_8_appendix(max_n: int = 4) -> CriterionResult:
    """Substitution recurrences for both sides and both relations."""
    r = CriterionResult(8, "substitution recurrences")
    t0 = time.time()
    for n in range(2, max_n + 1):
        for relation in (13, 14):
            for side in ("L", "R"):
                r.check(
                    appendix_step(n, relation, side),
                    f"n={n} relation={relation} side={side}",
                )
    r.elapsed = time.time() - t0
    return r


def criterion_9_positivity(max_weight: int = 8, max_length: int = 5) -> CriterionResult:
    """Positivity polynomial: coefficients, the q -> 1/q companion, the
    factorization identity, the two-row closed form."""
    r = CriterionResult(9, "positivity polynomial")
    t0 = time.time()
    for mu in partitions_up_to(max_weight):
        if mu.length > max_length:
            continue
        report = positivity_report(mu)
        r.check(
            report.all_coefficients_nonnegative_integers,
            f"coefficients mu={mu}",
        )
        r.check(report.Hbar is not None, f"inverted polynomial mu={mu}")
        r.check(report.identity_holds, f"factorization mu={mu}")
        r.check(auxiliary_identity_check(mu), f"auxiliary identity mu={mu}")
    h21 = positivity_polynomial(Partition((2, 1)))
    expected = Polynomial(UNIVERSE_QT, {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1})
    r.check(h21 == expected, "closed value for (2,1)")
    for n in range(2, 6):
        for k in range(1, n):
            r.check(
                two_row_closed_form(n, k) == positivity_polynomial(Partition((n, k))),
                f"two-row closed form n={n} k={k}",
            )
    r.elapsed = time.time() - t0
    return r


def criterion_10_macdonald(max_n: int = 5, N: int = 3) -> CriterionResult:
    """Row Macdonald polynomial suite: expansions, eigen-equation,
    coefficient identities, series identities, omega, inverse expansions."""
    r = CriterionResult(10, "row Macdonald polynomial suite")
    t0 = time.time()
    for n in range(max_n + 1):
        r.check(expansion_agreement(n, N), f"six-way expansion n={n}")
    for NN in (2, 3):
        r.check(eigenvalue_at_zero_matches(NN), f"degree-0 eigenvalue N={NN}")
        for n in range(5):
            r.check(eigencheck(n, NN), f"eigen-equation n={n} N={NN}")
    for NN in range(1, 5):
        r.check(coefficient_sum_identities(NN), f"coefficient sums N={NN}")
    r.check(generating_shift_check(N, 5), "degree-marker shift series")
    r.check(alphabet_shift_check(N, 5), "alphabet shift series")
    for n in range(1, max_n + 1):
        r.check(omega_row_is_elementary(n), f"omega image n={n}")
    for n in range(1, 5):
        r.check(inverse_expansions_check(n, N), f"inverse expansions n={n}")
    r.elapsed = time.time() - t0
    return r


ALL_CRITERIA = (
    criterion_1_two_forms,
    criterion_2_powersum_oracle,
    criterion_3_evaluation_oracle,
    criterion_4_gauss_polynomials,
    criterion_5_recurrences,
    criterion_6_symmetrized,
    criterion_7_constants,
    criterion_8_appendix,
    criterion_9_positivity,
    criterion_10_macdonald,
)


def run_all() -> list:
    """Run every criterion at its default caps."""
    return [fn() for fn in ALL_CRITERIA]
