"""Symmetrized rational-function identities over paired alphabets
x_1..x_n, y_1..y_n.

Three symmetrized sums are built, all provably equal: two run over
permutations with prefix-product denominators (differing in their numerator
pattern) and one runs over cycle decompositions with cycle-product
denominators.  Their specializations yield a family of constant-valued
symmetrizations (the prop5/prop7 constants, the prop8 reciprocal prefix
sums, and the Littlewood rational identity for 1/z).

The production assembly peels the last position (or, for the cycle form,
the cycle through the smallest label) and memoizes on the remaining
variable subset: an exact regrouping of the permutation sum that costs
2^n fraction merges instead of n! cofactor assemblies and lands on the
same common-denominator form.  The literal permutation-by-permutation sums
are kept alongside as the definitional reference and are compared against
the fast route in the tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FactoredFraction, Polynomial, frac_eq
from .errors import ResourceLimitError, UsageError
from .partitions import Partition, derangements, permutations_with_cycles

SYMMETRIZED_CAP = 5

SIDE_LEFT = "thm6-left"
SIDE_RIGHT = "thm6-right"
SIDE_CYCLE = "thm7-right"
SIDES = (SIDE_LEFT, SIDE_RIGHT, SIDE_CYCLE)


def xy_universe(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(
        f"y{i}" for i in range(1, n + 1)
    )


def x_only_universe(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class SymmetrizedSum:
    n: int
    side: str
    value: FactoredFraction


def _x_product(universe, subset) -> Polynomial:
    return Polynomial.monomial(universe, {f"x{k}": 1 for k in subset})


def _y_product(universe, subset) -> Polynomial:
    return Polynomial.monomial(universe, {f"y{k}": 1 for k in subset})


def _check_size(n: int, cap: int):
    if n < 1:
        raise UsageError("n must be at least 1")
    if n > cap:
        raise ResourceLimitError(f"symmetrized sum size {n} exceeds cap {cap}")


def symmetrized_side(n: int, side: str, cap: int = SYMMETRIZED_CAP) -> SymmetrizedSum:
    """One side of the three-way identity over all n! permutations, as a
    single fraction over the common subset-product denominator."""
    if side not in SIDES:
        raise UsageError(f"unknown side {side!r}")
    _check_size(n, cap)
    uni = xy_universe(n)
    one = Polynomial.one(uni)
    memo: dict = {}

    def solve(subset: tuple) -> FactoredFraction:
        if not subset:
            return FactoredFraction.one(uni)
        if subset in memo:
            return memo[subset]
        if side == SIDE_CYCLE:
            anchor, rest = subset[0], subset[1:]
            terms = []
            for size in range(len(rest) + 1):
                for extra in itertools.combinations(rest, size):
                    cycle = (anchor,) + extra
                    xprod = _x_product(uni, cycle)
                    weight = math.factorial(len(cycle) - 1)
                    factor = FactoredFraction(
                        (_y_product(uni, cycle) - xprod) * weight, [one - xprod]
                    )
                    remaining = tuple(k for k in rest if k not in extra)
                    terms.append(factor * solve(remaining))
            value = FactoredFraction.sum(terms, universe=uni)
        else:
            # Peeling the last position: its prefix product covers the whole
            # remaining subset, and its numerator exponent is n - |subset| + 1.
            power = n - len(subset) + 1
            prefix = _x_product(uni, subset)
            total = []
            for k in subset:
                rest = tuple(j for j in subset if j != k)
                y = Polynomial.variable(uni, f"y{k}")
                if side == SIDE_LEFT:
                    num = y - prefix
                else:
                    num = y - Polynomial.variable(uni, f"x{k}", power)
                total.append(solve(rest) * num)
            value = FactoredFraction.sum(total, universe=uni) * FactoredFraction(
                one, [one - prefix]
            )
        memo[subset] = value
        return value

    return SymmetrizedSum(n, side, solve(tuple(range(1, n + 1))))


def symmetrized_side_enumerated(n: int, side: str, cap: int = SYMMETRIZED_CAP) -> SymmetrizedSum:
    """The definitional permutation-by-permutation sum; used as a reference
    against the peeled assembly."""
    if side not in SIDES:
        raise UsageError(f"unknown side {side!r}")
    _check_size(n, cap)
    uni = xy_universe(n)
    one = Polynomial.one(uni)
    terms = []
    for perm in permutations_with_cycles(n, cap=cap):
        sigma = perm.mapping
        if side == SIDE_CYCLE:
            num = one
            den = []
            for cyc in perm.cycles:
                xprod = _x_product(uni, cyc)
                num = num * (_y_product(uni, cyc) - xprod)
                den.append(one - xprod)
            terms.append(FactoredFraction(num, den))
            continue
        num = one
        den = []
        for i in range(1, n + 1):
            k = sigma[i - 1]
            prefix = _x_product(uni, sigma[:i])
            y = Polynomial.variable(uni, f"y{k}")
            if side == SIDE_LEFT:
                num = num * (y - prefix)
            else:
                num = num * (y - Polynomial.variable(uni, f"x{k}", n - i + 1))
            den.append(one - prefix)
        terms.append(FactoredFraction(num, den))
    return SymmetrizedSum(n, side, FactoredFraction.sum(terms, universe=uni))


def constant_identity(mu: Partition, kind: str) -> FactoredFraction:
    """Rearrangement sums with constant value.

    * "prop5": sum over rearrangements c of prod_i
      (1 - q^((l - i + 1) c_i)) / (1 - q^(prefix sum i)); equals
      length! / prod(multiplicity!).
    * "littlewood": sum over rearrangements of prod_i 1/(prefix sum i),
      an exact rational equal to 1/z."""
    if kind == "prop5":
        uni = ("q",)
        one = Polynomial.one(uni)
        length = mu.length
        terms = []
        for d in derangements(mu):
            num = one
            den = []
            for i, c in enumerate(d.entries, start=1):
                num = num * (one - Polynomial.variable(uni, "q", (length - i + 1) * c))
                den.append(one - Polynomial.variable(uni, "q", d.prefix_sum(i)))
            terms.append(FactoredFraction(num, den))
        return FactoredFraction.sum(terms, universe=uni)
    if kind == "littlewood":
        total = Fraction(0)
        for d in derangements(mu):
            term = Fraction(1)
            for s in d.prefix_sums:
                term /= s
            total += term
        return FactoredFraction.constant((), total)
    raise UsageError(f"unknown constant identity {kind!r}")


def symmetrized_constant(n: int, kind: str, cap: int = SYMMETRIZED_CAP) -> FactoredFraction:
    """Symmetrizations over x_1..x_n with closed constant or monomial value,
    assembled by the same last-position peeling as the two-alphabet sums.

    * "prop7": numerators 1 - x_(sigma(i))^(n - i + 1) over prefix-product
      denominators; equals n!.
    * "prop8": reciprocal prefix sums; equals prod_i 1/x_i."""
    if kind not in ("prop7", "prop8"):
        raise UsageError(f"unknown symmetrized constant {kind!r}")
    _check_size(n, cap)
    uni = x_only_universe(n)
    one = Polynomial.one(uni)
    memo: dict = {}

    def solve(subset: tuple) -> FactoredFraction:
        if not subset:
            return FactoredFraction.one(uni)
        if subset in memo:
            return memo[subset]
        if kind == "prop7":
            power = n - len(subset) + 1
            den = one - _x_product(uni, subset)
        else:
            den = Polynomial.zero(uni)
            for k in subset:
                den = den + Polynomial.variable(uni, f"x{k}")
        total = []
        for k in subset:
            rest = tuple(j for j in subset if j != k)
            if kind == "prop7":
                num = one - Polynomial.variable(uni, f"x{k}", power)
                total.append(solve(rest) * num)
            else:
                total.append(solve(rest))
        value = FactoredFraction.sum(total, universe=uni) * FactoredFraction(
            one, [den]
        )
        memo[subset] = value
        return value

    return solve(tuple(range(1, n + 1)))


def symmetrized_constant_enumerated(n: int, kind: str, cap: int = SYMMETRIZED_CAP) -> FactoredFraction:
    """Reference permutation-by-permutation form of symmetrized_constant."""
    if kind not in ("prop7", "prop8"):
        raise UsageError(f"unknown symmetrized constant {kind!r}")
    _check_size(n, cap)
    uni = x_only_universe(n)
    one = Polynomial.one(uni)
    terms = []
    for perm in permutations_with_cycles(n, cap=cap):
        sigma = perm.mapping
        if kind == "prop7":
            num = one
            den = []
            for i in range(1, n + 1):
                num = num * (
                    one - Polynomial.variable(uni, f"x{sigma[i - 1]}", n - i + 1)
                )
                den.append(one - _x_product(uni, sigma[:i]))
            terms.append(FactoredFraction(num, den))
        else:
            den = []
            acc = Polynomial.zero(uni)
            for k in sigma:
                acc = acc + Polynomial.variable(uni, f"x{k}")
                den.append(acc)
            terms.append(FactoredFraction(one, den))
    return FactoredFraction.sum(terms, universe=uni)


_APPENDIX_SIDES = {"L": SIDE_LEFT, "R": SIDE_CYCLE}


def appendix_step(n: int, relation: int, side: str, cap: int = SYMMETRIZED_CAP) -> bool:
    """Substitution recurrences satisfied by both sides of the three-way
    identity, stepping from size n to size n - 1.

    Relation 13 sets y_n = x_n; relation 14 sets y_n = 1.  ``side`` picks
    which sum plays f_n ("L" for the prefix-product form, "R" for the cycle
    form)."""
    if side not in _APPENDIX_SIDES:
        raise UsageError(f"unknown side {side!r}")
    if relation not in (13, 14):
        raise UsageError(f"unknown relation {relation!r}")
    if n < 2:
        raise UsageError("the recurrences need n at least 2")
    tag = _APPENDIX_SIDES[side]
    f_n = symmetrized_side(n, tag, cap=cap).value
    f_prev = symmetrized_side(n - 1, tag, cap=cap).value
    uni = xy_universe(n)
    x_n = Polynomial.variable(uni, f"x{n}")
    if relation == 13:
        lhs = f_n.substitute({f"y{n}": x_n})
        rhs_terms = []
        for i in range(1, n):
            bindings = {
                f"x{i}": Polynomial.monomial(uni, {f"x{i}": 1, f"x{n}": 1}),
                f"y{i}": Polynomial.monomial(uni, {f"y{i}": 1, f"x{n}": 1}),
            }
            rhs_terms.append(f_prev.substitute(bindings, universe=uni))
        rhs = FactoredFraction.sum(rhs_terms, universe=uni)
    else:
        lhs = f_n.substitute({f"y{n}": 1})
        rhs_terms = [f_prev.retarget(uni)]
        for i in range(1, n):
            bindings = {
                f"x{i}": Polynomial.monomial(uni, {f"x{i}": 1, f"x{n}": 1}),
            }
            rhs_terms.append(f_prev.substitute(bindings, universe=uni))
        rhs = FactoredFraction.sum(rhs_terms, universe=uni)
    return frac_eq(lhs, rhs)


def relabeling_invariant(s: SymmetrizedSum, sigma: tuple) -> bool:
    """Invariance of a symmetrized sum under the simultaneous relabeling
    (x_i, y_i) -> (x_sigma(i), y_sigma(i))."""
    uni = s.value.universe
    bindings = {}
    for i, k in enumerate(sigma, start=1):
        bindings[f"x{i}"] = Polynomial.variable(uni, f"x{k}")
        bindings[f"y{i}"] = Polynomial.variable(uni, f"y{k}")
    return frac_eq(s.value, s.value.substitute(bindings))


def specialization_chain_check(mu: Partition) -> bool:
    """Substituting x_i = q^(mu_i), y_i = (b q / a)^(mu_i) into the
    symmetrized sums and scaling by the homogeneity factor
    (-1)^l a^|mu| / (q^|mu| prod m_i!) recovers both closed forms of the
    monomial specialization."""
    from .specialize import UNIVERSE_ABQ, monomial_spec

    n = mu.length
    weight = mu.weight
    bindings = {}
    for i, part in enumerate(mu.parts, start=1):
        bindings[f"x{i}"] = Polynomial.variable(UNIVERSE_ABQ, "q", part)
        bindings[f"y{i}"] = FactoredFraction(
            Polynomial.monomial(UNIVERSE_ABQ, {"b": part, "q": part}),
            [Polynomial.variable(UNIVERSE_ABQ, "a", part)],
        )
    sign = -1 if n % 2 else 1
    scale = FactoredFraction(
        Polynomial.monomial(
            UNIVERSE_ABQ, {"a": weight}, Fraction(sign, mu.repetition_factor())
        ),
        [Polynomial.variable(UNIVERSE_ABQ, "q", weight)],
    )
    pairs = (
        (SIDE_LEFT, monomial_spec(mu, "theorem1").value),
        (SIDE_RIGHT, monomial_spec(mu, "theorem3").value),
    )
    for side, expected in pairs:
        s = symmetrized_side(n, side)
        specialized = s.value.substitute(bindings, universe=UNIVERSE_ABQ) * scale
        if not frac_eq(specialized, expected):
            return False
    return True


def prop5_expected(mu: Partition) -> FactoredFraction:
    """The constant length!/prod(multiplicities!) over the q universe."""
    value = Fraction(math.factorial(mu.length), mu.repetition_factor())
    return FactoredFraction.constant(("q",), value)
