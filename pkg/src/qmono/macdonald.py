"""The one-row Macdonald polynomial g_n(X; q, t) and everything around it:
its six basis expansions, the deformed bases obtained by evaluating
generators on (1 - t) X, the omega involution, the first Macdonald
difference operator with its eigen-equation, and the partial-fraction
coefficient identities that drive the operator computation.

Symmetric polynomials on a finite alphabet are stored one coefficient per
monomial orbit (partition-shaped exponent vector), which keeps symmetry
structural and the n <= 5, N = 3 sizes trivial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    FactoredFraction,
    Polynomial,
    frac_eq,
    series_expand,
)
from .errors import InternalConsistencyError, ResourceLimitError, UsageError
from .partitions import Partition, partitions_of, z_of
from .specialize import monomial_spec

UNIVERSE_QT = ("q", "t")

OPERATOR_N_CAP = 3
COEFFICIENT_IDENTITY_N_CAP = 4

BASIS_POWER = "power"
BASIS_MONOMIAL = "monomial"
BASIS_COMPLETE = "complete"
BASIS_ELEMENTARY = "elementary"
BASIS_DEFORMED_COMPLETE = "deformed-complete"
BASIS_DEFORMED_ELEMENTARY = "deformed-elementary"
BASES = (
    BASIS_POWER,
    BASIS_MONOMIAL,
    BASIS_COMPLETE,
    BASIS_ELEMENTARY,
    BASIS_DEFORMED_COMPLETE,
    BASIS_DEFORMED_ELEMENTARY,
)


def x_universe(N: int) -> tuple:
    return ("q", "t") + tuple(f"x{i}" for i in range(1, N + 1))


def _qt_one() -> FactoredFraction:
    return FactoredFraction.one(UNIVERSE_QT)


def _qt_var(name: str, power: int = 1, coeff=1) -> Polynomial:
    return Polynomial.variable(UNIVERSE_QT, name, power, coeff)


# ---------------------------------------------------------------------------
# Symmetric polynomials stored per monomial orbit


class SymmetricPolynomial:
    """Symmetric polynomial on x_1..x_N with exact fraction coefficients in
    (q, t), stored per monomial orbit."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs=None):
        self.N = N
        clean = {}
        for key, f in (coeffs or {}).items():
            key = tuple(key)
            if any(k < 1 for k in key) or list(key) != sorted(key, reverse=True):
                raise UsageError(f"orbit key must be a positive descending tuple: {key}")
            if len(key) > N:
                raise UsageError(f"orbit key {key} longer than alphabet size {N}")
            if not f.is_zero:
                clean[key] = f
        self.coeffs = clean

    @classmethod
    def zero(cls, N: int) -> "SymmetricPolynomial":
        return cls(N, {})

    @classmethod
    def one(cls, N: int) -> "SymmetricPolynomial":
        return cls(N, {(): _qt_one()})

    @classmethod
    def monomial(cls, mu: Partition, N: int) -> "SymmetricPolynomial":
        if mu.length > N:
            return cls.zero(N)
        return cls(N, {tuple(mu.parts): _qt_one()})

    @classmethod
    def complete_single(cls, n: int, N: int) -> "SymmetricPolynomial":
        return cls(
            N,
            {
                tuple(lam.parts): _qt_one()
                for lam in partitions_of(n)
                if lam.length <= N
            },
        )

    @classmethod
    def elementary_single(cls, n: int, N: int) -> "SymmetricPolynomial":
        if n > N:
            return cls.zero(N)
        return cls(N, {(1,) * n: _qt_one()} if n else {(): _qt_one()})

    @classmethod
    def power_single(cls, n: int, N: int) -> "SymmetricPolynomial":
        return cls(N, {(n,): _qt_one()} if n else {(): _qt_one()})

    @classmethod
    def deformed_h_single(cls, n: int, N: int, param: str) -> "SymmetricPolynomial":
        """h_n evaluated on (1 - param) X: coefficient (1 - param)^length on
        each monomial orbit of weight n."""
        one = Polynomial.one(UNIVERSE_QT)
        coeffs = {}
        for lam in partitions_of(n):
            if lam.length > N:
                continue
            coeffs[tuple(lam.parts)] = FactoredFraction(
                (one - _qt_var(param)) ** lam.length
            )
        return cls(N, coeffs)

    @classmethod
    def deformed_e_single(cls, n: int, N: int, param: str) -> "SymmetricPolynomial":
        """e_n evaluated on (1 - param) X: coefficient
        (-param)^(n - length) (1 - param)^length per orbit."""
        one = Polynomial.one(UNIVERSE_QT)
        coeffs = {}
        for lam in partitions_of(n):
            if lam.length > N:
                continue
            l = lam.length
            poly = _qt_var(param, n - l, (-1) ** (n - l)) if n > l else one
            coeffs[tuple(lam.parts)] = FactoredFraction(
                poly * (one - _qt_var(param)) ** l
            )
        return cls(N, coeffs)

    @classmethod
    def basis_product(cls, single, mu: Partition, N: int) -> "SymmetricPolynomial":
        out = cls.one(N)
        for part in mu.parts:
            out = out.mul(single(part, N))
        return out

    # -- arithmetic --------------------------------------------------------

    def add(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        if self.N != other.N:
            raise UsageError("alphabet sizes differ")
        out = dict(self.coeffs)
        for key, f in other.coeffs.items():
            s = out[key] + f if key in out else f
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        return SymmetricPolynomial(self.N, out)

    def scale(self, c) -> "SymmetricPolynomial":
        return SymmetricPolynomial(
            self.N, {key: f * c for key, f in self.coeffs.items()}
        )

    def _expand_full(self) -> dict:
        full = {}
        for key, f in self.coeffs.items():
            padded = tuple(key) + (0,) * (self.N - len(key))
            for exps in set(itertools.permutations(padded)):
                full[exps] = f
        return full

    def mul(self, other: "SymmetricPolynomial", max_degree: int | None = None) -> "SymmetricPolynomial":
        if self.N != other.N:
            raise UsageError("alphabet sizes differ")
        a = self._expand_full()
        b = other._expand_full()
        buckets = {}
        for e1, f1 in a.items():
            d1 = sum(e1)
            for e2, f2 in b.items():
                if max_degree is not None and d1 + sum(e2) > max_degree:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                key = tuple(sorted(e, reverse=True))
                if key != e:
                    continue
                buckets.setdefault(key, []).append(f1 * f2)
        coeffs = {}
        for key, items in buckets.items():
            s = FactoredFraction.sum(items, universe=UNIVERSE_QT)
            if not s.is_zero:
                coeffs[_strip(key)] = s
        return SymmetricPolynomial(self.N, coeffs)

    def truncate(self, max_degree: int) -> "SymmetricPolynomial":
        return SymmetricPolynomial(
            self.N,
            {k: f for k, f in self.coeffs.items() if sum(k) <= max_degree},
        )

    def homogeneous_part(self, n: int) -> "SymmetricPolynomial":
        return SymmetricPolynomial(
            self.N, {k: f for k, f in self.coeffs.items() if sum(k) == n}
        )

    def eq(self, other: "SymmetricPolynomial") -> bool:
        if self.N != other.N:
            raise UsageError("alphabet sizes differ")
        zero = FactoredFraction.zero(UNIVERSE_QT)
        for key in set(self.coeffs) | set(other.coeffs):
            if not frac_eq(self.coeffs.get(key, zero), other.coeffs.get(key, zero)):
                return False
        return True

    def coefficient(self, mu: Partition) -> FactoredFraction:
        return self.coeffs.get(tuple(mu.parts), FactoredFraction.zero(UNIVERSE_QT))

    def to_fraction(self, universe) -> FactoredFraction:
        """The full polynomial as one fraction over a universe containing
        q, t and the alphabet."""
        terms = []
        for key, f in self.coeffs.items():
            padded = tuple(key) + (0,) * (self.N - len(key))
            orbit = Polynomial.zero(universe)
            for exps in set(itertools.permutations(padded)):
                orbit = orbit + Polynomial.monomial(
                    universe, {f"x{i + 1}": e for i, e in enumerate(exps) if e}
                )
            terms.append(f.retarget(universe) * orbit)
        return FactoredFraction.sum(terms, universe=universe)


def _strip(key: tuple) -> tuple:
    return tuple(k for k in key if k)


def _sp_from_polynomial(p: Polynomial, N: int) -> SymmetricPolynomial:
    """Read a symmetric polynomial over ('q', 't', x-vars) into orbit form,
    verifying that monomials in one orbit carry identical coefficients."""
    groups = {}
    for exps, c in p.terms.items():
        qt_part = exps[:2]
        x_part = exps[2:]
        key = _strip(tuple(sorted(x_part, reverse=True)))
        groups.setdefault(key, {}).setdefault(x_part, {})[qt_part] = c
    coeffs = {}
    for key, members in groups.items():
        padded = tuple(key) + (0,) * (N - len(key))
        expected = set(itertools.permutations(padded))
        polys = {
            x_part: Polynomial(UNIVERSE_QT, qt_terms)
            for x_part, qt_terms in members.items()
        }
        values = list(polys.values())
        if set(polys) != expected or any(v != values[0] for v in values[1:]):
            raise InternalConsistencyError(
                f"polynomial is not symmetric on orbit {key}"
            )
        coeffs[key] = FactoredFraction(values[0])
    return SymmetricPolynomial(N, coeffs)


# ---------------------------------------------------------------------------
# Expansion tables


@dataclass(frozen=True)
class ExpansionTable:
    """Coefficients of g_n on a named basis, one entry per partition of n.
    Elementary-type entries carry the global (-1)^n sign, so the table
    always reads g_n = sum of entry * basis element."""

    n: int
    basis: str
    entries: tuple

    def as_dict(self) -> dict:
        return {mu: f for mu, f in self.entries}

    def coefficient(self, mu: Partition) -> FactoredFraction:
        for m, f in self.entries:
            if m == mu:
                return f
        return FactoredFraction.zero(UNIVERSE_QT)


def spec_value_at(mu: Partition, a_value, b_value) -> FactoredFraction:
    """The monomial specialization with the letters a, b bound to the given
    values (0, 1, or polynomials in q, t), over the (q, t) universe."""
    return monomial_spec(mu).value.substitute(
        {"a": a_value, "b": b_value}, universe=UNIVERSE_QT
    )


def _pochhammer_ratio(m: int) -> FactoredFraction:
    """Product over j = 1..m of (1 - t q^(j-1)) / (1 - q^j)."""
    one = Polynomial.one(UNIVERSE_QT)
    num = one
    den = []
    for j in range(1, m + 1):
        num = num * (one - Polynomial.monomial(UNIVERSE_QT, {"t": 1, "q": j - 1}))
        den.append(one - _qt_var("q", j))
    return FactoredFraction(num, den)


def row_expansion_table(n: int, basis: str) -> ExpansionTable:
    """Coefficients of g_n on the requested basis."""
    if basis not in BASES:
        raise UsageError(f"unknown basis {basis!r}")
    if n < 0:
        raise UsageError("degree must be non-negative")
    t = _qt_var("t")
    sign = -1 if n % 2 else 1
    one = Polynomial.one(UNIVERSE_QT)
    entries = []
    for mu in partitions_of(n):
        if basis == BASIS_POWER:
            coeff = FactoredFraction.constant(UNIVERSE_QT, Fraction(1, z_of(mu)))
            for part in mu.parts:
                coeff = coeff * FactoredFraction(
                    one - _qt_var("t", part), [one - _qt_var("q", part)]
                )
        elif basis == BASIS_MONOMIAL:
            coeff = _qt_one()
            for part in mu.parts:
                coeff = coeff * _pochhammer_ratio(part)
        elif basis == BASIS_COMPLETE:
            coeff = spec_value_at(mu, 1, t)
        elif basis == BASIS_ELEMENTARY:
            coeff = spec_value_at(mu, t, 1) * sign
        elif basis == BASIS_DEFORMED_COMPLETE:
            coeff = spec_value_at(mu, 1, 0)
        else:
            coeff = spec_value_at(mu, 0, 1) * sign
        entries.append((mu, coeff))
    return ExpansionTable(n, basis, tuple(entries))


_BASIS_ELEMENT_BUILDERS = {
    BASIS_POWER: lambda mu, N: SymmetricPolynomial.basis_product(
        SymmetricPolynomial.power_single, mu, N
    ),
    BASIS_MONOMIAL: lambda mu, N: SymmetricPolynomial.monomial(mu, N),
    BASIS_COMPLETE: lambda mu, N: SymmetricPolynomial.basis_product(
        SymmetricPolynomial.complete_single, mu, N
    ),
    BASIS_ELEMENTARY: lambda mu, N: SymmetricPolynomial.basis_product(
        SymmetricPolynomial.elementary_single, mu, N
    ),
    BASIS_DEFORMED_COMPLETE: lambda mu, N: SymmetricPolynomial.basis_product(
        lambda n, NN: SymmetricPolynomial.deformed_h_single(n, NN, "t"), mu, N
    ),
    BASIS_DEFORMED_ELEMENTARY: lambda mu, N: SymmetricPolynomial.basis_product(
        lambda n, NN: SymmetricPolynomial.deformed_e_single(n, NN, "t"), mu, N
    ),
}


def table_to_polynomial(table: ExpansionTable, N: int) -> SymmetricPolynomial:
    build = _BASIS_ELEMENT_BUILDERS[table.basis]
    out = SymmetricPolynomial.zero(N)
    for mu, coeff in table.entries:
        if coeff.is_zero:
            continue
        out = out.add(build(mu, N).scale(coeff))
    return out


# ---------------------------------------------------------------------------
# g_n as a polynomial on a finite alphabet


_HEINE_CACHE: dict = {}


def heine_coefficient(k: int) -> FactoredFraction:
    """Coefficient of x^k in the single-variable expansion of the generating
    product: product over j = 1..k of (1 - t q^(j-1))/(1 - q^j)."""
    if k not in _HEINE_CACHE:
        _HEINE_CACHE[k] = _pochhammer_ratio(k)
    return _HEINE_CACHE[k]


def row_polynomial(n: int, N: int, method: str = "from-basis") -> SymmetricPolynomial:
    """g_n on N variables, either assembled from the monomial-basis table or
    by multiplying the N single-variable series and extracting degree n."""
    if N < 1 or n < 0:
        raise UsageError("need N >= 1 and n >= 0")
    if method == "from-basis":
        table = row_expansion_table(n, BASIS_MONOMIAL)
        coeffs = {
            tuple(mu.parts): f for mu, f in table.entries if mu.length <= N
        }
        return SymmetricPolynomial(N, coeffs)
    if method == "heine-product":
        cur = {(0,) * N: _qt_one()}
        for i in range(N):
            buckets = {}
            for k in range(n + 1):
                ck = heine_coefficient(k)
                for e, f in cur.items():
                    if sum(e) + k > n:
                        continue
                    e2 = e[:i] + (e[i] + k,) + e[i + 1:]
                    buckets.setdefault(e2, []).append(f * ck)
            cur = {
                e: FactoredFraction.sum(items, universe=UNIVERSE_QT)
                for e, items in buckets.items()
            }
        coeffs = {}
        for e, f in cur.items():
            if sum(e) != n or f.is_zero:
                continue
            key = tuple(sorted(e, reverse=True))
            if key == e:
                coeffs[_strip(key)] = f
        return SymmetricPolynomial(N, coeffs)
    raise UsageError(f"unknown method {method!r}")


def expansion_agreement(n: int, N: int) -> bool:
    """All six basis tables and the product expansion give the same
    polynomial."""
    target = row_polynomial(n, N, "heine-product")
    for basis in BASES:
        sp = table_to_polynomial(row_expansion_table(n, basis), N)
        if not sp.eq(target):
            return False
    return True


# ---------------------------------------------------------------------------
# Deformed generators three ways


def deformed_basis(kind: str, n: int, N: int) -> SymmetricPolynomial:
    """The deformed generator (elementary kind "E" or complete kind "H") on
    N variables, computed three ways and checked for agreement:

    1. coefficient of u^n in the generating product
       (E: prod (1 + u x_i)/(1 + u t x_i); H: prod (1 - u t x_i)/(1 - u x_i)),
    2. substitution q -> 0 into the monomial table of g_n
       (E also flips t -> 1/t and scales by (-t)^n),
    3. the closed monomial-orbit expansion.
    """
    if kind not in ("E", "H"):
        raise UsageError(f"unknown deformed kind {kind!r}")
    if n < 1 or N < 1:
        raise UsageError("need n >= 1 and N >= 1")
    uni = ("q", "t", "u") + tuple(f"x{i}" for i in range(1, N + 1))
    one = Polynomial.one(uni)
    num, den = [], []
    for i in range(1, N + 1):
        ux = Polynomial.monomial(uni, {"u": 1, f"x{i}": 1})
        utx = Polynomial.monomial(uni, {"u": 1, "t": 1, f"x{i}": 1})
        if kind == "E":
            num.append(one + ux)
            den.append(one + utx)
        else:
            num.append(one - utx)
            den.append(one - ux)
    series = series_expand(num, den, "u", n)
    coeff = series.coefficient(n)
    if coeff.denominator:
        raise InternalConsistencyError("generating series coefficient not polynomial")
    from_series = _sp_from_polynomial(
        coeff.numerator.retarget(x_universe(N)), N
    )

    table = row_expansion_table(n, BASIS_MONOMIAL)
    coeffs = {}
    t = _qt_var("t")
    inv_t = FactoredFraction(Polynomial.one(UNIVERSE_QT), [t])
    scale = Polynomial.variable(UNIVERSE_QT, "t", n, (-1) ** n)
    for mu, f in table.entries:
        if mu.length > N:
            continue
        if kind == "H":
            coeffs[tuple(mu.parts)] = f.substitute({"q": 0})
        else:
            coeffs[tuple(mu.parts)] = f.substitute({"q": 0, "t": inv_t}) * scale
    from_substitution = SymmetricPolynomial(N, coeffs)

    single = (
        SymmetricPolynomial.deformed_e_single
        if kind == "E"
        else SymmetricPolynomial.deformed_h_single
    )
    closed = single(n, N, "t")

    if not (from_series.eq(closed) and from_substitution.eq(closed)):
        raise InternalConsistencyError(
            f"deformed {kind}_{n} expansions disagree on {N} variables"
        )
    return closed


# ---------------------------------------------------------------------------
# The difference operator and its eigen-equation


def operator_coefficient(i: int, N: int, universe) -> FactoredFraction:
    """A_i = product over j != i of (t x_i - x_j)/(x_i - x_j)."""
    num = Polynomial.one(universe)
    den = []
    for j in range(1, N + 1):
        if j == i:
            continue
        num = num * (
            Polynomial.monomial(universe, {"t": 1, f"x{i}": 1})
            - Polynomial.variable(universe, f"x{j}")
        )
        den.append(
            Polynomial.variable(universe, f"x{i}")
            - Polynomial.variable(universe, f"x{j}")
        )
    return FactoredFraction(num, den)


def eigencheck(n: int, N: int, cap: int = OPERATOR_N_CAP) -> bool:
    """Apply the difference operator sum_i A_i T_i (T_i scales x_i by q) to
    g_n and compare with the eigenvalue q^n t^(N-1) + 1 + t + ... + t^(N-2)
    times g_n."""
    if N < 1:
        raise UsageError("N must be at least 1")
    if N > cap:
        raise ResourceLimitError(f"operator alphabet size {N} exceeds cap {cap}")
    if n < 0:
        raise UsageError("degree must be non-negative")
    uni = x_universe(N)
    g = row_polynomial(n, N, "from-basis").to_fraction(uni)
    terms = []
    for i in range(1, N + 1):
        shifted = g.substitute(
            {f"x{i}": Polynomial.monomial(uni, {"q": 1, f"x{i}": 1})}
        )
        terms.append(operator_coefficient(i, N, uni) * shifted)
    lhs = FactoredFraction.sum(terms, universe=uni)
    eigen = Polynomial.monomial(uni, {"q": n, "t": N - 1})
    for k in range(N - 1):
        eigen = eigen + Polynomial.variable(uni, "t", k)
    rhs = g * eigen
    return frac_eq(lhs, rhs)


def eigenvalue_at_zero_matches(N: int) -> bool:
    """Analytic anchor: the n = 0 eigenvalue equals (1 - t^N)/(1 - t)."""
    uni = x_universe(N)
    eigen = Polynomial.monomial(uni, {"q": 0, "t": N - 1})
    for k in range(N - 1):
        eigen = eigen + Polynomial.variable(uni, "t", k)
    one = Polynomial.one(uni)
    return frac_eq(
        FactoredFraction(eigen),
        FactoredFraction(one - Polynomial.variable(uni, "t", N), [one - Polynomial.variable(uni, "t")]),
    )


def coefficient_sum_identities(N: int, cap: int = COEFFICIENT_IDENTITY_N_CAP) -> bool:
    """Two exact identities for the operator coefficients over t, x_1..x_N:
    their plain sum is 1 + t + ... + t^(N-1), and their sum weighted by
    x_i/(1 - t x_i) is t^(N-1)/(1 - t) * (1 - prod (1 - x_j)/(1 - t x_j))."""
    if N < 1:
        raise UsageError("N must be at least 1")
    if N > cap:
        raise ResourceLimitError(f"coefficient identity size {N} exceeds cap {cap}")
    uni = ("t",) + tuple(f"x{i}" for i in range(1, N + 1))
    one = Polynomial.one(uni)
    coeffs = [operator_coefficient(i, N, uni) for i in range(1, N + 1)]
    plain = FactoredFraction.sum(coeffs, universe=uni)
    geom = Polynomial.zero(uni)
    for k in range(N):
        geom = geom + Polynomial.variable(uni, "t", k)
    if not frac_eq(plain, FactoredFraction(geom)):
        return False
    weighted_terms = []
    for i, A in enumerate(coeffs, start=1):
        weight = FactoredFraction(
            Polynomial.variable(uni, f"x{i}"),
            [one - Polynomial.monomial(uni, {"t": 1, f"x{i}": 1})],
        )
        weighted_terms.append(weight * A)
    weighted = FactoredFraction.sum(weighted_terms, universe=uni)
    prod_t = one
    prod_plain = one
    den = [one - Polynomial.variable(uni, "t")]
    for j in range(1, N + 1):
        prod_t = prod_t * (one - Polynomial.monomial(uni, {"t": 1, f"x{j}": 1}))
        prod_plain = prod_plain * (one - Polynomial.variable(uni, f"x{j}"))
        den.append(one - Polynomial.monomial(uni, {"t": 1, f"x{j}": 1}))
    num = Polynomial.variable(uni, "t", N - 1) * (prod_t - prod_plain)
    return frac_eq(weighted, FactoredFraction(num, den))


# ---------------------------------------------------------------------------
# The omega involution on power-basis tables


def _omega_factor(mu: Partition) -> FactoredFraction:
    """Action on the coefficient of a power-sum product:
    (-1)^(weight - length) * prod (1 - q^part)/(1 - t^part)."""
    one = Polynomial.one(UNIVERSE_QT)
    sign = -1 if (mu.weight - mu.length) % 2 else 1
    out = FactoredFraction.constant(UNIVERSE_QT, sign)
    for part in mu.parts:
        out = out * FactoredFraction(
            one - _qt_var("q", part), [one - _qt_var("t", part)]
        )
    return out


def apply_omega(table: ExpansionTable) -> ExpansionTable:
    """The degree-homogeneous involution f -> (-1)^deg f[(q - 1)/(1 - t) X]
    acting on a power-basis table."""
    if table.basis != BASIS_POWER:
        raise UsageError("omega acts on power-basis tables")
    entries = tuple(
        (mu, coeff * _omega_factor(mu)) for mu, coeff in table.entries
    )
    return ExpansionTable(table.n, BASIS_POWER, entries)


def omega_row_is_elementary(n: int) -> bool:
    """omega(g_n) has the power-basis coefficients of e_n."""
    table = apply_omega(row_expansion_table(n, BASIS_POWER))
    for mu, coeff in table.entries:
        sign = -1 if (n - mu.length) % 2 else 1
        expected = FactoredFraction.constant(UNIVERSE_QT, Fraction(sign, z_of(mu)))
        if not frac_eq(coeff, expected):
            return False
    return True


def _deformed_power_table(kind: str, n: int, param: str) -> dict:
    """Power-basis coefficients of a single deformed generator:
    E: (-1)^(n - length)/z * prod (1 - param^part);
    H: 1/z * prod (1 - param^part)."""
    one = Polynomial.one(UNIVERSE_QT)
    out = {}
    for lam in partitions_of(n):
        poly = one
        for part in lam.parts:
            poly = poly * (one - _qt_var(param, part))
        c = Fraction(1, z_of(lam))
        if kind == "E" and (n - lam.length) % 2:
            c = -c
        out[lam] = FactoredFraction(poly * c)
    return out


def _power_table_product(t1: dict, t2: dict) -> dict:
    out = {}
    for lam1, f1 in t1.items():
        for lam2, f2 in t2.items():
            key = Partition(sorted(lam1.parts + lam2.parts, reverse=True))
            prod = f1 * f2
            out[key] = out[key] + prod if key in out else prod
    return out


def _deformed_product_power_table(kind: str, mu: Partition, param: str) -> dict:
    out = {Partition(()): _qt_one()}
    for part in mu.parts:
        out = _power_table_product(out, _deformed_power_table(kind, part, param))
    return out


def omega_duality_check(mu: Partition) -> bool:
    """omega sends the deformed elementary product with parameter t to the
    deformed complete product with parameter q, coefficient by coefficient
    on the power basis."""
    e_table = _deformed_product_power_table("E", mu, "t")
    h_table = _deformed_product_power_table("H", mu, "q")
    zero = FactoredFraction.zero(UNIVERSE_QT)
    for lam in partitions_of(mu.weight):
        lhs = e_table.get(lam, zero) * _omega_factor(lam)
        if not frac_eq(lhs, h_table.get(lam, zero)):
            return False
    return True


# ---------------------------------------------------------------------------
# Inverse expansions and the two series identities


def inverse_expansions_check(n: int, N: int) -> bool:
    """The classical generators recovered from the deformed bases with
    parameter q, plus the t = q collapse of g_n."""
    if n < 1 or N < 1:
        raise UsageError("need n >= 1 and N >= 1")
    h = SymmetricPolynomial.complete_single(n, N)
    e = SymmetricPolynomial.elementary_single(n, N)
    q = _qt_var("q")

    collapsed = SymmetricPolynomial(
        N,
        {
            tuple(mu.parts): f.substitute({"t": q})
            for mu, f in row_expansion_table(n, BASIS_MONOMIAL).entries
            if mu.length <= N
        },
    )
    if not collapsed.eq(h):
        return False

    def deformed_q(kind, lam):
        single = (
            SymmetricPolynomial.deformed_e_single
            if kind == "E"
            else SymmetricPolynomial.deformed_h_single
        )
        return SymmetricPolynomial.basis_product(
            lambda m, NN: single(m, NN, "q"), lam, N
        )

    sign = -1 if n % 2 else 1
    checks = [
        (h, "H", lambda mu: spec_value_at(mu, 1, 0)),
        (h, "E", lambda mu: spec_value_at(mu, 0, 1) * sign),
        (e, "E", lambda mu: spec_value_at(mu, 1, 0)),
        (e, "H", lambda mu: spec_value_at(mu, 0, 1) * sign),
    ]
    for target, kind, coeff_fn in checks:
        acc = SymmetricPolynomial.zero(N)
        for mu in partitions_of(n):
            acc = acc.add(deformed_q(kind, mu).scale(coeff_fn(mu)))
        if not acc.eq(target):
            return False
    return True


def _geometric_ratio_polynomial(N: int, degree: int) -> Polynomial:
    """prod (1 - x_i)/(1 - t x_i), expanded to total x-degree <= degree over
    ('q', 't', x-vars)."""
    uni = x_universe(N)
    out = Polynomial.one(uni)
    for i in range(1, N + 1):
        factor = Polynomial.zero(uni)
        for k in range(degree + 1):
            factor = factor + Polynomial.monomial(uni, {"t": k, f"x{i}": k})
            if k:
                factor = factor - Polynomial.monomial(
                    uni, {"t": k - 1, f"x{i}": k}
                )
        out = _truncate_x(out * factor, degree)
    return out


def _truncate_x(p: Polynomial, degree: int) -> Polynomial:
    terms = {e: c for e, c in p.terms.items() if sum(e[2:]) <= degree}
    return Polynomial(p.universe, terms)


def generating_shift_check(N: int, degree: int) -> bool:
    """Scaling the degree marker by q multiplies the generating function by
    prod (1 - x_i)/(1 - t x_i); checked to total x-degree <= degree."""
    g_parts = [row_polynomial(n, N, "from-basis") for n in range(degree + 1)]
    total = SymmetricPolynomial.zero(N)
    shifted = SymmetricPolynomial.zero(N)
    for n, g in enumerate(g_parts):
        total = total.add(g)
        shifted = shifted.add(g.scale(_qt_var("q", n)))
    ratio = _sp_from_polynomial(_geometric_ratio_polynomial(N, degree), N)
    rhs = ratio.mul(total, max_degree=degree)
    return shifted.eq(rhs)


def alphabet_shift_check(N: int, degree: int) -> bool:
    """Replacing the numerator letter 1 by q in the alphabet multiplies the
    generating function by prod (1 - x_i); checked to total x-degree <=
    degree."""
    q = _qt_var("q")
    t = _qt_var("t")
    lhs = SymmetricPolynomial.zero(N)
    for n in range(degree + 1):
        for mu in partitions_of(n):
            coeff = spec_value_at(mu, q, t)
            lhs = lhs.add(
                SymmetricPolynomial.basis_product(
                    SymmetricPolynomial.complete_single, mu, N
                ).scale(coeff)
            )
    total = SymmetricPolynomial.zero(N)
    for n in range(degree + 1):
        total = total.add(row_polynomial(n, N, "from-basis"))
    alternating = SymmetricPolynomial.zero(N)
    for k in range(N + 1):
        alternating = alternating.add(
            SymmetricPolynomial.elementary_single(k, N).scale((-1) ** k)
        )
    rhs = alternating.mul(total, max_degree=degree)
    return lhs.eq(rhs)
