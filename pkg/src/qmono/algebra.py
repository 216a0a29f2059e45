"""Exact arithmetic kernel: sparse multivariate polynomials over the
rationals, factored fractions, and truncated power series.

A variable universe is declared once per computation as an ordered tuple of
names, e.g. ``("a", "b", "q")``.  Exponent vectors are dense over that
universe, and the single canonical term order used for printing, JSON and
factor ordering is graded lexicographic: ascending total degree, ties broken
by descending exponent tuple in the declared variable order.

Fractions are never reduced by multivariate gcd.  They stay in factored form
(numerator polynomial over a multiset of denominator factors) and equality is
decided by cross-multiplication.  All values are immutable after construction
and every operation is a pure function, so values can be shared freely
between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    InvalidValueError,
    NotInvertibleError,
    PoleError,
    UsageError,
)

Coeff = Union[int, Fraction]
Universe = tuple


def _norm_coeff(c):
    # Integral Fractions collapse to int so hot loops stay on int arithmetic.
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    if isinstance(c, int):
        return c
    raise UsageError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _term_key(exps):
    return (sum(exps), tuple(-e for e in exps))


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients.

    ``terms`` maps dense exponent tuples to nonzero coefficients; no zero
    coefficient is ever stored.  Two polynomials are equal iff they share the
    universe and the term map.
    """

    __slots__ = ("universe", "terms", "_hash")

    def __init__(self, universe: Sequence[str], terms: Mapping[tuple, Coeff]):
        universe = tuple(universe)
        width = len(universe)
        clean = {}
        for exps, c in terms.items():
            c = _norm_coeff(c)
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != width:
                raise UsageError(
                    f"exponent vector {exps} does not match universe {universe}"
                )
            if any(e < 0 for e in exps):
                raise UsageError(f"negative exponent in {exps}")
            clean[exps] = c
        self.universe = universe
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, universe, terms):
        # Internal fast path; callers guarantee clean terms.
        p = cls.__new__(cls)
        p.universe = universe
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, universe) -> "Polynomial":
        return cls._raw(tuple(universe), {})

    @classmethod
    def constant(cls, universe, c: Coeff) -> "Polynomial":
        universe = tuple(universe)
        c = _norm_coeff(c)
        if c == 0:
            return cls._raw(universe, {})
        return cls._raw(universe, {(0,) * len(universe): c})

    @classmethod
    def one(cls, universe) -> "Polynomial":
        return cls.constant(universe, 1)

    @classmethod
    def variable(cls, universe, name: str, power: int = 1, coeff: Coeff = 1) -> "Polynomial":
        universe = tuple(universe)
        if name not in universe:
            raise UsageError(f"variable {name!r} not in universe {universe}")
        if power < 0:
            raise UsageError("negative power")
        return cls.monomial(universe, {name: power}, coeff)

    @classmethod
    def monomial(cls, universe, powers: Mapping[str, int], coeff: Coeff = 1) -> "Polynomial":
        universe = tuple(universe)
        exps = [0] * len(universe)
        for name, e in powers.items():
            if name not in universe:
                raise UsageError(f"variable {name!r} not in universe {universe}")
            if e < 0:
                raise UsageError("negative power")
            exps[universe.index(name)] += e
        return cls(universe, {tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * len(self.universe)}

    def constant_value(self) -> Coeff:
        if not self.terms:
            return 0
        return self.terms[(0,) * len(self.universe)]

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_of(self, name: str) -> int:
        if name not in self.universe:
            raise UsageError(f"variable {name!r} not in universe {self.universe}")
        i = self.universe.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def is_homogeneous_in(self, names: Iterable[str], degree: int) -> bool:
        idx = [self.universe.index(n) for n in names]
        return all(sum(e[i] for i in idx) == degree for e in self.terms)

    def _check(self, other: "Polynomial"):
        if self.universe != other.universe:
            raise UsageError(
                f"variable universes differ: {self.universe} vs {other.universe}"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.universe, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial._raw(self.universe, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.universe, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.universe, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial._raw(self.universe, {})
            return Polynomial._raw(
                self.universe, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial._raw(self.universe, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise UsageError("polynomial powers must be non-negative integers")
        result = Polynomial.one(self.universe)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.universe, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.universe, frozenset(self.terms.items())))
        return self._hash

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, object], universe=None) -> "Polynomial":
        """Substitute polynomial values for variables, optionally retargeting
        the result onto a new universe.  Every variable of the current
        universe must either appear in ``bindings`` or exist in the target
        universe (where it maps to itself)."""
        target = tuple(universe) if universe is not None else self.universe
        values = {}
        for name, v in bindings.items():
            if name not in self.universe:
                raise UsageError(f"binding for unknown variable {name!r}")
            if isinstance(v, (int, Fraction)):
                v = Polynomial.constant(target, v)
            if not isinstance(v, Polynomial):
                raise UsageError("bindings must be Polynomial, int or Fraction")
            if v.universe != target:
                raise UsageError("binding value not over the target universe")
            values[name] = v
        for name in self.universe:
            if name not in values:
                if name not in target:
                    raise UsageError(
                        f"variable {name!r} unbound and absent from target universe"
                    )
                values[name] = Polynomial.variable(target, name)
        order = [values[name] for name in self.universe]
        powers = [{0: Polynomial.one(target)} for _ in order]
        result = Polynomial.zero(target)
        for exps, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        top = max(cache)
                        p = cache[top]
                        while top < e:
                            p = p * order[i]
                            top += 1
                            cache[top] = p
                    term = term * cache[e]
            result = result + term
        return result

    def retarget(self, universe) -> "Polynomial":
        """Re-express over another universe; dropped variables must not occur."""
        target = tuple(universe)
        if target == self.universe:
            return self
        pos = {name: i for i, name in enumerate(target)}
        width = len(target)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * width
            for name, e in zip(self.universe, exps):
                if e == 0:
                    continue
                if name not in pos:
                    raise UsageError(
                        f"variable {name!r} occurs but is absent from {target}"
                    )
                new[pos[name]] = e
            out[tuple(new)] = c
        return Polynomial._raw(target, out)

    # -- canonical text ----------------------------------------------------

    def sort_key(self):
        return tuple(
            (_term_key(e), e, Fraction(c).numerator, Fraction(c).denominator)
            for e, c in sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))
        )

    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in sorted(self.terms.items(), key=lambda kv: _term_key(kv[0])):
            neg = c < 0
            mag = -c if neg else c
            body = []
            if mag != 1 or not any(e):
                body.append(str(mag))
            for name, x in zip(self.universe, e):
                if x == 1:
                    body.append(name)
                elif x > 1:
                    body.append(f"{name}^{x}")
            s = " * ".join(body)
            if not pieces:
                pieces.append(f"-{s}" if neg else s)
            else:
                pieces.append(f" - {s}" if neg else f" + {s}")
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.text()!r})"


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product of two polynomials over the same universe."""
    return p * q


def _sign_normalized(f: Polynomial):
    """Return (g, flipped) with g = +/-f such that the first term of g in
    canonical order has a positive coefficient."""
    first = min(f.terms, key=_term_key)
    if f.terms[first] < 0:
        return -f, True
    return f, False


class FactoredFraction:
    """A polynomial numerator over a multiset of polynomial denominator
    factors; the value is numerator / product(factor^multiplicity).

    Denominator factors are sign-normalized (first canonical term positive),
    constant factors are folded into the numerator, and factors are stored
    sorted, so structurally equal values compare equal with ``==``.  Value
    equality (cross-multiplication) is :meth:`eq` / :func:`frac_eq`.
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator: Polynomial, denominator=()):
        if not isinstance(numerator, Polynomial):
            raise UsageError("numerator must be a Polynomial")
        den = {}
        scale = Fraction(1)
        flip = 1
        for item in denominator:
            if isinstance(item, Polynomial):
                f, m = item, 1
            else:
                f, m = item
            if not isinstance(f, Polynomial) or not isinstance(m, int) or m <= 0:
                raise UsageError("denominator factors must be (Polynomial, positive int)")
            if f.universe != numerator.universe:
                raise UsageError(
                    f"variable universes differ: {numerator.universe} vs {f.universe}"
                )
            if f.is_zero:
                raise InvalidValueError("zero denominator factor")
            if f.is_constant():
                scale /= Fraction(f.constant_value()) ** m
                continue
            f, flipped = _sign_normalized(f)
            if flipped and m % 2:
                flip = -flip
            den[f] = den.get(f, 0) + m
        if scale != 1 or flip < 0:
            numerator = numerator * (scale * flip)
        if numerator.is_zero:
            den = {}
        self.numerator = numerator
        self.denominator = tuple(
            sorted(den.items(), key=lambda fm: fm[0].sort_key())
        )
        self._hash = None

    @property
    def universe(self):
        return self.numerator.universe

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "FactoredFraction":
        return cls(p)

    @classmethod
    def constant(cls, universe, c: Coeff) -> "FactoredFraction":
        return cls(Polynomial.constant(universe, c))

    @classmethod
    def one(cls, universe) -> "FactoredFraction":
        return cls(Polynomial.one(universe))

    @classmethod
    def zero(cls, universe) -> "FactoredFraction":
        return cls(Polynomial.zero(universe))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def denominator_expanded(self) -> Polynomial:
        out = Polynomial.one(self.universe)
        for f, m in self.denominator:
            out = out * f ** m
        return out

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredFraction(self.numerator * other, self.denominator)
        if isinstance(other, Polynomial):
            other = FactoredFraction(other)
        if not isinstance(other, FactoredFraction):
            return NotImplemented
        if self.universe != other.universe:
            raise UsageError("variable universes differ")
        den = dict(self.denominator)
        for f, m in other.denominator:
            den[f] = den.get(f, 0) + m
        return FactoredFraction(self.numerator * other.numerator, den.items())

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise UsageError("fraction powers must be non-negative integers")
        return FactoredFraction(
            self.numerator ** n, ((f, m * n) for f, m in self.denominator if n)
        )

    def inverse(self) -> "FactoredFraction":
        if self.is_zero:
            raise InvalidValueError("cannot invert the zero fraction")
        return FactoredFraction(self.denominator_expanded(), [(self.numerator, 1)])

    def __neg__(self):
        return FactoredFraction(-self.numerator, self.denominator)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FactoredFraction.constant(self.universe, other)
        if isinstance(other, Polynomial):
            other = FactoredFraction(other)
        if not isinstance(other, FactoredFraction):
            return NotImplemented
        return FactoredFraction.sum([self, other])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FactoredFraction.constant(self.universe, other)
        if isinstance(other, Polynomial):
            other = FactoredFraction(other)
        return FactoredFraction.sum([self, -other])

    @staticmethod
    def sum(items: Iterable["FactoredFraction"], universe=None) -> "FactoredFraction":
        """Sum brought over the least common denominator multiset.

        Terms sharing a denominator multiset are added numerator-first, so a
        long sum costs one cofactor assembly per distinct multiset."""
        items = list(items)
        if not items:
            if universe is None:
                raise UsageError("empty sum needs an explicit universe")
            return FactoredFraction.zero(universe)
        uni = items[0].universe
        buckets = {}
        for it in items:
            if not isinstance(it, FactoredFraction):
                raise UsageError("sum expects FactoredFraction items")
            if it.universe != uni:
                raise UsageError("variable universes differ")
            if it.is_zero:
                continue
            cur = buckets.get(it.denominator)
            buckets[it.denominator] = (
                it.numerator if cur is None else cur + it.numerator
            )
        if not buckets:
            return FactoredFraction.zero(uni)
        common = {}
        for den in buckets:
            for f, m in den:
                if common.get(f, 0) < m:
                    common[f] = m
        total = Polynomial.zero(uni)
        for den, num in buckets.items():
            if num.is_zero:
                continue
            have = dict(den)
            for f, m in common.items():
                extra = m - have.get(f, 0)
                if extra:
                    num = num * f ** extra
            total = total + num
        return FactoredFraction(total, common.items())

    # -- value equality ----------------------------------------------------

    def eq(self, other: "FactoredFraction") -> bool:
        """Cross-multiplication equality; common denominator factors cancel
        before multiplying out."""
        if isinstance(other, Polynomial):
            other = FactoredFraction(other)
        if self.universe != other.universe:
            raise UsageError("variable universes differ")
        mine = dict(self.denominator)
        theirs = dict(other.denominator)
        for f in set(mine) & set(theirs):
            m = min(mine[f], theirs[f])
            mine[f] -= m
            theirs[f] -= m
        lhs = self.numerator
        for f, m in theirs.items():
            if m:
                lhs = lhs * f ** m
        rhs = other.numerator
        for f, m in mine.items():
            if m:
                rhs = rhs * f ** m
        return lhs == rhs

    def __eq__(self, other):
        if not isinstance(other, FactoredFraction):
            return NotImplemented
        return (
            self.numerator == other.numerator and self.denominator == other.denominator
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, object], universe=None) -> "FactoredFraction":
        """Exact substitution; a denominator factor that becomes identically
        zero raises :class:`PoleError` instead of being simplified away.
        Binding values may themselves be fractions."""
        target = tuple(universe) if universe is not None else self.universe
        fracs = {}
        all_poly = True
        for name, v in bindings.items():
            if isinstance(v, (int, Fraction)):
                v = FactoredFraction.constant(target, v)
            elif isinstance(v, Polynomial):
                v = FactoredFraction(v)
            if not isinstance(v, FactoredFraction):
                raise UsageError("bindings must be fractions, polynomials or rationals")
            if v.universe != target:
                raise UsageError("binding value not over the target universe")
            fracs[name] = v
            if v.denominator:
                all_poly = False
        if all_poly:
            polys = {name: v.numerator for name, v in fracs.items()}
            num = self.numerator.substitute(polys, target)
            den = []
            for f, m in self.denominator:
                nf = f.substitute(polys, target)
                if nf.is_zero:
                    raise PoleError(f"denominator factor {f.text()} vanished")
                den.append((nf, m))
            return FactoredFraction(num, den)
        num = _substitute_to_fraction(self.numerator, fracs, target)
        result = num
        for f, m in self.denominator:
            nf = _substitute_to_fraction(f, fracs, target)
            if nf.is_zero:
                raise PoleError(f"denominator factor {f.text()} vanished")
            result = result * nf.inverse() ** m
        return result

    def retarget(self, universe) -> "FactoredFraction":
        target = tuple(universe)
        if target == self.universe:
            return self
        return FactoredFraction(
            self.numerator.retarget(target),
            ((f.retarget(target), m) for f, m in self.denominator),
        )

    # -- canonical text ----------------------------------------------------

    def text(self) -> str:
        num = self.numerator.text()
        if not self.denominator:
            return num
        parts = []
        for f, m in self.denominator:
            s = f"({f.text()})"
            if m > 1:
                s += f"^{m}"
            parts.append(s)
        den = " * ".join(parts)
        if len(parts) > 1:
            den = f"({den})"
        return f"({num}) / {den}"

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.text(),
            "denominator_factors": [[f.text(), m] for f, m in self.denominator],
        }

    def __repr__(self):
        return f"FactoredFraction({self.text()!r})"


def _substitute_to_fraction(p: Polynomial, fracs, target) -> FactoredFraction:
    for name in p.universe:
        if name not in fracs:
            if name not in target:
                raise UsageError(
                    f"variable {name!r} unbound and absent from target universe"
                )
            fracs[name] = FactoredFraction(Polynomial.variable(target, name))
    order = [fracs[name] for name in p.universe]
    caches = [{0: FactoredFraction.one(target)} for _ in order]
    terms = []
    for exps, c in p.terms.items():
        term = FactoredFraction.constant(target, c)
        for i, e in enumerate(exps):
            if e:
                cache = caches[i]
                if e not in cache:
                    cache[e] = order[i] ** e
                term = term * cache[e]
        terms.append(term)
    return FactoredFraction.sum(terms, universe=target)


def frac_eq(f: FactoredFraction, g: FactoredFraction) -> bool:
    """True iff the two fractions have equal values (cross-multiplication)."""
    return f.eq(g)


def substitute(f: FactoredFraction, bindings: Mapping[str, object], universe=None) -> FactoredFraction:
    """Exact substitution into a fraction; see :meth:`FactoredFraction.substitute`."""
    return f.substitute(bindings, universe)


class TruncatedSeries:
    """Truncated power series in one distinguished variable, with exact
    fraction coefficients over the full universe (the expansion variable does
    not occur inside coefficients)."""

    __slots__ = ("variable", "order", "coefficients")

    def __init__(self, variable: str, order: int, coefficients: Sequence[FactoredFraction]):
        coefficients = tuple(coefficients)
        if order < 0:
            raise UsageError("truncation order must be non-negative")
        if len(coefficients) != order + 1:
            raise UsageError("coefficient count must equal order + 1")
        for c in coefficients:
            if variable not in c.universe:
                raise UsageError(f"{variable!r} not in coefficient universe")
        self.variable = variable
        self.order = order
        self.coefficients = coefficients

    @classmethod
    def one(cls, universe, variable: str, order: int) -> "TruncatedSeries":
        coeffs = [FactoredFraction.one(universe)]
        coeffs += [FactoredFraction.zero(universe) for _ in range(order)]
        return cls(variable, order, coeffs)

    @property
    def universe(self):
        return self.coefficients[0].universe

    def coefficient(self, k: int) -> FactoredFraction:
        return self.coefficients[k]

    def _check(self, other: "TruncatedSeries"):
        if self.variable != other.variable or self.order != other.order:
            raise UsageError("series mismatch: variable or order differ")
        if self.universe != other.universe:
            raise UsageError("variable universes differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            self.variable,
            self.order,
            [a + b for a, b in zip(self.coefficients, other.coefficients)],
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial, FactoredFraction)):
            return self.scale(other)
        self._check(other)
        buckets = [[] for _ in range(self.order + 1)]
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coefficients[j]
                if not b.is_zero:
                    buckets[i + j].append(a * b)
        return TruncatedSeries(
            self.variable,
            self.order,
            [FactoredFraction.sum(b, universe=self.universe) for b in buckets],
        )

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by a value free of the expansion
        variable (use :meth:`mul_polynomial` otherwise)."""
        if isinstance(c, Polynomial) and c.degree_of(self.variable) > 0:
            raise UsageError("scalar involves the expansion variable")
        if isinstance(c, FactoredFraction):
            if c.numerator.degree_of(self.variable) > 0 or any(
                f.degree_of(self.variable) > 0 for f, _ in c.denominator
            ):
                raise UsageError("scalar involves the expansion variable")
        return TruncatedSeries(
            self.variable, self.order, [a * c for a in self.coefficients]
        )

    def mul_polynomial(self, p: Polynomial) -> "TruncatedSeries":
        """Multiply by a polynomial in the expansion variable (truncated)."""
        coeffs = _series_mul_poly(
            list(self.coefficients), p, self.variable, self.order
        )
        return TruncatedSeries(self.variable, self.order, coeffs)

    def eq(self, other: "TruncatedSeries") -> bool:
        self._check(other)
        return all(
            a.eq(b) for a, b in zip(self.coefficients, other.coefficients)
        )


def _split_in_var(p: Polynomial, var: str):
    """Split a polynomial by the exponent of ``var``; the coefficient
    polynomials keep the full universe with the var slot zeroed."""
    vi = p.universe.index(var)
    parts = {}
    for e, c in p.terms.items():
        k = e[vi]
        e2 = e[:vi] + (0,) + e[vi + 1:]
        parts.setdefault(k, {})[e2] = c
    return {k: Polynomial._raw(p.universe, t) for k, t in parts.items()}


def _series_mul_poly(coeffs, p: Polynomial, var: str, order: int):
    parts = _split_in_var(p, var)
    uni = p.universe
    buckets = [[] for _ in range(order + 1)]
    for k, pk in parts.items():
        if k > order:
            continue
        for j in range(order + 1 - k):
            a = coeffs[j]
            if not a.is_zero:
                buckets[j + k].append(a * pk)
    return [FactoredFraction.sum(b, universe=uni) for b in buckets]


def _series_inverse(d: Polynomial, var: str, order: int):
    parts = _split_in_var(d, var)
    d0 = parts.get(0)
    if d0 is None or d0.is_zero:
        raise NotInvertibleError(
            f"factor {d.text()} has zero constant term in {var!r}"
        )
    uni = d.universe
    inv0 = FactoredFraction(Polynomial.one(uni), [(d0, 1)])
    inv = [inv0]
    for k in range(1, order + 1):
        acc = [
            inv[k - j] * pj for j, pj in parts.items() if 1 <= j <= k
        ]
        s = FactoredFraction.sum(acc, universe=uni)
        inv.append(-s * inv0)
    return inv


def series_expand(
    numerator_factors: Sequence[Polynomial],
    denominator_factors: Sequence[Polynomial],
    var: str,
    order: int,
    universe=None,
) -> TruncatedSeries:
    """Expand a finite product of polynomial factors (and inverted factors)
    as a truncated series in ``var``.

    Every denominator factor must have a nonzero constant term in ``var``;
    infinite product inputs must be reduced to the finitely many factors that
    matter for the requested order before calling."""
    numerator_factors = list(numerator_factors)
    denominator_factors = list(denominator_factors)
    if order < 0:
        raise UsageError("truncation order must be non-negative")
    if universe is None:
        if not numerator_factors and not denominator_factors:
            raise UsageError("empty factor lists need an explicit universe")
        universe = (numerator_factors + denominator_factors)[0].universe
    universe = tuple(universe)
    for f in numerator_factors + denominator_factors:
        if f.universe != universe:
            raise UsageError("variable universes differ")
    if var not in universe:
        raise UsageError(f"{var!r} not in universe {universe}")
    coeffs = [FactoredFraction.one(universe)] + [
        FactoredFraction.zero(universe) for _ in range(order)
    ]
    for f in numerator_factors:
        coeffs = _series_mul_poly(coeffs, f, var, order)
    for f in denominator_factors:
        inv = _series_inverse(f, var, order)
        buckets = [[] for _ in range(order + 1)]
        for i, a in enumerate(coeffs):
            if a.is_zero:
                continue
            for j in range(order + 1 - i):
                buckets[i + j].append(a * inv[j])
        coeffs = [FactoredFraction.sum(b, universe=universe) for b in buckets]
    return TruncatedSeries(var, order, coeffs)


def geometric_sum(universe, name: str, n: int) -> Polynomial:
    """1 + v + ... + v^(n-1) over the given universe."""
    if n < 0:
        raise UsageError("length must be non-negative")
    out = Polynomial.zero(universe)
    for k in range(n):
        out = out + Polynomial.variable(universe, name, k)
    return out


def one_minus_power(universe, name: str, n: int) -> Polynomial:
    """1 - v^n."""
    return Polynomial.one(universe) - Polynomial.variable(universe, name, n)
