"""Exact multivariate Laurent polynomials over the rationals.

Terms map integer exponent vectors to Fraction coefficients; no zero
coefficient is ever stored.  Division is exact leading-term elimination
under lex order — there is no multivariate GCD here, a failed division
raises :class:`NotDivisible`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class NotDivisible(ArithmeticError):
    """No Laurent-polynomial quotient exists."""


class LaurentPoly:
    """A Laurent polynomial in an ordered tuple of named variables."""

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[Sequence[int], Fraction | int] | None = None,
    ) -> None:
        object.__setattr__(self, "variables", tuple(variables))
        clean: dict[tuple[int, ...], Fraction] = {}
        nvars = len(self.variables)
        for exp, coef in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError("exponent length mismatch")
            c = Fraction(coef)
            if c:
                clean[tuple(int(e) for e in exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> LaurentPoly:
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], c: Fraction | int) -> LaurentPoly:
        return cls(variables, {tuple(0 for _ in variables): Fraction(c)})

    @classmethod
    def monomial(
        cls,
        variables: Sequence[str],
        exp: Sequence[int],
        coef: Fraction | int = 1,
    ) -> LaurentPoly:
        return cls(variables, {tuple(exp): Fraction(coef)})

    @classmethod
    def generator(cls, variables: Sequence[str], index: int) -> LaurentPoly:
        exp = [0] * len(variables)
        exp[index] = 1
        return cls.monomial(variables, exp)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.terms.values()))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def _check(self, other: LaurentPoly) -> None:
        if self.variables != other.variables:
            raise ValueError("variable mismatch")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly(self.variables, terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(e, Fraction(0)) + ca * cb
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return LaurentPoly(self.variables, terms)

    def scale(self, c: Fraction | int) -> LaurentPoly:
        c = Fraction(c)
        return LaurentPoly(self.variables, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            ((e, c),) = self.terms.items()
            return LaurentPoly(self.variables, {tuple(n * x for x in e): c**n})
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- views --------------------------------------------------------

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Lex-largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def exponent_range(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Componentwise (min, max) over the support."""
        lo = tuple(min(e[i] for e in self.terms) for i in range(len(self.variables)))
        hi = tuple(max(e[i] for e in self.terms) for i in range(len(self.variables)))
        return lo, hi

    def coefficients_in(self, index: int) -> dict[int, LaurentPoly]:
        """Group terms by the exponent of one variable.

        The returned polynomials have exponent 0 in that variable.
        """
        out: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for e, c in self.terms.items():
            rest = list(e)
            d = rest[index]
            rest[index] = 0
            out.setdefault(d, {})[tuple(rest)] = c
        return {
            d: LaurentPoly(self.variables, terms) for d, terms in out.items()
        }

    def substitute(self, index: int, value: Fraction) -> LaurentPoly:
        """Evaluate one variable at a nonzero rational."""
        if value == 0:
            raise ZeroDivisionError("Laurent variables must stay nonzero")
        terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            rest = list(e)
            d = rest[index]
            rest[index] = 0
            key = tuple(rest)
            s = terms.get(key, Fraction(0)) + c * value**d
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return LaurentPoly(self.variables, terms)

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        if len(values) != len(self.variables):
            raise ValueError("value count mismatch")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, d in zip(values, e):
                if d:
                    term *= Fraction(x) ** d
            total += term
        return total

    def compose(self, values: Sequence[LaurentPoly]) -> LaurentPoly:
        """Substitute a Laurent polynomial for every variable.

        Negative exponents require the corresponding value to be a monomial
        (which is the case along mutation paths, where only the coordinate
        monomials are inverted).
        """
        if not values:
            raise ValueError("empty substitution")
        target = values[0].variables
        result = LaurentPoly.zero(target)
        powers: dict[tuple[int, int], LaurentPoly] = {}

        def power(i: int, d: int) -> LaurentPoly:
            key = (i, d)
            if key not in powers:
                powers[key] = values[i] ** d
            return powers[key]

        for e, c in self.terms.items():
            term = LaurentPoly.constant(target, c)
            for i, d in enumerate(e):
                if d:
                    term = term * power(i, d)
            result = result + term
        return result

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for name, d in zip(self.variables, e):
                if d == 1:
                    factors.append(name)
                elif d:
                    factors.append(f"{name}^{d}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return h with f = g*h, or raise :class:`NotDivisible`.

    Leading-term elimination under lex order.  If a quotient exists its
    support lies in the Minkowski difference of the supports, which bounds
    every candidate term and guarantees termination.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero")
    if f.is_zero():
        return LaurentPoly.zero(f.variables)
    f._check(g)
    flo, fhi = f.exponent_range()
    glo, ghi = g.exponent_range()
    box_lo = tuple(a - b for a, b in zip(flo, glo))
    box_hi = tuple(a - b for a, b in zip(fhi, ghi))
    ge, gc = g.leading()
    quotient: dict[tuple[int, ...], Fraction] = {}
    rem = f
    while not rem.is_zero():
        re, rc = rem.leading()
        he = tuple(a - b for a, b in zip(re, ge))
        if any(x < lo or x > hi for x, lo, hi in zip(he, box_lo, box_hi)):
            raise NotDivisible(f.format() + " / " + g.format())
        hc = rc / gc
        quotient[he] = hc
        rem = rem - g * LaurentPoly.monomial(f.variables, he, hc)
    return LaurentPoly(f.variables, quotient)


def product(polys: Iterable[LaurentPoly], variables: Sequence[str]) -> LaurentPoly:
    result = LaurentPoly.constant(variables, 1)
    for p in polys:
        result = result * p
    return result
