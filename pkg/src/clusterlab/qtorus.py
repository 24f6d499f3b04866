"""Skew Laurent polynomials over Z[q^{±1/2}].

Quantum-torus elements are stored in the based-monomial basis X^(c): the
product rule is X^(c) X^(d) = q^{(c^T Λ d)/2} X^(c+d) for a fixed
skew-symmetric integer matrix Λ.  Exponents of q are counted in halves, so
the key k of a QScalar term stands for q^{k/2}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .laurent import LaurentPoly, NotDivisible
from .linalg import IntMatrix


class QScalar:
    """An element of Z[q^{±1/2}]; keys count half-powers of q."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        clean = {int(k): int(v) for k, v in (terms or {}).items() if v}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QScalar is immutable")

    @classmethod
    def integer(cls, n: int) -> QScalar:
        return cls({0: n})

    @classmethod
    def q_power(cls, half_exponent: int, coef: int = 1) -> QScalar:
        """coef * q^(half_exponent/2)."""
        return cls({half_exponent: coef})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QScalar) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: QScalar) -> QScalar:
        terms = dict(self.terms)
        for k, v in other.terms.items():
            s = terms.get(k, 0) + v
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return QScalar(terms)

    def __neg__(self) -> QScalar:
        return QScalar({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: QScalar) -> QScalar:
        return self + (-other)

    def __mul__(self, other: QScalar) -> QScalar:
        terms: dict[int, int] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = ka + kb
                s = terms.get(k, 0) + va * vb
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
        return QScalar(terms)

    def shift(self, half_exponent: int) -> QScalar:
        """Multiply by q^(half_exponent/2)."""
        return QScalar({k + half_exponent: v for k, v in self.terms.items()})

    def bar(self) -> QScalar:
        """The bar involution q^{1/2} -> q^{-1/2}."""
        return QScalar({-k: v for k, v in self.terms.items()})

    def is_bar_symmetric(self) -> bool:
        return self.bar() == self

    def at_one(self) -> int:
        """Specialize q^{1/2} -> 1."""
        return sum(self.terms.values())

    def divide_exact(self, other: QScalar) -> QScalar:
        """Exact division in Z[q^{±1/2}] or :class:`NotDivisible`.

        One-variable Laurent division: eliminate the top term repeatedly.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.is_zero():
            return QScalar()
        top = max(other.terms)
        lowest = min(self.terms) - min(other.terms)
        quot: dict[int, int] = {}
        rem = self
        while not rem.is_zero():
            k = max(rem.terms)
            if k - top < lowest:
                raise NotDivisible("no scalar quotient")
            c, d = rem.terms[k], other.terms[top]
            if c % d:
                raise NotDivisible("scalar coefficients not divisible")
            quot[k - top] = c // d
            rem = rem - other * QScalar({k - top: c // d})
        return QScalar(quot)

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            if k == 0:
                parts.append(str(v))
                continue
            if k == 2:
                power = "q"
            elif k % 2 == 0:
                power = f"q^{k // 2}"
            else:
                power = f"q^({k}/2)"
            if v == 1:
                parts.append(power)
            elif v == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{v}*{power}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QScalar({self.format()!r})"


QONE = QScalar.integer(1)


def q_binomial(r: int, p: int, d: int) -> QScalar:
    """Gaussian binomial [r choose p] in base q^{d/2}.

    Symmetric under q -> q^{-1}: [r p] = prod_{j=1..p} (v^{r-j+1} - v^{-(r-j+1)})
    / (v^j - v^{-j}) with v = q^{d/2}.

    >>> q_binomial(2, 1, 2).format()
    'q + q^-1'
    >>> q_binomial(3, 1, 2).format()
    'q^2 + 1 + q^-2'
    >>> q_binomial(4, 2, 2).at_one()
    6
    """
    if d <= 0:
        raise ValueError("base exponent must be positive")
    if p < 0 or p > r:
        raise ValueError("binomial index out of range")
    result = QONE
    for j in range(1, p + 1):
        a = r - j + 1
        # (v^a - v^-a)/(v^j - v^-j) is the quantum integer ratio; compute by
        # polynomial division in Z[q^{±1/2}]
        num = QScalar({a * d: 1, -a * d: -1})
        den = QScalar({j * d: 1, -j * d: -1})
        result = (result * num).divide_exact(den)
    return result


class QTorusElement:
    """A quantum-torus element in the based-monomial basis for a fixed Λ."""

    __slots__ = ("lam", "terms")

    def __init__(
        self,
        lam: IntMatrix,
        terms: Mapping[Sequence[int], QScalar] | None = None,
    ) -> None:
        if not lam.is_skew_symmetric():
            raise ValueError("lambda must be skew-symmetric")
        object.__setattr__(self, "lam", lam)
        clean: dict[tuple[int, ...], QScalar] = {}
        n = lam.rows
        for exp, coef in (terms or {}).items():
            if len(exp) != n:
                raise ValueError("exponent length mismatch")
            if not coef.is_zero():
                clean[tuple(int(e) for e in exp)] = coef
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QTorusElement is immutable")

    @property
    def nvars(self) -> int:
        return self.lam.rows

    @classmethod
    def zero(cls, lam: IntMatrix) -> QTorusElement:
        return cls(lam, {})

    @classmethod
    def one(cls, lam: IntMatrix) -> QTorusElement:
        return cls(lam, {tuple(0 for _ in range(lam.rows)): QONE})

    @classmethod
    def based_monomial(
        cls, lam: IntMatrix, exp: Sequence[int], coef: QScalar = QONE
    ) -> QTorusElement:
        return cls(lam, {tuple(exp): coef})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QTorusElement)
            and self.lam == other.lam
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.lam, frozenset(self.terms.items())))

    def _check(self, other: QTorusElement) -> None:
        if self.lam != other.lam:
            raise ValueError("lambda mismatch")

    def __add__(self, other: QTorusElement) -> QTorusElement:
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, QScalar()) + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return QTorusElement(self.lam, terms)

    def __neg__(self) -> QTorusElement:
        return QTorusElement(self.lam, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: QTorusElement) -> QTorusElement:
        return self + (-other)

    def _pairing(self, c: Sequence[int], d: Sequence[int]) -> int:
        """c^T Λ d, the half-power of q in the based product rule."""
        lam = self.lam.entries
        total = 0
        for i, ci in enumerate(c):
            if ci:
                row = lam[i]
                total += ci * sum(row[j] * dj for j, dj in enumerate(d) if dj)
        return total

    def __mul__(self, other: QTorusElement) -> QTorusElement:
        self._check(other)
        terms: dict[tuple[int, ...], QScalar] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = (ca * cb).shift(self._pairing(ea, eb))
                s = terms.get(e, QScalar()) + c
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return QTorusElement(self.lam, terms)

    def scale(self, c: QScalar) -> QTorusElement:
        return QTorusElement(self.lam, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> QTorusElement:
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            ((e, c),) = self.terms.items()
            inv_exp = tuple(-x for x in e)
            # X^(e) X^(-e) = q^{(e^T Λ (-e))/2} X^0 = X^0, so the based
            # inverse only needs the scalar inverted
            cinv = QONE.divide_exact(c)
            return QTorusElement.based_monomial(self.lam, inv_exp, cinv) ** (-n)
        result = QTorusElement.one(self.lam)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar_symmetric(self) -> bool:
        return all(c.is_bar_symmetric() for c in self.terms.values())

    def specialize(self, variables: Sequence[str]) -> LaurentPoly:
        """Commutative shadow at q^{1/2} -> 1."""
        if len(variables) != self.nvars:
            raise ValueError("variable count mismatch")
        return LaurentPoly(
            variables, {e: Fraction(c.at_one()) for e, c in self.terms.items()}
        )

    def exponent_range(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        lo = tuple(min(e[i] for e in self.terms) for i in range(self.nvars))
        hi = tuple(max(e[i] for e in self.terms) for i in range(self.nvars))
        return lo, hi

    def leading(self) -> tuple[tuple[int, ...], QScalar]:
        e = max(self.terms)
        return e, self.terms[e]

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            body = "*".join(
                f"X{i + 1}^{d}" if d != 1 else f"X{i + 1}"
                for i, d in enumerate(e)
                if d
            )
            cs = c.format()
            if not body:
                parts.append(f"({cs})")
            elif cs == "1":
                parts.append(body)
            else:
                parts.append(f"({cs})*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QTorusElement({self.format()!r})"


def q_multiply(a: QTorusElement, b: QTorusElement) -> QTorusElement:
    """Product in the quantum torus (based-monomial normalization)."""
    return a * b


def exact_divide_q(f: QTorusElement, g: QTorusElement) -> QTorusElement:
    """Left quotient: h with f = g*h, or :class:`NotDivisible`.

    Same leading-exponent elimination as the commutative case; the q-power
    bookkeeping follows the based product rule.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero")
    f._check(g)
    if f.is_zero():
        return QTorusElement.zero(f.lam)
    flo, fhi = f.exponent_range()
    glo, ghi = g.exponent_range()
    box_lo = tuple(a - b for a, b in zip(flo, glo))
    box_hi = tuple(a - b for a, b in zip(fhi, ghi))
    ge, gc = g.leading()
    quotient: dict[tuple[int, ...], QScalar] = {}
    rem = f
    while not rem.is_zero():
        re, rc = rem.leading()
        he = tuple(a - b for a, b in zip(re, ge))
        if any(x < lo or x > hi for x, lo, hi in zip(he, box_lo, box_hi)):
            raise NotDivisible("no skew Laurent quotient")
        # g * (hc X^(he)) contributes q^{(ge^T Λ he)/2} gc*hc at X^(re)
        hc = rc.shift(-f._pairing(ge, he)).divide_exact(gc)
        quotient[he] = hc
        rem = rem - g * QTorusElement.based_monomial(f.lam, he, hc)
    return QTorusElement(f.lam, quotient)
