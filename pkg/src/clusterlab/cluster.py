"""Classical seeds: matrix mutation, exchange relations, Laurent certificates.

The exchange matrix is m×n with rows indexed by the exchangeable directions
[1,m] and columns by the full extended cluster [1,n]; seeds store every
cluster variable as an exact Laurent polynomial in the *initial* cluster, so
the Laurent phenomenon is a constructive invariant and equality of seeds is
decidable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, exact_divide, product
from .linalg import IntMatrix


def find_symmetrizer(b: IntMatrix) -> tuple[int, ...] | None:
    """Positive integer diagonal d with (b*diag(d)) skew, or None.

    Propagates the ratio conditions b_ij*d_j = -b_ji*d_i along the support
    graph, one connected component at a time, then clears denominators.
    """
    m = b.rows
    if m == 0:
        return ()
    for i in range(m):
        if b.entries[i][i] != 0:
            return None
        for j in range(m):
            if (b.entries[i][j] == 0) != (b.entries[j][i] == 0):
                return None
            if b.entries[i][j] * b.entries[j][i] > 0:
                return None
    d: list[Fraction | None] = [None] * m
    for root in range(m):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(m):
                if b.entries[i][j] == 0 or j == i:
                    continue
                # b_ij d_j = -b_ji d_i  =>  d_j = (-b_ji/b_ij) d_i
                want = d[i] * Fraction(-b.entries[j][i], b.entries[i][j])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    assert all(x is not None and x > 0 for x in d)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else abs(b)


@dataclass(frozen=True)
class ExchangeMatrix:
    """m×n integer matrix with skew-symmetrizable principal part."""

    b: IntMatrix

    def __post_init__(self) -> None:
        m, n = self.b.rows, self.b.cols
        if m > n:
            raise ValueError("more exchangeable rows than columns")
        principal = self.b.submatrix(range(m), range(m))
        if find_symmetrizer(principal) is None:
            raise ValueError("principal part is not skew-symmetrizable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ExchangeMatrix:
        return cls(IntMatrix.from_rows(rows))

    @property
    def m(self) -> int:
        return self.b.rows

    @property
    def n(self) -> int:
        return self.b.cols

    def symmetrizer(self) -> tuple[int, ...]:
        d = find_symmetrizer(self.b.submatrix(range(self.m), range(self.m)))
        assert d is not None
        return d

    def entry(self, i: int, j: int) -> int:
        return self.b.entries[i][j]


def mutate_matrix(e: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction k (0-based, k < m)."""
    m, n = e.m, e.n
    if not 0 <= k < m:
        raise IndexError("mutation index out of range")
    b = e.b.entries
    new = []
    for i in range(m):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
        new.append(row)
    return ExchangeMatrix(IntMatrix.from_rows(new))


@dataclass(frozen=True)
class Seed:
    """A seed: exchange matrix, labels, variables in the initial cluster."""

    matrix: ExchangeMatrix
    labels: tuple[str, ...]
    variables: tuple[LaurentPoly, ...]
    # the mutation trail is bookkeeping, not part of seed identity
    history: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.matrix.n or len(self.variables) != self.matrix.n:
            raise ValueError("label/variable count must equal n")

    @classmethod
    def initial(cls, matrix: ExchangeMatrix, labels: Sequence[str] | None = None) -> Seed:
        n = matrix.n
        labels = tuple(labels) if labels is not None else tuple(f"x{i+1}" for i in range(n))
        variables = tuple(LaurentPoly.generator(labels, i) for i in range(n))
        return cls(matrix, labels, variables)

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def n(self) -> int:
        return self.matrix.n

    def cluster_multiset(self) -> tuple[LaurentPoly, ...]:
        """The variables forgetting positions (sorted canonically)."""
        return tuple(
            sorted(self.variables, key=lambda p: sorted(p.terms.items()).__repr__())
        )


def exchange_polynomial(s: Seed, i: int) -> LaurentPoly:
    """P_i = prod x_k^{b_ik^+} + prod x_k^{-b_ik^-} on the current variables.

    The result is expressed in the initial cluster.
    """
    if not 0 <= i < s.m:
        raise IndexError("exchange index out of range")
    row = s.matrix.b.entries[i]
    pos = product(
        (s.variables[k] ** row[k] for k in range(s.n) if row[k] > 0), s.labels
    )
    neg = product(
        (s.variables[k] ** (-row[k]) for k in range(s.n) if row[k] < 0), s.labels
    )
    return pos + neg


def exchange_polynomial_symbolic(s: Seed, i: int) -> LaurentPoly:
    """P_i as a polynomial in the seed's own cluster coordinates."""
    if not 0 <= i < s.m:
        raise IndexError("exchange index out of range")
    row = s.matrix.b.entries[i]
    pos_exp = tuple(max(x, 0) for x in row)
    neg_exp = tuple(max(-x, 0) for x in row)
    return LaurentPoly(s.labels, {pos_exp: 1}) + LaurentPoly(s.labels, {neg_exp: 1})


def mutate_seed(s: Seed, k: int) -> Seed:
    """Replace x_k by P_k/x_k and mutate the matrix; involutive."""
    if not 0 <= k < s.m:
        raise IndexError("mutation index out of range")
    p = exchange_polynomial(s, k)
    new_var = exact_divide(p, s.variables[k])
    variables = tuple(
        new_var if i == k else v for i, v in enumerate(s.variables)
    )
    return Seed(mutate_matrix(s.matrix, k), s.labels, variables, s.history + (k,))


def mutate_along(s: Seed, word: Sequence[int]) -> Seed:
    for k in word:
        s = mutate_seed(s, k)
    return s


@dataclass(frozen=True)
class LaurentReport:
    """Outcome of the Laurent certificate for one seed."""

    is_laurent: bool
    all_coefficients_positive_integers: bool
    offending: tuple[str, ...] = ()


def laurent_certificate(s: Seed) -> LaurentReport:
    """Confirm every variable is Laurent and report coefficient positivity.

    Variables are Laurent polynomials by construction; positivity of the
    coefficients is reported, not asserted (it is a theorem in many cases,
    a conjecture in general).
    """
    offending = []
    for label, v in zip(s.labels, s.variables):
        for c in v.terms.values():
            if c.denominator != 1 or c <= 0:
                offending.append(label)
                break
    return LaurentReport(True, not offending, tuple(offending))


def lower_bound_generators(s: Seed) -> list[LaurentPoly]:
    """{x_1..x_n, y_1..y_m} with y_i the variable produced by mutating at i."""
    gens = list(s.variables)
    for i in range(s.m):
        gens.append(mutate_seed(s, i).variables[i])
    return gens


def upper_bound_membership(f: LaurentPoly, s: Seed) -> bool:
    """Membership of f (in s's cluster coordinates) in the upper bound.

    For every exchangeable j the coefficient of x_j^{-t} (t>0) must be
    divisible by P_j^t; coefficients (frozen variables) are not inverted,
    so their exponents must stay nonnegative throughout.
    """
    if f.variables != s.labels:
        raise ValueError("f must be expressed in the seed's cluster")
    for e in f.terms:
        if any(e[j] < 0 for j in range(s.m, s.n)):
            return False
    for j in range(s.m):
        p_j = exchange_polynomial_symbolic(s, j)
        parts = f.coefficients_in(j)
        for t, coeff in parts.items():
            if t >= 0:
                continue
            try:
                exact_divide(coeff, p_j ** (-t))
            except ArithmeticError:
                return False
    return True
