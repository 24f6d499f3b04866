"""Log-canonical brackets, compatible pairs and toric actions.

A pair (B, Λ) is compatible when B·Λ = (D | 0) with positive integer
diagonal D; such pairs give both a Poisson bracket compatible with the
cluster structure and a quantum seed.  Pair mutation goes through the
E and F matrices and is independent of the sign choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cluster import ExchangeMatrix, Seed, mutate_seed
from .laurent import LaurentPoly, exact_divide
from .linalg import IntMatrix, Lattice, integer_kernel


@dataclass(frozen=True)
class BracketSpec:
    """Coefficient matrix of a log-canonical bracket {x_i,x_j} = λ_ij x_i x_j."""

    lam: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.lam)
        for row in self.lam:
            if len(row) != n:
                raise ValueError("lambda must be square")
        for i in range(n):
            for j in range(n):
                if self.lam[i][j] != -self.lam[j][i]:
                    raise ValueError("lambda must be skew-symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> BracketSpec:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.lam)

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """a^T Λ b."""
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                total += ai * sum(
                    self.lam[i][j] * bj for j, bj in enumerate(b) if bj
                )
        return total

    def integer_scaled(self) -> tuple[IntMatrix, int]:
        """(c·Λ, c) for the least positive integer c clearing denominators."""
        c = 1
        for row in self.lam:
            for x in row:
                c = c * x.denominator // _gcd(c, x.denominator)
        return (
            IntMatrix.from_rows(
                [[int(x * c) for x in row] for row in self.lam]
            ),
            c,
        )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else abs(b)


def bracket(f: LaurentPoly, g: LaurentPoly, spec: BracketSpec) -> LaurentPoly:
    """Bilinear Leibniz extension: {x^a, x^b} = (a^T Λ b) x^{a+b}."""
    if len(f.variables) != spec.n or f.variables != g.variables:
        raise ValueError("dimension mismatch")
    terms: dict[tuple[int, ...], Fraction] = {}
    for ea, ca in f.terms.items():
        for eb, cb in g.terms.items():
            w = spec.pairing(ea, eb)
            if not w:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            s = terms.get(e, Fraction(0)) + ca * cb * w
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
    return LaurentPoly(f.variables, terms)


def is_compatible_pair(b: ExchangeMatrix, lam: IntMatrix) -> tuple[int, ...] | None:
    """Diagonal (d_1..d_m) when B·Λ = (D|0) with d_i > 0, else None."""
    if not lam.is_skew_symmetric() or lam.rows != b.n:
        return None
    prod = b.b * lam
    diag = []
    for i in range(b.m):
        for j in range(b.n):
            v = prod.entries[i][j]
            if i == j:
                if v <= 0:
                    return None
                diag.append(v)
            elif v != 0:
                return None
    return tuple(diag)


@dataclass(frozen=True)
class CompatiblePair:
    """(B, Λ) with the diagonal certificate D = B·Λ checked at construction."""

    b: ExchangeMatrix
    lam: IntMatrix
    diag: tuple[int, ...]

    def __post_init__(self) -> None:
        d = is_compatible_pair(self.b, self.lam)
        if d is None or d != self.diag:
            raise ValueError("pair is not compatible with the stated diagonal")

    @classmethod
    def build(cls, b: ExchangeMatrix, lam: IntMatrix) -> CompatiblePair:
        d = is_compatible_pair(b, lam)
        if d is None:
            raise ValueError("pair is not compatible")
        return cls(b, lam, d)


def full_rank_check(p: CompatiblePair) -> bool:
    """B·Λ has full rank m (always true for a valid pair; named lemma)."""
    return (p.b.b * p.lam).rank() == p.b.m


def e_matrix(b: ExchangeMatrix, k: int, eps: int) -> IntMatrix:
    """E_{k,ε}: identity except column k, where (i,k) = max(0, -ε b_ki)."""
    n = b.n
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        if i == k:
            rows[i][k] = -1
        else:
            rows[i][k] = max(0, -eps * b.entry(k, i))
    return IntMatrix.from_rows(rows)


def f_matrix(b: ExchangeMatrix, k: int, eps: int) -> IntMatrix:
    """F_{k,ε}: identity except row k, where (k,j) = max(0, ε b_jk)."""
    m = b.m
    rows = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for j in range(m):
        if j == k:
            rows[k][j] = -1
        else:
            rows[k][j] = max(0, eps * b.entry(j, k))
    return IntMatrix.from_rows(rows)


def mutate_pair(p: CompatiblePair, k: int, eps: int = 1) -> CompatiblePair:
    """(B,Λ) -> (F^T B E^T, E^T Λ E); compatible again, ε-independent Λ.

    With rows indexed by the exchangeable directions the B-part transforms
    by the transposed E and F; this is the arrangement under which it equals
    plain matrix mutation.
    """
    if not 0 <= k < p.b.m:
        raise IndexError("mutation index out of range")
    if eps not in (1, -1):
        raise ValueError("eps must be ±1")
    e = e_matrix(p.b, k, eps)
    f = f_matrix(p.b, k, eps)
    new_b = ExchangeMatrix(f.transpose() * p.b.b * e.transpose())
    new_lam = e.transpose() * p.lam * e
    return CompatiblePair.build(new_b, new_lam)


def global_toric_lattice(b: ExchangeMatrix) -> Lattice:
    """T = ker(B): weights of local toric actions extending globally."""
    return integer_kernel(b.b)


def check_weight_matrix(b: ExchangeMatrix, c: IntMatrix) -> bool:
    """True iff B·C = 0, i.e. every column of C is a global toric weight."""
    if c.rows != b.n:
        raise ValueError("dimension mismatch")
    prod = b.b * c
    return all(x == 0 for row in prod.entries for x in row)


def grade_by_weights(f: LaurentPoly, c: IntMatrix) -> dict[tuple[int, ...], LaurentPoly]:
    """Split f by the grading induced by the columns of C (weight = C^T·exp)."""
    if c.rows != len(f.variables):
        raise ValueError("dimension mismatch")
    ct = c.transpose()
    graded: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
    for e, coef in f.terms.items():
        w = ct.apply(e)
        graded.setdefault(w, {})[e] = coef
    return {w: LaurentPoly(f.variables, t) for w, t in graded.items()}


def adjacent_log_canonical(s: Seed, spec: BracketSpec, i: int) -> bool:
    """Log-canonicity of the adjacent cluster obtained by mutating at i.

    Checks {y_i, x_j} = c·y_i·x_j for a scalar c, for every j ≠ i.
    """
    if not 0 <= i < s.m:
        raise IndexError("mutation index out of range")
    y = mutate_seed(s, i).variables[i]
    for j in range(s.n):
        if j == i:
            continue
        x = s.variables[j]
        br = bracket(y, x, spec)
        if br.is_zero():
            continue
        try:
            q = exact_divide(br, y * x)
        except ArithmeticError:
            return False
        if not q.is_constant():
            return False
    return True


def projected_torus(t: Lattice, drop: Sequence[int]) -> Lattice:
    """Project out the dropped coordinates, re-embedded on the kept ones."""
    dropped = set(drop)
    keep = [i for i in range(t.ambient_dim) if i not in dropped]
    return t.project(keep)
