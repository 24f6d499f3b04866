"""Toric frames, quantum seeds and quantum mutation.

Quantum cluster variables live in the initial quantum torus over
Z[q^{±1/2}].  One mutation step from a torus frame is computed by the
two-term based-monomial formula; deeper paths track the variables through
the quantum exchange relation (multiply by X_k, then take the exact left
quotient), since mutated frames are no longer torus-type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cluster import ExchangeMatrix, Seed, mutate_matrix
from .linalg import IntMatrix
from .poisson import CompatiblePair, e_matrix, is_compatible_pair
from .qtorus import QScalar, QTorusElement, exact_divide_q, q_binomial


@dataclass(frozen=True)
class ToricFrame:
    """A torus-type frame: based monomials re-indexed by a unimodular η."""

    lam: IntMatrix
    eta: IntMatrix
    based: bool = True

    def __post_init__(self) -> None:
        if not self.lam.is_skew_symmetric():
            raise ValueError("frame lambda must be skew-symmetric")
        if self.eta.rows != self.lam.rows or self.eta.cols != self.lam.rows:
            raise ValueError("eta must be n×n")

    @classmethod
    def initial(cls, lam: IntMatrix) -> ToricFrame:
        return cls(lam, IntMatrix.identity(lam.rows))

    @property
    def n(self) -> int:
        return self.lam.rows


def frame_monomial(fr: ToricFrame, c: Sequence[int]) -> QTorusElement:
    """M(c): the based monomial at η(c)."""
    if not fr.based:
        raise ValueError("frame is not torus-type")
    if len(c) != fr.n:
        raise ValueError("lattice point has wrong length")
    return QTorusElement.based_monomial(fr.lam, fr.eta.apply(c))


@dataclass(frozen=True)
class QuantumSeed:
    """Exchange matrix + frame Λ + variables in the initial quantum torus.

    `lam` is the current frame matrix Λ_M (mutates by E^T Λ E); the
    variables stay expressed over the initial torus matrix `lam0`.
    """

    matrix: ExchangeMatrix
    lam: IntMatrix
    lam0: IntMatrix
    variables: tuple[QTorusElement, ...]
    diag: tuple[int, ...]
    history: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        d = is_compatible_pair(self.matrix, self.lam)
        if d != self.diag:
            raise ValueError("(B, Λ) is not compatible with the stated diagonal")
        if len(self.variables) != self.matrix.n:
            raise ValueError("variable count must equal n")

    @classmethod
    def initial(cls, matrix: ExchangeMatrix, lam: IntMatrix) -> QuantumSeed:
        d = is_compatible_pair(matrix, lam)
        if d is None:
            raise ValueError("(B, Λ) is not a compatible pair")
        n = matrix.n
        variables = tuple(
            QTorusElement.based_monomial(lam, tuple(1 if j == i else 0 for j in range(n)))
            for i in range(n)
        )
        return cls(matrix, lam, lam, variables, d)

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def n(self) -> int:
        return self.matrix.n

    def frame(self) -> ToricFrame:
        """The frame as a torus-type object; only valid for the initial seed."""
        if self.history:
            raise ValueError("mutated frames are not torus-type")
        return ToricFrame.initial(self.lam)

    def shadow_seed(self, labels: Sequence[str] | None = None) -> Seed:
        """The classical seed under q^{1/2} -> 1 (same matrix, same history)."""
        labels = tuple(labels) if labels else tuple(f"x{i+1}" for i in range(self.n))
        variables = tuple(v.specialize(labels) for v in self.variables)
        # reconstruct the matrix the shadow started from by replaying history
        b = self.matrix
        for k in reversed(self.history):
            b = mutate_matrix(b, k)  # mutation is involutive
        return Seed(self.matrix, labels, variables, self.history)


def _ordered_value(qs: QuantumSeed, exps: Sequence[int]) -> QTorusElement:
    """M(a) for a ≥ 0: the normalized ordered product of current variables.

    q^{(1/2)·sum_{i<j} λ_ji a_i a_j} · X_1^{a_1} ··· X_n^{a_n}, computed in
    the initial torus.  For the initial seed this is the based monomial X^(a).
    """
    if any(x < 0 for x in exps):
        raise ValueError("ordered values need nonnegative exponents")
    lam = qs.lam.entries
    half = 0
    for i in range(qs.n):
        if not exps[i]:
            continue
        for j in range(i + 1, qs.n):
            if exps[j]:
                half += lam[j][i] * exps[i] * exps[j]
    result = QTorusElement.based_monomial(
        qs.lam0, tuple(0 for _ in range(qs.n)), QScalar.q_power(half)
    )
    for i, a in enumerate(exps):
        if a:
            result = result * qs.variables[i] ** a
    return result


def quantum_exchange_variable(qs: QuantumSeed, k: int) -> QTorusElement:
    """X_k' = M(-e_k + Σ_{b_kl>0} b_kl e_l) + M(-e_k - Σ_{b_kl<0} b_kl e_l).

    Computed through the exchange relation: X_k·X_k' is a sum of two
    nonnegative ordered monomials in the current variables, and X_k' is the
    exact left quotient.
    """
    if not 0 <= k < qs.m:
        raise IndexError("mutation index out of range")
    row = qs.matrix.b.entries[k]
    v_pos = tuple((-1 if i == k else 0) + max(row[i], 0) for i in range(qs.n))
    v_neg = tuple((-1 if i == k else 0) + max(-row[i], 0) for i in range(qs.n))
    e_k = tuple(1 if i == k else 0 for i in range(qs.n))
    total = QTorusElement.zero(qs.lam0)
    for v in (v_pos, v_neg):
        shifted = tuple(a + b for a, b in zip(e_k, v))
        half = sum(qs.lam.entries[k][j] * v[j] for j in range(qs.n))  # e_k^T Λ v
        total = total + _ordered_value(qs, shifted).scale(QScalar.q_power(half))
    return exact_divide_q(total, qs.variables[k])


def frame_mutation_value(
    qs: QuantumSeed, k: int, c: Sequence[int], eps: int = 1
) -> QTorusElement:
    """M_k(c) = Σ_p [c_k choose p]_{q^{d_k/2}} M(E_ε c + ε p b^k), c_k ≥ 0.

    Only defined one mutation step from a torus-type frame; the skew-field
    branch M_k(-c) = M_k(c)^{-1} is outside the computable fragment.
    """
    if not 0 <= k < qs.m:
        raise IndexError("mutation index out of range")
    if eps not in (1, -1):
        raise ValueError("eps must be ±1")
    c = tuple(int(x) for x in c)
    if c[k] < 0:
        raise ValueError("c_k must be nonnegative (inverse branch excluded)")
    fr = qs.frame()  # raises off the initial frame
    e_eps = e_matrix(qs.matrix, k, eps)
    b_vec = qs.matrix.b.entries[k]  # exchange exponent vector b^k
    base = e_eps.apply(c)
    d_k = qs.diag[k]
    total = QTorusElement.zero(qs.lam0)
    for p in range(c[k] + 1):
        coef = q_binomial(c[k], p, d_k)
        point = tuple(base[i] + eps * p * b_vec[i] for i in range(qs.n))
        total = total + frame_monomial(fr, point).scale(coef)
    return total


def mutate_quantum_seed(qs: QuantumSeed, k: int) -> QuantumSeed:
    """Mutate: B by matrix mutation, Λ by E^T Λ E, X_k by the exchange relation."""
    if not 0 <= k < qs.m:
        raise IndexError("mutation index out of range")
    x_new = quantum_exchange_variable(qs, k)
    e = e_matrix(qs.matrix, k, 1)
    new_lam = e.transpose() * qs.lam * e
    new_b = mutate_matrix(qs.matrix, k)
    variables = tuple(
        x_new if i == k else v for i, v in enumerate(qs.variables)
    )
    return QuantumSeed(
        new_b, new_lam, qs.lam0, variables, qs.diag, qs.history + (k,)
    )


def mutate_quantum_along(qs: QuantumSeed, word: Sequence[int]) -> QuantumSeed:
    for k in word:
        qs = mutate_quantum_seed(qs, k)
    return qs


@dataclass(frozen=True)
class QuantumLaurentReport:
    """Outcome of the quantum Laurent certificate."""

    in_quantum_torus: bool
    bar_symmetric: bool
    specialization_matches_classical: bool


def quantum_laurent_certificate(qs: QuantumSeed) -> QuantumLaurentReport:
    """Certify membership in the torus, bar symmetry, and the classical limit.

    The commutative-limit square: specializing q^{1/2} -> 1 must reproduce
    the classical seed mutated along the same history.
    """
    from .cluster import Seed as _Seed
    from .cluster import mutate_along

    bar_ok = all(v.bar_symmetric() for v in qs.variables)
    labels = tuple(f"x{i+1}" for i in range(qs.n))
    # replay the classical pipeline from the initial matrix
    b = qs.matrix
    for k in reversed(qs.history):
        b = mutate_matrix(b, k)
    classical = mutate_along(_Seed.initial(b, labels), qs.history)
    spec_ok = all(
        v.specialize(labels) == cv
        for v, cv in zip(qs.variables, classical.variables)
    )
    return QuantumLaurentReport(True, bar_ok, spec_ok)


def quantum_pair(qs: QuantumSeed) -> CompatiblePair:
    return CompatiblePair(qs.matrix, qs.lam, qs.diag)
