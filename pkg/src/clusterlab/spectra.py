"""Torus-invariant prime ideal combinatorics and stratum descriptors.

TIPs of quantum and Poisson planes are generated by subsets of the
variables, so the whole stratification is indexed by subsets of [1,n]:
each stratum carries the center lattice (kernel of the surviving principal
submatrix of Λ) and its rank.  The Dixmier-type map acts on these
descriptors as the identity on labels, which is the computable content of
the quantum/Poisson homeomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Sequence

from .cluster import ExchangeMatrix
from .laurent import LaurentPoly
from .linalg import IntMatrix, Lattice, integer_kernel, lattice_span_rank
from .poisson import CompatiblePair, global_toric_lattice, projected_torus
from .qtorus import QTorusElement


@dataclass(frozen=True)
class TipDescriptor:
    """A TIP of a quantum/Poisson plane: the set of cluster variables inside."""

    n: int
    contained_vars: frozenset[int]  # 0-based variable indices

    def __post_init__(self) -> None:
        if any(i < 0 or i >= self.n for i in self.contained_vars):
            raise ValueError("variable index out of range")

    @classmethod
    def of(cls, n: int, vars_: Sequence[int]) -> TipDescriptor:
        return cls(n, frozenset(vars_))

    def surviving(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if i not in self.contained_vars)

    def includes(self, other: TipDescriptor) -> bool:
        return self.contained_vars >= other.contained_vars


@dataclass(frozen=True)
class StratumDescriptor:
    """One stratum: tip label, surviving index set, center lattice, rank."""

    tip: TipDescriptor
    surviving: tuple[int, ...]
    center_lattice: Lattice
    rank: int

    def __post_init__(self) -> None:
        if self.center_lattice.ambient_dim != len(self.surviving):
            raise ValueError("center lattice lives on the surviving indices")
        if self.rank != self.center_lattice.rank:
            raise ValueError("rank must equal the center lattice rank")


def invariant_monomial_lattice(b: ExchangeMatrix) -> Lattice:
    """T^⊤: exponents w for which x^w is invariant under all global actions."""
    t = global_toric_lattice(b)
    if t.rank == 0:
        return Lattice.full(b.n)
    return integer_kernel(IntMatrix.from_rows(t.basis))


def poisson_radical(lam: IntMatrix) -> Lattice:
    """rad(Λ): integer kernel of the skew form."""
    if not lam.is_skew_symmetric():
        raise ValueError("lambda must be skew-symmetric")
    return integer_kernel(lam)


def intersection_rank(a: Lattice, b: Lattice) -> int:
    """Rank of a ∩ b (over Q: rank a + rank b − rank(a+b))."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return a.rank + b.rank - lattice_span_rank(a, b)


def is_supertoric(p: CompatiblePair) -> bool:
    """rk(T_{[1,k]} + Im(Λ_{[1,k]})) = k for every truncation k."""
    n = p.b.n
    t = global_toric_lattice(p.b)
    for k in range(1, n + 1):
        t_k = projected_torus(t, range(k, n))
        lam_k = p.lam.submatrix(range(k), range(k))
        col_lattice = Lattice.from_vectors(
            k, [lam_k.column(j) for j in range(k)]
        )
        if lattice_span_rank(t_k, col_lattice) != k:
            return False
    return True


def enumerate_affine_strata(lam: IntMatrix) -> list[StratumDescriptor]:
    """All 2^n strata of the quantum/Poisson plane of Λ.

    For each subset i of surviving indices: tip = complement, center =
    kernel of Λ_i, rank = |i| − rank(Λ_i).
    """
    if not lam.is_skew_symmetric():
        raise ValueError("lambda must be skew-symmetric")
    n = lam.rows
    out = []
    for size in range(n + 1):
        for surv in combinations(range(n), size):
            tip = TipDescriptor.of(n, [i for i in range(n) if i not in surv])
            sub = lam.submatrix(surv, surv)
            center = integer_kernel(sub)
            out.append(StratumDescriptor(tip, surv, center, center.rank))
    return out


def reduce_mod_tip(
    f: LaurentPoly | QTorusElement, tip: TipDescriptor
) -> LaurentPoly | QTorusElement:
    """The reduction map onto the surviving quantum/Poisson torus.

    Kills every term with a nonzero exponent on a tip variable and restricts
    the exponents (and Λ, in the skew case) to the surviving indices.
    Multiplicative; defined only on the affine subring (no negative tip
    exponents).
    """
    surv = tip.surviving()
    if isinstance(f, LaurentPoly):
        if len(f.variables) != tip.n:
            raise ValueError("dimension mismatch")
        for e in f.terms:
            if any(e[i] < 0 for i in tip.contained_vars):
                raise ValueError("negative exponent on a tip variable")
        kept_vars = tuple(f.variables[i] for i in surv)
        terms = {
            tuple(e[i] for i in surv): c
            for e, c in f.terms.items()
            if all(e[i] == 0 for i in tip.contained_vars)
        }
        return LaurentPoly(kept_vars, terms)
    if isinstance(f, QTorusElement):
        if f.nvars != tip.n:
            raise ValueError("dimension mismatch")
        for e in f.terms:
            if any(e[i] < 0 for i in tip.contained_vars):
                raise ValueError("negative exponent on a tip variable")
        lam_sub = f.lam.submatrix(surv, surv)
        terms = {
            tuple(e[i] for i in surv): c
            for e, c in f.terms.items()
            if all(e[i] == 0 for i in tip.contained_vars)
        }
        return QTorusElement(lam_sub, terms)
    raise TypeError("expected LaurentPoly or QTorusElement")


@dataclass(frozen=True)
class CosChain:
    """A co-dimension-one stratification chain for a fixed cluster.

    `chain` lists tips by decreasing index k (smallest ideal first), i.e.
    I_r ⊂ I_{r-1} ⊂ …; `perm` is the explicit index permutation aligning
    the cluster with the x_k,…,x_n tail convention (perm[pos] = variable).
    """

    n: int
    perm: tuple[int, ...]
    chain: tuple[TipDescriptor, ...]
    depth: int = field(default=0)

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the variables")
        if self.chain and self.depth == 0:
            object.__setattr__(
                self, "depth", self.n - len(self.chain[0].contained_vars) + 1
            )


def validate_cos_chain(c: CosChain) -> bool:
    """Strictly increasing tips, each a tail {x_k..x_n} under the permutation.

    The index k of each tip is read off its size (|tip| = n − k + 1); the
    paper's chains on group coordinate rings need not reach k = 1, so only
    the tips present are required to be tails.
    """
    position = {v: i for i, v in enumerate(c.perm)}
    prev: TipDescriptor | None = None
    prev_k = None
    for tip in c.chain:
        if tip.n != c.n or not tip.contained_vars:
            return False
        k = c.n - len(tip.contained_vars) + 1
        tail = frozenset(c.perm[k - 1 :])
        if tip.contained_vars != tail:
            return False
        if prev is not None:
            if not (prev.contained_vars < tip.contained_vars):
                return False
            if k >= prev_k:
                return False
        prev, prev_k = tip, k
    if c.chain and c.depth != c.n - len(c.chain[0].contained_vars) + 1:
        return False
    return True


def dixmier_map(
    s: StratumDescriptor,
    direction: Literal["classical_to_quantum", "quantum_to_classical"],
) -> StratumDescriptor:
    """The stratum-level Dixmier map: identity on all descriptor data.

    Both φ_q and φ_cl factor through (tip, surviving, center, rank), so the
    homeomorphism acts as the identity on descriptors; it is bijective and
    preserves inclusion of tips in both directions.
    """
    if direction not in ("classical_to_quantum", "quantum_to_classical"):
        raise ValueError("unknown direction")
    return StratumDescriptor(s.tip, s.surviving, s.center_lattice, s.rank)


def symplectic_core_rank(lam: IntMatrix, k: int) -> int:
    """Rank of the principal (k−1)×(k−1) submatrix of Λ (1 ≤ k ≤ n+1)."""
    if not 1 <= k <= lam.rows + 1:
        raise IndexError("k out of range")
    sub = lam.submatrix(range(k - 1), range(k - 1))
    return sub.rank()
