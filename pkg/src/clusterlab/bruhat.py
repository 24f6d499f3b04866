"""Double reduced words, BFZ seeds on double Bruhat cells, and exact
verification on SL_n points.

Vertices of a double word for (u,v) are [-r,-1] ∪ [1, ℓ(u)+ℓ(v)]; negative
vertices carry letter |k| and sign -1.  Generalized minors are ordinary
submatrix determinants in type A: Δ(k) has rows u_{≤k}([1,i]) and columns
v_{>k}([1,i]).  The exchange matrix follows the Γ(i) edge rules with
b_{kℓ} > 0 iff the edge is directed k→ℓ (rows = exchangeable vertices);
the weight-pairing Λ is antisymmetrized taking the (γ,γ')−(δ,δ') value at
k > ℓ in vertex order, which is the half that makes (B,(r+1)Λ) compatible
with positive diagonal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cluster import ExchangeMatrix, Seed, mutate_seed
from .linalg import IntMatrix
from .poisson import BracketSpec
from .spectra import CosChain, TipDescriptor
from .weyl import CartanData, WeylElement, gale_leq, word_to_element


@dataclass(frozen=True)
class DoubleWord:
    """A shuffle of reduced words: negative letters for u, positive for v."""

    rank: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        cd = CartanData("A", self.rank)
        for e in self.entries:
            if e == 0 or abs(e) > self.rank:
                raise ValueError("letter out of range")
        u, u_red = word_to_element(self.negative_subword(), cd)
        v, v_red = word_to_element(self.positive_subword(), cd)
        if not (u_red and v_red):
            raise ValueError("subwords must be reduced")

    @classmethod
    def parse(cls, text: str, rank: int) -> DoubleWord:
        entries = tuple(int(t) for t in text.split(",") if t.strip())
        return cls(rank, entries)

    def negative_subword(self) -> tuple[int, ...]:
        return tuple(-e for e in self.entries if e < 0)

    def positive_subword(self) -> tuple[int, ...]:
        return tuple(e for e in self.entries if e > 0)

    @property
    def u(self) -> WeylElement:
        return word_to_element(self.negative_subword(), CartanData("A", self.rank))[0]

    @property
    def v(self) -> WeylElement:
        return word_to_element(self.positive_subword(), CartanData("A", self.rank))[0]

    @property
    def length(self) -> int:
        return len(self.entries)

    def vertices(self) -> tuple[int, ...]:
        """[-r..-1] then [1..ℓ(u)+ℓ(v)]."""
        return tuple(range(-self.rank, 0)) + tuple(range(1, self.length + 1))

    def letter(self, k: int) -> int:
        """|i_k|, with |i_k| = |k| for the negative vertices."""
        return -k if k < 0 else abs(self.entries[k - 1])

    def sign(self, k: int) -> int:
        """ε(i_k); negative vertices sit on the u side."""
        return -1 if k < 0 else (1 if self.entries[k - 1] > 0 else -1)

    def k_plus(self, k: int) -> int:
        """Minimal ℓ > k carrying the same letter, or ℓ(u)+ℓ(v)+1."""
        letter = self.letter(k)
        for ell in range(max(k + 1, 1), self.length + 1):
            if self.letter(ell) == letter:
                return ell
        return self.length + 1

    def exchangeable(self) -> tuple[int, ...]:
        return tuple(
            k
            for k in range(1, self.length + 1)
            if self.k_plus(k) <= self.length
        )


def prefix_pair(dw: DoubleWord, k: int) -> tuple[WeylElement, WeylElement]:
    """(u_{≤k}, v_{>k}); convention u_{≤k}=e, v_{>k}=v^{-1} for k ≤ 0."""
    if k not in dw.vertices() and k != 0:
        raise IndexError("vertex out of range")
    cd = CartanData("A", dw.rank)
    if k <= 0:
        return WeylElement.identity(dw.rank), dw.v.inverse()
    u_word = [
        -dw.entries[ell - 1]
        for ell in range(1, k + 1)
        if dw.entries[ell - 1] < 0
    ]
    v_word = [
        dw.entries[ell - 1]
        for ell in range(dw.length, k, -1)
        if dw.entries[ell - 1] > 0
    ]
    u = word_to_element(u_word, cd)[0]
    v = word_to_element(v_word, cd)[0]
    return u, v


@dataclass(frozen=True)
class MinorSpec:
    """Δ_{uω_i, vω_i} in type A: rows u([1,i]), columns v([1,i])."""

    rowset: tuple[int, ...]
    colset: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rowset) != len(self.colset):
            raise ValueError("row and column sets must have equal size")
        if tuple(sorted(self.rowset)) != self.rowset or tuple(sorted(self.colset)) != self.colset:
            raise ValueError("index sets must be sorted")

    def label(self) -> str:
        rows = "".join(str(i) for i in self.rowset)
        cols = "".join(str(j) for j in self.colset)
        return f"D[{rows}|{cols}]"


def minor_spec_at(dw: DoubleWord, k: int, cd: CartanData) -> MinorSpec:
    """Δ(k, i) = Δ_{u_{≤k}ω_i, v_{>k}ω_i} with i = |i_k| (i = |k| for k < 0)."""
    if k not in dw.vertices():
        raise IndexError("vertex out of range")
    i = dw.letter(k)
    u, v = prefix_pair(dw, k)
    return MinorSpec(
        tuple(sorted(u.prefix_image(i))), tuple(sorted(v.prefix_image(i)))
    )


@dataclass(frozen=True)
class BfzSeedData:
    """BFZ seed of a double word, in both vertex order and m×n arrangement.

    `vertex_order` lists vertices as displayed ([-r..-1,1..]); `perm` maps
    matrix position -> vertex (exchangeable vertices first).
    """

    dw: DoubleWord
    labels: tuple[MinorSpec, ...]  # vertex order
    exchangeable: tuple[int, ...]  # vertex ids, k > 0 with k^+ ≤ length
    matrix: ExchangeMatrix  # m×n over the permuted order
    perm: tuple[int, ...]  # matrix position -> vertex id

    def label_strings(self) -> tuple[str, ...]:
        return tuple(spec.label() for spec in self.labels)

    def permuted_labels(self) -> tuple[MinorSpec, ...]:
        order = {v: i for i, v in enumerate(self.dw.vertices())}
        return tuple(self.labels[order[v]] for v in self.perm)

    def frozen_labels(self) -> tuple[MinorSpec, ...]:
        exch = set(self.exchangeable)
        return tuple(
            spec
            for v, spec in zip(self.dw.vertices(), self.labels)
            if v not in exch
        )


def _edges(dw: DoubleWord, cd: CartanData) -> dict[tuple[int, int], int]:
    """Directed edges of Γ(i): (k,ℓ) -> +1 means k→ℓ (stored with k < ℓ)."""
    verts = dw.vertices()
    exch = set(dw.exchangeable())
    length = dw.length
    edges: dict[tuple[int, int], int] = {}
    for a, k in enumerate(verts):
        for ell in verts[a + 1 :]:
            if k not in exch and ell not in exch:
                continue
            kp, lp = dw.k_plus(k), dw.k_plus(ell)
            se = dw.sign(ell)
            direction = 0
            if ell == kp:
                direction = 1 if se == 1 else -1
            elif cd.cartan(dw.letter(k), dw.letter(ell)) != 0:
                # same-letter pairs can never satisfy these orderings, so the
                # inclined rules only fire across adjacent letters
                if ell < kp < lp and kp <= length and se == dw.sign(kp):
                    direction = 1 if se == -1 else -1
                elif ell < lp < kp and lp <= length and se == -dw.sign(lp):
                    direction = 1 if se == -1 else -1
            if direction:
                edges[(k, ell)] = direction
    return edges


def build_bfz_seed(dw: DoubleWord, cd: CartanData) -> BfzSeedData:
    """Labels, exchange matrix and exchangeable set for a double word.

    Edge magnitudes are 1 for equal letters and −a_{|i_k||i_ℓ|} otherwise;
    the m×n matrix rows are the exchangeable vertices in vertex order,
    columns all vertices with the exchangeable ones first.
    """
    if cd.rank != dw.rank:
        raise ValueError("rank mismatch")
    verts = dw.vertices()
    labels = tuple(minor_spec_at(dw, k, cd) for k in verts)
    exch = dw.exchangeable()
    frozen = tuple(v for v in verts if v not in set(exch))
    perm = exch + frozen
    edges = _edges(dw, cd)

    def b_entry(k: int, ell: int) -> int:
        if k == ell:
            return 0
        key, flip = ((k, ell), 1) if (k < ell) else ((ell, k), -1)
        direction = edges.get(key, 0)
        if not direction:
            return 0
        lk, ll = dw.letter(k), dw.letter(ell)
        magnitude = 1 if lk == ll else -cd.cartan(lk, ll)
        return flip * direction * magnitude

    if exch:
        matrix = ExchangeMatrix.from_rows([[b_entry(k, ell) for ell in perm] for k in exch])
    else:
        matrix = ExchangeMatrix(IntMatrix.empty(len(perm)))
    return BfzSeedData(dw, labels, exch, matrix, perm)


def bruhat_lambda(dw: DoubleWord, cd: CartanData) -> BracketSpec:
    """Weight-pairing bracket matrix over all vertices (in m×n order).

    λ_{kℓ} = (u_{≤k}ω_{i(k)}, u_{≤ℓ}ω_{i(ℓ)}) − (v_{>k}ω_{i(k)}, v_{>ℓ}ω_{i(ℓ)})
    evaluated at k > ℓ in vertex order and extended skew-symmetrically; the
    matrix is arranged along the same permutation as the exchange matrix.
    """
    seed = build_bfz_seed(dw, cd)
    verts = list(seed.perm)
    vertex_pos = {v: i for i, v in enumerate(dw.vertices())}

    data = {}
    for k in dw.vertices():
        i = dw.letter(k)
        u, v = prefix_pair(dw, k)
        data[k] = (u.prefix_image(i), i, v.prefix_image(i))

    def naive(k: int, ell: int) -> Fraction:
        gu, gi, gv = data[k]
        hu, hi, hv = data[ell]
        return cd.orbit_pairing(gu, gi, hu, hi) - cd.orbit_pairing(gv, gi, hv, hi)

    n = len(verts)
    lam = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            k, ell = verts[a], verts[b]
            ka, kb = vertex_pos[k], vertex_pos[ell]
            val = naive(k, ell)
            lam[a][b] = val if ka > kb else -val
    return BracketSpec.from_rows(lam)


def seed_from_bfz(data: BfzSeedData) -> Seed:
    """A classical Seed over the permuted vertex order with minor labels."""
    labels = tuple(spec.label() for spec in data.permuted_labels())
    return Seed.initial(data.matrix, labels)


# -- exact evaluation on the group ------------------------------------


@dataclass(frozen=True)
class GroupPoint:
    """A rational point of SL_{r+1}."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")
        if _det([list(r) for r in self.entries]) != 1:
            raise ValueError("determinant must be 1")

    @classmethod
    def identity(cls, size: int) -> GroupPoint:
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(size))
                for i in range(size)
            )
        )

    @property
    def size(self) -> int:
        return len(self.entries)


def _det(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    if n == 0:
        return Fraction(1)
    mat = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                f = mat[r][col] * inv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return det


def evaluate_minor(spec: MinorSpec, x: GroupPoint) -> Fraction:
    """Determinant of the submatrix with spec's rows and columns (1-based)."""
    if any(i < 1 or i > x.size for i in spec.rowset + spec.colset):
        raise IndexError("minor index out of range")
    sub = [
        [x.entries[i - 1][j - 1] for j in spec.colset] for i in spec.rowset
    ]
    return _det(sub)


def random_sl_point(size: int, rng: random.Random, factors: int = 2) -> GroupPoint:
    """A random rational SL point: `factors` rounds of elementary unipotent
    triangles around unit-determinant diagonals (L·D·U products), so the
    determinant is 1 exactly and generic points land in the big cell."""
    mat = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]

    def mul(right: list[list[Fraction]]) -> None:
        nonlocal mat
        mat = [
            [
                sum(mat[i][k] * right[k][j] for k in range(size))
                for j in range(size)
            ]
            for i in range(size)
        ]

    def nonzero() -> Fraction:
        return Fraction(
            rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]), rng.randint(1, 4)
        )

    def unipotent(lower: bool) -> list[list[Fraction]]:
        el = [
            [Fraction(1 if a == b else 0) for b in range(size)] for a in range(size)
        ]
        for a in range(size):
            for b in range(size):
                if (a > b) if lower else (a < b):
                    el[a][b] = nonzero()
        return el

    for _ in range(factors):
        mul(unipotent(lower=True))
        diag = [Fraction(rng.randint(1, 4), rng.randint(1, 4)) for _ in range(size - 1)]
        last = Fraction(1)
        for d in diag:
            last /= d
        dm = [[Fraction(0)] * size for _ in range(size)]
        for a, d in enumerate(diag + [last]):
            dm[a][a] = d
        mul(dm)
        mul(unipotent(lower=False))
    return GroupPoint(tuple(tuple(row) for row in mat))


def verify_exchange_identity(
    dw: DoubleWord,
    k: int,
    samples: int = 20,
    rng: random.Random | None = None,
    max_attempts: int = 400,
) -> bool:
    """Check x_k·x_k' = P_k exactly on random SL points.

    x_k' is the mutated variable as a Laurent polynomial in the initial
    minors; a sample where any cluster minor vanishes is skipped (the
    Laurent expression may hit a denominator there).
    """
    cd = CartanData("A", dw.rank)
    data = build_bfz_seed(dw, cd)
    if k not in data.exchangeable:
        raise IndexError("index is not exchangeable")
    seed = seed_from_bfz(data)
    pos = {v: i for i, v in enumerate(data.perm)}
    kpos = pos[k]
    specs = data.permuted_labels()
    mutated = mutate_seed(seed, kpos)
    x_new = mutated.variables[kpos]
    from .cluster import exchange_polynomial_symbolic

    p_k = exchange_polynomial_symbolic(seed, kpos)
    rng = rng or random.Random(0)
    size = dw.rank + 1
    good = 0
    attempts = 0
    while good < samples:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("all samples degenerate; resample with a new rng")
        point = random_sl_point(size, rng)
        values = [evaluate_minor(spec, point) for spec in specs]
        if any(v == 0 for v in values):
            continue
        lhs = values[kpos] * x_new.evaluate(values)
        rhs = p_k.evaluate(values)
        if lhs != rhs:
            return False
        good += 1
    return True


def dbc_membership(x: GroupPoint, u: WeylElement, v: WeylElement) -> bool:
    """The Prop. 2.8 test for x ∈ G^{u,v}.

    (a) Δ_{u'ω_i,ω_i}(x) = 0 whenever u'ω_i ≰ uω_i, (b) the transposed
    condition against v^{-1}, (c) the two distinguished minors are nonzero;
    the order on orbits is the Gale order on sorted i-subsets.
    """
    size = x.size
    rank = size - 1
    if u.rank != rank or v.rank != rank:
        raise ValueError("rank mismatch")
    from itertools import combinations

    v_inv = v.inverse()
    for i in range(1, rank + 1):
        top_u = sorted(u.prefix_image(i))
        top_v = sorted(v_inv.prefix_image(i))
        cols = tuple(range(1, i + 1))
        for subset in combinations(range(1, size + 1), i):
            if not gale_leq(subset, top_u):
                if evaluate_minor(MinorSpec(subset, cols), x) != 0:
                    return False
            if not gale_leq(subset, top_v):
                if evaluate_minor(MinorSpec(cols, subset), x) != 0:
                    return False
        if evaluate_minor(MinorSpec(tuple(top_u), cols), x) == 0:
            return False
        if evaluate_minor(MinorSpec(cols, tuple(top_v)), x) == 0:
            return False
    return True


# -- COS chains from Bruhat-increasing pair sequences ------------------


def minor_vanishes_on_cell(
    spec_pair: tuple[frozenset[int], int, frozenset[int]],
    u: WeylElement,
    v: WeylElement,
) -> bool:
    """Whether Δ_{γ,δ} vanishes on the closure of G^{u,v}.

    γ = u'ω_i ≤ uω_i and δ = v'ω_i ≤ v^{-1}ω_i (Gale order) is exactly
    survival; anything else vanishes.
    """
    gu, i, gv = spec_pair
    top_u = sorted(u.prefix_image(i))
    top_v = sorted(v.inverse().prefix_image(i))
    return not (gale_leq(sorted(gu), top_u) and gale_leq(sorted(gv), top_v))


def cos_chain_from_pairs(
    dw: DoubleWord, pairs: Sequence[tuple[WeylElement, WeylElement]]
) -> CosChain:
    """Build the COS chain of a Bruhat-increasing sequence of pairs.

    For each pair the tip is the set of cluster minors vanishing on the
    closed cell; empty tips are dropped, consecutive duplicates collapsed.
    The permutation orders variables by how long they survive.
    """
    cd = CartanData("A", dw.rank)
    data = build_bfz_seed(dw, cd)
    verts = data.perm
    weight_data = {}
    for k in dw.vertices():
        i = dw.letter(k)
        uu, vv = prefix_pair(dw, k)
        weight_data[k] = (uu.prefix_image(i), i, vv.prefix_image(i))
    n = len(verts)
    tips: list[frozenset[int]] = []
    for u, v in pairs:
        tip = frozenset(
            idx
            for idx, vert in enumerate(verts)
            if minor_vanishes_on_cell(weight_data[vert], u, v)
        )
        if tip and (not tips or tip != tips[-1]):
            tips.append(tip)
    # survivors of everything first; then by the step at which they enter
    vanish_count = [sum(1 for t in tips if idx in t) for idx in range(n)]
    perm = tuple(sorted(range(n), key=lambda idx: (vanish_count[idx], idx)))
    chain = tuple(
        TipDescriptor.of(n, sorted(t)) for t in sorted(tips, key=len)
    )
    return CosChain(n, perm, chain)
