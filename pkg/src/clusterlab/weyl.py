"""Type-A Weyl combinatorics: words, Bruhat order, weight pairings.

W = S_{r+1} realized on one-line permutations of [1, r+1]; permutations act
on the left, so a word s_{i_1}…s_{i_ℓ} sends x to s_{i_1}(s_{i_2}(…(x))).
Fundamental-weight pairings are exact rationals with denominator r+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as iter_permutations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix and fundamental-weight pairing for a simple type."""

    type: str
    rank: int

    def __post_init__(self) -> None:
        if self.type != "A":
            raise ValueError("only type A is supported")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def cartan(self, i: int, j: int) -> int:
        """a_ij for 1-based simple-root indices."""
        if i == j:
            return 2
        if abs(i - j) == 1:
            return -1
        return 0

    def weight_pairing(self, i: int, j: int) -> Fraction:
        """(ω_i, ω_j) = min(i,j)(r+1−max(i,j))/(r+1), 1-based."""
        lo, hi = min(i, j), max(i, j)
        return Fraction(lo * (self.rank + 1 - hi), self.rank + 1)

    def orbit_pairing(self, u_set: frozenset[int], i: int, v_set: frozenset[int], j: int) -> Fraction:
        """(uω_i, vω_j) where u_set = u([1,i]), v_set = v([1,j]).

        In the epsilon-coordinate model uω_i = Σ_{a∈u([1,i])} e_a − i/(r+1)·𝟙.
        """
        return Fraction(len(u_set & v_set)) - Fraction(i * j, self.rank + 1)


@dataclass(frozen=True)
class WeylElement:
    """A permutation of [1, r+1] in one-line notation (1-based images)."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError("not a permutation of [1, n]")

    @classmethod
    def identity(cls, rank: int) -> WeylElement:
        return cls(tuple(range(1, rank + 2)))

    @classmethod
    def simple(cls, rank: int, i: int) -> WeylElement:
        """s_i: transposition of i and i+1 (1-based, i ≤ rank)."""
        if not 1 <= i <= rank:
            raise IndexError("simple reflection index out of range")
        p = list(range(1, rank + 2))
        p[i - 1], p[i] = p[i], p[i - 1]
        return cls(tuple(p))

    @classmethod
    def longest(cls, rank: int) -> WeylElement:
        return cls(tuple(range(rank + 1, 0, -1)))

    @property
    def rank(self) -> int:
        return len(self.perm) - 1

    def __call__(self, x: int) -> int:
        return self.perm[x - 1]

    def apply_set(self, xs: Iterable[int]) -> frozenset[int]:
        return frozenset(self(x) for x in xs)

    def prefix_image(self, i: int) -> frozenset[int]:
        """w([1, i])."""
        return frozenset(self(x) for x in range(1, i + 1))

    def __mul__(self, other: WeylElement) -> WeylElement:
        """(self·other)(x) = self(other(x))."""
        if len(self.perm) != len(other.perm):
            raise ValueError("rank mismatch")
        return WeylElement(tuple(self(other(x)) for x in range(1, len(self.perm) + 1)))

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for x, y in enumerate(self.perm, start=1):
            inv[y - 1] = x
        return WeylElement(tuple(inv))

    def length(self) -> int:
        """Inversion count = Coxeter length."""
        p = self.perm
        return sum(
            1
            for a in range(len(p))
            for b in range(a + 1, len(p))
            if p[a] > p[b]
        )

    def is_identity(self) -> bool:
        return all(self(x) == x for x in range(1, len(self.perm) + 1))


def word_to_element(word: Sequence[int], cd: CartanData) -> tuple[WeylElement, bool]:
    """Product of simple reflections, plus whether the word is reduced."""
    w = WeylElement.identity(cd.rank)
    for i in word:
        if not 1 <= i <= cd.rank:
            raise IndexError("letter out of range")
        w = w * WeylElement.simple(cd.rank, i)
    return w, w.length() == len(word)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """One reduced word, by repeatedly removing descents from the left."""
    word = []
    cur = w
    while not cur.is_identity():
        # find i with cur = s_i * shorter
        for i in range(1, cur.rank + 1):
            cand = WeylElement.simple(cur.rank, i) * cur
            if cand.length() < cur.length():
                word.append(i)
                cur = cand
                break
    return tuple(word)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Strong Bruhat order via the subword criterion.

    Walks a fixed reduced word for w keeping the set of elements reachable
    as reduced subword products; u ≤ w iff u shows up.
    """
    if u.rank != w.rank:
        raise ValueError("rank mismatch")
    if u.length() > w.length():
        return False
    word = reduced_word(w)
    reachable = {WeylElement.identity(u.rank)}
    for i in word:
        s = WeylElement.simple(u.rank, i)
        extra = set()
        for z in reachable:
            zs = z * s
            if zs.length() > z.length():
                extra.add(zs)
        reachable |= extra
    return u in reachable


def all_elements(rank: int) -> list[WeylElement]:
    return [WeylElement(p) for p in iter_permutations(range(1, rank + 2))]


def gale_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise order on sorted subsets: the Bruhat order on minimal
    coset representatives mod the stabilizer of a fundamental weight."""
    sa, sb = sorted(a), sorted(b)
    if len(sa) != len(sb):
        raise ValueError("subsets must share cardinality")
    return all(x <= y for x, y in zip(sa, sb))
