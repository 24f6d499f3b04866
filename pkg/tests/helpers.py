"""Shared fixtures: standard seeds, random compatible pairs, field oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from clusterlab.cluster import ExchangeMatrix, Seed
from clusterlab.laurent import LaurentPoly
from clusterlab.linalg import IntMatrix
from clusterlab.poisson import CompatiblePair, mutate_pair


def a2_matrix() -> ExchangeMatrix:
    return ExchangeMatrix.from_rows([[0, 1], [-1, 0]])


def a2_seed() -> Seed:
    return Seed.initial(a2_matrix())


def a2_lambda() -> IntMatrix:
    return IntMatrix.from_rows([[0, -1], [1, 0]])


def a2_pair() -> CompatiblePair:
    return CompatiblePair.build(a2_matrix(), a2_lambda())


def a3_matrix() -> ExchangeMatrix:
    return ExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])


def a3_principal_pair() -> CompatiblePair:
    """A_3 with principal coefficients: B̃ = (B | I), Λ = [[0,-I],[I,B]]."""
    b0 = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    b = ExchangeMatrix.from_rows([row + ident[i] for i, row in enumerate(b0)])
    lam_rows = []
    for i in range(3):
        lam_rows.append([0] * 3 + [-ident[i][j] for j in range(3)])
    for i in range(3):
        lam_rows.append(ident[i][:] + b0[i][:])
    return CompatiblePair.build(b, IntMatrix.from_rows(lam_rows))


def one_frozen_pair() -> CompatiblePair:
    """m=2, n=3 pair with one frozen column."""
    b = ExchangeMatrix.from_rows([[0, 1, 1], [-1, 0, 0]])
    lam = IntMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    return CompatiblePair.build(b, lam)


def random_compatible_pair(rng: random.Random, max_n: int = 5) -> CompatiblePair:
    """A random compatible pair built from 2x2 symplectic blocks plus frozen
    columns, scrambled by pair mutations (which preserve compatibility)."""
    blocks = rng.randint(1, max_n // 2)
    m = 2 * blocks
    extra = rng.randint(0, max_n - m)
    n = m + extra
    b_rows = [[0] * n for _ in range(m)]
    lam = [[0] * n for _ in range(n)]
    for t in range(blocks):
        i, j = 2 * t, 2 * t + 1
        bb = rng.choice([1, 2, 3])
        cc = rng.choice([1, 2])
        b_rows[i][j] = bb
        b_rows[j][i] = -bb
        lam[i][j] = -cc
        lam[j][i] = cc
    # frozen-frozen lambda entries are unconstrained
    for a in range(m, n):
        for c in range(a + 1, n):
            v = rng.randint(-2, 2)
            lam[a][c] = v
            lam[c][a] = -v
    pair = CompatiblePair.build(ExchangeMatrix.from_rows(b_rows), IntMatrix.from_rows(lam))
    for _ in range(rng.randint(0, 6)):
        pair = mutate_pair(pair, rng.randrange(m), rng.choice([1, -1]))
    return pair


def random_laurent(
    rng: random.Random,
    variables: tuple[str, ...],
    terms: int = 3,
    span: int = 3,
) -> LaurentPoly:
    out: dict[tuple[int, ...], Fraction] = {}
    for _ in range(terms):
        exp = tuple(rng.randint(-span, span) for _ in variables)
        out[exp] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return LaurentPoly(variables, out)


def brute_force_bruhat(rank):
    """Bruhat order oracle: covering relations (length +1 transpositions)
    plus transitive closure; independent of the subword criterion."""
    from clusterlab.weyl import WeylElement, all_elements

    elems = all_elements(rank)
    idx = {w: i for i, w in enumerate(elems)}
    n = len(elems)
    size = rank + 1
    transpositions = []
    for a in range(1, size + 1):
        for b in range(a + 1, size + 1):
            p = list(range(1, size + 1))
            p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
            transpositions.append(WeylElement(tuple(p)))
    covers = {i: set() for i in range(n)}
    for w in elems:
        for t in transpositions:
            wt = w * t
            if wt.length() == w.length() + 1:
                covers[idx[w]].add(idx[wt])
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        stack = list(covers[i])
        while stack:
            j = stack.pop()
            if not leq[i][j]:
                leq[i][j] = True
                stack.extend(covers[j])
    return elems, leq


def mutation_value_oracle(
    b_rows: list[list[int]], point: list[Fraction], word: list[int]
) -> list[Fraction]:
    """Field oracle: run the exchange recurrence on values, no polynomials.

    Starts from variable values `point`, applies x_k <- P_k(values)/x_k and
    the matrix mutation, step by step.  Independent of the Laurent pipeline.
    """
    values = list(point)
    b = [row[:] for row in b_rows]
    m, n = len(b), len(b[0])
    for k in word:
        pos = Fraction(1)
        neg = Fraction(1)
        for ell in range(n):
            if b[k][ell] > 0:
                pos *= values[ell] ** b[k][ell]
            elif b[k][ell] < 0:
                neg *= values[ell] ** (-b[k][ell])
        values[k] = (pos + neg) / values[k]
        new_b = [
            [
                -b[i][j]
                if i == k or j == k
                else b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
                for j in range(n)
            ]
            for i in range(m)
        ]
        b = new_b
    return values
