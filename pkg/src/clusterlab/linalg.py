"""Exact integer matrices and lattices.

Everything here is immutable and exact: matrices hold arbitrary-precision
python ints, lattices store a canonical Hermite-normal-form basis so that
equality is structural and membership is a triangular solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


@dataclass(frozen=True)
class IntMatrix:
    """An immutable matrix of exact integers, row-major.

    `width` only matters for matrices with no rows, where the column count
    cannot be inferred.
    """

    entries: tuple[tuple[int, ...], ...]
    width: int = 0

    def __post_init__(self) -> None:
        if self.entries:
            w = len(self.entries[0])
            if any(len(row) != w for row in self.entries):
                raise ValueError("ragged rows")
            object.__setattr__(self, "width", w)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def empty(cls, cols: int) -> IntMatrix:
        """A matrix with zero rows and `cols` columns."""
        return cls((), cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else self.width

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> IntMatrix:
        if not self.entries:
            return IntMatrix(tuple(() for _ in range(self.width))) if self.width else IntMatrix(())
        if not self.entries[0]:
            return IntMatrix.empty(self.rows)
        return IntMatrix(tuple(zip(*self.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __mul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        if not self.entries:
            return IntMatrix.empty(other.cols)
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def is_skew_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        n = self.rows
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(n)
            for j in range(i, n)
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> IntMatrix:
        return IntMatrix(
            tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx)
        )

    def rank(self) -> int:
        return len(row_hnf(self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def row_hnf(vectors: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical row Hermite normal form of the lattice spanned by `vectors`.

    Zero rows are dropped; pivots are positive and entries above each pivot
    are reduced into [0, pivot).  Two generating sets span the same lattice
    iff they produce identical output.

    >>> row_hnf([(2, 4), (1, 3)])
    ((1, 1), (0, 2))
    >>> row_hnf([(0, 0), (-1, 1)])
    ((1, -1),)
    """
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return ()
    n = len(vecs[0])
    pivot_row: dict[int, list[int]] = {}  # pivot column -> basis row
    for vec in vecs:
        v = list(vec)
        for j in range(n):
            if v[j] == 0:
                continue
            row = pivot_row.get(j)
            if row is None:
                pivot_row[j] = v
                break
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                for t in range(j, n):
                    v[t] -= q * row[t]
            else:
                # replace the pivot row by the gcd combination, v by the
                # eliminated complement; both keep zeros left of j
                g, x, y = _xgcd(a, b)
                pa, qb = a // g, b // g
                new_row = [x * s + y * t for s, t in zip(row, v)]
                new_v = [-qb * s + pa * t for s, t in zip(row, v)]
                row[:] = new_row
                v = new_v
    basis = [pivot_row[j] for j in sorted(pivot_row)]
    for b in basis:
        j = next(i for i, x in enumerate(b) if x)
        if b[j] < 0:
            for t in range(n):
                b[t] = -b[t]
    # reduce entries above each pivot into [0, pivot); lower rows must be
    # applied in increasing order so earlier reductions stay intact
    for up in range(len(basis)):
        for k in range(up + 1, len(basis)):
            j = next(i for i, x in enumerate(basis[k]) if x)
            q = basis[up][j] // basis[k][j]
            if q:
                for t in range(n):
                    basis[up][t] -= q * basis[k][t]
    return tuple(tuple(r) for r in basis)


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^ambient_dim with a canonical HNF basis."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> Lattice:
        vecs = [tuple(int(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length mismatch")
        return cls(ambient_dim, row_hnf(vecs))

    @classmethod
    def zero(cls, ambient_dim: int) -> Lattice:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Lattice:
        return cls.from_vectors(
            ambient_dim, IntMatrix.identity(ambient_dim).entries
        )

    @property
    def rank(self) -> int:
        return len(self.basis)

    def member(self, vec: Sequence[int]) -> bool:
        """Exact membership via reduction against the triangular basis."""
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        v = [int(x) for x in vec]
        for b in self.basis:
            j = next(i for i, x in enumerate(b) if x)
            if v[j] % b[j] != 0:
                return False
            q = v[j] // b[j]
            for t in range(self.ambient_dim):
                v[t] -= q * b[t]
        return not any(v)

    def contains(self, other: Lattice) -> bool:
        return all(self.member(b) for b in other.basis)

    def project(self, keep: Sequence[int]) -> Lattice:
        """Image under the coordinate projection onto the kept coordinates."""
        keep = list(keep)
        return Lattice.from_vectors(
            len(keep), [tuple(b[i] for i in keep) for b in self.basis]
        )


def hermite_with_transform(
    m: IntMatrix,
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Row echelon form H of m with unimodular U such that U*m = H."""
    rows = [list(r) for r in m.entries]
    nrows = len(rows)
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    pivot_row = 0
    for col in range(m.cols):
        # find a row at/below pivot_row with a nonzero entry in this column
        nz = [r for r in range(pivot_row, nrows) if rows[r][col]]
        if not nz:
            continue
        r0 = nz[0]
        rows[pivot_row], rows[r0] = rows[r0], rows[pivot_row]
        u[pivot_row], u[r0] = u[r0], u[pivot_row]
        for r in range(pivot_row + 1, nrows):
            while rows[r][col]:
                a, b = rows[pivot_row][col], rows[r][col]
                g, x, y = _xgcd(a, b)
                pa, qb = a // g, b // g
                new_p = [x * s + y * t for s, t in zip(rows[pivot_row], rows[r])]
                new_r = [-qb * s + pa * t for s, t in zip(rows[pivot_row], rows[r])]
                rows[pivot_row], rows[r] = new_p, new_r
                new_pu = [x * s + y * t for s, t in zip(u[pivot_row], u[r])]
                new_ru = [-qb * s + pa * t for s, t in zip(u[pivot_row], u[r])]
                u[pivot_row], u[r] = new_pu, new_ru
        pivot_row += 1
        if pivot_row == nrows:
            break
    return tuple(tuple(r) for r in rows), tuple(tuple(r) for r in u)


def integer_kernel(m: IntMatrix) -> Lattice:
    """The lattice {w in Z^cols : m*w = 0} with a saturated (primitive) basis.

    The kernel of an integer matrix is automatically saturated, so every
    integer solution is an integer combination of the returned basis.
    """
    if m.rows == 0 or m.cols == 0:
        return Lattice.full(m.cols) if m.cols else Lattice.zero(0)
    h, u = hermite_with_transform(m.transpose())
    kernel_rows = [u[i] for i in range(len(h)) if not any(h[i])]
    return Lattice.from_vectors(m.cols, kernel_rows)


def lattice_span_rank(a: Lattice, b: Lattice) -> int:
    """Rational rank of the lattice generated by both bases."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return len(row_hnf(list(a.basis) + list(b.basis)))
