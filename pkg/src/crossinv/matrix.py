"""Matrices over any ring exposing add/mul/neg/zero/one.

Used both over the base ring R (integer indices) and over a crossed product
(CrossedElement entries).  Shapes are explicit so 0 x n and n x 0 matrices
compose correctly.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], nrows: int | None = None, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        self.nrows = len(rows) if nrows is None else nrows
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        self.ncols = ncols
        if len(rows) != self.nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"ragged or mis-shaped matrix for {self.nrows}x{ncols}")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]}, {self.nrows}x{self.ncols})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]


def zeros(ring, m: int, n: int) -> Matrix:
    return Matrix([[ring.zero] * n for _ in range(m)], m, n)


def identity(ring, m: int) -> Matrix:
    return Matrix([[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)], m, m)


def diag(ring, entries: Sequence) -> Matrix:
    m = len(entries)
    return Matrix([[entries[i] if i == j else ring.zero for j in range(m)] for i in range(m)], m, m)


def entrywise(f: Callable, A: Matrix) -> Matrix:
    return Matrix([[f(x) for x in r] for r in A.rows], A.nrows, A.ncols)


def transpose(A: Matrix) -> Matrix:
    return Matrix([[A.rows[i][j] for i in range(A.nrows)] for j in range(A.ncols)], A.ncols, A.nrows)


def add(ring, A: Matrix, B: Matrix) -> Matrix:
    if A.shape != B.shape:
        raise ValueError(f"cannot add {A.shape} and {B.shape}")
    return Matrix([[ring.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)], A.nrows, A.ncols)


def neg(ring, A: Matrix) -> Matrix:
    return entrywise(ring.neg, A)


def mul(ring, A: Matrix, B: Matrix) -> Matrix:
    if A.ncols != B.nrows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    out = []
    for ra in A.rows:
        row = []
        for j in range(B.ncols):
            acc = ring.zero
            for k, a in enumerate(ra):
                acc = ring.add(acc, ring.mul(a, B.rows[k][j]))
            row.append(acc)
        out.append(row)
    return Matrix(out, A.nrows, B.ncols)


def is_zero(ring, A: Matrix) -> bool:
    return all(x == ring.zero for r in A.rows for x in r)


def inverse(ring, A: Matrix) -> Matrix:
    """Gauss-Jordan elimination; pivots must be units of the ring."""
    m = A.nrows
    if A.ncols != m:
        raise ValueError("only square matrices are invertible")
    M = [list(r) + [ring.one if i == j else ring.zero for j in range(m)] for i, r in enumerate(A.rows)]
    for col in range(m):
        piv = next((i for i in range(col, m) if ring.is_unit(M[i][col])), None)
        if piv is None:
            raise ZeroDivisionError(f"no unit pivot in column {col}")
        M[col], M[piv] = M[piv], M[col]
        s = ring.inv(M[col][col])
        # left-multiply the pivot row so the pivot becomes 1
        M[col] = [ring.mul(s, x) for x in M[col]]
        for i in range(m):
            if i != col and M[i][col] != ring.zero:
                f = M[i][col]
                M[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(M[i], M[col])]
    inv = Matrix([r[m:] for r in M], m, m)
    if mul(ring, A, inv) != identity(ring, m) or mul(ring, inv, A) != identity(ring, m):
        raise ZeroDivisionError("matrix is not invertible")
    return inv


def block_diag(ring, blocks: Sequence[Matrix]) -> Matrix:
    m = sum(b.nrows for b in blocks)
    n = sum(b.ncols for b in blocks)
    out = [[ring.zero] * n for _ in range(m)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                out[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(out, m, n)
