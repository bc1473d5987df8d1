"""Dense GF(2) linear algebra on bit-packed rows.

Rows are Python ints used as bit vectors (bit j = column j), which keeps
elimination loops to a handful of integer ops per row.  Matrices here stay
small: relation matrices of the cohomology engine have at most a few hundred
columns.
"""

from __future__ import annotations

from dataclasses import dataclass


class _Inconsistent:
    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "INCONSISTENT"

    def __bool__(self) -> bool:
        return False


INCONSISTENT = _Inconsistent()


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise ValueError("ncols must be nonnegative")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits beyond ncols")

    @classmethod
    def from_bits(cls, bit_rows: list[list[int]]) -> "BitMatrix":
        ncols = len(bit_rows[0]) if bit_rows else 0
        rows = []
        for br in bit_rows:
            if len(br) != ncols:
                raise ValueError("ragged rows")
            rows.append(sum(1 << j for j, b in enumerate(br) if b & 1))
        return cls(tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_bits(self, i: int) -> list[int]:
        return [(self.rows[i] >> j) & 1 for j in range(self.ncols)]


def rref(matrix: BitMatrix) -> tuple[BitMatrix, tuple[int, ...], int]:
    """Reduced row echelon form; returns (R, pivot columns, rank).

    R keeps only the nonzero rows, sorted by pivot column.
    """
    rows: list[int] = []
    pivots: list[int] = []
    for r in matrix.rows:
        for row, p in zip(rows, pivots):
            if (r >> p) & 1:
                r ^= row
        if r:
            p = (r & -r).bit_length() - 1
            for i in range(len(rows)):
                if (rows[i] >> p) & 1:
                    rows[i] ^= r
            rows.append(r)
            pivots.append(p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    red = BitMatrix(tuple(rows[i] for i in order), matrix.ncols)
    piv = tuple(pivots[i] for i in order)
    return red, piv, len(piv)


def reduce_vector(vec: int, reduced: BitMatrix, pivots: tuple[int, ...]) -> int:
    """Reduce vec modulo the row space of an already-echelonized matrix."""
    for row, p in zip(reduced.rows, pivots):
        if (vec >> p) & 1:
            vec ^= row
    return vec


def solve(matrix: BitMatrix, b) -> int | _Inconsistent:
    """One solution of M x = b over GF(2), free variables set to 0.

    b may be an int bit vector (bit i = row i) or an iterable of 0/1.
    Returns INCONSISTENT when no solution exists.
    """
    if not isinstance(b, int):
        b = sum(1 << i for i, bit in enumerate(b) if bit & 1)
    rows: list[int] = []
    rhs: list[int] = []
    pivots: list[int] = []
    for i, r in enumerate(matrix.rows):
        v = (b >> i) & 1
        for row, bb, p in zip(rows, rhs, pivots):
            if (r >> p) & 1:
                r ^= row
                v ^= bb
        if r:
            p = (r & -r).bit_length() - 1
            rows.append(r)
            rhs.append(v)
            pivots.append(p)
        elif v:
            return INCONSISTENT
    x = 0
    for idx in sorted(range(len(rows)), key=lambda i: -pivots[i]):
        row, p = rows[idx], pivots[idx]
        v = rhs[idx]
        rest = row & ~(1 << p)
        while rest:
            c = (rest & -rest).bit_length() - 1
            v ^= (x >> c) & 1
            rest &= rest - 1
        if v:
            x |= 1 << p
    if __debug__:
        for i, r in enumerate(matrix.rows):
            assert _dot(r, x) == (b >> i) & 1
    return x


def nullspace(matrix: BitMatrix) -> list[int]:
    """Basis of the kernel of M, one vector per free column."""
    red, pivots, _ = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(red.rows, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    if __debug__:
        for v in basis:
            for r in matrix.rows:
                assert _dot(r, v) == 0
    return basis


def _dot(a: int, b: int) -> int:
    return bin(a & b).count("1") & 1
