"""Dense linear algebra over GF(2), bit-packed into machine words.

A row is a Python int whose bit ``j`` holds the entry in column ``j``
(column 0 is the leftmost coordinate).  Lengths are capped at 64 so every
row fits in one machine word.  All values are immutable and every
operation is a pure function, so they are safe to share between
concurrently running tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_LEN = 64


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class BitVector:
    """A vector over GF(2) with ``1 <= n <= 64`` coordinates."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_LEN:
            raise ValueError(f"vector length must be in 1..{MAX_LEN}, got {self.n}")
        if self.bits & ~_mask(self.n):
            raise ValueError("bits set beyond the vector length")

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> BitVector:
        coords = list(coords)
        bits = 0
        for j, x in enumerate(coords):
            if x not in (0, 1):
                raise ValueError(f"coordinate {j} is not a bit: {x!r}")
            bits |= x << j
        return cls(len(coords), bits)

    @classmethod
    def from_string(cls, s: str) -> BitVector:
        return cls.from_coords(int(ch) for ch in s)

    def weight(self) -> int:
        return self.bits.bit_count()

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __iter__(self):
        return ((self.bits >> j) & 1 for j in range(self.n))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.n))


@dataclass(frozen=True)
class BinaryMatrix:
    """A matrix over GF(2); rows are bit-packed ints of width ``ncols``.

    ``nrows`` may be zero (the empty matrix over a given column count),
    which shows up naturally as the generator of a zero code.
    """

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.ncols <= MAX_LEN:
            raise ValueError(f"column count must be in 1..{MAX_LEN}, got {self.ncols}")
        if self.nrows != len(self.rows):
            raise ValueError("nrows does not match the number of rows")
        m = _mask(self.ncols)
        for i, r in enumerate(self.rows):
            if r & ~m:
                raise ValueError(f"row {i} has bits beyond ncols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str | BitVector], ncols: int | None = None) -> BinaryMatrix:
        packed = []
        width = ncols
        for row in rows:
            if isinstance(row, BitVector):
                vec = row
            elif isinstance(row, str):
                vec = BitVector.from_string(row)
            else:
                vec = BitVector.from_coords(row)
            if width is None:
                width = vec.n
            elif vec.n != width:
                raise ValueError("rows have differing lengths")
            packed.append(vec.bits)
        if width is None:
            raise ValueError("cannot infer ncols from an empty matrix")
        return cls(len(packed), width, tuple(packed))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> BinaryMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column_bits(self, j: int) -> int:
        """Column ``j`` packed into an int; bit ``i`` is the entry in row ``i``."""
        c = 0
        for i, r in enumerate(self.rows):
            c |= ((r >> j) & 1) << i
        return c

    def transpose(self) -> BinaryMatrix:
        if self.nrows == 0:
            raise ValueError("cannot transpose a matrix with zero rows into zero columns")
        cols = tuple(self.column_bits(j) for j in range(self.ncols))
        return BinaryMatrix(self.ncols, self.nrows, cols)

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.nrows))


# ---------------------------------------------------------------------------
# Row-level kernels.  These work on plain int rows so the search-heavy
# modules can avoid wrapper overhead; the public matrix operations below
# are thin adapters over them.

def rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bit-packed rows.

    Pivots are chosen left to right with row swaps only, so the result is
    reproducible.  Returns the nonzero reduced rows and their pivot
    columns.
    """
    work = [r for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(work)):
            if (work[i] >> col) & 1:
                sel = i
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        for i in range(len(work)):
            if i != rank and ((work[i] >> col) & 1):
                work[i] ^= work[rank]
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def rank_rows(rows: Sequence[int], ncols: int) -> int:
    return len(rref_rows(rows, ncols)[0])


def nullspace_rows(rows: Sequence[int], ncols: int) -> list[int]:
    """A full-rank basis of ``{x : rows @ x^T = 0}`` as bit-packed rows.

    One basis vector per non-pivot column, in ascending column order.
    """
    reduced, pivots = rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            if (reduced[i] >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def mat_mul_rows(a_rows: Sequence[int], b_cols: Sequence[int]) -> list[int]:
    """Product rows given the rows of ``a`` and the columns of ``b``."""
    out = []
    for r in a_rows:
        acc = 0
        for j, c in enumerate(b_cols):
            acc |= ((r & c).bit_count() & 1) << j
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Public matrix operations.

def mat_mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Matrix product over GF(2); entry (i,j) is the parity of row_i(a) AND col_j(b)."""
    if a.ncols != b.nrows:
        raise ValueError(f"dimension mismatch: {a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    b_cols = [b.column_bits(j) for j in range(b.ncols)]
    return BinaryMatrix(a.nrows, b.ncols, tuple(mat_mul_rows(a.rows, b_cols)))


def rank(m: BinaryMatrix) -> int:
    """GF(2) row rank by Gaussian elimination."""
    return rank_rows(m.rows, m.ncols)


def is_nonsingular(m: BinaryMatrix) -> bool:
    """Whether a square matrix has full rank over GF(2)."""
    if m.nrows != m.ncols:
        raise ValueError(f"nonsingularity needs a square matrix, got {m.nrows}x{m.ncols}")
    return rank(m) == m.nrows


def null_space_basis(m: BinaryMatrix) -> BinaryMatrix:
    """A ``(ncols - rank) x ncols`` full-row-rank matrix B with ``m @ B^T = 0``."""
    basis = nullspace_rows(m.rows, m.ncols)
    return BinaryMatrix(len(basis), m.ncols, tuple(basis))
