"""Binary [n,k] linear codes: duality, the LCD test, weights, and column surgery.

A code is carried by a full-rank generator matrix.  The LCD ("linear
complementary dual") property, ``C ∩ C^⊥ = {0}``, is decided through the
nonsingularity of ``G G^T``; the two are equivalent and the equivalence is
exercised by the test suite rather than assumed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2core import (
    BinaryMatrix,
    is_nonsingular,
    mat_mul,
    nullspace_rows,
    rank_rows,
    rref_rows,
)

_SWEEP_LIMIT = 24  # full codeword sweeps are meant for paper-scale dimensions


@dataclass(frozen=True)
class LinearCode:
    """A binary [n,k] code given by a k x n generator matrix of rank k."""

    n: int
    k: int
    gen: BinaryMatrix

    def __post_init__(self) -> None:
        if self.gen.nrows != self.k or self.gen.ncols != self.n:
            raise ValueError("generator shape does not match (n, k)")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if rank_rows(self.gen.rows, self.n) != self.k:
            raise ValueError("generator rows are not linearly independent")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], n: int | None = None) -> LinearCode:
        gen = BinaryMatrix.from_rows(rows, ncols=n)
        return cls(gen.ncols, gen.nrows, gen)

    @classmethod
    def zero_code(cls, n: int) -> LinearCode:
        return cls(n, 0, BinaryMatrix(0, n, ()))

    @classmethod
    def full_space(cls, n: int) -> LinearCode:
        return cls(n, n, BinaryMatrix.identity(n))

    def codewords(self) -> list[int]:
        """All 2^k codewords as bit-packed ints, in basis-combination order."""
        if self.k > _SWEEP_LIMIT:
            raise ValueError(f"codeword sweep limited to dimension {_SWEEP_LIMIT}")
        return all_xor_combinations(self.gen.rows)

    def same_codeword_set(self, other: LinearCode) -> bool:
        """Row-space equality (the basis-independent notion of code equality)."""
        if (self.n, self.k) != (other.n, other.k):
            return False
        return rref_rows(self.gen.rows, self.n)[0] == rref_rows(other.gen.rows, self.n)[0]


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n; A_i counts the codewords of weight i."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("a weight enumerator starts with A_0 = 1")
        if any(a < 0 for a in self.coeffs):
            raise ValueError("negative coefficient")

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                y = "y" if i == 1 else f"y^{i}"
                terms.append(y if a == 1 else f"{a}{y}")
        return " + ".join(terms)


def all_xor_combinations(rows: Sequence[int]) -> list[int]:
    """All XOR combinations of ``rows``; index x combines the rows in bin(x)."""
    words = [0]
    for r in rows:
        words.extend([w ^ r for w in words])
    return words


def dual(c: LinearCode) -> LinearCode:
    """The [n, n-k] dual code, generated by a basis of the orthogonal complement."""
    basis = nullspace_rows(c.gen.rows, c.n)
    return LinearCode(c.n, c.n - c.k, BinaryMatrix(len(basis), c.n, tuple(basis)))


def gram_matrix(c: LinearCode) -> BinaryMatrix:
    """``G G^T`` for the code's generator matrix."""
    return mat_mul(c.gen, c.gen.transpose())


def is_lcd(c: LinearCode) -> bool:
    """Whether ``C ∩ C^⊥ = {0}``, decided via nonsingularity of ``G G^T``."""
    if c.k < 1:
        raise ValueError("the LCD test needs dimension >= 1")
    return is_nonsingular(gram_matrix(c))


def min_weight(c: LinearCode) -> int:
    """Minimum weight over all nonzero codewords, by full codeword sweep."""
    if c.k < 1:
        raise ValueError("the zero code has no nonzero codeword")
    return min(w.bit_count() for w in c.codewords()[1:])


def weight_enumerator(c: LinearCode) -> WeightEnumerator:
    """Exact weight distribution by full codeword sweep."""
    coeffs = [0] * (c.n + 1)
    for w in c.codewords():
        coeffs[w.bit_count()] += 1
    return WeightEnumerator(tuple(coeffs))


def dual_min_weight_at_least(c: LinearCode, t: int) -> bool:
    """Whether ``d(C^⊥) >= t`` for t in {2, 3}, read off the generator columns.

    A weight-1 word lies in the dual exactly when some generator column is
    zero, and a weight-2 word exactly when two columns coincide.
    """
    if t not in (2, 3):
        raise ValueError(f"t must be 2 or 3, got {t}")
    cols = [c.gen.column_bits(j) for j in range(c.n)]
    if any(col == 0 for col in cols):
        return False
    if t == 3 and len(set(cols)) < c.n:
        return False
    return True


def standard_form(c: LinearCode) -> tuple[LinearCode, tuple[int, ...]]:
    """An equivalent code with generator ``(I_k | M)`` plus the column map used.

    The returned permutation ``perm`` sends new position p to the original
    column ``perm[p]``: pivot columns move to the front in pivot order and
    the rest keep their relative order.  When the input's leading k x k
    block is already invertible the permutation is the identity.
    """
    reduced, pivots = rref_rows(c.gen.rows, c.n)
    perm = tuple(pivots) + tuple(j for j in range(c.n) if j not in set(pivots))
    new_rows = tuple(permute_columns(r, perm) for r in reduced)
    return LinearCode(c.n, c.k, BinaryMatrix(c.k, c.n, new_rows)), perm


def permute_columns(row_bits: int, perm: Sequence[int]) -> int:
    """Rearrange a bit-packed row so new column p holds old column perm[p]."""
    out = 0
    for p, j in enumerate(perm):
        out |= ((row_bits >> j) & 1) << p
    return out


def delete_identical_column_pair(c: LinearCode) -> LinearCode:
    """Drop the leftmost identical pair of non-identity columns of ``(I_k | M)``.

    The input must already be in standard form.  Removing two equal columns
    leaves ``G G^T`` unchanged over GF(2), so an LCD input yields an LCD
    [n-2, k] code.
    """
    if c.n < c.k + 2:
        raise ValueError("no room for an identical pair beyond the identity block")
    for i in range(c.k):
        expected = 1 << i
        if c.gen.column_bits(i) != expected:
            raise ValueError("generator is not in standard form (I_k | M)")
    cols = [c.gen.column_bits(j) for j in range(c.k, c.n)]
    pair = None
    for j1 in range(len(cols)):
        for j2 in range(j1 + 1, len(cols)):
            if cols[j1] == cols[j2]:
                pair = (c.k + j1, c.k + j2)
                break
        if pair:
            break
    if pair is None:
        raise ValueError("no identical column pair among the non-identity columns")
    keep = [j for j in range(c.n) if j not in pair]
    rows = tuple(permute_columns(r, keep) for r in c.gen.rows)
    return LinearCode(c.n - 2, c.k, BinaryMatrix(c.k, c.n - 2, rows))


def griesmer_max_d(n: int, k: int) -> int:
    """Largest d admitted by the Griesmer bound for a binary [n, k] code."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    d = 1
    while griesmer_length(d + 1, k) <= n:
        d += 1
    return d


def griesmer_length(d: int, k: int) -> int:
    """The Griesmer lower bound on the length of a binary [n, k, d] code."""
    return sum(math.ceil(d / (1 << i)) for i in range(k))


# ---------------------------------------------------------------------------
# Internal fast paths used by the search modules.  Results agree with the
# sweep-based public operations; the agreement is pinned by tests.

def krawtchouk(n: int, j: int, i: int) -> int:
    return sum((-1) ** l * math.comb(i, l) * math.comb(n - i, j - l) for l in range(0, j + 1))


def macwilliams_transform(dual_coeffs: Sequence[int], n: int, dual_dim: int) -> tuple[int, ...]:
    """Weight distribution of C from the distribution of C^⊥."""
    scale = 1 << dual_dim
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(n, j, i) for i, a in enumerate(dual_coeffs) if a)
        if s % scale:
            raise ArithmeticError("transform did not produce an integer distribution")
        out.append(s // scale)
    return tuple(out)


def weight_coeffs_fast(c: LinearCode) -> tuple[int, ...]:
    """Same integers as ``weight_enumerator(c).coeffs`` via the cheaper side."""
    if c.k <= c.n - c.k:
        coeffs = [0] * (c.n + 1)
        for w in all_xor_combinations(c.gen.rows):
            coeffs[w.bit_count()] += 1
        return tuple(coeffs)
    dual_rows = nullspace_rows(c.gen.rows, c.n)
    dcoeffs = [0] * (c.n + 1)
    for w in all_xor_combinations(dual_rows):
        dcoeffs[w.bit_count()] += 1
    return macwilliams_transform(dcoeffs, c.n, c.n - c.k)
