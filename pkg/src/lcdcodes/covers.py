"""LCD codes built from k-covers of m-sets, and the two small-dimension families.

A k-cover is an ordered sequence of k subsets of {1,..,m} whose union is
the whole set.  Repeating the incidence block an even number of times and
prefixing an identity yields an LCD code whose dual distance is exactly 2;
dimensions 2 and 3 admit closed parameterised families whose weight
enumerators are known in closed form, together with solvers for the
parameter sets that reach the optimal minimum weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .codes import LinearCode, WeightEnumerator
from .gf2core import BinaryMatrix


@dataclass(frozen=True)
class KCover:
    """An ordered k-cover (Y_1,...,Y_k) of the point set {1,...,m}."""

    m: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be positive")
        ground = set(range(1, self.m + 1))
        union: set[int] = set()
        for i, y in enumerate(self.sets):
            if not y <= ground:
                raise ValueError(f"set {i} is not a subset of 1..{self.m}")
            union |= y
        if union != ground:
            raise ValueError("the sets do not cover the whole point set")

    @property
    def k(self) -> int:
        return len(self.sets)

    @classmethod
    def from_lists(cls, m: int, sets: Iterable[Iterable[int]]) -> KCover:
        return cls(m, tuple(frozenset(s) for s in sets))

    def incidence_columns(self) -> list[int]:
        """Point incidence vectors; bit i of column p-1 means p in Y_{i+1}."""
        cols = []
        for p in range(1, self.m + 1):
            v = 0
            for i, y in enumerate(self.sets):
                if p in y:
                    v |= 1 << i
            cols.append(v)
        return cols


def cover_code(y: KCover, ell: int) -> LinearCode:
    """The LCD [ell*m + k, k] code with rows 'unit bit + ell copies of Y_i'."""
    if ell < 2 or ell % 2 != 0:
        raise ValueError(f"ell must be even and >= 2, got {ell}")
    k, m = y.k, y.m
    n = k + ell * m
    rows = []
    for i, yset in enumerate(y.sets):
        bits = 1 << i
        for block in range(ell):
            base = k + block * m
            for p in yset:
                bits |= 1 << (base + p - 1)
        rows.append(bits)
    return LinearCode(n, k, BinaryMatrix(k, n, tuple(rows)))


def cover_code_extended(y: KCover) -> LinearCode:
    """The [2m+3, 2] or [2m+4, 3] extension appending one fixed extra column.

    The appended column is (1,1) for k = 2 and (0,1,1) for k = 3; both keep
    the code LCD.
    """
    if y.k not in (2, 3):
        raise ValueError(f"the extension is defined for k in {{2, 3}}, got k={y.k}")
    base = cover_code(y, 2)
    extra = 0b11 if y.k == 2 else 0b110
    n = base.n + 1
    rows = tuple(
        r | (((extra >> i) & 1) << base.n) for i, r in enumerate(base.gen.rows)
    )
    return LinearCode(n, y.k, BinaryMatrix(y.k, n, rows))


def _bit_permutation_tables(k: int) -> list[list[int]]:
    tables = []
    for perm in itertools.permutations(range(k)):
        table = [0] * (1 << k)
        for v in range(1 << k):
            w = 0
            for i in range(k):
                if (v >> i) & 1:
                    w |= 1 << perm[i]
            table[v] = w
        tables.append(table)
    return tables


def enumerate_disordered_covers(m: int, k: int) -> list[KCover]:
    """One representative per orbit of k-covers under set and point relabelling.

    A cover of an unlabelled m-set is a size-m multiset of nonzero incidence
    vectors; orbits under permuting the k sets are taken by keeping exactly
    the multisets that are lexicographically minimal among their k! images.
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    tables = _bit_permutation_tables(k)
    reps: list[KCover] = []
    for combo in itertools.combinations_with_replacement(range(1, 1 << k), m):
        if any(tuple(sorted(t[v] for v in combo)) < combo for t in tables[1:]):
            continue
        sets = tuple(
            frozenset(p + 1 for p, v in enumerate(combo) if (v >> i) & 1)
            for i in range(k)
        )
        reps.append(KCover(m, sets))
    return reps


def count_disordered_covers(m: int, k: int) -> int:
    return len(enumerate_disordered_covers(m, k))


# ---------------------------------------------------------------------------
# Dimension 2: codes with a doubled two-row block and optional parity column.

@dataclass(frozen=True)
class Dim2Params:
    a: int
    b: int
    c: int
    delta: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 0:
            raise ValueError("parameters must be nonnegative")
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")

    @property
    def n(self) -> int:
        return 2 * (self.a + self.b + self.c) + 2 + self.delta


_DIM2_COLUMNS = {"a": 0b11, "b": 0b01, "c": 0b10}


def _dim2_block(p: Dim2Params) -> list[int]:
    return (
        [_DIM2_COLUMNS["a"]] * p.a
        + [_DIM2_COLUMNS["b"]] * p.b
        + [_DIM2_COLUMNS["c"]] * p.c
    )


def code_dim2(p: Dim2Params) -> LinearCode:
    """The [2(a+b+c)+2+delta, 2] code (I_2 | M | M) with optional (1,1) column."""
    cols = [0b01, 0b10] + _dim2_block(p) * 2
    if p.delta:
        cols.append(0b11)
    return _code_from_columns(cols, 2)


def we_formula_dim2(p: Dim2Params) -> WeightEnumerator:
    """Closed-form weight enumerator of ``code_dim2(p)``; equal exponents add."""
    coeffs = [0] * (p.n + 1)
    coeffs[0] = 1
    for e in (
        1 + 2 * (p.a + p.b) + p.delta,
        1 + 2 * (p.a + p.c) + p.delta,
        2 + 2 * (p.b + p.c),
    ):
        coeffs[e] += 1
    return WeightEnumerator(tuple(coeffs))


def dmax_dim2(n: int) -> int:
    """Largest minimum weight of a binary LCD [n, 2] code."""
    if n < 2:
        raise ValueError("need n >= 2")
    base = (2 * n) // 3
    return base if n % 6 in (1, 2, 3, 4) else base - 1


def solve_params_dim2(n: int) -> list[Dim2Params]:
    """All parameter triples whose code reaches the optimal [n, 2] minimum weight.

    Solutions carry b <= c; the two mirror conditions on (a,b) and (a,c) and
    the one on (b,c) bound the three nonzero codeword weights from below.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    delta = n % 2
    total = (n - 2 - delta) // 2
    d_n = dmax_dim2(n)
    out = []
    for a in range(total + 1):
        for b in range((total - a) // 2 + 1):
            c = total - a - b
            if b > c:
                continue
            if d_n > 1 + 2 * (a + b) + delta:
                continue
            if d_n > 1 + 2 * (a + c) + delta:
                continue
            if d_n > 2 + 2 * (b + c):
                continue
            out.append(Dim2Params(a, b, c, delta))
    return out


# ---------------------------------------------------------------------------
# Dimension 3: the seven-block analogue.

@dataclass(frozen=True)
class Dim3Params:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int
    delta: int

    def __post_init__(self) -> None:
        if min(self.blocks) < 0:
            raise ValueError("parameters must be nonnegative")
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")

    @property
    def blocks(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g)

    @property
    def n(self) -> int:
        return 2 * sum(self.blocks) + 3 + self.delta


_DIM3_COLUMNS = (0b111, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011)


def _dim3_block(blocks: Sequence[int]) -> list[int]:
    cols: list[int] = []
    for col, count in zip(_DIM3_COLUMNS, blocks):
        cols.extend([col] * count)
    return cols


def code_dim3(p: Dim3Params) -> LinearCode:
    """The [2*sum+3+delta, 3] code (I_3 | M | M) with optional (0,1,1) column."""
    cols = [0b001, 0b010, 0b100] + _dim3_block(p.blocks) * 2
    if p.delta:
        cols.append(0b110)
    return _code_from_columns(cols, 3)


def code_dim3_raw(blocks: Sequence[int]) -> LinearCode:
    """The code generated by the bare seven-block matrix (no identity prefix)."""
    blocks = tuple(blocks)
    if len(blocks) != 7 or min(blocks) < 0:
        raise ValueError("expected seven nonnegative block sizes")
    return _code_from_columns(_dim3_block(blocks), 3)


def we_formula_dim3(p: Dim3Params) -> WeightEnumerator:
    """Closed-form weight enumerator of ``code_dim3(p)``; equal exponents add."""
    a, b, c, d, e, f, g = p.blocks
    dl = p.delta
    coeffs = [0] * (p.n + 1)
    coeffs[0] = 1
    for exp in (
        1 + 2 * (a + b + f + g),
        1 + 2 * (a + c + e + g) + dl,
        1 + 2 * (a + d + e + f) + dl,
        2 + 2 * (b + c + e + f) + dl,
        2 + 2 * (b + d + e + g) + dl,
        2 + 2 * (c + d + f + g),
        3 + 2 * (a + b + c + d),
    ):
        coeffs[exp] += 1
    return WeightEnumerator(tuple(coeffs))


def dmax_dim3(n: int) -> int:
    """Largest minimum weight of a binary LCD [n, 3] code."""
    if n < 3:
        raise ValueError("need n >= 3")
    base = (4 * n) // 7
    return base if n % 7 in (3, 5) else base - 1


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def solve_params_dim3(n: int, alpha: int) -> list[Dim3Params]:
    """All seven-tuples whose [n, 3] code has every codeword weight >= alpha.

    Candidate values per coordinate are pruned to two integer windows that
    any solution must occupy, then the seven weight conditions are checked
    exactly.  Solutions carry the ordering b <= c <= d (delta = 0) or
    c <= d (delta = 1) used to cut permutation-equivalent repeats.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    if alpha < 1:
        raise ValueError("alpha must be positive")
    delta = 1 - (n & 1)
    m = (n - 3 - delta) // 2

    lo1 = max(0, _ceil_div(2 * alpha - 2 * m - 3 - delta, 2))
    hi1 = (4 * m - 3 * alpha + 6 + 2 * delta) // 4
    lo2 = max(0, _ceil_div(2 * alpha - 2 * m - 4 - delta, 2))
    hi2 = (4 * m - 3 * alpha + 4 + 2 * delta) // 4
    r1 = range(lo1, hi1 + 1)
    r2 = range(lo2, hi2 + 1)
    if not r1 or not r2:
        return []

    e_range = r1 if delta == 0 else r2
    out = []
    for a in r1:
        for b in r2:
            for c in r2:
                if delta == 0 and c < b:
                    continue
                for d in r2:
                    if d < c:
                        continue
                    for e in e_range:
                        for f in r1:
                            g = m - (a + b + c + d + e + f)
                            if g not in r1:
                                continue
                            if alpha > 1 + 2 * (a + b + f + g):
                                continue
                            if alpha > 1 + 2 * (a + c + e + g) + delta:
                                continue
                            if alpha > 1 + 2 * (a + d + e + f) + delta:
                                continue
                            if alpha > 2 + 2 * (b + c + e + f) + delta:
                                continue
                            if alpha > 2 + 2 * (b + d + e + g) + delta:
                                continue
                            if alpha > 2 + 2 * (c + d + f + g):
                                continue
                            if alpha > 3 + 2 * (a + b + c + d):
                                continue
                            out.append(Dim3Params(a, b, c, d, e, f, g, delta))
    return out


def _code_from_columns(cols: Sequence[int], k: int) -> LinearCode:
    n = len(cols)
    rows = []
    for i in range(k):
        bits = 0
        for j, col in enumerate(cols):
            bits |= ((col >> i) & 1) << j
        rows.append(bits)
    return LinearCode(n, k, BinaryMatrix(k, n, tuple(rows)))
