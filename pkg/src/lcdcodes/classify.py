"""Isomorph-free exhaustive classification of binary LCD codes, n <= 16.

Two complete search strategies are provided.

* ``columns``: grow parity-check matrices one column at a time.  Every
  [n, k] code with minimum weight >= d arises by appending a column to the
  parity-check matrix of an [n-1, k-1] code with minimum weight >= d, so
  levels of inequivalent intermediate codes are extended and deduplicated
  until length n is reached.  Levels depend only on (n-k, d) and are
  cached, which lets one chain serve every cell on the same diagonal.

* ``rows``: enumerate generator matrices (I_k | A) directly, building A
  row by row in nondecreasing (strictly increasing when d >= 3) order
  with every row of weight >= d-1, pruning any partial combination whose
  codeword weight falls below d.

Both return the same classes; the agreement is pinned by tests.
Deduplication never compares codes pairwise: candidates are bucketed by a
cheap invariant fingerprint and only colliding buckets pay for a full
canonical form.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .codes import (
    LinearCode,
    all_xor_combinations,
    griesmer_max_d,
    weight_coeffs_fast,
)
from .covers import count_disordered_covers, dmax_dim2, dmax_dim3
from .equivalence import canonical_form, dedup_key_rows, invariant_key_rows
from .gf2core import BinaryMatrix, nullspace_rows, rank_rows
from .tables import KNOWN_TABLE, TABLE_N_MAX

_STRATEGIES = ("auto", "columns", "rows")
_ROWS_BUDGET = 60_000  # auto picks the direct row search only below this size


@dataclass
class SearchStats:
    """Work performed by one classification call (cached chain levels excluded)."""

    nodes: int = 0
    canonical_calls: int = 0
    seconds: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.canonical_calls += other.canonical_calls


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    k: int
    d: int
    codes: tuple[LinearCode, ...]
    count: int
    stats: SearchStats


# ---------------------------------------------------------------------------
# Shared deduplication: invariant buckets first, canonical forms on collisions.

def _side_rows_for(rows: tuple[int, ...], ncols: int) -> tuple[int, ...]:
    """A basis of whichever of the code / its dual has smaller dimension."""
    k = len(rows)
    if k <= ncols - k:
        return rows
    return tuple(nullspace_rows(rows, ncols))


def _inv_chunk(args: tuple[list[tuple[int, tuple[int, ...]]], int]) -> list[tuple[int, tuple]]:
    items, ncols = args
    return [(idx, invariant_key_rows(rows, ncols)) for idx, rows in items]


def _key_chunk(args: tuple[list[tuple[int, tuple[int, ...]]], int]) -> list[tuple[int, tuple]]:
    items, ncols = args
    return [(idx, dedup_key_rows(rows, ncols)) for idx, rows in items]


def _parallel_map(func, items: list, ncols: int, jobs: int) -> list:
    if jobs <= 1 or len(items) < 512:
        return func((items, ncols))
    chunk = max(64, len(items) // (jobs * 8))
    chunks = [(items[i : i + chunk], ncols) for i in range(0, len(items), chunk)]
    out: list = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(func, chunks):
            out.extend(part)
    return out


def _dedup_by_equivalence(
    side_bases: list[tuple[int, ...]], ncols: int, jobs: int, stats: SearchStats
) -> list[int]:
    """Indices of one representative per equivalence class, in first-seen order.

    ``side_bases[i]`` must all be bases of the same side (code or dual) so
    that canonical keys are comparable.
    """
    inv_items = _parallel_map(_inv_chunk, list(enumerate(side_bases)), ncols, jobs)
    buckets: dict[tuple, list[int]] = {}
    for idx, inv in inv_items:
        buckets.setdefault(inv, []).append(idx)

    colliding: list[tuple[int, tuple[int, ...]]] = []
    keep: list[int] = []
    for group in buckets.values():
        if len(group) == 1:
            keep.append(group[0])
        else:
            colliding.extend((idx, side_bases[idx]) for idx in group)
    stats.canonical_calls += len(colliding)
    key_items = _parallel_map(_key_chunk, colliding, ncols, jobs)
    seen: dict[tuple, int] = {}
    for idx, key in sorted(key_items):
        if key not in seen:
            seen[key] = idx
            keep.append(idx)
    keep.sort()
    return keep


# ---------------------------------------------------------------------------
# Strategy "columns": parity-check chains keyed by (r, d) = (n - k, min weight).

def _xor_sums_upto(cols: tuple[int, ...], size: int) -> set[int]:
    """All XOR combinations of at most ``size`` of the given columns."""
    sums = {0}
    for _ in range(size):
        sums |= {s ^ c for s in sums for c in cols}
    return sums


def _h_rows_from_columns(cols: tuple[int, ...], r: int) -> tuple[int, ...]:
    rows = [0] * r
    for j, c in enumerate(cols):
        while c:
            low = c & -c
            rows[low.bit_length() - 1] |= 1 << j
            c ^= low
    return tuple(rows)


def _seed_parity_columns(r: int, d: int) -> list[tuple[int, ...]]:
    """Parity-check column tuples of the [r+1, 1] codes of weight >= max(d, 1)."""
    seeds = []
    for w in range(max(d, 1), r + 2):
        gen_row = (1 << w) - 1
        h_rows = nullspace_rows([gen_row], r + 1)
        cols = tuple(
            sorted(
                sum(((h_rows[i] >> j) & 1) << i for i in range(r)) for j in range(r + 1)
            )
        )
        seeds.append(cols)
    return seeds


class _Chain:
    """Inequivalent [j, j-r] codes with minimum weight >= d, per length j."""

    def __init__(self, r: int, d: int):
        self.r = r
        self.d = d
        self.levels: dict[int, list[tuple[int, ...]]] = {}
        self.stats = SearchStats()

    def level(self, j: int, jobs: int = 1) -> list[tuple[int, ...]]:
        if j < self.r + 1:
            raise ValueError("below the dimension-1 seed length")
        base = self.r + 1
        if base not in self.levels:
            seeds = _seed_parity_columns(self.r, self.d)
            self.levels[base] = self._dedup_level(seeds, base, jobs)
        for length in range(base + 1, j + 1):
            if length in self.levels:
                continue
            self.levels[length] = self._dedup_level(
                self._children(self.levels[length - 1], length - 1), length, jobs
            )
        return self.levels[j]

    def _children(
        self, parents: list[tuple[int, ...]], length: int
    ) -> list[tuple[int, ...]]:
        space = 1 << self.r
        out: dict[tuple[int, ...], None] = {}
        nodes = 0
        for cols in parents:
            forbidden = _xor_sums_upto(cols, self.d - 2) if self.d >= 2 else set()
            for v in range(space):
                if v in forbidden:
                    continue
                nodes += 1
                child = list(cols)
                child.append(v)
                child.sort()
                out.setdefault(tuple(child), None)
        self.stats.nodes += nodes
        return list(out)

    def _dedup_level(
        self, candidates: list[tuple[int, ...]], length: int, jobs: int
    ) -> list[tuple[int, ...]]:
        if not candidates:
            return []
        side = [
            _side_rows_for(_h_rows_from_columns(cols, self.r), length)
            for cols in candidates
        ]
        keep = _dedup_by_equivalence(side, length, jobs, self.stats)
        return [candidates[i] for i in keep]


_CHAINS: dict[tuple[int, int], _Chain] = {}


def _chain(r: int, d: int) -> _Chain:
    key = (r, d)
    if key not in _CHAINS:
        _CHAINS[key] = _Chain(r, d)
    return _CHAINS[key]


def _is_lcd_parity(cols: tuple[int, ...], r: int) -> bool:
    """LCD test via nonsingularity of H H^T, with H given by its columns."""
    gram = [0] * r
    for c in cols:
        cc = c
        while cc:
            low = cc & -cc
            gram[low.bit_length() - 1] ^= c
            cc ^= low
    return rank_rows(gram, r) == r


def _classify_columns(n: int, k: int, d: int, jobs: int, stats: SearchStats) -> list[tuple[int, ...]]:
    r = n - k
    chain = _chain(r, d)
    before = SearchStats(chain.stats.nodes, chain.stats.canonical_calls)
    classes = chain.level(n, jobs)
    stats.nodes += chain.stats.nodes - before.nodes
    stats.canonical_calls += chain.stats.canonical_calls - before.canonical_calls
    survivors = [cols for cols in classes if _is_lcd_parity(cols, r)]
    return [tuple(nullspace_rows(_h_rows_from_columns(cols, r), n)) for cols in survivors]


# ---------------------------------------------------------------------------
# Strategy "rows": direct enumeration of generator matrices (I_k | A).

def _msb_first_key(v: int, width: int) -> int:
    out = 0
    for j in range(width):
        out |= ((v >> j) & 1) << (width - 1 - j)
    return out


def _classify_rows(n: int, k: int, d: int, stats: SearchStats) -> list[tuple[int, ...]]:
    r = n - k
    strict = d >= 3
    cands = sorted(
        (v for v in range(1 << r) if v.bit_count() >= d - 1),
        key=lambda v: _msb_first_key(v, r),
    )
    leaves: list[tuple[int, ...]] = []
    rows: list[int] = []
    sums: list[tuple[int, int]] = [(0, 0)]
    gram: list[int] = [(1 << i) for i in range(r)]  # I_r + A^T A, updated in place
    nodes = 0

    def recurse(start: int) -> None:
        nonlocal nodes
        if len(rows) == k:
            if rank_rows(gram, r) == r:
                leaves.append(tuple(rows))
            return
        for idx in range(start, len(cands)):
            v = cands[idx]
            if any(s + 1 + (x ^ v).bit_count() < d for s, x in sums):
                continue
            nodes += 1
            added = [(s + 1, x ^ v) for s, x in sums if s + 1 <= d - 2]
            sums.extend(added)
            rows.append(v)
            vv = v
            while vv:
                low = vv & -vv
                gram[low.bit_length() - 1] ^= v
                vv ^= low
            recurse(idx + 1 if strict else idx)
            vv = v
            while vv:
                low = vv & -vv
                gram[low.bit_length() - 1] ^= v
                vv ^= low
            rows.pop()
            del sums[len(sums) - len(added) :]

    recurse(0)
    stats.nodes += nodes
    return [
        tuple((1 << i) | (a << k) for i, a in enumerate(leaf)) for leaf in leaves
    ]


def _estimated_rows_leaves(n: int, k: int, d: int) -> int:
    r = n - k
    cands = sum(math.comb(r, w) for w in range(max(d - 1, 0), r + 1))
    if d <= 2:
        return math.comb(cands + k - 1, k)
    return math.comb(cands, k) if cands >= k else 0


# ---------------------------------------------------------------------------
# Public operations.

def classify_lcd(
    n: int, k: int, d: int, strategy: str = "auto", jobs: int = 1
) -> ClassificationResult:
    """All inequivalent LCD [n, k] codes with minimum weight >= d.

    When called at d = d(n,k) every returned code has minimum weight
    exactly d and the count is the number of optimal classes.
    """
    if not 1 <= k <= n <= TABLE_N_MAX:
        raise ValueError(f"need 1 <= k <= n <= {TABLE_N_MAX}, got n={n}, k={k}")
    if d < 1:
        raise ValueError("d must be positive")
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; pick one of {_STRATEGIES}")
    start = time.perf_counter()
    stats = SearchStats()

    if k == n:
        codes: list[LinearCode] = [LinearCode.full_space(n)] if d <= 1 else []
        return ClassificationResult(
            n, k, d, tuple(codes), len(codes), SearchStats(seconds=time.perf_counter() - start)
        )

    if strategy == "auto":
        strategy = "rows" if _estimated_rows_leaves(n, k, d) <= _ROWS_BUDGET else "columns"

    if strategy == "columns":
        bases = _classify_columns(n, k, d, jobs, stats)
    else:
        bases = _classify_rows(n, k, d, stats)
        side = [_side_rows_for(rows, n) for rows in bases]
        keep = _dedup_by_equivalence(side, n, jobs, stats)
        bases = [bases[i] for i in keep]

    reps = []
    for rows in bases:
        code = LinearCode(n, k, BinaryMatrix(k, n, rows))
        reps.append(canonical_form(code).code)
    stats.canonical_calls += len(reps)
    reps.sort(key=lambda c: (weight_coeffs_fast(c), c.gen.rows))
    stats.seconds = time.perf_counter() - start
    return ClassificationResult(n, k, d, tuple(reps), len(reps), stats)


def largest_d(
    n: int, k: int, strategy: str = "auto", jobs: int = 1
) -> tuple[int, ClassificationResult]:
    """The largest minimum weight among LCD [n, k] codes, with its classification.

    Starts at the Griesmer bound and decrements until classes appear; the
    first nonempty level is exactly the set of optimal LCD codes.
    """
    if not 1 <= k <= n <= TABLE_N_MAX:
        raise ValueError(f"need 1 <= k <= n <= {TABLE_N_MAX}, got n={n}, k={k}")
    for d in range(griesmer_max_d(n, k), 0, -1):
        result = classify_lcd(n, k, d, strategy=strategy, jobs=jobs)
        if result.count:
            return d, result
    raise AssertionError("unreachable: every (n, k) admits an LCD code")


def d_formula(n: int, k: int) -> int | None:
    """Closed-form or tabulated d(n, k); None when neither source applies."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == n:
        return 1
    if k == 1:
        return n if n % 2 else n - 1
    if k == n - 1:
        return 2 if n % 2 else 1
    if k == 2:
        return dmax_dim2(n)
    if k == 3:
        return dmax_dim3(n)
    cell = KNOWN_TABLE.get((n, k))
    return cell[0] if cell else None


def d_source(n: int, k: int) -> str:
    """Where ``d_formula`` gets its value: 'formula', 'table' or 'computed'."""
    if k in (1, 2, 3, n - 1, n):
        return "formula"
    if (n, k) in KNOWN_TABLE:
        return "table"
    return "computed"


@dataclass(frozen=True)
class CellCheck:
    n: int
    k: int
    expected: tuple[int, int]
    got: tuple[int, int]
    seconds: float

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass(frozen=True)
class TableReport:
    n_max: int
    cells: tuple[CellCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def mismatches(self) -> list[CellCheck]:
        return [c for c in self.cells if not c.ok]


def verify_table(n_max: int, strategy: str = "auto", jobs: int = 1) -> TableReport:
    """Recompute (d(n,k), count) for 2 <= k <= n-1 <= n_max-1 against the table."""
    if n_max > TABLE_N_MAX:
        raise ValueError(f"reference table stops at n = {TABLE_N_MAX}")
    cells = []
    for n in range(3, n_max + 1):
        for k in range(2, n):
            t0 = time.perf_counter()
            d, result = largest_d(n, k, strategy=strategy, jobs=jobs)
            cells.append(
                CellCheck(
                    n,
                    k,
                    KNOWN_TABLE[(n, k)],
                    (d, result.count),
                    time.perf_counter() - t0,
                )
            )
    return TableReport(n_max, tuple(cells))


@dataclass(frozen=True)
class CoverIdentityCheck:
    m: int
    count_short: int  # LCD [2m+3, 2m, 2] classes
    count_long: int   # LCD [2m+4, 2m+1, 2] classes
    cover_count: int  # disordered 3-covers of an unlabelled m-set

    @property
    def ok(self) -> bool:
        return self.count_short == self.count_long == self.cover_count


@dataclass(frozen=True)
class CoverIdentityReport:
    m_max: int
    checks: tuple[CoverIdentityCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_cover_count_identity(m_max: int, jobs: int = 1) -> CoverIdentityReport:
    """Check the two classification counts against the disordered-cover count."""
    if m_max < 1 or 2 * m_max + 4 > TABLE_N_MAX:
        raise ValueError(f"need 1 <= m and 2m+4 <= {TABLE_N_MAX}")
    checks = []
    for m in range(1, m_max + 1):
        d1, res1 = largest_d(2 * m + 3, 2 * m, jobs=jobs)
        d2, res2 = largest_d(2 * m + 4, 2 * m + 1, jobs=jobs)
        if (d1, d2) != (2, 2):
            raise AssertionError(f"expected optimal weight 2 at m={m}, got {(d1, d2)}")
        checks.append(
            CoverIdentityCheck(m, res1.count, res2.count, count_disordered_covers(m, 3))
        )
    return CoverIdentityReport(m_max, tuple(checks))
