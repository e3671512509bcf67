"""Permutation equivalence of binary codes and a canonical representative.

Binary monomial transformations are exactly the column permutations, so
two codes are equivalent when some reordering of coordinates maps one
onto the other.  The canonical form is computed by a refinement search
over column orders: it minimises the sorted codeword matrix of whichever
of ``C`` and ``C^⊥`` has the smaller dimension, then applies the winning
permutation to the input and row-reduces.  Because a permutation commutes
with taking duals, ``Aut(C) = Aut(C^⊥)`` and the result does not depend
on which side was searched or on which of several tied permutations was
found first.

The search state is an ordered partition of the side's codewords.
Placing a column splits every block into (bit 0, bit 1) halves; the
sorted-codeword objective decreases exactly when a split puts more words
into the 0-half earlier, which gives an exact, cheap domination rule on
partial column orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codes import LinearCode, all_xor_combinations, permute_columns, weight_coeffs_fast
from .gf2core import BinaryMatrix, nullspace_rows, rref_rows

_SIDE_LIMIT = 16  # dimension cap for min(k, n-k); paper scale needs at most 8

_PARITY_CACHE: dict[tuple[int, int], int] = {}
_PARITY_CACHE_DIM = 12


def parity_pattern(c: int, kdim: int) -> int:
    """Bit x of the result is ``popcount(x & c) mod 2`` for x in [0, 2^kdim).

    This is the value column ``c`` of a generator matrix takes across all
    codewords indexed by their basis combination x.
    """
    if kdim <= _PARITY_CACHE_DIM:
        cached = _PARITY_CACHE.get((c, kdim))
        if cached is not None:
            return cached
    p = 0
    size = 1
    for i in range(kdim):
        half_mask = (1 << size) - 1
        other = p ^ half_mask if (c >> i) & 1 else p
        p |= other << size
        size <<= 1
    if kdim <= _PARITY_CACHE_DIM:
        _PARITY_CACHE[(c, kdim)] = p
    return p


def _column_values(rows: Sequence[int], ncols: int) -> list[int]:
    cols = [0] * ncols
    for i, r in enumerate(rows):
        bit = 1 << i
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= bit
            r ^= low
    return cols


def _weight_masks(rows: Sequence[int]) -> tuple[list[tuple[int, int]], int]:
    """Masks over codeword indices grouped by codeword weight.

    Returns ``[(weight, mask), ...]`` sorted by weight, plus the number of
    codewords (so callers know the index width).
    """
    words = all_xor_combinations(rows)
    by_weight: dict[int, int] = {}
    for idx, w in enumerate(words):
        key = w.bit_count()
        by_weight[key] = by_weight.get(key, 0) | (1 << idx)
    return sorted(by_weight.items()), len(words)


def invariant_key_rows(rows: Sequence[int], ncols: int) -> tuple:
    """A cheap permutation- and basis-invariant fingerprint of a code.

    Combines the weight distribution with the sorted per-column profile of
    weight-class incidences.  Equivalent codes always share the key; the
    converse is not assumed anywhere.
    """
    kdim = len(rows)
    witems, _ = _weight_masks(rows)
    whist = tuple((w, m.bit_count()) for w, m in witems)
    cols = _column_values(rows, ncols)
    profiles = sorted(
        tuple((parity_pattern(c, kdim) & m).bit_count() for _, m in witems) for c in cols
    )
    return whist, tuple(profiles)


def canonical_column_order(rows: Sequence[int], ncols: int) -> tuple[int, ...]:
    """The column permutation minimising the sorted codeword matrix.

    ``rows`` is any basis of the code being searched (the side code).  The
    returned tuple sends new position p to original column order[p].
    """
    kdim = len(rows)
    if kdim == 0:
        return tuple(range(ncols))
    if kdim > _SIDE_LIMIT:
        raise ValueError(f"canonical search supports dimension <= {_SIDE_LIMIT}")

    witems, nwords = _weight_masks(rows)
    wmasks = [m for _, m in witems]
    cols = _column_values(rows, ncols)
    patterns = [parity_pattern(c, kdim) for c in cols]

    # Pre-partition columns into invariant classes; the search only ever
    # interleaves columns within a class, never across classes.
    inv_of = [tuple((patterns[j] & m).bit_count() for m in wmasks) for j in range(ncols)]
    classes = {inv: cid for cid, inv in enumerate(sorted(set(inv_of)))}

    counts: dict[tuple[int, int], int] = {}
    occupants: dict[int, list[int]] = {}
    for j in range(ncols):
        key = (classes[inv_of[j]], patterns[j])
        counts[key] = counts.get(key, 0) + 1
        occupants.setdefault(patterns[j], []).append(j)

    rem0 = tuple(sorted(counts.items()))
    part0 = ((1 << nwords) - 1,)
    frontier: dict[tuple, tuple[int, ...]] = {(rem0, part0): ()}

    placed = 0
    final_path: tuple[int, ...] | None = None
    while placed < ncols:
        if len(frontier) == 1:
            (rem, part), path = next(iter(frontier.items()))
            class_ids = [cid for (cid, _), _ in rem]
            if len(set(class_ids)) == len(rem):
                # one column value per class: the rest of the order is forced
                forced = []
                for (cid, pat), cnt in rem:
                    forced.extend([pat] * cnt)
                final_path = path + tuple(forced)
                break
        best_sig = None
        nxt: dict[tuple, tuple[int, ...]] = {}
        for (rem, part), path in frontier.items():
            for idx, ((cid, pat), cnt) in enumerate(rem):
                sig = (cid, tuple((b & pat).bit_count() for b in part))
                if best_sig is not None and sig > best_sig:
                    continue
                if best_sig is None or sig < best_sig:
                    best_sig = sig
                    nxt = {}
                new_part = []
                for b in part:
                    b1 = b & pat
                    b0 = b ^ b1
                    if b0:
                        new_part.append(b0)
                    if b1:
                        new_part.append(b1)
                if cnt == 1:
                    new_rem = rem[:idx] + rem[idx + 1 :]
                else:
                    new_rem = rem[:idx] + (((cid, pat), cnt - 1),) + rem[idx + 1 :]
                key = (new_rem, tuple(new_part))
                if key not in nxt:
                    nxt[key] = path + (pat,)
        frontier = nxt
        placed += 1
    if final_path is None:
        final_path = next(iter(frontier.values()))

    order = []
    taken: dict[int, int] = {}
    for pat in final_path:
        slot = taken.get(pat, 0)
        order.append(occupants[pat][slot])
        taken[pat] = slot + 1
    return tuple(order)


def dedup_key_rows(rows: Sequence[int], ncols: int) -> tuple[int, ...]:
    """Canonical RREF of the code spanned by ``rows`` under its best column order.

    Two row sets over the same ``ncols`` span permutation-equivalent codes
    exactly when their keys agree (for equal dimensions).
    """
    order = canonical_column_order(rows, ncols)
    permuted = [permute_columns(r, order) for r in rows]
    return tuple(rref_rows(permuted, ncols)[0])


@dataclass(frozen=True)
class CanonicalForm:
    """A normal form plus the column permutation that produces it."""

    code: LinearCode
    cert: tuple[int, ...]


def canonical_form(c: LinearCode) -> CanonicalForm:
    """Deterministic, permutation-invariant, idempotent representative of ``c``.

    The search runs on the smaller of the code and its dual; the resulting
    permutation is applied to ``c`` itself and the generator row-reduced.
    """
    if c.k == 0 or c.k == c.n:
        gen = BinaryMatrix.identity(c.n) if c.k == c.n else BinaryMatrix(0, c.n, ())
        return CanonicalForm(LinearCode(c.n, c.k, gen), tuple(range(c.n)))
    if c.k > c.n - c.k:
        side_rows: Sequence[int] = nullspace_rows(c.gen.rows, c.n)
    else:
        side_rows = c.gen.rows
    order = canonical_column_order(side_rows, c.n)
    permuted = [permute_columns(r, order) for r in c.gen.rows]
    reduced, _ = rref_rows(permuted, c.n)
    code = LinearCode(c.n, c.k, BinaryMatrix(c.k, c.n, tuple(reduced)))
    return CanonicalForm(code, order)


def are_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """Whether some coordinate permutation maps ``c1`` onto ``c2``.

    Distinct weight enumerators reject immediately; otherwise canonical
    forms are compared.
    """
    if (c1.n, c1.k) != (c2.n, c2.k):
        return False
    if weight_coeffs_fast(c1) != weight_coeffs_fast(c2):
        return False
    return canonical_form(c1).code.gen.rows == canonical_form(c2).code.gen.rows


def deduplicate(codes: Sequence[LinearCode]) -> list[LinearCode]:
    """One canonical representative per equivalence class, in a stable order.

    Sorted by weight enumerator and then by the canonical generator rows.
    """
    seen: dict[tuple, LinearCode] = {}
    for c in codes:
        canon = canonical_form(c).code
        key = (canon.n, canon.k, canon.gen.rows)
        seen.setdefault(key, canon)
    return sorted(seen.values(), key=lambda c: (weight_coeffs_fast(c), c.gen.rows))
