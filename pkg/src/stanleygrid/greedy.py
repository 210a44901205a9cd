"""Greedy partition of {0, 1, ..., N-1} into 3-free sequences.

Integers are assigned in increasing order; each n goes into the first row
it does not complete a 3-term arithmetic progression in.  Row 0 is the
Stanley sequence (integers with no 2 in base 3), row 1 starts 2, 5, 6, ...
The sieve keeps one "forbidden" byte array per row: when n enters row j,
every value 2*n - a (a already in row j) becomes forbidden in row j, since
a, n, 2n - a would be an AP.  Those strided updates are done with numpy on
a buffer shared with a plain bytearray, so the per-candidate membership
test stays a cheap byte lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .radix import BASE_3, BASE_3_2, represent


class InsufficientRangeError(ValueError):
    """The sieve bound was too small for the requested output.

    required_bound, when set, is a bound known to suffice.
    """

    def __init__(self, msg: str, required_bound: int | None = None):
        super().__init__(msg)
        self.required_bound = required_bound


class RowCapError(RuntimeError):
    """The sieve tried to open more rows than the safety cap allows."""


@dataclass(frozen=True)
class GreedyPartition:
    """Result of sieving [0, bound): rows plus the value -> row map."""

    bound: int
    rows: tuple[tuple[int, ...], ...]
    _assignment: np.ndarray = field(repr=False)

    def row(self, i: int) -> tuple[int, ...]:
        """Terms of row i below the bound (empty if the row never opened)."""
        return self.rows[i] if 0 <= i < len(self.rows) else ()

    def row_index(self, n: int) -> int:
        if not 0 <= n < self.bound:
            raise InsufficientRangeError(
                f"{n} is outside the sieved range [0, {self.bound})", required_bound=n + 1
            )
        return int(self._assignment[n])

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def first_terms(self, count: int) -> list[int]:
        """First element of each of the first `count` rows (the cross sequence)."""
        if count > len(self.rows):
            need = first_term_bound(count)
            raise InsufficientRangeError(
                f"only {len(self.rows)} rows opened below {self.bound}; "
                f"a bound of {need} suffices for {count} rows",
                required_bound=need,
            )
        return [r[0] for r in self.rows[:count]]


def first_term_bound(count: int) -> int:
    """A sieve bound guaranteed to open `count` rows.

    The first term of row i written in base 3 is the base-3/2 string of 2i,
    so one more than that value always suffices.
    """
    if count <= 0:
        return 1
    return int(represent(2 * (count - 1), BASE_3_2), 3) + 1


def is_ap_free_extension(terms: Sequence[int] | Iterable[int], n: int) -> bool:
    """Would appending n to this 3-free set keep it 3-free?

    All existing terms are assumed < n, so only APs (a, b, n) with
    a = 2b - n can appear; probe each b with 2b >= n.
    """
    pool = set(terms)
    for b in pool:
        if 2 * b >= n and (2 * b - n) in pool:
            return False
    return True


def build_partition(limit: int, max_rows: int = 10_000) -> GreedyPartition:
    """Sieve every n in [0, limit) into the greedy 3-free rows."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if max_rows < 1:
        raise ValueError(f"max_rows must be >= 1, got {max_rows}")

    assignment = np.zeros(limit, dtype=np.int32)
    rows: list[list[int]] = []
    forb_bytes: list[bytearray] = []   # fast scalar reads
    forb_np: list[np.ndarray] = []     # same memory, vectorized writes
    term_buf: list[np.ndarray] = []    # terms as int64 for the stride update
    term_len: list[int] = []

    for n in range(limit):
        j = 0
        opened = len(rows)
        while j < opened and forb_bytes[j][n]:
            j += 1
        if j == opened:
            if j >= max_rows:
                raise RowCapError(f"more than {max_rows} rows needed below {limit}")
            rows.append([])
            ba = bytearray(limit)
            forb_bytes.append(ba)
            forb_np.append(np.frombuffer(ba, dtype=np.uint8))
            term_buf.append(np.empty(16, dtype=np.int64))
            term_len.append(0)

        k = term_len[j]
        if k:
            idx = 2 * n - term_buf[j][:k]
            idx = idx[idx < limit]          # idx > n >= 0 always
            if idx.size:
                forb_np[j][idx] = 1
        buf = term_buf[j]
        if k == len(buf):
            buf = np.resize(buf, 2 * k)
            term_buf[j] = buf
        buf[k] = n
        term_len[j] = k + 1
        rows[j].append(n)
        assignment[n] = j

    return GreedyPartition(
        bound=limit,
        rows=tuple(tuple(r) for r in rows),
        _assignment=assignment,
    )


def cross_sequence(partition: GreedyPartition, count: int) -> list[int]:
    """Read the partition crosswise: first term of each of the first `count` rows."""
    return partition.first_terms(count)


def row_prefix_base3(partition: GreedyPartition, i: int) -> list[str]:
    """Row i rendered in base 3 (handy against the ternary characterizations)."""
    return [represent(n, BASE_3) for n in partition.row(i)]
