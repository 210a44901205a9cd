"""The infinite grid of {0,1,2}-strings.

Row 0 lists the zero-one strings in binary counting order; each later row
is obtained cell by cell from the row above via the base-3/2 add-2 rewrite.
Every canonical {0,1,2}-string appears in exactly one cell, and the base-3
values of row i are exactly the i-th greedy 3-free row.

Columns are generated lazily and memoized: walking a column is just
iterating add_two from its binary seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .radix import BASE_3_2, add_two, evaluate, is_canonical


class MalformedStringError(ValueError):
    """Input is not a canonical {0,1,2}-string."""


class GridCoord(NamedTuple):
    row: int
    col: int


def binary_string(j: int) -> str:
    """The j-th row-0 entry: j written in binary (j = 0 gives "0")."""
    if j < 0:
        raise ValueError(f"column index must be >= 0, got {j}")
    return format(j, "b")


def _check_ternary(w: str) -> None:
    if not w or any(ch not in "012" for ch in w):
        raise MalformedStringError(f"{w!r} is not a {{0,1,2}}-string")
    if not is_canonical(w):
        raise MalformedStringError(f"{w!r} has a leading zero")


class Grid:
    """Lazily materialized grid; cells are memoized per column."""

    def __init__(self):
        self._columns: dict[int, list[str]] = {}

    def cell(self, i: int, j: int) -> str:
        if i < 0:
            raise ValueError(f"row index must be >= 0, got {i}")
        col = self._columns.get(j)
        if col is None:
            col = [binary_string(j)]
            self._columns[j] = col
        while len(col) <= i:
            col.append(add_two(col[-1]))
        return col[i]


_SHARED = Grid()


def cell(i: int, j: int) -> str:
    """Cell (i, j) of the shared grid instance."""
    return _SHARED.cell(i, j)


def main_suffix(w: str) -> str:
    """Suffix of w starting at its leftmost 2; "" when w has no 2.

    The main suffix determines the row: prepending any {0,1}-string to a
    cell's content leaves its row unchanged.
    """
    i = w.find("2")
    return "" if i < 0 else w[i:]


def row_of(w: str) -> int:
    """Row index of the unique cell containing the canonical string w.

    Strategy: reduce to the main suffix s (same row, fewer candidate
    columns), then scan columns j with len(binary_string(j)) <= len(s).
    Column j holds s at row i only if [s] - [bin j] = 2i, so candidate
    rows come from an exact Fraction subtraction and are confirmed by
    walking the memoized column.
    """
    _check_ternary(w)
    s = main_suffix(w)
    if not s:
        return 0
    target = evaluate(s, BASE_3_2)
    L = len(s)
    j = 0
    while True:
        b = binary_string(j)
        if len(b) > L:
            break
        diff = target - evaluate(b, BASE_3_2)
        if diff >= 0 and diff.denominator == 1 and diff.numerator % 2 == 0:
            i = diff.numerator // 2
            # confirm: add_two never shortens a string, so give up early
            # if the column overshoots the target length
            cur = b
            step = 0
            while step < i and len(cur) <= L:
                cur = add_two(cur)
                step += 1
            if step == i and cur == s:
                return i
        j += 1
    raise MalformedStringError(f"{w!r} not found in any column")  # unreachable for valid input


def value_fraction(w: str) -> Fraction:
    """Exact base-3/2 value of a grid string."""
    _check_ternary(w)
    return evaluate(w, BASE_3_2)


@dataclass(frozen=True)
class GridWindow:
    """A finite top-left window of the grid."""

    rows: int
    cols: int
    cells: tuple[tuple[str, ...], ...]

    def to_csv(self) -> str:
        return "\n".join(",".join(r) for r in self.cells) + "\n"

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.cells], separators=(",", ":"))

    def to_text(self) -> str:
        widths = [max(len(self.cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for r in self.cells:
            lines.append("  ".join(s.rjust(widths[j]) for j, s in enumerate(r)))
        return "\n".join(lines) + "\n"


def window(rows: int, cols: int, grid: Grid | None = None) -> GridWindow:
    """Materialize the rows x cols top-left window."""
    if rows < 1 or cols < 1:
        raise ValueError("window must have at least one row and one column")
    g = grid if grid is not None else _SHARED
    return GridWindow(
        rows=rows,
        cols=cols,
        cells=tuple(tuple(g.cell(i, j) for j in range(cols)) for i in range(rows)),
    )
