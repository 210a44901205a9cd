"""Self-similar structure of the grid.

The cells split into "halfZ" triples: an upper halfZ anchored at (a, b)
holds (3a, 2b), (3a, 2b+1), (3a+1, 2b); a lower one holds (3a+1, 2b+1),
(3a+2, 2b), (3a+2, 2b+1).  The three member strings of a halfZ agree
except in the last digit, and the shared prefix sits at a cell of the
grid itself: upper prefixes at (2a, b), lower at (2a+1, b).  Replacing
each halfZ by its prefix cell is therefore a zoom-out map under which the
grid is a fixed point, and iterating it nests the halfZs into arbitrarily
deep levels.

Reading the grid along that nesting enumerates the canonical ternary
strings in counting order, one digit of (n)_3 per nesting level, which is
what locate() exploits to find a string's coordinate in linear time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Grid, GridCoord, MalformedStringError, _SHARED
from .radix import canonicalize, is_canonical


class WindowShapeError(ValueError):
    """A window cannot be zoomed because its shape is not 3r x 2c."""


@dataclass(frozen=True)
class HalfZ:
    """One halfZ triple: kind, anchor, nesting level, members, shared prefix."""

    kind: str                       # "upper" | "lower"
    anchor: tuple[int, int]
    level: int
    members: tuple[GridCoord, GridCoord, GridCoord]
    lcp: str

    @property
    def lcp_coord(self) -> GridCoord:
        a, b = self.anchor
        return GridCoord(2 * a, b) if self.kind == "upper" else GridCoord(2 * a + 1, b)


def zoom_coord(i: int, j: int) -> GridCoord:
    """Coordinate of the shared-prefix cell of the level-0 halfZ holding (i, j)."""
    r = i % 3
    if r == 0 or (r == 1 and j % 2 == 0):
        return GridCoord(2 * (i // 3), j // 2)       # upper
    return GridCoord(2 * (i // 3) + 1, j // 2)       # lower


def descend(coord: GridCoord | tuple[int, int], d: int) -> GridCoord:
    """Inverse of zoom_coord: the d-th member of the halfZ whose prefix sits at coord.

    Appending digit d to the string at coord yields the string at the
    returned cell, which is how traversal and locate walk the nesting.
    """
    p, q = coord
    a = p // 2
    if p % 2 == 0:  # upper halfZ anchored (a, q)
        return (GridCoord(3 * a, 2 * q), GridCoord(3 * a, 2 * q + 1), GridCoord(3 * a + 1, 2 * q))[d]
    return (GridCoord(3 * a + 1, 2 * q + 1), GridCoord(3 * a + 2, 2 * q), GridCoord(3 * a + 2, 2 * q + 1))[d]


def halfz_of(i: int, j: int, level: int = 0, grid: Grid | None = None) -> HalfZ:
    """The level-`level` halfZ containing cell (i, j).

    Zooming out `level` times maps the cell onto the grid again; the
    level-0 halfZ there describes the level-`level` one: its members are
    the prefix cells of the three level-(level-1) children.
    """
    if i < 0 or j < 0:
        raise ValueError(f"coordinates must be non-negative, got ({i}, {j})")
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    g = grid if grid is not None else _SHARED
    p, q = i, j
    for _ in range(level):
        p, q = zoom_coord(p, q)
    r = p % 3
    if r == 0 or (r == 1 and q % 2 == 0):
        kind, a, b = "upper", p // 3, q // 2
    else:
        kind, a, b = "lower", p // 3, q // 2
    anchor_coord = GridCoord(2 * a, b) if kind == "upper" else GridCoord(2 * a + 1, b)
    members = tuple(descend(anchor_coord, d) for d in range(3))
    return HalfZ(
        kind=kind,
        anchor=(a, b),
        level=level,
        members=members,  # type: ignore[arg-type]
        lcp=g.cell(*anchor_coord),
    )


def zoom_out(window_cells: list[list[str]] | tuple[tuple[str, ...], ...]) -> list[list[str]]:
    """Collapse a 3r x 2c block of cells to the r x c grid of halfZ prefixes.

    Requires each halfZ in the block to be complete; the result equals the
    top-left r x c window of the grid itself (the fixed-point property).
    """
    rows = len(window_cells)
    cols = len(window_cells[0]) if rows else 0
    if rows == 0 or rows % 3 or cols == 0 or cols % 2:
        raise WindowShapeError(f"window is {rows} x {cols}, need 3r x 2c")
    if any(len(r) != cols for r in window_cells):
        raise WindowShapeError("ragged window")
    out = [[""] * (cols // 2) for _ in range(rows // 3 * 2)]
    for a in range(rows // 3):
        for b in range(cols // 2):
            upper = window_cells[3 * a][2 * b]
            lower = window_cells[3 * a + 2][2 * b]
            # prefix = member string minus its last digit, canonicalized
            out[2 * a][b] = canonicalize(upper[:-1])
            out[2 * a + 1][b] = canonicalize(lower[:-1])
    return out


def locate(w: str) -> GridCoord:
    """Coordinate of the canonical string w, one descend step per digit.

    Starting from the origin (whose halfZ chain is a fixed point), digit
    d picks the d-th member of the current cell's halfZ.
    """
    if not w or any(ch not in "012" for ch in w):
        raise MalformedStringError(f"{w!r} is not a {{0,1,2}}-string")
    if not is_canonical(w):
        raise MalformedStringError(f"{w!r} has a leading zero")
    coord = GridCoord(0, 0)
    for ch in w:
        coord = descend(coord, int(ch))
    return coord


def ternary_successor(w: str) -> tuple[str, int]:
    """((n+1)_3 from (n)_3, carry depth = number of trailing 2s)."""
    if not w or any(ch not in "012" for ch in w):
        raise MalformedStringError(f"{w!r} is not a {{0,1,2}}-string")
    stripped = w.rstrip("2")
    depth = len(w) - len(stripped)
    if not stripped:
        return "1" + "0" * depth, depth
    bumped = stripped[:-1] + "12"[int(stripped[-1])]
    return canonicalize(bumped + "0" * depth), depth


def traversal(count: int, grid: Grid | None = None) -> list[tuple[str, GridCoord]]:
    """First `count` cells of the halfZ nesting walk, as (string, coordinate).

    The walk is purely geometric: expand the level-m origin halfZ (m just
    large enough that 3^(m+1) >= count) member by member, recursing into
    each child's triple.  The strings read off the visited cells are the
    ternary numerals in counting order.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if count == 0:
        return []
    g = grid if grid is not None else _SHARED
    m = 0
    while 3 ** (m + 1) < count:
        m += 1
    out: list[tuple[str, GridCoord]] = []

    def walk(level: int, coord: GridCoord) -> None:
        if len(out) >= count:
            return
        for d in range(3):
            child = descend(coord, d)
            if level == 0:
                if len(out) < count:
                    out.append((g.cell(*child), child))
            else:
                walk(level - 1, child)

    walk(m, GridCoord(0, 0))
    return out


# ---------------------------------------------------------------------------
# row contents by value, without materializing cells

_VALUES_MEMO: dict[tuple[int, int], tuple[int, ...]] = {}


def row_values_by_length(row: int, length: int) -> tuple[int, ...]:
    """Sorted base-3 values of the length-`length` strings in grid row `row`.

    Stripping the last digit maps row 3a into row 2a (digits 0/1), row
    3a+1 into row 2a (digit 2) or 2a+1 (digit 0), and row 3a+2 into row
    2a+1 (digits 1/2); running that recursion forward builds the value
    sets without touching any cell.
    """
    if row < 0 or length < 1:
        return ()
    key = (row, length)
    got = _VALUES_MEMO.get(key)
    if got is not None:
        return got
    if length == 1:
        vals = (0, 1) if row == 0 else ((2,) if row == 1 else ())
    else:
        a, r = divmod(row, 3)
        if r == 0:
            base = _extendable(2 * a, length - 1)
            vals = tuple(sorted(3 * v + d for v in base for d in (0, 1)))
        elif r == 1:
            hi = _extendable(2 * a, length - 1)
            lo = _extendable(2 * a + 1, length - 1)
            vals = tuple(sorted([3 * v + 2 for v in hi] + [3 * v for v in lo]))
        else:
            base = _extendable(2 * a + 1, length - 1)
            vals = tuple(sorted(3 * v + d for v in base for d in (1, 2)))
    _VALUES_MEMO[key] = vals
    return vals


def _extendable(row: int, length: int) -> tuple[int, ...]:
    """Row values whose strings may grow by one digit: everything but "0".

    The cell "0" is the one canonical string that cannot take a suffix
    (that would create a leading zero), so it is dropped at length 1.
    """
    vals = row_values_by_length(row, length)
    if length == 1:
        return tuple(v for v in vals if v != 0)
    return vals


def row_values_below(row: int, bound: int) -> list[int]:
    """Sorted base-3 values of row `row` cells that are < bound."""
    if bound <= 0:
        return []
    out: list[int] = []
    length = 1
    while 3 ** (length - 1) < bound:  # a length-L string is worth >= 3^(L-1), except "0"
        out.extend(v for v in row_values_by_length(row, length) if v < bound)
        length += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# structural checks

@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    checked: int
    counterexample: dict | None = None


def check_minus1(limit: int) -> CheckReport:
    """Decrementing a base-3 numeral drops its grid row by at most one.

    Checks row_of((v-1)_3) >= row_of((v)_3) - 1 for 1 <= v < limit,
    rows taken from the descent map.
    """
    prev = "0"
    prev_row = 0
    checked = 0
    for v in range(1, limit):
        cur, _ = ternary_successor(prev)
        cur_row = locate(cur).row
        checked += 1
        if prev_row < cur_row - 1:
            return CheckReport(
                name="minus1",
                passed=False,
                checked=checked,
                counterexample={"v": v, "row_v": cur_row, "row_v_minus_1": prev_row},
            )
        prev, prev_row = cur, cur_row
    return CheckReport(name="minus1", passed=True, checked=checked)


def check_zero_column(rows: int, grid: Grid | None = None) -> CheckReport:
    """Column 0 is strictly increasing in base-3 value and minimal in its row.

    Minimality scans the row-content value sets for every string length up
    to one more than the column entry's length (anything longer is larger
    anyway).
    """
    g = grid if grid is not None else _SHARED
    prev_val = -1
    checked = 0
    for i in range(rows):
        s = g.cell(i, 0)
        v = int(s, 3)
        checked += 1
        if v <= prev_val:
            return CheckReport(
                name="zero_column",
                passed=False,
                checked=checked,
                counterexample={"row": i, "value": v, "prev": prev_val, "reason": "not increasing"},
            )
        candidates = [
            u
            for length in range(1, len(s) + 2)
            for u in row_values_by_length(i, length)
        ]
        if candidates and min(candidates) != v:
            return CheckReport(
                name="zero_column",
                passed=False,
                checked=checked,
                counterexample={"row": i, "value": v, "row_min": min(candidates), "reason": "not minimal"},
            )
        prev_val = v
    return CheckReport(name="zero_column", passed=True, checked=checked)
