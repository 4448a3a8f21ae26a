"""
Tree-like tableaux and the geometry of their Southeast border.

Cells are ``(row, column)`` pairs, 0-indexed from the top-left cell, rows
growing downward and columns rightward.  The Southeast border is stored as a
string over ``"H"`` (horizontal edge) and ``"V"`` (vertical edge), read from
its Southwest end to its Northeast end; border edge ``i`` is ``word[i - 1]``.

Reading the border from the Southwest is a convention: larger edge indices
lie further to the Northeast, which is what makes the insertion code and the
special point index agree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

H = "H"
V = "V"

Cell = tuple[int, int]

__all__ = [
    "H", "V", "Cell", "Tableau", "Corner", "RuleViolation", "TableauError",
    "validate", "border_word", "corners", "occupied_corner_count",
    "inner_corner_count", "special_point", "transpose", "is_symmetric",
    "project_state", "rows_from_word", "word_from_rows", "edge_cell",
    "edge_cells", "tableau_from_word",
]


class TableauError(ValueError):
    """Malformed input that is not a Young diagram with points inside it."""


class RuleViolation(TableauError):
    """One of the three defining rules of a tree-like tableau fails.

    ``rule`` is 1, 2 or 3.  ``witness`` is the offending cell for rules 1 and
    2, and ``("row", r)`` or ``("column", c)`` for rule 3.
    """

    def __init__(self, rule: int, witness, message: str = ""):
        self.rule = rule
        self.witness = witness
        super().__init__(message or f"rule {rule} violated at {witness}")


def rows_from_word(word: str) -> tuple[int, ...]:
    rows = []
    x = 0
    for e in word:
        if e == H:
            x += 1
        else:
            rows.append(x)
    rows.reverse()
    return tuple(rows)


def word_from_rows(rows: Iterable[int]) -> str:
    rows = list(rows)
    parts = []
    below = 0
    for length in reversed(rows):
        parts.append(H * (length - below))
        parts.append(V)
        below = length
    return "".join(parts)


def edge_cell(word: str, i: int) -> Cell:
    """Cell owning border edge ``i``: the cell above a horizontal edge, the
    cell to the left of a vertical one."""
    x = word.count(H, 0, i - 1)
    y = word.count(V, i - 1)
    if word[i - 1] == H:
        return (y - 1, x)
    return (y - 1, x - 1)


def edge_cells(word: str) -> list[Cell]:
    y = word.count(V)
    x = 0
    cells = []
    for e in word:
        if e == H:
            cells.append((y - 1, x))
            x += 1
        else:
            cells.append((y - 1, x - 1))
            y -= 1
    return cells


class Corner(NamedTuple):
    cell: Cell
    # index of the horizontal border edge under the cell; the edge to its
    # right is bottom_edge_index + 1
    bottom_edge_index: int
    occupied: bool


@dataclass(frozen=True)
class Tableau:
    """A tree-like tableau.

    Instances are normally produced by :func:`validate` or by the insertion
    algorithm; the constructor itself does not check the defining rules.
    ``points`` is kept sorted so that equal tableaux compare and hash equal.
    """
    rows: tuple[int, ...]
    points: tuple[Cell, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "points", tuple(sorted(map(tuple, self.points))))

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column lengths (the conjugate partition)."""
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > c) for c in range(self.rows[0]))

    @cached_property
    def point_set(self) -> frozenset[Cell]:
        return frozenset(self.points)

    @cached_property
    def word(self) -> str:
        return word_from_rows(self.rows)

    def cells(self) -> list[Cell]:
        return [(r, c) for r, length in enumerate(self.rows) for c in range(length)]

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 0 <= r < len(self.rows) and 0 <= c < self.rows[r]

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "points": [list(p) for p in self.points]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        return validate(data["rows"], [tuple(p) for p in data["points"]])

    def __str__(self) -> str:
        lines = []
        for r, length in enumerate(self.rows):
            lines.append("".join("o" if (r, c) in self.point_set else "." for c in range(length)))
        return "\n".join(lines)


def tableau_from_word(word: str, points: Iterable[Cell]) -> Tableau:
    return Tableau(rows_from_word(word), tuple(points))


def validate(shape: Iterable[int], points: Iterable[Cell]) -> Tableau:
    """Check the three rules and return the tableau.

    Rule 1 is checked first, then rule 2 scanning points in row-major order,
    then rule 3 (rows top to bottom, then columns left to right).
    """
    rows = tuple(int(r) for r in shape)
    pts = sorted({(int(r), int(c)) for r, c in points})
    if not rows:
        raise TableauError("empty shape")
    if any(r <= 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
        raise TableauError(f"row lengths {rows} are not positive and weakly decreasing")
    for r, c in pts:
        if not (0 <= r < len(rows) and 0 <= c < rows[r]):
            raise TableauError(f"point {(r, c)} lies outside the shape")

    point_set = set(pts)
    if (0, 0) not in point_set:
        raise RuleViolation(1, (0, 0), "the top-left cell carries no root point")
    for r, c in pts:
        if (r, c) == (0, 0):
            continue
        above = any((rr, c) in point_set for rr in range(r))
        left = any((r, cc) in point_set for cc in range(c))
        if above == left:
            what = "both above and to the left" if above else "neither above nor to the left"
            raise RuleViolation(2, (r, c), f"point {(r, c)} has a point {what}")
    row_hit = {r for r, _ in pts}
    col_hit = {c for _, c in pts}
    for r in range(len(rows)):
        if r not in row_hit:
            raise RuleViolation(3, ("row", r), f"row {r} is empty")
    for c in range(rows[0]):
        if c not in col_hit:
            raise RuleViolation(3, ("column", c), f"column {c} is empty")
    return Tableau(rows, tuple(pts))


def border_word(T: Tableau) -> str:
    return T.word


def corners(T: Tableau) -> list[Corner]:
    """Corners of ``T`` from Southwest to Northeast."""
    w = T.word
    pts = T.point_set
    out = []
    i = w.find("HV")
    while i >= 0:
        cell = edge_cell(w, i + 1)
        out.append(Corner(cell, i + 1, cell in pts))
        i = w.find("HV", i + 1)
    return out


def occupied_corner_count(T: Tableau) -> int:
    return sum(1 for c in corners(T) if c.occupied)


def inner_corner_count(T: Tableau) -> int:
    return T.word.count("VH")


def special_point(T: Tableau) -> tuple[Cell, int]:
    """The right-most point sitting in the bottom cell of its column, and the
    index of the horizontal border edge below it."""
    w = T.word
    pts = T.point_set
    for i in range(len(w), 0, -1):
        if w[i - 1] == H:
            cell = edge_cell(w, i)
            if cell in pts:
                return cell, i
    raise TableauError("no point at the bottom of a column")


def transpose(T: Tableau) -> Tableau:
    return Tableau(T.columns, tuple((c, r) for r, c in T.points))


def is_symmetric(T: Tableau) -> bool:
    return T.rows == T.columns and all((c, r) in T.point_set for r, c in T.points)


def project_state(T: Tableau) -> str:
    """PASEP state of ``T``: inner border edges, East -> ``"1"`` (particle),
    North -> ``"0"`` (empty site)."""
    return T.word[1:-1].replace(H, "1").replace(V, "0")
