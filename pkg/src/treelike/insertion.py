"""
The insertion algorithm and the insertion code.

Every tree-like tableau of size n is obtained from the one-cell tableau by a
unique sequence of n - 1 insertions.  The edge indices chosen along the way,
``(m_2, ..., m_n)`` with ``1 <= m_k <= k``, form its insertion code.  The
implicit ``m_1 = 1`` is not stored.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .tableau import H, V, Cell, Tableau, TableauError, edge_cell, special_point, tableau_from_word

InsertionCode = tuple[int, ...]
PointTrace = dict[Cell, int]

ROOT = Tableau((1,), ((0, 0),))

__all__ = [
    "InsertionCode", "PointTrace", "ROOT", "NotReachable",
    "insert_line", "insert_point", "decode", "encode", "check_code",
    "code_from_full", "generate_all", "iter_codes", "ribbon_cells",
]


class NotReachable(TableauError):
    """No insertion history reproduces the tableau (never raised on valid input)."""


def check_code(code: Sequence[int]) -> InsertionCode:
    code = tuple(int(m) for m in code)
    for k, m in enumerate(code, start=2):
        if not 1 <= m <= k:
            raise ValueError(f"code entry m_{k} = {m} is outside 1..{k}")
    return code


def code_from_full(full: Sequence[int]) -> InsertionCode:
    """Drop the leading ``m_1 = 1`` of a code written as ``(m_1, ..., m_n)``."""
    full = tuple(full)
    if not full or full[0] != 1:
        raise ValueError("a full code starts with m_1 = 1")
    return check_code(full[1:])


def _add_line(word: str, points: list[Cell], i: int) -> tuple[str, list[Cell]]:
    # a new row under (or column right of) edge i, with its point at the end;
    # the new point comes last in the returned list
    new_word = word[:i - 1] + "HV" + word[i:]
    r, c = edge_cell(new_word, i)
    if word[i - 1] == H:
        pts = [(a + 1, b) if a >= r else (a, b) for a, b in points]
    else:
        pts = [(a, b + 1) if b >= c else (a, b) for a, b in points]
    pts.append((r, c))
    return new_word, pts


def _insert(word: str, points: list[Cell], i: int, sp: int) -> tuple[str, list[Cell]]:
    new_word, pts = _add_line(word, points, i)
    if i < sp:
        # ribbon between the new point and the old special point: the border
        # segment V...H running from edge i+1 to edge sp+1 becomes H...V
        assert new_word[i] == V and new_word[sp] == H
        new_word = new_word[:i] + H + new_word[i + 1:sp] + V + new_word[sp + 1:]
    return new_word, pts


def _check_index(T: Tableau, i: int):
    if not 1 <= i <= T.size + 1:
        raise IndexError(f"edge index {i} outside 1..{T.size + 1}")


def insert_line(T: Tableau, i: int) -> Tableau:
    """Insert a row (or column) at border edge ``i`` with a point at its end,
    without any ribbon."""
    _check_index(T, i)
    word, pts = _add_line(T.word, list(T.points), i)
    return tableau_from_word(word, pts)


def insert_point(T: Tableau, i: int) -> Tableau:
    _check_index(T, i)
    _, sp = special_point(T)
    word, pts = _insert(T.word, list(T.points), i, sp)
    return tableau_from_word(word, pts)


def ribbon_cells(T: Tableau, i: int) -> set[Cell]:
    """Empty cells added by the ribbon step of ``insert_point(T, i)``."""
    before = set(insert_line(T, i).cells())
    return set(insert_point(T, i).cells()) - before


def decode(code: Sequence[int]) -> tuple[Tableau, PointTrace]:
    code = check_code(code)
    word, pts, sp = ROOT.word, [(0, 0)], 1
    for m in code:
        word, pts = _insert(word, pts, m, sp)
        sp = m
    trace = {p: k for k, p in enumerate(pts, start=1)}
    return tableau_from_word(word, pts), trace


def _remove_line(word: str, points: list[Cell], i: int, p: Cell) -> tuple[str, list[Cell]] | None:
    r, c = p
    rest = [q for q in points if q != p]
    if any(a == r and b < c for a, b in rest):
        if any(b == c for a, b in rest):
            return None
        new_word = word[:i - 1] + V + word[i + 1:]
        pts = [(a, b - 1) if b > c else (a, b) for a, b in rest]
    else:
        if any(a == r for a, b in rest):
            return None
        new_word = word[:i - 1] + H + word[i + 1:]
        pts = [(a - 1, b) if a > r else (a, b) for a, b in rest]
    return new_word, pts


def _predecessor(T: Tableau) -> tuple[Tableau, int]:
    p, i = special_point(T)
    w = T.word
    if i >= len(w):
        raise NotReachable(f"special point edge {i} has no edge after it")
    candidates = []
    if w[i] == V:
        candidates.append(w)
    else:
        # undo a ribbon ending at some later vertical edge k
        for k in range(i + 2, len(w) + 1):
            if w[k - 1] == V:
                candidates.append(w[:i] + V + w[i + 1:k - 1] + H + w[k:])
    pts = list(T.points)
    for cand in candidates:
        prev = tableau_from_word(cand, pts)
        if not all(q in prev for q in pts):
            continue
        removed = _remove_line(cand, pts, i, p)
        if removed is None:
            continue
        X = tableau_from_word(*removed)
        if i <= X.size + 1 and insert_point(X, i) == T:
            return X, i
    raise NotReachable(f"no predecessor found for tableau {T.to_json()}")


def encode(T: Tableau) -> InsertionCode:
    code = []
    while T.size > 1:
        T, m = _predecessor(T)
        code.append(m)
    if T != ROOT:
        raise NotReachable(f"undo ended at {T.to_json()} instead of the root")
    return tuple(reversed(code))


def iter_codes(n: int, prefix: Sequence[int] = ()) -> Iterator[InsertionCode]:
    """All codes of size ``n`` starting with ``prefix``, lexicographically."""
    prefix = check_code(prefix)
    start = len(prefix) + 2
    ranges = [range(1, k + 1) for k in range(start, n + 1)]
    for tail in product(*ranges):
        yield prefix + tail


def generate_all(n: int, prefix: Sequence[int] = ()) -> Iterator[tuple[Tableau, InsertionCode, PointTrace]]:
    """Every tableau of size ``n``, with its code and point trace, in
    lexicographic code order.  ``prefix`` restricts to one subtree, which is
    how enumerations are split across workers."""
    if n < 1:
        raise ValueError("n must be at least 1")
    prefix = check_code(prefix)
    if len(prefix) > n - 1:
        raise ValueError("prefix longer than the code")
    word, pts, sp = ROOT.word, [(0, 0)], 1
    for m in prefix:
        word, pts = _insert(word, pts, m, sp)
        sp = m

    def walk(word, pts, sp, code, k):
        if k > n:
            yield tableau_from_word(word, pts), code, {p: j for j, p in enumerate(pts, start=1)}
            return
        for m in range(1, k + 1):
            w2, p2 = _insert(word, pts, m, sp)
            yield from walk(w2, p2, m, code + (m,), k + 1)

    yield from walk(word, pts, sp, prefix, len(prefix) + 2)
