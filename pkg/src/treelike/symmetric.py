"""
Symmetric tree-like tableaux: tableaux equal to their own transpose.

Only the root lies on the diagonal, so sizes are odd.  Two generators are
provided: :func:`generate_symmetric` filters the full enumeration, and
:func:`generate_symmetric_direct` builds self-conjugate shapes with
mirror-closed point sets straight from the three defining rules.  They share
no code path and are compared against each other in the tests.

:func:`paired_insert` is the line-pair construction behind the count of
occupied corners: each occupied corner of a symmetric tableau of size 2n+1
corresponds to a triplet (base of size 2n-1, edge index in 1..n, side a/b).
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial
from typing import Iterator, NamedTuple

from .insertion import _remove_line, generate_all, insert_line
from .polynomial import ONE, X, IntPolynomial, variance_from_polynomial
from .statistics import ConjectureCheck
from .tableau import (
    Corner, RuleViolation, Tableau, corners, edge_cell, is_symmetric, rows_from_word, validate,
)

__all__ = [
    "SymTriplet", "OddPowerPresent", "generate_symmetric", "generate_symmetric_direct",
    "paired_insert", "triplet_of_corner", "oc_total_symmetric", "Q_recurrence",
    "Q_enum", "b_recurrence_check", "variance_oc_symmetric", "corners_total_symmetric",
    "conjecture_corners_symmetric", "conjecture_corners_symmetric_average",
    "self_conjugate_shapes",
]


class OddPowerPresent(ArithmeticError):
    pass


class SymTriplet(NamedTuple):
    base: Tableau
    i: int
    rho: str  # "a": corner above the diagonal, "b": below


def _half(size: int) -> int:
    if size < 1 or size % 2 == 0:
        raise ValueError(f"symmetric tableaux have odd size, got {size}")
    return (size - 1) // 2


def generate_symmetric(size: int) -> Iterator[Tableau]:
    _half(size)
    for T, _, _ in generate_all(size):
        if is_symmetric(T):
            yield T


def self_conjugate_shapes(h: int) -> Iterator[tuple[int, ...]]:
    """Self-conjugate partitions with h rows and first row h."""
    for tail in combinations_with_replacement(range(h, 0, -1), h - 1):
        rows = (h,) + tail
        if _conjugate(rows) == rows:
            yield rows


def _conjugate(rows):
    return tuple(sum(1 for r in rows if r > c) for c in range(rows[0]))


def generate_symmetric_direct(size: int) -> Iterator[Tableau]:
    """All symmetric tableaux of ``size``, by search over self-conjugate
    shapes and subsets of below-diagonal cells."""
    n = _half(size)
    h = n + 1
    seen = set()
    for rows in self_conjugate_shapes(h):
        below = [(r, c) for r in range(1, h) for c in range(min(r, rows[r]))]
        for chosen in combinations(below, n):
            pts = [(0, 0)] + list(chosen) + [(c, r) for r, c in chosen]
            try:
                T = validate(rows, pts)
            except RuleViolation:
                continue
            if T not in seen:
                seen.add(T)
                yield T


def paired_insert(base: Tableau, i: int) -> Tableau:
    """Insert a line with its end point at edge ``i`` of a symmetric base, and
    the mirror line at the mirror edge.  No ribbons are added."""
    n = (base.size + 1) // 2
    if not is_symmetric(base):
        raise ValueError("base is not symmetric")
    if not 1 <= i <= n:
        raise IndexError(f"edge index {i} outside 1..{n}")
    mirror = len(base.word) + 1 - i
    return insert_line(insert_line(base, mirror), i)


def triplet_of_corner(T: Tableau, corner: Corner) -> SymTriplet:
    """Inverse of :func:`paired_insert` on one occupied corner."""
    if not corner.occupied:
        raise ValueError("corner is empty")
    r, c = corner.cell
    if r == c:
        raise ValueError("corner lies on the diagonal")
    if r > c:
        rho, low = "b", corner
    else:
        rho = "a"
        low = next(k for k in corners(T) if k.cell == (c, r))
    i = low.bottom_edge_index
    j = len(T.word) + 1 - i  # vertical edge to the right of the upper twin
    upper = (low.cell[1], low.cell[0])
    word, pts = _remove_line(T.word, list(T.points), j - 1, upper)
    # the lower twin keeps its edge index but may have moved
    word, pts = _remove_line(word, pts, i, edge_cell(word, i))
    return SymTriplet(Tableau(rows_from_word(word), pts), i, rho)


@lru_cache(maxsize=None)
def _histograms(size: int, direct: bool = False) -> tuple[Counter, int, int]:
    gen = generate_symmetric_direct if direct else generate_symmetric
    oc_hist = Counter()
    corner_total = 0
    count = 0
    for T in gen(size):
        cs = corners(T)
        oc_hist[sum(1 for k in cs if k.occupied)] += 1
        corner_total += len(cs)
        count += 1
    return oc_hist, corner_total, count


def oc_total_symmetric(size: int, direct: bool = False) -> int:
    return sum(k * v for k, v in _histograms(size, direct)[0].items())


@lru_cache(maxsize=None)
def Q_recurrence(n: int) -> IntPolynomial:
    """``Q_n' = 2n x Q_{n-1} + 2(1 - x^2) Q_{n-1}'`` with ``Q_n(1) = 2^n n!``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    prev = Q_recurrence(n - 1)
    rhs = X * prev * (2 * n) + (ONE - X * X) * 2 * prev.derivative()
    Q = rhs.antiderivative()
    Q = Q + IntPolynomial([2 ** n * factorial(n) - Q(1)])
    if any(a for k, a in enumerate(Q.coeffs) if k % 2):
        raise OddPowerPresent(str(Q))
    return Q


def Q_enum(n: int, direct: bool = False) -> IntPolynomial:
    return IntPolynomial.from_histogram(_histograms(2 * n + 1, direct)[0])


def b_recurrence_check(n: int, direct: bool = False) -> bool:
    """``2k b(n,k) = 2[2k b(n-1,k) + (n - 2(k-1)) b(n-1,k-1)]`` for k >= 1,
    where ``b(n,k)`` counts tableaux with 2k occupied corners."""
    if n < 2:
        raise ValueError("n must be at least 2")
    a = _histograms(2 * n + 1, direct)[0]
    b = _histograms(2 * n - 1, direct)[0]
    top = max(max(a), max(b)) // 2 + 2
    return all(
        2 * k * a[2 * k] == 2 * (2 * k * b[2 * k] + (n - 2 * (k - 1)) * b[2 * k - 2])
        for k in range(1, top)
    )


def variance_oc_symmetric(n: int) -> Fraction:
    """Variance of the occupied-corner count over symmetric tableaux of size
    2n+1, from the derivatives of ``Q_n`` at 1."""
    return variance_from_polynomial(Q_recurrence(n))


def conjecture_corners_symmetric(n: int) -> Fraction:
    return Fraction(2 ** n * n * (4 * n + 13), 12)


def conjecture_corners_symmetric_average(n: int) -> Fraction:
    """Total implied by an average of (4n+13)/12 corners per tableau."""
    return Fraction(2 ** n * factorial(n) * (4 * n + 13), 12)


def corners_total_symmetric(size: int, direct: bool = False, average: bool = False) -> ConjectureCheck:
    """Enumerated corner total against the closed form, read literally or,
    with ``average``, as 2^n n! times the average corner count."""
    n = _half(size)
    got = _histograms(size, direct)[1]
    want = (conjecture_corners_symmetric_average if average else conjecture_corners_symmetric)(n)
    return ConjectureCheck(n, got, want, want.denominator == 1, got == want)
