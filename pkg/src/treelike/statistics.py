"""
Corner statistics over all tableaux of a given size.

Exhaustive aggregates are gathered in a single pass by :func:`survey`, which
can split the enumeration by code prefix over worker processes.  The
generating polynomial ``P_n(x) = sum over T of x**oc(T)`` is available both
from that histogram and from its differential recurrence.
"""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .insertion import _remove_line, generate_all, insert_line
from .permutations import corner_indices_geom
from .polynomial import ONE, X, IntPolynomial, variance_from_polynomial
from .tableau import Corner, Tableau, TableauError, corners, project_state, tableau_from_word

__all__ = [
    "NotOccupied", "Survey", "survey", "StatReport", "stat_report",
    "ConjectureCheck", "oc_total", "removal_bijection", "restore_corner",
    "P_recurrence", "P_enum", "a_recurrence_check", "variance_oc",
    "corners_total", "conjecture_corners", "perms_without_consecutive_cycles",
]


class NotOccupied(TableauError):
    pass


@dataclass
class Survey:
    """Aggregates over one enumeration of all tableaux of size ``n``."""
    n: int
    total: int = 0
    oc_hist: Counter = field(default_factory=Counter)
    corner_total: int = 0
    pk_in_corner: Counter = field(default_factory=Counter)
    # PASEP projection: tableau count and set of corner counts per state
    state_count: Counter = field(default_factory=Counter)
    state_corners: dict = field(default_factory=lambda: defaultdict(set))

    def add(self, T: Tableau, trace) -> None:
        cs = corners(T)
        oc = sum(1 for c in cs if c.occupied)
        self.total += 1
        self.oc_hist[oc] += 1
        self.corner_total += len(cs)
        for k in corner_indices_geom(T, trace):
            self.pk_in_corner[k] += 1
        s = project_state(T)
        self.state_count[s] += 1
        self.state_corners[s].add(len(cs))

    def merge(self, other: "Survey") -> "Survey":
        self.total += other.total
        self.oc_hist.update(other.oc_hist)
        self.corner_total += other.corner_total
        self.pk_in_corner.update(other.pk_in_corner)
        self.state_count.update(other.state_count)
        for s, v in other.state_corners.items():
            self.state_corners[s] |= v
        return self

    @property
    def oc_total(self) -> int:
        return sum(k * v for k, v in self.oc_hist.items())


def _survey_prefix(args) -> Survey:
    n, prefix = args
    acc = Survey(n)
    for T, _, trace in generate_all(n, prefix):
        acc.add(T, trace)
    return acc


@lru_cache(maxsize=None)
def survey(n: int, threads: int = 1) -> Survey:
    if n < 1:
        raise ValueError("n must be at least 1")
    if threads <= 1 or n < 4:
        return _survey_prefix((n, ()))
    prefixes = [(n, (a, b)) for a in (1, 2) for b in (1, 2, 3)]
    acc = Survey(n)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_survey_prefix, prefixes):
            acc.merge(part)
    return acc


def oc_total(n: int, threads: int = 1) -> int:
    return survey(n, threads).oc_total


def removal_bijection(T: Tableau, corner: Corner) -> tuple[Tableau, int]:
    """Remove the line of an occupied corner that holds no other point.

    Returns the smaller tableau and the index of the corner's bottom edge;
    :func:`restore_corner` inverts it.
    """
    if not corner.occupied:
        raise NotOccupied(f"corner {corner.cell} is empty")
    if T.size < 2:
        raise ValueError("the root cannot be removed")
    i = corner.bottom_edge_index
    removed = _remove_line(T.word, list(T.points), i, corner.cell)
    assert removed is not None
    return tableau_from_word(*removed), i


def restore_corner(T: Tableau, i: int) -> Tableau:
    return insert_line(T, i)


@lru_cache(maxsize=None)
def P_recurrence(n: int) -> IntPolynomial:
    """``P_n' = n P_{n-1} + 2(1 - x) P_{n-1}'`` with ``P_n(1) = n!``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    prev = P_recurrence(n - 1)
    rhs = prev * n + (ONE - X) * 2 * prev.derivative()
    P = rhs.antiderivative()
    return P + IntPolynomial([factorial(n) - P(1)])


def P_enum(n: int, threads: int = 1) -> IntPolynomial:
    return IntPolynomial.from_histogram(survey(n, threads).oc_hist)


def a_recurrence_check(n: int, threads: int = 1) -> bool:
    """``k a(n,k) = 2k a(n-1,k) + (n - 2(k-1)) a(n-1,k-1)`` for all k >= 1,
    between enumerated histograms."""
    if n < 2:
        raise ValueError("n must be at least 2")
    a = survey(n, threads).oc_hist
    b = survey(n - 1, threads).oc_hist
    top = max(max(a), max(b)) + 2
    return all(
        k * a[k] == 2 * k * b[k] + (n - 2 * (k - 1)) * b[k - 1]
        for k in range(1, top)
    )


def variance_oc(n: int) -> Fraction:
    return variance_from_polynomial(P_recurrence(n))


@dataclass(frozen=True)
class ConjectureCheck:
    n: int
    enumerated: int
    conjectured: Fraction
    integral: bool
    match: bool

    @property
    def status(self) -> str:
        if not self.integral:
            return "flagged-outside-range"
        return "flagged-match" if self.match else "flagged-mismatch"

    def to_json(self) -> dict:
        return {
            "n": self.n, "enumerated": self.enumerated,
            "conjectured": str(self.conjectured), "integral": self.integral,
            "match": self.match, "status": self.status,
        }


def conjecture_corners(n: int) -> Fraction:
    return Fraction(factorial(n) * (n + 4), 6)


def corners_total(n: int, threads: int = 1) -> ConjectureCheck:
    got = survey(n, threads).corner_total
    want = conjecture_corners(n)
    return ConjectureCheck(n, got, want, want.denominator == 1, got == want)


def _has_consecutive_cycle(sigma: tuple[int, ...]) -> bool:
    # sigma is 0-based; a forbidden cycle is i -> i+1 -> ... -> i+j-1 -> i
    n = len(sigma)
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = sigma[x]
        lo, hi = min(cycle), max(cycle)
        if hi - lo + 1 == len(cycle) and all(
            sigma[v] == (v + 1 if v < hi else lo) for v in cycle
        ):
            return True
    return False


def perms_without_consecutive_cycles(n: int) -> int:
    if not 1 <= n <= 9:
        raise ValueError("brute force is limited to 1 <= n <= 9")
    return sum(1 for s in permutations(range(n)) if not _has_consecutive_cycle(s))


@dataclass
class StatReport:
    n: int
    total_tableaux: int
    total_oc: int
    total_corners: int
    oc_histogram: dict[int, int]
    variance: Fraction

    def to_json(self) -> dict:
        d = asdict(self)
        d["oc_histogram"] = {str(k): v for k, v in sorted(self.oc_histogram.items())}
        d["variance"] = str(self.variance)
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def stat_report(n: int, threads: int = 1) -> StatReport:
    s = survey(n, threads)
    hist = dict(sorted(s.oc_hist.items()))
    var = variance_from_polynomial(IntPolynomial.from_histogram(hist))
    return StatReport(n, s.total, s.oc_total, s.corner_total, hist, var)
