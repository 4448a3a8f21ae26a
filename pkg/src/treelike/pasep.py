"""
Exclusion process on n sites with entry on the left and exit on the right.

States are strings over ``"1"`` (particle) and ``"0"`` (empty site); the
symbols ``•`` and ``∘`` are accepted on input.  Projecting every tableau of
size n+1 to the interior of its border word gives a distribution on states,
which at unit rates coincides with the stationary law of the chain below.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np

from .statistics import survey

__all__ = [
    "InvalidParams", "NotIrreducible", "PasepParams", "StateDistribution",
    "states", "normalize_state", "X_of_state", "corner_count_of_state",
    "tableau_distribution", "transition_matrix", "stationary", "expected_X",
    "expected_X_from_distribution", "mc_sample", "total_variation",
]

Matrix = list[list[Fraction]]


class InvalidParams(ValueError):
    pass


class NotIrreducible(ArithmeticError):
    pass


def _rate(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(str(v))


@dataclass(frozen=True)
class PasepParams:
    """Entry rate ``alpha``, exit rate ``beta``, left-hop rate ``q``.
    Right hops happen with probability 1; the reverse boundary moves are off."""
    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(1)
    q: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("alpha", "beta", "q"):
            try:
                v = _rate(getattr(self, name))
            except (ValueError, ZeroDivisionError):
                raise InvalidParams(f"{name} is not a rational number") from None
            if not 0 <= v <= 1:
                raise InvalidParams(f"{name}={v} outside [0, 1]")
            object.__setattr__(self, name, v)


@dataclass
class StateDistribution:
    probs: dict[str, Fraction | float] = field(default_factory=dict)

    def __getitem__(self, s: str):
        return self.probs.get(normalize_state(s), 0)

    def total(self):
        return sum(self.probs.values())

    def to_json(self) -> dict:
        return {
            s: str(p) if isinstance(p, Fraction) else float(p)
            for s, p in sorted(self.probs.items())
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def states(n: int) -> list[str]:
    return ["".join(p) for p in product("01", repeat=n)]


def normalize_state(s: str) -> str:
    s = s.replace("•", "1").replace("∘", "0")
    if set(s) - {"0", "1"}:
        raise ValueError(f"state {s!r} has symbols other than 0/1")
    return s


def corner_count_of_state(s: str) -> int:
    """Corners of any tableau whose border interior spells ``s``."""
    s = normalize_state(s)
    return ("1" + s + "0").count("10")


def X_of_state(s: str) -> int:
    return 2 * corner_count_of_state(s) - 1


def tableau_distribution(n: int, threads: int = 1) -> StateDistribution:
    if n < 0:
        raise ValueError("n must be non-negative")
    counts = survey(n + 1, threads).state_count
    Z = factorial(n + 1)
    return StateDistribution({s: Fraction(counts[s], Z) for s in states(n) if counts[s]})


def _moves(s: str, params: PasepParams) -> list[tuple[str, Fraction]]:
    """Target state and probability for each of the n+1 locations."""
    n = len(s)
    out = []
    # location 0: left boundary
    out.append(("1" + s[1:], params.alpha) if s[0] == "0" else (s, Fraction(0)))
    for i in range(n - 1):
        pair = s[i:i + 2]
        if pair == "10":
            out.append((s[:i] + "01" + s[i + 2:], Fraction(1)))
        elif pair == "01":
            out.append((s[:i] + "10" + s[i + 2:], params.q))
        else:
            out.append((s, Fraction(0)))
    out.append((s[:-1] + "0", params.beta) if s[-1] == "1" else (s, Fraction(0)))
    return out


def transition_matrix(n: int, params: PasepParams | None = None) -> tuple[list[str], Matrix]:
    """Row-stochastic matrix indexed by :func:`states` ``(n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    params = params or PasepParams()
    labels = states(n)
    index = {s: k for k, s in enumerate(labels)}
    pick = Fraction(1, n + 1)
    M = [[Fraction(0)] * len(labels) for _ in labels]
    for s in labels:
        row = M[index[s]]
        for t, p in _moves(s, params):
            row[index[t]] += pick * p
        row[index[s]] += 1 - sum(row)
    return labels, M


def stationary(M: Matrix, labels: list[str] | None = None) -> StateDistribution:
    """Solve ``pi M = pi`` with ``sum(pi) = 1`` by exact elimination."""
    size = len(M)
    labels = labels or [str(k) for k in range(size)]
    # rows of (M^T - I), last equation replaced by normalization; sparse rows
    rows = []
    for j in range(size - 1):
        r = {i: M[i][j] for i in range(size) if M[i][j]}
        r[j] = r.get(j, Fraction(0)) - 1
        rows.append({k: v for k, v in r.items() if v})
    rows.append({i: Fraction(1) for i in range(size)})
    rhs = [Fraction(0)] * (size - 1) + [Fraction(1)]

    pivots = []
    for col in range(size):
        p = next((k for k in range(col, size) if rows[k].get(col)), None)
        if p is None:
            raise NotIrreducible("the stationary equations have a degenerate kernel")
        rows[col], rows[p] = rows[p], rows[col]
        rhs[col], rhs[p] = rhs[p], rhs[col]
        piv = rows[col]
        inv = Fraction(1) / piv[col]
        for k in range(col + 1, size):
            f = rows[k].get(col)
            if not f:
                continue
            f *= inv
            r = rows[k]
            for c, v in piv.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
            rhs[k] -= f * rhs[col]
        pivots.append(col)

    pi = [Fraction(0)] * size
    for col in reversed(range(size)):
        r = rows[col]
        acc = rhs[col] - sum(v * pi[c] for c, v in r.items() if c > col)
        pi[col] = acc / r[col]
    return StateDistribution({labels[k]: pi[k] for k in range(size) if pi[k]})


def expected_X(n: int, threads: int = 1) -> Fraction:
    """Mean of 2c(T) - 1 over all tableaux of size n+1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    s = survey(n + 1, threads)
    return Fraction(2 * s.corner_total, s.total) - 1


def expected_X_from_distribution(dist: StateDistribution) -> Fraction:
    return sum(p * X_of_state(s) for s, p in dist.probs.items())


def mc_sample(
    n: int,
    params: PasepParams | None = None,
    steps: int = 10**6,
    seed: int = 0,
    chains: int = 1024,
    burn_in: int = 1000,
) -> StateDistribution:
    """Empirical state frequencies from an ensemble of independent chains.

    ``steps`` is the total number of recorded samples, split evenly across
    ``chains``; each chain first runs ``burn_in`` unrecorded steps.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    params = params or PasepParams()
    labels = states(n)
    index = {s: k for k, s in enumerate(labels)}
    nxt = np.empty((len(labels), n + 1), dtype=np.int64)
    prob = np.empty((len(labels), n + 1))
    for s in labels:
        for loc, (t, p) in enumerate(_moves(s, params)):
            nxt[index[s], loc] = index[t]
            prob[index[s], loc] = float(p)

    chains = max(1, min(chains, steps))
    per_chain = -(-steps // chains)
    rng = np.random.default_rng(seed)
    cur = rng.integers(len(labels), size=chains)
    counts = np.zeros(len(labels), dtype=np.int64)
    for t in range(burn_in + per_chain):
        loc = rng.integers(n + 1, size=chains)
        move = rng.random(chains) < prob[cur, loc]
        cur = np.where(move, nxt[cur, loc], cur)
        if t >= burn_in:
            counts += np.bincount(cur, minlength=len(labels))
    total = counts.sum()
    return StateDistribution({labels[k]: float(counts[k] / total) for k in range(len(labels)) if counts[k]})


def total_variation(a: StateDistribution, b: StateDistribution) -> float:
    keys = set(a.probs) | set(b.probs)
    return 0.5 * sum(abs(float(a.probs.get(k, 0)) - float(b.probs.get(k, 0))) for k in keys)
