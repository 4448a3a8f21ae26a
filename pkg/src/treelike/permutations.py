"""
The bijection between insertion codes and permutations, and the two
descriptions of which inserted points end up in a corner.

Permutations are one-line words ``(sigma(1), ..., sigma(n))`` of 1..n.
"""
from __future__ import annotations

from math import factorial
from typing import Sequence

from .insertion import InsertionCode, PointTrace, check_code
from .tableau import Tableau, corners

Permutation = tuple[int, ...]

__all__ = [
    "Permutation", "DomainError", "phi", "phi_inverse", "non_inversion_table",
    "corner_indices_perm", "corner_indices_geom", "corner_indices_code",
    "count_pk_in_corner", "count_pk_in_corner_sum", "check_permutation",
]


class DomainError(ValueError):
    pass


def check_permutation(sigma: Sequence[int]) -> Permutation:
    sigma = tuple(int(v) for v in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def phi(code: Sequence[int]) -> Permutation:
    """Start from the word 12...n and remove the m_n-th remaining letter, then
    the m_{n-1}-th, and so on; the first letter removed goes last."""
    full = (1,) + check_code(code)
    letters = list(range(1, len(full) + 1))
    sigma = [0] * len(full)
    for i in range(len(full) - 1, -1, -1):
        sigma[i] = letters.pop(full[i] - 1)
    return tuple(sigma)


def non_inversion_table(sigma: Sequence[int]) -> tuple[int, ...]:
    """``t_j = #{i < j : sigma(i) < sigma(j)}`` for j = 1..n."""
    return tuple(sum(1 for a in sigma[:j] if a < sigma[j]) for j in range(len(sigma)))


def phi_inverse(sigma: Sequence[int]) -> InsertionCode:
    sigma = check_permutation(sigma)
    return tuple(t + 1 for t in non_inversion_table(sigma)[1:])


def corner_indices_perm(sigma: Sequence[int]) -> set[int]:
    """Indices k in 2..n with ``sigma(k-1) = sigma(k) + 1`` or
    ``sigma(k-1) < sigma(k)``, and ``sigma(j) > sigma(k) + 1`` for all j > k."""
    s = (None,) + check_permutation(sigma)
    n = len(s) - 1
    out = set()
    for k in range(2, n + 1):
        first = s[k - 1] == s[k] + 1 or s[k - 1] < s[k]
        if first and all(s[j] > s[k] + 1 for j in range(k + 1, n + 1)):
            out.add(k)
    return out


def corner_indices_code(code: Sequence[int]) -> set[int]:
    """The same set read off the insertion code: ``m_k >= m_{k-1}`` (no ribbon
    at that insertion) and ``m_j > m_k + 1`` for every later j."""
    m = (None, 1) + check_code(code)
    n = len(m) - 1
    return {
        k for k in range(2, n + 1)
        if m[k] >= m[k - 1] and all(m[j] > m[k] + 1 for j in range(k + 1, n + 1))
    }


def corner_indices_geom(T: Tableau, trace: PointTrace) -> set[int]:
    """Labels k >= 2 of the points that sit in a corner of ``T``."""
    return {trace[c.cell] for c in corners(T) if c.occupied and trace[c.cell] >= 2}


def count_pk_in_corner(n: int, k: int) -> int:
    """Number of tableaux of size n whose k-th inserted point is in a corner."""
    if not 2 <= k <= n:
        raise DomainError(f"need 2 <= k <= n, got k={k}, n={n}")
    q, r = divmod(factorial(n), (n - k + 2) * (n - k + 1))
    assert r == 0
    return q + (factorial(n - 1) if k == n else 0)


def count_pk_in_corner_sum(n: int) -> int:
    return sum(count_pk_in_corner(n, k) for k in range(2, n + 1))
