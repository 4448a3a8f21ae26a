"""
Non-ambiguous classes and their lattice-path restatement.

Tableaux with identical point sets form a class.  Each class has exactly one
member whose corners are all occupied (the canonical representative), and the
other members correspond to North/East lattice paths weakly below the part of
its border running from its Southwest-most to its Northeast-most corner.

Paths are strings over ``"E"`` and ``"N"``; a corner of a path is a vertex
reached by an East step and left by a North step.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterator

from .insertion import generate_all
from .tableau import Tableau, TableauError, corners

__all__ = [
    "NotBelow", "NotCommonCorner", "NoCanonical", "MultipleCanonical",
    "partition_classes", "canonical_representative", "border_subpath", "member_path",
    "is_below", "paths_below", "path_corners", "cc", "shift_map", "shift_inverse",
    "corner_bounded_paths", "check_path",
]

Vertex = tuple[int, int]


class NotBelow(ValueError):
    pass


class NotCommonCorner(ValueError):
    pass


class NoCanonical(TableauError):
    pass


class MultipleCanonical(TableauError):
    pass


def check_path(P: str) -> str:
    if set(P) - {"E", "N"}:
        raise ValueError(f"path {P!r} has steps other than E and N")
    return P


def partition_classes(n: int) -> dict[tuple, list[Tableau]]:
    classes = defaultdict(list)
    for T, _, _ in generate_all(n):
        classes[T.points].append(T)
    return dict(classes)


def canonical_representative(members: list[Tableau]) -> Tableau:
    full = [T for T in members if all(c.occupied for c in corners(T))]
    if not full:
        raise NoCanonical("no member has all its corners occupied")
    if len(full) > 1:
        raise MultipleCanonical(f"{len(full)} members have all corners occupied")
    return full[0]


def _as_path(word: str) -> str:
    return word.replace("H", "E").replace("V", "N")


def _vertices(word: str) -> list[Vertex]:
    # (column line, row line) visited by the border, row lines counted from the top
    y = word.count("V")
    x = 0
    out = [(x, y)]
    for e in word:
        if e == "H":
            x += 1
        else:
            y -= 1
        out.append((x, y))
    return out


def border_subpath(T: Tableau) -> str:
    """Border of ``T`` from its Southwest-most corner to its Northeast-most one."""
    w = T.word
    first = w.find("HV")
    last = w.rfind("HV")
    return _as_path(w[first:last + 2])


def member_path(T: Tableau, canonical: Tableau) -> str:
    """Border of ``T`` between the outer vertices of the canonical
    representative's extreme corners."""
    cs = corners(canonical)
    (r1, c1), (r2, c2) = cs[0].cell, cs[-1].cell
    start, end = (c1, r1 + 1), (c2 + 1, r2)
    verts = _vertices(T.word)
    try:
        i, j = verts.index(start), verts.index(end)
    except ValueError:
        raise TableauError("border does not pass through the canonical corners") from None
    return _as_path(T.word[i:j])


def _heights(P: str) -> list[int]:
    h = [0]
    for s in P:
        h.append(h[-1] + (s == "N"))
    return h


def is_below(Q: str, P: str) -> bool:
    if len(Q) != len(P) or Q.count("N") != P.count("N"):
        return False
    return all(a <= b for a, b in zip(_heights(Q), _heights(P)))


def paths_below(P: str) -> list[str]:
    """All paths with the endpoints of ``P`` that stay weakly below it."""
    check_path(P)
    ceiling = _heights(P)
    total_n = P.count("N")
    out = []

    def grow(prefix, height):
        k = len(prefix)
        if k == len(P):
            if height == total_n:
                out.append("".join(prefix))
            return
        remaining = len(P) - k
        if total_n - height < remaining:
            prefix.append("E")
            grow(prefix, height)
            prefix.pop()
        if height + 1 <= ceiling[k + 1] and height < total_n:
            prefix.append("N")
            grow(prefix, height + 1)
            prefix.pop()

    grow([], 0)
    return out


def path_corners(P: str) -> list[Vertex]:
    out = []
    x = y = 0
    for a, b in zip(P, P[1:]):
        if a == "E":
            x += 1
        else:
            y += 1
        if a == "E" and b == "N":
            out.append((x, y))
    return out


def cc(P: str, P2: str) -> int:
    """Number of corners ``P2`` shares with ``P``."""
    if not is_below(P2, P):
        raise NotBelow(f"{P2} is not weakly below {P}")
    return len(set(path_corners(P)) & set(path_corners(P2)))


def shift_map(P: str, P2: str, c: Vertex) -> str:
    if c not in path_corners(P) or c not in path_corners(P2):
        raise NotCommonCorner(f"{c} is not a corner of both paths")
    if c == path_corners(P)[-1]:
        return P2
    t = c[0] + c[1]  # index of the North step leaving c
    return P2[:t] + P2[t + 1:] + "N"


def _east_steps(P: str) -> list[Vertex]:
    out = []
    x = y = 0
    for s in P:
        if s == "E":
            out.append((x, y))
            x += 1
        else:
            y += 1
    return out


def shift_inverse(P: str, Q: str) -> tuple[str, Vertex]:
    if not is_below(Q, P):
        raise NotBelow(f"{Q} is not weakly below {P}")
    p_east = _east_steps(P)
    common = set(p_east) & set(_east_steps(Q))
    s = max(common)
    if s == p_east[-1]:
        return Q, path_corners(Q)[-1]
    t = s[0] + s[1] + 1  # first step after s
    assert Q[-1] == "N"
    return Q[:t] + "N" + Q[t:-1], (s[0] + 1, s[1])


def corner_bounded_paths(max_steps: int) -> Iterator[str]:
    """Paths that start with EN and end with EN, up to ``max_steps`` steps."""
    from itertools import product
    for length in range(2, max_steps + 1):
        if length == 2:
            yield "EN"
            continue
        if length == 3:
            continue
        for mid in product("EN", repeat=length - 4):
            yield "EN" + "".join(mid) + "EN"
