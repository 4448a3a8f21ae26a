from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from treelike.paths import (
    NotBelow, NotCommonCorner, border_subpath, canonical_representative, cc, corner_bounded_paths,
    is_below, member_path, partition_classes, path_corners, paths_below, shift_inverse, shift_map,
)
from treelike.tableau import corners


def _oc(T):
    return sum(c.occupied for c in corners(T))


def _brute_below(P):
    # every arrangement of the same steps, filtered by the prefix test
    n, k = len(P), P.count("N")
    out = []
    for ns in combinations(range(n), k):
        Q = "".join("N" if j in ns else "E" for j in range(n))
        if is_below(Q, P):
            out.append(Q)
    return sorted(out)


def test_small_paths():
    assert paths_below("EN") == ["EN"]
    assert sorted(paths_below("ENEN")) == ["EENN", "ENEN"]


@given(st.text("EN", max_size=12))
def test_paths_below_matches_brute_force(P):
    assert sorted(paths_below(P)) == _brute_below(P)


@given(st.text("EN", min_size=2, max_size=12))
def test_cc_of_itself(P):
    assert cc(P, P) == len(path_corners(P))


def test_cc_requires_below():
    with pytest.raises(NotBelow):
        cc("EENN", "ENEN")


def test_shift_requires_common_corner():
    with pytest.raises(NotCommonCorner):
        shift_map("ENEN", "EENN", (1, 0))


def test_shift_at_last_corner_is_identity():
    P = "ENEENN"
    assert shift_map(P, P, path_corners(P)[-1]) == P
    assert shift_inverse(P, P) == (P, path_corners(P)[-1])


def test_three_common_corners():
    P = "ENEENENN"
    common = sorted(set(path_corners(P)))
    assert cc(P, P) == 3
    images = [shift_map(P, P, c) for c in common]
    assert images == ["EEENENNN", "ENEEENNN", "ENEENENN"]
    for c, R in zip(common, images):
        assert is_below(R, P)
        assert shift_inverse(P, R) == (P, c)


@pytest.mark.parametrize("max_steps", [12])
def test_path_theorem(max_steps):
    count = 0
    for P in corner_bounded_paths(max_steps):
        below = paths_below(P)
        assert sum(cc(P, Q) for Q in below) == len(below)
        pairs = [(Q, c) for Q in below for c in sorted(set(path_corners(P)) & set(path_corners(Q)))]
        images = [shift_map(P, Q, c) for Q, c in pairs]
        assert Counter(images) == Counter(below)
        for pair, R in zip(pairs, images):
            assert shift_inverse(P, R) == pair
        count += 1
    assert count == 1 + sum(2 ** k for k in range(0, max_steps - 3))


def test_single_class():
    classes = partition_classes(1)
    assert len(classes) == 1
    (members,) = classes.values()
    assert canonical_representative(members) == members[0]


def test_class_of_five():
    found = []
    for members in partition_classes(5).values():
        if sorted(map(_oc, members), reverse=True) == [3, 1, 1, 0, 0]:
            found.append(members)
    assert found
    for members in found:
        canon = canonical_representative(members)
        assert _oc(canon) == 3 == len(corners(canon))
        assert len(paths_below(border_subpath(canon))) == 5


@pytest.mark.parametrize("n", range(1, 8))
def test_class_theorem(n):
    classes = partition_classes(n)
    assert sum(len(m) for m in classes.values()) == len({T for m in classes.values() for T in m})
    for members in classes.values():
        canon = canonical_representative(members)
        P = border_subpath(canon)
        assert sum(map(_oc, members)) == len(members)
        mapped = [member_path(T, canon) for T in members]
        assert sorted(mapped) == sorted(paths_below(P))
        for T, Q in zip(members, mapped):
            assert _oc(T) == cc(P, Q)
