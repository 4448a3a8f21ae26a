from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from treelike.insertion import code_from_full, decode, generate_all
from treelike.permutations import (
    DomainError, corner_indices_code, corner_indices_geom, corner_indices_perm,
    count_pk_in_corner, count_pk_in_corner_sum, non_inversion_table, phi, phi_inverse,
)
from treelike.tableau import Tableau, corners

from conftest import codes


def test_phi_worked_example():
    assert phi(code_from_full((1, 1, 3, 2, 2, 1, 4))) == (6, 2, 7, 5, 3, 1, 4)
    assert (1,) + phi_inverse((6, 2, 7, 5, 3, 1, 4)) == (1, 1, 3, 2, 2, 1, 4)


def test_phi_small():
    assert phi(()) == (1,)
    assert phi(tuple(range(2, 6))) == (1, 2, 3, 4, 5)
    assert phi_inverse((1, 2, 3, 4)) == (2, 3, 4)


def test_non_inversion_table():
    assert non_inversion_table((6, 2, 7, 5, 3, 1, 4)) == (0, 0, 2, 1, 1, 0, 3)


def test_phi_inverse_rejects_non_permutations():
    with pytest.raises(ValueError):
        phi_inverse((1, 1, 2))


def _removal_oracle(full):
    # reference: repeatedly delete the m-th remaining letter, last code entry first
    letters = list(range(1, len(full) + 1))
    removed = [letters.pop(m - 1) for m in reversed(full)]
    return tuple(reversed(removed))


@given(codes(max_size=10))
def test_phi_matches_removal_oracle(code):
    assert phi(code) == _removal_oracle((1,) + code)


@given(st.permutations(range(1, 10)))
def test_phi_roundtrip_random(sigma):
    sigma = tuple(sigma)
    assert phi(phi_inverse(sigma)) == sigma


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_bijective(n):
    images = {phi(code) for _, code, _ in generate_all(n)}
    assert len(images) == factorial(n)
    for sigma in permutations(range(1, n + 1)):
        assert phi(phi_inverse(sigma)) == sigma


def test_corner_sets_on_worked_example(worked_tableau):
    code = code_from_full((1, 1, 3, 2, 2, 1, 4))
    T, trace = decode(code)
    assert corner_indices_geom(T, trace) == corner_indices_perm((6, 2, 7, 5, 3, 1, 4)) == {7}
    assert corner_indices_code(code) == {7}


def test_corner_sets_extremes():
    assert corner_indices_perm((1, 2, 3, 4)) == {4}
    assert corner_indices_perm((4, 3, 2, 1)) == {4}
    row = Tableau((4,), ((0, 0), (0, 1), (0, 2), (0, 3)))
    assert corner_indices_geom(row, {(0, k): k + 1 for k in range(4)}) == {4}


@pytest.mark.parametrize("n", range(2, 8))
def test_corner_descriptions_agree(n):
    for T, code, trace in generate_all(n):
        g = corner_indices_geom(T, trace)
        assert g == corner_indices_perm(phi(code)) == corner_indices_code(code)
        # the root is never in a corner once n >= 2
        assert len(g) == sum(c.occupied for c in corners(T))


def test_pk_formula_small():
    assert count_pk_in_corner(3, 2) == 1
    assert count_pk_in_corner(3, 3) == 5
    with pytest.raises(DomainError):
        count_pk_in_corner(3, 1)
    with pytest.raises(DomainError):
        count_pk_in_corner(3, 4)


@pytest.mark.parametrize("n", range(2, 13))
def test_pk_formula_sums_to_factorial(n):
    assert count_pk_in_corner_sum(n) == factorial(n)
