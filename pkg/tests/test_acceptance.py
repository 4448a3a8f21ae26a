"""Acceptance criteria 1-14, each at its stated scale and tolerance.

Run alone with ``pytest tests/test_acceptance.py``; the summary at the end of
the run lists one PASS/FAIL/FLAGGED line per criterion.  Conjectural checks
are reported with their status rather than asserted.
"""
import time
from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

from treelike import pasep, paths, permutations as perm, statistics as st, symmetric as sym
from treelike.insertion import encode, generate_all
from treelike.polynomial import variance_from_polynomial
from treelike.tableau import corners, validate

from conftest import ACCEPTANCE

P10 = (1193760, 1475280, 748800, 188640, 21600, 720)
Q9 = (109405056, 0, 61380480, 0, 13566720, 0, 1386240, 0, 55680, 0, 384)


def record(num, ok, detail, flagged=False):
    if flagged:
        status = "FLAGGED-MATCH" if ok else "FLAGGED-MISMATCH"
    else:
        status = "PASS" if ok else "FAIL"
    line = f"criterion {num:>3}: {status:<16} {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok or flagged, detail


def test_01_cardinality():
    counts, slowest = {}, 0.0
    for n in range(1, 10):
        t = time.perf_counter()
        seen = set()
        for T, _, _ in generate_all(n):
            seen.add(validate(T.rows, T.points))
        slowest = time.perf_counter() - t
        counts[n] = len(seen)
    ok = all(counts[n] == factorial(n) for n in counts) and slowest < 60
    record(1, ok, f"n!=distinct valid for n=1..9 ({counts[9]} at n=9, {slowest:.1f}s incl. validation)")


def test_02_occupied_total():
    got = {n: st.oc_total(n) for n in range(1, 10)}
    bad = [n for n, v in got.items() if v != factorial(n)]
    record(2, not bad, f"oc total = n! for n=1..9; mismatches {bad}")


def test_03_polynomials():
    bad = [n for n in range(1, 10) if st.P_recurrence(n) != st.P_enum(n)]
    p10 = st.P_recurrence(10).coeffs == P10
    record(3, not bad and p10, f"P_rec = P_enum for n=1..9 (mismatches {bad}); P_10 printed match {p10}")


def test_04_coefficient_recurrence():
    bad = [n for n in range(2, 10) if not st.a_recurrence_check(n)]
    record(4, not bad, f"coefficient recurrence for n=2..9; failures {bad}")


def test_05a_variance():
    bad = [n for n in range(2, 10)
           if not st.variance_oc(n) == st.stat_report(n).variance == Fraction(n - 2, n)]
    record("5a", not bad, f"variance (n-2)/n for n=2..9, recurrence and enumeration; failures {bad}")


def test_05b_symmetric_variance():
    got = {n: variance_from_polynomial(sym.Q_enum(n)) for n in range(1, 5)}
    want = {n: Fraction(n - 1, n) for n in got}
    bad = {n: f"{got[n]} vs {want[n]}" for n in got if got[n] != want[n]}
    record("5b", not bad, f"symmetric variance (n-1)/n for n=1..4; observed vs stated {bad}")


def test_06_kth_point_in_corner():
    bad = []
    for n in range(2, 9):
        hist = st.survey(n).pk_in_corner
        bad += [(n, k) for k in range(2, n + 1) if perm.count_pk_in_corner(n, k) != hist[k]]
    sums = all(perm.count_pk_in_corner_sum(n) == factorial(n) for n in range(2, 13))
    record(6, not bad and sums, f"closed form = enumeration for 2<=k<=n<=8 (bad {bad}); sums n! to 12: {sums}")


def test_07_phi_bijection():
    example = perm.phi((1, 3, 2, 2, 1, 4))
    text = "".join(map(str, example))
    bad = 0
    for n in range(1, 9):
        for T, code, _ in generate_all(n):
            if perm.phi_inverse(perm.phi(code)) != code or encode(T) != code:
                bad += 1
        for sigma in permutations(range(1, n + 1)):
            if perm.phi(perm.phi_inverse(sigma)) != sigma:
                bad += 1
    record(7, bad == 0 and text == "6275314", f"roundtrips for n<=8 (failures {bad}); example gives {text}")


def test_08_corner_conditions():
    bad = 0
    for n in range(2, 9):
        for T, code, trace in generate_all(n):
            if perm.corner_indices_geom(T, trace) != perm.corner_indices_perm(perm.phi(code)):
                bad += 1
    record(8, bad == 0, f"geometric = permutation corner sets for n<=8; failures {bad}")


def test_09_symmetric():
    problems = []
    for size in (1, 3, 5, 7, 9):
        h = (size - 1) // 2
        filtered = set(sym.generate_symmetric(size))
        if filtered != set(sym.generate_symmetric_direct(size)):
            problems.append(f"generators differ at {size}")
        if len(filtered) != 2 ** h * factorial(h) or sym.oc_total_symmetric(size) != 2 ** h * factorial(h):
            problems.append(f"count/oc at {size}")
    big = list(sym.generate_symmetric_direct(11))
    oc11 = sum(sum(c.occupied for c in corners(T)) for T in big)
    if len(big) != 3840 or oc11 != 3840:
        problems.append(f"size 11: {len(big)} tableaux, oc {oc11}")
    for n in range(1, 5):
        if sym.Q_recurrence(n) != sym.Q_enum(n):
            problems.append(f"Q_{n}")
    q9 = sym.Q_recurrence(9).coeffs == Q9
    record(9, not problems and q9, f"2^n n! counts and oc to size 11, Q_rec = Q_enum n<=4, "
                                   f"Q_9 printed match {q9}; problems {problems}")


def test_10_classes_and_paths():
    bad_classes = 0
    for n in range(1, 9):
        for members in paths.partition_classes(n).values():
            canon = paths.canonical_representative(members)
            total = sum(sum(c.occupied for c in corners(T)) for T in members)
            if total != len(members) or len(paths.paths_below(paths.border_subpath(canon))) != len(members):
                bad_classes += 1
    bad_paths = bad_shift = 0
    for P in paths.corner_bounded_paths(12):
        below = paths.paths_below(P)
        if sum(paths.cc(P, Q) for Q in below) != len(below):
            bad_paths += 1
        images = []
        for Q in below:
            for c in sorted(set(paths.path_corners(P)) & set(paths.path_corners(Q))):
                R = paths.shift_map(P, Q, c)
                images.append(R)
                bad_shift += paths.shift_inverse(P, R) != (Q, c)
        bad_shift += Counter(images) != Counter(below)
    ok = bad_classes == bad_paths == bad_shift == 0
    record(10, ok, f"classes n<=8 bad {bad_classes}; paths <=12 steps bad {bad_paths}; shift bad {bad_shift}")


def test_11_pasep():
    bad = []
    for n in range(1, 8):
        labels, M = pasep.transition_matrix(n)
        if pasep.stationary(M, labels).probs != pasep.tableau_distribution(n).probs:
            bad.append(n)
    ex = [n for n in range(1, 9) if pasep.expected_X(n) != Fraction(n + 2, 3)]
    record(11, not bad and not ex, f"stationary = projection n<=7 (bad {bad}); E(X)=(n+2)/3 n<=8 (bad {ex})")


def test_12_corner_conjectures():
    c1 = [st.corners_total(n) for n in range(2, 10)]
    c2 = [sym.corners_total_symmetric(s) for s in (3, 5, 7, 9)]
    c2avg = [sym.corners_total_symmetric(s, average=True) for s in (3, 5, 7, 9)]
    all_match = all(c.match for c in c1) and all(c.match for c in c2 if c.integral)
    detail = (
        f"n!(n+4)/6: {sorted({c.status for c in c1})} for n=2..9; "
        "2^n n (4n+13)/12: " + ", ".join(f"n={c.n} {c.enumerated} vs {c.conjectured} {c.status}" for c in c2)
        + "; average reading: " + ", ".join(f"n={c.n} {c.status}" for c in c2avg)
    )
    record(12, all_match, detail, flagged=True)


def test_13_no_occupied_corners():
    pairs = {n: (st.P_enum(n)[0], st.perms_without_consecutive_cycles(n)) for n in range(1, 9)}
    match = all(a == b for a, b in pairs.values())
    record(13, match, f"P_n(0) vs brute force for n<=8: {[a for a, _ in pairs.values()]} match {match}",
           flagged=True)


def test_14_monte_carlo():
    labels, M = pasep.transition_matrix(5)
    exact = pasep.stationary(M, labels)
    a = pasep.mc_sample(5, steps=10**7, seed=2024)
    b = pasep.mc_sample(5, steps=10**7, seed=2024)
    tv = pasep.total_variation(a, exact)
    record(14, tv < 0.02 and a.probs == b.probs, f"n=5, 1e7 steps: TV {tv:.5f} < 0.02, repeatable {a.probs == b.probs}")
