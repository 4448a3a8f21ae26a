"""Tableaux that equal their own transpose."""
from treelike.symmetric import (
    Q_enum, Q_recurrence, corners_total_symmetric, generate_symmetric_direct, paired_insert,
    triplet_of_corner, variance_oc_symmetric,
)
from treelike.tableau import corners

# %% Counts and occupied-corner totals are both 2^n n!.
for size in (1, 3, 5, 7, 9, 11):
    tabs = list(generate_symmetric_direct(size))
    oc = sum(sum(c.occupied for c in corners(T)) for T in tabs)
    print(f"size {size}: {len(tabs)} tableaux, {oc} occupied corners")

# %% Each occupied corner comes from a smaller symmetric tableau by inserting a
# line and its mirror image.
T = next(T for T in generate_symmetric_direct(7) if any(c.occupied for c in corners(T)))
print(T)
for c in corners(T):
    if c.occupied:
        t = triplet_of_corner(T, c)
        print(c.cell, "<- base", t.base.rows, "edge", t.i, "side", t.rho, paired_insert(t.base, t.i) == T)

# %% Generating polynomials and the variance of the occupied-corner count.
for n in range(1, 5):
    print(f"Q_{n} = {Q_recurrence(n)}   (enumerated: {Q_enum(n, direct=True)})   variance {variance_oc_symmetric(n)}")

# %% Corner totals against the closed form, literally and as an average.
for size in (3, 5, 7, 9):
    lit, avg = corners_total_symmetric(size), corners_total_symmetric(size, average=True)
    print(size, lit.enumerated, lit.conjectured, lit.status, avg.conjectured, avg.status)
