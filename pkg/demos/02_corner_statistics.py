"""Occupied corners: their total, their distribution and its variance."""
from math import factorial

from treelike.statistics import P_enum, P_recurrence, corners_total, stat_report, variance_oc

# %% The total number of occupied corners over all tableaux of size n is n!.
for n in range(1, 8):
    rep = stat_report(n)
    print(f"n={n}: {rep.total_tableaux} tableaux, {rep.total_oc} occupied corners, histogram {rep.oc_histogram}")

# %% The histogram polynomial satisfies a first-order differential recurrence,
# which reaches sizes far beyond enumeration.
for n in range(1, 8):
    assert P_enum(n) == P_recurrence(n)
print("P_10 =", P_recurrence(10))
print("P_30(1) == 30!:", P_recurrence(30)(1) == factorial(30))

# %% Variance of the occupied-corner count.
print([str(variance_oc(n)) for n in range(2, 12)])

# %% All corners, occupied or not, against the conjectured n!(n+4)/6.
for n in range(1, 8):
    c = corners_total(n)
    print(n, c.enumerated, c.conjectured, c.status)
