"""The exclusion process seen through tableau borders."""
from fractions import Fraction

from treelike.pasep import (
    PasepParams, X_of_state, expected_X, mc_sample, stationary, tableau_distribution,
    total_variation, transition_matrix,
)

# %% At unit rates the stationary law equals the share of tableaux over each state.
n = 3
labels, M = transition_matrix(n)
exact = stationary(M, labels)
proj = tableau_distribution(n)
for s in labels:
    print(s, exact[s], proj[s], "X =", X_of_state(s))
print("identical:", exact.probs == proj.probs)

# %% Mean number of possible jumps.
print([str(expected_X(n)) for n in range(1, 8)], [str(Fraction(n + 2, 3)) for n in range(1, 8)])

# %% Simulation against the exact answer, and a chain with other rates.
emp = mc_sample(n, steps=10**6, seed=1)
print("total variation:", total_variation(emp, exact))
labels, M = transition_matrix(n, PasepParams("1/2", "1/3", "1/4"))
print(stationary(M, labels).to_json())
