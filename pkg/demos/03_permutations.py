"""Tableaux as permutations, and which inserted points land in corners."""
from treelike import decode, generate_all, phi, phi_inverse
from treelike.permutations import corner_indices_geom, corner_indices_perm, count_pk_in_corner

code = (1, 3, 2, 2, 1, 4)
sigma = phi(code)
print("code 1," + ",".join(map(str, code)), "->", "".join(map(str, sigma)))
print("back:", phi_inverse(sigma))

# %% The k-th inserted point sits in a corner exactly when the permutation
# satisfies two local conditions at k.
T, trace = decode(code)
print(corner_indices_geom(T, trace), corner_indices_perm(sigma))

# %% How often p_k is in a corner, closed form against enumeration.
n = 6
seen = {k: 0 for k in range(2, n + 1)}
for T, _, trace in generate_all(n):
    for k in corner_indices_geom(T, trace):
        seen[k] += 1
for k in range(2, n + 1):
    print(k, count_pk_in_corner(n, k), seen[k])
