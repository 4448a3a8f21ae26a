"""Classes of tableaux with the same points, seen as lattice paths."""
from treelike.paths import (
    border_subpath, canonical_representative, cc, member_path, partition_classes, path_corners,
    paths_below, shift_inverse, shift_map,
)
from treelike.tableau import corners

# %% A class of five tableaux of size 5.
classes = partition_classes(5)
members = next(m for m in classes.values() if len(m) == 5)
canon = canonical_representative(members)
P = border_subpath(canon)
print("canonical representative:\n" + str(canon))
print("its border between extreme corners:", P)
for T in members:
    Q = member_path(T, canon)
    print(Q, "oc =", sum(c.occupied for c in corners(T)), "cc =", cc(P, Q))

# %% Every path below P is hit exactly once by shifting at a common corner.
P = "ENEENENN"
for Q in paths_below(P):
    for c in sorted(set(path_corners(P)) & set(path_corners(Q))):
        R = shift_map(P, Q, c)
        assert shift_inverse(P, R) == (Q, c)
        print(f"{Q} at {c} -> {R}")
print(len(paths_below(P)), "paths below", P)
