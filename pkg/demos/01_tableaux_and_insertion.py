"""Building tree-like tableaux one point at a time.

Every tableau of size n comes from the one-cell tableau through a unique
sequence of insertions, so listing insertion codes lists tableaux.
"""
from treelike import decode, encode, generate_all, insert_point
from treelike.insertion import ROOT, ribbon_cells
from treelike.tableau import corners, special_point

# %% The two tableaux of size 2: insert at the bottom edge or the right edge.
for i in (1, 2):
    T = insert_point(ROOT, i)
    print(f"edge {i}:\n{T}\n")

# %% Inserting to the left of the special point adds a ribbon of empty cells.
row = insert_point(ROOT, 2)
print("special point of the row:", special_point(row))
print("ribbon when inserting at edge 1:", ribbon_cells(row, 1))
print(insert_point(row, 1), "\n")

# %% A size-7 example, decoded from its code and encoded back.
T, trace = decode((1, 3, 2, 2, 1, 4))
print(T)
print("border word:", T.word)
print("corners:", [(c.cell, "occupied" if c.occupied else "empty") for c in corners(T)])
print("insertion order of the points:", trace)
print("code recovered:", encode(T))

# %% Counting: n! tableaux of size n.
for n in range(1, 8):
    print(n, sum(1 for _ in generate_all(n)))
