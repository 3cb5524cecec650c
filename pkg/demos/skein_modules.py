"""Skein modules of holed disks from colorings of trivalent spines.

Run: python demos/skein_modules.py
"""

from tlj.skein import (
    HIMove,
    apply_hi,
    enumerate_colorings,
    hi_matrix,
    library,
    pentagon_paths_agree,
    read_spine,
    spine_isomorphism,
    transport,
    verlinde_dimension,
)

print("packaged spines:", ", ".join(library()))

# The two spines of the doubly holed disk.  At n = 3 both are 4-dimensional.
dumbbell = read_spine("two_holed_dumbbell")
theta = read_spine("two_holed_theta")
for name, s in [("dumbbell", dumbbell), ("theta", theta)]:
    b = enumerate_colorings(s, 3)
    print(f"{name}: {b.dimension} colorings", [c.as_tuple() for c in b.colorings])

# One HI move on the bar of the dumbbell gives the theta spine.
moved = apply_hi(dumbbell, HIMove(0))
print("dumbbell --HI--> theta:", spine_isomorphism(moved, theta) is not None)

m = hi_matrix(dumbbell, HIMove(0), 3)
print("change of basis at n = 3:")
for row in m.entries:
    print("  [" + ", ".join(str(x) for x in row) + "]")

# Undoing the move gives back the identity matrix.
end, mat = transport(dumbbell, [HIMove(0, 0), HIMove(0, 1)], 4)
print("there and back at n = 4 is the identity:", all(
    (mat[i][j] == (1 if i == j else 0)) for i in range(len(mat)) for j in range(len(mat))
))

# Annulus and Verlinde-style counts.
print()
for n in range(3, 7):
    dims = [verlinde_dimension(h, n) for h in (1, 2, 3)]
    print(f"n = {n}: holes 1, 2, 3 -> {dims}")

# Two HI paths around the pentagon give the same composite matrix.
print()
for labels in [(1, 1, 1, 1, 0), (1, 1, 1, 1, 2), (1, 2, 2, 1, 2)]:
    print(f"pentagon {labels} at n = 5:", pentagon_paths_agree(labels, 5))
