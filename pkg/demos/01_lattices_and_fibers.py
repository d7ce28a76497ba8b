"""Tour of the lattice layer: pairings, monodromy, pushforwards, fibers.

Run as `python demos/01_lattices_and_fibers.py`.
"""

from pezzo import (
    FAMILIES,
    SURFACES,
    constraint_count,
    fiber,
    genus,
    monodromy,
    pair,
    push_forward,
    quadric_to_plane,
    singular_fiber_count,
)

# The seven surfaces carry integer intersection lattices.  On the quadric the
# two rulings meet once, and the vanishing cycle (difference of rulings) has
# self-intersection -2.
q = SURFACES["q"]
print("ruling . ruling =", pair(q, (1, 0), (0, 1)))
print("cycle . cycle  =", pair(q, q.vanishing_cycle, q.vanishing_cycle))

# Monodromy around a singular pencil member reflects classes in the cycle:
# on the quadric it simply swaps the two ruling degrees, and it is an
# involution preserving genus and constraint counts.
print("T(3,1) =", monodromy(q, (3, 1)))

# Each threefold family pushes surface classes onto threefold classes.  The
# fiber of a threefold class collects the surface classes with possibly
# nonzero counts; it is closed under monodromy.
deg6 = FAMILIES["deg6"]
print("psi(3,3;1,2) =", push_forward(deg6, (3, 3, 1, 2)))
print("fiber of (2,2,1):", fiber(deg6, (2, 2, 1)))

# Members always lose exactly one point constraint against their image.
for member in fiber(deg6, (3, 3, 3)):
    assert constraint_count(deg6.surface, member) == constraint_count(deg6, (3, 3, 3)) - 1
print("k_D = k_d - 1 on the whole fiber of (3,3,3)")

# The twice-blown quadric and the thrice-blown plane describe the same
# surface; the change of basis preserves all numerical invariants.
cls = (3, 3, 1, 2)
print("plane model of (3,3;1,2):", quadric_to_plane(cls))
print("genus either way:", genus(SURFACES["qx2"], cls),
      genus(SURFACES["p2x3"], quadric_to_plane(cls)))

# A generic half-anticanonical pencil has exactly four singular members in
# every degree, by the Euler characteristic bookkeeping.
print("singular pencil members:", [singular_fiber_count(d) for d in (5, 6, 7, 8)])
