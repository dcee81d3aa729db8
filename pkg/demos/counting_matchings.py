"""
Counting matchings as Holant sums
=================================

Perfect matchings, weighted matchings, edge colorings and cycle covers are
all sums over edge assignments of products of symmetric vertex signatures.
"""

from fractions import Fraction

from homtensor import GF, MultiGraph, ec, make_K, make_cycle, pm, vdcc, wm

# the 4-cycle has two perfect matchings and one cycle cover
C4 = make_cycle(4)
print("pm(C4)   =", pm(C4))
print("vdcc(C4) =", vdcc(C4))

# K_4: three perfect matchings and three Hamiltonian cycles
K4 = make_K(4).graph
print("pm(K4)   =", pm(K4), " vdcc(K4) =", vdcc(K4))

# weighted matchings: every unmatched vertex contributes a factor a
for a in (0, 1, Fraction(1, 2)):
    print(f"wm_{a}(C4) =", wm(C4, a))

# proper 3-edge-colorings of a triangle
print("ec(C3, 3) =", ec(make_cycle(3), 3))

# multigraphs are fine: a double edge between two vertices gives 2 matchings
print("pm(double edge) =", pm(MultiGraph(2, ((0, 1), (0, 1)))))

# the same count modulo small primes, computed directly in GF(p)
for p in (2, 3):
    print(f"pm(K4) over GF({p}) =", pm(K4, GF(p)))
