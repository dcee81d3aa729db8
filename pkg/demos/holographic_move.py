"""
Holographic transformations
===========================

On a bipartite instance with binary right vertices, replacing every left
signature f by f (T^-1)^{n} and every right matrix M by T M T^t leaves the
Holant value unchanged.
"""

from homtensor import holant, holographic_move, incidence_graph, make_cycle
from homtensor.holant import binary_matrix, bipartite_instance, equality, exact_one

# perfect matchings of C4 through its incidence graph
bg = incidence_graph(make_cycle(4))
inst = bipartite_instance(bg, exact_one, equality(2))
print("before:", holant(inst))

T = [[1, 1], [1, -1]]
moved = holographic_move(inst, bg.left, T)
print("after :", holant(moved))
print("new right matrix:", [[str(x) for x in row] for row in binary_matrix(moved.signatures[bg.left])])
print("new left signature on a degree-2 vertex:", moved.signatures[0])
