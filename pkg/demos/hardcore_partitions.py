"""
The hardcore model and the partition lattice
============================================

Connection matrices of the independent-set polynomial, restricted to
partition-indexed graphs, have entries (1 + lambda)^{|P v Q|}.  Their rank
is the Bell number, which outgrows any c^k.
"""

from homtensor import hardcore_matrix, hardcore_parameter, hardcore_rank_experiment, make_cycle
from homtensor.partitions import enumerate_partitions, independence_polynomial

print("partitions of [3]:", enumerate_partitions(3))
print("k=2, lambda=2:", hardcore_matrix(2, 2))

for row in hardcore_rank_experiment(5, 7):
    print(row)

# the parameter itself is the independent-set polynomial
C4 = make_cycle(4)
print("hardcore(C4, 1) =", hardcore_parameter(C4, 1), " brute force =", independence_polynomial(C4, 1))
