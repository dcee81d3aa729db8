"""
The matching tensor and its symmetric rank
==========================================

M_{n;a,b} takes value a on the all-zero input and b on inputs of Hamming
weight one.  Over the rationals it splits into n rank-one powers; over a
small prime field the rank can be found by exhaustive search.
"""

from homtensor import GF, decompose_M, eval_power_sum, make_M, sym_rank_bruteforce_dim2

M = make_M(3, 0, 1)
print(M)
print("as an array:", M.to_array())

# an explicit length-n decomposition, checked by expanding it back
dec = decompose_M(3, 0, 1)
for lam, v in dec.terms:
    print("  ", lam, "*", v, "^3")
print("round trip ok:", eval_power_sum(dec) == M)

# exhaustive rank search over GF(p)
for p, n in [(3, 2), (5, 3), (5, 4)]:
    print(f"rank of M_{n};0,1 over GF({p}):", sym_rank_bruteforce_dim2(make_M(n, 0, 1, GF(p))))

# characteristic 2 is the odd one out: M_2;0,1 needs three terms there
print("rank of M_2;0,1 over GF(2):", sym_rank_bruteforce_dim2(make_M(2, 0, 1, GF(2))))
