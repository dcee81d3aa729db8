"""
Slices of connection tensors
============================

Glue n copies of k-labeled generator graphs together and evaluate a graph
parameter on the product.  Ranging over a finite generator list gives a
finite symmetric tensor.
"""

from homtensor import connection_slice, make_M, parameter, pset
from homtensor.connection import build_N_restricted, build_W, contract_N_W, wm_N_closed_form

# k = 1 with generators (P_empty, P_{1}): an isolated labeled vertex and a pendant edge
gens = pset(1)
for n in range(2, 6):
    s = connection_slice(parameter("pm"), 1, n, gens).tensor
    print(f"n={n}: pm slice equals M_n;0,1 ->", s == make_M(n, 0, 1))



def show(M):
    return "[" + ", ".join("[" + " ".join(str(x) for x in row) + "]" for row in M) + "]"


# the partial-count matrix N over the pendant generators
print("N for pm, k=2:", show(build_N_restricted("pm", 2)))
print("N for wm_3, k=1:", show(build_N_restricted(("wm", 3), 1)))
print("closed form   :", show(wm_N_closed_form(1, 3)))

# and the slice factors through the gluing tensor W
k, n = 2, 3
N = build_N_restricted("pm", k)
s = connection_slice(parameter("pm"), k, n, pset(k)).tensor
print("slice == N^n W:", s == contract_N_W(N, build_W(k, n)))
