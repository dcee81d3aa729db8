"""Weighted matchings on degree-bounded graphs as homomorphism functions.

For a degree bound ``d`` the target ``H`` has ``d`` vertices with weights
``alpha`` and edge matrix ``B = T T^t``, where ``T`` has rows ``(1, a_i)`` and
``sum_i alpha_i (1, a_i)^{⊗m} = M_{m;a,1}`` for every ``m <= d``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .connection import connection_slice, contract_N_W, build_W, parameter, pset, wm_N_closed_form
from .field import GF, QQ
from .graphs import MultiGraph, incidence_graph, random_multigraph
from .hom import WeightedGraph, hom
from .holant import (
    binary,
    bipartite_holant,
    bipartite_instance,
    equality,
    holant,
    holographic_move,
    vertex_weight_signature,
    wm,
)
from .linalg import matmul, matrix_rank, solve_linear, transpose, vandermonde
from .symtensor import SymTensor, make_M, power, sym_rank_bruteforce_dim2

__all__ = [
    "ExpressResult",
    "build_wm_target",
    "construction_holds",
    "chain_values",
    "verify_expressibility",
    "lower_bound_witness",
]


@dataclass(frozen=True)
class ExpressResult:
    d: int
    a: object
    a_nodes: tuple
    alpha: tuple
    T: tuple
    H: WeightedGraph


def _candidate_inverse_nodes(d: int, a, shift: int):
    """Distinct nonzero rationals summing to ``a``: ``1+s, ..., d-1+s`` and a
    completing last value; ``None`` on collision or zero."""
    head = [QQ(i + shift) for i in range(1, d)]
    last = QQ(a) - sum(head, QQ.zero)
    nodes = head + [last]
    if last == 0 or len(set(nodes)) != d:
        return None
    return nodes


def construction_holds(a_nodes, alpha, a, d: int) -> bool:
    """``sum_i alpha_i (1, a_i)^{⊗m} == M_{m;a,1}`` for ``0 <= m <= d``."""
    for m in range(d + 1):
        total = SymTensor(2, m)
        for w, x in zip(alpha, a_nodes):
            total = total + power((1, x), m).scale(w)
        if total != make_M(m, a, 1):
            return False
    return True


def build_wm_target(d: int, a, field=QQ) -> ExpressResult:
    """Construct ``H`` on ``d`` vertices with ``hom(G, H) == wm_a(G)`` for every
    graph of maximum degree at most ``d``.

    The nodes ``a_i`` are reciprocals of distinct nonzero rationals summing to
    ``a``, which makes the ``(d+1) x d`` system
    ``sum_i alpha_i a_i**w = [a, 1, 0, ..., 0]_w`` consistent of rank ``d``.
    """
    if field != QQ:
        raise ValueError(
            "only QQ is supported; over characteristic 2 with d = 2, a = 0 no "
            "two-vertex target exists (the matching tensor M_{2;0,b} has symmetric rank 3)"
        )
    if d < 2:
        raise ValueError("d must be at least 2")
    a = QQ(a)
    rhs = [QQ.zero] * (d + 1)
    rhs[0] = a
    rhs[1] = QQ.one
    for shift in range(d + 2):
        inv = _candidate_inverse_nodes(d, a, shift)
        if inv is None:
            continue
        a_nodes = [1 / x for x in inv]
        A = vandermonde(a_nodes, d + 1)
        if matrix_rank(A) != d:
            continue
        alpha = solve_linear(A, rhs, QQ)
        if alpha is None or any(x == 0 for x in alpha):
            continue
        if not construction_holds(a_nodes, alpha, a, d):
            raise AssertionError("decomposition failed to reproduce M_{m;a,1}")
        T = tuple((QQ.one, x) for x in a_nodes)
        B = matmul([list(r) for r in T], transpose([list(r) for r in T]))
        H = WeightedGraph(tuple(alpha), tuple(map(tuple, B)), QQ)
        return ExpressResult(d, a, tuple(a_nodes), tuple(alpha), T, H)
    raise AssertionError(f"no admissible nodes found for d={d}, a={a}")


def chain_values(res: ExpressResult, G: MultiGraph) -> dict:
    """Every stage of the equality chain for one graph.

    ``wm``: direct Holant.  ``incidence``: matching signatures on the incidence
    graph against binary equality.  ``expanded``: left signatures replaced by
    ``sum_i alpha_i (1, a_i)^{⊗m}``.  ``moved``: left ``sum_i alpha_i
    e_i^{⊗m}`` against ``T T^t``.  ``hom``: ``hom(G, H)``.  For ``d == 2``
    also ``generic_move``, the expanded instance pushed through
    :func:`holographic_move`.
    """
    d = res.d
    bg = incidence_graph(G)
    eq2 = equality(2, 2)

    def expanded(m):
        total = SymTensor(2, m)
        for w, x in zip(res.alpha, res.a_nodes):
            total = total + power((1, x), m).scale(w)
        return total

    out = {
        "wm": wm(G, res.a),
        "incidence": bipartite_holant(bg, lambda m: make_M(m, res.a, 1), eq2),
        "expanded": bipartite_holant(bg, expanded, eq2),
        "moved": bipartite_holant(
            bg, lambda m: vertex_weight_signature(res.alpha, m), binary(res.H.B), domain=d
        ),
        "hom": hom(G, res.H),
    }
    if d == 2:
        # T is square here, so the generic move applies to the expanded instance
        inst = bipartite_instance(bg, expanded, eq2)
        out["generic_move"] = holant(holographic_move(inst, bg.left, [list(r) for r in res.T]))
    return out


def verify_expressibility(res: ExpressResult, trials: int, max_vertices: int, seed: int = 0) -> dict:
    """Check the chain on ``K_0`` plus ``trials`` seeded random multigraphs of
    maximum degree at most ``d``.  The report lists every row and the first
    mismatch, if any."""
    rng = random.Random(seed)
    graphs = [MultiGraph(0)]
    for _ in range(trials):
        graphs.append(random_multigraph(rng, max_vertices, max_degree=res.d))
    rows = []
    mismatch = None
    for i, G in enumerate(graphs):
        if G.max_degree() > res.d:
            raise AssertionError("generator produced a graph above the degree bound")
        vals = chain_values(res, G)
        ok = len(set(vals.values())) == 1
        rows.append({"trial": i, "graph": G, "ok": ok, **vals})
        if not ok and mismatch is None:
            mismatch = rows[-1]
    return {"passed": mismatch is None, "rows": rows, "mismatch": mismatch}


def lower_bound_witness(d: int, a, primes=(2, 3, 5), oracle_max_d: int = 4) -> dict:
    """Restricted ``wm_a`` slice at ``k = 1``, order ``d``, over ``(P_∅, P_{[1]})``.

    Checks it against ``[[1,0],[a,1]]^{⊗d} W_{1,d;a}`` and, for small ``d``,
    reports oracle symmetric ranks over prime fields where ``a`` reduces.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    a = QQ(a)
    gens = pset(1)
    s = connection_slice(parameter(f"wm:{QQ.format(a)}"), 1, d, gens).tensor
    expansion = contract_N_W(wm_N_closed_form(1, a), build_W(1, d, a))
    report = {"d": d, "a": a, "slice": s, "matches_expansion": s == expansion, "gf_rank": {}}
    if d <= oracle_max_d:
        for p in primes:
            if a.denominator % p == 0:
                continue
            F = GF(p)
            sp = connection_slice(parameter(f"wm:{QQ.format(a)}", F), 1, d, gens).tensor
            report["gf_rank"][p] = sym_rank_bruteforce_dim2(sp)
    report["rank_ok"] = all(r is None or r >= d for r in report["gf_rank"].values())
    return report
