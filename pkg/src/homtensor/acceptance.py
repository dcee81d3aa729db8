"""Acceptance criteria as runnable checks.

Each check returns ``(passed, detail)`` and is timed against its budget by
:func:`run_all`.  Equalities are exact; the only tolerances are wall-clock
budgets in seconds.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .connection import (
    build_N_restricted,
    build_W,
    connection_slice,
    contract_N_W,
    hom_decomposition_check,
    multiplicativity_test,
    parameter,
    pset,
    wm_N_closed_form,
)
from .express import build_wm_target, construction_holds, verify_expressibility
from .field import GF
from .graphs import MultiGraph, incidence_graph, random_labeled_graph, random_multigraph
from .hom import hom, random_weighted_graph
from .holant import bipartite_instance, binary, ec, holant, holographic_move, pm, vdcc, wm
from .linalg import identity, is_invertible
from .partitions import bell, hardcore_parameter, hardcore_rank_experiment, independence_polynomial
from .symtensor import SymTensor, decompose_M, eval_power_sum, make_M, sym_rank_bruteforce_dim2

SEED = 20240521


def slice_identity():
    bad = [n for n in range(2, 9)
           if connection_slice(parameter("pm"), 1, n, pset(1)).tensor != make_M(n, 0, 1)]
    return not bad, f"mismatch at n={bad}" if bad else "n=2..8 equal to M_{n;0,1}"


def rank_oracle():
    cases = [(2, 2, 3), (3, 2, 2), (5, 3, 3), (5, 4, 4)]
    got = {(p, n): sym_rank_bruteforce_dim2(make_M(n, 0, 1, GF(p))) for p, n, _ in cases}
    ok = all(got[(p, n)] == want for p, n, want in cases)
    return ok, ", ".join(f"GF({p}) M_{n}: {got[(p, n)]}" for p, n, _ in cases)


def decomposition_roundtrip():
    bad = []
    for n in range(1, 7):
        for a in (0, 1, -2):
            for b in (1, 3):
                dec = decompose_M(n, a, b)
                if len(dec.terms) != n or eval_power_sum(dec) != make_M(n, a, b):
                    bad.append((n, a, b))
    return not bad, f"failures {bad}" if bad else "36 cases round-trip"


def bounded_degree_expressibility():
    failures = []
    for d in (2, 3, 4):
        for a in (0, 1, -1, 2):
            res = build_wm_target(d, a)
            if not construction_holds(res.a_nodes, res.alpha, a, d):
                failures.append((d, a, "construction"))
                continue
            report = verify_expressibility(res, trials=100, max_vertices=8, seed=SEED)
            if not report["passed"]:
                m = report["mismatch"]
                failures.append((d, a, f"graph {m['graph'].edges}"))
    return not failures, f"failures {failures}" if failures else "12 (d, a) pairs, 101 graphs each"


def hand_witness():
    res = build_wm_target(2, 0)
    H = res.H
    shape_ok = res.alpha == (Fraction(1, 2), Fraction(-1, 2)) and H.B == ((2, 0), (0, 2))
    graphs = {
        "K_0": MultiGraph(0),
        "K_1": MultiGraph(1),
        "K_2": MultiGraph(2, ((0, 1),)),
        "S_2": MultiGraph(3, ((0, 1), (0, 2))),
        "C_3": MultiGraph(3, ((0, 1), (1, 2), (0, 2))),
        "C_4": MultiGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    }
    want = (1, 0, 1, 0, 0, 2)
    homs = tuple(hom(g, H) for g in graphs.values())
    pms = tuple(pm(g) for g in graphs.values())
    ok = shape_ok and homs == want and pms == want
    return ok, f"hom={[str(x) for x in homs]} pm={[str(x) for x in pms]}"


def hom_decomposition():
    rng = random.Random(SEED)
    bad = []
    for t in range(20):
        H = random_weighted_graph(rng, rng.randint(1, 3))
        k = rng.randint(0, 2)
        n = rng.randint(0, 3)
        gens = [random_labeled_graph(rng, k, max_extra=2, max_edges=3) for _ in range(3)]
        if not hom_decomposition_check(H, k, n, gens):
            bad.append(t)
    return not bad, f"failed trials {bad}" if bad else "20 random targets"


def n_w_structure():
    bad = []
    for k in range(0, 4):
        if build_N_restricted("pm", k) != identity(2**k):
            bad.append(("pm", k))
        for a in (0, 1, 2):
            if build_N_restricted(("wm", a), k) != wm_N_closed_form(k, a):
                bad.append(("wm", a, k))
    for k in range(0, 3):
        N = build_N_restricted("pm", k)
        for n in range(0, 4):
            s = connection_slice(parameter("pm"), k, n, pset(k)).tensor
            if s != contract_N_W(N, build_W(k, n)):
                bad.append(("slice", k, n))
    return not bad, f"failures {bad}" if bad else "N, W and contraction agree"


def multiplicativity():
    params = {
        "pm": pm,
        "wm_1": lambda g: wm(g, 1),
        "ec_3": lambda g: ec(g, 3),
        "vdcc": vdcc,
    }
    results = {name: multiplicativity_test(f, 50, seed=SEED) for name, f in params.items()}
    spoiler = multiplicativity_test(lambda g: pm(g) + 1, 50, seed=SEED)
    ok = all(results.values()) and not spoiler
    return ok, f"{results}, pm+1 -> {spoiler}"


def hardcore_ranks():
    rows = hardcore_rank_experiment(5, 7)
    ranks = tuple(r["rank"] for r in rows)
    ok = ranks == (1, 2, 5, 15, 52) and all(r["rank"] == bell(r["k"]) for r in rows)
    return ok, f"ranks {ranks}"


def hardcore_exceeds_two_pow_k():
    rows = {r["k"]: r for r in hardcore_rank_experiment(5, 7)}
    ok = all(rows[k]["rank"] > rows[k]["two_pow_k"] for k in (4, 5))
    return ok, ", ".join(f"k={k}: rank {rows[k]['rank']} vs 2^k {rows[k]['two_pow_k']}" for k in (4, 5))


def hardcore_polynomial():
    rng = random.Random(SEED)
    bad = []
    for t in range(50):
        g = random_multigraph(rng, 8, max_edges=12)
        for lam in (1, 2, -2):
            if hardcore_parameter(g, lam) != independence_polynomial(g, lam):
                bad.append((t, lam))
    return not bad, f"failures {bad}" if bad else "50 graphs x 3 lambdas"


def finite_characteristic():
    rng = random.Random(SEED)
    bad = []
    for t in range(50):
        g = random_multigraph(rng, 8, max_edges=14)
        exact = pm(g)
        for p in (2, 3):
            if pm(g, GF(p)) != GF(p)(exact):
                bad.append((t, p))
    return not bad, f"failures {bad}" if bad else "50 graphs over GF(2), GF(3)"


def _random_invertible(rng):
    while True:
        T = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)]
        if is_invertible(T):
            return T


def holographic_invariance():
    rng = random.Random(SEED)
    bad = []
    for t in range(50):
        g = random_multigraph(rng, 6, max_degree=3, max_edges=8)
        bg = incidence_graph(g)
        deg = bg.graph.degrees()
        left = [SymTensor.from_hamming([rng.randint(-3, 3) for _ in range(deg[v] + 1)]) for v in range(bg.left)]
        right = []
        for _ in range(bg.right):
            x, y, z = (rng.randint(-3, 3) for _ in range(3))
            right.append(binary([[x, y], [y, z]]))
        inst = bipartite_instance(bg, left, right)
        moved = holographic_move(inst, bg.left, _random_invertible(rng))
        if holant(moved) != holant(inst):
            bad.append(t)
    return not bad, f"failures {bad}" if bad else "50 random instances"


CRITERIA = [
    ("1", "slice identity pm, n=2..8", slice_identity, 5),
    ("2", "rank oracle on known matching-tensor ranks", rank_oracle, 10),
    ("3", "decomposition round-trip", decomposition_roundtrip, 2),
    ("4", "bounded-degree expressibility", bounded_degree_expressibility, 60),
    ("5", "hand witness d=2, a=0", hand_witness, 1),
    ("6", "hom decomposition of slices", hom_decomposition, 30),
    ("7", "N/W structure", n_w_structure, 20),
    ("8", "multiplicativity", multiplicativity, 10),
    ("9a", "hardcore ranks = Bell(k)", hardcore_ranks, 30),
    ("9b", "hardcore rank exceeds 2^k at k=4,5", hardcore_exceeds_two_pow_k, 30),
    ("9c", "hardcore parameter = independence polynomial", hardcore_polynomial, 30),
    ("10", "pm over GF(2), GF(3)", finite_characteristic, 10),
    ("11", "holographic invariance", holographic_invariance, 20),
]


def run_criterion(check, budget):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        ok = False
        detail += f" (over budget: {elapsed:.2f}s >= {budget}s)"
    return ok, detail, elapsed


def run_all(echo=print) -> bool:
    all_ok = True
    for key, title, check, budget in CRITERIA:
        ok, detail, elapsed = run_criterion(check, budget)
        all_ok &= ok
        echo(f"{'PASS' if ok else 'FAIL'}  {key:>3}  {title:<48} {elapsed:6.2f}s  {detail}")
    return all_ok
