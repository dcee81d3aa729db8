"""Connection-tensor slices of graph parameters over finite generator lists."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .field import GF, QQ
from .graphs import LabeledGraph, MultiGraph, disjoint_union, glue_all, make_P, random_multigraph, subsets
from .hom import WeightedGraph, hom, hom_phi
from .holant import ec, partial_param, pm, vdcc, wm
from .linalg import identity, kron
from .symtensor import SymTensor, make_M, power, sym_rank_bruteforce_dim2

__all__ = [
    "GraphParameter",
    "parameter",
    "ConnectionSlice",
    "connection_slice",
    "pset",
    "build_W",
    "build_N_restricted",
    "wm_N_closed_form",
    "multiplicativity_test",
    "hom_decomposition_check",
    "pm_rank_experiment",
    "contract_N_W",
]


@dataclass(frozen=True)
class GraphParameter:
    """A named, label-blind graph parameter with values in ``field``."""

    name: str
    fn: Callable
    field: object = QQ

    def __call__(self, G):
        g = G.graph if isinstance(G, LabeledGraph) else G
        return self.fn(g)


def parameter(name: str, field=QQ, target: WeightedGraph | None = None) -> GraphParameter:
    """Built-in parameter by name: ``pm``, ``wm:a``, ``ec:d``, ``vdcc`` or ``hom``
    (the latter needs ``target``)."""
    kind, _, arg = name.partition(":")
    if kind == "pm":
        return GraphParameter(name, lambda g: pm(g, field), field)
    if kind == "wm":
        a = field.parse(arg)
        return GraphParameter(name, lambda g: wm(g, a, field), field)
    if kind == "ec":
        d = int(arg)
        return GraphParameter(name, lambda g: ec(g, d, field), field)
    if kind == "vdcc":
        return GraphParameter(name, lambda g: vdcc(g, field), field)
    if kind == "hom":
        if target is None:
            raise ValueError("hom parameter needs a target graph")
        return GraphParameter(name, lambda g: hom(g, target), target.field)
    raise ValueError(f"unknown parameter {name!r}")


@dataclass(frozen=True)
class ConnectionSlice:
    k: int
    generators: tuple
    order: int
    tensor: SymTensor


def pset(k: int) -> list[LabeledGraph]:
    """The family ``P_X`` for ``X`` ranging over subsets of ``[k]``."""
    return [make_P(X, k) for X in subsets(k)]


def connection_slice(f: GraphParameter, k: int, n: int, generators) -> ConnectionSlice:
    """Restriction of the order-``n`` connection tensor of ``f`` to ``generators``.

    The coordinate at exponent vector ``e`` is ``f`` of the product taking
    generator ``i`` with multiplicity ``e_i``; order 0 gives ``f(U_k)``.
    """
    generators = tuple(generators)
    for g in generators:
        if set(g.labels) != set(range(1, k + 1)):
            raise ValueError(f"generator labels {sorted(g.labels)} are not [{k}]")

    def value(e):
        factors = [g for g, mult in zip(generators, e) for _ in range(mult)]
        return f(glue_all(factors, k))

    tensor = SymTensor.from_function(len(generators), n, value, f.field)
    return ConnectionSlice(k, generators, n, tensor)


def build_W(k: int, n: int, a=None, field=QQ) -> SymTensor:
    """Gluing tensor over subsets of ``[k]`` (ordered by :func:`subsets`).

    Without ``a``: 1 when the chosen subsets are pairwise disjoint with union
    ``[k]``.  With ``a``: ``a ** (k - |union|)`` on pairwise disjoint choices.
    """
    subs = subsets(k)

    def value(e):
        chosen = [X for X, mult in zip(subs, e) for _ in range(mult)]
        union = set()
        for X in chosen:
            if union & X:
                return 0
            union |= X
        if a is None:
            return int(len(union) == k)
        return field(a) ** (k - len(union))

    return SymTensor.from_function(len(subs), n, value, field)


def build_N_restricted(f, k: int, field=QQ):
    """Rows ``P_X``, columns ``Y`` (both in :func:`subsets` order); entry is the
    partial parameter of ``P_X`` at ``Y``.  ``f`` is ``"pm"`` or ``("wm", a)``."""
    subs = subsets(k)
    return [[partial_param(f, make_P(X, k), Y, field) for Y in subs] for X in subs]


def wm_N_closed_form(k: int, a, field=QQ):
    """``[[1, 0], [a, 1]]`` Kronecker-powered ``k`` times."""
    base = [[field.one, field.zero], [field(a), field.one]]
    out = identity(1, field)
    for _ in range(k):
        out = kron(out, base)
    return out


def multiplicativity_test(f, trials: int, seed: int = 0, max_vertices: int = 6) -> bool:
    """``f(K_0) == 1`` and ``f`` turns disjoint unions into products on
    ``trials`` random pairs."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if f(MultiGraph(0)) != 1:
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        g1 = random_multigraph(rng, max_vertices, max_edges=8)
        g2 = random_multigraph(rng, max_vertices, max_edges=8)
        if f(disjoint_union(g1, g2)) != f(g1) * f(g2):
            return False
    return True


def hom_decomposition_check(H: WeightedGraph, k: int, n: int, generators) -> bool:
    """Compare the ``hom(., H)`` slice with ``sum_phi alpha_phi v_phi^{⊗n}``,
    where ``v_phi`` lists ``hom_phi`` over the generators."""
    field = H.field
    direct = connection_slice(parameter("hom", target=H), k, n, generators).tensor
    total = SymTensor(len(generators), n, field=field)
    for phi in itertools.product(range(H.q), repeat=k):
        weight = field.one
        for c in phi:
            weight = weight * H.alpha[c]
        vec = [hom_phi(g, H, phi) for g in generators]
        total = total + power(vec, n, field).scale(weight)
    return direct == total


def pm_rank_experiment(n_max: int, primes=(2, 3, 5), oracle_max_n: int = 4) -> list[dict]:
    """Check the ``pm`` slice over ``(P_∅, P_{[1]})`` against ``M_{n;0,1}`` and
    record oracle ranks over small prime fields."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    gens = pset(1)
    for n in range(2, n_max + 1):
        s = connection_slice(parameter("pm"), 1, n, gens).tensor
        row = {"n": n, "verified": s == make_M(n, 0, 1), "gf_rank": {}}
        if n <= oracle_max_n:
            for p in primes:
                F = GF(p)
                sp = connection_slice(parameter("pm", F), 1, n, gens).tensor
                row["gf_rank"][p] = sym_rank_bruteforce_dim2(sp)
        # None means no decomposition exists within the oracle's cap
        row["rank_ok"] = all(r is None or r >= n for r in row["gf_rank"].values())
        rows.append(row)
    return rows


def contract_N_W(N, W: SymTensor) -> SymTensor:
    """``N^{⊗n} W`` for a rows-by-subsets matrix ``N``."""
    return W.transform(N)
