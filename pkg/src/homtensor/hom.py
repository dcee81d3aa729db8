"""Graph homomorphism partition functions hom(G, H) and the restricted sums hom_phi."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .field import QQ, from_integer, to_integers
from .graphs import LabeledGraph, MultiGraph

__all__ = ["WeightedGraph", "hom", "hom_phi", "hardcore_graph", "random_weighted_graph"]


@dataclass(frozen=True)
class WeightedGraph:
    """Target graph: nowhere-zero vertex weights ``alpha`` and symmetric edge
    weights ``B`` (diagonal entries are loop weights)."""

    alpha: tuple
    B: tuple
    field: object = QQ

    def __post_init__(self):
        f = self.field
        alpha = tuple(f(x) for x in self.alpha)
        B = tuple(tuple(f(x) for x in row) for row in self.B)
        q = len(alpha)
        if len(B) != q or any(len(row) != q for row in B):
            raise ValueError(f"B must be {q}x{q}")
        if any(x == 0 for x in alpha):
            raise ValueError("vertex weights must be nonzero")
        for i in range(q):
            for j in range(i):
                if B[i][j] != B[j][i]:
                    raise ValueError(f"B is not symmetric at ({i}, {j})")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "B", B)

    @property
    def q(self) -> int:
        return len(self.alpha)

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "q": self.q,
            "alpha": [fmt(x) for x in self.alpha],
            "B": [[fmt(x) for x in row] for row in self.B],
        }

    @classmethod
    def from_json(cls, obj, field=QQ) -> WeightedGraph:
        alpha = [field.parse(str(x)) for x in obj["alpha"]]
        if "q" in obj and int(obj["q"]) != len(alpha):
            raise ValueError(f"q = {obj['q']} but alpha has {len(alpha)} entries")
        B = [[field.parse(str(x)) for x in row] for row in obj["B"]]
        return cls(tuple(alpha), tuple(map(tuple, B)), field)


def _back_edges(g: MultiGraph, order):
    """For each vertex in ``order``, its edges to earlier vertices as (u, mult)."""
    pos = {v: i for i, v in enumerate(order)}
    back = [dict() for _ in order]
    for u, v in g.edges:
        if pos[u] < pos[v]:
            u, v = v, u
        back[pos[u]][v] = back[pos[u]].get(v, 0) + 1
    return [list(b.items()) for b in back]


def _sum_over_maps(g: MultiGraph, H: WeightedGraph, fixed: dict, weighted_fixed: bool):
    q = H.q
    field = H.field
    alpha, a_scale, modulus = to_integers(H.alpha, field)
    flat, b_scale, _ = to_integers([x for row in H.B for x in row], field)
    B = [flat[i * q:(i + 1) * q] for i in range(q)]
    order = list(fixed) + [v for v in range(g.vertex_count) if v not in fixed]
    back = _back_edges(g, order)
    weighted = sum(1 for v in order if weighted_fixed or v not in fixed)
    denominator = a_scale**weighted * b_scale**g.edge_count
    assign = [0] * g.vertex_count
    n = len(order)

    def rec(i, acc):
        if i == n:
            return acc
        v = order[i]
        choices = (fixed[v],) if v in fixed else range(q)
        use_alpha = weighted_fixed or v not in fixed
        total = 0
        for c in choices:
            w = acc * alpha[c] if use_alpha else acc
            for u, m in back[i]:
                if not w:
                    break
                w *= B[assign[u]][c] ** m
            if not w:
                continue
            if modulus is not None:
                w %= modulus
            assign[v] = c
            total += rec(i + 1, w)
        return total

    return from_integer(rec(0, 1), denominator, field)


def hom(G, H: WeightedGraph):
    """Sum over all maps V(G) -> [q] of vertex-weight and edge-weight products.

    Labels on ``G`` are ignored.  Depth-first over vertices, pruning as soon
    as a partial product vanishes.
    """
    g = G.graph if isinstance(G, LabeledGraph) else G
    return _sum_over_maps(g, H, {}, weighted_fixed=True)


def hom_phi(G: LabeledGraph, H: WeightedGraph, phi):
    """Sum over extensions of ``phi`` (label -> target vertex); labeled vertices
    carry no vertex weight.

    ``phi`` is a mapping or a sequence indexed by label-1.
    """
    if not isinstance(phi, dict):
        phi = {i + 1: c for i, c in enumerate(phi)}
    missing = set(G.labels) - set(phi)
    if missing:
        raise ValueError(f"phi does not cover labels {sorted(missing)}")
    for lab, c in phi.items():
        if not 0 <= c < H.q:
            raise ValueError(f"phi({lab}) = {c} is out of range for q = {H.q}")
    fixed = {G.labels[lab]: phi[lab] for lab in G.labels}
    return _sum_over_maps(G.graph, H, fixed, weighted_fixed=False)


def hardcore_graph(lam, field=QQ) -> WeightedGraph:
    return WeightedGraph((1, lam), ((1, 1), (1, 0)), field)


def random_weighted_graph(rng: random.Random, q: int, field=QQ, lo: int = -3, hi: int = 3) -> WeightedGraph:
    """Random target with small integer weights (vertex weights nonzero)."""
    alpha = [rng.choice([x for x in range(lo, hi + 1) if x != 0]) for _ in range(q)]
    B = [[0] * q for _ in range(q)]
    for i, j in itertools.combinations_with_replacement(range(q), 2):
        B[i][j] = B[j][i] = rng.randint(lo, hi)
    if field is not QQ:
        alpha = [a if field(a) != 0 else 1 for a in alpha]
    return WeightedGraph(tuple(alpha), tuple(map(tuple, B)), field)
