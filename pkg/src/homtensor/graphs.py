"""Loopless multigraphs, labeled graphs and the gluing product."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

__all__ = [
    "MultiGraph",
    "LabeledGraph",
    "BipartiteGraph",
    "glue",
    "glue_all",
    "disjoint_union",
    "incidence_graph",
    "make_U",
    "make_K",
    "make_P",
    "make_star",
    "make_cycle",
    "make_path",
    "subsets",
    "random_multigraph",
    "random_labeled_graph",
    "graph_from_json",
    "graph_to_json",
]


@dataclass(frozen=True)
class MultiGraph:
    """Vertices ``0..vertex_count-1``; ``edges`` is a sorted tuple of ``(u, v)``
    pairs with ``u < v``, repeated once per unit of multiplicity."""

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} out of range for {n} vertices")
            normalized.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def multiplicities(self) -> dict:
        return dict(Counter(self.edges))

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def incident_edges(self) -> list[list[int]]:
        """For every vertex, the indices (into ``edges``) of its incident edges."""
        inc = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc


@dataclass(frozen=True)
class LabeledGraph:
    """A multigraph with an injective map from positive-integer labels to vertices."""

    graph: MultiGraph
    labels: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        labels = dict(self.labels)
        for lab, v in labels.items():
            if not isinstance(lab, int) or lab < 1:
                raise ValueError(f"label {lab!r} is not a positive integer")
            if not 0 <= v < self.graph.vertex_count:
                raise ValueError(f"label {lab} points at missing vertex {v}")
        if len(set(labels.values())) != len(labels):
            raise ValueError("labels must sit on distinct vertices")
        object.__setattr__(self, "labels", dict(sorted(labels.items())))

    def __hash__(self):
        return hash((self.graph, tuple(self.labels.items())))

    @property
    def label_set(self) -> frozenset:
        return frozenset(self.labels)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edges(self):
        return self.graph.edges

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite multigraph: left vertices ``0..left-1``, right ``left..left+right-1``."""

    left: int
    right: int
    graph: MultiGraph


def _as_labeled(g) -> LabeledGraph:
    return g if isinstance(g, LabeledGraph) else LabeledGraph(g, {})


def glue(g1, g2) -> LabeledGraph:
    """Disjoint union, then merge vertices carrying the same label.

    ``g1`` keeps its vertex numbers; unmerged vertices of ``g2`` follow in order.
    """
    g1, g2 = _as_labeled(g1), _as_labeled(g2)
    n1 = g1.vertex_count
    vertex_label2 = {v: lab for lab, v in g2.labels.items()}
    mapping = []
    nxt = n1
    for w in range(g2.vertex_count):
        lab = vertex_label2.get(w)
        if lab is not None and lab in g1.labels:
            mapping.append(g1.labels[lab])
        else:
            mapping.append(nxt)
            nxt += 1
    edges = list(g1.edges) + [(mapping[u], mapping[v]) for u, v in g2.edges]
    labels = dict(g1.labels)
    for lab, w in g2.labels.items():
        labels.setdefault(lab, mapping[w])
    return LabeledGraph(MultiGraph(nxt, tuple(edges)), labels)


def glue_all(graphs: Iterable, k: int = 0) -> LabeledGraph:
    """Product of a sequence of labeled graphs; the empty product is ``U_k``."""
    out = make_U(k)
    for g in graphs:
        out = glue(out, g)
    return out


def disjoint_union(g1: MultiGraph, g2: MultiGraph) -> MultiGraph:
    n1 = g1.vertex_count
    edges = list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges]
    return MultiGraph(n1 + g2.vertex_count, tuple(edges))


def incidence_graph(g) -> BipartiteGraph:
    """Vertex-edge incidence graph: edge ``i`` of ``g`` becomes right vertex ``n + i``."""
    g = g.graph if isinstance(g, LabeledGraph) else g
    n = g.vertex_count
    edges = []
    for i, (u, v) in enumerate(g.edges):
        edges.append((u, n + i))
        edges.append((v, n + i))
    return BipartiteGraph(n, g.edge_count, MultiGraph(n + g.edge_count, tuple(edges)))


def make_U(k: int) -> LabeledGraph:
    return LabeledGraph(MultiGraph(k), {i + 1: i for i in range(k)})


def make_K(k: int) -> LabeledGraph:
    return LabeledGraph(
        MultiGraph(k, tuple(combinations(range(k), 2))), {i + 1: i for i in range(k)}
    )


def make_P(X, k: int) -> LabeledGraph:
    """Labeled ``y_1..y_k`` are vertices ``0..k-1``; each ``i in X`` adds a
    pendant unlabeled vertex ``x_i`` joined to ``y_i``."""
    X = sorted(set(X))
    if any(not 1 <= i <= k for i in X):
        raise ValueError(f"{X} is not a subset of [{k}]")
    edges = [(i - 1, k + j) for j, i in enumerate(X)]
    return LabeledGraph(MultiGraph(k + len(X), tuple(edges)), {i + 1: i for i in range(k)})


def make_star(ell: int) -> LabeledGraph:
    """Star with labeled center (label 1) and ``ell`` unlabeled leaves."""
    return LabeledGraph(MultiGraph(ell + 1, tuple((0, i) for i in range(1, ell + 1))), {1: 0})


def make_cycle(ell: int) -> MultiGraph:
    if ell == 0:
        return MultiGraph(0)
    if ell == 1:
        raise ValueError("a cycle of length 1 would be a loop")
    return MultiGraph(ell, tuple((i, (i + 1) % ell) for i in range(ell)))


def make_path(ell: int) -> MultiGraph:
    """Path on ``ell`` vertices."""
    return MultiGraph(ell, tuple((i, i + 1) for i in range(ell - 1)))


def subsets(k: int) -> list[frozenset]:
    """Subsets of ``[k]`` ordered lexicographically by characteristic vector
    (element 1 is the most significant bit), so ``(∅, {1})`` for ``k = 1`` and
    the order is compatible with Kronecker products."""
    out = []
    for mask in range(2**k):
        out.append(frozenset(i + 1 for i in range(k) if mask >> (k - 1 - i) & 1))
    return out


def random_multigraph(rng: random.Random, max_vertices: int, max_edges: int | None = None,
                      max_degree: int | None = None, min_vertices: int = 0) -> MultiGraph:
    """Random loopless multigraph.  With ``max_degree`` set, edges that would
    exceed the cap are rejected and redrawn a bounded number of times."""
    n = rng.randint(min_vertices, max_vertices)
    if n < 2:
        return MultiGraph(n)
    if max_edges is None:
        max_edges = n * (max_degree or 3) // 2 + 1
    target = rng.randint(0, max_edges)
    deg = [0] * n
    edges = []
    attempts = 0
    while len(edges) < target and attempts < 20 * (target + 1):
        attempts += 1
        u, v = rng.sample(range(n), 2)
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    return MultiGraph(n, tuple(edges))


def random_labeled_graph(rng: random.Random, k: int, max_extra: int = 2,
                         max_edges: int = 4) -> LabeledGraph:
    """Random graph whose first ``k`` vertices carry labels ``1..k``."""
    n = k + rng.randint(0, max_extra)
    edges = []
    if n >= 2:
        for _ in range(rng.randint(0, max_edges)):
            edges.append(tuple(rng.sample(range(n), 2)))
    return LabeledGraph(MultiGraph(n, tuple(edges)), {i + 1: i for i in range(k)})


def graph_from_json(obj) -> LabeledGraph:
    """Parse ``{"vertices": n, "edges": [[u, v], ...], "labels": {"1": v}}``."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError("graph JSON needs a 'vertices' field")
    edges = []
    for pos, e in enumerate(obj.get("edges", [])):
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"edges[{pos}]: expected a pair, got {e!r}")
        if e[0] == e[1]:
            raise ValueError(f"edges[{pos}]: loop [{e[0]}, {e[1]}] is not allowed")
        edges.append((int(e[0]), int(e[1])))
    labels = {int(k): int(v) for k, v in obj.get("labels", {}).items()}
    return LabeledGraph(MultiGraph(int(obj["vertices"]), tuple(edges)), labels)


def graph_to_json(g) -> dict:
    g = _as_labeled(g)
    return {
        "vertices": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "labels": {str(k): v for k, v in g.labels.items()},
    }
