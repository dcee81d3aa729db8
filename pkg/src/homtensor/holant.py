"""Holant (edge-model) evaluation with symmetric signatures.

A symmetric signature of arity ``n`` on domain ``[q]`` is a :class:`SymTensor`
of ``dim == q`` and ``order == n``: its value depends only on how many
incident edges carry each domain value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .field import QQ, from_integer, to_integers
from .graphs import BipartiteGraph, LabeledGraph, MultiGraph, incidence_graph
from .linalg import inverse, is_invertible, matmul, transpose
from .symtensor import SymTensor, make_M

__all__ = [
    "SymmetricSignature",
    "HolantInstance",
    "holant",
    "bipartite_holant",
    "bipartite_instance",
    "exact_one",
    "exact_two",
    "all_distinct",
    "equality",
    "binary",
    "binary_matrix",
    "vertex_weight_signature",
    "pm",
    "wm",
    "ec",
    "vdcc",
    "partial_param",
    "holographic_move",
]

SymmetricSignature = SymTensor


def exact_one(n: int, field=QQ) -> SymTensor:
    return make_M(n, 0, 1, field)


def exact_two(n: int, field=QQ) -> SymTensor:
    return SymTensor.from_hamming([1 if w == 2 else 0 for w in range(n + 1)], field)


def all_distinct(n: int, q: int, field=QQ) -> SymTensor:
    return SymTensor.from_function(q, n, lambda e: int(max(e, default=0) <= 1), field)


def equality(n: int, q: int = 2, field=QQ) -> SymTensor:
    return SymTensor.from_function(q, n, lambda e: int(n == 0 or max(e) == n), field)


def binary(M, field=QQ) -> SymTensor:
    """Arity-2 signature with symmetric matrix form ``M``."""
    q = len(M)
    for i in range(q):
        for j in range(i):
            if field(M[i][j]) != field(M[j][i]):
                raise ValueError("binary signature matrix must be symmetric")

    def value(e):
        i, j = [c for c, k in enumerate(e) for _ in range(k)]
        return M[i][j]

    return SymTensor.from_function(q, 2, value, field)


def binary_matrix(sig: SymTensor):
    if sig.order != 2:
        raise ValueError("not a binary signature")
    return [[sig.entry((i, j)) for j in range(sig.dim)] for i in range(sig.dim)]


def vertex_weight_signature(alpha, n: int, field=QQ) -> SymTensor:
    """``sum_i alpha_i e_i^{⊗n}``: ``alpha_i`` when all inputs equal ``i``."""
    q = len(alpha)
    if n == 0:
        return SymTensor.scalar(sum((field(a) for a in alpha), field.zero), q, field)
    return SymTensor(q, n, {tuple(n if j == i else 0 for j in range(q)): alpha[i] for i in range(q)}, field)


@dataclass(frozen=True)
class HolantInstance:
    """A multigraph with one symmetric signature per vertex; each signature's
    arity must equal the vertex degree."""

    graph: MultiGraph
    signatures: tuple
    domain: int = 2
    field: object = QQ

    def __post_init__(self):
        sigs = tuple(self.signatures)
        if len(sigs) != self.graph.vertex_count:
            raise ValueError(f"{len(sigs)} signatures for {self.graph.vertex_count} vertices")
        for v, (s, d) in enumerate(zip(sigs, self.graph.degrees())):
            if s.order != d:
                raise ValueError(f"vertex {v}: signature arity {s.order} != degree {d}")
            if s.dim != self.domain:
                raise ValueError(f"vertex {v}: signature domain {s.dim} != {self.domain}")
            if s.field != self.field:
                raise TypeError(f"vertex {v}: signature over {s.field}, instance over {self.field}")
        object.__setattr__(self, "signatures", sigs)

    @classmethod
    def from_family(cls, graph: MultiGraph, family: Callable[[int], SymTensor], domain=2, field=QQ):
        """Assign ``family(deg(v))`` to every vertex ``v``."""
        return cls(graph, tuple(family(d) for d in graph.degrees()), domain, field)


def _feasible_partials(sig: SymTensor) -> set:
    """Partial count vectors that some completion maps to a nonzero value."""
    out = set()
    for e in sig.nonzero():
        for c in _below(e):
            out.add(c)
    return out


def _below(e):
    if not e:
        yield ()
        return
    for first in range(e[0] + 1):
        for rest in _below(e[1:]):
            yield (first,) + rest


def holant(inst: HolantInstance):
    """Sum over edge assignments ``E -> [q]`` of the product of vertex signatures.

    Edges are processed in order while a table maps the partial input counts
    of the open vertices (touched but not yet complete) to the accumulated
    weight, so assignments that agree on the frontier are summed once.  A
    count vector is dropped as soon as no completion of it has a nonzero
    signature value.  Arithmetic runs on integers (denominators cleared per
    signature, or residues mod p) and is converted back once at the end.
    """
    g, q, field = inst.graph, inst.domain, inst.field
    sigs = inst.signatures
    tables, feasible, scales = [], [], []
    cache = {}
    modulus = None
    for s in sigs:
        key = id(s)
        if key not in cache:
            nz = s.nonzero()
            ints, scale, modulus = to_integers(nz.values(), field)
            cache[key] = (dict(zip(nz, ints)), _feasible_partials(s), scale)
        table, feas, scale = cache[key]
        tables.append(table)
        feasible.append(feas)
        scales.append(scale)
    denominator = 1
    for sc in scales:
        denominator *= sc
    base = 1
    zero = (0,) * q
    for v, s in enumerate(sigs):
        if s.order == 0:
            base *= tables[v].get(zero, 0)
    if base == 0:
        return field.zero

    remaining = g.degrees()
    active: list[int] = []
    states = {(): base}
    for u, v in g.edges:
        added = 0
        for w in (u, v):
            if w not in active:
                active.append(w)
                added += 1
        if added:
            pad = (zero,) * added
            states = {key + pad: wt for key, wt in states.items()}
        iu, iv = active.index(u), active.index(v)
        remaining[u] -= 1
        remaining[v] -= 1
        done_u, done_v = remaining[u] == 0, remaining[v] == 0
        drop = {i for i, done in ((iu, done_u), (iv, done_v)) if done}
        fu, fv, tu, tv = feasible[u], feasible[v], tables[u], tables[v]
        nxt: dict = {}
        for key, wt in states.items():
            cu0, cv0 = key[iu], key[iv]
            for x in range(q):
                cu = cu0[:x] + (cu0[x] + 1,) + cu0[x + 1:]
                if cu not in fu:
                    continue
                cv = cv0[:x] + (cv0[x] + 1,) + cv0[x + 1:]
                if cv not in fv:
                    continue
                w = wt
                if done_u:
                    w *= tu[cu]
                if done_v:
                    w *= tv[cv]
                new = list(key)
                new[iu], new[iv] = cu, cv
                if drop:
                    new = [c for i, c in enumerate(new) if i not in drop]
                new = tuple(new)
                total = nxt.get(new, 0) + w
                nxt[new] = total % modulus if modulus is not None else total
        states = {k: w for k, w in nxt.items() if w}
        if drop:
            active = [w for i, w in enumerate(active) if i not in drop]
        if not states:
            return field.zero
    return from_integer(states.get((), 0), denominator, field)


def _resolve(spec, degree, index):
    if callable(spec):
        return spec(degree)
    if isinstance(spec, SymTensor):
        return spec
    return spec[index]


def bipartite_instance(bg: BipartiteGraph, left, right, domain=2, field=QQ) -> HolantInstance:
    """Instance on a bipartite graph.  ``left``/``right`` are either per-vertex
    signature lists, a single signature, or a family ``degree -> signature``."""
    deg = bg.graph.degrees()
    sigs = [_resolve(left, deg[v], v) for v in range(bg.left)]
    sigs += [_resolve(right, deg[bg.left + j], j) for j in range(bg.right)]
    return HolantInstance(bg.graph, tuple(sigs), domain, field)


def bipartite_holant(bg: BipartiteGraph, left, right, domain=2, field=QQ):
    for u, v in bg.graph.edges:
        if (u < bg.left) == (v < bg.left):
            raise ValueError(f"edge {(u, v)} does not cross the bipartition")
    return holant(bipartite_instance(bg, left, right, domain, field))


def _underlying(G) -> MultiGraph:
    return G.graph if isinstance(G, LabeledGraph) else G


def pm(G, field=QQ):
    """Number of perfect matchings (as a field element)."""
    g = _underlying(G)
    return holant(HolantInstance.from_family(g, lambda d: exact_one(d, field), 2, field))


def wm(G, a, field=QQ):
    """Weighted matchings: each unmatched vertex contributes ``a``."""
    g = _underlying(G)
    a = field(a)
    return holant(HolantInstance.from_family(g, lambda d: make_M(d, a, 1, field), 2, field))


def ec(G, d: int, field=QQ):
    """Proper edge colorings with ``d`` colors."""
    if d < 1:
        raise ValueError("d must be at least 1")
    g = _underlying(G)
    return holant(HolantInstance.from_family(g, lambda n: all_distinct(n, d, field), d, field))


def vdcc(G, field=QQ):
    """Vertex-disjoint cycle covers (every vertex has exactly two chosen edges)."""
    g = _underlying(G)
    return holant(HolantInstance.from_family(g, lambda d: exact_two(d, field), 2, field))


def partial_param(f, G: LabeledGraph, X, field=QQ):
    """Partial matching sums on a ``k``-labeled graph.

    ``f`` is ``"pm"`` or ``("wm", a)``.  Labeled vertices in ``X`` have exactly
    one chosen edge, other labeled vertices none, and labeled vertices carry
    no ``a`` factor.  Unlabeled vertices follow the usual signature.
    """
    k = len(G.labels)
    if set(G.labels) != set(range(1, k + 1)):
        raise ValueError("partial_param needs labels exactly [k]")
    X = set(X)
    if not X <= set(G.labels):
        raise ValueError(f"{sorted(X)} is not a subset of [{k}]")
    a = field(0) if f == "pm" else field(f[1])
    where = {v: lab for lab, v in G.labels.items()}
    sigs = []
    for v, d in enumerate(G.graph.degrees()):
        lab = where.get(v)
        if lab is None:
            sigs.append(make_M(d, a, 1, field))
        elif lab in X:
            sigs.append(make_M(d, 0, 1, field))
        else:
            sigs.append(make_M(d, 1, 0, field))
    return holant(HolantInstance(G.graph, tuple(sigs), 2, field))


def _pull_back(sig: SymTensor, M) -> SymTensor:
    """``out[j..] = sum_i sig[i..] prod_t M[i_t][j_t]`` (contract each input with ``M``)."""
    return sig.transform(transpose(M))


def holographic_move(inst: HolantInstance, left: int, T) -> HolantInstance:
    """Holographic transformation of a bipartite instance by an invertible ``T``.

    Vertices ``0..left-1`` form the left side; every right vertex must be
    binary.  Left signatures ``f`` become ``f (T^{-1})^{⊗n}`` and each right
    binary signature with matrix ``M`` becomes ``T M T^t``; the Holant value
    is unchanged.
    """
    field = inst.field
    T = [[field(x) for x in row] for row in T]
    if len(T) != inst.domain or not is_invertible(T, field):
        raise ValueError("T must be an invertible domain x domain matrix")
    Tinv = inverse(T, field)
    sigs = []
    for v, s in enumerate(inst.signatures):
        if v < left:
            sigs.append(_pull_back(s, Tinv))
        else:
            if s.order != 2:
                raise ValueError(f"right vertex {v} is not binary")
            M = binary_matrix(s)
            sigs.append(binary(matmul(matmul(T, M, field), transpose(T), field), field))
    return HolantInstance(inst.graph, tuple(sigs), inst.domain, field)


def incidence_instance(G, left_family, right_sig, domain=2, field=QQ):
    """Convenience: ``(instance, left_count)`` on the incidence graph of ``G``."""
    bg = incidence_graph(_underlying(G))
    return bipartite_instance(bg, left_family, right_sig, domain, field), bg.left
