"""Set partitions of [k], their join, and the hardcore-gas connection matrix."""

from __future__ import annotations

from itertools import product

from .field import QQ
from .hom import hardcore_graph, hom
from .linalg import matrix_rank

__all__ = [
    "SetPartition",
    "enumerate_partitions",
    "bell",
    "join",
    "discrete",
    "hardcore_matrix",
    "hardcore_rank_experiment",
    "hardcore_parameter",
    "independence_polynomial",
]


class SetPartition:
    """Partition of ``[k]`` in canonical form: blocks sorted, ordered by minimum."""

    __slots__ = ("k", "blocks")

    def __init__(self, k: int, blocks):
        blocks = [tuple(sorted(b)) for b in blocks if b]
        blocks.sort(key=lambda b: b[0])
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, k + 1)):
            raise ValueError(f"{blocks} is not a partition of [{k}]")
        self.k = k
        self.blocks = tuple(blocks)

    @classmethod
    def from_rgs(cls, rgs) -> SetPartition:
        """From a restricted-growth string (block index of each element)."""
        blocks = {}
        for i, b in enumerate(rgs, start=1):
            blocks.setdefault(b, []).append(i)
        return cls(len(rgs), blocks.values())

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and (self.k, self.blocks) == (other.k, other.blocks)

    def __hash__(self):
        return hash((self.k, self.blocks))

    def __repr__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def _rgs(k: int):
    if k == 0:
        yield ()
        return
    for prefix in _rgs(k - 1):
        top = max(prefix, default=-1)
        # new block first, so the discrete partition leads
        for b in range(top + 1, -1, -1):
            yield prefix + (b,)


def enumerate_partitions(k: int) -> list[SetPartition]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [SetPartition.from_rgs(r) for r in _rgs(k)]


def bell(k: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def discrete(k: int) -> SetPartition:
    return SetPartition(k, [[i] for i in range(1, k + 1)])


def join(P: SetPartition, Q: SetPartition) -> SetPartition:
    """Finest common coarsening, by union-find over the blocks of both."""
    if P.k != Q.k:
        raise ValueError(f"partitions of [{P.k}] and [{Q.k}] cannot be joined")
    parent = list(range(P.k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in P.blocks + Q.blocks:
        root = find(block[0])
        for x in block[1:]:
            parent[find(x)] = root
    groups = {}
    for x in range(1, P.k + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition(P.k, groups.values())


def hardcore_matrix(k: int, lam, field=QQ):
    """Rows and columns are partitions of ``[k]``; entry ``(1 + lam) ** |P v Q|``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    base = 1 + field(lam)
    parts = enumerate_partitions(k)
    return [[base ** len(join(P, Q)) for Q in parts] for P in parts]


def _forbidden(k_max: int):
    return [-1] + list(range(0, k_max - 1))


def hardcore_rank_experiment(k_max: int, lam) -> list[dict]:
    """Rank of the hardcore matrix for ``k = 1..k_max`` next to ``Bell(k)`` and ``2**k``."""
    lam = QQ(lam)
    forbidden = _forbidden(k_max)
    if lam in forbidden:
        raise ValueError(f"lambda must avoid {forbidden} for k_max = {k_max}")
    rows = []
    for k in range(1, k_max + 1):
        rows.append({
            "k": k,
            "bell": bell(k),
            "rank": matrix_rank(hardcore_matrix(k, lam)),
            "two_pow_k": 2**k,
        })
    return rows


def hardcore_parameter(G, lam, field=QQ):
    """``hom(G, H)`` with vertex weights ``(1, lam)`` and edge matrix ``[[1,1],[1,0]]``."""
    if field(lam) == 0:
        raise ValueError("lambda must be nonzero (vertex weights are nowhere zero)")
    return hom(G, hardcore_graph(lam, field))


def independence_polynomial(G, lam, field=QQ):
    """Brute force ``sum_I lam ** |I|`` over independent sets ``I``."""
    g = G.graph if hasattr(G, "labels") else G
    lam = field(lam)
    adjacent = set(g.edges)
    total = field.zero
    for bits in product((0, 1), repeat=g.vertex_count):
        if any(bits[u] and bits[v] for u, v in adjacent):
            continue
        total = total + lam ** sum(bits)
    return total
