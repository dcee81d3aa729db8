"""Naive reference implementations used only by the tests.

Each one enumerates its whole search space with itertools and shares no code
with the library beyond the data classes it reads.
"""

from fractions import Fraction
from itertools import combinations, product


def edge_subsets(g):
    for r in range(len(g.edges) + 1):
        yield from combinations(range(len(g.edges)), r)


def _degree_in(g, chosen):
    deg = [0] * g.vertex_count
    for i in chosen:
        u, v = g.edges[i]
        deg[u] += 1
        deg[v] += 1
    return deg


def count_perfect_matchings(g):
    return sum(1 for s in edge_subsets(g) if all(d == 1 for d in _degree_in(g, s)))


def weighted_matchings(g, a):
    total = Fraction(0)
    for s in edge_subsets(g):
        deg = _degree_in(g, s)
        if all(d <= 1 for d in deg):
            total += Fraction(a) ** deg.count(0)
    return total


def count_cycle_covers(g):
    return sum(1 for s in edge_subsets(g) if all(d == 2 for d in _degree_in(g, s)))


def count_edge_colorings(g, d):
    total = 0
    for colors in product(range(d), repeat=len(g.edges)):
        ok = True
        for v in range(g.vertex_count):
            seen = [colors[i] for i, e in enumerate(g.edges) if v in e]
            if len(seen) != len(set(seen)):
                ok = False
                break
        total += ok
    return total


def naive_hom(g, alpha, B):
    total = 0
    for phi in product(range(len(alpha)), repeat=g.vertex_count):
        w = 1
        for v in range(g.vertex_count):
            w *= alpha[phi[v]]
        for u, v in g.edges:
            w *= B[phi[u]][phi[v]]
        total += w
    return total


def naive_holant(graph, sigs, q):
    """Sum over all ``q ** |E|`` edge assignments; ``sigs[v]`` maps a count
    vector of incident values to a field element."""
    total = 0
    for sigma in product(range(q), repeat=len(graph.edges)):
        counts = [[0] * q for _ in range(graph.vertex_count)]
        for (u, v), x in zip(graph.edges, sigma):
            counts[u][x] += 1
            counts[v][x] += 1
        w = 1
        for v in range(graph.vertex_count):
            w = w * sigs[v][tuple(counts[v])]
            if w == 0:
                break
        total = total + w
    return total


def bell_by_recurrence(k):
    from math import comb

    b = [1]
    for n in range(k):
        b.append(sum(comb(n, i) * b[i] for i in range(n + 1)))
    return b[k]
