import itertools
import random
from fractions import Fraction

import pytest

from homtensor.field import GF, QQ
from homtensor.graphs import LabeledGraph, MultiGraph, disjoint_union, glue, make_U, random_labeled_graph, random_multigraph
from homtensor.hom import WeightedGraph, hardcore_graph, hom, hom_phi, random_weighted_graph

from oracles import naive_hom

TRIANGLE = WeightedGraph((1, 1, 1), ((0, 1, 1), (1, 0, 1), (1, 1, 0)))
K2 = MultiGraph(2, ((0, 1),))


def test_weighted_graph_validation():
    with pytest.raises(ValueError):
        WeightedGraph((1, 0), ((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        WeightedGraph((1, 1), ((1, 2), (1, 1)))
    H = WeightedGraph.from_json({"q": 2, "alpha": ["1/2", "-1/2"], "B": [["2", "0"], ["0", "2"]]})
    assert H.alpha == (Fraction(1, 2), Fraction(-1, 2))
    assert H.to_json()["alpha"] == ["1/2", "-1/2"]


def test_examples():
    assert hom(MultiGraph(0), TRIANGLE) == 1
    assert hom(K2, TRIANGLE) == 6
    assert hom(K2, hardcore_graph(1)) == 3


def test_against_naive_enumeration():
    rng = random.Random(5)
    for _ in range(60):
        g = random_multigraph(rng, 5, max_edges=7)
        H = random_weighted_graph(rng, rng.randint(1, 3))
        assert hom(g, H) == naive_hom(g, H.alpha, H.B)


def test_rational_weights():
    H = WeightedGraph((Fraction(1, 2), Fraction(-1, 3)), ((Fraction(2, 5), 1), (1, Fraction(-3, 7))))
    rng = random.Random(9)
    for _ in range(20):
        g = random_multigraph(rng, 5)
        assert hom(g, H) == naive_hom(g, H.alpha, H.B)


def test_over_prime_field():
    F = GF(7)
    H = WeightedGraph((1, 3), ((2, 5), (5, 6)), F)
    rng = random.Random(2)
    for _ in range(20):
        g = random_multigraph(rng, 5)
        assert hom(g, H) == F(naive_hom(g, (1, 3), ((2, 5), (5, 6))))


def test_hom_phi_unit():
    rng = random.Random(4)
    for _ in range(10):
        H = random_weighted_graph(rng, 3)
        for phi in itertools.product(range(3), repeat=2):
            assert hom_phi(make_U(2), H, phi) == 1


def test_hom_phi_sums_to_hom():
    rng = random.Random(6)
    for _ in range(30):
        H = random_weighted_graph(rng, rng.randint(1, 3))
        k = rng.randint(0, 2)
        G = random_labeled_graph(rng, k)
        total = QQ.zero
        for phi in itertools.product(range(H.q), repeat=k):
            w = QQ.one
            for c in phi:
                w *= H.alpha[c]
            total += w * hom_phi(G, H, phi)
        assert total == hom(G.graph, H)


def test_hom_phi_multiplicative_under_glue():
    rng = random.Random(8)
    for _ in range(30):
        H = random_weighted_graph(rng, rng.randint(1, 3))
        k = rng.randint(0, 2)
        G1, G2 = random_labeled_graph(rng, k), random_labeled_graph(rng, k)
        for phi in itertools.product(range(H.q), repeat=k):
            assert hom_phi(glue(G1, G2), H, phi) == hom_phi(G1, H, phi) * hom_phi(G2, H, phi)


def test_hom_phi_errors():
    G = LabeledGraph(MultiGraph(2, ((0, 1),)), {1: 0, 2: 1})
    with pytest.raises(ValueError):
        hom_phi(G, TRIANGLE, {1: 0})
    with pytest.raises(ValueError):
        hom_phi(G, TRIANGLE, (0, 3))
    assert hom_phi(G, TRIANGLE, {1: 0, 2: 1}) == 1
    assert hom_phi(G, TRIANGLE, {1: 2, 2: 2}) == 0


def test_multiplicative_over_disjoint_union():
    rng = random.Random(10)
    for _ in range(40):
        H = random_weighted_graph(rng, rng.randint(1, 3))
        g1, g2 = random_multigraph(rng, 4), random_multigraph(rng, 4)
        assert hom(disjoint_union(g1, g2), H) == hom(g1, H) * hom(g2, H)


def test_labels_ignored():
    rng = random.Random(12)
    for _ in range(20):
        H = random_weighted_graph(rng, 2)
        G = random_labeled_graph(rng, 2)
        assert hom(G, H) == hom(G.graph, H)


def test_isolated_target_vertex_only_hits_isolated_vertices():
    # a new target vertex with zero B row can only receive isolated vertices,
    # so graphs without isolated vertices do not see it
    rng = random.Random(13)
    for _ in range(30):
        H = random_weighted_graph(rng, 2)
        bigger = WeightedGraph(H.alpha + (5,), tuple(row + (0,) for row in H.B) + ((0, 0, 0),))
        g = random_multigraph(rng, 5)
        isolated = sum(1 for d in g.degrees() if d == 0)
        if isolated == 0:
            assert hom(g, bigger) == hom(g, H)
        else:
            assert hom(g, bigger) == naive_hom(g, bigger.alpha, bigger.B)
