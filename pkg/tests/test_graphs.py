import json
import random

import pytest

from homtensor import pm, wm
from homtensor.graphs import (
    LabeledGraph,
    MultiGraph,
    glue,
    glue_all,
    graph_from_json,
    graph_to_json,
    incidence_graph,
    make_K,
    make_P,
    make_U,
    make_cycle,
    make_path,
    make_star,
    random_labeled_graph,
    random_multigraph,
    subsets,
)


def same_shape(g, h):
    return g.vertex_count == h.vertex_count and g.edge_count == h.edge_count


def test_multigraph_normalizes_and_rejects_loops():
    g = MultiGraph(3, ((2, 0), (0, 1), (1, 0)))
    assert g.edges == ((0, 1), (0, 1), (0, 2))
    assert g.multiplicities() == {(0, 1): 2, (0, 2): 1}
    assert g.degrees() == [3, 2, 1]
    with pytest.raises(ValueError):
        MultiGraph(2, ((1, 1),))
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 2),))


def test_labeled_graph_invariants():
    with pytest.raises(ValueError):
        LabeledGraph(MultiGraph(2), {1: 0, 2: 0})
    with pytest.raises(ValueError):
        LabeledGraph(MultiGraph(2), {0: 0})
    # arbitrary positive labels are allowed
    g = LabeledGraph(MultiGraph(2), {7: 1, 3: 0})
    assert list(g.labels) == [3, 7]


def test_glue_identity():
    rng = random.Random(1)
    for _ in range(20):
        g = random_labeled_graph(rng, 2)
        h = glue(make_U(2), g)
        assert same_shape(g, h)
        assert pm(h) == pm(g)
        assert wm(h, 1) == wm(g, 1)


def test_glue_pendant_edges():
    edge = glue(make_P(set(), 1), make_P({1}, 1))
    assert edge.vertex_count == 2 and edge.edges == ((0, 1),)
    assert edge.labels == {1: 0}
    star = glue(make_P({1}, 1), make_P({1}, 1))
    assert star.vertex_count == 3
    assert star.graph.degrees() == [2, 1, 1]
    assert star.labels == {1: 0}


def test_glue_keeps_labels_of_both():
    g = glue(LabeledGraph(MultiGraph(1), {1: 0}), LabeledGraph(MultiGraph(1), {2: 0}))
    assert g.vertex_count == 2 and g.labels == {1: 0, 2: 1}


@pytest.mark.parametrize("f", [pm, lambda g: wm(g, 1)], ids=["pm", "wm_1"])
def test_glue_associative_and_commutative(f):
    rng = random.Random(7)
    for _ in range(25):
        k = rng.randint(0, 3)
        A, B, C = (random_labeled_graph(rng, k) for _ in range(3))
        left, right = glue(A, glue(B, C)), glue(glue(A, B), C)
        assert same_shape(left, right) and f(left) == f(right)
        ab, ba = glue(A, B), glue(B, A)
        assert same_shape(ab, ba) and f(ab) == f(ba)


def test_glue_all_empty_is_unit():
    assert glue_all([], 3) == make_U(3)


def test_incidence_graph_counts():
    assert incidence_graph(MultiGraph(0)).graph == MultiGraph(0)
    bg = incidence_graph(MultiGraph(2, ((0, 1),)))
    assert (bg.left, bg.right) == (2, 1)
    assert bg.graph.edges == ((0, 2), (1, 2))
    tri = incidence_graph(make_cycle(3))
    assert (tri.left, tri.right, tri.graph.edge_count) == (3, 3, 6)
    rng = random.Random(3)
    for _ in range(30):
        g = random_multigraph(rng, 7)
        bg = incidence_graph(g)
        assert bg.graph.vertex_count == g.vertex_count + g.edge_count
        assert bg.graph.edge_count == 2 * g.edge_count
        assert all(d == 2 for d in bg.graph.degrees()[bg.left:])


def test_generators():
    assert make_U(0).vertex_count == 0 and make_K(0).vertex_count == 0
    assert make_P(set(), 1) == LabeledGraph(MultiGraph(1), {1: 0})
    two = make_P({1, 2}, 2)
    assert two.vertex_count == 4 and two.edge_count == 2
    assert two.graph.degrees() == [1, 1, 1, 1]
    assert make_K(4).edge_count == 6
    assert make_star(3).graph.degrees() == [3, 1, 1, 1]
    assert make_cycle(2).edges == ((0, 1), (0, 1))
    assert make_path(3).edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        make_P({3}, 2)


def test_subset_order():
    assert subsets(0) == [frozenset()]
    assert subsets(1) == [frozenset(), {1}]
    assert subsets(2) == [frozenset(), {2}, {1}, {1, 2}]


def test_random_degree_cap():
    rng = random.Random(11)
    for _ in range(50):
        assert random_multigraph(rng, 8, max_degree=3).max_degree() <= 3


def test_json_roundtrip_and_loop_rejection():
    g = LabeledGraph(MultiGraph(3, ((0, 1), (0, 1), (1, 2))), {1: 2})
    obj = json.loads(json.dumps(graph_to_json(g)))
    assert graph_from_json(obj) == g
    with pytest.raises(ValueError, match=r"edges\[1\]"):
        graph_from_json({"vertices": 2, "edges": [[0, 1], [1, 1]]})
    with pytest.raises(ValueError):
        graph_from_json({"edges": []})
