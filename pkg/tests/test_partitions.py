import random
from fractions import Fraction

import pytest

from homtensor.linalg import matrix_rank
from homtensor.graphs import MultiGraph, make_cycle, random_multigraph
from homtensor.partitions import (
    SetPartition,
    bell,
    discrete,
    enumerate_partitions,
    hardcore_matrix,
    hardcore_parameter,
    hardcore_rank_experiment,
    independence_polynomial,
    join,
)

from oracles import bell_by_recurrence


def test_enumeration_counts():
    assert len(enumerate_partitions(0)) == 1
    assert {tuple(p.blocks) for p in enumerate_partitions(2)} == {((1,), (2,)), ((1, 2),)}
    for k in range(7):
        parts = enumerate_partitions(k)
        assert len(parts) == len(set(parts)) == bell(k) == bell_by_recurrence(k)
    assert bell(4) == 15


def test_discrete_first():
    assert enumerate_partitions(3)[0] == discrete(3)


def test_set_partition_validation():
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2]])
    with pytest.raises(ValueError):
        SetPartition(2, [[1, 2], [2]])
    assert SetPartition(3, [[3, 1], [2]]).blocks == ((1, 3), (2,))


def test_join_examples():
    P = SetPartition(3, [[1, 2], [3]])
    Q = SetPartition(3, [[1], [2, 3]])
    assert join(P, Q) == SetPartition(3, [[1, 2, 3]])
    assert join(P, P) == P
    assert join(discrete(3), Q) == Q
    with pytest.raises(ValueError):
        join(P, discrete(2))


def test_join_lattice_laws():
    rng = random.Random(5)
    for _ in range(100):
        k = rng.randint(1, 6)
        parts = enumerate_partitions(k)
        P, Q, R = (rng.choice(parts) for _ in range(3))
        assert join(P, Q) == join(Q, P)
        assert join(join(P, Q), R) == join(P, join(Q, R))
        assert join(P, P) == P
        assert join(discrete(k), P) == P


def test_hardcore_matrix_examples():
    assert hardcore_matrix(1, 4) == [[5]]
    assert hardcore_matrix(2, 2) == [[9, 3], [3, 3]]
    M = hardcore_matrix(3, 7)
    assert M[0][0] == 512
    assert all(M[i][j] == M[j][i] for i in range(5) for j in range(5))


def test_rank_experiment():
    rows = hardcore_rank_experiment(2, 2)
    assert rows[1] == {"k": 2, "bell": 2, "rank": 2, "two_pow_k": 4}
    rows = hardcore_rank_experiment(5, 7)
    assert [r["rank"] for r in rows] == [1, 2, 5, 15, 52]
    rows = hardcore_rank_experiment(4, Fraction(1, 2))
    assert all(r["rank"] == r["bell"] for r in rows)


@pytest.mark.parametrize("lam", [-1, 0, 1])
def test_forbidden_lambda(lam):
    with pytest.raises(ValueError):
        hardcore_rank_experiment(3, lam)


def test_forbidden_values_really_drop_rank():
    # lambda = k - 2 is excluded for a reason: the k = 3 matrix is singular there
    assert matrix_rank(hardcore_matrix(3, 1)) < bell(3)
    assert matrix_rank(hardcore_matrix(3, -1)) < bell(3)


def test_hardcore_parameter_examples():
    assert hardcore_parameter(MultiGraph(1), 1) == 2
    assert hardcore_parameter(MultiGraph(2, ((0, 1),)), 1) == 3
    assert hardcore_parameter(make_cycle(4), 1) == 7
    with pytest.raises(ValueError):
        hardcore_parameter(MultiGraph(1), 0)


def test_hardcore_parameter_is_independence_polynomial():
    rng = random.Random(6)
    for _ in range(50):
        g = random_multigraph(rng, 8, max_edges=12)
        for lam in (1, 2, -2, Fraction(1, 3)):
            assert hardcore_parameter(g, lam) == independence_polynomial(g, lam)
