import random

import pytest

from bandpass.edges import InvariantError, Matching, is_acyclic_2matching, is_matching, norm
from bandpass.graph import build_graph, matching_bandpasses, residual_instance
from bandpass.instance import gen_random
from bandpass.matching import decompose_4matching, max_weight_bmatching, max_weight_matching
from bandpass.partition import (
    PartitionError,
    chain_paths,
    partition_acyclic_into_three,
    partition_into_four,
    partition_pair_with_property_p,
)
from bandpass.partition.four import mark_cycles
from bandpass.partition.result import length4_cycles
from oracles import exists_valid_split, random_2matching, random_perfect_matching

SQUARE = frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
DIAGONALS = Matching(4, frozenset({(0, 2), (1, 3)}))


# counterexamples: why four parts and three parts are needed

def test_square_needs_four_parts():
    assert not exists_valid_split(SQUARE, DIAGONALS, 3)
    assert exists_valid_split(SQUARE, DIAGONALS, 4)
    res = partition_into_four(SQUARE, DIAGONALS)
    assert res.problems(SQUARE) == []
    assert all(len(es) == 1 for es in res.parts.values())


def test_crossed_path_needs_three_parts():
    path = frozenset({(0, 1), (1, 2), (2, 3)})
    m1 = Matching(4, frozenset({(0, 2), (1, 3)}))
    assert not exists_valid_split(path, m1, 2)
    assert exists_valid_split(path, m1, 3)
    res = partition_acyclic_into_three(path, m1)
    assert res.problems(path) == []


# four-way split

def test_four_single_edge():
    res = partition_into_four({(0, 1)}, Matching(4, frozenset({(2, 3)})))
    assert res.parts["X0"] == {(0, 1)}
    assert all(not res.parts[lab] for lab in ("X1", "X2", "X3"))


def test_four_rejects_m1_edges():
    with pytest.raises(PartitionError):
        partition_into_four({(0, 2)}, DIAGONALS)


def test_mark_cycles_takes_lightest_edge():
    # M1 + rest is one 6-cycle; the lightest rest edge is marked
    m1 = Matching(6, frozenset({(0, 1), (2, 3), (4, 5)}))
    rest = frozenset({(1, 2), (3, 4), (0, 5)})
    w = [[0] * 6 for _ in range(6)]
    for (u, v), x in {(1, 2): 5, (3, 4): 1, (0, 5): 3}.items():
        w[u][v] = w[v][u] = x
    assert mark_cycles(m1, rest, w) == {(3, 4)}


@pytest.mark.parametrize("seed", range(80))
def test_four_random(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 6, 8, 10])
    m1 = random_perfect_matching(n, rng)
    c = random_2matching(n, m1, rng)
    res = partition_into_four(c, m1)
    assert res.problems(c) == []
    # X3 holds one edge per cycle of M1 + (X2 + X3) at most
    assert len(res.parts["X3"]) <= len(c) // 3 + 1


# three-way split

def test_three_single_edge():
    res = partition_acyclic_into_three({(0, 1)}, Matching(4, frozenset({(0, 2), (1, 3)})))
    assert res.parts == {"Y0": {(0, 1)}, "Y1": frozenset(), "Y2": frozenset()}


def test_three_rejects_bad_input():
    m1 = Matching(4, frozenset({(0, 2), (1, 3)}))
    with pytest.raises(PartitionError):
        partition_acyclic_into_three(SQUARE, m1)
    with pytest.raises(PartitionError):
        partition_acyclic_into_three({(0, 2)}, m1)


def test_chain_paths_avoids_m1():
    m1 = Matching(6, frozenset({(1, 2), (3, 4), (0, 5)}))
    path = chain_paths([[0, 1], [2, 3], [4, 5]], m1)
    assert sorted(path) == list(range(6))
    assert not {norm(a, b) for a, b in zip(path, path[1:])} & m1.edges


@pytest.mark.parametrize("seed", range(80))
def test_three_random_hamiltonian_paths(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 6, 8, 10, 12])
    m1 = random_perfect_matching(n, rng)
    for _ in range(100):
        order = list(range(n))
        rng.shuffle(order)
        p = frozenset(norm(a, b) for a, b in zip(order, order[1:]))
        if not p & m1.edges:
            break
    else:
        pytest.skip("no M1-free path drawn")
    res = partition_acyclic_into_three(p, m1)
    assert res.problems(p) == []


@pytest.mark.parametrize("seed", range(40))
def test_three_random_path_systems(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 6, 8, 10])
    m1 = random_perfect_matching(n, rng)
    p = random_2matching(n, m1, rng, cycles=False)
    assert partition_acyclic_into_three(p, m1).problems(p) == []


# pair scheme with property (P)

def test_pair_square_with_empty_partner():
    x, y, cert = partition_pair_with_property_p(SQUARE, frozenset(), DIAGONALS)
    assert cert.ok and cert.problematic_pairs_resolved == 1
    # the pooled pair is broken up by shifting one square edge into a Y part
    assert sum(len(es) for es in y.parts.values()) == 1
    assert not length4_cycles(DIAGONALS, x.parts["X2"] | x.parts["X3"])


def test_pair_two_squares_sharing_vertices():
    m1 = Matching(8, frozenset({(0, 2), (1, 3), (4, 6), (5, 7)}))
    c2 = frozenset({(0, 4), (1, 4), (1, 5), (0, 5)})
    x, y, cert = partition_pair_with_property_p(SQUARE, c2, m1)
    assert cert.ok and cert.problematic_pairs_resolved == 1
    assert x.edges() | y.edges() == SQUARE | c2


def test_pair_rejects_shared_edges():
    with pytest.raises(PartitionError):
        partition_pair_with_property_p(SQUARE, {(0, 1)}, DIAGONALS)


def test_pair_raises_when_search_cannot_move():
    # a zero budget leaves the problematic pair in place, which must be loud
    with pytest.raises(InvariantError, match="unresolved problematic pair"):
        partition_pair_with_property_p(SQUARE, frozenset(), DIAGONALS, budget=0)


def pipeline_pair(seed: int):
    rng = random.Random(seed)
    n = rng.choice([4, 6, 8, 10, 12])
    inst = gen_random(n, rng.randint(3, 10), rng.choice([0.3, 0.5, 0.7]), seed)
    m1 = max_weight_matching(build_graph(inst))
    gr = build_graph(residual_instance(inst, matching_bandpasses(inst, m1)))
    c1, c2 = decompose_4matching(max_weight_bmatching(gr, 4))
    return m1, gr.weight, c1, c2


@pytest.mark.parametrize("seed", range(60))
def test_pair_random_pipeline_inputs(seed):
    m1, w, c1, c2 = pipeline_pair(seed)
    x, y, cert = partition_pair_with_property_p(c1, c2, m1, w)
    assert cert.ok, cert.failed()
    assert x.problems() == [] and y.problems() == []
    assert x.edges() | y.edges() == c1.edges | c2.edges
    assert is_matching(x.parts["X2"] | x.parts["X3"])
    for lab in ("X0", "X1", "X2"):
        assert is_acyclic_2matching(m1.edges, x.parts[lab])
