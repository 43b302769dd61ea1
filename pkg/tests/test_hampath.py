import random

import numpy as np
import pytest

from bandpass.graph import WeightedGraph
from bandpass.hampath import (
    HEURISTIC_QUALITY,
    CapacityError,
    ham_path,
    ham_path_exact,
    ham_path_heuristic,
)
from bandpass.matching import max_weight_matching
from oracles import brute_ham_path_weight, random_graph


def test_two_vertices():
    g = WeightedGraph(np.array([[0, 4], [4, 0]]))
    assert ham_path_exact(g).weight == 4
    assert ham_path_heuristic(g).weight == 4


def test_uniform_weights():
    n = 7
    g = WeightedGraph(3 * (np.ones((n, n), dtype=int) - np.eye(n, dtype=int)))
    assert ham_path_exact(g).weight == (n - 1) * 3
    assert ham_path_heuristic(g).weight == (n - 1) * 3


def test_single_vertex():
    g = WeightedGraph(np.zeros((1, 1), dtype=int))
    assert ham_path_exact(g).path == (0,)
    assert ham_path_heuristic(g).path == (0,)


@pytest.mark.parametrize("seed", range(30))
def test_exact_equals_enumeration(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 8), rng)
    res = ham_path_exact(g)
    res.validate(g)
    assert res.weight == brute_ham_path_weight(g)


@pytest.mark.parametrize("seed", range(30))
def test_heuristic_guarantees(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 10), rng)
    heur = ham_path_heuristic(g)
    heur.validate(g)
    best = ham_path_exact(g).weight
    assert heur.weight <= best
    assert 4 * heur.weight >= 3 * best
    assert heur.weight >= max_weight_matching(g, perfect=False).weight(g.weight)
    assert heur.quality == HEURISTIC_QUALITY


def test_heavy_matching_is_kept():
    # a perfect matching of weight-9 edges plus light noise
    n = 8
    w = np.ones((n, n), dtype=int) - np.eye(n, dtype=int)
    for k in range(0, n, 2):
        w[k, k + 1] = w[k + 1, k] = 9
    g = WeightedGraph(w)
    assert ham_path_heuristic(g).weight >= 4 * 9


def test_mode_dispatch_and_cap():
    rng = random.Random(0)
    g = random_graph(6, rng)
    assert ham_path(g, "auto").method == "exact"
    assert ham_path(g, "auto", cap=4).method == "heuristic"
    with pytest.raises(CapacityError):
        ham_path_exact(g, cap=4)
    with pytest.raises(ValueError):
        ham_path(g, "fast")


def test_heuristic_scales():
    rng = random.Random(1)
    g = random_graph(40, rng, p=0.3)
    ham_path_heuristic(g).validate(g)
