import itertools
import random

import numpy as np
import pytest

from bandpass.edges import Matching, norm
from bandpass.graph import build_graph
from bandpass.hampath import CapacityError
from bandpass.instance import Instance, Permutation, bandpass_count, gen_from_graph, gen_random
from bandpass.matching import max_weight_matching
from bandpass.oracle import (
    brute_force_optimum,
    classify_groups,
    length2_strips,
    verify_inequalities,
    verify_instance,
)
from oracles import has_ham_path

K4 = gen_from_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def grouping_example():
    """Rows a, b, t, i, j, k, l, u: one oracle strip of every group, plus a B2 pair."""
    a, b, t, i, j, k, l, u = range(8)
    columns = [{a, b, i, j, k, l}, {j, k, l}, {t, i}, {k, l}, {l, u}]
    cells = np.zeros((8, len(columns)), dtype=np.uint8)
    for c, rows in enumerate(columns):
        for r in rows:
            cells[r, c] = 1
    m1 = Matching(8, frozenset(norm(*e) for e in [(a, b), (t, i), (j, k), (l, u)]))
    pi = Permutation((i, j, t, a, b, u, k, l))
    return Instance(cells), m1, pi


def all_perms_max(inst):
    return max(bandpass_count(inst, Permutation(p)) for p in itertools.permutations(range(inst.n)))


def test_zero_instance():
    opt = brute_force_optimum(Instance(np.zeros((5, 3), dtype=np.uint8)))
    assert opt.value == 0 and opt.s2 == 0


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_single_all_one_column(n):
    assert brute_force_optimum(Instance(np.ones((n, 1), dtype=np.uint8))).value == n // 2


def test_k4_optimum():
    opt = brute_force_optimum(K4)
    assert opt.value == 3 and opt.perm.order == (0, 1, 2, 3)


@pytest.mark.parametrize("seed", range(25))
def test_oracle_matches_full_enumeration(seed):
    rng = random.Random(seed)
    inst = gen_random(rng.randint(1, 7), rng.randint(1, 6), rng.random(), seed)
    opt = brute_force_optimum(inst)
    assert opt.value == all_perms_max(inst) == bandpass_count(inst, opt.perm)
    assert opt.perm.order[0] <= opt.perm.order[-1]


def test_oracle_frozen_value():
    # computed once by the oracle and pinned
    opt = brute_force_optimum(gen_random(6, 4, 0.5, 42))
    assert (opt.value, opt.s2, opt.perm.order) == (3, 3, (0, 1, 2, 3, 4, 5))


def test_oracle_enumerates_beyond_eight_rows():
    inst = gen_random(9, 3, 0.5, 4)
    opt = brute_force_optimum(inst)
    assert opt.value == bandpass_count(inst, opt.perm)
    with pytest.raises(CapacityError):
        brute_force_optimum(gen_random(11, 2, 0.5, 0))


def test_all_maximizers_are_optimal():
    inst = gen_random(6, 4, 0.5, 7)
    opt = brute_force_optimum(inst, all_maximizers=True)
    assert opt.maximizers
    assert all(bandpass_count(inst, p) == opt.value for p in opt.maximizers)
    count = sum(bandpass_count(inst, Permutation(p)) == opt.value for p in itertools.permutations(range(6)))
    assert len(opt.maximizers) == count


def test_grouping_example_labels():
    inst, m1, pi = grouping_example()
    a, b, t, i, j, k, l, u = range(8)
    cl = classify_groups(inst, pi, m1)
    assert cl.groups == {
        (a, b, 0): "B1",
        (i, j, 0): "B2",
        (k, l, 0): "B2",
        (k, l, 1): "B3",
        (k, l, 3): "B4",
    }
    assert cl.induced == [(i, l, 0)]
    assert cl.b2_m1_edges == [(j, k)]
    assert all(c.passed for c in verify_inequalities(inst, pi, m1, cl))


def test_b1_only_when_optimum_follows_m1():
    inst = Instance.from_rows(["1100", "1100", "0011", "0011"])
    m1 = Matching(4, frozenset({(0, 1), (2, 3)}))
    cl = classify_groups(inst, Permutation((0, 1, 2, 3)), m1)
    assert cl.counts == {"B1": 4, "B2": 0, "B3": 0, "B4": 0}


def test_classify_rejects_mismatched_matching():
    with pytest.raises(ValueError):
        classify_groups(K4, Permutation.identity(4), Matching(6, frozenset({(0, 1)})))


def test_zero_instance_checks_pass():
    inst = Instance(np.zeros((4, 2), dtype=np.uint8))
    m1 = max_weight_matching(build_graph(inst))
    assert all(c.passed for c in verify_inequalities(inst, brute_force_optimum(inst), m1))


def test_k4_checks_pass():
    opt = brute_force_optimum(K4)
    m1 = max_weight_matching(build_graph(K4))
    checks = {c.name: c for c in verify_inequalities(K4, opt, m1)}
    assert all(c.passed for c in checks.values())
    cl = classify_groups(K4, opt, m1)
    assert cl.counts == {"B1": 1, "B2": 0, "B3": 0, "B4": 2}
    assert (checks["m1_group_bound"].lhs, checks["m1_half_pairs"].rhs) == (2, 1.5)


@pytest.mark.parametrize("seed", range(40))
def test_random_classification_identities(seed):
    rng = random.Random(seed)
    inst = gen_random(rng.choice([4, 6, 8]), rng.randint(3, 6), rng.choice([0.2, 0.5, 0.8]), seed)
    opt = brute_force_optimum(inst)
    m1 = max_weight_matching(build_graph(inst))
    cl = classify_groups(inst, opt, m1)
    assert sum(cl.counts.values()) == opt.s2 == len(length2_strips(inst, opt.perm))
    assert cl.counts["B2"] % 2 == 0 and cl.counts["B2"] == 2 * len(cl.induced)
    deg = {}
    for x, y in cl.induced_edges:
        deg[x] = deg.get(x, 0) + 1
        deg[y] = deg.get(y, 0) + 1
    assert max(deg.values(), default=0) <= 4


@pytest.mark.parametrize("seed", range(15))
def test_exhaustive_mode_checks_every_maximizer(seed):
    inst = gen_random(6, 4, 0.5, 100 + seed)
    res = verify_instance(inst, exhaustive=True)
    assert all(c.passed for c in res["checks"])


def test_hamiltonian_path_reduction():
    # planted path 0-1-2-3-4 plus a chord
    inst = gen_from_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 3)])
    assert brute_force_optimum(inst).value == 4
    star = [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert not has_ham_path(5, star)
    assert brute_force_optimum(gen_from_graph(5, star)).value < 4
