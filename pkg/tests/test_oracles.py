import random
from itertools import combinations

import pytest

from steinercycles import (
    arc_disjoint_demand_paths,
    build_digraph,
    build_graph,
    hamiltonian_cycle,
    max_cycle_packing,
    symmetric_two_packing_decision,
    weak_two_linkage,
)
from helpers import (
    brute_demand_paths,
    brute_hamiltonian_cycle,
    brute_max_packing,
    brute_two_linkage,
)


def _path_arcs_ok(d, path, s, t):
    if path[0] != s or path[-1] != t:
        return False
    if len(set(path)) != len(path):
        return False
    return all(d.has_arc(u, v) for u, v in zip(path, path[1:]))


def _arc_usage_within_caps(d, paths):
    from collections import Counter

    usage = Counter()
    for p in paths:
        usage.update(zip(p, p[1:]))
    return all(usage[a] <= d.multiplicity[a] for a in usage)


def test_two_linkage_hand_cases():
    # disjoint direct arcs
    d = build_digraph(4, [(0, 1), (2, 3)])
    ans = weak_two_linkage(d, 0, 1, 2, 3)
    assert ans.decision and ans.witness == ((0, 1), (2, 3))
    # both demands forced through one arc
    d = build_digraph(6, [(0, 4), (4, 5), (5, 1), (2, 4), (5, 3)])
    assert not weak_two_linkage(d, 0, 1, 2, 3).decision
    # sharing a vertex is fine
    d = build_digraph(5, [(0, 4), (4, 1), (2, 4), (4, 3)])
    assert weak_two_linkage(d, 0, 1, 2, 3).decision


def test_two_linkage_requires_distinct_terminals():
    d = build_digraph(4, [(0, 1)])
    with pytest.raises(ValueError):
        weak_two_linkage(d, 0, 1, 1, 3)
    with pytest.raises(ValueError):
        weak_two_linkage(d, 0, 1, 2, 5)


def test_two_linkage_matches_brute():
    rng = random.Random(41)
    for _ in range(120):
        n = rng.randint(4, 6)
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        arcs = [a for a in pairs if rng.random() < 0.3]
        d = build_digraph(n, arcs)
        s1, t1, s2, t2 = rng.sample(range(n), 4)
        ans = weak_two_linkage(d, s1, t1, s2, t2)
        assert ans.decision == brute_two_linkage(d, s1, t1, s2, t2)
        if ans.decision:
            p1, p2 = ans.witness
            assert _path_arcs_ok(d, p1, s1, t1)
            assert _path_arcs_ok(d, p2, s2, t2)
            assert _arc_usage_within_caps(d, [p1, p2])


def test_demand_paths_hand_cases():
    grid = build_digraph(4, [(0, 1), (1, 0), (0, 2), (2, 0),
                             (1, 3), (3, 1), (2, 3), (3, 2)])
    yes = arc_disjoint_demand_paths(grid, 0, 3, 1, 1, 2, 1)
    assert yes.decision
    first, second = yes.witness
    assert len(first) == 1 and len(second) == 1
    assert not arc_disjoint_demand_paths(grid, 0, 3, 2, 1, 2, 1).decision
    assert not arc_disjoint_demand_paths(grid, 0, 3, 2, 1, 2, 2).decision


def test_demand_paths_use_parallel_arcs():
    # one 0 -> 2 copy cannot carry two paths; a second copy can
    single = build_digraph(4, [(0, 2), (2, 1), (2, 1), (2, 3)])
    assert not arc_disjoint_demand_paths(single, 0, 1, 2, 2, 3, 1).decision
    assert not brute_demand_paths(single, 0, 1, 2, 2, 3, 1)
    doubled = build_digraph(4, [(0, 2), (0, 2), (2, 1), (2, 1), (2, 3)])
    ans = arc_disjoint_demand_paths(doubled, 0, 1, 2, 2, 3, 1)
    assert ans.decision
    first, _ = ans.witness
    assert first == ((0, 2, 1), (0, 2, 1))


def test_demand_paths_rejects_bad_demands():
    d = build_digraph(4, [(0, 1)])
    with pytest.raises(ValueError):
        arc_disjoint_demand_paths(d, 0, 1, 0, 2, 3, 1)


def test_demand_paths_matches_brute():
    rng = random.Random(43)
    for _ in range(80):
        n = rng.randint(4, 6)
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        arcs = [a for a in pairs if rng.random() < 0.35]
        # sprinkle in a parallel copy now and then
        if arcs and rng.random() < 0.3:
            arcs.append(rng.choice(arcs))
        d = build_digraph(n, arcs)
        s1, t1, s2, t2 = rng.sample(range(n), 4)
        d1 = rng.randint(1, 2)
        d2 = rng.randint(1, 2)
        ans = arc_disjoint_demand_paths(d, s1, t1, d1, s2, t2, d2)
        assert ans.decision == brute_demand_paths(d, s1, t1, d1, s2, t2, d2)
        if ans.decision:
            first, second = ans.witness
            assert len(first) == d1 and len(second) == d2
            assert all(_path_arcs_ok(d, p, s1, t1) for p in first)
            assert all(_path_arcs_ok(d, p, s2, t2) for p in second)
            assert _arc_usage_within_caps(d, list(first) + list(second))


def test_hamiltonian_cycle_hand_cases():
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    ans = hamiltonian_cycle(c5)
    assert ans.decision
    seq = ans.witness
    assert seq[0] == seq[-1] == 0 and len(seq) == 6
    assert seq[1] < seq[-2]
    assert not hamiltonian_cycle(build_graph(4, [(0, 1), (0, 2), (0, 3)])).decision
    assert not hamiltonian_cycle(build_graph(2, [(0, 1)])).decision


def test_hamiltonian_cycle_matches_brute():
    rng = random.Random(47)
    for _ in range(60):
        n = rng.randint(3, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = build_graph(n, [e for e in pairs if rng.random() < 0.5])
        ans = hamiltonian_cycle(g)
        assert ans.decision == brute_hamiltonian_cycle(g)
        if ans.decision:
            seq = ans.witness
            assert len(set(seq[:-1])) == n
            assert all(g.has_edge(u, v) for u, v in zip(seq, seq[1:]))


def test_symmetric_decision_requires_symmetry():
    with pytest.raises(ValueError):
        symmetric_two_packing_decision(build_digraph(3, [(0, 1)]), {0, 1})


def test_symmetric_decision_two_terminals():
    # a path gives only one u-v route; a cycle gives two
    path = build_digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    assert not symmetric_two_packing_decision(path, {0, 2})
    ring = build_digraph(4, [(0, 1), (1, 0), (1, 2), (2, 1),
                             (2, 3), (3, 2), (3, 0), (0, 3)])
    assert symmetric_two_packing_decision(ring, {0, 2})
    # two parallel routes through distinct middles
    theta = build_digraph(4, [(0, 1), (1, 0), (1, 2), (2, 1),
                              (0, 3), (3, 0), (3, 2), (2, 3)])
    assert symmetric_two_packing_decision(theta, {0, 2})


def test_symmetric_decision_matches_solver():
    rng = random.Random(53)
    for _ in range(80):
        n = rng.randint(3, 6)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        arcs = []
        for (u, v) in pairs:
            if rng.random() < 0.5:
                arcs.extend([(u, v), (v, u)])
        d = build_digraph(n, arcs)
        k = rng.randint(2, n)
        terms = frozenset(rng.sample(range(n), k))
        want = max_cycle_packing(d, terms).value >= 2
        assert symmetric_two_packing_decision(d, terms) == want


def test_symmetric_decision_three_terminals_iff_any_cycle():
    # with at least three terminals, one Steiner cycle already implies two
    rng = random.Random(59)
    for _ in range(40):
        n = rng.randint(3, 6)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        arcs = []
        for (u, v) in pairs:
            if rng.random() < 0.45:
                arcs.extend([(u, v), (v, u)])
        d = build_digraph(n, arcs)
        k = rng.randint(3, n)
        terms = frozenset(rng.sample(range(n), k))
        has_one = brute_max_packing(d, terms) >= 1
        assert symmetric_two_packing_decision(d, terms) == has_one
