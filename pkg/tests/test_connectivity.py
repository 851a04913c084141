import math
import random

import pytest

from conftest import eulerian_union, random_multigraph
from eqfactor import connectivity
from eqfactor.errors import InvalidInput
from eqfactor.multigraph import Multigraph, complete_graph, cycle_graph


def doubled(g):
    return Multigraph(g.n, [e for e in g.edges for _ in range(2)])


def test_edge_connectivity_frozen_values():
    assert connectivity.edge_connectivity(complete_graph(4)) == 3
    assert connectivity.edge_connectivity(cycle_graph(5)) == 2
    assert connectivity.edge_connectivity(doubled(cycle_graph(4))) == 4
    assert connectivity.edge_connectivity(Multigraph(1, [])) == math.inf
    assert connectivity.edge_connectivity(Multigraph(3, [(0, 1)])) == 0


def test_edge_connectivity_witness_is_minimal():
    lam, a = connectivity.edge_connectivity_witness(cycle_graph(5))
    assert lam == 2
    from eqfactor.multigraph import cut_size

    assert cut_size(cycle_graph(5), a) == 2


def test_odd_edge_connectivity_frozen_values():
    assert connectivity.odd_edge_connectivity(Multigraph(2, [(0, 1)])) == 1
    assert connectivity.odd_edge_connectivity(complete_graph(4)) == 3
    # K7: d(A) = |A| * (7 - |A|) is even for every A
    assert connectivity.odd_edge_connectivity(complete_graph(7)) == math.inf


def test_tree_connectivity_frozen_values():
    path = Multigraph(4, [(0, 1), (1, 2), (2, 3)])
    assert connectivity.tree_connectivity(path) == 1
    assert connectivity.tree_connectivity(complete_graph(4)) == 2
    assert connectivity.tree_connectivity(doubled(cycle_graph(5))) == 2
    assert connectivity.tree_connectivity(Multigraph(3, [(0, 1)])) == 0


def test_essential_edge_connectivity():
    assert connectivity.essential_edge_connectivity_at_least(complete_graph(4), 3)
    one_bridge = Multigraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
    assert connectivity.essential_edge_connectivity_at_least(one_bridge, 2)
    two_bridges = Multigraph(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)]
    )
    assert not connectivity.essential_edge_connectivity_at_least(two_bridges, 3)
    with pytest.raises(InvalidInput):
        connectivity.essential_edge_connectivity_at_least(Multigraph(1, [(0, 0)]), 2)


def test_f_odd_cut_bound():
    g = complete_graph(4)
    ok, wit = connectivity.f_odd_cut_bound(g, (1, 1, 1, 1), 3)
    assert ok and wit is None
    ok, wit = connectivity.f_odd_cut_bound(g, (1, 1, 1, 1), 4)
    assert not ok and len(wit) % 2 == 1
    ok, _ = connectivity.f_odd_cut_bound(g, (0, 0, 0, 0), 10)
    assert ok
    with pytest.raises(InvalidInput):
        connectivity.f_odd_cut_bound(g, (1, 0, 0, 0), 2)


def test_odd_lambda_at_least_lambda():
    rng = random.Random(7)
    for _ in range(40):
        g = random_multigraph(rng, max_n=7, max_m=14)
        lam = connectivity.edge_connectivity(g)
        odd = connectivity.odd_edge_connectivity(g)
        if odd != math.inf and lam != math.inf:
            assert odd >= lam


def test_tree_conn_implies_edge_conn():
    rng = random.Random(11)
    for _ in range(30):
        g = random_multigraph(rng, max_n=6, max_m=14, min_m=4)
        k = connectivity.tree_connectivity(g)
        if k > 0:
            assert connectivity.edge_connectivity(g) >= k


def test_f_odd_matches_odd_lambda():
    rng = random.Random(13)
    for _ in range(25):
        g = random_multigraph(rng, max_n=6, max_m=12)
        f = tuple(d % 2 for d in g.degrees)
        odd = connectivity.odd_edge_connectivity(g)
        for lam in (1, 2, 3):
            ok, _ = connectivity.f_odd_cut_bound(g, f, lam)
            assert ok == (odd >= lam)


def test_budget_cliff_agreement(monkeypatch):
    """The above-budget algorithms must agree with exact enumeration."""
    rng = random.Random(17)
    for _ in range(20):
        g = random_multigraph(rng, max_n=7, max_m=16, min_m=4)
        exact_lam = connectivity.edge_connectivity(g)
        exact_odd = connectivity.odd_edge_connectivity(g)
        exact_tree = connectivity.tree_connectivity(g)
        f = tuple(d % 2 for d in g.degrees)
        exact_f = connectivity.f_odd_cut_bound(g, f, 2)[0]
        monkeypatch.setattr(connectivity, "SUBSET_BUDGET", 1)
        monkeypatch.setattr(connectivity, "PARTITION_BUDGET", 1)
        assert connectivity.edge_connectivity(g) == exact_lam
        assert connectivity.odd_edge_connectivity(g) == exact_odd
        assert connectivity.tree_connectivity(g) == exact_tree
        assert connectivity.f_odd_cut_bound(g, f, 2)[0] == exact_f
        monkeypatch.setattr(connectivity, "SUBSET_BUDGET", 14)
        monkeypatch.setattr(connectivity, "PARTITION_BUDGET", 10)


def test_analyze_k4():
    rep = connectivity.analyze(complete_graph(4))
    assert rep.lam == 3
    assert rep.odd_lam == 3
    assert rep.tree_conn == 2


def test_eulerian_union_connectivity():
    g = eulerian_union(random.Random(3), 7, 3)
    assert connectivity.edge_connectivity(g) >= 2
    assert all(d == 6 for d in g.degrees)
