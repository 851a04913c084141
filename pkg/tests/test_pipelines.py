import random

import pytest

from conftest import eulerian_union, random_multigraph
from eqfactor.errors import Infeasible, InvalidInput
from eqfactor.lab import oracle_equitable
from eqfactor.multigraph import Multigraph, complete_graph, cycle_graph
from eqfactor.pipelines import (
    EquitableRequest,
    equitable_factorize,
    find_Z_set,
    parity_factorize,
    regular_factorize,
    regular_split,
    three_factor_criterion,
)


def doubled(g):
    return Multigraph(g.n, [e for e in g.edges for _ in range(2)])


def test_find_z_set_frozen():
    assert find_Z_set(complete_graph(7), 3) == frozenset()
    g = Multigraph(4, [(0, 1)] * 2 + [(0, 2), (1, 3), (2, 3), (2, 3), (3, 2)])
    assert g.degrees == (3, 3, 4, 4) and g.m == 7
    z = find_Z_set(g, 2)
    assert z == frozenset({0})  # smallest, lexicographically first odd vertex
    loopy = Multigraph(7, list(complete_graph(7).edges) + [(0, 0)])
    assert find_Z_set(loopy, 3) is None


def test_equitable_k7():
    rep = equitable_factorize(complete_graph(7), EquitableRequest(k=3, Z=frozenset()))
    assert rep.max_deviation == 0
    assert rep.factorization.factor_sizes() == [7, 7, 7]
    assert all(d == 2 for degs in rep.factorization.all_factor_degrees() for d in degs)


def test_equitable_k4():
    rep = equitable_factorize(complete_graph(4), EquitableRequest(k=2, Z=frozenset()))
    assert rep.max_deviation < 1
    assert sorted(rep.factorization.factor_sizes()) == [3, 3]
    for degs in rep.factorization.all_factor_degrees():
        assert all(1 <= d <= 2 for d in degs)


def test_equitable_z_variant():
    g = complete_graph(4)
    rep = equitable_factorize(g, EquitableRequest(k=2, z=0))
    for degs in rep.factorization.all_factor_degrees():
        assert abs(degs[0] - 1.5) < 2
        assert all(abs(degs[v] - 1.5) < 1 for v in range(1, 4))


def test_equitable_z_residue_mismatch():
    g = complete_graph(4)
    with pytest.raises(InvalidInput):
        equitable_factorize(g, EquitableRequest(k=4, Z=frozenset({0})))


def test_equitable_auto_matches_oracle():
    rng = random.Random(43)
    for _ in range(15):
        g = eulerian_union(rng, rng.choice((5, 7)), rng.randint(1, 2))
        k = rng.choice((2, 3))
        try:
            rep = equitable_factorize(g, EquitableRequest(k=k))
        except Infeasible:
            continue
        if rep.warnings and any("fell back" in w for w in rep.warnings):
            continue
        assert rep.max_deviation < 1
        assert rep.size_deviation < 1


def test_three_factor_k7():
    res = three_factor_criterion(complete_graph(7))
    assert res.decomposable
    assert res.report.max_deviation < 1


def test_three_factor_impossible():
    g = Multigraph(7, list(complete_graph(7).edges) + [(0, 0)])
    res = three_factor_criterion(g)
    assert not res.decomposable
    assert "exactly one vertex" in res.explanation


def test_three_factor_impossible_matches_oracle():
    # small analogue: K4 + loop, degrees (5, 3, 3, 3): one vertex != 0 mod 3
    g = Multigraph(4, list(complete_graph(4).edges) + [(0, 0)])
    res = three_factor_criterion(g)
    assert not res.decomposable
    assert not oracle_equitable(g, 3)


def test_parity_odd_k_k7():
    rep = parity_factorize(complete_graph(7), 3)
    assert rep.parity_ok
    assert rep.max_deviation < 2
    assert all(d == 2 for degs in rep.factorization.all_factor_degrees() for d in degs)


def test_parity_odd_k_rejects_f():
    with pytest.raises(InvalidInput):
        parity_factorize(complete_graph(7), 3, f=(1,) * 7)


def test_parity_even_k():
    g = eulerian_union(random.Random(5), 6, 3)  # 6-regular on 6 vertices
    f = (1, 1, 1, 1, 0, 0)
    rep = parity_factorize(g, 2, f=f)
    assert rep.parity_ok
    for degs in rep.factorization.all_factor_degrees():
        for v in range(6):
            assert degs[v] % 2 == f[v]
            assert abs(degs[v] - 3) < 2
    with pytest.raises(InvalidInput):
        parity_factorize(g, 2)  # even k needs f
    with pytest.raises(InvalidInput):
        parity_factorize(g, 2, f=(1, 0, 0, 0, 0, 0))  # odd sum


def test_regular_factorize():
    rep = regular_factorize(complete_graph(7), 3)
    assert rep.max_deviation == 0
    rep = regular_factorize(doubled(cycle_graph(4)), 2)
    assert all(d == 2 for degs in rep.factorization.all_factor_degrees() for d in degs)
    with pytest.raises(InvalidInput):
        regular_factorize(complete_graph(4), 2)  # degrees 3 not divisible


def test_regular_split_exact():
    fz = regular_split(complete_graph(7), (2, 2, 2), 3)
    assert all(d == 2 for i in range(1, 4) for d in fz.factor_degrees(i))
    fz = regular_split(complete_graph(7), (4, 2), 3)
    assert all(d == 4 for d in fz.factor_degrees(1))
    assert all(d == 2 for d in fz.factor_degrees(2))


def test_regular_split_infeasible_grouping():
    with pytest.raises(Infeasible):
        regular_split(complete_graph(7), (3, 3), 3)  # 3 not a multiple of 2


def test_regular_split_bounded():
    g = Multigraph(7, list(complete_graph(7).edges)[:-1])  # K7 minus one edge
    fz = regular_split(g, (2, 2, 2), 3, bounded_mode=True)
    for i in range(1, 4):
        assert max(fz.factor_degrees(i)) <= 2
    totals = [0] * 7
    for i in range(1, 4):
        for v in range(7):
            totals[v] += fz.factor_degrees(i)[v]
    assert tuple(totals) == g.degrees


def test_regular_split_validations():
    with pytest.raises(InvalidInput):
        regular_split(complete_graph(7), (), 3)
    with pytest.raises(InvalidInput):
        regular_split(complete_graph(7), (2, 2, 3), 3)  # k does not divide r
    with pytest.raises(InvalidInput):
        regular_split(complete_graph(6), (2, 2, 2), 3)  # not 6-regular
