"""Connectivity hypothesis checkers.

Exact subset enumeration is used up to SUBSET_BUDGET vertices and partition
enumeration up to PARTITION_BUDGET; larger inputs fall back to Stoer-Wagner
(global min cut), Gomory-Hu + Padberg-Rao (minimum T-odd cut), and matroid
union (spanning tree packing). Infinity is represented by math.inf, never by
a sentinel integer.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .errors import InvalidInput, Undecided
from .multigraph import Multigraph, components, cut_size

SUBSET_BUDGET = 14
PARTITION_BUDGET = 10


def _collapsed_weighted(g: Multigraph) -> nx.Graph:
    """Simple weighted graph with parallel-edge multiplicities; loops dropped."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v in g.edges:
        if u == v:
            continue
        if h.has_edge(u, v):
            h[u][v]["weight"] += 1
        else:
            h.add_edge(u, v, weight=1)
    return h


def edge_connectivity_witness(g: Multigraph):
    """(lambda, witness A) with d(A) = lambda minimal over proper nonempty A."""
    if g.n < 2:
        return math.inf, None
    if len(components(g)) > 1:
        return 0, frozenset(components(g)[0])
    if g.n <= SUBSET_BUDGET:
        best = math.inf
        best_a = None
        # vertex 0 fixed inside A: every cut is seen from one side
        rest = list(range(1, g.n))
        for mask in range(2 ** len(rest)):
            a = {0} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
            if len(a) == g.n:
                continue
            d = cut_size(g, a)
            if d < best:
                best, best_a = d, frozenset(a)
        return best, best_a
    h = _collapsed_weighted(g)
    value, (side, _) = nx.stoer_wagner(h)
    return value, frozenset(side)


def edge_connectivity(g: Multigraph):
    """Global edge connectivity; math.inf for a single-vertex graph."""
    return edge_connectivity_witness(g)[0]


def _min_t_odd_cut(g: Multigraph, t: set):
    """Minimum d(A) over A with |A & t| odd, via Gomory-Hu fundamental cuts.

    |t| must be even per component (guaranteed when t is derived from degree
    or parity-target sums). Returns (value, witness) or (math.inf, None).
    """
    if not t:
        return math.inf, None
    best = math.inf
    best_a = None
    for comp in components(g):
        tc = t & comp
        if not tc:
            continue
        if len(comp) == 1:
            continue
        h = _collapsed_weighted(g).subgraph(comp).copy()
        if h.number_of_edges() == 0:
            continue
        gh = nx.gomory_hu_tree(h, capacity="weight")
        for u, v in gh.edges:
            w = gh[u][v]["weight"]
            if w >= best:
                continue
            tree = gh.copy()
            tree.remove_edge(u, v)
            side = nx.node_connected_component(tree, u)
            if len(side & tc) % 2 == 1:
                best, best_a = w, frozenset(side)
    return best, best_a


def odd_edge_connectivity_witness(g: Multigraph):
    """(min d(A) over A with d(A) odd, witness); (math.inf, None) if none exists."""
    t = {v for v in range(g.n) if g.degree(v) % 2 == 1}
    if g.n <= SUBSET_BUDGET:
        best = math.inf
        best_a = None
        for mask in range(2 ** max(g.n - 1, 0)):
            a = {0} | {v for v in range(1, g.n) if mask >> (v - 1) & 1}
            if len(a) == g.n:
                continue
            d = cut_size(g, a)
            if d % 2 == 1 and d < best:
                best, best_a = d, frozenset(a)
        # the all-but-vertex-0 side: singleton complement cuts are covered by
        # symmetry (d(A) = d(V\A)), so one-sided enumeration is complete
        return best, best_a
    return _min_t_odd_cut(g, t)


def odd_edge_connectivity(g: Multigraph):
    return odd_edge_connectivity_witness(g)[0]


def _set_partitions(items):
    """All partitions of items into nonempty blocks (standard recursion)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1 :]
        yield part + [{first}]


def _cross_edges(g: Multigraph, part) -> int:
    block_of = {}
    for i, block in enumerate(part):
        for v in block:
            block_of[v] = i
    return sum(1 for u, v in g.edges if u != v and block_of[u] != block_of[v])


def spanning_forest_packing(g: Multigraph, k: int):
    """Maximum union of k edge-disjoint forests (matroid union augmentation).

    Returns a list of k edge-id sets. k edge-disjoint spanning trees exist
    iff the total packed size reaches k*(n-1).
    """
    forests = [set() for _ in range(k)]

    def forest_path(fi, a, b):
        # edge-id path between a and b inside forest fi, None if disconnected
        if a == b:
            return []
        adj = {}
        for eid in fi:
            u, v = g.edges[eid]
            adj.setdefault(u, []).append((eid, v))
            adj.setdefault(v, []).append((eid, u))
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for eid, y in adj.get(x, ()):
                if y not in prev:
                    prev[y] = (eid, x)
                    if y == b:
                        path = []
                        while prev[y] is not None:
                            eid2, y = prev[y]
                            path.append(eid2)
                        return path
                    queue.append(y)
        return None

    owner = {}
    for e0 in range(g.m):
        u0, v0 = g.edges[e0]
        if u0 == v0:
            continue
        came = {e0: None}
        queue = deque([e0])
        found = None
        while queue and found is None:
            x = queue.popleft()
            xu, xv = g.edges[x]
            for i in range(k):
                path = forest_path(forests[i], xu, xv)
                if path is None:
                    found = (x, i)
                    break
                for y in path:
                    if y not in came:
                        came[y] = (x, i)
                        queue.append(y)
        if found is None:
            continue
        x, i = found
        forests[i].add(x)
        owner[x] = i
        prev = came[x]
        while prev is not None:
            px, j = prev
            forests[j].discard(x)
            forests[j].add(px)
            owner[px] = j
            x = px
            prev = came[x]
    return forests


def tree_connectivity(g: Multigraph) -> int:
    """Maximum number of edge-disjoint spanning trees (Tutte/Nash-Williams)."""
    if g.n < 2:
        raise InvalidInput("tree connectivity needs at least two vertices")
    if len(components(g)) > 1:
        return 0
    if g.n <= PARTITION_BUDGET:
        best = math.inf
        for part in _set_partitions(list(range(g.n))):
            p = len(part)
            if p < 2:
                continue
            best = min(best, _cross_edges(g, part) // (p - 1))
        return int(best)
    upper = g.m // (g.n - 1)
    k = 0
    for cand in range(1, upper + 1):
        packed = sum(len(f) for f in spanning_forest_packing(g, cand))
        if packed == cand * (g.n - 1):
            k = cand
        else:
            break
    return k


def essential_edge_connectivity_at_least(g: Multigraph, lam: int) -> bool:
    """True iff every edge cut of size < lam has all edges on a common vertex."""
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            raise InvalidInput(f"essential connectivity requires loopless input; edge {eid} is a loop")
    if g.n < 2:
        return True
    lam_g, _ = edge_connectivity_witness(g)
    if lam_g >= lam:
        return True
    if g.n > SUBSET_BUDGET:
        raise Undecided(f"essential connectivity check above enumeration budget ({g.n} > {SUBSET_BUDGET})")
    for mask in range(1, 2 ** (g.n - 1)):
        a = {0} | {v for v in range(1, g.n) if mask >> (v - 1) & 1}
        crossing = [(x, y) for x, y in g.edges if (x in a) != (y in a)]
        if 0 < len(crossing) < lam:
            shared = set(crossing[0])
            for x, y in crossing[1:]:
                shared &= {x, y}
            if not shared:
                return False
    return True


def f_odd_cut_bound(g: Multigraph, f, lam: int):
    """Check d(X) >= lam for every X with sum of f over X odd.

    Returns (True, None) or (False, witness X). f maps vertices to Z_2.
    """
    f = tuple(int(x) % 2 for x in f)
    if len(f) != g.n:
        raise InvalidInput("f must assign a parity to every vertex")
    if sum(f) % 2 == 1:
        raise InvalidInput("sum of f over V must be even")
    t = {v for v in range(g.n) if f[v] == 1}
    if not t:
        return True, None
    if g.n <= SUBSET_BUDGET:
        for mask in range(1, 2**g.n):
            x = {v for v in range(g.n) if mask >> v & 1}
            if len(x & t) % 2 == 1 and cut_size(g, x) < lam:
                return False, frozenset(x)
        return True, None
    value, witness = _min_t_odd_cut(g, t)
    if value < lam:
        return False, witness
    return True, None


@dataclass
class CutReport:
    """Connectivity statistics with witness cuts."""

    lam: object
    odd_lam: object
    tree_conn: int
    witnesses: list = field(default_factory=list)


def analyze(g: Multigraph) -> CutReport:
    lam, wit = edge_connectivity_witness(g)
    odd_lam, odd_wit = odd_edge_connectivity_witness(g)
    tree_conn = tree_connectivity(g) if g.n >= 2 else 0
    witnesses = [w for w in (wit, odd_wit) if w is not None]
    return CutReport(lam=lam, odd_lam=odd_lam, tree_conn=tree_conn, witnesses=witnesses)
