import random

from eqfactor.multigraph import Multigraph, Orientation


def random_multigraph(rng, max_n=10, max_m=30, min_n=2, min_m=1, allow_loops=True):
    n = rng.randint(min_n, max_n)
    m = rng.randint(min_m, max_m)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if not allow_loops and u == v:
            v = (v + 1) % n
        edges.append((u, v))
    return Multigraph(n, edges)


def random_orientation(rng, g):
    tails = [u if (u == v or rng.random() < 0.5) else v for u, v in g.edges]
    return Orientation(g, tails)


def random_two_edge_connected(rng, max_n=8, max_extra=8):
    """Hamiltonian cycle plus extra non-loop edges: always 2-edge-connected."""
    n = rng.randint(3, max_n)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    for _ in range(rng.randint(0, max_extra)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.append((u, v))
    return Multigraph(n, edges)


def eulerian_union(rng, n, cycles):
    """Union of random Hamiltonian cycles: 2*cycles-regular, Eulerian."""
    edges = []
    for _ in range(cycles):
        perm = list(range(n))
        rng.shuffle(perm)
        edges += [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    return Multigraph(n, edges)


def proper_coloring(b, coloring):
    seen = [set() for _ in range(b.n)]
    for eid, (u, w) in enumerate(b.edges):
        c = coloring.color[eid]
        if c in seen[u] or c in seen[w]:
            return False
        seen[u].add(c)
        seen[w].add(c)
    return True
