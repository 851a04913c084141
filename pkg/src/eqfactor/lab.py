"""Verifiers, graph generators, and brute-force oracles.

Every verifier recomputes its statistics from raw edges; no solver-reported
numbers are trusted. Oracles answer existence questions by exhaustive
enumeration within hard budgets and are used as ground truth in tests;
enumeration can be sharded across processes (pure exists-reduction).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from multiprocessing import Pool

from .errors import InvalidInput, Undecided
from .multigraph import Factorization, Multigraph
from .parity import ParitySpec

EQUITABLE_BUDGET = 10**8
PARITY_EDGE_BUDGET = 24
ORIENTATION_EDGE_BUDGET = 20

KNOWN_CLAIMS = ("deviation<1", "deviation<2", "size±1", "parity", "even", "regular")


@dataclass
class VerificationReport:
    """Per-claim measured values with pass/fail judgments."""

    entries: list = field(default_factory=list)  # (claim, bound, measured, passed)
    ok: bool = True

    def add(self, claim, bound, measured, passed):
        self.entries.append((claim, bound, measured, bool(passed)))
        self.ok = self.ok and passed


def verify(g: Multigraph, fz: Factorization, claims) -> VerificationReport:
    """Judge each claim against degrees and sizes recomputed from the edges."""
    if fz.base is not g and fz.base != g:
        raise InvalidInput("factorization is not defined on this graph")
    report = VerificationReport()
    all_degs = fz.all_factor_degrees()
    k = fz.k
    for claim in claims:
        if claim not in KNOWN_CLAIMS:
            raise InvalidInput(f"unknown claim {claim!r}")
        if claim in ("deviation<1", "deviation<2"):
            bound = 1 if claim == "deviation<1" else 2
            measured = max(
                (abs(degs[v] - g.degree(v) / k) for degs in all_degs for v in range(g.n)),
                default=0.0,
            )
            report.add(claim, bound, measured, measured < bound)
        elif claim == "size±1":
            measured = max((abs(s - g.m / k) for s in fz.factor_sizes()), default=0.0)
            report.add(claim, 1, measured, measured < 1)
        elif claim == "parity":
            bad = sum(
                1 for degs in all_degs for v in range(g.n) if degs[v] % 2 != g.degree(v) % 2
            )
            report.add(claim, 0, bad, bad == 0)
        elif claim == "even":
            bad = sum(1 for degs in all_degs for v in range(g.n) if degs[v] % 2 != 0)
            report.add(claim, 0, bad, bad == 0)
        elif claim == "regular":
            bad = sum(
                1
                for degs in all_degs
                for v in range(g.n)
                if degs[v] * k != g.degree(v)
            )
            report.add(claim, 0, bad, bad == 0)
    return report


def _random_hamiltonian_cycle(n: int, rng: random.Random) -> list:
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[i], perm[(i + 1) % n]) for i in range(n)]


def _random_perfect_matching(n: int, rng: random.Random) -> list:
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[2 * i], perm[2 * i + 1]) for i in range(n // 2)]


def generate(family: str, params: dict, seed: int = 0) -> Multigraph:
    """Seed-deterministic graph families.

    observation(k, r, n): the counterexample family — odd order, degrees k*r
    except k-2 vertices of degree k*r + 1. regular(n, d): matching/cycle
    unions. eulerian_cycles(n, c): c Hamiltonian cycles. multiplied(base, t):
    every edge copied t times. complete(n): K_n.
    """
    rng = random.Random(seed)
    if family == "complete":
        n = int(params["n"])
        return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "regular":
        n, d = int(params["n"]), int(params["d"])
        if n < 1 or d < 0 or (n * d) % 2 != 0:
            raise InvalidInput("regular family needs n*d even")
        edges = []
        if n % 2 == 0:
            for _ in range(d):
                edges += _random_perfect_matching(n, rng)
        else:
            if n < 3:
                raise InvalidInput("odd-order regular family needs n >= 3")
            for _ in range(d // 2):
                edges += _random_hamiltonian_cycle(n, rng)
        return Multigraph(n, edges)
    if family == "eulerian_cycles":
        n, c = int(params["n"]), int(params["c"])
        if n < 3 or c < 1:
            raise InvalidInput("eulerian_cycles needs n >= 3 and c >= 1")
        edges = []
        for _ in range(c):
            edges += _random_hamiltonian_cycle(n, rng)
        return Multigraph(n, edges)
    if family == "multiplied":
        base = params["base"]
        t = int(params["t"])
        if t < 1:
            raise InvalidInput("multiplier must be >= 1")
        return Multigraph(base.n, [e for e in base.edges for _ in range(t)])
    if family == "observation":
        return _observation_family(params, rng)
    raise InvalidInput(f"unknown family {family!r}")


def _observation_family(params: dict, rng: random.Random) -> Multigraph:
    """Odd-order graphs with degrees k*r except k-2 vertices of degree k*r+1;
    no equitable k-factorization exists (an r-regular factor would be forced,
    impossible on odd order with r odd)."""
    k, r = int(params["k"]), int(params["r"])
    n = int(params.get("n", 5))
    if k < 2 or r < 1 or r % 2 == 0:
        raise InvalidInput("observation family needs k >= 2 and odd r")
    if n % 2 == 0 or n < 3 or n < k - 1:
        raise InvalidInput("observation family needs odd n >= max(3, k-1)")
    edges = []
    if k % 2 == 0:
        for _ in range(k * r // 2):
            edges += _random_hamiltonian_cycle(n, rng)
        for i in range(k // 2 - 1):
            edges.append((2 * i, 2 * i + 1))
    else:
        for _ in range((k * r - 1) // 2):
            edges += _random_hamiltonian_cycle(n, rng)
        special = list(range(k - 2))
        ordinary = list(range(k - 2, n))
        edges += [(ordinary[2 * i], ordinary[2 * i + 1]) for i in range(len(ordinary) // 2)]
        if len(special) == 1:
            edges.append((special[0], special[0]))
        elif len(special) == 2:
            edges += [(special[0], special[1]), (special[0], special[1])]
        else:
            edges += [(special[i], special[(i + 1) % len(special)]) for i in range(len(special))]
    return Multigraph(n, edges)


# --- oracles -----------------------------------------------------------------


def _equitable_bounds(g: Multigraph, k: int):
    lower = [g.degree(v) // k for v in range(g.n)]
    upper = [-(-g.degree(v) // k) for v in range(g.n)]
    return lower, upper


def _equitable_dfs(g, k, lower, upper, assign, start):
    """Exhaustive search over factor assignments of edges[start:]."""
    deg = [[0] * g.n for _ in range(k + 1)]
    rem = [0] * g.n
    for eid in range(start, g.m):
        u, v = g.edges[eid]
        rem[u] += 1 if u != v else 2
        rem[v] += 1 if u != v else 0
    for eid in range(start):
        u, v = g.edges[eid]
        c = assign[eid]
        deg[c][u] += 2 if u == v else 1
        if u != v:
            deg[c][v] += 1
        if deg[c][u] > upper[u] or deg[c][v] > upper[v]:
            return False

    def ok_lower(w):
        return all(deg[i][w] + rem[w] >= lower[w] for i in range(1, k + 1))

    def search(eid):
        if eid == g.m:
            return all(
                deg[i][v] >= lower[v] for i in range(1, k + 1) for v in range(g.n)
            )
        u, v = g.edges[eid]
        # prune with rem still counting the current edge: deg + rem >= lower
        # is necessary for every color regardless of where this edge goes
        if not (ok_lower(u) and ok_lower(v)):
            return False
        step_u = 2 if u == v else 1
        rem[u] -= step_u
        if u != v:
            rem[v] -= 1
        for c in range(1, k + 1):
            if deg[c][u] + step_u > upper[u]:
                continue
            deg[c][u] += step_u
            if u != v:
                if deg[c][v] + 1 > upper[v]:
                    deg[c][u] -= step_u
                    continue
                deg[c][v] += 1
            if search(eid + 1):
                return True
            deg[c][u] -= step_u
            if u != v:
                deg[c][v] -= 1
        rem[u] += step_u
        if u != v:
            rem[v] += 1
        return False

    return search(start)


def _equitable_worker(args):
    n, edges, k, prefix = args
    g = Multigraph(n, edges)
    lower, upper = _equitable_bounds(g, k)
    return _equitable_dfs(g, k, lower, upper, list(prefix) + [0] * (g.m - len(prefix)), len(prefix))


def oracle_equitable(g: Multigraph, k: int, jobs: int = 1) -> bool:
    """Does an equitable k-factorization exist? Exhaustive with the first
    edge's factor fixed (symmetry)."""
    if k < 1:
        raise InvalidInput("k must be >= 1")
    if k == 1 or g.m == 0:
        return True
    if k ** max(g.m - 1, 0) > EQUITABLE_BUDGET:
        raise Undecided(f"equitable oracle above budget: {k}^{g.m - 1} assignments")
    lower, upper = _equitable_bounds(g, k)
    if jobs <= 1:
        return _equitable_dfs(g, k, lower, upper, [1] + [0] * (g.m - 1), 1)
    depth = 1
    while k ** (depth - 1) < 4 * jobs and depth < g.m:
        depth += 1
    tasks = [
        (g.n, g.edges, k, (1,) + tail)
        for tail in product(range(1, k + 1), repeat=depth - 1)
    ]
    with Pool(jobs) as pool:
        return any(pool.map(_equitable_worker, tasks))


def _orientation_worker(args):
    n, edges, p, k, fixed_bits, free_positions, base_out = args
    g = Multigraph(n, edges)
    out0 = list(base_out)
    for eid, bit in fixed_bits:
        u, v = g.edges[eid]
        out0[u if bit == 0 else v] += 1
    for mask in range(2 ** len(free_positions)):
        out = list(out0)
        for i, eid in enumerate(free_positions):
            u, v = g.edges[eid]
            out[u if not (mask >> i & 1) else v] += 1
        if all(out[v] % k == p[v] for v in range(g.n)):
            return True
    return False


def oracle_orientation(g: Multigraph, p, k: int, jobs: int = 1) -> bool:
    """Does a p-orientation modulo k exist? Exhaustive over 2^(non-loop edges)."""
    if k < 1:
        raise InvalidInput("k must be >= 1")
    p = tuple(int(x) % k for x in p)
    if len(p) != g.n:
        raise InvalidInput("p must cover every vertex")
    if (sum(p) - g.m) % k != 0:
        return False
    if g.m > ORIENTATION_EDGE_BUDGET:
        raise Undecided(f"orientation oracle above budget ({g.m} > {ORIENTATION_EDGE_BUDGET})")
    base_out = [g.loops_at(v) for v in range(g.n)]
    nonloop = [eid for eid in range(g.m) if not g.is_loop(eid)]
    if jobs <= 1:
        return _orientation_worker((g.n, g.edges, p, k, (), tuple(nonloop), tuple(base_out)))
    depth = min(len(nonloop), max(1, (4 * jobs - 1).bit_length()))
    head, tail = nonloop[:depth], nonloop[depth:]
    tasks = [
        (g.n, g.edges, p, k, tuple(zip(head, bits)), tuple(tail), tuple(base_out))
        for bits in product((0, 1), repeat=depth)
    ]
    with Pool(jobs) as pool:
        return any(pool.map(_orientation_worker, tasks))


def _parity_worker(args):
    n, edges, f, g0, f0, fixed, free = args
    g = Multigraph(n, edges)
    deg0 = [0] * n
    for eid, bit in fixed:
        if bit:
            u, v = g.edges[eid]
            deg0[u] += 1
            deg0[v] += 1
    for mask in range(2 ** len(free)):
        deg = list(deg0)
        for i, eid in enumerate(free):
            if mask >> i & 1:
                u, v = g.edges[eid]
                deg[u] += 1
                deg[v] += 1
        if all(g0[v] <= deg[v] <= f0[v] and deg[v] % 2 == f[v] for v in range(n)):
            return True
    return False


def oracle_parity_gf(g: Multigraph, spec: ParitySpec, jobs: int = 1) -> bool:
    """Does a parity (g0,f0)-factor exist? Exhaustive over all 2^|E| subsets."""
    if len(spec.f) != g.n:
        raise InvalidInput("spec must cover every vertex")
    if g.m > PARITY_EDGE_BUDGET:
        raise Undecided(f"parity oracle above budget ({g.m} > {PARITY_EDGE_BUDGET})")
    edges_all = tuple(range(g.m))
    if jobs <= 1:
        return _parity_worker((g.n, g.edges, spec.f, spec.g0, spec.f0, (), edges_all))
    depth = min(g.m, max(1, (4 * jobs - 1).bit_length()))
    head, tail = edges_all[:depth], edges_all[depth:]
    tasks = [
        (g.n, g.edges, spec.f, spec.g0, spec.f0, tuple(zip(head, bits)), tail)
        for bits in product((0, 1), repeat=depth)
    ]
    with Pool(jobs) as pool:
        return any(pool.map(_parity_worker, tasks))


def oracle(g: Multigraph, question: str, jobs: int = 1, **params):
    """Unified oracle front end: questions 'equitable', 'orientation', 'parity_gf'."""
    if question == "equitable":
        return oracle_equitable(g, int(params["k"]), jobs=jobs)
    if question == "orientation":
        return oracle_orientation(g, params["p"], int(params["k"]), jobs=jobs)
    if question == "parity_gf":
        return oracle_parity_gf(g, params["spec"], jobs=jobs)
    raise InvalidInput(f"unknown oracle question {question!r}")
