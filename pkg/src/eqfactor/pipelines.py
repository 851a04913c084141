"""Theorem pipelines: equitable, parity, and regular factorizations.

Connectivity hypotheses are advisory: they are checked and reported as
warnings, never used as gates, since the solvers may succeed below the
published thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import connectivity
from .coloring import decompose_directed
from .errors import Infeasible, InvalidInput
from .multigraph import Factorization, Multigraph
from .orientation import (
    DEFAULT_BUDGET,
    ResidueMap,
    balanced_mod_k_orientation,
    mod_k_orientation,
)


@dataclass(frozen=True)
class EquitableRequest:
    """Parameters of an equitable factorization run.

    At most one of z (special vertex), Z (residue vertex set), auto_find_Z.
    """

    k: int
    z: int = None
    Z: frozenset = None
    auto_find_Z: bool = False

    def __post_init__(self):
        active = sum(x for x in (self.z is not None, self.Z is not None, self.auto_find_Z))
        if active > 1:
            raise InvalidInput("at most one of z, Z, auto_find_Z may be active")
        if self.k < 1:
            raise InvalidInput("k must be >= 1")


@dataclass
class FactorReport:
    """A factorization plus bounds recomputed from its raw edges."""

    factorization: Factorization
    max_deviation: float
    size_deviation: float
    parity_ok: bool = None
    warnings: list = field(default_factory=list)


def build_report(fz: Factorization, parity_targets=None, warnings=()) -> FactorReport:
    """Recompute every claimed statistic from the factorization itself."""
    g = fz.base
    k = fz.k
    max_dev = 0.0
    parity_ok = None if parity_targets is None else True
    for degs in fz.all_factor_degrees():
        for v in range(g.n):
            max_dev = max(max_dev, abs(degs[v] - g.degree(v) / k))
            if parity_targets is not None and degs[v] % 2 != parity_targets[v] % 2:
                parity_ok = False
    size_dev = max(abs(s - g.m / k) for s in fz.factor_sizes())
    return FactorReport(
        factorization=fz,
        max_deviation=max_dev,
        size_deviation=size_dev,
        parity_ok=parity_ok,
        warnings=list(warnings),
    )


def _equitable_hypothesis_warnings(g: Multigraph, k: int) -> list:
    warnings = []
    if g.n >= 2 and k >= 2:
        lam = connectivity.edge_connectivity(g)
        if lam < 3 * k - 3 and connectivity.tree_connectivity(g) < 2 * k - 2:
            warnings.append(
                f"hypothesis not met: graph is neither ({3 * k - 3})-edge-connected "
                f"nor ({2 * k - 2})-tree-connected (lambda = {lam})"
            )
    return warnings


def find_Z_set(g: Multigraph, k: int):
    """Smallest vertex set Z with sum of degrees over Z = |E| (mod k), or None.

    Subset-sum dynamic programming over degree residues, tracking the
    minimal-cardinality (then lexicographically smallest) witness.
    """
    if k < 1:
        raise InvalidInput("k must be >= 1")
    dp = {0: ()}
    for v in range(g.n):
        r = g.degree(v) % k
        for cur, zs in sorted(dp.items()):
            nr = (cur + r) % k
            cand = zs + (v,)
            if nr not in dp or (len(cand), cand) < (len(dp[nr]), dp[nr]):
                dp[nr] = cand
    target = g.m % k
    return frozenset(dp[target]) if target in dp else None


def equitable_factorize(g: Multigraph, req: EquitableRequest, budget: int = DEFAULT_BUDGET) -> FactorReport:
    """Equitable factorization via a residue orientation plus size-mode split.

    Z variant: deviation < 1 everywhere. z variant: deviation < 2 at z,
    < 1 elsewhere. Auto: find a Z set, falling back to z = max-degree vertex.
    """
    k = req.k
    warnings = _equitable_hypothesis_warnings(g, k)
    z, zset = req.z, req.Z
    if req.auto_find_Z or (z is None and zset is None):
        zset = find_Z_set(g, k)
        if zset is None:
            z = max(range(g.n), key=lambda v: (g.degree(v), -v))
            warnings.append(f"no Z set attains |E| mod k; fell back to special vertex z = {z}")
    if zset is not None:
        if (g.m - sum(g.degree(v) for v in zset)) % k != 0:
            raise InvalidInput("Z does not satisfy |E| = sum of Z degrees (mod k)")
        p = tuple(g.degree(v) % k if v in zset else 0 for v in range(g.n))
    else:
        if not 0 <= z < g.n:
            raise InvalidInput(f"special vertex {z} out of range")
        p = tuple(g.m % k if v == z else 0 for v in range(g.n))
    orientation = mod_k_orientation(g, ResidueMap(k, p), budget=budget)
    fz = decompose_directed(orientation, k, mode="size")
    return build_report(fz, warnings=warnings)


@dataclass
class ThreeFactorResult:
    decomposable: bool
    report: FactorReport = None
    explanation: str = None


def three_factor_criterion(g: Multigraph, budget: int = DEFAULT_BUDGET) -> ThreeFactorResult:
    """Equitable 3-factorization criterion.

    Impossible exactly when one single vertex has degree not divisible by 3:
    the two factors that differ at z would have to agree everywhere else, so
    their degree sums force equal parity at z, contradicting floor/ceil.
    """
    z0 = [v for v in range(g.n) if g.degree(v) % 3 != 0]
    if len(z0) == 1:
        return ThreeFactorResult(
            decomposable=False,
            explanation=(
                f"exactly one vertex ({z0[0]}) has degree not divisible by 3: two of "
                "the three factors would match everywhere else, so by the handshake "
                "argument their degrees at that vertex share a parity, contradicting "
                "the floor/ceil split"
            ),
        )
    zset = find_Z_set(g, 3)
    if zset is None:
        raise Infeasible("no residue-compatible Z set exists")  # unreachable when |Z0| != 1
    report = equitable_factorize(g, EquitableRequest(k=3, Z=zset), budget=budget)
    return ThreeFactorResult(decomposable=True, report=report)


def parity_factorize(g: Multigraph, k: int, f=None, budget: int = DEFAULT_BUDGET) -> FactorReport:
    """Parity factorization: every factor degree matches a parity target and
    deviates from d(v)/k by less than 2.

    Odd k: targets are d(v) mod 2 (f must be absent). Even k: f given with
    even total, graph degrees even; Q = {v : f(v) = 1}.
    """
    if k < 1:
        raise InvalidInput("k must be >= 1")
    warnings = []
    if k % 2 == 1:
        if f is not None:
            raise InvalidInput("odd k takes no parity map; targets are d(v) mod 2")
        targets = tuple(d % 2 for d in g.degrees)
        if k >= 3 and g.n >= 2:
            odd_lam = connectivity.odd_edge_connectivity(g)
            if odd_lam < 3 * k - 2 and connectivity.tree_connectivity(g) < 2 * k - 2:
                warnings.append(
                    f"hypothesis not met: graph is neither odd-({3 * k - 2})-edge-connected "
                    f"nor ({2 * k - 2})-tree-connected"
                )
        orientation = balanced_mod_k_orientation(g, k, budget=budget)
    else:
        if f is None:
            raise InvalidInput("even k requires a parity map f")
        targets = tuple(int(x) % 2 for x in f)
        if len(targets) != g.n:
            raise InvalidInput("f must assign a parity to every vertex")
        if sum(targets) % 2 == 1:
            raise InvalidInput("sum of f over V must be even")
        q = {v for v in range(g.n) if targets[v] == 1}
        if g.n >= 2:
            ok, witness = connectivity.f_odd_cut_bound(g, targets, 3 * k - 2)
            if not ok:
                warnings.append(f"hypothesis not met: d(X) < {3 * k - 2} at f-odd set {sorted(witness)}")
        orientation = balanced_mod_k_orientation(g, k, q, budget=budget)
    fz = decompose_directed(orientation, k, mode="parity")
    return build_report(fz, parity_targets=targets, warnings=warnings)


def regular_factorize(g: Multigraph, k: int, budget: int = DEFAULT_BUDGET) -> FactorReport:
    """Split a graph with size and degrees divisible by k into k factors that
    are exactly d(v)/k-regular at every vertex."""
    if k < 1:
        raise InvalidInput("k must be >= 1")
    if g.m % k != 0:
        raise InvalidInput(f"|E| = {g.m} is not divisible by k = {k}")
    for v in range(g.n):
        if g.degree(v) % k != 0:
            raise InvalidInput(f"degree {g.degree(v)} of vertex {v} is not divisible by k = {k}")
    warnings = []
    q_parity = tuple((g.degree(v) // k) % 2 for v in range(g.n))
    if g.n >= 2 and any(q_parity):
        ok, witness = connectivity.f_odd_cut_bound(g, q_parity, 3 * k - 2)
        if not ok:
            warnings.append(f"hypothesis not met: d(X) < {3 * k - 2} at Q-odd set {sorted(witness)}")
    orientation = mod_k_orientation(g, ResidueMap(k, (0,) * g.n), budget=budget)
    fz = decompose_directed(orientation, k, mode="size")
    report = build_report(fz, warnings=warnings)
    if report.max_deviation != 0:
        raise AssertionError("regular factorization produced a non-regular factor")
    return report


def regular_split(g: Multigraph, r_list, k: int, bounded_mode: bool = False, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Regroup a k-fold regular factorization into factors of degrees r_i.

    Exact mode: G is r-regular (r = sum r_i) and each r_i is a multiple of
    r/k; the base factors are grouped greedily by descending r_i. Bounded
    mode: G is completed to an r-regular supergraph (loops first, then
    parallel edges), split exactly, and restricted, giving max degree <= r_i.
    """
    r_list = [int(r) for r in r_list]
    if not r_list or any(r <= 0 for r in r_list):
        raise InvalidInput("r_list must be positive")
    r = sum(r_list)
    if k < 1 or r % k != 0:
        raise InvalidInput(f"k = {k} must divide r = {r}")
    qq = r // k
    if bounded_mode:
        if any(d > r for d in g.degrees):
            raise InvalidInput(f"maximum degree exceeds r = {r}")
        if (r * g.n) % 2 != 0:
            raise InvalidInput("r * |V| must be even for supergraph completion")
        extra = []
        deficits = [r - g.degree(v) for v in range(g.n)]
        for v in range(g.n):
            while deficits[v] >= 2:
                extra.append((v, v))
                deficits[v] -= 2
        ones = [v for v in range(g.n) if deficits[v] == 1]
        for a, b in zip(ones[::2], ones[1::2]):
            extra.append((a, b))
        sup = Multigraph(g.n, list(g.edges) + extra)
        split = regular_split(sup, r_list, k, bounded_mode=False, budget=budget)
        return Factorization(g, split.k, split.assignment[: g.m])
    if any(d != r for d in g.degrees):
        raise InvalidInput(f"graph is not {r}-regular")
    if any(ri % qq != 0 for ri in r_list):
        raise Infeasible(
            f"grouping whole {qq}-regular base factors cannot realize r_list {r_list}"
        )
    base = regular_factorize(g, k, budget=budget).factorization
    order = sorted(range(len(r_list)), key=lambda i: (-r_list[i], i))
    group_of_base = {}
    nxt = 1
    for i in order:
        for _ in range(r_list[i] // qq):
            group_of_base[nxt] = i + 1
            nxt += 1
    assignment = [group_of_base[a] for a in base.assignment]
    return Factorization(g, len(r_list), assignment)
