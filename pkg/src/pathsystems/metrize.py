"""Metric and strict-metric realizability of path systems and triple sets.

A consistent path system is (strictly) metric when its paths are the
(unique) shortest paths of some positive edge weighting.  Both properties
reduce to exact rational linear feasibility over one variable per vertex
pair: equality rows for colinear pointed triples, inequality rows for the
rest.  Infeasibility converts, via the Farkas certificate, into a
non-negative combination of triple vectors witnessing that no pseudometric
has exactly the given colinear triples.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import (
    Graph,
    PathSystem,
    Resume,
    TripleSet,
    all_pairs,
    all_pointed_triples,
    colinear_triples,
    pair,
    pointed_triple,
)
from .ratlp import LinearSystem, solve_feasibility
from .rational import Q, ZERO, ONE

__all__ = [
    "Pseudometric",
    "WeightFunction",
    "WitnessAlpha",
    "StrictnessResult",
    "RealizabilityResult",
    "InduceResult",
    "SearchOutcome",
    "pair_indices",
    "delta",
    "triple_signature",
    "resume_signature",
    "build_lp",
    "is_metric",
    "is_strictly_metric",
    "realize_weights",
    "induce_system",
    "triples_of_metric",
    "is_realizable",
    "verify_witness",
    "integral_witness_search",
    "closure",
]


def pair_indices(n):
    """Lexicographic index of each unordered pair of [n]."""
    return {p: i for i, p in enumerate(all_pairs(n))}


def delta(t, n):
    """The vector of pointed triple {a,b;c}: +1 at {a,c} and {c,b}, -1 at {a,b}."""
    a, b, c = pointed_triple(*t)
    idx = pair_indices(n)
    vec = [0] * len(idx)
    vec[idx[pair(a, c)]] += 1
    vec[idx[pair(c, b)]] += 1
    vec[idx[pair(a, b)]] -= 1
    return tuple(vec)


def triple_signature(ts):
    """Coordinate-wise sum of the triple vectors of a triple set."""
    idx = pair_indices(ts.n)
    vec = [0] * len(idx)
    for a, b, c in ts:
        vec[idx[pair(a, c)]] += 1
        vec[idx[pair(c, b)]] += 1
        vec[idx[pair(a, b)]] -= 1
    return tuple(vec)


def resume_signature(f):
    """Signature of a partial function: sum of vectors over its entries."""
    idx = pair_indices(f.n)
    vec = [0] * len(idx)
    for (u, v), z in f.entries:
        vec[idx[pair(u, z)]] += 1
        vec[idx[pair(z, v)]] += 1
        vec[idx[pair(u, v)]] -= 1
    return tuple(vec)


class Pseudometric:
    """Symmetric non-negative distance with zero diagonal, exact rationals."""

    def __init__(self, n, values):
        self.n = int(n)
        self.d = {p: Q(values[p]) for p in all_pairs(self.n)}
        self.validate()

    def value(self, a, b):
        if a == b:
            return ZERO
        return self.d[pair(a, b)]

    def validate(self):
        for p, v in self.d.items():
            if v < 0:
                raise ValueError(f"negative distance at {p}")
        for a, b, c in all_pointed_triples(self.n):
            if self.value(a, c) + self.value(c, b) < self.value(a, b):
                raise ValueError(f"triangle inequality fails on {{{a},{b};{c}}}")

    def is_metric(self):
        return all(v > 0 for v in self.d.values())

    def __eq__(self, other):
        return isinstance(other, Pseudometric) and self.n == other.n and self.d == other.d

    def __repr__(self):
        return f"Pseudometric(n={self.n})"


class WeightFunction:
    """Strictly positive rational weights on the edges of a graph."""

    def __init__(self, graph, w):
        self.graph = graph
        self.w = {}
        for e, val in w.items():
            e = pair(*e)
            if e not in graph.edges:
                raise ValueError(f"weight on non-edge {e}")
            val = Q(val)
            if val <= 0:
                raise ValueError(f"non-positive weight on {e}")
            self.w[e] = val
        if set(self.w) != set(graph.edges):
            raise ValueError("weights must cover exactly the graph's edges")

    def __repr__(self):
        return f"WeightFunction(n={self.graph.n}, edges={len(self.w)})"


class WitnessAlpha(dict):
    """Non-negative coefficients on pointed triples (finite support)."""

    def __init__(self, items=()):
        super().__init__()
        source = items.items() if isinstance(items, dict) else items
        for t, v in source:
            v = Q(v)
            if v < 0:
                raise ValueError("witness coefficients must be non-negative")
            if v:
                self[pointed_triple(*t)] = v


@dataclass(frozen=True)
class StrictnessResult:
    strict: bool
    metric: Pseudometric | None = None
    witness: WitnessAlpha | None = None


@dataclass(frozen=True)
class RealizabilityResult:
    realizable: bool
    metric: Pseudometric | None = None
    witness: WitnessAlpha | None = None


@dataclass(frozen=True)
class InduceResult:
    unique: bool
    system: PathSystem | None = None
    tied_pair: tuple | None = None
    tie_count: int = 0


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "not_found" | "inconclusive"
    multiset: tuple | None = None
    nodes: int = 0


# ---------------------------------------------------------------------------
# LP construction and the two realizability tests
# ---------------------------------------------------------------------------

MODES = ("metric", "strict", "pseudostrict")


def _lp_rows(sys, mode):
    """Rows for the (strict) metrizability LP, with their triples.

    Returns (equalities, eq_triples, inequalities, ineq_triples); bound
    rows x_{a,b} >= 1 are appended to the inequalities with triple None.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    check_needed = colinear_triples(sys)  # validates consistency too
    n = sys.n
    s = ZERO if mode == "metric" else ONE
    eqs, eq_triples, ineqs, ineq_triples = [], [], [], []
    for t in all_pointed_triples(n):
        vec = delta(t, n)
        if t in check_needed:
            eqs.append((vec, ZERO))
            eq_triples.append(t)
        else:
            ineqs.append((vec, s))
            ineq_triples.append(t)
    if mode in ("metric", "strict"):
        npairs = len(all_pairs(n))
        for i in range(npairs):
            vec = tuple(1 if j == i else 0 for j in range(npairs))
            ineqs.append((vec, ONE))
            ineq_triples.append(None)
    return eqs, eq_triples, ineqs, ineq_triples


def build_lp(sys, mode):
    """LP of the metrizability test: one variable per vertex pair."""
    eqs, _, ineqs, _ = _lp_rows(sys, mode)
    return LinearSystem(
        num_vars=len(all_pairs(sys.n)), equalities=tuple(eqs), inequalities=tuple(ineqs)
    )


def _metric_from_solution(n, x):
    idx = pair_indices(n)
    return Pseudometric(n, {p: x[i] for p, i in idx.items()})


def _farkas_to_alpha(n, colinear, eq_triples, ineq_triples, cert):
    """Rescale a Farkas certificate into a triple-combination witness.

    From sum(lam_t Delta_t) + sum(beta_s Delta_s) = 0 with lam >= 0 and
    positive combined rhs, rescale so every -beta_s <= 1 and set
    alpha_s = 1 + theta*beta_s on colinear triples, alpha_t = theta*lam_t
    elsewhere.
    """
    beta_neg = [-b for b in cert.beta]  # multipliers on sum over colinear set
    top = max([b for b in beta_neg if b > 0], default=ZERO)
    theta = ONE / top if top > 1 else ONE
    alpha = {}
    for t, lam in zip(ineq_triples, cert.lam):
        if t is not None and lam:
            alpha[t] = theta * lam
    for s, b in zip(eq_triples, beta_neg):
        val = ONE - theta * b
        if val:
            alpha[s] = val
    witness = WitnessAlpha(alpha)
    assert verify_witness(TripleSet(n, frozenset(colinear)), witness)
    return witness


def is_metric(sys):
    """The path system's paths are shortest under some positive weights."""
    res = solve_feasibility(build_lp(sys, "metric"))
    if not res.feasible:
        return None
    rho = _metric_from_solution(sys.n, res.solution)
    assert rho.is_metric()
    return rho


def is_strictly_metric(sys):
    """Unique-shortest-path realizability, with witness either way."""
    eqs, eq_triples, ineqs, ineq_triples = _lp_rows(sys, "pseudostrict")
    system = LinearSystem(
        num_vars=len(all_pairs(sys.n)), equalities=tuple(eqs), inequalities=tuple(ineqs)
    )
    res = solve_feasibility(system)
    if res.feasible:
        # Feasible solutions are automatically non-negative:
        # 2 x_{a,b} = (x_{a,b}+x_{b,c}-x_{a,c}) + (x_{b,a}+x_{a,c}-x_{b,c}) >= 0.
        assert all(v >= 0 for v in res.solution)
        rho = _metric_from_solution(sys.n, res.solution)
        assert triples_of_metric(rho).triples == colinear_triples(sys).triples
        return StrictnessResult(True, metric=rho)
    witness = _farkas_to_alpha(
        sys.n, colinear_triples(sys).triples, eq_triples, ineq_triples, res.certificate
    )
    return StrictnessResult(False, witness=witness)


def triples_of_metric(rho):
    """T(rho): pointed triples where the triangle inequality is tight."""
    tight = set()
    for t in all_pointed_triples(rho.n):
        a, b, c = t
        if rho.value(a, c) + rho.value(c, b) == rho.value(a, b):
            tight.add(t)
    return TripleSet(rho.n, frozenset(tight))


def realize_weights(sys, rho):
    """Positive edge weights inducing the system from a realizing metric.

    The support consists of the pairs that are their own path; other pairs
    get no edge (a forbidden edge stands in for an infinite weight).  When
    rho is only a pseudometric, a uniform 1/(n+1) is added to every edge:
    competing paths differ by fewer than n edges while every strict row has
    slack >= 1, so strict inequalities survive the shift.
    """
    if triples_of_metric(rho).triples != colinear_triples(sys).triples:
        raise ValueError("metric does not realize the system's colinear triples")
    support = [p for p in all_pairs(sys.n) if sys.paths[p] == p]
    eps = ZERO if rho.is_metric() else Q(1, sys.n + 1)
    g = Graph(sys.n, support)
    return WeightFunction(g, {e: rho.value(*e) + eps for e in support})


def induce_system(w):
    """All-pairs unique-geodesic extraction with exact tie counting.

    Distances come from Floyd-Warshall over exact rationals; per source,
    geodesic counts are accumulated over tight predecessor edges in order
    of increasing distance.
    """
    g = w.graph
    if not g.is_connected():
        raise ValueError("weight function's graph is disconnected")
    n = g.n
    verts = range(1, n + 1)
    dist = {u: {v: (ZERO if u == v else None) for v in verts} for u in verts}
    for (u, v), wt in w.w.items():
        dist[u][v] = wt
        dist[v][u] = wt
    for k in verts:
        dk = dist[k]
        for i in verts:
            dik = dist[i][k]
            if dik is None:
                continue
            di = dist[i]
            for j in verts:
                dkj = dk[j]
                if dkj is None:
                    continue
                alt = dik + dkj
                if di[j] is None or alt < di[j]:
                    di[j] = alt
    paths = {}
    for u in verts:
        du = dist[u]
        order = sorted(verts, key=lambda v: du[v])
        count = {u: 1}
        for v in order:
            if v == u:
                continue
            c = 0
            for z in g.neighbors(v):
                if du[z] + w.w[pair(z, v)] == du[v]:
                    c += count[z]
            count[v] = c
        for v in verts:
            if v <= u:
                continue
            if count[v] != 1:
                return InduceResult(False, tied_pair=(u, v), tie_count=count[v])
            # Unique geodesic: walk back along the single tight predecessor.
            walk = [v]
            cur = v
            while cur != u:
                for z in g.neighbors(cur):
                    if du[z] + w.w[pair(z, cur)] == du[cur]:
                        cur = z
                        walk.append(z)
                        break
            paths[(u, v)] = tuple(reversed(walk))
    return InduceResult(True, system=PathSystem(n, paths))


def is_realizable(S):
    """Is S exactly the colinear triple set of some pseudometric?"""
    n = S.n
    eqs, eq_triples, ineqs, ineq_triples = [], [], [], []
    for t in all_pointed_triples(n):
        vec = delta(t, n)
        if t in S:
            eqs.append((vec, ZERO))
            eq_triples.append(t)
        else:
            ineqs.append((vec, ONE))
            ineq_triples.append(t)
    system = LinearSystem(
        num_vars=len(all_pairs(n)), equalities=tuple(eqs), inequalities=tuple(ineqs)
    )
    res = solve_feasibility(system)
    if res.feasible:
        rho = _metric_from_solution(n, res.solution)
        assert triples_of_metric(rho).triples == S.triples
        return RealizabilityResult(True, metric=rho)
    witness = _farkas_to_alpha(n, S.triples, eq_triples, ineq_triples, res.certificate)
    return RealizabilityResult(False, witness=witness)


def verify_witness(S, alpha):
    """Exact check of sum over S of Delta = sum alpha_t Delta_t, alpha >= 0,
    with support not contained in S."""
    n = S.n
    if any(v < 0 for v in alpha.values()):
        return False
    target = triple_signature(S)
    idx = pair_indices(n)
    combo = [ZERO] * len(idx)
    for t, coeff in alpha.items():
        a, b, c = t
        combo[idx[pair(a, c)]] += coeff
        combo[idx[pair(c, b)]] += coeff
        combo[idx[pair(a, b)]] -= coeff
    if any(cv != tv for cv, tv in zip(combo, target)):
        return False
    support = {t for t, v in alpha.items() if v}
    return not support <= S.triples


def _completion_feasible(n, triples, residual):
    """Exists y >= 0 over `triples` with sum y_t Delta_t = residual?"""
    idx = pair_indices(n)
    cols = []
    for t in triples:
        a, b, c = t
        col = [ZERO] * len(idx)
        col[idx[pair(a, c)]] += 1
        col[idx[pair(c, b)]] += 1
        col[idx[pair(a, b)]] -= 1
        cols.append(col)
    eqs = tuple(
        (tuple(col[i] for col in cols), Q(residual[i])) for i in range(len(idx))
    )
    system = LinearSystem(num_vars=len(triples), equalities=eqs, nonnegative_vars=True)
    return solve_feasibility(system).feasible


def integral_witness_search(S, time_budget=None):
    """Exhaustive search for an integral witness multiset.

    Seeks a multiset T of pointed triples with sum of Delta over T equal
    to the signature of S and support not contained in S.  |T| = |S| is
    forced since every Delta_t has coordinate sum 1.  Branch and bound in
    lexicographic triple order with exact-LP relaxation pruning at every
    node; "not_found" is an exhaustive proof, "inconclusive" means the
    wall-clock budget (seconds) ran out.
    """
    n = S.n
    target = triple_signature(S)
    m = len(S)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    universe = all_pointed_triples(n)
    # A triple can appear in an integral witness only if a fractional
    # solution with its coefficient >= 1 exists.
    candidates = []
    for t in universe:
        if deadline is not None and time.monotonic() > deadline:
            return SearchOutcome("inconclusive")
        d = delta(t, n)
        shifted = [target[i] - d[i] for i in range(len(target))]
        if _completion_feasible(n, universe, shifted):
            candidates.append(t)
    deltas = {t: delta(t, n) for t in candidates}
    nodes = 0

    class _Budget(Exception):
        pass

    def recurse(ix, remaining, residual):
        nonlocal nodes
        nodes += 1
        if deadline is not None and time.monotonic() > deadline:
            raise _Budget
        if remaining == 0:
            if all(r == 0 for r in residual):
                counts = dict(assignment)
                support = {t for t, c in counts.items() if c}
                if not support <= S.triples:
                    multiset = tuple(
                        sorted(t for t, c in counts.items() for _ in range(c))
                    )
                    return multiset
            return None
        if ix == len(candidates):
            return None
        if sum(residual) != remaining:
            return None
        if not _completion_feasible(n, candidates[ix:], residual):
            return None
        t = candidates[ix]
        d = deltas[t]
        for c in range(remaining + 1):
            if c:
                assignment[t] = c
            elif t in assignment:
                del assignment[t]
            new_res = [residual[i] - c * d[i] for i in range(len(residual))]
            found = recurse(ix + 1, remaining - c, new_res)
            if found is not None:
                return found
        assignment.pop(t, None)
        return None

    assignment = {}
    try:
        found = recurse(0, m, list(target))
    except _Budget:
        return SearchOutcome("inconclusive", nodes=nodes)
    if found is not None:
        return SearchOutcome("found", multiset=found, nodes=nodes)
    return SearchOutcome("not_found", nodes=nodes)


def closure(S):
    """Smallest realizable triple set containing S.

    A triple t joins the closure when no pseudometric vanishes on all of S
    while staying strictly positive on t.
    """
    n = S.n
    npairs = len(all_pairs(n))
    eqs = tuple((delta(s, n), ZERO) for s in S)
    added = set(S.triples)
    for t in all_pointed_triples(n):
        if t in S:
            continue
        ineqs = [(delta(t, n), ONE)]
        for r in all_pointed_triples(n):
            if r not in S and r != t:
                ineqs.append((delta(r, n), ZERO))
        system = LinearSystem(num_vars=npairs, equalities=eqs, inequalities=tuple(ineqs))
        if not solve_feasibility(system).feasible:
            added.add(t)
    result = TripleSet(n, frozenset(added))
    assert is_realizable(result).realizable
    return result
