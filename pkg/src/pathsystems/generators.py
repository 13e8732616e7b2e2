"""Constructive families of consistent path systems.

Diameter-2 systems on arbitrary graphs, matching-based systems in random
graphs, bipartite half-and-half systems, joins of a clique with an
anti-clique, and the monotone systems they host.  Every randomized
construction is seeded and certified: weights are retried until the
induced geodesics are provably unique and contain all chosen paths.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .core import Graph, PathSystem, all_pairs, pair
from .metrize import WeightFunction, induce_system
from .rational import Q, ONE

__all__ = [
    "MonotoneMatrix",
    "MatchingError",
    "gen_gnp",
    "enumerate_diam2",
    "perfect_matching",
    "admissible_pairs",
    "matching_weights",
    "gen_bipartite",
    "gen_join",
    "gen_join_gamma",
    "monotone_system",
    "enumerate_monotone",
]

# Weight classes of the matching constructions, verbatim as rationals.
W_MATCHED = Q(1)
W_CHOSEN = Q(11, 10)
W_OTHER = Q(12, 10)

# Noise is drawn from the grid {k/10^6 : 0 <= k <= 10^4}, i.e. [0, 1/100].
NOISE_DEN = 10**6
NOISE_MAX = 10**4


def _bernoulli(rng, p):
    """Exact Bernoulli(p) for rational p, sharing the RNG stream discipline."""
    p = Q(p)
    if not 0 <= p <= 1:
        raise ValueError("probability must lie in [0, 1]")
    return rng.randrange(p.denominator) < p.numerator


def _noise(rng):
    return Q(rng.randrange(NOISE_MAX + 1), NOISE_DEN)


def gen_gnp(n, p, seed):
    """Erdos-Renyi graph: each pair is an edge independently with probability p."""
    rng = random.Random(seed)
    edges = [e for e in all_pairs(n) if _bernoulli(rng, p)]
    return Graph(n, edges)


def enumerate_diam2(g):
    """All neighborly diameter-2 path systems of a graph.

    Edges are their own paths; every non-adjacent pair gets one common
    neighbor as midpoint.  Such a system is automatically consistent, so
    the total count is the product of the common-neighborhood sizes.
    Yields nothing when the graph diameter exceeds 2.
    """
    diam = g.diameter()
    if diam is None or diam > 2:
        return
    non_edges = sorted(g.non_edges())
    midpoint_sets = [sorted(g.neighbors(u) & g.neighbors(v)) for u, v in non_edges]
    if any(not s for s in midpoint_sets):
        return
    base = {e: e for e in g.edges}
    for combo in itertools.product(*midpoint_sets):
        paths = dict(base)
        for (u, v), z in zip(non_edges, combo):
            paths[(u, v)] = (u, z, v)
        yield PathSystem(g.n, paths)


class MatchingError(ValueError):
    pass


def perfect_matching(g, seed=0):
    """A perfect matching, or a loud failure.

    Greedy seeded pairing first; if vertices remain, falls back to an
    exhaustive maximum-cardinality search (networkx blossom algorithm).
    Returns edges (x_i, y_i) with x_i < y_i, sorted by x_i.
    """
    if g.n % 2:
        raise MatchingError("odd number of vertices")
    rng = random.Random(seed)
    order = list(range(1, g.n + 1))
    rng.shuffle(order)
    matched = {}
    for v in order:
        if v in matched:
            continue
        for u in sorted(g.neighbors(v)):
            if u not in matched:
                matched[v] = u
                matched[u] = v
                break
    if len(matched) < g.n:
        import networkx as nx

        gn = nx.Graph()
        gn.add_nodes_from(range(1, g.n + 1))
        gn.add_edges_from(sorted(g.edges))
        mate = nx.max_weight_matching(gn, maxcardinality=True)
        if 2 * len(mate) < g.n:
            raise MatchingError("graph has no perfect matching")
        matched = {}
        for u, v in mate:
            matched[u] = v
            matched[v] = u
    return sorted(pair(v, matched[v]) for v in matched if v < matched[v])


def _matching_sides(matching):
    """Split matching edges into (x_i, y_i) with x_i the smaller endpoint."""
    xs = [e[0] for e in matching]
    ys = [e[1] for e in matching]
    return xs, ys


def admissible_pairs(g, matching):
    """Pairs {x_i, x_j} that are non-adjacent but cross-linked through M.

    Requires x_i x_j not an edge while both x_i y_j and x_j y_i are.
    """
    edge_set = set(matching)
    verts = set()
    for e in matching:
        if verts & set(e):
            raise MatchingError("matching edges are not disjoint")
        verts |= set(e)
    if not edge_set <= g.edges:
        raise MatchingError("matching uses non-edges")
    xs, ys = _matching_sides(matching)
    k = len(xs)
    result = []
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(xs[i], xs[j]):
                continue
            if g.has_edge(xs[i], ys[j]) and g.has_edge(xs[j], ys[i]):
                result.append(pair(xs[i], xs[j]))
    return result


def _certified_weights(g, classes, rng, max_attempts=64):
    """Add grid noise to per-edge base weights until geodesics are unique."""
    for _ in range(max_attempts):
        w = {e: classes[e] + _noise(rng) for e in sorted(g.edges)}
        wf = WeightFunction(g, w)
        if induce_system(wf).unique:
            return wf
    raise RuntimeError("could not certify unique geodesics within attempt budget")


def matching_weights(g, matching, choices, noise_seed):
    """Weights realizing one chosen 2-step M-path per admissible pair.

    `choices` maps each admissible pair {x_i, x_j} to its chosen midpoint,
    which must be y_i or y_j.  Matching edges weigh 1, non-matching edges
    on a chosen path 11/10, all others 12/10, each plus grid noise; fresh
    noise is drawn until the induced geodesics are certified unique, and
    every chosen path is checked to appear in the induced system.
    """
    adm = admissible_pairs(g, matching)
    if sorted(choices) != sorted(adm):
        raise ValueError("choices must cover exactly the admissible pairs")
    xs, ys = _matching_sides(matching)
    y_of = dict(zip(xs, ys))
    chosen_paths = []
    for (xi, xj), mid in choices.items():
        if mid not in (y_of[xi], y_of[xj]):
            raise ValueError(f"midpoint {mid} is not an M-partner of {xi} or {xj}")
        chosen_paths.append((xi, mid, xj))
    chosen_edges = set()
    for xi, mid, xj in chosen_paths:
        chosen_edges |= {pair(xi, mid), pair(mid, xj)}
    m_edges = set(matching)
    classes = {}
    for e in g.edges:
        if e in m_edges:
            classes[e] = W_MATCHED
        elif e in chosen_edges:
            classes[e] = W_CHOSEN
        else:
            classes[e] = W_OTHER
    wf = _certified_weights(g, classes, random.Random(noise_seed))
    induced = induce_system(wf).system
    for xi, mid, xj in chosen_paths:
        assert induced.path(xi, xj) == (min(xi, xj), mid, max(xi, xj))
    return wf


def gen_bipartite(half_n, choices, noise_seed):
    """Certified neighborly system on the balanced complete bipartite graph.

    Vertices x_i = i and y_i = half_n + i; the matching is x_i y_i.  For
    every pair i < j the chosen path x_i y_k x_j (k given by choices[(i,j)],
    either i or j) becomes the unique geodesic under the 1 / 11:10 / 12:10
    weight classes plus certified grid noise.
    """
    h = int(half_n)
    edges = [(i, h + j) for i in range(1, h + 1) for j in range(1, h + 1)]
    g = Graph(2 * h, edges)
    index_pairs = [(i, j) for i in range(1, h + 1) for j in range(i + 1, h + 1)]
    if sorted(choices) != index_pairs:
        raise ValueError("choices must cover every index pair i < j")
    chosen_edges = set()
    chosen_paths = []
    for (i, j), k in choices.items():
        if k not in (i, j):
            raise ValueError(f"choice for {(i, j)} must be {i} or {j}")
        chosen_paths.append((i, h + k, j))
        chosen_edges |= {pair(i, h + k), pair(j, h + k)}
    classes = {}
    for e in g.edges:
        i, y = e
        if y == h + i:
            classes[e] = W_MATCHED
        elif e in chosen_edges:
            classes[e] = W_CHOSEN
        else:
            classes[e] = W_OTHER
    wf = _certified_weights(g, classes, random.Random(noise_seed))
    induced = induce_system(wf).system
    for xi, mid, xj in chosen_paths:
        assert induced.path(xi, xj) == (xi, mid, xj)
    return g, wf


def gen_join(n):
    """J_n: anti-clique x_1..x_n joined to a clique y_1..y_n.

    Vertices 1..n are the anti-clique; n+1..2n form the clique; every
    cross pair is an edge.
    """
    edges = []
    for i in range(1, n + 1):
        for j in range(n + 1, 2 * n + 1):
            edges.append((i, j))
    for i in range(n + 1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            edges.append((i, j))
    return Graph(2 * n, edges)


def gen_join_gamma(n, gamma):
    """Join of an anti-clique of size floor(gamma*n) with a clique of the rest."""
    gamma = Q(gamma)
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie strictly between 0 and 1")
    a = int(gamma * n)  # floor for non-negative rationals
    edges = []
    for i in range(1, a + 1):
        for j in range(a + 1, n + 1):
            edges.append((i, j))
    for i in range(a + 1, n + 1):
        for j in range(i + 1, n + 1):
            edges.append((i, j))
    return Graph(n, edges)


@dataclass(frozen=True)
class MonotoneMatrix:
    """Symmetric midpoint matrix of a monotone system in the join graph.

    Entry (i, j), i != j, is the index k of the midpoint y_k on the path
    between x_i and x_j.  Rows are non-decreasing when the diagonal entry
    is skipped; the diagonal itself is unused.
    """

    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError("matrix must be n x n")
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                v = rows[i][j]
                if not (isinstance(v, int) and 1 <= v <= self.n):
                    raise ValueError(f"entry ({i+1},{j+1}) out of range 1..{self.n}")
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
        for i in range(self.n):
            off = [rows[i][j] for j in range(self.n) if j != i]
            if any(off[k] > off[k + 1] for k in range(len(off) - 1)):
                raise ValueError(f"row {i+1} is not non-decreasing off the diagonal")

    def midpoint(self, i, j):
        return self.rows[i - 1][j - 1]


def monotone_system(m):
    """The neighborly diameter-2 system in J_n encoded by a monotone matrix."""
    n = m.n
    g = gen_join(n)
    paths = {e: e for e in g.edges}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            paths[(i, j)] = (i, n + m.midpoint(i, j), j)
    return PathSystem(2 * n, paths)


def enumerate_monotone(n, cap=6):
    """All monotone midpoint matrices for J_n, lexicographic in the upper triangle."""
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    cells = [(i, j) for i in range(n) for j in range(i + 1, n) ]

    def predecessors(i, j, grid):
        """Largest earlier off-diagonal entries in row i and row j."""
        lo = 1
        for jj in range(j - 1, -1, -1):
            if jj != i and grid[i][jj] is not None:
                lo = max(lo, grid[i][jj])
                break
        for ii in range(i - 1, -1, -1):
            if ii != j and grid[ii][j] is not None:
                lo = max(lo, grid[ii][j])
                break
        return lo

    grid = [[None] * n for _ in range(n)]

    def fill(ix):
        if ix == len(cells):
            rows = tuple(
                tuple(grid[i][j] if i != j else grid[i][j] or 1 for j in range(n))
                for i in range(n)
            )
            # Diagonal entries are unused; store a placeholder respecting range.
            rows = tuple(
                tuple(rows[i][j] if i != j else 1 for j in range(n)) for i in range(n)
            )
            yield MonotoneMatrix(n, rows)
            return
        i, j = cells[ix]
        for v in range(predecessors(i, j, grid), n + 1):
            grid[i][j] = v
            grid[j][i] = v
            yield from fill(ix + 1)
        grid[i][j] = None
        grid[j][i] = None

    yield from fill(0)
