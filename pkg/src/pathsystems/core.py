"""Graphs, simple paths, path systems, résumés and pointed triples.

Vertices are 1-based integers 1..n.  A path system designates exactly one
simple path per unordered vertex pair; consistency means any two paths
meet in at most a vertex or in a shared sub-path that is itself a member
of the system.  A résumé losslessly encodes a consistent system by
recording, for each non-edge pair, one interior vertex of its path.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "PathSystem",
    "Resume",
    "TripleSet",
    "Intersection",
    "Consistency",
    "ResumeRecoveryError",
    "pair",
    "all_pairs",
    "make_path",
    "path_edges",
    "path_interior",
    "pointed_triple",
    "all_pointed_triples",
    "path_intersection",
    "is_consistent",
    "is_neighborly",
    "diameter",
    "extract_resume",
    "all_resumes",
    "recover_from_resume",
    "colinear_triples",
]


def pair(u, v):
    """Canonical unordered pair (min, max)."""
    if u == v:
        raise ValueError(f"pair endpoints must differ, got {u},{v}")
    return (u, v) if u < v else (v, u)


def all_pairs(n):
    """All unordered pairs of [n] in lexicographic order."""
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def _check_vertex(v, n):
    if not (isinstance(v, int) and 1 <= v <= n):
        raise ValueError(f"vertex {v!r} not in 1..{n}")


class Graph:
    """Simple undirected graph on vertices 1..n."""

    def __init__(self, n, edges):
        self.n = int(n)
        canon = set()
        for u, v in edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            canon.add(pair(u, v))
        self.edges = frozenset(canon)
        self._adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            self._adj[u].add(v)
            self._adj[v].add(u)

    def has_edge(self, u, v):
        return pair(u, v) in self.edges

    def neighbors(self, v):
        return self._adj[v]

    def non_edges(self):
        return [p for p in all_pairs(self.n) if p not in self.edges]

    def bfs_distances(self, source):
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self):
        return self.n <= 1 or len(self.bfs_distances(1)) == self.n

    def diameter(self):
        """Graph diameter in edges; None if disconnected."""
        worst = 0
        for v in range(1, self.n + 1):
            dist = self.bfs_distances(v)
            if len(dist) < self.n:
                return None
            worst = max(worst, max(dist.values()))
        return worst

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def make_path(vertices, n=None):
    """Validated simple path as a canonical tuple.

    Orientation is normalized so the first endpoint is the smaller one;
    a path and its reversal are thereby equal as values.
    """
    p = tuple(vertices)
    if len(p) < 2:
        raise ValueError("a path has at least two vertices")
    if len(set(p)) != len(p):
        raise ValueError(f"path {p} is not simple")
    if n is not None:
        for v in p:
            _check_vertex(v, n)
    if p[0] > p[-1]:
        p = p[::-1]
    return p


def path_edges(p):
    """Set of unordered edges traversed by the path."""
    return {pair(p[i], p[i + 1]) for i in range(len(p) - 1)}


def path_interior(p):
    """Interior vertices of the path, in traversal order."""
    return p[1:-1]


def pointed_triple(a, b, c):
    """Pointed triple {a,b;c}: unordered pair {a,b} with point c."""
    if len({a, b, c}) != 3:
        raise ValueError(f"pointed triple needs three distinct vertices: {a},{b},{c}")
    a, b = pair(a, b)
    return (a, b, c)


def all_pointed_triples(n):
    """All 3*C(n,3) pointed triples over [n], lexicographic."""
    return [
        (a, b, c)
        for a, b in all_pairs(n)
        for c in range(1, n + 1)
        if c != a and c != b
    ]


class PathSystem:
    """One simple path per unordered pair of [n]."""

    def __init__(self, n, paths):
        self.n = int(n)
        canon = {}
        if isinstance(paths, dict):
            items = paths.values()
        else:
            items = paths
        for p in items:
            p = make_path(p, self.n)
            key = pair(p[0], p[-1])
            if key in canon and canon[key] != p:
                raise ValueError(f"two different paths for pair {key}")
            canon[key] = p
        missing = [p for p in all_pairs(self.n) if p not in canon]
        if missing:
            raise ValueError(f"no path for pairs {missing}")
        if len(canon) != len(all_pairs(self.n)):
            raise ValueError("unexpected extra paths")
        self.paths = canon

    def path(self, u, v):
        return self.paths[pair(u, v)]

    @property
    def support_graph(self):
        used = set()
        for p in self.paths.values():
            used |= path_edges(p)
        return Graph(self.n, used)

    def __eq__(self, other):
        return (
            isinstance(other, PathSystem)
            and self.n == other.n
            and self.paths == other.paths
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.paths.items()))))

    def __repr__(self):
        return f"PathSystem(n={self.n}, paths={[self.paths[p] for p in sorted(self.paths)]})"


@dataclass(frozen=True)
class Resume:
    """Partial map {u,v} -> interior vertex; encodes a path system."""

    n: int
    entries: tuple = field(default_factory=tuple)

    def __post_init__(self):
        canon = {}
        items = dict(self.entries).items() if not isinstance(self.entries, dict) else self.entries.items()
        for (u, v), z in items:
            key = pair(u, v)
            _check_vertex(z, self.n)
            if z in key:
                raise ValueError(f"résumé value {z} coincides with an endpoint of {key}")
            canon[key] = z
        object.__setattr__(self, "entries", tuple(sorted(canon.items())))

    def as_dict(self):
        return dict(self.entries)


@dataclass(frozen=True)
class TripleSet:
    """Set of pointed triples over [n]."""

    n: int
    triples: frozenset = frozenset()

    def __post_init__(self):
        canon = frozenset(pointed_triple(*t) for t in self.triples)
        for a, b, c in canon:
            _check_vertex(a, self.n)
            _check_vertex(b, self.n)
            _check_vertex(c, self.n)
        object.__setattr__(self, "triples", canon)

    def __contains__(self, t):
        return pointed_triple(*t) in self.triples

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(sorted(self.triples))


@dataclass(frozen=True)
class Intersection:
    """Classification of the common subgraph of two paths."""

    kind: str  # "empty" | "vertex" | "subpath" | "violation"
    vertex: int | None = None
    path: tuple | None = None


def path_intersection(p, q):
    """Classify the intersection of two simple paths.

    The common vertices and common edges form the intersection subgraph.
    It is a sub-path only if the common edges form a contiguous path
    covering every common vertex.
    """
    pv, qv = set(p), set(q)
    common_v = pv & qv
    if not common_v:
        return Intersection("empty")
    common_e = path_edges(p) & path_edges(q)
    if len(common_v) == 1 and not common_e:
        return Intersection("vertex", vertex=next(iter(common_v)))
    # The common edges must form a simple path spanning all common vertices.
    deg = {}
    for u, v in common_e:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if set(deg) != common_v:
        return Intersection("violation")
    ends = [v for v, d in deg.items() if d == 1]
    if len(ends) != 2 or any(d > 2 for d in deg.values()):
        return Intersection("violation")
    # Walk from one endpoint; check connectivity and coverage.
    adj = {v: [] for v in deg}
    for u, v in common_e:
        adj[u].append(v)
        adj[v].append(u)
    walk = [min(ends)]
    prev = None
    while True:
        nxt = [w for w in adj[walk[-1]] if w != prev]
        if not nxt:
            break
        prev = walk[-1]
        walk.append(nxt[0])
    if len(walk) != len(common_v):
        return Intersection("violation")
    return Intersection("subpath", path=make_path(walk))


@dataclass(frozen=True)
class Consistency:
    ok: bool
    pair_a: tuple | None = None
    pair_b: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _concat(p, q, via):
    """Concatenate two paths sharing endpoint `via`; None if not simple."""
    if p[-1] != via:
        p = p[::-1]
    if q[0] != via:
        q = q[::-1]
    if p[-1] != via or q[0] != via:
        raise ValueError("paths do not share the given endpoint")
    joined = p + q[1:]
    if len(set(joined)) != len(joined):
        return None
    return make_path(joined)


def is_consistent(sys):
    """Decide consistency of a path system.

    Two independent criteria are checked: (a) every pairwise intersection
    is empty, a single vertex, or a sub-path that is itself the member
    path between its endpoints; (b) for every path and every interior
    vertex a of P_{u,v}, P_{u,v} equals the concatenation of P_{u,a} and
    P_{a,v}.  (b) is redundant given (a) and serves as a cross-check.
    """
    keys = sorted(sys.paths)
    for i, ka in enumerate(keys):
        pa = sys.paths[ka]
        for kb in keys[i + 1 :]:
            pb = sys.paths[kb]
            inter = path_intersection(pa, pb)
            if inter.kind == "violation":
                return Consistency(False, ka, kb, "intersection is not a vertex or path")
            if inter.kind == "subpath":
                key = pair(inter.path[0], inter.path[-1])
                if sys.paths[key] != inter.path:
                    return Consistency(False, ka, kb, "shared sub-path is not a member path")
    # Concatenation cross-check.
    for (u, v), p in sys.paths.items():
        for a in path_interior(p):
            joined = _concat(sys.path(u, a), sys.path(a, v), a)
            if joined != p:
                return Consistency(False, (u, v), pair(u, a), "concatenation check failed")
    return Consistency(True)


def is_neighborly(sys, g):
    """True iff every edge of g is its own path and sys only uses g's edges."""
    if sys.n != g.n:
        raise ValueError("path system and graph have different vertex counts")
    for e in g.edges:
        if sys.paths[e] != e:
            return False
    for p in sys.paths.values():
        if not path_edges(p) <= g.edges:
            return False
    return True


def diameter(sys):
    """Largest path length (in edges) in the system."""
    return max(len(p) - 1 for p in sys.paths.values())


def extract_resume(sys):
    """Canonical résumé: immediate successor of the smaller endpoint."""
    check = is_consistent(sys)
    if not check:
        raise ValueError(f"inconsistent path system: {check.reason}")
    entries = {}
    for (u, v), p in sys.paths.items():
        if len(p) > 2:
            # p is canonically oriented from min(u,v).
            entries[(u, v)] = p[1]
    return Resume(sys.n, tuple(entries.items()))


def all_resumes(sys, cap=10**6):
    """The full set of résumés: one interior choice per long path."""
    check = is_consistent(sys)
    if not check:
        raise ValueError(f"inconsistent path system: {check.reason}")
    long_pairs = [k for k in sorted(sys.paths) if len(sys.paths[k]) > 2]
    total = 1
    for k in long_pairs:
        total *= len(sys.paths[k]) - 2
        if total > cap:
            raise ValueError(f"résumé count exceeds cap {cap}")
    choices = [path_interior(sys.paths[k]) for k in long_pairs]
    result = []
    for combo in itertools.product(*choices):
        result.append(Resume(sys.n, tuple(zip(long_pairs, combo))))
    return result


class ResumeRecoveryError(ValueError):
    """Raised when a résumé does not decode to a consistent system.

    kind is one of "unresolved_pair", "non_simple_concatenation",
    "inconsistent_result".
    """

    def __init__(self, kind, detail=""):
        self.kind = kind
        super().__init__(f"{kind}: {detail}" if detail else kind)


def recover_from_resume(f):
    """Decode a résumé into its path system.

    Pairs outside dom(f) become single edges, then exactly n rounds of
    concatenation P_{u,v} := P_{u,z} P_{z,v} with z = f(u,v) whenever
    both halves are already defined.
    """
    n = f.n
    dom = f.as_dict()
    paths = {}
    for p in all_pairs(n):
        if p not in dom:
            paths[p] = p
    for _ in range(n):
        for key in sorted(dom):
            if key in paths:
                continue
            u, v = key
            z = dom[key]
            left = paths.get(pair(u, z))
            right = paths.get(pair(z, v))
            if left is None or right is None:
                continue
            joined = _concat(left, right, z)
            if joined is None:
                raise ResumeRecoveryError(
                    "non_simple_concatenation", f"pair {key} via {z}"
                )
            paths[key] = joined
    unresolved = [p for p in all_pairs(n) if p not in paths]
    if unresolved:
        raise ResumeRecoveryError("unresolved_pair", f"pairs {unresolved}")
    sys = PathSystem(n, paths)
    check = is_consistent(sys)
    if not check:
        raise ResumeRecoveryError("inconsistent_result", check.reason)
    return sys


def colinear_triples(sys):
    """T(P): pointed triples {a,b;c} with c interior on P_{a,b}."""
    check = is_consistent(sys)
    if not check:
        raise ValueError(f"inconsistent path system: {check.reason}")
    triples = set()
    for (a, b), p in sys.paths.items():
        for c in path_interior(p):
            triples.add(pointed_triple(a, b, c))
    return TripleSet(sys.n, frozenset(triples))
