"""Set systems, shattering, VC dimension, and maximum classes.

The vertex-set family of a consistent path system is an intersection-closed
maximum class of VC dimension 2; the same bound-meeting structure arises in
any dimension from random simplicial complexes by adjoining one compatible
extension per missing top face.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

from .core import is_consistent
from .generators import _bernoulli, gen_gnp

__all__ = [
    "SetSystem",
    "SimplicialComplex",
    "NoCompatibleExtension",
    "family_of_system",
    "shatters",
    "vc_dim",
    "is_maximum_class",
    "is_intersection_closed",
    "sauer_bound",
    "sample_lm",
    "compatible_vertices",
    "build_maximum_class",
]


def _check_subset(s, n):
    s = frozenset(s)
    for v in s:
        if not (isinstance(v, int) and 1 <= v <= n):
            raise ValueError(f"element {v!r} not in 1..{n}")
    return s


@dataclass(frozen=True)
class SetSystem:
    """A family of distinct subsets of [n]."""

    n: int
    sets: frozenset = frozenset()

    def __post_init__(self):
        canon = frozenset(_check_subset(s, self.n) for s in self.sets)
        object.__setattr__(self, "sets", canon)

    def __contains__(self, s):
        return frozenset(s) in self.sets

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(sorted(self.sets, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Full (k-1)-skeleton plus an explicit set of (k+1)-element top faces."""

    n: int
    k: int
    faces: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("dimension k must be non-negative")
        canon = set()
        for f in self.faces:
            f = _check_subset(f, self.n)
            if len(f) != self.k + 1:
                raise ValueError(f"explicit face {sorted(f)} has size != {self.k + 1}")
            canon.add(f)
        object.__setattr__(self, "faces", frozenset(canon))

    def is_face(self, s):
        s = frozenset(s)
        if len(s) <= self.k:
            return _check_subset(s, self.n) == s
        return s in self.faces

    def all_faces(self):
        """Every face: all subsets of size <= k plus the explicit top faces."""
        verts = range(1, self.n + 1)
        for size in range(self.k + 1):
            for s in itertools.combinations(verts, size):
                yield frozenset(s)
        for f in sorted(self.faces, key=sorted):
            yield f


def family_of_system(sys):
    """The vertex sets of all paths, plus the singletons and the empty set."""
    check = is_consistent(sys)
    if not check:
        raise ValueError(f"inconsistent path system: {check.reason}")
    sets = {frozenset(p) for p in sys.paths.values()}
    sets |= {frozenset({v}) for v in range(1, sys.n + 1)}
    sets.add(frozenset())
    return SetSystem(sys.n, frozenset(sets))


def shatters(family, s):
    """Does the family trace the full power set on s?"""
    s = frozenset(s)
    traces = {s & f for f in family.sets}
    return len(traces) == 2 ** len(s)


def sauer_bound(n, d):
    """sum_{i=0}^{d} C(n, i)."""
    return sum(comb(n, i) for i in range(d + 1))


def vc_dim(family):
    """Largest size of a shattered subset, by ascending layers.

    If no s-set is shattered then no larger set is (shattering is closed
    under subsets), so the first empty layer is exact.  Shattering an
    s-set needs 2^s distinct traces, so layers beyond log2 |F| are moot.
    """
    if not family.sets:
        return -1
    n = family.n
    cap = min(n, len(family.sets).bit_length() - 1)
    dim = 0
    for size in range(1, cap + 1):
        if any(shatters(family, s) for s in itertools.combinations(range(1, n + 1), size)):
            dim = size
        else:
            break
    return dim


def is_maximum_class(family, d):
    """VC dimension exactly d and cardinality meeting the Sauer bound."""
    return len(family.sets) == sauer_bound(family.n, d) and vc_dim(family) == d


def is_intersection_closed(family):
    """Pairwise intersections all belong to the family."""
    sets = list(family.sets)
    for i, a in enumerate(sets):
        for b in sets[i + 1 :]:
            if a & b not in family.sets:
                return False
    return True


def sample_lm(n, k, p, seed):
    """A Linial-Meshulam complex Y_k(n, p).

    Each (k+1)-subset is kept independently with probability p, drawn in
    lexicographic order from the stream of random.Random(seed); for k = 1
    this reproduces the G(n, p) generator's edge set exactly.
    """
    rng = random.Random(seed)
    faces = [
        frozenset(s)
        for s in itertools.combinations(range(1, n + 1), k + 1)
        if _bernoulli(rng, p)
    ]
    y = SimplicialComplex(n, k, frozenset(faces))
    if k == 1:
        assert {tuple(sorted(f)) for f in y.faces} == gen_gnp(n, p, seed).edges
    return y


class NoCompatibleExtension(ValueError):
    """A non-face admits no compatible vertex; retry with a new seed."""

    def __init__(self, s):
        self.s = frozenset(s)
        super().__init__(f"no compatible vertex for non-face {sorted(self.s)}")


def compatible_vertices(y, s):
    """Vertices a with S u {a} \\ {x} a face of Y for every x in S.

    S must be a (k+1)-set missing from E(Y); for k = 1 these are the
    common neighbors of the two endpoints.
    """
    s = _check_subset(s, y.n)
    if len(s) != y.k + 1:
        raise ValueError(f"S must have {y.k + 1} elements")
    if s in y.faces:
        raise ValueError(f"{sorted(s)} is a face, not a candidate base")
    result = []
    for a in range(1, y.n + 1):
        if a in s:
            continue
        if all((s | {a}) - {x} in y.faces for x in s):
            result.append(a)
    return result


def extension_base(y, e):
    """The base of an extension: its unique (k+1)-subset missing from E(Y)."""
    e = frozenset(e)
    non_faces = [e - {a} for a in e if e - {a} not in y.faces]
    if len(non_faces) != 1:
        raise ValueError("extension does not decode to a unique base")
    return non_faces[0]


def build_maximum_class(y, chooser=None, seed=None):
    """Faces of Y plus one compatible extension per missing top face.

    The result has exactly sum_{i<=d} C(n, i) members with d = k+1 and VC
    dimension d, hence is a maximum class.  The default chooser takes the
    smallest compatible vertex; passing a seed instead picks uniformly,
    which is how distinct families are counted.
    """
    if chooser is None:
        if seed is None:
            chooser = lambda s, cands: cands[0]
        else:
            rng = random.Random(seed)
            chooser = lambda s, cands: rng.choice(cands)
    d = y.k + 1
    sets = set(y.all_faces())
    for s in itertools.combinations(range(1, y.n + 1), y.k + 1):
        s = frozenset(s)
        if s in y.faces:
            continue
        cands = compatible_vertices(y, s)
        if not cands:
            raise NoCompatibleExtension(s)
        a = chooser(s, cands)
        ext = s | {a}
        assert extension_base(y, ext) == s
        sets.add(ext)
    family = SetSystem(y.n, frozenset(sets))
    assert len(family.sets) == sauer_bound(y.n, d)
    assert vc_dim(family) == d
    return family
