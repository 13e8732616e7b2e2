"""Canonical JSON (de)serialization for every public object.

All arrays are emitted in a fixed sorted order so identical inputs yield
byte-identical documents.  Rationals travel as {"num", "den"} decimal
strings; TSV output renders them "num/den".  Triple sets and witnesses
accept an optional "label_base" (default 1): documents with 0-based
vertex labels are shifted to the internal 1-based convention on load and
shifted back on dump.
"""

from __future__ import annotations

import json

from .core import Graph, PathSystem, Resume, TripleSet, pointed_triple
from .generators import MonotoneMatrix
from .metrize import Pseudometric, WeightFunction, WitnessAlpha
from .rational import parse_rational, rational_to_json
from .vc import SetSystem, SimplicialComplex

__all__ = [
    "dumps",
    "graph_to_json",
    "graph_from_json",
    "system_to_json",
    "system_from_json",
    "resume_to_json",
    "resume_from_json",
    "tripleset_to_json",
    "tripleset_from_json",
    "witness_to_json",
    "witness_from_json",
    "pseudometric_to_json",
    "pseudometric_from_json",
    "weights_to_json",
    "weights_from_json",
    "monotone_to_json",
    "monotone_from_json",
    "setsystem_to_json",
    "setsystem_from_json",
    "complex_to_json",
    "complex_from_json",
]


def dumps(doc):
    """Byte-stable rendering: sorted keys, fixed separators, one newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def graph_to_json(g):
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json(doc):
    return Graph(doc["n"], [tuple(e) for e in doc["edges"]])


def system_to_json(sys):
    return {
        "n": sys.n,
        "paths": [{"vertices": list(sys.paths[k])} for k in sorted(sys.paths)],
    }


def system_from_json(doc):
    return PathSystem(doc["n"], [tuple(p["vertices"]) for p in doc["paths"]])


def resume_to_json(f):
    return {
        "n": f.n,
        "entries": [{"pair": list(p), "via": z} for p, z in f.entries],
    }


def resume_from_json(doc):
    return Resume(
        doc["n"], tuple((tuple(e["pair"]), e["via"]) for e in doc["entries"])
    )


def _shift_triple(t, offset):
    a, b, c = t
    return pointed_triple(a + offset, b + offset, c + offset)


def tripleset_to_json(ts, label_base=1):
    offset = label_base - 1
    doc = {
        "n": ts.n,
        "triples": [
            {"pair": [a + offset, b + offset], "point": c + offset} for a, b, c in ts
        ],
    }
    if label_base != 1:
        doc["label_base"] = label_base
    return doc


def tripleset_from_json(doc):
    offset = 1 - doc.get("label_base", 1)
    triples = frozenset(
        _shift_triple((t["pair"][0], t["pair"][1], t["point"]), offset)
        for t in doc["triples"]
    )
    return TripleSet(doc["n"], triples)


def witness_to_json(alpha, label_base=1):
    offset = label_base - 1
    entries = []
    for t in sorted(alpha):
        a, b, c = t
        rat = rational_to_json(alpha[t])
        entries.append(
            {
                "triple": {"pair": [a + offset, b + offset], "point": c + offset},
                "num": rat["num"],
                "den": rat["den"],
            }
        )
    doc = {"alpha": entries}
    if label_base != 1:
        doc["label_base"] = label_base
    return doc


def witness_from_json(doc):
    offset = 1 - doc.get("label_base", 1)
    items = []
    for e in doc["alpha"]:
        t = _shift_triple(
            (e["triple"]["pair"][0], e["triple"]["pair"][1], e["triple"]["point"]),
            offset,
        )
        items.append((t, parse_rational({"num": e["num"], "den": e["den"]})))
    return WitnessAlpha(items)


def pseudometric_to_json(rho):
    n = rho.n
    return {
        "n": n,
        "d": [
            [rational_to_json(rho.value(i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ],
    }


def pseudometric_from_json(doc):
    n = doc["n"]
    values = {
        (i, j): parse_rational(doc["d"][i - 1][j - 1])
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    return Pseudometric(n, values)


def weights_to_json(w):
    return {
        "graph": graph_to_json(w.graph),
        "weights": [
            {"edge": list(e), **rational_to_json(w.w[e])} for e in sorted(w.w)
        ],
    }


def weights_from_json(doc):
    g = graph_from_json(doc["graph"])
    w = {
        tuple(e["edge"]): parse_rational({"num": e["num"], "den": e["den"]})
        for e in doc["weights"]
    }
    return WeightFunction(g, w)


def monotone_to_json(m):
    rows = [
        [None if i == j else m.rows[i][j] for j in range(m.n)] for i in range(m.n)
    ]
    return {"n": m.n, "rows": rows}


def monotone_from_json(doc):
    n = doc["n"]
    rows = [
        [1 if i == j else doc["rows"][i][j] for j in range(n)] for i in range(n)
    ]
    return MonotoneMatrix(n, tuple(tuple(r) for r in rows))


def setsystem_to_json(f):
    return {"n": f.n, "sets": [sorted(s) for s in f]}


def setsystem_from_json(doc):
    return SetSystem(doc["n"], frozenset(frozenset(s) for s in doc["sets"]))


def complex_to_json(y):
    return {"n": y.n, "k": y.k, "faces": sorted(sorted(f) for f in y.faces)}


def complex_from_json(doc):
    return SimplicialComplex(
        doc["n"], doc["k"], frozenset(frozenset(f) for f in doc["faces"])
    )
