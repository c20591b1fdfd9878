"""Catalog of hyperplane arrangements and monomial maps.

Arrangements hold exact coefficient vectors (``CycScalar`` entries).  The
forty G32 forms and the forty Burkhardt monomials are tabulated data; the
Yoshida and Goepel exponent matrices are derived from the matroid of the
E6 and E7 arrangements.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

import numpy as np

from .exactnum import OMEGA, SQRT_M3, CycScalar, ValScalar
from . import finitegeom


class UnknownName(KeyError):
    pass


class CountMismatch(AssertionError):
    pass


class DimensionMismatch(ValueError):
    pass


@dataclass
class Arrangement:
    name: str
    labels: List[str]
    forms: List[List[CycScalar]]
    order: int  # cyclotomic order of the coefficient field
    rank: int

    @property
    def dim(self) -> int:
        return len(self.forms[0])

    def __len__(self):
        return len(self.forms)

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "labels": self.labels,
            "forms": [[str(c) for c in f] for f in self.forms],
        })


# ---------------------------------------------------------------------------
# G32: forty linear forms in c0..c3 over Q(w).  Notation: w = omega,
# w2 = omega^2, s = sqrt(-3) = 2w + 1.

G32_FORMS = {
    "u0001": "+c1 +c2 +c3",
    "u0010": "+c2 -c3 +c0",
    "u0011": "+c3 +c0 -c1",
    "u0012": "+c0 +c1 -c2",
    "u0100": "+s*c1",
    "u0101": "+c1 +w2*c2 +w2*c3",
    "u0102": "+c1 +w*c2 +w*c3",
    "u0110": "+c2 -w*c3 +w2*c0",
    "u0111": "+c3 +c0 -w*c1",
    "u0112": "+c0 +w2*c1 -c2",
    "u0120": "+c2 -w2*c3 +w*c0",
    "u0121": "+c0 +w*c1 -c2",
    "u0122": "+c3 +c0 -w2*c1",
    "u1000": "+s*c0",
    "u1001": "+c1 +w*c2 +w2*c3",
    "u1002": "+c1 +w2*c2 +w*c3",
    "u1010": "+c2 -c3 +w*c0",
    "u1011": "+c3 +w*c0 -c1",
    "u1012": "+c0 +w2*c1 -w2*c2",
    "u1020": "+c2 -c3 +w2*c0",
    "u1021": "+c0 +w*c1 -w*c2",
    "u1022": "+c3 +w2*c0 -c1",
    "u1100": "+s*c3",
    "u1101": "+c1 +c2 +w*c3",
    "u1102": "+c1 +c2 +w2*c3",
    "u1110": "+c2 -w*c3 +c0",
    "u1111": "+c3 +w*c0 -w*c1",
    "u1112": "+c0 +w*c1 -w2*c2",
    "u1120": "+c2 -w2*c3 +c0",
    "u1121": "+c0 +w2*c1 -w*c2",
    "u1122": "+c3 +w2*c0 -w2*c1",
    "u1200": "+s*c2",
    "u1201": "+c1 +w2*c2 +c3",
    "u1202": "+c1 +w*c2 +c3",
    "u1210": "+c2 -w2*c3 +w2*c0",
    "u1211": "+c3 +w*c0 -w2*c1",
    "u1212": "+c0 +c1 -w2*c2",
    "u1220": "+c2 -w*c3 +w*c0",
    "u1221": "+c0 +c1 -w*c2",
    "u1222": "+c3 +w2*c0 -w*c1",
}

# The forty Burkhardt monomials m0..m39 as lists of u-indices.
BURKHARDT_MONOMIALS = [
    "0001 0010 0011 0012", "0001 1000 1001 1002", "0001 1010 1011 1012",
    "0001 1020 1021 1022", "0010 0100 0110 0120", "0010 0101 0111 0121",
    "0010 0102 0112 0122", "0011 1200 1211 1222", "0011 1201 1212 1220",
    "0011 1202 1210 1221", "0012 1100 1112 1121", "0012 1101 1110 1122",
    "0012 1102 1111 1120", "0100 1000 1100 1200", "0100 1010 1110 1210",
    "0100 1020 1120 1220", "0101 1000 1101 1202", "0101 1010 1111 1212",
    "0101 1020 1121 1222", "0102 1000 1102 1201", "0102 1010 1112 1211",
    "0102 1020 1122 1221", "0110 1001 1111 1221", "0110 1011 1121 1201",
    "0110 1021 1101 1211", "0111 1001 1112 1220", "0111 1011 1122 1200",
    "0111 1021 1102 1210", "0112 1001 1110 1222", "0112 1011 1120 1202",
    "0112 1021 1100 1212", "0120 1002 1122 1212", "0120 1012 1102 1222",
    "0120 1022 1112 1202", "0121 1002 1120 1211", "0121 1012 1100 1221",
    "0121 1022 1110 1201", "0122 1002 1121 1210", "0122 1012 1101 1220",
    "0122 1022 1111 1200",
]

_COEFF = {"": CycScalar.rational(1), "w": OMEGA, "w2": OMEGA * OMEGA, "s": SQRT_M3}


def _parse_form(text: str, nvars: int = 4) -> List[CycScalar]:
    out = [CycScalar((0,), 3) for _ in range(nvars)]
    for tok in text.split():
        sign = -1 if tok[0] == "-" else 1
        body = tok[1:]
        coeff, _, var = body.rpartition("*")
        idx = int(var[1:])
        out[idx] = out[idx] + sign * _COEFF[coeff]
    return out


def _m0n(n: int) -> Arrangement:
    if not 3 <= n <= 6:
        raise UnknownName(f"M0N({n}) is only catalogued for 3 <= n <= 6")
    labels, forms = [], []
    for i, j in itertools.combinations(range(n), 2):
        v = [CycScalar.rational(0)] * n
        v[i] = CycScalar.rational(1)
        v[j] = CycScalar.rational(-1)
        labels.append(f"z{i + 1}{j + 1}")
        forms.append(v)
    return Arrangement(f"M0N({n})", labels, forms, 1, n - 1)


def _g32() -> Arrangement:
    labels = [finitegeom.line_label(v) for v in finitegeom.enumerate_lines(3, 4)]
    forms = [_parse_form(G32_FORMS[lab]) for lab in labels]
    return Arrangement("G32", labels, forms, 3, 4)


def _e6() -> Arrangement:
    labels, forms = [], []
    one = CycScalar.rational(1)
    zero = CycScalar.rational(0)
    for i, j in itertools.combinations(range(6), 2):
        v = [zero] * 6
        v[i], v[j] = one, -one
        labels.append(f"d{i + 1}-d{j + 1}")
        forms.append(v)
    for trip in itertools.combinations(range(6), 3):
        v = [one if k in trip else zero for k in range(6)]
        labels.append("[" + "".join(str(k + 1) for k in trip) + "]")
        forms.append(v)
    labels.append("d1+d2+d3+d4+d5+d6")
    forms.append([one] * 6)
    return Arrangement("E6", labels, forms, 1, 6)


def _e7() -> Arrangement:
    labels, forms = [], []
    one = CycScalar.rational(1)
    zero = CycScalar.rational(0)
    for i, j in itertools.combinations(range(8), 2):
        v = [zero] * 8
        v[i], v[j] = one, -one
        labels.append(f"e{i + 1}-e{j + 1}")
        forms.append(v)
    for rest in itertools.combinations(range(1, 8), 3):
        plus = (0,) + rest
        v = [one if k in plus else -one for k in range(8)]
        labels.append("h" + "".join(str(k + 1) for k in plus))
        forms.append(v)
    return Arrangement("E7", labels, forms, 1, 7)


_ALIASES = {"g32": "G32", "e6": "E6", "e7": "E7"}


@lru_cache(maxsize=None)
def arrangement(name: str) -> Arrangement:
    key = _ALIASES.get(name.lower(), name)
    if key == "G32":
        return _g32()
    if key == "E6":
        return _e6()
    if key == "E7":
        return _e7()
    low = name.lower().replace("(", "").replace(")", "")
    if low.startswith("m0n"):
        try:
            return _m0n(int(low[3:]))
        except ValueError:
            pass
    raise UnknownName(name)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(arr: Arrangement, point: Sequence) -> List[ValScalar]:
    if len(point) != arr.dim:
        raise DimensionMismatch(f"{arr.name} needs {arr.dim} coordinates, got {len(point)}")
    pts = [ValScalar.coerce(p) for p in point]
    out = []
    for f in arr.forms:
        acc = ValScalar()
        for c, x in zip(f, pts):
            if not c.is_zero():
                acc = acc + x * ValScalar.const(c)
        out.append(acc)
    return out


def monomial_evaluate(E: "ExponentMatrix", values: Sequence[ValScalar]) -> List[ValScalar]:
    mat = E.matrix
    if mat.shape[1] != len(values):
        raise DimensionMismatch("exponent matrix and value vector disagree")
    out = []
    for row in mat:
        acc = ValScalar.const(1)
        for e, v in zip(row, values):
            if e:
                acc = acc * (v ** int(e))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# exponent matrices


@dataclass
class ExponentMatrix:
    name: str
    rows: List[str]
    cols: List[str]
    matrix: np.ndarray
    row_sets: List[tuple] | None = None

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "labels": self.cols,
                           "rows": self.rows, "matrix": self.matrix.tolist()})


def burkhardt_from_table() -> np.ndarray:
    """Incidence recomputed from the tabulated monomials."""
    cols = [finitegeom.line_label(v) for v in finitegeom.enumerate_lines(3, 4)]
    idx = {c: j for j, c in enumerate(cols)}
    mat = np.zeros((40, 40), dtype=np.int64)
    for i, mono in enumerate(BURKHARDT_MONOMIALS):
        for u in mono.split():
            mat[i, idx["u" + u]] += 1
    return mat


def _check_rows(name, mat, nrows):
    if mat.shape[0] != nrows:
        raise CountMismatch(f"{name}: derived {mat.shape[0]} rows, expected {nrows}")


def a2_flats(matroid) -> List[frozenset]:
    return [f.elements for f in matroid.flats_of_rank(2) if len(f.elements) == 3]


def yoshida_triples(matroid):
    """Triples of pairwise orthogonal A2 flats, and the orthogonality graph.

    Two A2 flats count as orthogonal when they are disjoint and their join
    holds exactly six forms (so it is an A2 x A2 flat of rank 4).
    """
    import networkx as nx

    a2 = a2_flats(matroid)
    g = nx.Graph()
    g.add_nodes_from(range(len(a2)))
    for i, j in itertools.combinations(range(len(a2)), 2):
        if a2[i] & a2[j]:
            continue
        join = matroid.closure(a2[i] | a2[j])
        if len(join) == 6:
            g.add_edge(i, j)
    triples = []
    for i, j, k in itertools.combinations(range(len(a2)), 3):
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(j, k):
            triples.append((i, j, k))
    return a2, triples, g


def goepel_heptads(matroid) -> List[tuple]:
    """7-sets of forms that pairwise span a rank-2 flat with two forms."""
    import networkx as nx

    n = len(matroid)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for i, j in itertools.combinations(range(n), 2):
        if len(matroid.closure({i, j})) == 2:
            g.add_edge(i, j)
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(g) if len(c) == 7)


@lru_cache(maxsize=None)
def exponent_matrix(name: str) -> ExponentMatrix:
    from .matroidfan import matroid_of

    if name in ("segre", "igusa", "burkhardt"):
        inc = finitegeom.incidence(name)
        mat = inc.entries.copy()
        _check_rows(name, mat, {"segre": 15, "igusa": 10, "burkhardt": 40}[name])
        return ExponentMatrix(name, inc.rows, inc.cols, mat, inc.row_sets)
    if name == "yoshida":
        arr = arrangement("E6")
        M = matroid_of(arr)
        a2, triples, _ = yoshida_triples(M)
        mat = np.zeros((len(triples), len(arr)), dtype=np.int64)
        for r, tri in enumerate(triples):
            for t in tri:
                for e in a2[t]:
                    mat[r, e] = 1
        _check_rows(name, mat, 40)
        return ExponentMatrix(name, [f"m{i}" for i in range(len(triples))], arr.labels, mat)
    if name == "goepel":
        arr = arrangement("E7")
        M = matroid_of(arr)
        hept = goepel_heptads(M)
        mat = np.zeros((len(hept), len(arr)), dtype=np.int64)
        for r, h in enumerate(hept):
            mat[r, list(h)] = 1
        _check_rows(name, mat, 135)
        return ExponentMatrix(name, [f"m{i}" for i in range(len(hept))], arr.labels, mat)
    raise UnknownName(name)


MAP_SOURCE = {
    "segre": "M0N(6)",
    "igusa": "M0N(6)",
    "burkhardt": "G32",
    "yoshida": "E6",
    "goepel": "E7",
}
