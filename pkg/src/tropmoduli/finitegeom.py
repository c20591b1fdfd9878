"""Finite symplectic and orthogonal geometry over F_2 and F_3.

Vectors are plain tuples of residues.  Lines are represented by their
normalized representative (leftmost nonzero coordinate equal to 1) and
subspaces by their reduced row echelon basis, so equality is structural.

The incidence matrices of the Segre, Igusa and Burkhardt monomial maps are
derived here from the geometry alone, with the fixed dictionary between
the fifteen pairs ij of {1..6} and the nonzero vectors of F_2^4.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

Vec = Tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


# --------------------------------------------------------------------------
# vectors, lines, subspaces


def symplectic_form(x: Sequence[int], y: Sequence[int], q: int) -> int:
    """<x,y> = x1 y3 + x2 y4 - x3 y1 - x4 y2 (mod q)."""
    if len(x) != 4 or len(y) != 4:
        raise DimensionMismatch("the symplectic form lives on 4-dimensional space")
    return (x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1]) % q


def normalize(v: Sequence[int], q: int) -> Vec:
    """Scale so that the leftmost nonzero coordinate is 1."""
    v = [c % q for c in v]
    for c in v:
        if c:
            inv = pow(c, -1, q)
            return tuple((x * inv) % q for x in v)
    raise ValueError("the zero vector spans no line")


@lru_cache(maxsize=None)
def enumerate_lines(q: int, dim: int) -> Tuple[Vec, ...]:
    """All (q^dim - 1)/(q - 1) lines of F_q^dim, sorted by representative."""
    out = set()
    for v in itertools.product(range(q), repeat=dim):
        if any(v):
            out.add(normalize(v, q))
    return tuple(sorted(out))


def line_label(v: Vec) -> str:
    return "u" + "".join(str(c) for c in v)


def rref(rows: Iterable[Sequence[int]], q: int) -> Tuple[Vec, ...]:
    """Reduced row echelon form over F_q, zero rows removed."""
    m = [[c % q for c in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    piv_row = 0
    for col in range(ncols):
        pr = None
        for r in range(piv_row, len(m)):
            if m[r][col]:
                pr = r
                break
        if pr is None:
            continue
        m[piv_row], m[pr] = m[pr], m[piv_row]
        inv = pow(m[piv_row][col], -1, q)
        m[piv_row] = [(x * inv) % q for x in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % q for a, b in zip(m[r], m[piv_row])]
        piv_row += 1
        if piv_row == len(m):
            break
    return tuple(tuple(r) for r in m[:piv_row])


@dataclass(frozen=True)
class FqSubspace:
    q: int
    basis: Tuple[Vec, ...]

    @classmethod
    def span(cls, vectors, q: int) -> "FqSubspace":
        return cls(q, rref(vectors, q))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> List[Vec]:
        n = len(self.basis[0]) if self.basis else 0
        out = []
        for coeffs in itertools.product(range(self.q), repeat=self.dim):
            v = [0] * n
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [(x + c * y) % self.q for x, y in zip(v, b)]
            out.append(tuple(v))
        return out

    def lines(self) -> List[Vec]:
        return sorted({normalize(v, self.q) for v in self.vectors() if any(v)})

    def is_isotropic(self) -> bool:
        return all(symplectic_form(x, y, self.q) == 0 for x in self.basis for y in self.basis)

    def perp(self) -> "FqSubspace":
        """Symplectic orthogonal complement inside F_q^4."""
        q = self.q
        cand = [v for v in itertools.product(range(q), repeat=4)
                if all(symplectic_form(v, b, q) == 0 for b in self.basis)]
        return FqSubspace.span(cand, q)


@lru_cache(maxsize=None)
def all_planes(q: int) -> Tuple[FqSubspace, ...]:
    lines = enumerate_lines(q, 4)
    planes = {FqSubspace.span([a, b], q) for a, b in itertools.combinations(lines, 2)}
    return tuple(sorted(planes, key=lambda p: p.basis))


@lru_cache(maxsize=None)
def classify_planes(q: int = 3):
    """(isotropic planes, list of {W, W^perp} pairs of non-isotropic planes)."""
    iso = []
    pairs = set()
    for p in all_planes(q):
        pp = p.perp()
        if pp == p:
            iso.append(p)
        else:
            pairs.add(tuple(sorted([p, pp], key=lambda s: s.basis)))
    return iso, sorted(pairs, key=lambda pr: (pr[0].basis, pr[1].basis))


def plane_line_labels(p: FqSubspace) -> Tuple[str, ...]:
    return tuple(line_label(v) for v in p.lines())


# --------------------------------------------------------------------------
# the dictionary between pairs ij and F_2^4 \ 0

Z_LABELS = tuple(f"z{i}{j}" for i, j in itertools.combinations(range(1, 7), 2))
BIJECTION15 = dict(zip(Z_LABELS, (
    "u0001", "u1100", "u1110", "u0101", "u0110", "u1101", "u1111", "u0100",
    "u0111", "u0010", "u1001", "u1010", "u1011", "u1000", "u0011",
)))
U_TO_Z = {u: z for z, u in BIJECTION15.items()}


def _zpair(z: str) -> Tuple[int, int]:
    return int(z[1]), int(z[2])


def _u_vec(label: str) -> Vec:
    return tuple(int(c) for c in label[1:])


def check_bijection15() -> int:
    """Number of the 105 pairs where orthogonality disagrees with disjointness."""
    bad = 0
    for a, b in itertools.combinations(Z_LABELS, 2):
        orth = symplectic_form(_u_vec(BIJECTION15[a]), _u_vec(BIJECTION15[b]), 2) == 0
        disjoint = not set(_zpair(a)) & set(_zpair(b))
        bad += orth != disjoint
    return bad


@dataclass
class IncidenceMatrix:
    kind: str
    rows: List[str]
    cols: List[str]
    entries: np.ndarray
    row_sets: List[Tuple[str, ...]] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.cols)]
        for lab, r in zip(self.rows, self.entries):
            lines.append(lab + "," + ",".join(str(int(x)) for x in r))
        return "\n".join(lines) + "\n"


def _segre_rows() -> List[Tuple[str, ...]]:
    iso, _ = classify_planes(2)
    rows = []
    for p in iso:
        zs = tuple(sorted(U_TO_Z[lab] for lab in plane_line_labels(p)))
        rows.append(zs)
    # the three pairs of an isotropic plane form a perfect matching
    for zs in rows:
        assert sorted(i for z in zs for i in _zpair(z)) == [1, 2, 3, 4, 5, 6]
    return sorted(rows)


def _igusa_rows() -> List[Tuple[str, ...]]:
    _, pairs = classify_planes(2)
    rows = []
    for w, wp in pairs:
        za = sorted(U_TO_Z[lab] for lab in plane_line_labels(w))
        zb = sorted(U_TO_Z[lab] for lab in plane_line_labels(wp))
        # each plane is a triangle {ij, ik, jk}; order by the triple containing 1
        tri_a = sorted({i for z in za for i in _zpair(z)})
        tri_b = sorted({i for z in zb for i in _zpair(z)})
        assert len(tri_a) == 3 and len(tri_b) == 3
        if 1 not in tri_a:
            za, zb, tri_a, tri_b = zb, za, tri_b, tri_a
        rows.append((tuple(tri_a), tuple(za) + tuple(zb)))
    rows.sort()
    return [r[1] for r in rows]


def _burkhardt_rows() -> List[Tuple[str, ...]]:
    iso, _ = classify_planes(3)
    return sorted(plane_line_labels(p) for p in iso)


@lru_cache(maxsize=None)
def incidence(kind: str) -> IncidenceMatrix:
    if kind in ("segre", "igusa"):
        rows = _segre_rows() if kind == "segre" else _igusa_rows()
        cols = list(Z_LABELS)
    elif kind == "burkhardt":
        rows = _burkhardt_rows()
        cols = [line_label(v) for v in enumerate_lines(3, 4)]
    else:
        raise ValueError(f"incidence kind {kind!r} is built in arrangements")
    idx = {c: j for j, c in enumerate(cols)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for lab in r:
            mat[i, idx[lab]] = 1
    labels = [f"m{i}" for i in range(len(rows))]
    return IncidenceMatrix(kind, labels, cols, mat, rows)


# --------------------------------------------------------------------------
# permutation groups


def compose(p: Sequence[int], q: Sequence[int]) -> Tuple[int, ...]:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[i] for i in q)


@dataclass
class PermGroup:
    degree: int
    generators: List[Tuple[int, ...]]
    _elements: set | None = None

    def elements(self) -> set:
        if self._elements is None:
            ident = tuple(range(self.degree))
            seen = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.generators:
                        h = compose(s, g)
                        if h not in seen:
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            self._elements = seen
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def induced(self, objects: Sequence[frozenset]) -> "PermGroup":
        """Action on a list of invariant subsets of the domain."""
        index = {frozenset(o): i for i, o in enumerate(objects)}
        gens = []
        for g in self.generators:
            gens.append(tuple(index[frozenset(g[x] for x in o)] for o in objects))
        return PermGroup(len(objects), gens)


def orbits(g: PermGroup, objects: Sequence[Iterable[int]]) -> List[List[frozenset]]:
    """Partition ``objects`` (subsets of the domain) into orbits.

    Every image of an object must be in the list again; orbits are returned
    by decreasing size, ties broken by first element order.
    """
    objs = [frozenset(o) for o in objects]
    present = set(objs)
    seen = set()
    out = []
    for o in objs:
        if o in seen:
            continue
        orb = [o]
        seen.add(o)
        dq = deque([o])
        while dq:
            cur = dq.popleft()
            for s in g.generators:
                img = frozenset(s[x] for x in cur)
                if img not in present:
                    raise ValueError("object list is not closed under the group")
                if img not in seen:
                    seen.add(img)
                    orb.append(img)
                    dq.append(img)
        out.append(orb)
    out.sort(key=lambda orb: -len(orb))
    return out


def orbit_sizes(g: PermGroup, objects) -> List[int]:
    return [len(o) for o in orbits(g, objects)]


def transvection(v: Vec, q: int) -> np.ndarray:
    """Matrix of x -> x + <x,v> v acting on column vectors."""
    m = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        e = [0] * 4
        e[i] = 1
        img = [(a + symplectic_form(e, v, q) * b) % q for a, b in zip(e, v)]
        m[:, i] = img
    return m


def _line_perm(mat: np.ndarray, q: int, lines: Sequence[Vec], index: Dict[Vec, int]) -> Tuple[int, ...]:
    return tuple(index[normalize(tuple(int(c) for c in mat.dot(v) % q), q)] for v in lines)


@lru_cache(maxsize=None)
def generate_sp4(q: int) -> PermGroup:
    """Sp_4(F_q) acting on the lines of F_q^4, generated by transvections.

    All transvections are used to define the group; a small generating
    subset that already reaches the same order is kept for orbit work.
    For q = 3 the center acts trivially, so the image is PSp_4(F_3).
    """
    lines = enumerate_lines(q, 4)
    index = {v: i for i, v in enumerate(lines)}
    perms = []
    for v in lines:
        p = _line_perm(transvection(v, q), q, lines, index)
        if p not in perms:
            perms.append(p)
    full = PermGroup(len(lines), perms)
    target = full.order()
    gens: List[Tuple[int, ...]] = []
    current = 1
    for p in perms:
        if p in PermGroup(len(lines), gens).elements():
            continue
        gens.append(p)
        current = PermGroup(len(lines), gens).order()
        if current == target:
            break
    small = PermGroup(len(lines), gens)
    small._elements = full._elements
    return small


def preserves_symplectic_orthogonality(g: PermGroup, q: int) -> bool:
    lines = enumerate_lines(q, 4)
    orth = {(i, j) for i, j in itertools.permutations(range(len(lines)), 2)
            if symplectic_form(lines[i], lines[j], q) == 0}
    return all((s[i], s[j]) in orth for s in g.generators for (i, j) in orth)


def burkhardt_plane_action() -> PermGroup:
    """PSp_4(F_3) acting on the 40 isotropic planes, indexed as m0..m39."""
    inc = incidence("burkhardt")
    cols = {c: j for j, c in enumerate(inc.cols)}
    objects = [frozenset(cols[lab] for lab in row) for row in inc.row_sets]
    return generate_sp4(3).induced(objects)


# --------------------------------------------------------------------------
# the orthogonal model of E6 over F_2^6


def e6_quadratic_form(x: Sequence[int]) -> int:
    return (x[0] * x[1] + x[2] * x[3] + x[4] * x[4] + x[4] * x[5] + x[5] * x[5]) % 2


def e6_bilinear(x, y) -> int:
    s = tuple((a + b) % 2 for a, b in zip(x, y))
    return (e6_quadratic_form(s) - e6_quadratic_form(x) - e6_quadratic_form(y)) % 2


@lru_cache(maxsize=None)
def e6_finite_model():
    """(anisotropic vectors, anisotropic planes, orthogonal plane triples)."""
    vecs = [v for v in itertools.product(range(2), repeat=6) if any(v)]
    aniso = [v for v in vecs if e6_quadratic_form(v) == 1]
    aset = set(aniso)
    planes = set()
    for a, b in itertools.combinations(aniso, 2):
        c = tuple((x + y) % 2 for x, y in zip(a, b))
        if c in aset:
            planes.add(frozenset((a, b, c)))
    planes = sorted(planes, key=lambda p: sorted(p))

    def orth(p, r):
        return all(e6_bilinear(x, y) == 0 for x in p for y in r)

    adj = {i: {j for j in range(len(planes)) if j != i and orth(planes[i], planes[j])}
           for i in range(len(planes))}
    triples = []
    for i in range(len(planes)):
        for j in adj[i]:
            if j <= i:
                continue
            for k in adj[i] & adj[j]:
                if k > j:
                    triples.append((i, j, k))
    return aniso, planes, triples


def e6_plane_orthogonality_graph():
    """networkx graph on the 120 anisotropic planes, edges = orthogonal."""
    import networkx as nx

    _, planes, _ = e6_finite_model()
    g = nx.Graph()
    g.add_nodes_from(range(len(planes)))
    for i, j in itertools.combinations(range(len(planes)), 2):
        if all(e6_bilinear(x, y) == 0 for x in planes[i] for y in planes[j]):
            g.add_edge(i, j)
    return g
