"""Linear matroids of the catalog arrangements and their Bergman fans.

A vector over Q(zeta_n) is replaced by the Q-frame {v, zeta v, ...} of
phi(n) rational vectors.  The Q(zeta_n)-span of a set of vectors is the
Q-span of their frames, so every matroid question reduces to exact integer
linear algebra.  A flat is stored with an integer annihilator of its span;
the covering flats of F are then read off by grouping the remaining
elements by the column span of ``N_F @ frame(x)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from . import zlinalg
from .exactnum import PHI, CycScalar


class TooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Flat:
    elements: frozenset
    rank: int
    irreducible: bool
    mask: int

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements))


def _mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def _elements(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _realify(vec: Sequence, order: int) -> np.ndarray:
    """phi x D integer frame of a vector over Q(zeta_order)."""
    phi = PHI[order]
    rows = []
    zeta = CycScalar.zeta(order)
    power = CycScalar((1,), order)
    for _ in range(phi):
        row = []
        for c in vec:
            c = (CycScalar.coerce(c) * power).embed(order)
            row.extend(c.coeffs)
        rows.append(row)
        power = power * zeta
    # clear denominators row by row
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return zlinalg.primitive_rows(np.array(out, dtype=np.int64))


class LinearMatroid:
    """Matroid of a finite list of vectors over Q, Q(omega) or Q(zeta_5)."""

    def __init__(self, vectors: Sequence[Sequence], order: int = 1, labels: Sequence[str] | None = None):
        self.order = order
        self.phi = PHI[order]
        self.n = len(vectors)
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        frames = [_realify(v, order) for v in vectors]
        self.D = frames[0].shape[1]
        self.frames = np.stack(frames)  # n x phi x D
        self.X = self.frames.reshape(self.n * self.phi, self.D).T.copy()  # D x (n phi)
        self._closure_memo: Dict[int, int] = {}
        self._levels: List[List[Flat]] | None = None
        self._flat_by_mask: Dict[int, Flat] = {}
        self._conn_memo: Dict[int, bool] = {}
        self.full_rank = self.rank(range(self.n))

    def __len__(self):
        return self.n

    # -- basic oracles ------------------------------------------------------
    def _frame_rows(self, elems: Iterable[int]) -> np.ndarray:
        elems = list(elems)
        if not elems:
            return np.zeros((0, self.D), dtype=np.int64)
        return self.frames[elems].reshape(-1, self.D)

    def rank(self, S: Iterable[int]) -> int:
        rows = self._frame_rows(S)
        if rows.shape[0] == 0:
            return 0
        return zlinalg.rank(rows) // self.phi

    def annihilator(self, S: Iterable[int]) -> np.ndarray:
        rows = self._frame_rows(S)
        if rows.shape[0] == 0:
            return np.eye(self.D, dtype=np.int64)
        return zlinalg.nullspace(rows)

    def _members(self, N: np.ndarray) -> int:
        """Bitmask of the elements whose frame is killed by N."""
        if N.shape[0] == 0:
            return (1 << self.n) - 1
        R = N.dot(self.X) if N.dtype != object else N.dot(self.X.astype(object))
        R = R.reshape(N.shape[0], self.n, self.phi)
        zero = ~np.any(R != 0, axis=(0, 2))
        return _mask(np.nonzero(zero)[0].tolist())

    def closure_mask(self, mask: int) -> int:
        got = self._closure_memo.get(mask)
        if got is None:
            got = self._members(self.annihilator(sorted(_elements(mask))))
            self._closure_memo[mask] = got
        return got

    def closure(self, S: Iterable[int]) -> frozenset:
        return _elements(self.closure_mask(_mask(S)))

    # -- connectivity -------------------------------------------------------
    def basis_of(self, S: Iterable[int]) -> List[int]:
        basis: List[int] = []
        N = np.eye(self.D, dtype=np.int64)
        for e in sorted(S):
            block = N.dot(self.frames[e].T)
            if np.any(block):
                basis.append(e)
                N = self.annihilator(basis)
        return basis

    def components(self, S: Iterable[int], basis: Sequence[int] | None = None) -> List[frozenset]:
        """Connected components of the restriction to S.

        Computed from the fundamental circuits of the elements outside one
        basis of S; two elements share a component exactly when they are
        linked by a chain of such circuits.
        """
        S = sorted(S)
        if basis is None:
            basis = self.basis_of(S)
        parent = {e: e for e in S}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rest = [e for e in S if e not in set(basis)]
        if rest and basis:
            B = self.frames[list(basis)].reshape(-1, self.D).T  # D x (phi r)
            Tcols = self.frames[rest][:, 0, :].T  # D x s
            coeff = zlinalg.solve_support(B, Tcols)  # (phi r) x s
            coeff = coeff.reshape(len(basis), self.phi, len(rest))
            support = np.any(coeff != 0, axis=1)  # r x s
            for j, e in enumerate(rest):
                for i in np.nonzero(support[:, j])[0]:
                    a, b = find(e), find(basis[int(i)])
                    if a != b:
                        parent[a] = b
        groups: Dict[int, List[int]] = {}
        for e in S:
            groups.setdefault(find(e), []).append(e)
        return sorted((frozenset(g) for g in groups.values()), key=lambda s: min(s))

    def is_connected_mask(self, mask: int) -> bool:
        got = self._conn_memo.get(mask)
        if got is None:
            flat = self._flat_by_mask.get(mask)
            if flat is not None:
                got = flat.irreducible
            else:
                got = len(self.components(_elements(mask))) == 1
            self._conn_memo[mask] = got
        return got

    # -- flats ----------------------------------------------------------------
    def _span_key(self, block: np.ndarray):
        """Canonical key of the column span of a k x phi integer block."""
        if self.phi == 1:
            v = block[:, 0]
            g = int(np.gcd.reduce(v))
            v = v // g
            nz = np.flatnonzero(v)
            if v[nz[0]] < 0:
                v = -v
            return tuple(int(x) for x in v)
        red, piv = zlinalg.echelon(block.T)
        red = zlinalg.primitive_rows(red[: len(piv)])
        rows = []
        for r, p in zip(red, piv):
            r = -r if r[p] < 0 else r
            rows.append(tuple(int(x) for x in r))
        return tuple(rows)

    def _covers(self, mask: int, N: np.ndarray):
        """Covering flats of the flat with annihilator N, as (mask, element) pairs."""
        R = N.dot(self.X).reshape(N.shape[0], self.n, self.phi)
        groups: Dict[tuple, List[int]] = {}
        if self.phi == 1:
            cols = R[:, :, 0]  # k x n
            nonzero = np.any(cols != 0, axis=0)
            g = np.gcd.reduce(cols, axis=0)
            g = np.where(g == 0, 1, g)
            norm = cols // g
            # sign: make the first nonzero entry positive
            first = np.argmax(norm != 0, axis=0)
            sign = np.sign(norm[first, np.arange(self.n)])
            sign = np.where(sign == 0, 1, sign)
            norm = norm * sign
            for e in np.nonzero(nonzero)[0]:
                groups.setdefault(norm[:, e].tobytes(), []).append(int(e))
        else:
            for e in range(self.n):
                if mask >> e & 1:
                    continue
                block = R[:, e, :]
                if np.any(block):
                    groups.setdefault(self._span_key(block), []).append(e)
        for elems in groups.values():
            yield mask | _mask(elems), elems[0], R[:, elems[0], :]

    def iter_flat_levels(self) -> Iterator[List[Flat]]:
        """Flats rank by rank; only two levels of annihilators are held."""
        empty = Flat(frozenset(), 0, False, 0)
        level = {0: (empty, np.eye(self.D, dtype=np.int64), [])}
        yield [empty]
        for r in range(1, self.full_rank + 1):
            nxt: Dict[int, tuple] = {}
            for mask, (flat, N, basis) in level.items():
                for gmask, e, block in self._covers(mask, N):
                    if gmask in nxt:
                        continue
                    K = zlinalg.nullspace(block.T)  # rows c with c @ block = 0
                    NG = K.dot(N) if K.dtype != object and N.dtype != object else \
                        K.astype(object).dot(N.astype(object))
                    NG = zlinalg.primitive_rows(NG)
                    if NG.dtype == object and NG.size and int(np.abs(NG).max()) < zlinalg._LIMIT:
                        NG = NG.astype(np.int64)
                    gb = basis + [e]
                    elems = _elements(gmask)
                    irr = len(elems) == 1 or len(self.components(elems, gb)) == 1
                    nxt[gmask] = (Flat(elems, r, irr, gmask), NG, gb)
            flats = sorted((v[0] for v in nxt.values()), key=lambda f: f.sorted())
            yield flats
            level = nxt

    def flats_by_rank(self) -> List[List[Flat]]:
        if self._levels is None:
            self._levels = list(self.iter_flat_levels())
            for lev in self._levels:
                for f in lev:
                    self._flat_by_mask[f.mask] = f
                    self._closure_memo.setdefault(f.mask, f.mask)
        return self._levels

    def flats_of_rank(self, r: int) -> List[Flat]:
        return self.flats_by_rank()[r]

    def irreducible_flats(self, proper: bool = True) -> List[Flat]:
        out = []
        top = self.full_rank - 1 if proper else self.full_rank
        for lev in self.flats_by_rank()[1: top + 1]:
            out.extend(f for f in lev if f.irreducible)
        return out

    def count_irreducible_streaming(self) -> Tuple[List[int], List[Flat]]:
        """Irreducible proper flats without keeping the whole lattice."""
        counts, keep = [], []
        for lev in self.iter_flat_levels():
            r = lev[0].rank
            if r == 0 or r == self.full_rank:
                continue
            irr = [f for f in lev if f.irreducible]
            counts.append(len(irr))
            keep.extend(irr)
        return counts, keep


def matroid_of(arr) -> LinearMatroid:
    return _matroid_cached(arr.name)


@lru_cache(maxsize=None)
def _matroid_cached(name: str) -> LinearMatroid:
    from .arrangements import arrangement

    arr = arrangement(name)
    return LinearMatroid(arr.forms, arr.order, arr.labels)


def matroid(name: str) -> LinearMatroid:
    from .arrangements import arrangement

    return _matroid_cached(arrangement(name).name)


# ---------------------------------------------------------------------------
# Moebius number


def moebius_number(M: LinearMatroid) -> int:
    """|mu(0, 1)| in the lattice of flats."""
    levels = M.flats_by_rank()
    mu: Dict[int, int] = {0: 1}
    done: List[Tuple[int, int]] = [(0, 1)]
    for lev in levels[1:]:
        new = []
        for f in lev:
            s = 0
            for m, v in done:
                if m & f.mask == m:
                    s += v
            mu[f.mask] = -s
            new.append((f.mask, -s))
        done.extend(new)
    top = levels[-1][0].mask
    return abs(mu[top])


# ---------------------------------------------------------------------------
# fans


@dataclass
class SimplicialFan:
    """Rays (integer vectors) and simplicial cones given by ray-index sets.

    ``faces[k]`` lists all cones with k rays, each a sorted tuple.  The
    maximal cones are those of the largest size; ``multiplicities`` maps a
    maximal cone to its weight (default 1).
    """

    rays: List[Tuple[int, ...]]
    faces: Dict[int, List[Tuple[int, ...]]]
    multiplicities: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    ray_labels: List[object] | None = None

    @property
    def dim(self) -> int:
        return max(self.faces) if self.faces else 0

    @property
    def maximal(self) -> List[Tuple[int, ...]]:
        return self.faces.get(self.dim, [])

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.faces.get(k, [])) for k in range(1, self.dim + 1))

    def multiplicity(self, cone) -> int:
        return self.multiplicities.get(tuple(cone), 1)

    def to_json(self) -> str:
        cones = self.maximal
        return json.dumps({
            "rays": [list(map(int, r)) for r in self.rays],
            "cones": [list(c) for c in cones],
            "multiplicities": [int(self.multiplicity(c)) for c in cones],
        })

    def f_vector_csv(self) -> str:
        fv = self.f_vector()
        return "dim,count\n" + "".join(f"{k},{c}\n" for k, c in enumerate(fv, start=1))

    def check_simplicial(self) -> bool:
        for k, cones in self.faces.items():
            for c in cones:
                if zlinalg.rank([self.rays[i] for i in c]) != k:
                    return False
        return True


@dataclass
class NestedComplex:
    matroid: LinearMatroid
    building: List[Flat]
    faces: Dict[int, List[Tuple[int, ...]]]

    def fan(self) -> SimplicialFan:
        n = self.matroid.n
        rays = []
        for f in self.building:
            v = [0] * n
            for e in f.elements:
                v[e] = 1
            rays.append(tuple(v))
        return SimplicialFan(rays, self.faces, {}, list(self.building))

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.faces[k]) for k in sorted(self.faces))


def nested_complex(M: LinearMatroid) -> NestedComplex:
    """All nested sets of irreducible proper flats.

    A set S is nested when no antichain of two or more members has an
    irreducible join.  The whole ground set counts as irreducible here (it is
    for every catalog arrangement), so antichains spanning everything are
    excluded, as they must be.
    """
    M.flats_by_rank()
    building = M.irreducible_flats(proper=True)
    building.sort(key=lambda f: (f.rank, f.sorted()))
    nb = len(building)
    masks = [f.mask for f in building]

    def comparable(i, j):
        a, b = masks[i], masks[j]
        return a & b == a or a & b == b

    faces: Dict[int, List[Tuple[int, ...]]] = {}
    join_memo: Dict[int, bool] = {}

    def join_irreducible(mask: int) -> bool:
        got = join_memo.get(mask)
        if got is None:
            got = M.is_connected_mask(M.closure_mask(mask))
            join_memo[mask] = got
        return got

    def can_add(current: Tuple[int, ...], j: int) -> bool:
        inc = [i for i in current if not comparable(i, j)]
        for i in inc:
            if masks[i] & masks[j]:
                return False
        # antichains among the incomparable members, together with j
        for size in range(1, len(inc) + 1):
            for sub in itertools.combinations(inc, size):
                if any(comparable(a, b) for a, b in itertools.combinations(sub, 2)):
                    continue
                u = masks[j]
                for i in sub:
                    u |= masks[i]
                if join_irreducible(u):
                    return False
        return True

    stack: List[Tuple[Tuple[int, ...], int]] = [((), 0)]
    while stack:
        current, start = stack.pop()
        for j in range(start, nb):
            if can_add(current, j):
                new = current + (j,)
                faces.setdefault(len(new), []).append(new)
                stack.append((new, j + 1))
    for k in faces:
        faces[k].sort()
    return NestedComplex(M, building, faces)


@lru_cache(maxsize=None)
def bergman_complex(name: str) -> NestedComplex:
    return nested_complex(matroid(name))


def bergman_fan(name: str) -> SimplicialFan:
    return bergman_complex(name).fan()


def nested_set_of_point(nc: NestedComplex, w: Sequence) -> Tuple[Tuple[int, ...], List] | None:
    """Locate w in the nested-set fan.

    Returns (nested set, coefficients) with w = c*1 + sum coeff_F e_F, or
    None if some upper level set of w is not a flat or the resulting family
    is not a face of the complex.
    """
    M = nc.matroid
    index = {f.mask: i for i, f in enumerate(nc.building)}
    values = sorted(set(w), reverse=True)
    chosen: Dict[int, object] = {}
    for k, v in enumerate(values[:-1]):
        level = _mask(i for i, x in enumerate(w) if x >= v)
        if M.closure_mask(level) != level:
            return None
        step = v - values[k + 1]
        for comp in M.components(_elements(level)):
            i = index.get(_mask(comp))
            if i is None:
                return None
            chosen[i] = chosen.get(i, 0) + step
    face = tuple(sorted(chosen))
    if face and face not in _face_set(nc):
        return None
    return face, [chosen[i] for i in face]


_FACE_SETS: Dict[int, set] = {}


def _face_set(nc: NestedComplex) -> set:
    key = id(nc)
    if key not in _FACE_SETS:
        _FACE_SETS[key] = {c for cones in nc.faces.values() for c in cones}
    return _FACE_SETS[key]


# ---------------------------------------------------------------------------
# circuit oracle


@lru_cache(maxsize=None)
def circuits(name: str) -> List[np.ndarray]:
    """All circuits of a catalog matroid with at most 40 elements.

    A circuit minus its largest element is independent, so every circuit is
    I + {e} with I independent, e > max(I), e in cl(I) and every basis
    element of I used in the fundamental circuit of e.
    """
    M = matroid(name)
    if M.n > 40:
        raise TooLarge("circuit enumeration is limited to 40 elements")
    out: Dict[int, List[Tuple[int, ...]]] = {}
    r = M.full_rank

    def grow(indep: Tuple[int, ...], N: np.ndarray):
        start = indep[-1] + 1 if indep else 0
        later = list(range(start, M.n))
        if not later:
            return
        R = N.dot(M.X).reshape(N.shape[0], M.n, M.phi)
        dependent = [e for e in later if not np.any(R[:, e, :])]
        if dependent and indep:
            B = M.frames[list(indep)].reshape(-1, M.D).T
            T = M.frames[dependent][:, 0, :].T
            coeff = zlinalg.solve_support(B, T).reshape(len(indep), M.phi, len(dependent))
            full = np.all(np.any(coeff != 0, axis=1), axis=0)
            for j in np.nonzero(full)[0]:
                c = indep + (dependent[int(j)],)
                out.setdefault(len(c), []).append(c)
        if len(indep) == r:
            return
        for e in later:
            if np.any(R[:, e, :]):
                new = indep + (e,)
                grow(new, M.annihilator(new))

    grow((), np.eye(M.D, dtype=np.int64))
    return [np.array(sorted(v), dtype=np.int64) for k, v in sorted(out.items())]


def circuit_membership(name: str, w: Sequence, circs: List[np.ndarray] | None = None) -> bool:
    """True iff the minimum of w over every circuit is attained twice."""
    if circs is None:
        circs = circuits(name)
    w = np.asarray(w, dtype=object)
    # exact comparison: scale rationals to integers
    den = 1
    for x in w:
        d = getattr(x, "denominator", 1)
        den = den * d // np.gcd(den, d)
    wi = np.array([int(x * den) for x in w], dtype=object)
    if max(abs(int(x)) for x in wi) < (1 << 62):
        wi = wi.astype(np.int64)
    for arr in circs:
        # column-wise: one gather per circuit position, no sorting
        cols = [wi[c] for c in _columns(arr)]
        low = cols[0]
        for col in cols[1:]:
            low = np.minimum(low, col)
        hits = sum((col == low).astype(np.int8) for col in cols)
        if np.any(hits < 2):
            return False
    return True


_COLUMNS: Dict[int, List[np.ndarray]] = {}


def _columns(arr: np.ndarray) -> List[np.ndarray]:
    key = id(arr)
    if key not in _COLUMNS:
        _COLUMNS[key] = [np.ascontiguousarray(arr[:, k]) for k in range(arr.shape[1])]
    return _COLUMNS[key]


def circuit_membership_batch(name: str, W, circs: List[np.ndarray] | None = None) -> np.ndarray:
    """Row-wise circuit_membership for an integer matrix of weight vectors."""
    if circs is None:
        circs = circuits(name)
    W = np.asarray(W, dtype=np.int64)
    lo, hi = W.min(initial=0), W.max(initial=0)
    dtype = np.int16 if -(1 << 15) < lo and hi < (1 << 15) else np.int64
    Wt = np.ascontiguousarray(W.T.astype(dtype))
    ok = np.ones(W.shape[0], dtype=bool)
    for arr in circs:
        cols = [Wt[c] for c in _columns(arr)]
        low = cols[0]
        for col in cols[1:]:
            low = np.minimum(low, col)
        hits = sum((col == low).astype(np.int8) for col in cols)
        ok &= np.all(hits >= 2, axis=0)
    return ok
