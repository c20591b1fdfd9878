"""Tropicalized monomial maps applied to Bergman fans.

Points of tropical projective space are integer vectors modulo the all-ones
vector.  The canonical representative subtracts the minimum and divides by
the gcd, which also identifies positive multiples, so it is the right key
for rays.

Multiplicities.  For a source cone sigma the relevant lattice is
N_sigma = Z^n intersected with span(sigma, 1); the quotient by Z*1 is
handled by putting the all-ones vector into the generators on both sides.
The local index of sigma over its image tau is [N_tau : A N_sigma + Z*1],
computed as the product of the Smith invariants of the image generators.

* If the map keeps dimension (Burkhardt), the multiplicity of tau is the
  sum of the local indices of its sources divided by the degree of the
  map on the very affine variety.
* If the map drops one dimension on every top cone (Segre, Igusa and the
  E6/E7 maps), every source of tau contributes a whole fiber direction and
  the multiplicity is the common local index; a non-uniform index is
  reported as an error rather than averaged away.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import zlinalg
from .matroidfan import SimplicialFan, bergman_complex

# degree of the map from the source very affine variety onto its image, for
# the maps that keep dimension
MAP_DEGREE = {"burkhardt": 6}
# maps whose top cones may lose rays to the zero class
ZERO_WHITELIST = {"yoshida", "goepel"}


class DimensionCollapse(RuntimeError):
    pass


class UnlabeledRay(LookupError):
    pass


class RuleViolation(AssertionError):
    pass


class NonUniformIndex(RuntimeError):
    pass


def tp_normalize(v: Sequence[int]) -> Tuple[int, ...]:
    """Canonical representative modulo the all-ones vector and scaling."""
    v = [int(x) for x in v]
    if not v:
        return ()
    m = min(v)
    w = [x - m for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        return tuple(w)
    return tuple(x // g for x in w)


def tp_equal(u, v) -> bool:
    """Equality in tropical projective space (difference is constant)."""
    d = np.asarray(u) - np.asarray(v)
    return bool(np.all(d == d.flat[0])) if d.size else True


def is_zero_class(v: Sequence[int]) -> bool:
    """True for constant vectors, the origin of tropical projective space."""
    return len(set(int(x) for x in v)) <= 1


def _with_ones(rows: List[Sequence[int]], n: int) -> List[List[int]]:
    return [list(map(int, r)) for r in rows] + [[1] * n]


def saturated_basis(rays: List[Sequence[int]], n: int) -> np.ndarray:
    """Basis of Z^n intersected with span(rays, 1)."""
    gens = _with_ones(rays, n)
    d, w = zlinalg.smith(gens)
    if all(x == 1 for x in d):
        return np.array(gens, dtype=object)
    return w[: len(d)]


def local_index(A: np.ndarray, source_basis: np.ndarray) -> int:
    """[N_tau : A N_sigma + Z*1] where tau is the image span."""
    img = source_basis.dot(A.T.astype(object))
    gens = [list(r) for r in img] + [[1] * A.shape[0]]
    return zlinalg.lattice_index(gens)


@dataclass
class PushedFan:
    name: str
    source: SimplicialFan
    A: np.ndarray
    image: SimplicialFan
    ray_map: List[int | None]
    covering: Dict[Tuple[int, ...], List[Tuple[Tuple[int, ...], int]]]
    drop: int  # dimension lost on top cones
    collapsed: int = 0  # top source cones whose image is not top-dimensional
    cone_map: Dict[Tuple[int, ...], Tuple[int, ...]] = field(default_factory=dict)
    # dimension of the cone spanned by each image ray set (equals its size
    # except for the collapsing maps)
    cone_dims: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def covering_degree(self, cone) -> int:
        return len(self.covering.get(tuple(cone), []))

    def to_json(self) -> str:
        import json

        base = json.loads(self.image.to_json())
        index = {c: i for i, c in enumerate(self.image.maximal)}
        base["covering"] = [
            {"image": index[c], "sources": [list(s) for s, _ in srcs],
             "index": [int(i) for _, i in srcs]}
            for c, srcs in self.covering.items() if c in index
        ]
        if self.name in ZERO_WHITELIST:
            # no reference values exist for these lattice indices
            base["multiplicityStatus"] = "unvalidated"
        return json.dumps(base)


def image_cone(ray_map, cone) -> Tuple[int, ...]:
    return tuple(sorted({ray_map[i] for i in cone if ray_map[i] is not None}))


def push_fan(F: SimplicialFan, A: np.ndarray, name: str = "", degree: int | None = None,
             multiplicities: bool = True) -> PushedFan:
    A = np.asarray(A, dtype=np.int64)
    n_out = A.shape[0]
    # rays
    img_rays: List[Tuple[int, ...]] = []
    index: Dict[Tuple[int, ...], int] = {}
    ray_map: List[int | None] = []
    for r in F.rays:
        v = tp_normalize(A.dot(np.array(r, dtype=np.int64)))
        if is_zero_class(v):
            ray_map.append(None)
            continue
        if v not in index:
            index[v] = len(img_rays)
            img_rays.append(v)
        ray_map.append(index[v])

    # cones: images of all source faces
    faces: Dict[int, set] = defaultdict(set)
    cone_map: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    for k, cones in F.faces.items():
        for c in cones:
            t = image_cone(ray_map, c)
            cone_map[c] = t
            if t:
                faces[len(t)].add(t)
    # every distinct image cone must be simplicial; for the maps whose
    # source families partly collapse this is recorded instead of raised
    strict = name not in ZERO_WHITELIST
    dims: Dict[Tuple[int, ...], int] = {}
    for k, cones in faces.items():
        for t in cones:
            d = zlinalg.rank(_with_ones([img_rays[i] for i in t], n_out)) - 1
            dims[t] = d
            if strict and d != k:
                raise DimensionCollapse(f"image cone {t} is not simplicial")
    top = max(dims.values())
    src_top = F.dim
    drop = src_top - top
    collapsed = sum(1 for c in F.maximal if dims.get(cone_map[c], 0) < top)
    if collapsed and strict:
        raise DimensionCollapse(f"{collapsed} top cones of the source lose dimension under {name}")

    # covering report: sources of matching codimension
    covering: Dict[Tuple[int, ...], List] = defaultdict(list)
    for k, cones in F.faces.items():
        for c in cones:
            t = cone_map[c]
            if t and dims[t] + drop == k:
                covering[t].append((c, 1))

    image = SimplicialFan(img_rays, {k: sorted(v) for k, v in sorted(faces.items())})
    pf = PushedFan(name, F, A, image, ray_map, dict(covering), drop, collapsed, cone_map, dims)
    if multiplicities:
        compute_multiplicities(pf, degree if degree is not None else MAP_DEGREE.get(name, 1))
    return pf


def compute_multiplicities(pf: PushedFan, degree: int = 1) -> None:
    F = pf.source
    n_in = len(F.rays[0])
    top = pf.image.dim
    mult: Dict[Tuple[int, ...], int] = {}
    for t in pf.image.maximal:
        entries = []
        for c, _ in pf.covering.get(t, []):
            basis = saturated_basis([F.rays[i] for i in c], n_in)
            entries.append((c, local_index(pf.A, basis)))
        pf.covering[t] = entries
        idx = [i * F.multiplicity(c) for c, i in entries]
        if pf.drop == 0:
            total = sum(idx)
            if total % degree:
                raise NonUniformIndex(f"cone {t}: index sum {total} not divisible by {degree}")
            mult[t] = total // degree
        else:
            if len(set(idx)) != 1:
                raise NonUniformIndex(f"cone {t}: local indices {idx}")
            mult[t] = idx[0]
    pf.image.multiplicities = mult
    assert all(len(t) == top for t in mult)


# ---------------------------------------------------------------------------
# balancing


def balancing_failures(fan: SimplicialFan) -> List[Tuple[int, ...]]:
    """Codimension-one cones where the weighted normals do not cancel."""
    n = len(fan.rays[0])
    top = fan.dim
    around: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = defaultdict(list)
    for t in fan.maximal:
        for ridge in itertools.combinations(t, top - 1):
            around[ridge].append(t)
    bad = []
    for ridge, cones in around.items():
        B = saturated_basis([fan.rays[i] for i in ridge], n)
        terms = []
        for t in cones:
            (extra,) = set(t) - set(ridge)
            v = list(fan.rays[extra])
            m = zlinalg.lattice_index([list(r) for r in B] + [v])
            terms.append((fan.multiplicity(t), m, v))
        L = 1
        for _, m, _ in terms:
            L = L * m // gcd(L, m)
        total = [0] * n
        for w, m, v in terms:
            f = w * (L // m)
            total = [a + f * b for a, b in zip(total, v)]
        if zlinalg.rank([list(r) for r in B] + [total]) != len(B):
            bad.append(ridge)
    return bad


# ---------------------------------------------------------------------------
# catalog pushes


@lru_cache(maxsize=None)
def pushed(name: str, multiplicities: bool = True) -> PushedFan:
    from .arrangements import MAP_SOURCE, exponent_matrix

    src = MAP_SOURCE[name]
    F = bergman_complex(src).fan()
    A = exponent_matrix(name).matrix
    return push_fan(F, A, name=name, multiplicities=multiplicities)


def type_counts(pf: PushedFan, ray_types: Dict[int, str]) -> Counter:
    out: Counter = Counter()
    for k, cones in pf.image.faces.items():
        for t in cones:
            out["".join(sorted(ray_types[i] for i in t))] += 1
    return out


def burkhardt_dictionaries():
    """Images of the lines (a) and of the plane pairs (b) under A."""
    from . import finitegeom
    from .arrangements import exponent_matrix

    A = exponent_matrix("burkhardt").matrix
    lines = finitegeom.enumerate_lines(3, 4)
    idx = {v: i for i, v in enumerate(lines)}
    a_images = {}
    for i in range(len(lines)):
        e = np.zeros(40, dtype=np.int64)
        e[i] = 1
        a_images[tp_normalize(A.dot(e))] = i
    _, pairs = finitegeom.classify_planes(3)
    b_images = {}
    for k, (w, wp) in enumerate(pairs):
        e = np.zeros(40, dtype=np.int64)
        for v in w.lines():
            e[idx[v]] = 1
        b_images[tp_normalize(A.dot(e))] = k
    return a_images, b_images


def label_types(pf: PushedFan) -> Dict[int, str]:
    a_img, b_img = burkhardt_dictionaries()
    labels = {}
    for i, r in enumerate(pf.image.rays):
        if r in a_img:
            labels[i] = "a"
        elif r in b_img:
            labels[i] = "b"
        else:
            raise UnlabeledRay(f"image ray {i} matches neither a line nor a plane pair")
    return labels


def image_ray_permutations(pf: PushedFan, plane_perms: Sequence[Sequence[int]]):
    """Permutations of the image rays induced by coordinate permutations."""
    index = {r: i for i, r in enumerate(pf.image.rays)}
    out = []
    for p in plane_perms:
        perm = []
        for r in pf.image.rays:
            v = [0] * len(r)
            for i, x in enumerate(r):
                v[p[i]] = x
            perm.append(index[tuple(v)])
        out.append(tuple(perm))
    return out


def burkhardt_orbit_table(pf: PushedFan) -> Dict[str, List[int]]:
    """PSp4(F3) orbit sizes of image cones, keyed by cone type."""
    from .finitegeom import PermGroup, burkhardt_plane_action, orbits

    G = burkhardt_plane_action()
    gens = image_ray_permutations(pf, G.generators)
    H = PermGroup(len(pf.image.rays), gens)
    labels = label_types(pf)
    table: Dict[str, List[int]] = {}
    for k, cones in pf.image.faces.items():
        for orb in orbits(H, cones):
            t = "".join(sorted(labels[i] for i in next(iter(orb))))
            table.setdefault(t, []).append(len(orb))
    return table


def g32_source_classes(nc=None) -> Dict[str, int]:
    """Classes of Bergman cones of G32 named by flat ranks (a, b, a-umlaut)."""
    if nc is None:
        nc = bergman_complex("G32")
    name = {1: "a", 2: "b", 3: "ä"}
    out: Counter = Counter()
    for k, cones in nc.faces.items():
        for c in cones:
            flats = [nc.building[i] for i in c]
            key = "".join(name[f.rank] for f in sorted(flats, key=lambda f: f.rank))
            if k == 2 and key == "ab":
                a, b = sorted(flats, key=lambda f: f.rank)
                if not a.elements <= b.elements:
                    key = "ab⊥"
            out[key] += 1
    return dict(out)


# ---------------------------------------------------------------------------
# identification rules


def identification_checks(name: str) -> Dict[str, object]:
    from .arrangements import exponent_matrix

    if name in ("segre", "igusa"):
        return _check_segre_igusa(name, exponent_matrix(name).matrix)
    if name == "burkhardt":
        return _check_burkhardt(exponent_matrix(name).matrix)
    if name == "yoshida":
        return yoshida_report()
    if name in ("goepel", "goepel-rays"):
        return goepel_report()
    raise KeyError(name)


def _check_segre_igusa(name, A):
    n = 6
    images = {}
    pairs = list(itertools.combinations(range(1, 7), 2))
    for size in range(2, 6):
        for sigma in itertools.combinations(range(1, 7), size):
            e = np.array([1 if set(p) <= set(sigma) else 0 for p in pairs], dtype=np.int64)
            images[sigma] = tp_normalize(A.dot(e))
    for sigma, v in images.items():
        comp = tuple(i for i in range(1, n + 1) if i not in sigma)
        if len(comp) == 1:
            if not is_zero_class(v):
                raise RuleViolation(f"{name}: E_{sigma} should vanish, got {v}")
            continue
        if images[comp] != v:
            raise RuleViolation(f"{name}: E_{sigma} and E_{comp} differ: {v} vs {images[comp]}")
    distinct = {v for v in images.values() if not is_zero_class(v)}
    return {"rays": len(images), "distinct_images": len(distinct)}


def _check_burkhardt(A):
    from . import finitegeom

    lines = finitegeom.enumerate_lines(3, 4)
    idx = {v: i for i, v in enumerate(lines)}
    doubled = 0
    for i, v in enumerate(lines):
        hyper = [j for j, u in enumerate(lines) if j != i and finitegeom.symplectic_form(u, v, 3) == 0]
        e = np.zeros(40, dtype=np.int64)
        e[hyper] = 1
        e_a = np.zeros(40, dtype=np.int64)
        e_a[i] = 1
        if not tp_equal(A.dot(e), 2 * A.dot(e_a)):
            raise RuleViolation(f"doubling fails for line {v}")
        doubled += 1
    _, pairs = finitegeom.classify_planes(3)
    for w, wp in pairs:
        e1 = np.zeros(40, dtype=np.int64)
        e2 = np.zeros(40, dtype=np.int64)
        e1[[idx[v] for v in w.lines()]] = 1
        e2[[idx[v] for v in wp.lines()]] = 1
        if not tp_equal(A.dot(e1), A.dot(e2)):
            raise RuleViolation(f"plane pair {w.basis} / {wp.basis} images differ")
    return {"doubling": doubled, "plane_pairs": len(pairs)}


def doubling_vector_check() -> bool:
    """The displayed instance: A(sum of 12 unit vectors) = 2 A e_0012."""
    from .arrangements import exponent_matrix
    from .finitegeom import enumerate_lines, line_label

    A = exponent_matrix("burkhardt").matrix
    labels = [line_label(v) for v in enumerate_lines(3, 4)]
    idx = {l: i for i, l in enumerate(labels)}
    twelve = ["0001", "0010", "0011", "1100", "1101", "1102", "1110", "1111",
              "1112", "1120", "1121", "1122"]
    e = np.zeros(40, dtype=np.int64)
    for u in twelve:
        e[idx["u" + u]] = 1
    f = np.zeros(40, dtype=np.int64)
    f[idx["u0012"]] = 1
    return tp_equal(A.dot(e), 2 * A.dot(f))


# ---------------------------------------------------------------------------
# E6: Yoshida images and the Naruki complex

E6_FAMILY = {  # (rank, number of forms) -> row of the flats table
    (1, 1): 1, (2, 3): 2, (2, 2): 3, (3, 6): 4, (3, 4): 5, (3, 3): 6,
    (4, 12): 7, (4, 10): 8, (4, 7): 9, (4, 6): 10, (4, 5): 11,
    (5, 20): 12, (5, 15): 13, (5, 11): 14, (5, 7): 15,
}


def e6_family(flat) -> int:
    return E6_FAMILY[(flat.rank, len(flat.elements))]


def yoshida_report(pf: PushedFan | None = None) -> Dict[str, object]:
    if pf is None:
        pf = pushed("yoshida", multiplicities=False)
    nc = bergman_complex("E6")
    fam_images: Dict[int, set] = defaultdict(set)
    for i, f in enumerate(nc.building):
        j = pf.ray_map[i]
        fam_images[e6_family(f)].add(j)
    classes = {fam: (None if imgs == {None} else len(imgs)) for fam, imgs in fam_images.items()}
    a_set = fam_images[1]
    if fam_images[8] != a_set or fam_images[13] != a_set:
        raise RuleViolation("families 1, 8 and 13 should share their images")
    for fam in (7, 12):
        if fam_images[fam] != {None}:
            raise RuleViolation(f"family {fam} should map to the zero class")
    c_set = fam_images[4]
    # each class-270 ray is the sum of two class-36 rays spanning a cone
    edges = set(pf.image.faces.get(2, []))
    rays = pf.image.rays
    a_list = sorted(a_set)
    decomp = {}
    for c in c_set:
        target = np.array(rays[c])
        found = []
        for x, y in itertools.combinations(a_list, 2):
            s = tp_normalize(np.array(rays[x]) + np.array(rays[y]))
            if s == tuple(target) and tuple(sorted((x, y))) in edges:
                found.append((x, y))
        if len(found) != 1:
            raise RuleViolation(f"class-270 ray {c} has {len(found)} decompositions")
        decomp[c] = found[0]
    return {
        "class_sizes": {"a": len(a_set), "b": len(fam_images[2]), "c": len(c_set)},
        "family_images": classes,
        "distinct_rays": len(pf.image.rays),
        "decomposition": decomp,
    }


def naruki_complex(pf: PushedFan | None = None) -> Dict[str, object]:
    """Coarsen the Yoshida image fan by erasing the class-270 rays.

    Every class-270 ray c is the sum a1 + a2 of two class-36 rays spanning an
    edge; replacing c by {a1, a2} in every image cone and closing under
    faces gives the coarser simplicial complex.
    """
    if pf is None:
        pf = pushed("yoshida", multiplicities=False)
    rep = yoshida_report(pf)
    decomp = rep["decomposition"]
    nc = bergman_complex("E6")
    a_set = {pf.ray_map[i] for i, f in enumerate(nc.building) if e6_family(f) == 1}
    b_set = {pf.ray_map[i] for i, f in enumerate(nc.building) if e6_family(f) == 2}
    coarse: set = set()
    for k, cones in pf.image.faces.items():
        for t in cones:
            s = set()
            for i in t:
                s.update(decomp[i] if i in decomp else (i,))
            coarse.add(tuple(sorted(s)))
    closed: set = set()
    for t in coarse:
        for k in range(1, len(t) + 1):
            closed.update(itertools.combinations(t, k))
    rays = pf.image.rays
    n = len(rays[0])
    for t in closed:
        if zlinalg.rank(_with_ones([rays[i] for i in t], n)) != len(t) + 1:
            raise DimensionCollapse(f"coarse cone {t} is not simplicial")
    lab = {i: "a" for i in a_set}
    lab.update({i: "b" for i in b_set})
    types = Counter("".join(sorted(lab[i] for i in t)) for t in closed)
    by_dim = Counter(len(t) for t in closed)
    return {
        "types": dict(types),
        "f_vector": tuple(by_dim[k] for k in range(1, max(by_dim) + 1)),
        "refinement_rays": len(decomp),
        "cones": closed,
    }


# ---------------------------------------------------------------------------
# E7: Goepel images of the irreducible flats (rays only)


def goepel_report() -> Dict[str, object]:
    from .arrangements import exponent_matrix
    from .matroidfan import matroid

    M = matroid("E7")
    _, irr = M.count_irreducible_streaming()
    A = exponent_matrix("goepel").matrix
    n = M.n
    V = np.zeros((len(irr), n), dtype=np.int64)
    for i, f in enumerate(irr):
        V[i, list(f.elements)] = 1
    img = V.dot(A.T)
    img = img - img.min(axis=1, keepdims=True)
    g = np.gcd.reduce(img, axis=1)
    g = np.where(g == 0, 1, g)
    img = img // g[:, None]
    zero = ~np.any(img, axis=1)
    uniq, inverse = np.unique(img[~zero], axis=0, return_inverse=True)
    # classes of distinct image vectors by their sorted entries
    sig = [tuple(sorted(r.tolist())) for r in uniq]
    cls = Counter(sig)
    by_sig: Dict[tuple, List[int]] = defaultdict(list)
    for i, s in enumerate(sig):
        by_sig[s].append(i)
    out = {
        "irreducible_flats": len(irr),
        "zero_rays": int(zero.sum()),
        "class_sizes": sorted(cls.values(), reverse=True),
        "distinct_rays": len(uniq),
    }
    out["rules"] = _goepel_rules(uniq, by_sig)
    return out


def _goepel_rules(uniq: np.ndarray, by_sig) -> Dict[str, int]:
    """Check the three decomposition rules on the image classes.

    Classes are identified by size: 63 (F1), 336 (F2), 36 (F24), 2016 (F8),
    315 (F9), 1008 (F16).
    """
    size_to_sig = {len(v): s for s, v in by_sig.items()}
    need = [63, 336, 36, 2016, 315, 1008]
    for s in need:
        if s not in size_to_sig:
            raise RuleViolation(f"no image class of size {s}")
    cls = {s: uniq[by_sig[size_to_sig[s]]] for s in need}
    F1, F2, F24, F8, F9, F16 = (cls[s] for s in need)

    def norm(m):
        m = m - m.min(axis=-1, keepdims=True)
        g = np.gcd.reduce(m, axis=-1)
        g = np.where(g == 0, 1, g)
        return m // np.expand_dims(g, -1)

    def keyset(m):
        return {r.tobytes(): i for i, r in enumerate(m)}

    res = {}
    # F8 = F2 + F24, unique
    sums = norm(F2[:, None, :] + F24[None, :, :]).reshape(-1, F2.shape[1])
    res["F8=F2+F24"] = _unique_hits(sums, F8)
    # F9 = F1 + F1 + F1, unique (unordered triples)
    hits = Counter()
    k = F1.shape[0]
    for i in range(k):
        for j in range(i + 1, k):
            pair = F1[i] + F1[j]
            s = norm(pair[None, :] + F1[j + 1:])
            for r in s:
                hits[r.tobytes()] += 1
    res["F9=F1+F1+F1"] = _check_hits(hits, F9)
    # F16 = a F1 + b F24 with a, b > 0, unique pair
    res["F16=F1+F24"] = _positive_combination(F1, F24, F16)
    return res


def _unique_hits(sums: np.ndarray, targets: np.ndarray) -> int:
    hits = Counter(r.tobytes() for r in sums)
    return _check_hits(hits, targets)


def _check_hits(hits: Counter, targets: np.ndarray) -> int:
    for t in targets:
        c = hits.get(t.tobytes(), 0)
        if c != 1:
            raise RuleViolation(f"target {t.tolist()} has {c} decompositions")
    return len(targets)


def _positive_combination(P: np.ndarray, Q: np.ndarray, targets: np.ndarray) -> int:
    """Each target is uniquely lambda p + mu q (mod 1, lambda, mu > 0).

    For a pair (p, q) pick three coordinates where (p, q, 1) is invertible,
    solve t = lambda p + mu q + c 1 there by Cramer's rule in integers and
    keep the targets for which the solution holds on every coordinate.
    """
    n = P.shape[1]
    ones = np.ones(n, dtype=np.int64)
    T = np.asarray(targets, dtype=np.int64)
    found = np.zeros(len(T), dtype=np.int64)
    for p in P:
        for q in Q:
            M = np.stack([p, q, ones])
            cols = _independent_columns(M)
            if cols is None:
                continue
            B = M[:, cols].T  # 3x3, rows are coordinates
            D = _det3_int(B)
            rhs = T[:, cols]
            nums = []
            for k in range(3):
                Bk = np.repeat(B[None, :, :], len(T), axis=0)
                Bk[:, :, k] = rhs
                nums.append(_det3_int(Bk))
            lam, mu, c = nums
            ok = np.all(D * T == lam[:, None] * p + mu[:, None] * q + c[:, None] * ones, axis=1)
            pos = (lam * D > 0) & (mu * D > 0)
            found += ok & pos
    bad = np.nonzero(found != 1)[0]
    if len(bad):
        t = T[bad[0]]
        raise RuleViolation(f"target {t.tolist()} has {found[bad[0]]} positive decompositions")
    return len(T)


def _independent_columns(M: np.ndarray):
    for cols in itertools.combinations(range(M.shape[1]), 3):
        if _det3_int(M[:, list(cols)].T) != 0:
            return list(cols)
    return None


def _det3_int(B):
    """Determinant of 3x3 integer matrices (last two axes), exact in int64."""
    return (B[..., 0, 0] * (B[..., 1, 1] * B[..., 2, 2] - B[..., 1, 2] * B[..., 2, 1])
            - B[..., 0, 1] * (B[..., 1, 0] * B[..., 2, 2] - B[..., 1, 2] * B[..., 2, 0])
            + B[..., 0, 2] * (B[..., 1, 0] * B[..., 2, 1] - B[..., 1, 1] * B[..., 2, 0]))


def b_ray_supports() -> List[frozenset]:
    """Supports of the 45 plane-pair images, each normalized to a 0/1 vector."""
    _, b_images = burkhardt_dictionaries()
    return [frozenset(i for i, x in enumerate(v) if x) for v in b_images]


def plane_pair_support() -> frozenset:
    """Support of the image of the plane spanned by e_0001 and e_0100 (lines 0001, 0100, 0101, 0102)."""
    from .arrangements import exponent_matrix
    from .finitegeom import enumerate_lines, line_label

    A = exponent_matrix("burkhardt").matrix
    labels = [line_label(v) for v in enumerate_lines(3, 4)]
    e = np.zeros(40, dtype=np.int64)
    for u in ("u0001", "u0100", "u0101", "u0102"):
        e[labels.index(u)] = 1
    f = np.zeros(40, dtype=np.int64)
    for u in ("u0010", "u1000", "u1010", "u1020"):
        f[labels.index(u)] = 1
    v, w = tp_normalize(A.dot(e)), tp_normalize(A.dot(f))
    if v != w:
        raise RuleViolation("the displayed plane pair has different images")
    return frozenset(i for i, x in enumerate(v) if x)


# ---------------------------------------------------------------------------
# valuations of points of the Burkhardt quartic


def locate_in_image(pf: PushedFan, w: Sequence[int]):
    """Smallest image cone containing w modulo the all-ones vector.

    Returns (cone, coefficients) with w = sum coeff_i ray_i + c (1,...,1)
    and all coefficients positive, or None when w lies in no cone.
    """
    n = len(w)
    if is_zero_class(w):
        return (), []
    for k in sorted(pf.image.faces):
        for cone in pf.image.faces[k]:
            basis = [list(pf.image.rays[i]) for i in cone] + [[1] * n]
            sol = zlinalg.rational_solve(basis, list(w))
            if sol is not None and all(x > 0 for x in sol[:-1]):
                return cone, sol[:-1]
    return None


def _flat_points(rank: int = 3):
    """One kernel vector over Q(omega) for every rank-3 flat of G32."""
    from .arrangements import arrangement
    from .identities import cyc_kernel_vector
    from .matroidfan import matroid

    arr = arrangement("G32")
    pts = []
    for f in matroid("G32").flats_of_rank(rank):
        rows = [arr.forms[i] for i in sorted(f.elements)]
        cols = [[r[j] for r in rows] for j in range(arr.dim)]
        k = cyc_kernel_vector(cols)
        if k is not None:
            pts.append(k)
    return pts


def burkhardt_valuation_sample(rng, count: int = 50):
    """Random c = p1 + t^a p2 + t^b p3 + t^c p4 built from special points.

    Each p is the common zero of a rank-3 flat, so the forms vanishing on it
    acquire positive valuation.  Yields (val(u), val(m)) for each sample.
    """
    from .arrangements import arrangement, evaluate, exponent_matrix, monomial_evaluate
    from .exactnum import ValScalar, valuation

    pts = _flat_points()
    arr = arrangement("G32")
    E = exponent_matrix("burkhardt")
    out = []
    while len(out) < count:
        chosen = rng.sample(pts, 4)
        exps = sorted(rng.sample(range(1, 7), 3))
        c = [ValScalar.const(x) for x in chosen[0]]
        for p, e in zip(chosen[1:], exps):
            c = [a + ValScalar.monomial(x, e) for a, x in zip(c, p)]
        u = evaluate(arr, c)
        if any(x.is_zero() for x in u):
            continue
        m = monomial_evaluate(E, u)
        out.append(([valuation(x) for x in u], [valuation(x) for x in m]))
    return out


def conjecture_side_report(count: int = 50, seed: int = 0) -> Dict[str, object]:
    """Check val(m) lands in trop(B) and record the observed cone types."""
    import random

    from .matroidfan import nested_set_of_point

    rng = random.Random(seed)
    pf = pushed("burkhardt")
    labels = label_types(pf)
    nc = bergman_complex("G32")
    misses = mismatched = 0
    types: Counter = Counter()
    for vu, vm in burkhardt_valuation_sample(rng, count):
        hit = locate_in_image(pf, vm)
        if hit is None:
            misses += 1
            continue
        cone, _ = hit
        types["".join(sorted(labels[i] for i in cone)) or "origin"] += 1
        src = nested_set_of_point(nc, vu)
        if src is None or pf.cone_map.get(src[0], ()) != tuple(cone):
            mismatched += 1
    return {"samples": count, "misses": misses, "mismatched": mismatched, "types": dict(types)}
