"""Metric trees on marked points, the level-2 curve correspondence, and the
genus-one warm-up.

Conventions.  Points live in a Laurent field over Q(omega).  For marked
points x_1..x_n the dissimilarity is nu_ij = -val(x_i - x_j).  A metric tree
reproduces it as ``2 nu_ij = sum of split weights separating i and j +
l_i + l_j``: nu is half the path length, and the leaf terms l_i absorb the
leaf shifts, so only split weights are meaningful.  With this normalization
the interior edge of a quartet is the maximum of the three expressions
nu_12 + nu_34 - nu_14 - nu_23 (and its two cyclic variants).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from .exactnum import INF, CycScalar, ValScalar, valuation
from .zlinalg import _solve_fraction


class CoincidentPoints(ValueError):
    pass


class NotTreelike(ValueError):
    pass


# ---------------------------------------------------------------------------
# splits


@dataclass(frozen=True, order=True)
class Split:
    """A bipartition of {1..n}; ``side`` is the part containing 1."""

    n: int
    side: Tuple[int, ...]

    @staticmethod
    def of(part: Sequence[int], n: int) -> "Split":
        part = set(part)
        if 1 not in part:
            part = set(range(1, n + 1)) - part
        if len(part) < 2 or n - len(part) < 2:
            raise ValueError(f"{sorted(part)} is not a split of {n} taxa")
        return Split(n, tuple(sorted(part)))

    @property
    def other(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if i not in self.side)

    @property
    def small(self) -> Tuple[int, ...]:
        """The smaller side (the side without 1 on ties)."""
        a, b = self.side, self.other
        return a if len(a) < len(b) else b

    def separates(self, i: int, j: int) -> bool:
        return (i in self.side) != (j in self.side)

    def compatible(self, other: "Split") -> bool:
        a, b = set(self.side), set(self.other)
        c, d = set(other.side), set(other.other)
        return not (a & c) or not (a & d) or not (b & c) or not (b & d)

    @property
    def shape(self) -> str:
        """'cherry' for 2|n-2 splits, 'middle' for 3|3 splits."""
        return "cherry" if min(len(self.side), len(self.other)) == 2 else "middle"

    def __str__(self):
        return "".join(map(str, self.side)) + "|" + "".join(map(str, self.other))


@lru_cache(maxsize=None)
def all_splits(n: int) -> Tuple[Split, ...]:
    out = set()
    for k in range(2, n - 1):
        for part in itertools.combinations(range(1, n + 1), k):
            out.add(Split.of(part, n))
    return tuple(sorted(out))


def treespace_complex(n: int) -> Tuple[Tuple[Split, ...], Dict[int, List[Tuple[int, ...]]]]:
    """Splits of {1..n} and all pairwise-compatible sets of size <= n-3."""
    if not 4 <= n <= 6:
        raise ValueError("tree space is tabulated for 4 <= n <= 6")
    splits = all_splits(n)
    ok = {(i, j) for i, j in itertools.combinations(range(len(splits)), 2)
          if splits[i].compatible(splits[j])}
    faces: Dict[int, List[Tuple[int, ...]]] = {1: [(i,) for i in range(len(splits))]}
    for k in range(2, n - 2):
        faces[k] = [f + (j,) for f in faces[k - 1] for j in range(f[-1] + 1, len(splits))
                    if all((i, j) in ok for i in f)]
    return splits, faces


# ---------------------------------------------------------------------------
# metric trees


@dataclass
class MetricTree:
    n: int
    weights: Dict[Split, Fraction]
    leaves: List[Fraction] = field(default_factory=list)

    @property
    def splits(self) -> List[Split]:
        return sorted(self.weights)

    def distance(self, i: int, j: int) -> Fraction:
        d = sum((w for s, w in self.weights.items() if s.separates(i, j)), Fraction(0))
        if self.leaves:
            d += self.leaves[i - 1] + self.leaves[j - 1]
        return d

    def nu(self) -> List[List[Fraction]]:
        return [[Fraction(0) if i == j else self.distance(i, j) / 2
                 for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def shapes(self) -> Dict[str, int]:
        out = {"cherry": 0, "middle": 0}
        for s in self.weights:
            out[s.shape] += 1
        return out

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "splits": [
            {"split": str(s), "weight": str(self.weights[s])} for s in self.splits]})

    def to_dot(self) -> str:
        """Graphviz rendering: one internal node per split region."""
        lines = ["graph tree {"]
        nodes, edges = _tree_graph(self)
        for a, b, w in edges:
            lines.append(f'  "{a}" -- "{b}" [len={w}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _tree_graph(tree: MetricTree):
    """Vertices and weighted edges of the tree (leaves named by taxa)."""
    import networkx as nx

    splits = tree.splits
    # internal vertices are the consistent orientations of all splits that
    # occur as nodes; build by successive refinement of the star tree
    g = nx.Graph()
    g.add_node("c")
    for i in range(1, tree.n + 1):
        g.add_edge("c", str(i), weight=0)
    counter = 0
    for s in splits:
        small = set(s.small)
        # find the vertex whose incident leaves/branches contain the small side
        for v in list(g.nodes):
            if v.isdigit():
                continue
            groups = []
            for u in g.neighbors(v):
                h = g.copy()
                h.remove_node(v)
                comp = nx.node_connected_component(h, u)
                groups.append((u, {int(x) for x in comp if x.isdigit()}))
            chosen = [u for u, leaves in groups if leaves <= small]
            covered = set().union(*[leaves for u, leaves in groups if leaves <= small]) if chosen else set()
            if covered == small and 1 < len(chosen) < len(groups):
                counter += 1
                new = f"v{counter}"
                for u in chosen:
                    w = g.edges[v, u]["weight"]
                    g.remove_edge(v, u)
                    g.add_edge(new, u, weight=w)
                g.add_edge(v, new, weight=tree.weights[s])
                break
    edges = [(a, b, d["weight"]) for a, b, d in g.edges(data=True)]
    return list(g.nodes), edges


def tree_from_nu(nu: Sequence[Sequence]) -> MetricTree:
    """Exact tree fit from the four-point condition.

    With D = 2 nu, the weight of an internal split A|B is the minimum over
    i, j in A and k, l in B of (max(D_ik + D_jl, D_il + D_jk) - D_ij - D_kl) / 2.
    Leaf terms are then solved from three pairs, and the whole fit is
    checked exactly against every entry.
    """
    n = len(nu)
    D = [[2 * Fraction(nu[i][j]) for j in range(n)] for i in range(n)]
    weights = {}
    for s in all_splits(n):
        A = [i - 1 for i in s.side]
        B = [i - 1 for i in s.other]
        w = min(
            (max(D[i][k] + D[j][l], D[i][l] + D[j][k]) - D[i][j] - D[k][l]) / 2
            for i, j in itertools.combinations(A, 2) for k, l in itertools.combinations(B, 2)
        )
        if w > 0:
            weights[s] = w
    splits = list(weights)
    if any(not a.compatible(b) for a, b in itertools.combinations(splits, 2)):
        raise NotTreelike("positive splits are not pairwise compatible")

    def rest(i, j):
        return D[i][j] - sum(w for s, w in weights.items() if s.separates(i + 1, j + 1))

    leaves = []
    for i in range(n):
        j, k = [x for x in range(n) if x != i][:2]
        leaves.append((rest(i, j) + rest(i, k) - rest(j, k)) / 2)
    for i, j in itertools.combinations(range(n), 2):
        if rest(i, j) != leaves[i] + leaves[j]:
            raise NotTreelike("no tree fits the dissimilarity exactly")
    return MetricTree(n, weights, leaves)


def quartet_length(nu: Sequence[Sequence]) -> Fraction:
    """Interior edge of a 4-leaf tree from its half-distances."""
    v = lambda i, j: Fraction(nu[i - 1][j - 1])  # noqa: E731
    return max(v(1, 2) + v(3, 4) - v(1, 4) - v(2, 3),
               v(1, 3) + v(2, 4) - v(1, 2) - v(3, 4),
               v(1, 4) + v(2, 3) - v(1, 3) - v(2, 4))


# ---------------------------------------------------------------------------
# valuations of marked points


def _as_val(x) -> ValScalar:
    return x if isinstance(x, ValScalar) else ValScalar.coerce(x)


def nu_from_points(points: Sequence) -> List[List[int]]:
    pts = [_as_val(p) for p in points]
    n = len(pts)
    nu = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        v = valuation(pts[i] - pts[j])
        if v is INF:
            raise CoincidentPoints(f"points {i + 1} and {j + 1} coincide")
        nu[i][j] = nu[j][i] = -v
    return nu


def _nu_projective(points: Sequence[Tuple]) -> List[List[int]]:
    """Half-distances for points given as homogeneous pairs (a, b)."""
    n = len(points)
    nu = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        a, b = points[i]
        c, d = points[j]
        v = valuation(_as_val(a) * _as_val(d) - _as_val(c) * _as_val(b))
        if v is INF:
            raise CoincidentPoints(f"points {i + 1} and {j + 1} coincide")
        nu[i][j] = nu[j][i] = -v
    return nu


def _matchings(items: Tuple[int, ...]) -> List[Tuple[Tuple[int, int], ...]]:
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for k, b in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in _matchings(remaining):
            out.append(((first, b),) + m)
    return out


def segre_matchings() -> List[Tuple[Tuple[int, int], ...]]:
    """Perfect matchings of {1..6} in the order m0..m14 (lexicographic)."""
    return sorted(_matchings((1, 2, 3, 4, 5, 6)))


def m_valuations(points: Sequence) -> List[int]:
    """Valuations of the Segre coordinates m0..m14 at six marked points."""
    if len(points) != 6:
        raise ValueError("six marked points are required")
    pts = [_as_val(p) for p in points]
    out = []
    for match in segre_matchings():
        prod = ValScalar.const(1)
        for i, j in match:
            diff = pts[i - 1] - pts[j - 1]
            if diff.is_zero():
                raise CoincidentPoints(f"points {i} and {j} coincide")
            prod = prod * diff
        out.append(valuation(prod))
    return out


def snowflake_edges_from_m(mvals: Sequence[int]) -> Tuple[int, int, int]:
    """Internal edges of the snowflake with cherries 12, 34, 56."""
    return (mvals[2] - mvals[13], mvals[6] - mvals[13], mvals[14] - mvals[13])


def segre_split_image(split: Split) -> np.ndarray:
    """A_segre applied to the indicator of the pairs inside one side."""
    side = set(split.side)
    return np.array([sum(1 for i, j in m if i in side and j in side)
                     for m in segre_matchings()], dtype=np.int64)


def weights_from_m(mvals: Sequence[int], splits: Sequence[Split]) -> List[Fraction] | None:
    """Solve mvals = sum w_s A e_s + c (1,..,1) exactly; None if impossible."""
    rows = [list(segre_split_image(s)) for s in splits] + [[1] * 15]
    aug = [[Fraction(rows[c][r]) for c in range(len(rows))] + [Fraction(mvals[r])]
           for r in range(15)]
    sol = _solve_fraction(aug, len(rows))
    return None if sol is None else sol[:-1]


# ---------------------------------------------------------------------------
# genus two


# (number of cherries, number of middle splits) -> row of the correspondence
# table; lengths are listed loops first, bridges after, following the
# drawing order (loop, bridge, loop) for the barbell
TYPE_OF_SHAPES = {(0, 0): 1, (0, 1): 2, (1, 0): 3, (1, 1): 4, (2, 0): 5, (2, 1): 6, (3, 0): 7}
EDGE_COUNT = {1: 0, 2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 3}
CURVE_NAMES = {
    1: "genus-2 vertex", 2: "two elliptic vertices joined by a bridge",
    3: "elliptic vertex with a loop", 4: "loop and bridge", 5: "figure eight",
    6: "barbell", 7: "theta graph",
}
BURKHARDT_CONE = {1: "origin", 2: "b", 3: "a", 4: "ab", 5: "aa", 6: "aab", 7: "aaa"}
# stretching factors: a cherry of weight l becomes a cycle feature of length
# 2l, a 3|3 split of weight l becomes a bridge of length l/2
STRETCH = {"cherry": Fraction(2), "middle": Fraction(1, 2)}


@dataclass
class Genus2Graph:
    type: int
    lengths: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.lengths) != EDGE_COUNT[self.type]:
            raise ValueError(f"type ({self.type}) carries {EDGE_COUNT[self.type]} lengths")

    def to_json(self) -> str:
        return json.dumps({"type": self.type, "lengths": [str(x) for x in self.lengths]})

    def to_dot(self) -> str:
        t, L = self.type, [str(x) for x in self.lengths]
        body = {
            1: lambda: ['  p [label="2"];'],
            2: lambda: ['  p [label="1"]; q [label="1"];', f"  p -- q [len={L[0]}];"],
            3: lambda: ['  p [label="1"];', f"  p -- p [len={L[0]}];"],
            4: lambda: ['  p; q [label="1"];', f"  p -- p [len={L[0]}];", f"  p -- q [len={L[1]}];"],
            5: lambda: ["  p;", f"  p -- p [len={L[0]}];", f"  p -- p [len={L[1]}];"],
            6: lambda: ["  p; q;", f"  p -- p [len={L[0]}];", f"  p -- q [len={L[1]}];",
                        f"  q -- q [len={L[2]}];"],
            7: lambda: ["  p; q;"] + [f"  p -- q [len={x}];" for x in L],
        }[t]()
        return "graph curve {\n" + "\n".join(body) + "\n}\n"


def tree_type(tree: MetricTree) -> int:
    sh = tree.shapes()
    return TYPE_OF_SHAPES[(sh["cherry"], sh["middle"])]


def genus2_from_tree(tree: MetricTree) -> Genus2Graph:
    if tree.n != 6:
        raise ValueError("the genus-2 correspondence needs six leaves")
    t = tree_type(tree)
    cherries = sorted(w for s, w in tree.weights.items() if s.shape == "cherry")
    middles = [w for s, w in tree.weights.items() if s.shape == "middle"]
    loops = [STRETCH["cherry"] * w for w in cherries]
    bridges = [STRETCH["middle"] * w for w in middles]
    if t == 6:
        lengths = (loops[0], bridges[0], loops[1])
    else:
        lengths = tuple(loops + bridges)
    return Genus2Graph(t, lengths)


# ---------------------------------------------------------------------------
# genus one


def genus1_check(points: Sequence) -> Tuple[Fraction, int]:
    """Interior edge and val(j) for four marked points.

    Points are Laurent scalars (affine) or homogeneous pairs (a, b).  The
    cross ratio is lambda = p/q with p = (x3-x1)(x2-x4), q = (x2-x1)(x3-x4),
    and j = 256 (p^2 - pq + q^2)^3 / (p^2 q^2 (p - q)^2).
    """
    if len(points) != 4:
        raise ValueError("four marked points are required")
    hom = [p if isinstance(p, tuple) else (_as_val(p), ValScalar.const(1)) for p in points]
    hom = [(_as_val(a), _as_val(b)) for a, b in hom]
    nu = _nu_projective(hom)

    def det(i, j):
        return hom[i][0] * hom[j][1] - hom[j][0] * hom[i][1]

    p = det(2, 0) * det(1, 3)
    q = det(1, 0) * det(2, 3)
    num = ValScalar.const(256) * (p * p - p * q + q * q) ** 3
    den = p * p * q * q * (p - q) * (p - q)
    valj = valuation(num) - valuation(den) if not num.is_zero() else INF
    return quartet_length(nu), valj


def genus1_from_lambda(lam) -> Tuple[Fraction, int]:
    """The four points 0, 1, infinity, lambda."""
    one = ValScalar.const(1)
    zero = ValScalar()
    return genus1_check([(zero, one), (one, one), (_as_val(lam), one), (one, zero)])


# ---------------------------------------------------------------------------
# random configurations


def _residues(rng: random.Random, k: int) -> List[CycScalar]:
    seen, out = set(), []
    while len(out) < k:
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        if (a, b) in seen:
            continue
        seen.add((a, b))
        out.append(CycScalar((a, b), 3))
    return out


def points_from_clusters(n: int, clusters: Dict[FrozenSet[int], int], rng: random.Random) -> List[ValScalar]:
    """Marked points whose valuation tree has the given nested clusters.

    ``clusters`` maps a laminar family of subsets of {1..n} (size >= 2,
    not the whole set) to positive integer weights; val(x_i - x_j) is the
    total weight of the clusters holding both i and j.
    """
    pts: Dict[int, ValScalar] = {}

    def place(members: FrozenSet[int], depth: int, offset: ValScalar):
        inner = [c for c in clusters if c < members]
        maximal = [c for c in inner if not any(c < d for d in inner)]
        covered = set().union(*maximal) if maximal else set()
        children = [(c, clusters[c]) for c in maximal] + [(frozenset([i]), None) for i in sorted(members - covered)]
        res = _residues(rng, len(children))
        for (child, w), r in zip(children, res):
            off = offset + ValScalar.monomial(r, depth)
            if w is None:
                (i,) = child
                pts[i] = off
            else:
                place(child, depth + w, off)

    place(frozenset(range(1, n + 1)), 0, ValScalar())
    return [pts[i] for i in range(1, n + 1)]


def random_tree(tree_type_label: int, rng: random.Random, max_weight: int = 5) -> MetricTree:
    """A random 6-leaf tree of the given type with integer weights."""
    taxa = list(range(1, 7))
    rng.shuffle(taxa)
    a, b, c, d, e, f = taxa
    shapes = {
        1: [],
        2: [{a, b, c}],
        3: [{a, b}],
        4: [{a, b}, {a, b, c}],
        5: [{a, b}, {c, d}],
        6: [{a, b}, {a, b, c}, {e, f}],
        7: [{a, b}, {c, d}, {e, f}],
    }[tree_type_label]
    weights = {Split.of(s, 6): Fraction(rng.randint(1, max_weight)) for s in shapes}
    return MetricTree(6, weights)


def configuration_for_tree(tree: MetricTree, rng: random.Random) -> List[ValScalar]:
    """Points realizing the tree: cluster sides are those avoiding leaf n."""
    n = tree.n
    clusters = {}
    for s, w in tree.weights.items():
        side = frozenset(s.side) if n not in s.side else frozenset(s.other)
        clusters[side] = int(w)
    return points_from_clusters(n, clusters, rng)


PRESETS = {
    # cherries 12, 34, 56 of weights 1, 2, 3
    "snowflake": "0; t; 1; 1+t^2; 3; 3+t^3",
    # cherry 12 inside the 3|3 split 123|456, cherry 56
    "caterpillar": "0; t^2; t; 1; 3; 3+t^3",
    "star": "0; 1; 2; 3; 4; 7",
    "lambda-t": "0; 1; t; t^-1",
}
