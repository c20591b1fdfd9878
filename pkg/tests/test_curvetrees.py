import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropmoduli import curvetrees as C
from tropmoduli.cli import parse_points


def preset(name):
    return parse_points(C.PRESETS[name])


def test_treespace_counts():
    splits, faces = C.treespace_complex(6)
    assert (len(splits), len(faces[2]), len(faces[3])) == (25, 105, 105)
    splits5, faces5 = C.treespace_complex(5)
    assert (len(splits5), len(faces5[2])) == (10, 15)
    with pytest.raises(ValueError):
        C.treespace_complex(7)


def test_split_basics():
    s = C.Split.of([4, 5, 6], 6)
    assert s.side == (1, 2, 3) and s.shape == "middle"
    assert C.Split.of([1, 2], 6).compatible(s)
    assert not C.Split.of([1, 4], 6).compatible(s)
    with pytest.raises(ValueError):
        C.Split.of([1], 6)


def test_snowflake_tree():
    nu = C.nu_from_points(preset("snowflake"))
    tree = C.tree_from_nu(nu)
    got = {str(s): w for s, w in tree.weights.items()}
    assert got == {"12|3456": 1, "1256|34": 2, "1234|56": 3}
    assert C.tree_type(tree) == 7
    g = C.genus2_from_tree(tree)
    assert g.type == 7 and sorted(g.lengths) == [2, 4, 6]
    m = C.m_valuations(preset("snowflake"))
    assert (m[2], m[6], m[13], m[14]) == (1, 3, 0, 2)
    assert sorted(C.snowflake_edges_from_m(m)) == [1, 2, 3]


def test_caterpillar_is_barbell():
    tree = C.tree_from_nu(C.nu_from_points(preset("caterpillar")))
    g = C.genus2_from_tree(tree)
    assert g.type == 6
    assert g.lengths == (Fraction(2), Fraction(1, 2), Fraction(6))
    assert "q -- q" in g.to_dot()


def test_star_is_single_vertex():
    tree = C.tree_from_nu(C.nu_from_points(preset("star")))
    assert tree.weights == {}
    assert C.genus2_from_tree(tree).type == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6))
def test_random_tree_round_trip(t, seed):
    rng = random.Random(seed)
    tree = C.random_tree(t, rng)
    pts = C.configuration_for_tree(tree, rng)
    fitted = C.tree_from_nu(C.nu_from_points(pts))
    assert fitted.weights == tree.weights
    assert C.tree_type(fitted) == t
    m = C.m_valuations(pts)
    assert C.weights_from_m(m, tree.splits) == [tree.weights[s] for s in tree.splits]


def test_quartet_length():
    nu = [[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    assert C.quartet_length(nu) == 3


def test_genus_one():
    from tropmoduli.exactnum import ValScalar

    assert C.genus1_from_lambda(ValScalar.monomial(1, 1)) == (1, -2)
    assert C.genus1_from_lambda(5) == (0, 0)
    assert C.genus1_check(preset("lambda-t")) == (1, -2)


def test_coincident_points():
    with pytest.raises(C.CoincidentPoints):
        C.nu_from_points([0, 1, 1, 2])
    with pytest.raises(C.CoincidentPoints):
        C.m_valuations([0, 1, 2, 3, 4, 4])


def test_not_treelike():
    # two positive splits 12|34 and 13|24, which cannot share a tree
    nu = [[0, 0, 1, 1], [0, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]]
    with pytest.raises(C.NotTreelike):
        C.tree_from_nu(nu)


def test_weights_from_m_rejects_wrong_splits():
    m = C.m_valuations(preset("snowflake"))
    assert C.weights_from_m(m, [C.Split.of([1, 3], 6)]) is None


def test_genus2_graph_validates_lengths():
    with pytest.raises(ValueError):
        C.Genus2Graph(7, (Fraction(1),))
    for t in range(1, 8):
        g = C.Genus2Graph(t, (Fraction(1),) * C.EDGE_COUNT[t])
        assert g.to_dot().startswith("graph curve")
