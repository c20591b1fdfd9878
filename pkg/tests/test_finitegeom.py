import itertools

import networkx as nx
import pytest

from tropmoduli import finitegeom as G


def test_line_counts():
    assert len(G.enumerate_lines(2, 4)) == 15
    assert len(G.enumerate_lines(3, 4)) == 40


@pytest.mark.parametrize("q, iso, pairs", [(2, 15, 10), (3, 40, 45)])
def test_plane_classes(q, iso, pairs):
    isotropic, plane_pairs = G.classify_planes(q)
    assert len(isotropic) == iso
    assert len(plane_pairs) == pairs
    for w, wp in plane_pairs:
        assert w.perp() == wp
        assert not w.is_isotropic()


def test_symplectic_form_is_alternating():
    for v in G.enumerate_lines(3, 4):
        assert G.symplectic_form(v, v, 3) == 0
    for u, v in itertools.combinations(G.enumerate_lines(3, 4)[:12], 2):
        assert (G.symplectic_form(u, v, 3) + G.symplectic_form(v, u, 3)) % 3 == 0


def test_pairs_and_nonzero_vectors_match():
    # orthogonality of F_2^4 vectors mirrors disjointness of pairs of {1..6}
    assert G.check_bijection15() == 0


def test_sp4_f2_order():
    g = G.generate_sp4(2)
    assert g.order() == 720
    assert G.preserves_symplectic_orthogonality(g, 2)


def test_plane_action_orbits():
    g = G.burkhardt_plane_action()
    assert g.degree == 40
    # transitive on the 40 isotropic planes
    assert G.orbit_sizes(g, [frozenset([i]) for i in range(40)]) == [40]


def test_incidence_rows():
    inc = G.incidence("burkhardt")
    assert inc.entries.shape == (40, 40)
    assert set(inc.entries.sum(axis=1)) == {4}
    assert set(inc.entries.sum(axis=0)) == {4}
    assert inc.to_csv().count("\n") == 41


def test_e6_finite_model():
    aniso, planes, triples = G.e6_finite_model()
    assert (len(aniso), len(planes), len(triples)) == (36, 120, 40)
    graph = G.e6_plane_orthogonality_graph()
    assert graph.number_of_nodes() == 120
    # each triple is a triangle of mutually orthogonal planes
    assert sum(nx.triangles(graph).values()) // 3 == 40
