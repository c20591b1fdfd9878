import random

import networkx as nx
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from tropmoduli import matroidfan as MF


def test_m0n4_is_the_petersen_graph():
    # the braid arrangement in four variables (K4): tree space on five leaves
    fan = MF.bergman_fan("M0N(4)")
    assert fan.f_vector() == (10, 15)
    g = nx.Graph(fan.faces[2])
    assert nx.is_isomorphic(g, nx.petersen_graph())


def test_m0n6_face_vector():
    fan = MF.bergman_fan("M0N(6)")
    assert fan.f_vector() == (56, 490, 1260, 945)
    assert fan.check_simplicial()


def test_g32_face_vector_and_moebius():
    assert MF.bergman_complex("G32").f_vector() == (170, 1800, 3360)
    assert MF.moebius_number(MF.matroid("G32")) == 1729 == 7 * 13 * 19


def test_rank_and_closure():
    M = MF.matroid("M0N(6)")
    # z12, z13 force z23 (labels in lexicographic order of pairs)
    assert M.rank([0, 1]) == 2
    assert M.closure([0, 1]) == frozenset({0, 1, 5})
    assert M.full_rank == 5


def test_irreducible_flat_counts():
    M = MF.matroid("M0N(6)")
    counts = [len([f for f in lev if f.irreducible]) for lev in M.flats_by_rank()[1:-1]]
    assert counts == [15, 20, 15, 6]
    assert len(MF.matroid("E6").irreducible_flats()) == 750


def test_m0n5_is_tree_space_on_six_leaves():
    assert MF.bergman_fan("M0N(5)").f_vector() == (25, 105, 105)


def test_circuits_of_k5():
    # circuits of K5: triangles, 4-cycles and 5-cycles
    sizes = [len(a) for a in MF.circuits("M0N(5)")]
    assert sizes == [10, 15, 12]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=15, max_size=15))
def test_two_membership_oracles_agree(w):
    """Circuits and flats of level sets are independent descriptions of the fan."""
    nc = MF.bergman_complex("M0N(6)")
    assert MF.circuit_membership("M0N(6)", w) == (MF.nested_set_of_point(nc, w) is not None)


def test_nested_set_recovers_cone_coordinates():
    nc = MF.bergman_complex("M0N(6)")
    rng = random.Random(3)
    top = nc.faces[max(nc.faces)]
    for _ in range(50):
        cone = rng.choice(top)
        coeffs = [rng.randint(1, 5) for _ in cone]
        w = np.zeros(15, dtype=np.int64)
        for i, c in zip(cone, coeffs):
            w[list(nc.building[i].elements)] += c
        face, got = MF.nested_set_of_point(nc, w)
        assert face == tuple(sorted(cone))
        assert dict(zip(face, got)) == dict(zip(cone, coeffs))


def test_batch_membership_matches_single():
    rng = np.random.default_rng(0)
    W = rng.integers(0, 3, size=(40, 15))
    batch = MF.circuit_membership_batch("M0N(6)", W)
    assert list(batch) == [MF.circuit_membership("M0N(6)", w) for w in W]


def test_fan_json_and_csv():
    fan = MF.bergman_fan("M0N(4)")
    assert '"cones"' in fan.to_json()
    assert fan.f_vector_csv().splitlines() == ["dim,count", "1,10", "2,15"]
