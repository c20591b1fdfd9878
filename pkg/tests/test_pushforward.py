import json
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropmoduli import pushforward as P
from tropmoduli.matroidfan import bergman_fan

vec = st.lists(st.integers(-9, 9), min_size=2, max_size=8)


@given(vec, st.integers(-5, 5), st.integers(1, 4))
def test_tp_normalize_ignores_shift_and_scale(v, c, k):
    w = [k * x + c for x in v]
    assert P.tp_normalize(w) == P.tp_normalize(v)
    assert P.tp_equal(v, [x + c for x in v])
    assert min(P.tp_normalize(v)) == 0


def test_zero_class():
    assert P.is_zero_class([3, 3, 3])
    assert not P.is_zero_class([3, 4, 3])


def test_segre_and_igusa_images():
    s, i = P.pushed("segre"), P.pushed("igusa")
    assert s.image.f_vector() == i.image.f_vector() == (25, 105, 105)
    assert {s.image.multiplicity(c) for c in s.image.maximal} == {1}
    assert {i.image.multiplicity(c) for c in i.image.maximal} == {2}
    # nine rooted trees over each unrooted tree
    assert {len(v) for c, v in s.covering.items() if len(c) == 3} == {9}


def test_complementary_subsets_identified():
    for name in ("segre", "igusa"):
        rep = P.identification_checks(name)
        assert rep["distinct_images"] == 25


def test_burkhardt_image():
    pf = P.pushed("burkhardt")
    assert pf.image.f_vector() == (85, 600, 880)
    labels = P.label_types(pf)
    assert Counter(labels.values()) == {"a": 40, "b": 45}
    assert P.type_counts(pf, labels) == {"a": 40, "b": 45, "aa": 240, "ab": 360, "aaa": 160, "aab": 720}
    assert {pf.image.multiplicity(c) for c in pf.image.maximal} == {1}


def test_burkhardt_covering_and_orbits():
    pf = P.pushed("burkhardt")
    labels = P.label_types(pf)
    cover = {}
    for cone, srcs in pf.covering.items():
        cover.setdefault("".join(sorted(labels[i] for i in cone)), set()).add(len(srcs))
    assert cover == {"a": {2}, "b": {2}, "aa": {3}, "ab": {3}, "aaa": {3}, "aab": {4}}
    table = P.burkhardt_orbit_table(pf)
    assert table == {"a": [40], "b": [45], "aa": [240], "ab": [360], "aaa": [160], "aab": [720]}


def test_burkhardt_identification_rules():
    rep = P.identification_checks("burkhardt")
    assert rep == {"doubling": 40, "plane_pairs": 45}
    assert P.doubling_vector_check()


def test_g32_source_classes():
    cl = P.g32_source_classes()
    assert (cl["a"], cl["b"], cl["ä"]) == (40, 90, 40)
    assert (cl["aa"], cl["ab"], cl["aä"], cl["ab⊥"], cl["bä"]) == (240, 360, 480, 360, 360)
    assert (cl["aaä"], cl["aab"], cl["abä"]) == (480, 1440, 1440)


@pytest.mark.parametrize("name", ["segre", "igusa", "burkhardt"])
def test_balancing(name):
    assert P.balancing_failures(P.pushed(name).image) == []


def test_plane_pair_supports():
    supports = P.b_ray_supports()
    assert len(set(supports)) == 45
    assert {len(s) for s in supports} == {16}
    assert P.plane_pair_support() in supports


def test_collapsing_map_is_rejected():
    F = bergman_fan("M0N(4)")
    A = np.array([[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0]])
    with pytest.raises(P.DimensionCollapse):
        P.push_fan(F, A, name="toy")


def test_local_index():
    basis = np.array([[1, 0, 0], [0, 1, 0]])
    assert P.local_index(np.array([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), basis) == 2
    assert P.local_index(np.eye(3, dtype=np.int64), basis) == 1


def test_pushed_fan_json_lists_coverings():
    import json

    data = json.loads(P.pushed("segre").to_json())
    assert len(data["cones"]) == 105
    assert {len(c["sources"]) for c in data["covering"]} == {9}


@pytest.mark.slow
def test_yoshida_and_naruki():
    pf = P.pushed("yoshida", multiplicities=False)
    rep = P.yoshida_report(pf)
    assert rep["class_sizes"] == {"a": 36, "b": 40, "c": 270}
    assert rep["distinct_rays"] == 346
    assert rep["family_images"][7] is None and rep["family_images"][12] is None
    nar = P.naruki_complex(pf)
    assert nar["f_vector"] == (76, 630, 1620, 1215)
    assert nar["types"] == {"a": 36, "b": 40, "aa": 270, "ab": 360, "aaa": 540, "aab": 1080,
                            "aaaa": 135, "aaab": 1080}
    assert json.loads(pf.to_json())["multiplicityStatus"] == "unvalidated"


def test_locate_in_image_finds_ray_cones():
    pf = P.pushed("burkhardt")
    for i in (0, 17, 60):
        r = pf.image.rays[i]
        cone, coeff = P.locate_in_image(pf, [3 * x + 5 for x in r])
        assert cone == (i,) and coeff == [3]
    assert P.locate_in_image(pf, [2] * 40) == ((), [])


@pytest.mark.slow
def test_burkhardt_valuations_lie_in_tropical_quartic():
    rep = P.conjecture_side_report(count=12, seed=3)
    assert rep["misses"] == 0 and rep["mismatched"] == 0
    assert sum(rep["types"].values()) == 12
