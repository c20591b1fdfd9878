import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropmoduli import identities as I
from tropmoduli.exactnum import OMEGA, CycScalar

small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=25, deadline=None)
@given(st.tuples(small, small, small, small))
def test_parametrization_lies_on_quartic(c):
    rs = I.burkhardt_rs(c)
    assert I.burkhardt_quartic(rs).is_zero()
    assert tuple(I.rs_from_m(I.m_values(c))) == tuple(rs)


def test_burkhardt_report():
    rep = I.check_burkhardt_parametrization(trials=5)
    assert rep.passed and rep.trials == 8
    assert json.loads(rep.to_json())["failures"] == 0


def test_singular_point():
    rep = I.check_singular_point()
    assert rep.passed
    assert rep.witness["span_rank"] == (5, 5)
    assert rep.witness["zeros"] == 16
    # (0:0:0:1:1) is not singular; the point from the m-vector is
    assert rep.notes and "(0:0:0:1:1)" in rep.notes[0]
    grad = I.burkhardt_gradient((0, 0, 0, -1, 1))
    assert all(g.is_zero() for g in grad)


def test_local_rank2():
    assert I.check_local_rank2(trials=4).passed
    with pytest.raises(ValueError):
        I.check_local_rank2(trials=2)


def test_skew_matrix_and_pfaffian():
    x = {k: Fraction(i + 2) for i, k in enumerate(I.X_LABELS)}
    M = I.skew_matrix((1, 2, 3, 5), x)
    assert I.is_skew(M) and len(M) == 9
    # odd size: the full Pfaffian vanishes
    assert I.pfaffian(M) == 0
    assert I.pfaffian([[0, 3], [-3, 0]]) == 3


def test_coble_pfaffian():
    rep = I.check_coble_pfaffian(trials=3)
    assert rep.passed


def test_icosahedral_discriminant():
    assert I.check_icosahedral_discriminant().passed


def test_segre_igusa_kernels():
    kc = I.kernel_comparison()
    assert kc == {"dim_segre": 5, "dim_igusa": 5, "equal": True, "E_sigma": True}
    assert I.check_segre_igusa(trials=5).passed


def test_support_bijection():
    rep = I.check_support_bijection()
    assert rep.passed and rep.witness["orbit"] == 45


def test_cyc_linear_algebra():
    one, w = CycScalar.rational(1), OMEGA
    assert I.cyc_rank([[one, w], [w, w * w]]) == 1
    k = I.cyc_kernel_vector([[one, w], [w, w * w]])
    assert k is not None
    assert (k[0] + w * k[1]).is_zero() and (w * k[0] + w * w * k[1]).is_zero()


def test_identity_failure_carries_seed():
    err = I.IdentityFailure("bad", seed=7)
    assert err.seed == 7 and "seed 7" in str(err)
    assert issubclass(I.SignInconsistency, I.IdentityFailure)
