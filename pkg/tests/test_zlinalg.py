import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from tropmoduli import zlinalg

mats = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60)
@given(mats)
def test_nullspace_is_annihilated(rows):
    A = np.array(rows, dtype=np.int64)
    N = zlinalg.nullspace(A)
    assert len(N) + zlinalg.rank(A) == A.shape[1]
    if len(N):
        assert not np.any(A.dot(np.asarray(N).T))


@settings(max_examples=60)
@given(mats)
def test_smith_diagonal_divides(rows):
    d, _ = zlinalg.smith(np.array(rows, dtype=np.int64))
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert len(nz) == zlinalg.rank(rows)


@settings(max_examples=60)
@given(mats)
def test_smith_transform_spans_row_lattice(rows):
    d, W = zlinalg.smith(np.array(rows, dtype=np.int64))
    scaled = [[int(x) * di for x in W[i]] for i, di in enumerate(d)]
    if not scaled:
        assert zlinalg.rank(rows) == 0
        return
    # same lattice: each generating set lies in the span of the other with equal index
    assert zlinalg.rank(scaled + [list(r) for r in rows]) == len(d)
    assert zlinalg.lattice_index(scaled) == zlinalg.lattice_index(rows)


def test_lattice_index():
    assert zlinalg.lattice_index([[2, 0], [0, 3]]) == 6
    assert zlinalg.lattice_index([[1, 1], [1, -1]]) == 2
    assert zlinalg.lattice_index([[1, 2, 3]]) == 1


def test_rational_solve():
    sol = zlinalg.rational_solve([[1, 0], [1, 2]], [3, 4])
    assert sol == [1, 2]
    assert zlinalg.rational_solve([[1, 1]], [1, 2]) is None
