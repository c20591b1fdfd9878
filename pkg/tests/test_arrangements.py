import numpy as np
import pytest

from tropmoduli import arrangements as A
from tropmoduli.exactnum import T, valuation
from tropmoduli.matroidfan import matroid


@pytest.mark.parametrize("name, n, dim, rank", [
    ("M0N(6)", 15, 6, 5), ("G32", 40, 4, 4), ("E6", 36, 6, 6), ("E7", 63, 8, 7),
])
def test_catalog_sizes(name, n, dim, rank):
    arr = A.arrangement(name)
    assert len(arr) == n
    assert arr.dim == dim
    assert arr.rank == rank == matroid(name).full_rank


def test_aliases_and_unknown_names():
    assert A.arrangement("g32").name == "G32"
    assert A.arrangement("m0n5").name == "M0N(5)"
    with pytest.raises(A.UnknownName):
        A.arrangement("F4")


def test_burkhardt_matrix_matches_table():
    E = A.exponent_matrix("burkhardt")
    assert np.array_equal(E.matrix, A.burkhardt_from_table())


@pytest.mark.parametrize("name, shape, rowsum", [
    ("segre", (15, 15), 3), ("igusa", (10, 15), 6), ("burkhardt", (40, 40), 4), ("yoshida", (40, 36), 9),
])
def test_exponent_matrix_shapes(name, shape, rowsum):
    E = A.exponent_matrix(name)
    assert E.matrix.shape == shape
    assert set(E.matrix.sum(axis=1)) == {rowsum}


def test_e6_a2_flats_and_triples():
    M = matroid("E6")
    assert len(A.a2_flats(M)) == 120
    a2, triples, graph = A.yoshida_triples(M)
    assert len(triples) == 40
    # every form lies in exactly ten of the 120 A2 flats
    assert {sum(1 for f in a2 if i in f) for i in range(36)} == {10}


def test_evaluate_checks_dimension():
    arr = A.arrangement("G32")
    with pytest.raises(A.DimensionMismatch):
        A.evaluate(arr, [1, 2, 3])


def test_evaluate_and_monomials_agree_on_valuations():
    arr = A.arrangement("G32")
    vals = A.evaluate(arr, [1 + T, 2 * T ** 2, 3, 5 + T])
    mono = A.monomial_evaluate(A.exponent_matrix("burkhardt"), vals)
    E = A.exponent_matrix("burkhardt").matrix
    expected = E.dot([valuation(v) for v in vals])
    assert [valuation(m) for m in mono] == list(expected)
