"""
Smith normal form and finitely generated abelian groups
"""

import math

from hypothesis import given, strategies as st
import numpy as np
import pytest
import sympy

from sidki_x.errors import UsageError
from sidki_x.intlinalg import (AbHom,
                               FinAbGroup,
                               SmithNormalForm,
                               cokernel,
                               direct_sum,
                               element_order,
                               int_matrix,
                               quotient_by_span,
                               same_lattice,
                               smith_normal_form,
                               span_basis,
                               span_exponent,
                               span_order,
                               tensor)

ENTRY = st.integers(min_value=-9, max_value=9)


def _matrices(rows, cols):
    return st.lists(st.lists(ENTRY, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def _det(mat):
    return int(sympy.Matrix([[int(x) for x in row] for row in mat]).det())


def test_small_example():
    U, D, V = smith_normal_form([[2, 4], [6, 8]])
    assert [D[0, 0], D[1, 1]] == [2, 4]
    assert D[0, 1] == D[1, 0] == 0
    assert (U.dot([[2, 4], [6, 8]]).dot(V) == D).all()


@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: _matrices(n, n)))
def test_square_forms(mat):
    snf = SmithNormalForm(mat).run()
    diag = [int(d) for d in snf.diagonal()]
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert diag[len(nonzero):] == [0] * (len(diag) - len(nonzero))
    assert (snf.U.dot(int_matrix(mat)).dot(snf.V) == snf.D).all()
    assert abs(_det(snf.U)) == 1 and abs(_det(snf.V)) == 1
    assert (snf.V.dot(snf.Vinv) == np.eye(len(mat), dtype=int)).all()
    # |det| and the gcd of the entries are invariants
    prod = 1
    for d in diag:
        prod *= d
    assert prod == abs(_det(mat))
    entries_gcd = 0
    for row in mat:
        for x in row:
            entries_gcd = math.gcd(entries_gcd, x)
    assert (diag[0] if diag else 0) == entries_gcd


@given(st.integers(min_value=1, max_value=3).flatmap(
    lambda m: st.integers(min_value=1, max_value=4).flatmap(
        lambda n: _matrices(m, n))))
def test_rectangular_forms(mat):
    U, D, V = smith_normal_form(mat)
    assert (U.dot(mat).dot(V) == D).all()
    for i in range(D.shape[0]):
        for j in range(D.shape[1]):
            if i != j:
                assert D[i, j] == 0


def test_cokernel():
    assert cokernel([[2, 0], [0, 3]]) == FinAbGroup([6])
    assert cokernel([[2, 4]]) == FinAbGroup([2], free_rank=1)
    assert cokernel([], ncols=3) == FinAbGroup(free_rank=3)
    assert cokernel([[1, 0], [0, 1]]).is_trivial()


def test_fin_ab_group():
    group = FinAbGroup.from_orders([2, 3, 4, 1, 0])
    assert group == FinAbGroup([2, 12], free_rank=1)
    assert group.order() is None
    assert FinAbGroup([2, 12]).order() == 24
    assert FinAbGroup([2, 12]).exponent() == 12
    assert FinAbGroup().exponent() == 1
    assert str(FinAbGroup([2], free_rank=2)) == 'Z^2 x Z/2'
    with pytest.raises(UsageError):
        FinAbGroup([2, 3])
    with pytest.raises(UsageError):
        FinAbGroup([1])


def test_tensor_and_sums():
    assert tensor(FinAbGroup([4]), FinAbGroup([6])) == FinAbGroup([2])
    assert tensor(FinAbGroup(free_rank=1), FinAbGroup([3])) == \
        FinAbGroup([3])
    assert direct_sum(FinAbGroup([2]), FinAbGroup([3])) == FinAbGroup([6])


@given(st.lists(st.sampled_from([0, 2, 3, 4, 6]), min_size=1, max_size=3),
       st.lists(st.sampled_from([0, 2, 3, 4, 6]), min_size=1, max_size=3))
def test_tensor_symmetry(left, right):
    A, B = FinAbGroup.from_orders(left), FinAbGroup.from_orders(right)
    assert tensor(A, B) == tensor(B, A)


def test_spans():
    orders = (4, 6)
    assert span_order(orders, [(2, 0)]) == 2
    assert span_order(orders, [(1, 1)]) == 12
    assert span_exponent(orders, [(2, 0), (0, 3)]) == 2
    assert element_order((0, 4), (0, 2)) == 2
    assert element_order((0, 4), (1, 0)) is None
    assert quotient_by_span(orders, [(1, 1)]) == FinAbGroup([2])
    basis = span_basis(orders, [(2, 0), (0, 2), (2, 2)])
    assert len(basis) <= 2
    assert span_order(orders, basis) == span_order(orders, [(2, 0), (0, 2)])


def test_same_lattice():
    assert same_lattice([[2, 0], [0, 2]], [[2, 2], [0, 2]], 2)
    assert not same_lattice([[2, 0]], [[0, 2]], 2)
    assert not same_lattice([[2, 0]], [[4, 0]], 2)


def test_ab_hom():
    source = FinAbGroup([4])
    target = FinAbGroup([2])
    hom = AbHom(source, target, [[1]])
    assert hom.is_well_defined()
    assert hom([3]) == (1,)
    assert hom.image_order() == 2
    assert not AbHom(FinAbGroup([3]), target, [[1]]).is_well_defined()
