"""
Permutation groups: orders, series, Engel classes, homomorphisms
"""

import numpy as np
import pytest
from sympy.combinatorics.named_groups import (AlternatingGroup,
                                              DihedralGroup,
                                              SymmetricGroup)

from sidki_x.errors import CheckFailure, SizeGuardError, UsageError
from sidki_x.permgroups import (ExceedsCap,
                                GroupHom,
                                NotNilpotent,
                                PermGroup,
                                direct_product,
                                embed,
                                perm_commutator,
                                perm_inv,
                                perm_mul,
                                perm_order,
                                project)


def from_sympy(grp):
    "the same group as a PermGroup"
    return PermGroup([np.array(g.array_form) for g in grp.generators])


def s3():
    return PermGroup([[1, 0, 2], [0, 2, 1]])


def d4():
    return from_sympy(DihedralGroup(4))


def test_right_action():
    p = np.array([1, 2, 0])
    q = np.array([1, 0, 2])
    # pq sends 0 to p, then q: 0 -> 1 -> 0
    assert perm_mul(p, q)[0] == q[p[0]]
    assert (perm_mul(p, perm_inv(p)) == np.arange(3)).all()


def test_commutator_convention():
    x = np.array([1, 0, 2])
    y = np.array([0, 2, 1])
    expected = perm_mul(perm_mul(perm_mul(perm_inv(x), perm_inv(y)), x), y)
    assert (perm_commutator(x, y) == expected).all()


def test_perm_order():
    assert perm_order(np.array([1, 2, 0, 4, 3])) == 6
    assert perm_order(np.arange(4)) == 1


@pytest.mark.parametrize('grp,order', [
    (SymmetricGroup(4), 24),
    (DihedralGroup(5), 10),
    (AlternatingGroup(5), 60),
])
def test_order_matches_sympy(grp, order):
    mine = from_sympy(grp)
    assert mine.order() == order == grp.order()
    assert len(mine.elements()) == order


def test_elements_identity_first():
    grp = s3()
    assert (grp.elements()[0] == np.arange(3)).all()


def test_table_and_inverses():
    grp = s3()
    table = grp.table()
    inv = grp.inverses()
    assert (table[np.arange(6), inv] == 0).all()
    elems = grp.elements()
    assert (elems[table[2, 3]] == perm_mul(elems[2], elems[3])).all()


def test_guard():
    grp = from_sympy(SymmetricGroup(5))
    grp.guard = 50
    with pytest.raises(SizeGuardError):
        grp.elements()
    # the stabilizer chain still knows the order
    assert grp.order() == 120
    assert not grp.has_elements()


def test_table_guard():
    grp = s3()
    grp.table_guard = 4
    with pytest.raises(SizeGuardError):
        grp.table()


def test_degree_needed():
    with pytest.raises(UsageError):
        PermGroup([])
    assert PermGroup([], degree=3).order() == 1


def test_not_a_permutation():
    with pytest.raises(UsageError):
        PermGroup([[0, 0, 1]])


def test_center():
    assert d4().center().order() == 2
    assert s3().center().order() == 1


def test_pointwise_stabilizer():
    grp = from_sympy(SymmetricGroup(5))
    assert grp.pointwise_stabilizer([0]).order() == 24
    assert grp.pointwise_stabilizer([0, 1, 2]).order() == 2
    assert grp.pointwise_stabilizer([]).order() == 120
    grp.guard = 50
    stab = grp.pointwise_stabilizer([0, 1])
    assert stab.order() == 6
    assert all(g[0] == 0 and g[1] == 1 for g in stab.gens)


def test_derived_and_perfect():
    assert s3().derived_subgroup().order() == 3
    assert from_sympy(AlternatingGroup(5)).is_perfect()
    assert not s3().is_perfect()


def test_nilpotency_class():
    assert d4().nilpotency_class() == 2
    assert from_sympy(DihedralGroup(8)).nilpotency_class() == 3
    assert PermGroup([[1, 0]]).nilpotency_class() == 1
    assert PermGroup([], degree=2).nilpotency_class() == 0
    res = s3().nilpotency_class()
    assert isinstance(res, NotNilpotent)
    assert res.stable_order == 3


def test_normal_closure_and_quotient():
    grp = s3()
    rot = perm_mul(grp.gens[0], grp.gens[1])
    normal = grp.normal_closure([rot])
    assert normal.order() == 3
    assert normal.is_normal_in(grp)
    quot, labels = grp.quotient(normal)
    assert quot.order() == 2
    assert sorted(set(labels.tolist())) == [0, 1]


def test_intersection_and_join():
    grp = from_sympy(SymmetricGroup(4))
    left = grp.subgroup([[1, 0, 2, 3]])
    right = grp.subgroup([[0, 1, 3, 2]])
    assert left.intersection(right).order() == 1
    assert left.join(right).order() == 4
    assert left.is_subgroup_of(grp)


def test_from_elements_refuses_non_subgroups():
    grp = s3()
    with pytest.raises(CheckFailure):
        grp.from_elements(grp.elements()[:4])


def test_engel_classes():
    # abelian groups are 1-Engel; D4 (class 2) is 2-Engel
    assert PermGroup([[1, 2, 0]]).minimal_engel_class(8) == 1
    assert d4().minimal_engel_class(8) == 2
    assert d4().is_n_engel(2)
    assert not d4().is_n_engel(1)


def test_engel_cap():
    res = s3().minimal_engel_class(5)
    assert isinstance(res, ExceedsCap)
    assert res.cap == 5
    a, b = res.witness
    assert a is not None


def test_engel_without_table():
    grp = d4()
    grp.table_guard = 2
    assert grp.minimal_engel_class(8) == 2


def test_direct_product_embed_project():
    left, right = s3(), PermGroup([[1, 0]])
    prod, offsets = direct_product([left, right])
    assert offsets == [0, 3]
    assert prod.order() == 12
    perm = embed([np.array([1, 2, 0]), np.array([1, 0])], offsets, 5)
    assert prod.contains(perm)
    assert (project(perm, 3, 2) == [1, 0]).all()


def test_hom_sign():
    grp = s3()
    target = PermGroup([[1, 0]])
    sign = GroupHom(grp, target, [[1, 0], [1, 0]])
    assert sign.kernel().order() == 3
    assert sign.image().order() == 2
    rot = perm_mul(grp.gens[0], grp.gens[1])
    assert (sign(rot) == [0, 1]).all()


def test_hom_refused():
    grp = s3()
    target = PermGroup([[1, 2, 0]])
    with pytest.raises(CheckFailure):
        GroupHom(grp, target, [[1, 2, 0], [0, 1, 2]])
