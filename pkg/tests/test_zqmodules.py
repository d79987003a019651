"""
ℤQ-modules: augmentation powers, Aug(ℤG)/I₂, the module M
"""

import pytest

from sidki_x.enumerator import enumerate_cosets
from sidki_x.errors import CheckFailure, UsageError
from sidki_x.presentations import parse_presentation
from sidki_x.sidki import build
from sidki_x.zqmodules import (ActionNotNilpotent,
                               QModule,
                               action_nilpotency_class,
                               aug_mod_I2,
                               augmentation_bounds,
                               class2_check,
                               derived_section,
                               l_module_checks,
                               module_from_relations,
                               module_M,
                               same_module,
                               w_structure_checks)


def regular(text):
    "regular realization of a finite presentation"
    table = enumerate_cosets(parse_presentation(text))
    return table.perm_realization(base=(0,), order=table.n_cosets)


def test_inversion_on_z3_is_not_nilpotent():
    mod = QModule((3,), [[[2]]])
    res = action_nilpotency_class(mod)
    assert isinstance(res, ActionNotNilpotent)
    assert res.cap == 6


def test_inversion_on_z4():
    mod = QModule((4,), [[[3]]])
    assert action_nilpotency_class(mod) == 2
    assert class2_check(mod)


def test_trivial_action():
    mod = QModule((0, 2), [[[1, 0], [0, 1]]])
    assert action_nilpotency_class(mod, cap=4) == 1
    assert mod.order() is None


def test_infinite_needs_cap():
    with pytest.raises(UsageError):
        action_nilpotency_class(QModule((0,), [[[1]]]))


def test_bad_orders():
    with pytest.raises(UsageError):
        QModule((1,), [])


def test_automorphisms():
    good = QModule((4,), [[[3]]], inverse_actions=[[[3]]])
    assert good.check_automorphisms()
    bad = QModule((4,), [[[3]]], inverse_actions=[[[1]]])
    with pytest.raises(CheckFailure):
        bad.check_automorphisms()


def test_same_module():
    left = module_from_relations(1, [[2]], [[[1]]])
    right = module_from_relations(1, [[-2]], [[[3]]])
    other = module_from_relations(1, [[3]], [[[1]]])
    assert same_module(left, right)
    assert not same_module(left, other)
    assert left.underlying.order() == 2


def test_quotient():
    mod = QModule((4,), [[[3]]])
    quot = mod.quotient([(2,)])
    assert quot.order() == 2
    with pytest.raises(UsageError):
        QModule((0, 0), [[[0, 1], [1, 0]]]).quotient([(1, 0)])


def test_aug_c2():
    mod = aug_mod_I2(regular('< a | a^2 >'))
    assert mod.orders == (2,)
    assert action_nilpotency_class(mod) == 1


def test_aug_trivial():
    mod = aug_mod_I2(regular('< a | a >'))
    assert mod.is_zero()


@pytest.mark.parametrize('text', ['< a | a^2 >', '< a | a^4 >',
                                  '< a, b | a^2, b^2, (a*b)^3 >'])
def test_augmentation_bounds(text):
    bounds = augmentation_bounds(aug_mod_I2(regular(text)))
    assert bounds['two_V_aug2_zero']
    assert bounds['V_aug_k3_zero']


def test_s3_module_M():
    group = regular('< a, b | a^2, b^2, (a*b)^3 >')
    assert derived_section(group).order() == 3
    assert module_M(group).order() == 3


def test_abelian_module_M_is_zero():
    assert module_M(regular('< a | a^4 >')).is_zero()


@pytest.mark.parametrize('text', ['< a | a^2 >', '< a | a^3 >',
                                  '< a, b | a^2, b^2, (a*b)^3 >'])
def test_l_module_matches_augmentation_model(text):
    report, checks = l_module_checks(build(parse_presentation(text)))
    assert [c.name for c in checks if not c.passed] == []
    assert report['s'] is not None


def test_w_structure_s3():
    report, checks = w_structure_checks(build(parse_presentation(
        '< a, b | a^2, b^2, (a*b)^3 >')))
    assert all(c.passed for c in checks)
    assert report['M_order'] == 3
    assert 3 % report['N_order'] == 0


def test_w_structure_abelian():
    report, checks = w_structure_checks(build(parse_presentation(
        '< a | a^4 >')))
    names = [c.name for c in checks]
    assert 'W_action_nilpotent' in names
    assert all(c.passed for c in checks)
    assert report['W_action_class'] <= 3 + report['s']


@pytest.mark.slow
@pytest.mark.parametrize('text', ['< a, b | a^2, b^2, [a, b] >',
                                  '< a | a^4 >',
                                  '< a, b | a^4, b^2, (a*b)^2 >',
                                  '< a, b | a^4, a^2 = b^2, b^-1*a*b*a >'])
def test_l_module_suite(text):
    _, checks = l_module_checks(build(parse_presentation(text)))
    assert all(c.passed for c in checks)
