"""
Coset enumeration against known orders and sympy
"""

import pytest
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from sidki_x.enumerator import enumerate_cosets
from sidki_x.errors import CheckFailure, Overflow, UsageError
from sidki_x.presentations import parse_presentation

ORDERS = [
    ('< a | a^2 >', 2),
    ('< a | a^3 >', 3),
    ('< a, b | a^2, b^2, [a, b] >', 4),
    ('< a, b | a^2, b^2, (a*b)^3 >', 6),
    ('< a, b | a^4, b^2, (a*b)^2 >', 8),
    ('< a, b | a^4, a^2 = b^2, b^-1*a*b*a >', 8),
    ('< a, b | a^2, b^3, (a*b)^5 >', 60),
    ('< a, b | a^3, b^3, (a*b)^3, (a*b^-1)^3 >', 27),
    ('< a | a >', 1),
]


@pytest.mark.parametrize('text,order', ORDERS)
@pytest.mark.parametrize('strategy', ['hlt', 'felsch'])
def test_orders(text, order, strategy):
    table = enumerate_cosets(parse_presentation(text), strategy=strategy)
    assert table.n_cosets == order
    assert table.check()


def test_matches_sympy():
    free, x, y = free_group('x, y')
    fpg = FpGroup(free, [x ** 2, y ** 3, (x * y) ** 4])
    pres = parse_presentation('< a, b | a^2, b^3, (a*b)^4 >')
    assert enumerate_cosets(pres).n_cosets == fpg.order()


def test_subgroup_index():
    pres = parse_presentation('< a, b | a^2, b^2, (a*b)^3 >')
    table = enumerate_cosets(pres, subgens=[pres.word('a')])
    assert table.n_cosets == 3
    assert table.coset_of(pres.word('a')) == 0
    assert table.check()


def test_representatives():
    pres = parse_presentation('< a, b | a^2, b^2, (a*b)^3 >')
    table = enumerate_cosets(pres)
    reps = table.representatives()
    assert len(reps) == 6
    assert [table.coset_of(w) for w in reps] == list(range(6))


def test_word_image_is_permutation():
    pres = parse_presentation('< a, b | a^4, b^2, (a*b)^2 >')
    table = enumerate_cosets(pres)
    img = table.word_image(pres.word('a*b*a'))
    assert sorted(img) == list(range(8))
    assert table.perm_realization().order() == 8


def test_overflow():
    pres = parse_presentation('< a, b | a^2, b^3, (a*b)^5 >')
    with pytest.raises(Overflow):
        enumerate_cosets(pres, max_cosets=10)


def test_overflow_exit_code():
    assert Overflow(10).exit_code == 2


@pytest.mark.parametrize('strategy', ['hlt', 'felsch'])
def test_definitions_are_capped(strategy):
    # Z² never closes; the live cap alone would let it run for long
    pres = parse_presentation('< a, b | [a, b] >')
    with pytest.raises(Overflow) as err:
        enumerate_cosets(pres, max_defined=100, strategy=strategy)
    assert err.value.budget == 100
    assert err.value.defined == 100


def test_definition_cap_leaves_finite_groups_alone():
    pres = parse_presentation('< a, b | a^2, b^2, (a*b)^3 >')
    assert enumerate_cosets(pres, max_defined=1000).n_cosets == 6


def test_unknown_strategy():
    with pytest.raises(UsageError):
        enumerate_cosets(parse_presentation('< a | a^2 >'),
                         strategy='magic')


def test_check_catches_a_broken_table():
    pres = parse_presentation('< a | a^3 >')
    table = enumerate_cosets(pres)
    table.table[:, 0] = [1, 0, 2]
    with pytest.raises(CheckFailure):
        table.check()


def test_to_json():
    pres = parse_presentation('< a | a^3 >')
    doc = enumerate_cosets(pres).to_json()
    assert doc['n_cosets'] == 3
    assert sorted(doc['generators']['a']) == [0, 1, 2]
