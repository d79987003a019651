"""
Presentation and word text
"""

import pytest

from sidki_x.errors import PresentationSyntaxError, UndeclaredGeneratorError
from sidki_x.parser import parse_raw_word
from sidki_x.presentations import parse_presentation
from sidki_x.words import GenSymbol, IDENTITY, Word, commutator, left_normed

a = Word([GenSymbol('a', False, 1)])
b = Word([GenSymbol('b', False, 1)])
c = Word([GenSymbol('c', False, 1)])


def test_s3():
    pres = parse_presentation('< a, b | a^2, b^2, (a*b)^3 >')
    assert pres.generators == (('a', False), ('b', False))
    assert pres.relators == (a ** 2, b ** 2, (a * b) ** 3)


def test_juxtaposition_and_star():
    assert parse_raw_word('a b a^-1') == parse_raw_word('a*b*a^-1')
    assert parse_raw_word('a b a^-1') == a * b * a.inverse()


def test_equations():
    pres = parse_presentation('< a, b | a^2 = b^2 >')
    assert pres.relators == (a ** 2 * b ** -2,)


def test_commutators():
    assert parse_raw_word('[a, b]') == commutator(a, b)
    assert parse_raw_word('[a, b, c]') == left_normed([a, b, c])
    assert parse_raw_word('[a, b]^-1') == commutator(b, a)


def test_barred():
    assert parse_raw_word('a~') == a.bar()
    assert parse_raw_word('[a, a~]') == commutator(a, a.bar())
    pres = parse_presentation('< a, a~ | [a, a~] >')
    assert pres.generators == (('a', False), ('a', True))


def test_identity():
    assert parse_raw_word('1') == IDENTITY
    assert parse_raw_word('') == IDENTITY
    pres = parse_presentation('< a | >')
    assert pres.relators == ()
    assert parse_presentation('< a | 1 >').relators == ()


def test_nested_powers():
    assert parse_raw_word('(a b)^2 a^-3') == a * b * a * b * a ** -3
    assert parse_raw_word('((a)^2)^2') == a ** 4


def test_undeclared():
    with pytest.raises(UndeclaredGeneratorError):
        parse_presentation('< a | b^2 >')
    with pytest.raises(UndeclaredGeneratorError):
        parse_presentation('< a | a~^2 >')


@pytest.mark.parametrize('text', ['< a | a^ >', '< a | a^2', 'a b >',
                                  '< a | 2 >', '< a | [a] >', '< | ^ >'])
def test_syntax_errors(text):
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(text)


def test_error_position():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation('< a | a^ >')
    assert info.value.position == 9


def test_ell_shorthand():
    pres = parse_presentation('< a, a~ | l_a^2 >')
    assert pres.relators[0] == (a.inverse() * a.bar()) ** 2
    with pytest.raises(UndeclaredGeneratorError):
        parse_presentation('< a | l_a >')
