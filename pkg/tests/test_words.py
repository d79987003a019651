"""
Free reduction, commutator calculus and the letter maps of the double
"""

from hypothesis import given, strategies as st
import pytest

from sidki_x.errors import AlphabetError, UsageError
from sidki_x.words import (Alphabet,
                           GenSymbol,
                           IDENTITY,
                           Word,
                           commutator,
                           ell,
                           engel_word,
                           free_reduce,
                           left_normed,
                           render)

a = Word([GenSymbol('a', False, 1)])
b = Word([GenSymbol('b', False, 1)])
c = Word([GenSymbol('c', False, 1)])
A = GenSymbol('a', False, 1)
B = GenSymbol('b', False, 1)

LETTERS = st.builds(GenSymbol,
                    st.sampled_from(['a', 'b', 'c']),
                    st.booleans(),
                    st.sampled_from([1, -1]))
RAW = st.lists(LETTERS, max_size=24)


def _is_reduced(word):
    return all(not (x.generator == y.generator and x.sign == -y.sign)
               for x, y in zip(word.letters, word.letters[1:]))


def test_free_reduce_examples():
    assert free_reduce([A, A.inverse()]) == IDENTITY
    assert free_reduce([A, B, B.inverse(), A]) == a * a
    letters = [A.inverse(), B.inverse(), A, B]
    assert free_reduce(letters).letters == tuple(letters)


def test_free_reduce_alphabet():
    alphabet = Alphabet.plain(['a'])
    with pytest.raises(AlphabetError):
        free_reduce([A, B], alphabet=alphabet)


def test_symbol_identity():
    assert A.inverse().generator == A.generator
    assert A.inverse().inverse() == A
    assert A.barred().generator == ('a', True)


@given(RAW)
def test_reduction_is_reduced(letters):
    assert _is_reduced(Word(letters))


@given(RAW, RAW)
def test_product_is_reduced_and_associative(left, right):
    u, v = Word(left), Word(right)
    assert _is_reduced(u * v)
    assert (u * v) * u == u * (v * u)
    assert Word(left + right) == u * v


@given(RAW)
def test_inverse(letters):
    w = Word(letters)
    assert (w * w.inverse()).is_identity()
    assert w.inverse().inverse() == w


@given(RAW, st.integers(min_value=-4, max_value=4))
def test_powers(letters, k):
    w = Word(letters)
    assert w ** k * w ** -k == IDENTITY
    assert w ** (k + 1) == w ** k * w


def test_commutator_convention():
    assert commutator(a, a) == IDENTITY
    assert commutator(a, b).letters == (A.inverse(), B.inverse(), A, B)
    assert render(commutator(a, b)) == 'a^-1*b^-1*a*b'


def test_left_normed():
    assert left_normed([a, b, c]) == commutator(commutator(a, b), c)
    assert left_normed([a]) == a
    with pytest.raises(UsageError):
        left_normed([])


def test_engel_words():
    assert engel_word(a, b, 1) == commutator(a, b)
    assert engel_word(a, b, 2) == commutator(commutator(a, b), b)
    for n in range(1, 5):
        assert engel_word(a, a, n) == IDENTITY
    with pytest.raises(UsageError):
        engel_word(a, b, 0)


def test_conjugation():
    assert a.conjugate(b) == b.inverse() * a * b
    assert commutator(a, b) == a.inverse() * a.conjugate(b)


def test_bar_and_projections():
    w = a * b.bar() * a.inverse()
    assert w.bar() == a.bar() * b * a.bar().inverse()
    assert w.bar().bar() == w
    assert w.pi() == a * b * a.inverse()
    assert w.pibar() == b
    assert w.unbarred_part() == IDENTITY


def test_rho_letters():
    first, second, third = a.rho()
    assert (first, second, third) == (a, a, IDENTITY)
    first, second, third = a.bar().rho()
    assert (first, second, third) == (IDENTITY, a, a)


@given(RAW, RAW)
def test_rho_is_multiplicative(left, right):
    u, v = Word(left), Word(right)
    for x, y, z in zip(u.rho(), v.rho(), (u * v).rho()):
        assert x * y == z


def test_ell():
    assert ell(a) == a.inverse() * a.bar()
    # ρ(ℓ_a) = (a⁻¹, 1, a)
    assert ell(a).rho() == (a.inverse(), IDENTITY, a)


def test_exponent_sums_and_substitute():
    alphabet = Alphabet.plain(['a', 'b'])
    w = a ** 3 * b.inverse() * a.inverse()
    assert w.exponent_sums(alphabet) == [2, -1]
    assert w.substitute({('a', False): b}) == b ** 2
    with pytest.raises(AlphabetError):
        c.exponent_sums(alphabet)


def test_alphabet_columns():
    alphabet = Alphabet.double(['a', 'b'])
    assert len(alphabet) == 4
    assert alphabet.column(A) == 0
    assert alphabet.column(A.inverse()) == 1
    assert alphabet.column(GenSymbol('b', True, -1)) == 7
    assert alphabet.symbol(7) == GenSymbol('b', True, -1)
    with pytest.raises(AlphabetError):
        Alphabet.plain(['a', 'a'])


def test_words_are_immutable():
    with pytest.raises(AttributeError):
        a.letters = ()
