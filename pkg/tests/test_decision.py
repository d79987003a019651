"""
Word problem in X(G) and growth of Cayley balls
"""

import itertools
import random
import time

import numpy as np
import pytest

from sidki_x.decision import (FiniteOracle,
                              FreeAbelianOracle,
                              FreeGroupOracle,
                              HeisenbergOracle,
                              SidkiFreeAbelianOracle,
                              XGOracle,
                              ball_sizes,
                              double_oracle,
                              growth_classifier,
                              growth_rate,
                              growth_report,
                              make_oracle,
                              make_setup,
                              quotient_search,
                              triviality_search,
                              xg_word_problem)
from sidki_x.enumerator import enumerate_cosets
from sidki_x.errors import AlphabetError, PartialResultError, UsageError
from sidki_x.isoperimetry import check_certificate
from sidki_x.local import WP_BUDGET
from sidki_x.presentations import parse_presentation, reduced_words
from sidki_x.words import Word, letter, render

C2 = '< a | a^2 >'
S3 = '< a, b | a^2, b^2, (a*b)^3 >'
Z = '< a | >'
F2 = '< a, b | >'
Z2 = '< a, b | [a, b] >'


def random_word(alphabet, length, rng):
    letters = alphabet.letters()
    return Word([rng.choice(letters) for _ in range(length)])


def words_up_to(alphabet, max_len):
    "every freely reduced word of length ≤ max_len, depth first"
    letters = alphabet.letters()
    stack = [()]
    while stack:
        word = stack.pop()
        yield Word(list(word))
        if len(word) < max_len:
            for sym in letters:
                if not word or word[-1] != sym.inverse():
                    stack.append(word + (sym,))


def realized(setup, word):
    "trivial in the permutation realization of the double"
    table = setup.realization
    return table.word_image(word).tolist() == list(range(table.n_cosets))


def against_realization(setup, words):
    "xg_word_problem decides every word as the realization does"
    count = 0
    for word in words:
        verdict = xg_word_problem(setup, word)
        assert not verdict.is_unknown, render(word)
        assert verdict.is_trivial == realized(setup, word), render(word)
        count += 1
    return count


def agree(fast, slow, words, budget):
    "the searches never contradict the realization"
    decided = []
    for word in words:
        expected = xg_word_problem(fast, word)
        got = xg_word_problem(slow, word, budget=budget)
        assert not expected.is_unknown
        if not got.is_unknown:
            assert got.kind == expected.kind, render(word)
            decided.append(word)
    return decided


def test_c2_exhaustive_against_realization():
    setup = make_setup(parse_presentation(C2))
    words = words_up_to(setup.double.alphabet, 8)
    assert against_realization(setup, words) == 13121


@pytest.mark.parametrize('text', [C2, S3])
def test_random_words_against_realization(text):
    setup = make_setup(parse_presentation(text))
    rng = random.Random(7)
    words = (random_word(setup.double.alphabet, rng.randint(0, 20), rng)
             for _ in range(10 ** 4))
    assert against_realization(setup, words) == 10 ** 4


def test_d_commutes_with_l_in_s3():
    setup = make_setup(parse_presentation(S3))
    for g, h, k in itertools.product('ab', repeat=3):
        word = setup.double.word('[l_{}, [{}, {}~]]'.format(g, h, k))
        verdict = xg_word_problem(setup, word)
        assert verdict.is_trivial, (g, h, k)
        assert verdict.method == 'realization'
        assert realized(setup, word)


def test_c2_searches_agree():
    base = parse_presentation(C2)
    fast = make_setup(base)
    slow = make_setup(base, realize=False)
    assert fast.realization is not None
    assert slow.realization is None
    words = list(reduced_words(fast.double.alphabet, 4))
    decided = agree(fast, slow, words, budget=256)
    # W is trivial for abelian G, so ρ settles every nontrivial word
    nontrivial = [w for w in words if not realized(fast, w)]
    assert set(nontrivial) <= set(decided)


def test_s3_searches_agree():
    base = parse_presentation(S3)
    fast = make_setup(base)
    slow = make_setup(base, realize=False)
    rng = random.Random(0)
    words = [random_word(fast.double.alphabet, rng.randint(0, 8), rng)
             for _ in range(60)]
    agree(fast, slow, words, budget=256)


def test_default_budget_returns_on_infinite_double():
    base = parse_presentation(Z)
    setup = make_setup(base, oracle=FreeGroupOracle(base.alphabet))
    assert setup.realization is None
    started = time.time()
    verdict = xg_word_problem(setup, setup.double.word('[a^3, a~^3]'))
    assert time.time() - started < 60
    assert not verdict.is_nontrivial
    if verdict.is_unknown:
        assert sum(verdict.budget.values()) <= 2 * WP_BUDGET


def test_quotient_search_work_is_bounded():
    base = parse_presentation(Z)
    setup = make_setup(base, oracle=FreeGroupOracle(base.alphabet))
    search = quotient_search(setup.double.word('[a, a~]'), setup.double,
                             np.random.default_rng(0),
                             max_cosets=64)
    # 9 cyclic subgroups and one permutation try per lap; the coset
    # limit stops growing at 64 after lap 3, leaving permutations only
    steps = list(itertools.islice(search, 60))
    assert all(found is None for _, found in steps)
    works = [work for work, _ in steps]
    assert max(works[:30]) <= 64
    assert works[30:] == list(range(5, 35))


def test_insertion_search_certifies():
    pres = parse_presentation(Z2)
    word = pres.word('[a, b^2]')
    found = None
    for _, found in itertools.islice(triviality_search(word, pres), 5000):
        if found is not None:
            break
    assert found is not None
    assert found.word == word
    assert check_certificate(pres, found)


def test_insertion_search_raises_its_length_limit():
    # a is nontrivial in Z²; the words of length ≤ 5 equal to it run out
    # well before 600 states, so the search must have gone further
    pres = parse_presentation(Z2)
    steps = list(itertools.islice(triviality_search(pres.word('a'), pres),
                                  600))
    assert len(steps) == 600
    assert all(found is None for _, found in steps)
    assert all(work > 0 for work, _ in steps)


def test_rho_catches_nontrivial_words():
    setup = make_setup(parse_presentation(S3), realize=False)
    verdict = xg_word_problem(setup, setup.double.word('a b~'))
    assert verdict.is_nontrivial
    assert verdict.method == 'rho'
    assert verdict.certificate['coordinate'] == 1


def test_relators_are_trivial():
    setup = make_setup(parse_presentation(S3))
    for rel in setup.double.relators:
        verdict = xg_word_problem(setup, rel)
        assert verdict.is_trivial
        assert verdict.certificate.area == 1


def test_foreign_letters():
    setup = make_setup(parse_presentation(C2))
    with pytest.raises(AlphabetError):
        xg_word_problem(setup, Word([letter('z')]))


def test_free_base_uses_search():
    setup = make_setup(parse_presentation(F2),
                       oracle=FreeGroupOracle(parse_presentation(F2)
                                              .alphabet))
    assert setup.realization is None
    word = setup.double.word('[a, a~]')
    verdict = xg_word_problem(setup, word, budget=128)
    assert verdict.is_trivial
    assert verdict.certificate.area == 1


def test_oracles():
    pres = parse_presentation('< a, b, c | >')
    heis = HeisenbergOracle(pres.alphabet)
    assert heis.decide(pres.word('[a, b] c^-1')).is_trivial
    assert heis.decide(pres.word('[a, c]')).is_trivial
    assert heis.decide(pres.word('[a, b]')).is_nontrivial
    assert heis.normal_form(pres.word('b a')) == (1, 1, -1)
    ab = FreeAbelianOracle(pres.alphabet)
    assert ab.decide(pres.word('[a, b]')).is_trivial
    free = FreeGroupOracle(pres.alphabet)
    assert free.equal(pres.word('a b'), pres.word('a b')).is_trivial
    assert free.decide(pres.word('[a, b]')).is_nontrivial


def test_make_oracle():
    assert isinstance(make_oracle(parse_presentation(Z)), FreeGroupOracle)
    assert isinstance(make_oracle(parse_presentation(C2)), FiniteOracle)
    assert isinstance(make_oracle(parse_presentation(Z), 'abelian'),
                      FreeAbelianOracle)
    with pytest.raises(UsageError):
        make_oracle(parse_presentation(C2), 'free')
    with pytest.raises(UsageError):
        make_oracle(parse_presentation(C2), 'nonsense')


def test_finite_oracle_needs_regular_table():
    pres = parse_presentation(S3)
    table = enumerate_cosets(pres, subgens=[pres.word('a')])
    with pytest.raises(UsageError):
        FiniteOracle(table)


def test_double_oracle_choice():
    base = parse_presentation(Z)
    setup = make_setup(base, oracle=FreeGroupOracle(base.alphabet))
    assert isinstance(double_oracle(setup), SidkiFreeAbelianOracle)
    finite = make_setup(parse_presentation(C2))
    assert isinstance(double_oracle(finite), FiniteOracle)
    f2 = parse_presentation(F2)
    assert isinstance(double_oracle(make_setup(
        f2, oracle=FreeGroupOracle(f2.alphabet))), XGOracle)


def test_sidki_free_abelian_only_cyclic():
    f2 = parse_presentation(F2)
    setup = make_setup(f2, oracle=FreeGroupOracle(f2.alphabet))
    with pytest.raises(UsageError):
        SidkiFreeAbelianOracle(setup.double.alphabet)


# ---------------------------------------------------------------------
# growth
# ---------------------------------------------------------------------


def test_double_of_z_grows_quadratically():
    base = parse_presentation(Z)
    setup = make_setup(base, oracle=FreeGroupOracle(base.alphabet))
    oracle = double_oracle(setup)
    gens = setup.double.generator_words()
    sizes = ball_sizes(gens, oracle, 8)
    assert sizes == [2 * n * n + 2 * n + 1 for n in range(9)]
    growth = growth_classifier(sizes)
    assert growth.kind == 'polynomial'
    assert growth.value == 2
    assert growth.heuristic


def test_z_grows_linearly():
    pres = parse_presentation(Z)
    sizes = ball_sizes(pres.generator_words(),
                       FreeGroupOracle(pres.alphabet), 6)
    assert sizes == [1, 3, 5, 7, 9, 11, 13]
    assert growth_classifier(sizes) == ('polynomial', 1, True)


def test_free_group_grows_exponentially():
    pres = parse_presentation(F2)
    sizes = ball_sizes(pres.generator_words(),
                       FreeGroupOracle(pres.alphabet), 6)
    assert sizes[:4] == [1, 5, 17, 53]
    growth = growth_classifier(sizes)
    assert growth.kind == 'exponential'
    assert 2.9 < growth.value < 3.1


def test_exponential_sizes():
    growth = growth_classifier([1, 3, 7, 15, 31, 63])
    assert growth.kind == 'exponential'


def test_finite_balls_stabilize():
    setup = make_setup(parse_presentation(C2))
    sizes = ball_sizes(setup.double.generator_words(),
                       double_oracle(setup), 5)
    assert sizes[-1] == 4
    assert growth_classifier(sizes).value == 0


def test_balls_ignore_generator_order():
    setup = make_setup(parse_presentation(S3))
    oracle = double_oracle(setup)
    gens = setup.double.generator_words()
    sizes = ball_sizes(gens, oracle, 4)
    assert sizes == [1, 5, 15, 37, 69]
    assert ball_sizes(list(reversed(gens)), oracle, 4) == sizes
    assert ball_sizes(gens[2:] + gens[:2], oracle, 4) == sizes


def test_pairwise_matches_normal_forms():
    setup = make_setup(parse_presentation(C2))
    gens = setup.double.generator_words()
    by_form = ball_sizes(gens, double_oracle(setup), 3)
    pairwise = ball_sizes(gens, XGOracle(setup), 3)
    assert by_form == pairwise


def test_pairwise_partial_result():
    f2 = parse_presentation(F2)
    setup = make_setup(f2, oracle=FreeGroupOracle(f2.alphabet))
    oracle = XGOracle(setup, budget=0)
    with pytest.raises(PartialResultError) as err:
        ball_sizes(setup.double.generator_words(), oracle, 3)
    assert err.value.partial[0] == 1


def test_growth_needs_four_sizes():
    with pytest.raises(UsageError):
        growth_classifier([1, 3, 5])


def test_growth_report():
    pres = parse_presentation(Z)
    sizes = [1, 3, 5, 7, 9, 11, 13]
    report = growth_report(pres.generator_words(), sizes)
    assert report['radii'] == list(range(7))
    assert report['classification'] == {'kind': 'polynomial', 'value': 1}
    assert report['heuristic_flag']
    assert abs(report['growth_rate'] - growth_rate(sizes)) < 1e-12


@pytest.mark.slow
def test_c2_word_problem_long_words():
    base = parse_presentation(C2)
    fast = make_setup(base)
    slow = make_setup(base, realize=False)
    rng = random.Random(1)
    words = list(reduced_words(fast.double.alphabet, 6))
    words += [random_word(fast.double.alphabet, rng.randint(0, 20), rng)
              for _ in range(200)]
    agree(fast, slow, words, budget=512)


@pytest.mark.slow
def test_s3_exhaustive_against_realization():
    setup = make_setup(parse_presentation(S3))
    words = words_up_to(setup.double.alphabet, 8)
    assert against_realization(setup, words) == 7686401
