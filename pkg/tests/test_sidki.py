"""
Realizations of X(G) and their structural checks
"""

import pytest

from sidki_x.errors import NotEngelError, UsageError
from sidki_x.presentations import parse_presentation
from sidki_x.sidki import (build,
                           build_perfect,
                           ell_identity_check,
                           engel_certificate,
                           nilpotence_report,
                           report_passed,
                           structural_checks,
                           verification_report)

C2 = '< a | a^2 >'
C3 = '< a | a^3 >'
V4 = '< a, b | a^2, b^2, [a, b] >'
C4 = '< a | a^4 >'
S3 = '< a, b | a^2, b^2, (a*b)^3 >'
D4 = '< a, b | a^4, b^2, (a*b)^2 >'
Q8 = '< a, b | a^4, a^2 = b^2, b^-1*a*b*a >'
A5 = '< a, b | a^2, b^3, (a*b)^5 >'


@pytest.fixture(scope='module')
def xc2():
    return build(parse_presentation(C2))


@pytest.fixture(scope='module')
def xs3():
    return build(parse_presentation(S3))


def test_c2_is_klein(xc2):
    assert xc2.X.order() == 4
    assert xc2.X.is_abelian()
    assert xc2.W.order() == 1
    assert xc2.orders()['im_rho'] == 4


def test_s3_orders(xs3):
    orders = xs3.orders()
    assert orders['G'] == 6
    assert orders['Q'] == 2
    assert orders['im_rho'] == 108
    assert xs3.G3.order() // orders['im_rho'] == 2
    assert orders['X'] == orders['W'] * orders['im_rho']


def test_splitting(xs3):
    assert xs3.L.order() * xs3.Gs.order() == xs3.X.order()
    assert xs3.Gs.order() == 6


def test_pi_restricts_to_identity_on_split_copy(xs3):
    for gen, img in zip(xs3.Gs.gens, xs3.G.gens):
        assert (xs3.pi(gen) == img).all()


def test_ell_identities(xs3):
    assert ell_identity_check(xs3)
    assert ell_identity_check(xs3, samples=50)


@pytest.mark.parametrize('text', [C2, C3, V4, C4, S3])
def test_structural_checks(text):
    xreal = build(parse_presentation(text), check=False)
    failed = [c.name for c in structural_checks(xreal) if not c.passed]
    assert failed == []


@pytest.mark.slow
@pytest.mark.parametrize('text', [D4, Q8])
def test_structural_checks_2groups(text):
    xreal = build(parse_presentation(text), check=False)
    failed = [c.name for c in structural_checks(xreal) if not c.passed]
    assert failed == []


def test_check_names_are_stable(xc2):
    names = [c.name for c in structural_checks(xc2)]
    assert names[:3] == ['commute_D_L', 'W_eq_ker_rho', 'W_central_in_DL']
    assert 'D_generation' in names
    assert 'perfect_central' not in names


def test_nilpotent_base_gives_nilpotent_double():
    xreal = build(parse_presentation(C3))
    classes = nilpotence_report(xreal)
    assert classes['G'] == 1
    assert isinstance(classes['X'], int)


def test_not_nilpotent(xs3):
    assert nilpotence_report(xs3)['G'] is None


def test_engel_certificate(xc2):
    cert = engel_certificate(xc2)
    assert cert['verdict']
    assert cert['n'] == 1
    assert cert['m'] == cert['n'] + cert['d'] + cert['s'] + 3
    assert cert['least_X_class'] <= cert['m']


def test_engel_refuses_non_engel(xs3):
    with pytest.raises(NotEngelError):
        engel_certificate(xs3, cap=6)


def test_verification_report(xs3):
    checks = structural_checks(xs3)
    report = verification_report(xs3, checks)
    assert report_passed(report)
    assert report['engel'] is None
    names = [c['name'] for c in report['checks']]
    assert 'aug_mod_I2_matches_L_ab' in names
    assert 'N_order_divides_M' in names
    assert report['modules']['M_order'] == 3


def test_report_without_modules(xc2):
    report = verification_report(xc2, structural_checks(xc2), modules=False)
    assert 'modules' not in report
    assert report['engel']['verdict']


def test_no_generators():
    with pytest.raises(UsageError):
        build(parse_presentation('< | >'))


def test_perfect_refuses_s3():
    with pytest.raises(UsageError):
        build_perfect(parse_presentation(S3))


def test_perfect_trivial_group():
    orders, checks = build_perfect(parse_presentation('< a | a >'))
    assert orders['G'] == 1
    assert orders['X'] == 1
    assert orders['W'] == 1
    assert [c.name for c in checks] == ['perfect_W_central',
                                        'perfect_im_rho',
                                        'perfect_central']
    assert all(c.passed for c in checks)


@pytest.mark.slow
def test_perfect_a5():
    orders, checks = build_perfect(parse_presentation(A5))
    assert orders['G'] == 60
    assert orders['im_rho'] == 60 ** 3
    assert all(c.passed for c in checks)
    assert 'perfect_W_central' in [c.name for c in checks]
    assert orders['W'] == orders['center']


@pytest.mark.slow
@pytest.mark.parametrize('text', [D4, Q8])
def test_engel_bound_2groups(text):
    xreal = build(parse_presentation(text))
    cert = engel_certificate(xreal)
    assert cert['verdict']
    assert cert['n'] == 2
    assert cert['d'] == 2
    assert isinstance(nilpotence_report(xreal)['X'], int)
