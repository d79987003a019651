# License: CeCILL-B (French BSD3-like)

"""
area certificates: grid, exhaustive search, central lift, distortion
"""

from __future__ import print_function

from ..decision import HeisenbergOracle
from ..errors import UsageError
from ..isoperimetry import (MinimalArea,
                            central_transform,
                            check_certificate,
                            commutator_presentation,
                            distortion_brackets,
                            grid_certificate,
                            heisenberg_extension,
                            minimal_area_search)
from ..words import render
from .flags import add_input_flags, add_output_flags, finish, prepare

NAME = 'area'

MODES = ('grid', 'search', 'central', 'distortion')


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    psr.add_argument("mode", choices=MODES,
                     help="grid: [a^n, b^n] over Z^2; search: least area "
                     "of --word over the presentation; central: lift the "
                     "grid certificate to the Heisenberg group; "
                     "distortion: length of c_n in L")
    psr.add_argument("-n", metavar='N', type=int,
                     help="size parameter (grid, central, distortion)")
    add_input_flags(psr)
    psr.add_argument("--word", metavar='TEXT',
                     help="search: the word to fill")
    psr.add_argument("--max-area", metavar='N', type=int,
                     help="search: largest area tried")
    psr.add_argument("--max-radius", metavar='N', type=int,
                     help="search: longest conjugator")
    add_output_flags(psr)
    psr.set_defaults(func=main)


def _need(value, flag):
    if value is None:
        raise UsageError('this mode needs {}'.format(flag))
    return int(value)


def _grid(args):
    n = _need(args.n, '-n')
    cert = grid_certificate(n)
    valid = check_certificate(commutator_presentation(), cert)
    body = {'n': n, 'certificate': cert.to_json(), 'valid': valid}
    summary = ['[a^{0}, b^{0}]: area {1}, radius {2}, valid: {3}'.format(
        n, cert.area, cert.radius, valid)]
    return body, summary, valid


def _search(args, pres, n_jobs):
    if pres is None:
        raise UsageError('search needs a presentation (-p or --file)')
    if args.word is None:
        raise UsageError('search needs --word')
    word = pres.word(args.word)
    res = minimal_area_search(pres, word, _need(args.max_area, '--max-area'),
                              _need(args.max_radius, '--max-radius'),
                              n_jobs=n_jobs)
    if isinstance(res, MinimalArea):
        body = {'word': render(word), 'area': res.area,
                'certificate': res.certificate.to_json()}
        summary = ['{}: area {}'.format(render(word), res.area)]
    else:
        body = {'word': render(word), 'area': None,
                'max_area': res.max_area, 'max_radius': res.max_radius,
                'reason': res.reason}
        summary = ['{}: no certificate ({})'.format(render(word),
                                                    res.reason)]
    return body, summary, True


def _central(args):
    n = _need(args.n, '-n')
    quotient, total = heisenberg_extension()
    cert = grid_certificate(n)
    lifted, central, cost = central_transform(
        quotient, total, cert, oracle=HeisenbergOracle(total.alphabet))
    valid = check_certificate(total, lifted)
    body = {'n': n, 'central_word': render(central),
            'certificate': lifted.to_json(), 'cost': cost._asdict(),
            'valid': valid}
    summary = ['[a^{0}, b^{0}] = {1} in the Heisenberg group'.format(
        n, render(central)),
        'area {} (sort {}, commute {}, relators {}, central {}), '
        'bound {} ({} at the area)'.format(
            lifted.area, cost.sort, cost.commute, cost.relators,
            cost.central, cost.bound, cost.bound_at_area)]
    return body, summary, valid and cost.total <= cost.bound


def _distortion(args):
    n = _need(args.n, '-n')
    res = distortion_brackets(n)
    summary = ['c_{n}: length {extrinsic} in X(F), at least {lower} in L, '
               'candidate of length {upper_candidate}'.format(**res)]
    return res, summary, res['projections_match'] and \
        res['certificate_checks']


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args, required=False)
    if args.mode == 'grid':
        body, summary, passed = _grid(args)
    elif args.mode == 'search':
        body, summary, passed = _search(args, pres, runcfg.n_jobs)
    elif args.mode == 'central':
        body, summary, passed = _central(args)
    else:
        body, summary, passed = _distortion(args)
    body['mode'] = args.mode
    return finish(NAME, runcfg, body, summary, passed=passed)
