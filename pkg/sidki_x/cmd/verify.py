# License: CeCILL-B (French BSD3-like)

"""
build X(G) and run every structural check (one group or the suite)
"""

from __future__ import print_function

from ..errors import UsageError
from ..harness import SidkiHarness, verify
from ..util import EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_OK
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_output_flags,
                    check_lines,
                    finish,
                    prepare)

NAME = 'verify'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    psr.add_argument("--suite", action='store_true', default=None,
                     help="run the groups listed in local.py instead, "
                     "with reports in a fresh run directory")
    psr.add_argument("--only", metavar='NAME', action='append',
                     help="suite mode: only this group (repeatable)")
    psr.add_argument("--slow", action='store_true', default=None,
                     help="suite mode: include the slow groups")
    psr.add_argument("--no-engel", action='store_true', default=None,
                     help="skip the Engel certificate")
    psr.add_argument("--no-modules", action='store_true', default=None,
                     help="skip the module checks")
    add_budget_flags(psr)
    add_output_flags(psr)
    psr.set_defaults(func=main)


def _summary(report):
    orders = report['orders']
    lines = [report['group'],
             '|G| = {}, |X(G)| = {}'.format(orders['G'], orders['X'])]
    if 'W' in orders:
        lines.append('|W| = {}, |im ρ| = {}'.format(orders['W'],
                                                   orders['im_rho']))
    lines.extend(check_lines(report['checks']))
    if report.get('classes'):
        lines.append('nilpotency classes: G {G}, X(G) {X}'.format(
            **report['classes']))
    if report.get('engel'):
        lines.append('Engel: n={n} d={d} s={s} m={m} '
                     'verdict={verdict}'.format(**report['engel']))
    return lines


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args, required=False)
    if args.suite:
        if pres is not None:
            raise UsageError('--suite takes no presentation')
        summary = SidkiHarness().run(runcfg, names=args.only,
                                     include_slow=bool(args.slow))
        groups = summary['result']['groups']
        for group in groups:
            print('{:8} {}'.format(group['name'], group['status']))
        if any(g['status'] == 'budget' for g in groups) and \
                all(g['status'] in ('pass', 'budget') for g in groups):
            return EXIT_BUDGET
        if all(g['status'] == 'pass' for g in groups):
            return EXIT_OK
        return EXIT_CHECK_FAILED
    if pres is None:
        raise UsageError('a presentation is needed (-p, --file or --suite)')
    report = verify(pres, runcfg, engel=not args.no_engel,
                    modules=not args.no_modules)
    return finish(NAME, runcfg, report, _summary(report),
                  passed=report['passed'])
