# License: CeCILL-B (French BSD3-like)

"""
Engel bound for X(G): m = n + d + s + 3, checked on the realization
"""

from __future__ import print_function

from ..local import ENGEL_CAP
from ..sidki import build, engel_certificate
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_output_flags,
                    finish,
                    prepare)

NAME = 'engel'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    psr.add_argument("--cap", metavar='N', type=int,
                     help="largest Engel class tried for G "
                     "[DEFAULT: {}]".format(ENGEL_CAP))
    add_budget_flags(psr)
    add_output_flags(psr)
    psr.set_defaults(func=main)


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args)
    xreal = build(pres, max_cosets=runcfg.max_cosets,
                  strategy=runcfg.strategy, guard=runcfg.guard,
                  table_guard=runcfg.table_guard, check=False)
    cert = engel_certificate(xreal, cap=args.cap or ENGEL_CAP)
    summary = [str(pres),
               'G is {n}-Engel, G/G″ has class {d}, the action on L/L′ '
               'has class {s}'.format(**cert),
               'X(G) is {m}-Engel: {verdict} (least class '
               '{least_X_class})'.format(**cert)]
    return finish(NAME, runcfg, cert, summary, passed=cert['verdict'])
