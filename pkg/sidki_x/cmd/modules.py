# License: CeCILL-B (French BSD3-like)

"""
module structure: L/L′ against Aug(ZG)/I2, W, N and M
"""

from __future__ import print_function

from ..sidki import build
from ..zqmodules import l_module_checks, w_structure_checks
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_output_flags,
                    check_lines,
                    finish,
                    prepare)

NAME = 'modules'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    add_budget_flags(psr)
    add_output_flags(psr)
    psr.set_defaults(func=main)


def _factors(doc):
    factors = [str(f) for f in doc['invariant_factors']]
    factors.extend(['0'] * doc['free_rank'])
    return '(' + ', '.join(factors) + ')' if factors else '0'


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
    lreport, lchecks = l_module_checks(xreal)
    wreport, wchecks = w_structure_checks(xreal)
    checks = [{'name': c.name, 'pass': bool(c.passed),
               'witness': c.witness} for c in lchecks + wchecks]
    body = {'group': str(pres), 'L_ab': lreport, 'W_structure': wreport,
            'checks': checks}
    summary = [str(pres),
               'L/L′ invariant factors: {}'.format(_factors(lreport['V'])),
               'Aug/I2 invariant factors: {}'.format(
                   _factors(lreport['aug_mod_I2'])),
               's = {}, k = {}'.format(lreport['s'], lreport['k']),
               '|W| = {}, |N| = {}, |M| = {}'.format(
                   wreport['W_order'], wreport['N_order'],
                   wreport['M_order'])]
    summary.extend(check_lines(checks))
    return finish(NAME, runcfg, body, summary,
                  passed=all(c['pass'] for c in checks))
