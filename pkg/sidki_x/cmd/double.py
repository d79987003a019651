# License: CeCILL-B (French BSD3-like)

"""
build the presentation of the double X(G)
"""

from __future__ import print_function

from ..presentations import WitnessPolicy, sidki_double
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_output_flags,
                    finish,
                    prepare)

NAME = 'double'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    add_budget_flags(psr, witness=True)
    add_output_flags(psr)
    psr.set_defaults(func=main)


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args)
    policy = None if runcfg.witness is None \
        else WitnessPolicy.parse(runcfg.witness)
    double = sidki_double(pres, policy=policy, max_cosets=runcfg.max_cosets)
    summary = [str(double),
               'witness policy: {}'.format(double.meta['witness_policy'])]
    if double.meta.get('may_be_proper_preimage'):
        summary.append('(length-bounded witnesses: may present a proper '
                       'pre-image of X(G))')
    return finish(NAME, runcfg, {'double': double.to_json()}, summary)
