# License: CeCILL-B (French BSD3-like)

"""
enumerate G (or its double) and report the permutation realization
"""

from __future__ import print_function

from ..enumerator import enumerate_cosets
from ..presentations import WitnessPolicy, sidki_double
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_output_flags,
                    finish,
                    prepare)

NAME = 'realize'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    psr.add_argument("--double", action='store_true', default=None,
                     help="realize X(G) instead of G")
    psr.add_argument("--subgroup", metavar='WORD', action='append',
                     help="enumerate the cosets of the subgroup these "
                     "words generate (repeatable)")
    psr.add_argument("--tables", action='store_true', default=None,
                     help="include the generator permutations in the "
                     "report")
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
    if args.double:
        policy = None if runcfg.witness is None \
            else WitnessPolicy.parse(runcfg.witness)
        pres = sidki_double(pres, policy=policy,
                            max_cosets=runcfg.max_cosets)
    subgens = [pres.word(text) for text in (args.subgroup or [])]
    table = enumerate_cosets(pres, subgens=subgens,
                             max_cosets=runcfg.max_cosets,
                             strategy=runcfg.strategy)
    table.check()
    group = table.perm_realization(guard=runcfg.guard,
                                   table_guard=runcfg.table_guard)
    order = group.order()
    body = {'presentation': pres.to_json(),
            'n_cosets': table.n_cosets,
            'order': order,
            'degree': group.degree}
    if args.tables:
        body['table'] = table.to_json()
    summary = [str(pres),
               'cosets: {}'.format(table.n_cosets),
               'order of the permutation group: {}'.format(order)]
    return finish(NAME, runcfg, body, summary)
