# License: CeCILL-B (French BSD3-like)

"""
decide words of X(G) trivial or not
"""

from __future__ import print_function

from ..decision import make_oracle, make_setup, xg_word_problem
from ..errors import UsageError
from ..presentations import WitnessPolicy, sidki_double
from ..util import EXIT_BUDGET
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_oracle_flag,
                    add_output_flags,
                    finish,
                    prepare)

NAME = 'wp'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    psr.add_argument("--word", metavar='TEXT', action='append',
                     help="word over G and its barred copy, eg. "
                     "\"[a, a~]\" (repeatable)")
    psr.add_argument("--no-realize", action='store_true', default=None,
                     help="use the searches even when the double "
                     "enumerates")
    add_oracle_flag(psr)
    add_budget_flags(psr, witness=True, budget=True)
    add_output_flags(psr)
    psr.set_defaults(func=main)


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args)
    if not args.word:
        raise UsageError('give at least one --word')
    oracle = make_oracle(pres, args.oracle or 'auto',
                         max_cosets=runcfg.max_cosets)
    double = None
    if runcfg.witness is not None:
        double = sidki_double(pres, policy=WitnessPolicy.parse(runcfg.witness),
                              max_cosets=runcfg.max_cosets)
    setup = make_setup(pres, oracle=oracle, double=double,
                       realize=not args.no_realize,
                       max_cosets=runcfg.max_cosets)
    results = []
    summary = []
    for text in args.word:
        word = setup.double.word(text)
        verdict = xg_word_problem(setup, word, budget=runcfg.budget)
        results.append(dict(verdict.to_json(), word=text))
        summary.append('{}: {} ({})'.format(text, verdict.kind,
                                            verdict.method))
    body = {'group': str(pres), 'double': str(setup.double),
            'verdicts': results}
    code = finish(NAME, runcfg, body, summary)
    if any(r['verdict'] == 'unknown' for r in results):
        return EXIT_BUDGET
    return code
