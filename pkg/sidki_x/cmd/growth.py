# License: CeCILL-B (French BSD3-like)

"""
ball sizes of G or X(G) and a guess at the growth type
"""

from __future__ import print_function

from ..decision import (ball_sizes,
                        double_oracle,
                        growth_report,
                        make_oracle,
                        make_setup)
from ..errors import UsageError
from .flags import (add_budget_flags,
                    add_input_flags,
                    add_oracle_flag,
                    add_output_flags,
                    finish,
                    prepare)

NAME = 'growth'

DEFAULT_RADIUS = 6


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    psr.add_argument("--double", action='store_true', default=None,
                     help="balls of X(G) over the generators and their "
                     "barred copies")
    psr.add_argument("--radius", metavar='N', type=int,
                     help="largest radius [DEFAULT: {}]".format(
                         DEFAULT_RADIUS))
    add_oracle_flag(psr)
    add_budget_flags(psr, budget=True)
    add_output_flags(psr)
    psr.set_defaults(func=main)


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args)
    radius = DEFAULT_RADIUS if args.radius is None else int(args.radius)
    if radius < 3:
        raise UsageError('growth needs a radius of at least 3')
    oracle = make_oracle(pres, args.oracle or 'auto',
                         max_cosets=runcfg.max_cosets)
    if args.double:
        setup = make_setup(pres, oracle=oracle,
                           max_cosets=runcfg.max_cosets)
        oracle = double_oracle(setup, budget=runcfg.budget)
        gens = setup.double.generator_words()
    else:
        gens = pres.generator_words()
    sizes = ball_sizes(gens, oracle, radius)
    report = growth_report(gens, sizes)
    growth = report['classification']
    summary = ['sizes: ' + ', '.join(str(s) for s in sizes),
               'growth: {} {} (heuristic)'.format(growth['kind'],
                                                  growth['value']),
               'rate estimate: {:.4f}'.format(report['growth_rate'])]
    return finish(NAME, runcfg, report, summary)
