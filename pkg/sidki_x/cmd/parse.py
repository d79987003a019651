# License: CeCILL-B (French BSD3-like)

"""
parse a presentation and show its normal form
"""

from __future__ import print_function

from ..presentations import abelianization
from ..words import render
from .flags import add_input_flags, add_output_flags, finish, prepare

NAME = 'parse'


def config_argparser(psr):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    add_input_flags(psr)
    psr.add_argument("--word", metavar='TEXT', action='append',
                     help="also parse this word over the presentation "
                     "(repeatable)")
    add_output_flags(psr)
    psr.set_defaults(func=main)


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    runcfg, pres = prepare(args)
    words = [pres.word(text) for text in (args.word or [])]
    ab = abelianization(pres)
    body = {'presentation': pres.to_json(),
            'abelianization': ab.to_json(),
            'words': [render(w) for w in words]}
    summary = [str(pres),
               'generators: {}, relators: {}'.format(len(pres.generators),
                                                     len(pres.relators)),
               'abelianization: {}'.format(ab)]
    summary.extend('word: {}'.format(render(w)) for w in words)
    return finish(NAME, runcfg, body, summary)
