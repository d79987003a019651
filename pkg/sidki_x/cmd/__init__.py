"""
sidki-x subcommands
"""

# License: CeCILL-B (French BSD3)

from __future__ import print_function
import argparse
import logging
import sys

from ..errors import SidkiError
from ..util import EXIT_USAGE, exit_error
from . import (area,
               clean,
               double,
               engel,
               growth,
               modules,
               parse,
               realize,
               verify,
               wp)


SUBCOMMANDS =\
    [
        parse,
        double,
        realize,
        verify,
        engel,
        modules,
        wp,
        growth,
        area,
        clean,
    ]


class ArgumentParser(argparse.ArgumentParser):
    """
    Usage errors leave with exit code 3 instead of argparse's 2, which
    we keep for exhausted budgets
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        print('{}: error: {}'.format(self.prog, message), file=sys.stderr)
        sys.exit(EXIT_USAGE)


def make_parser():
    """
    The top-level parser with one subparser per subcommand
    """
    psr = ArgumentParser(prog='sidki-x',
                         description='weak commutativity groups X(G): '
                         'construction, realization and checks')
    verbosity = psr.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true",
                           help="debug output on stderr")
    verbosity.add_argument("--quiet", "-q", action="store_true",
                           help="warnings and errors only")
    subparsers = psr.add_subparsers(title='subcommands',
                                    parser_class=ArgumentParser)
    for module in SUBCOMMANDS:
        subparser = subparsers.add_parser(module.NAME,
                                          help=module.__doc__.strip())
        module.config_argparser(subparser)
    return psr


def configure_logging(args):
    """
    Root handler on stderr: DEBUG with --verbose, WARNING with --quiet,
    INFO otherwise
    """
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    """
    Run a subcommand and return its exit code
    """
    psr = make_parser()
    args = psr.parse_args(argv)
    if not hasattr(args, 'func'):
        psr.print_help(sys.stderr)
        return EXIT_USAGE
    configure_logging(args)
    try:
        return args.func(args)
    except SidkiError as err:
        exit_error(err)
