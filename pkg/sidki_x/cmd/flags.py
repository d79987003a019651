# License: CeCILL-B (French BSD3-like)

"""
Flags shared by several subcommands, and the common report epilogue
"""

from __future__ import print_function
import logging

from ..config.common import run_config
from ..enumerator import STRATEGIES
from ..errors import UsageError
from ..util import (EXIT_CHECK_FAILED,
                    EXIT_OK,
                    make_report,
                    read_presentation,
                    write_report)

_log = logging.getLogger(__name__)

ORACLES = ('auto', 'finite', 'free', 'abelian', 'heisenberg')


def add_input_flags(psr):
    """
    -p/--presentation and --file (one of them)
    """
    grp = psr.add_mutually_exclusive_group()
    grp.add_argument("-p", "--presentation", metavar='TEXT',
                     help='inline presentation, eg. "< a | a^2 >"')
    grp.add_argument("--file", metavar='PATH',
                     help="file holding a presentation (text or JSON)")


def add_budget_flags(psr, witness=False, budget=False):
    """
    Enumeration budgets, plus the witness policy and word-problem budget
    where they mean something
    """
    psr.add_argument("--max-cosets", metavar='N', type=int,
                     help="live cosets allowed per enumeration")
    psr.add_argument("--guard", metavar='N', type=int,
                     help="largest group order for element-set methods")
    psr.add_argument("--table-guard", metavar='N', type=int,
                     help="largest group order for a dense Cayley table")
    psr.add_argument("--strategy", choices=STRATEGIES,
                     help="coset enumeration strategy")
    if witness:
        psr.add_argument("--witness", metavar='POLICY',
                         help="witness words of the double: all or len:k")
    if budget:
        psr.add_argument("--budget", metavar='N', type=int,
                         help="work units for the word-problem search")


def add_output_flags(psr):
    """
    --json, --config, --n-jobs
    """
    psr.add_argument("--json", metavar='PATH',
                     help="write the JSON report here ('-' for stdout)")
    psr.add_argument("--config", metavar='PATH',
                     help="JSON file of flag → value defaults")
    psr.add_argument("--n-jobs", type=int,
                     help="number of jobs (-1 for max, "
                     "2+ for parallel, "
                     "1 for sequential [DEFAULT])")


def add_oracle_flag(psr):
    """
    --oracle: how to solve the word problem in G
    """
    psr.add_argument("--oracle", choices=ORACLES,
                     help="word problem of G: finite (coset table), free, "
                     "abelian, heisenberg; auto picks free for "
                     "presentations without relators, finite otherwise")


def prepare(args, required=True):
    """
    The RunConfig and the presentation (None when it is optional and
    was not given)
    """
    runcfg = run_config(args)
    if getattr(args, 'presentation', None) is None and \
            getattr(args, 'file', None) is None:
        if required:
            raise UsageError('a presentation is needed (-p or --file)')
        return runcfg, None
    return runcfg, read_presentation(args)


def finish(name, runcfg, body, summary, passed=True):
    """
    Print the human summary, write the report, and return the exit code

    Parameters
    ----------
    summary: list of string
        Lines for standard output
    passed: bool
        False if a mathematical assertion failed
    """
    for line in summary:
        print(line)
    report = make_report(name, runcfg, body)
    if runcfg.output is not None:
        write_report(report, runcfg.output)
        if runcfg.output != '-':
            _log.info('report written to %s', runcfg.output)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def check_lines(checks):
    """
    One summary line per check entry ({name, pass, witness})
    """
    lines = []
    for check in checks:
        status = 'ok' if check['pass'] else 'FAIL'
        line = '  {:28} {}'.format(check['name'], status)
        if check.get('witness'):
            line += ' ({})'.format(check['witness'])
        lines.append(line)
    return lines
