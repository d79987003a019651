'''
The verification harness: run the structural checks of 𝔛(G) on one
presentation, or on every group of the suite in local.py
'''
from __future__ import print_function
from collections import Counter
from os import path as fp
import logging
import os
import sys

from joblib import Parallel, delayed

from .config.common import combined_key
from .enumerator import enumerate_cosets
from .errors import BudgetError, CheckFailure, SidkiError, UsageError
from .local import SUITE
from .presentations import parse_presentation
from .sidki import (build,
                    build_perfect,
                    report_passed,
                    structural_checks,
                    verification_report)
from .util import (EXIT_USAGE,
                   current_tmp,
                   dump_report,
                   link_latest,
                   make_report)

_log = logging.getLogger(__name__)


def _check_entry(check):
    return {'name': check.name, 'pass': bool(check.passed),
            'witness': check.witness}


def verify(pres, runcfg, engel=True, modules=True):
    """
    Build 𝔛(G) and run every check on it

    Perfect groups go through the coset action on the split copy of G;
    everything else through the regular realization. A failed check is
    recorded in the report rather than raised.

    Returns
    -------
    report: dict
        With a `passed` key

    Raises
    ------
    BudgetError
        G or 𝔛(G) too big for the configured budgets
    """
    g_table = enumerate_cosets(pres, max_cosets=runcfg.max_cosets,
                               strategy=runcfg.strategy)
    G = g_table.perm_realization(base=(0,), order=g_table.n_cosets,
                                 guard=runcfg.guard,
                                 table_guard=runcfg.table_guard)
    if G.order() > 1 and G.is_perfect():
        _log.info('%s is perfect; using the split copy coset action', pres)
        orders, checks = build_perfect(pres, max_cosets=runcfg.max_cosets,
                                       strategy=runcfg.strategy,
                                       guard=runcfg.guard,
                                       table_guard=runcfg.table_guard)
        report = {'group': str(pres),
                  'perfect': True,
                  'orders': orders,
                  'checks': [_check_entry(c) for c in checks]}
    else:
        xreal = build(pres, max_cosets=runcfg.max_cosets,
                      strategy=runcfg.strategy, guard=runcfg.guard,
                      table_guard=runcfg.table_guard, check=False)
        checks = structural_checks(xreal)
        try:
            report = verification_report(xreal, checks, engel=engel,
                                         modules=modules)
        except CheckFailure as err:
            report = {'group': str(pres),
                      'orders': xreal.orders(),
                      'checks': [_check_entry(c) for c in checks]}
            report['checks'].append({'name': err.name, 'pass': False,
                                     'witness': err.witness})
        report['perfect'] = False
    report['passed'] = report_passed(report)
    return report


def _run_entry(entry, runcfg):
    "one suite group; errors become part of the report"
    _log.info('suite: %s started', entry.name)
    try:
        report = verify(parse_presentation(entry.presentation), runcfg)
        status = 'pass' if report['passed'] else 'fail'
    except BudgetError as err:
        report = {'group': entry.presentation, 'error': str(err)}
        status = 'budget'
    except SidkiError as err:
        report = {'group': entry.presentation, 'error': str(err)}
        status = 'error'
    _log.info('suite: %s finished (%s)', entry.name, status)
    report['name'] = entry.name
    report['status'] = status
    return report


class SidkiHarness(object):
    """Suite configuration using global vars defined in
    local.py
    """

    def __init__(self, suite=None):
        self.suite = SUITE if suite is None else suite
        self.sanity_check_config()

    def entries(self, names=None, include_slow=False):
        """
        Suite entries to run: the named ones, or every entry (slow ones
        only on request)
        """
        if names:
            unknown = set(names) - set(e.name for e in self.suite)
            if unknown:
                raise UsageError('not in the suite: {}'.format(
                    ', '.join(sorted(unknown))))
            return [e for e in self.suite if e.name in names]
        return [e for e in self.suite if include_slow or not e.slow]

    def run(self, runcfg, names=None, include_slow=False, run_dir=None):
        """
        Run the suite and write one report per group plus a summary
        into a fresh run directory

        Returns
        -------
        summary: dict
            The summary report
        """
        entries = self.entries(names, include_slow)
        results = Parallel(n_jobs=runcfg.n_jobs)(
            delayed(_run_entry)(entry, runcfg) for entry in entries)
        summary = make_report('suite', runcfg,
                              {'groups': [{'name': r['name'],
                                           'status': r['status']}
                                          for r in results]})
        fresh = run_dir is None
        run_dir = current_tmp() if fresh else run_dir
        if not fp.exists(run_dir):
            os.makedirs(run_dir)
        for result in results:
            key = combined_key('verify', result['name'])
            path = fp.join(run_dir, key + '.json')
            with open(path, 'w') as stream:
                stream.write(dump_report(make_report('verify', runcfg,
                                                     result)))
        with open(fp.join(run_dir, 'summary.json'), 'w') as stream:
            stream.write(dump_report(summary))
        if fresh:
            link_latest(run_dir)
        _log.info('suite reports in %s', run_dir)
        return summary

    # ------------------------------------------------------
    # utility
    # ------------------------------------------------------

    def sanity_check_config(self):
        """
        Die if there's anything odd about the config
        """
        name_counts = Counter(entry.name for entry in self.suite)
        bad_names = [k for k, v in name_counts.items() if v > 1]
        if bad_names:
            oops = ("Sorry, there's an error in your configuration.\n"
                    "I don't dare to start the suite until you fix it.\n"
                    "ERROR! -----------------vvvv---------------------\n"
                    "The following groups appear more than once:\n{}\n"
                    "ERROR! -----------------^^^^^--------------------"
                    "").format("\n".join(sorted(bad_names)))
            print(oops, file=sys.stderr)
            sys.exit(EXIT_USAGE)
        broken = []
        for entry in self.suite:
            try:
                parse_presentation(entry.presentation)
            except SidkiError as err:
                broken.append('{}: {}'.format(entry.name, err))
        if broken:
            oops = ("Sorry, there's an error in your configuration.\n"
                    "I don't dare to start the suite until you fix it.\n"
                    "ERROR! -----------------vvvv---------------------\n"
                    "These presentations do not parse:\n{}\n"
                    "ERROR! -----------------^^^^^--------------------\n"
                    "Hint: the suite lives in {}"
                    "").format("\n".join(broken), __package__ + '.local')
            print(oops, file=sys.stderr)
            sys.exit(EXIT_USAGE)
