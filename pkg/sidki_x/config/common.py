"""Commonly used configuration options"""

from collections import namedtuple
import json

import six

from ..enumerator import STRATEGIES
from ..errors import ConfigError
from ..local import (ENUMERATION_STRATEGY,
                     MAX_COSETS,
                     ORDER_GUARD,
                     REPORT_VERSION,
                     TABLE_GUARD,
                     WITNESS_POLICY,
                     WP_BUDGET)
from ..presentations import WitnessPolicy


def combined_key(*variants):
    """return a key from a list of objects that have a
    `key` field each"""
    return '-'.join(v if isinstance(v, six.string_types) else v.key
                    for v in variants)


RunConfig = namedtuple('RunConfig',
                       ['max_cosets', 'guard', 'table_guard', 'budget',
                        'witness', 'strategy', 'n_jobs', 'output',
                        'version'])
"""
Everything a command needs to know besides its input. It is embedded
in every report, so two runs with the same RunConfig and input give the
same report.

Parameters
----------
max_cosets: int
    Live cosets allowed in one enumeration

guard: int
    Largest group order for element-set methods

table_guard: int
    Largest group order for a dense Cayley table

budget: int
    Work units for the word-problem search

witness: string or None
    'all', 'len:k', or None for the default policy

strategy: string
    'hlt' or 'felsch'

n_jobs: int
    Parallel jobs (joblib convention; 1 is sequential)

output: string or None
    Where the JSON report goes ('-' for standard output)

version: int
    Report schema version
"""

RUN_DEFAULTS = {
    'max_cosets': MAX_COSETS,
    'guard': ORDER_GUARD,
    'table_guard': TABLE_GUARD,
    'budget': WP_BUDGET,
    'witness': WITNESS_POLICY,
    'strategy': ENUMERATION_STRATEGY,
    'n_jobs': 1,
    'json': None,
}
"""Values used when neither a flag nor the config file says otherwise"""


def config_key(flag):
    """
    Normalize a flag name ('--max-cosets', 'max-cosets', 'max_cosets')
    to the argparse destination
    """
    if not isinstance(flag, six.string_types):
        raise ConfigError('config keys are flag names, not {!r}'.format(flag))
    return flag.lstrip('-').replace('-', '_')


def load_config_file(path):
    """
    Read a flat JSON object of flag name → value

    Raises
    ------
    ConfigError
        Unreadable file, not an object, or nested values
    """
    try:
        with open(path) as stream:
            doc = json.load(stream)
    except (IOError, ValueError) as err:
        raise ConfigError('cannot read config file {}: {}'.format(path, err))
    if not isinstance(doc, dict):
        raise ConfigError('config file {} must hold a JSON object'
                          .format(path))
    res = {}
    for flag, value in doc.items():
        if isinstance(value, (dict, list)):
            raise ConfigError('config key {} must have a flat value'
                              .format(flag))
        res[config_key(flag)] = value
    return res


def merge_config(args, file_values):
    """
    Fill the flags the user did not give from the config file

    Flags left at None count as not given.

    Raises
    ------
    ConfigError
        A key that is not a flag of this command
    """
    known = vars(args)
    for key, value in sorted(file_values.items()):
        if key not in known or key in ('func', 'config'):
            raise ConfigError('unknown config key: {}'.format(key))
        if known[key] is None:
            setattr(args, key, value)
    return args


def _positive(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ConfigError('{} must be an integer (got {!r})'.format(name,
                                                                   value))
    if value <= 0:
        raise ConfigError('{} must be positive (got {})'.format(name, value))
    return value


def run_config(args):
    """
    The RunConfig for parsed command-line arguments, after merging the
    config file (if any) and the defaults

    Raises
    ------
    ConfigError
    """
    path = getattr(args, 'config', None)
    if path is not None:
        merge_config(args, load_config_file(path))
    values = {}
    for key, default in RUN_DEFAULTS.items():
        value = getattr(args, key, None)
        values[key] = default if value is None else value
    witness = values['witness']
    if witness is not None:
        WitnessPolicy.parse(witness)
    if values['strategy'] not in STRATEGIES:
        raise ConfigError('strategy must be one of {} (got {!r})'.format(
            ', '.join(STRATEGIES), values['strategy']))
    try:
        n_jobs = int(values['n_jobs'])
    except (TypeError, ValueError):
        raise ConfigError('n-jobs must be an integer')
    return RunConfig(max_cosets=_positive('max-cosets', values['max_cosets']),
                     guard=_positive('guard', values['guard']),
                     table_guard=_positive('table-guard',
                                           values['table_guard']),
                     budget=_positive('budget', values['budget']),
                     witness=witness,
                     strategy=values['strategy'],
                     n_jobs=n_jobs,
                     output=values['json'],
                     version=REPORT_VERSION)
