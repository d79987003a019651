# License: CeCILL-B (French BSD3-like)


"""
Miscellaneous utility functions: run directories, reports, exit codes
"""

from __future__ import print_function
import json
import os
import sys
import time

from .errors import ConfigError, SidkiError, UsageError
from .local import (HARNESS_NAME,
                    LOCAL_TMP,
                    REPORT_VERSION)
from .presentations import Presentation, parse_presentation
from .words import Word, render

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


def timestamp():
    """
    Current time as a directory-friendly string
    """
    return time.strftime("%Y-%m-%dT%H%M%S")


def current_tmp():
    """
    Directory for the current run
    """
    return os.path.join(LOCAL_TMP, timestamp())


def latest_tmp():
    """
    Directory for last run (usually a symlink)
    """
    return os.path.join(LOCAL_TMP, "latest")


def subdirs(parent):
    """
    Immediate subdirectories of `parent` (empty if it does not exist)
    """
    if not os.path.isdir(parent):
        return []
    return [os.path.join(parent, name) for name in os.listdir(parent)
            if os.path.isdir(os.path.join(parent, name))]


def link_latest(run_dir):
    """
    Point `latest_tmp()` at `run_dir`
    """
    latest = latest_tmp()
    if os.path.islink(latest):
        os.unlink(latest)
    elif os.path.exists(latest):
        raise ConfigError('{} exists and is not a symlink'.format(latest))
    os.symlink(os.path.basename(os.path.normpath(run_dir)), latest)

# ---------------------------------------------------------------------
# input
# ---------------------------------------------------------------------


def read_presentation(args):
    """
    The presentation given on the command line, inline (`-p`) or in a
    file (`--file`, presentation text or its JSON form)
    """
    text = getattr(args, 'presentation', None)
    path = getattr(args, 'file', None)
    if text is not None and path is not None:
        raise UsageError('give either -p or --file, not both')
    if path is not None:
        try:
            with open(path) as stream:
                text = stream.read()
        except IOError as err:
            raise UsageError('cannot read {}: {}'.format(path, err))
    if text is None:
        raise UsageError('a presentation is needed (-p or --file)')
    if text.lstrip().startswith('{'):
        try:
            return Presentation.from_json(json.loads(text))
        except ValueError as err:
            raise UsageError('bad presentation JSON: {}'.format(err))
    return parse_presentation(text)

# ---------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------


def jsonable(value):
    """
    Plain JSON types for a report value (numpy scalars, words, tuples
    and namedtuples included)
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if hasattr(value, 'to_json'):
        return jsonable(value.to_json())
    if hasattr(value, '_asdict'):
        return jsonable(value._asdict())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, Word):
        return render(value)
    if hasattr(value, 'tolist'):
        return value.tolist()
    return value


def make_report(command, runcfg, body):
    """
    Wrap a command's result with the schema version and the config
    """
    return {'version': REPORT_VERSION,
            'command': command,
            'config': jsonable(runcfg._asdict()),
            'result': jsonable(body)}


def dump_report(report):
    """
    Serialized report: sorted keys, fixed indentation, no timestamps
    """
    return json.dumps(report, sort_keys=True, indent=2,
                      ensure_ascii=False) + '\n'


def write_report(report, path):
    """
    Write a report to `path`, or standard output for '-'
    """
    text = dump_report(report)
    if path == '-':
        sys.stdout.write(text)
        return
    parent = os.path.dirname(path)
    if parent and not os.path.exists(parent):
        os.makedirs(parent)
    with open(path, 'w') as stream:
        stream.write(text)

# ---------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------


def exit_code(err):
    """
    0, or the code of the error family (1 check, 2 budget, 3 usage)
    """
    if err is None:
        return EXIT_OK
    if isinstance(err, SidkiError):
        return err.exit_code
    return EXIT_CHECK_FAILED


def exit_error(err):
    """
    Complain about `err` on standard error and leave with its code
    """
    print('{}: {}'.format(HARNESS_NAME, err), file=sys.stderr)
    sys.exit(exit_code(err))
