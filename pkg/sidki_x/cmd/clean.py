# License: CeCILL-B (French BSD3-like)

"""
remove old suite run directories (keeps the latest)
"""

from __future__ import print_function
from os import path as fp
import os
import shutil

from ..local import LOCAL_TMP
from ..util import EXIT_OK, subdirs

NAME = 'clean'


def config_argparser(parser):
    """
    Subcommand flags.

    You should create and pass in the subparser to which the flags
    are to be added.
    """
    parser.add_argument("--dry-run", action='store_true',
                        help="only list what would go")
    parser.set_defaults(func=main)


def main(args):
    """
    Subcommand main.

    You shouldn't need to call this yourself if you're using
    `config_argparser`
    """
    latest = fp.join(LOCAL_TMP, "latest")
    keep = fp.realpath(latest) if fp.islink(latest) else None
    for run_dir in sorted(subdirs(LOCAL_TMP)):
        if fp.basename(run_dir) == "latest" or fp.islink(run_dir):
            continue
        if fp.realpath(run_dir) == keep:
            continue
        print(run_dir)
        if not args.dry_run:
            shutil.rmtree(run_dir)
    if keep is not None and not fp.exists(keep):
        os.unlink(latest)
    return EXIT_OK
