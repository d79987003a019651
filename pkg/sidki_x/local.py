"""
Budgets, guards and settings used by sidki-x
In the future we may move this to a proper configuration file.
"""

# License: CeCILL-B (French BSD3-like)

from __future__ import print_function
from collections import namedtuple

# PATHS

LOCAL_TMP = 'TMP'
"""Suite reports; one timestamped directory per run, plus a `latest`
symlink. Things we may want to hold on to (eg. for weeks), but could
live with throwing away as needed"""

# BUDGETS

MAX_COSETS = 10 ** 6
"""Live cosets allowed during a coset enumeration. Exceeding it means
"increase the budget or shrink the instance"."""

ORDER_GUARD = 10 ** 5
"""Largest group order for which we are willing to list elements.
Anything bigger goes through stabilizer chains (order, membership) or
is refused (Engel checks, intersections)."""

TABLE_GUARD = 4096
"""Largest group order for which a dense Cayley table is built. Between
this and ORDER_GUARD, element-wise methods still work, just slower."""

WP_BUDGET = 2 ** 14
"""Work units the word-problem dovetail may spend before answering
Unknown. One unit is one word built by relator insertion, one coset
defined by a quotient enumeration, or one point of a random permutation
image."""

ENUMERATION_STRATEGY = 'hlt'
"""Coset enumeration strategy: 'hlt' (relator scanning with lookahead)
or 'felsch' (deduction stack)"""

WITNESS_POLICY = None
"""Witness words for [w, w̄] in the double. None means every element of G
when G enumerates, falling back to FALLBACK_LENGTH_BOUND; otherwise
'all' or 'len:k'"""

FALLBACK_LENGTH_BOUND = 2
"""Length bound for witness words when G does not enumerate"""

ELL_EXHAUSTIVE_LIMIT = 100
"""The ℓ-identities are checked on every pair (u, x) when |G| is at most
this; otherwise on ELL_SAMPLES random pairs"""

ELL_SAMPLES = 2000
"""Pairs sampled for the ℓ-identities on larger groups"""

D_GENERATION_LIMIT = 16
"""Largest |G| for which D is also generated from every element commutator
[g, h̄] (n² generators) to compare with the normal closure"""

DL_SAMPLES = 64
"""Random pairs from D × L checked for commutation, on top of generators"""

ENGEL_CAP = 32
"""Largest Engel class tried before declaring a group not Engel"""

AREA_SEARCH_GUARD = 10 ** 6
"""Largest number of factor tuples the minimal-area search lists on one
side of its meet-in-the-middle split"""

RANDOM_SEED = 0
"""Seed for every random choice (sampled pairs, random quotients), so that
reports are reproducible"""

# REPORTS

REPORT_VERSION = 1
"""JSON report schema version; bump on breaking changes"""

HARNESS_NAME = 'sidki-x'

# SUITE

SuiteEntry = namedtuple('SuiteEntry', ['name', 'presentation', 'slow'])
"""A named presentation in the verification suite. `slow` entries only
run on request."""

SUITE = [
    SuiteEntry('C2', '< a | a^2 >', False),
    SuiteEntry('C3', '< a | a^3 >', False),
    SuiteEntry('C2xC2', '< a, b | a^2, b^2, [a, b] >', False),
    SuiteEntry('C4', '< a | a^4 >', False),
    SuiteEntry('S3', '< a, b | a^2, b^2, (a*b)^3 >', False),
    SuiteEntry('D4', '< a, b | a^4, b^2, (a*b)^2 >', False),
    SuiteEntry('Q8', '< a, b | a^4, a^2 = b^2, b^-1*a*b*a >', False),
    SuiteEntry('A5', '< a, b | a^2, b^3, (a*b)^5 >', True),
]
"""Groups the `verify` suite runs through.

HINT: comment out entries to shorten a run
"""


def print_suite():
    """
    Print out the suite, one presentation per line
    """
    for entry in SUITE:
        print('{:8} {}{}'.format(entry.name, entry.presentation,
                                  ' (slow)' if entry.slow else ''))

if __name__ == '__main__':
    print_suite()
