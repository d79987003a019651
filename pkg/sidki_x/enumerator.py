# License: CeCILL-B (French BSD3-like)

"""
Todd–Coxeter coset enumeration

Two strategies are available: HLT (scan every relator at every live
coset, defining as needed, with a lookahead pass when the coset budget
runs out) and Felsch (define one entry at a time and chase its
consequences through a deduction stack).

Columns follow the `Alphabet` convention: generator i in column 2i, its
inverse in column 2i + 1.
"""

from __future__ import print_function
import logging

import numpy as np

from .errors import CheckFailure, Overflow, UsageError
from .local import ENUMERATION_STRATEGY, MAX_COSETS
from .words import IDENTITY, Word

_log = logging.getLogger(__name__)

STRATEGIES = ('hlt', 'felsch')


class _TableFull(Exception):
    "the coset budget would be exceeded by one more definition"


def _inv(col):
    return col ^ 1


class _Enumeration(object):
    """
    Mutable working state of an enumeration

    `table[c][x]` is the coset c·x (or None); `parent` is the union-find
    forest recording coincidences, a coset being live iff it is its own
    parent.
    """

    def __init__(self, alphabet, relators, subgens, max_cosets, felsch,
                 max_defined=None):
        self.ncols = 2 * len(alphabet)
        self.relators = [[alphabet.column(s) for s in r] for r in relators]
        self.subgens = [[alphabet.column(s) for s in w] for w in subgens]
        self.max_cosets = max_cosets
        self.max_defined = max_defined
        self.felsch = felsch
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.deductions = []
        if felsch:
            # relator rotations indexed by their first column
            self.by_first = [[] for _ in range(self.ncols)]
            for rel in self.relators:
                for k in range(len(rel)):
                    rot = rel[k:] + rel[:k]
                    self.by_first[rot[0]].append(rot)
                    inv = [_inv(c) for c in reversed(rot)]
                    self.by_first[inv[0]].append(inv)

    # ------------------------------------------------------
    # primitive moves
    # ------------------------------------------------------

    def is_live(self, coset):
        "true if the coset has not been merged away"
        return self.parent[coset] == coset

    def define(self, coset, col):
        "new coset for the empty entry (coset, col)"
        if self.max_defined is not None and \
                len(self.table) >= self.max_defined:
            raise Overflow(self.max_defined, defined=len(self.table))
        if self.live >= self.max_cosets:
            raise _TableFull()
        new = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(new)
        self.live += 1
        self.table[coset][col] = new
        self.table[new][_inv(col)] = coset
        if self.felsch:
            self.deductions.append((coset, col))
        return new

    def _deduce(self, left, col, right):
        self.table[left][col] = right
        self.table[right][_inv(col)] = left
        if self.felsch:
            self.deductions.append((left, col))

    def rep(self, coset):
        "live representative, with path compression"
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            nxt = self.parent[coset]
            self.parent[coset] = root
            coset = nxt
        return root

    def _merge(self, left, right, queue):
        left, right = self.rep(left), self.rep(right)
        if left != right:
            low, high = min(left, right), max(left, right)
            self.parent[high] = low
            self.live -= 1
            queue.append(high)

    def coincidence(self, left, right):
        "identify two cosets and everything that follows"
        queue = []
        self._merge(left, right, queue)
        done = 0
        while done < len(queue):
            gamma = queue[done]
            done += 1
            row = self.table[gamma]
            for col in range(self.ncols):
                delta = row[col]
                if delta is None:
                    continue
                self.table[delta][_inv(col)] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if self.table[mu][col] is not None:
                    self._merge(nu, self.table[mu][col], queue)
                elif self.table[nu][_inv(col)] is not None:
                    self._merge(mu, self.table[nu][_inv(col)], queue)
                else:
                    self._deduce(mu, col, nu)

    def scan(self, coset, word, fill=False):
        """
        Trace `word` from `coset` forwards and backwards; close the gap
        by a deduction or a coincidence, or, when `fill` is set, by
        defining new cosets
        """
        table = self.table
        f, b = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][_inv(word[j])] is not None:
                b = table[b][_inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self._deduce(f, word[i], b)
                return
            if not fill:
                return
            self.define(f, word[i])

    def lookahead(self):
        "scan every relator at every live coset without defining"
        _log.debug('lookahead at %d live cosets', self.live)
        for coset in range(len(self.table)):
            for rel in self.relators:
                if not self.is_live(coset):
                    break
                self.scan(coset, rel)

    def process_deductions(self):
        "Felsch: chase every pending deduction through the relators"
        while self.deductions:
            coset, col = self.deductions.pop()
            if self.is_live(coset):
                for rot in self.by_first[col]:
                    if not self.is_live(coset):
                        break
                    self.scan(coset, rot)
            other = self.table[coset][col] if self.is_live(coset) else None
            if other is not None and self.is_live(other):
                for rot in self.by_first[_inv(col)]:
                    if not self.is_live(other):
                        break
                    self.scan(other, rot)

    # ------------------------------------------------------
    # strategies
    # ------------------------------------------------------

    def run_hlt(self):
        "relator-based enumeration"
        for word in self.subgens:
            while not self._guarded(lambda w=word: self.scan(0, w, fill=True)):
                pass
        coset = 0
        while coset < len(self.table):
            if self.is_live(coset):
                done = self._guarded(lambda c=coset: self._hlt_row(c))
                if not done:
                    continue
            coset += 1

    def _hlt_row(self, coset):
        for rel in self.relators:
            self.scan(coset, rel, fill=True)
            if not self.is_live(coset):
                return
        for col in range(self.ncols):
            if self.is_live(coset) and self.table[coset][col] is None:
                self.define(coset, col)

    def _guarded(self, step):
        """
        Run a step; on a full table, look ahead and report whether the
        step must be retried
        """
        try:
            step()
            return True
        except _TableFull:
            before = self.live
            self.lookahead()
            if self.live >= before:
                raise Overflow(self.max_cosets, defined=len(self.table))
            return False

    def run_felsch(self):
        "definition-by-definition enumeration"
        try:
            for word in self.subgens:
                self.scan(0, word, fill=True)
            self.process_deductions()
            for rel in self.relators:
                self.scan(0, rel, fill=True)
                self.process_deductions()
            coset = 0
            while coset < len(self.table):
                for col in range(self.ncols):
                    if not self.is_live(coset):
                        break
                    if self.table[coset][col] is None:
                        self.define(coset, col)
                        self.process_deductions()
                coset += 1
        except _TableFull:
            raise Overflow(self.max_cosets, defined=len(self.table))
        # deductions pushed during coincidences are already chased; this
        # pass only confirms closure
        changed = True
        while changed:
            before = self.live
            self.lookahead()
            changed = self.live != before

    # ------------------------------------------------------
    # output
    # ------------------------------------------------------

    def standardized(self):
        """
        Live cosets renumbered in order of first appearance when the
        table is read row by row, with the Schreier tree of that reading

        Returns
        -------
        table: list of list of int
        tree: list of (parent coset, column) or None for coset 0
        """
        order = [0]
        number = {0: 0}
        tree = [None]
        pos = 0
        while pos < len(order):
            old = order[pos]
            for col in range(self.ncols):
                entry = self.table[old][col]
                if entry is None:
                    raise CheckFailure('closed coset table',
                                       'coset {} column {}'.format(old, col))
                entry = self.rep(entry)
                if entry not in number:
                    number[entry] = len(order)
                    order.append(entry)
                    tree.append((pos, col))
            pos += 1
        res = [[number[self.rep(self.table[old][col])]
                for col in range(self.ncols)] for old in order]
        return res, tree


def enumerate_cosets(pres, subgens=(), max_cosets=MAX_COSETS,
                     strategy=ENUMERATION_STRATEGY, max_defined=None):
    """
    Enumerate the cosets of ⟨subgens⟩ in the group presented by `pres`

    Parameters
    ----------
    pres: Presentation
    subgens: sequence of Word
        Over the presentation's alphabet
    max_cosets: int
        Live cosets allowed at any one time
    max_defined: int or None
        Cosets that may be defined in all, counting those later merged
        away; bounds the work of an enumeration that never closes
    strategy: 'hlt' or 'felsch'

    Returns
    -------
    table: CosetTable

    Raises
    ------
    Overflow
    """
    if strategy not in STRATEGIES:
        raise UsageError('unknown enumeration strategy {!r}'.format(strategy))
    subgens = [Word(w, alphabet=pres.alphabet) for w in subgens]
    work = _Enumeration(pres.alphabet, pres.relators, subgens, max_cosets,
                        felsch=(strategy == 'felsch'),
                        max_defined=max_defined)
    _log.debug('enumerating %s over %d subgroup generators (%s, budget %d)',
               pres, len(subgens), strategy, max_cosets)
    if strategy == 'felsch':
        work.run_felsch()
    else:
        work.run_hlt()
    rows, tree = work.standardized()
    res = CosetTable(pres, subgens, np.array(rows, dtype=np.int64), tree)
    _log.info('enumeration finished with %d cosets', res.n_cosets)
    return res


class CosetTable(object):
    """
    A closed coset table

    Attributes
    ----------
    presentation: Presentation
    subgroup_words: list of Word
    table: ndarray (n_cosets × 2·generators) of int
    """

    def __init__(self, presentation, subgroup_words, table, tree=None):
        self.presentation = presentation
        self.alphabet = presentation.alphabet
        self.subgroup_words = list(subgroup_words)
        self.table = table
        self._tree = tree
        self._reps = None

    @property
    def n_cosets(self):
        "index of the subgroup"
        return self.table.shape[0]

    def act(self, coset, word):
        "coset · word"
        for sym in word:
            coset = self.table[coset, self.alphabet.column(sym)]
        return int(coset)

    def coset_of(self, word):
        "the coset H·word"
        return self.act(0, word)

    def word_image(self, word):
        """
        The permutation induced by `word`: image[c] = c · word
        """
        img = np.arange(self.n_cosets)
        for sym in Word(word, alphabet=self.alphabet):
            img = self.table[img, self.alphabet.column(sym)]
        return img

    def generator_perms(self):
        "one permutation per generator, in alphabet order"
        return [self.table[:, 2 * i].copy() for i in range(len(self.alphabet))]

    def perm_realization(self, **kwargs):
        """
        The permutation group generated by the generators' coset
        permutations (regular when the subgroup is trivial)
        """
        from .permgroups import PermGroup
        return PermGroup(self.generator_perms(), **kwargs)

    def representatives(self):
        """
        One word per coset, read off the Schreier tree of the table
        """
        if self._reps is None:
            tree = self._tree
            if tree is None:
                tree = _schreier_tree(self.table)
            reps = [IDENTITY]
            for parent, col in tree[1:]:
                reps.append(reps[parent] * Word([self.alphabet.symbol(col)]))
            self._reps = reps
        return self._reps

    def check(self):
        """
        Every relator fixes every coset and every subgroup generator
        fixes coset 0; raise CheckFailure otherwise
        """
        for rel in self.presentation.relators:
            moved = np.nonzero(self.word_image(rel) != np.arange(
                self.n_cosets))[0]
            if moved.size:
                raise CheckFailure('relators act trivially',
                                   '{} moves coset {}'.format(rel, moved[0]))
        for word in self.subgroup_words:
            if self.coset_of(word) != 0:
                raise CheckFailure('subgroup fixes coset 0', str(word))
        return True

    def to_json(self):
        "{n_cosets, generator → one-line permutation}"
        gens = {}
        for (name, bar), perm in zip(self.alphabet.generators,
                                     self.generator_perms()):
            key = name + ('~' if bar else '')
            gens[key] = [int(x) for x in perm]
        return {'n_cosets': self.n_cosets,
                'subgroup': [str(w) for w in self.subgroup_words],
                'generators': gens}


def _schreier_tree(table):
    tree = [None]
    seen = {0}
    order = [0]
    pos = 0
    while pos < len(order):
        coset = order[pos]
        for col in range(table.shape[1]):
            nxt = int(table[coset, col])
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                tree.append((coset, col))
        pos += 1
    # reorder so that tree[k] describes coset k
    res = [None] * len(order)
    for coset, edge in zip(order, tree):
        res[coset] = edge
    return res
