# License: CeCILL-B (French BSD3-like)

"""
Permutation groups: orders, subgroups, series, Engel checks and
homomorphisms

Permutations are numpy integer arrays acting on the right: p[i] is the
image of point i, and the product pq means "p, then q", so that
(pq)[i] = q[p[i]].

Two engines sit behind `PermGroup`. Up to the order guard every element
is listed (and, up to the table guard, a dense Cayley table is built);
elements are identified by their images of a base. Beyond the order
guard only what sympy's stabilizer chains can answer is available:
order, membership and centre.
"""

from __future__ import print_function
from collections import namedtuple
import logging

import numpy as np

from sympy.combinatorics import Permutation, PermutationGroup

from .errors import CheckFailure, SizeGuardError, UsageError
from .local import ORDER_GUARD, TABLE_GUARD

_log = logging.getLogger(__name__)

_MEMORY_CELLS = 10 ** 8
"""Above degree × guard cells, ask the stabilizer chain for the order
before listing elements"""


NotNilpotent = namedtuple('NotNilpotent', ['stable_order'])
"""The lower central series stabilised at a nontrivial subgroup"""

ExceedsCap = namedtuple('ExceedsCap', ['cap', 'witness'])
"""No Engel class up to `cap`; witness is a pair (a, b) of element
indices still failing at the cap"""


# ---------------------------------------------------------------------
# permutations as arrays
# ---------------------------------------------------------------------


def perm_identity(degree):
    "the identity on `degree` points"
    return np.arange(degree, dtype=np.int64)


def perm_mul(left, right):
    "left, then right"
    return right[left]


def perm_inv(perm):
    "inverse permutation"
    res = np.empty_like(perm)
    res[perm] = np.arange(len(perm), dtype=perm.dtype)
    return res


def perm_commutator(left, right):
    "[x, y] = x⁻¹ y⁻¹ x y"
    return perm_mul(perm_mul(perm_mul(perm_inv(left), perm_inv(right)),
                             left), right)


def perm_conjugate(perm, by):
    "p^g = g⁻¹ p g"
    return perm_mul(perm_mul(perm_inv(by), perm), by)


def perm_order(perm):
    "order of a single permutation"
    seen = np.zeros(len(perm), dtype=bool)
    res = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
            length += 1
        res = res * length // np.gcd(res, length)
    return int(res)


def is_identity_perm(perm):
    "true for the identity"
    return bool((perm == np.arange(len(perm))).all())


def rows_mul(left, right):
    "row-wise product of two stacks of permutations"
    return np.take_along_axis(right, left, axis=1)


def rows_inv(rows):
    "row-wise inverses"
    return np.argsort(rows, axis=1)


def _from_sympy(perm, degree):
    form = list(perm.array_form)
    return np.array(form + list(range(len(form), degree)), dtype=np.int64)


def _as_perm(perm, degree=None):
    res = np.asarray(perm, dtype=np.int64)
    if res.ndim != 1 or (degree is not None and len(res) != degree):
        raise UsageError('permutation of the wrong degree')
    return res


# ---------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------


class PermGroup(object):
    """
    Permutation group given by generators

    Parameters
    ----------
    gens: sequence of permutations
        Kept in the given order (homomorphisms refer to them by index)
    degree: int, optional
        Needed when there are no generators
    base: sequence of int, optional
        Points whose images determine an element; computed with sympy
        when not given (pass (0,) for regular or semiregular groups)
    order: int, optional
        Known order (eg. the degree of a regular realization)
    guard, table_guard: int
        Order limits for listing elements and building the Cayley table
    """

    def __init__(self, gens, degree=None, base=None, order=None,
                 guard=ORDER_GUARD, table_guard=TABLE_GUARD):
        gens = [_as_perm(g) for g in gens]
        if degree is None:
            if not gens:
                raise UsageError('degree needed for a group without '
                                 'generators')
            degree = len(gens[0])
        self.degree = int(degree)
        for gen in gens:
            if len(gen) != self.degree or \
                    not (np.sort(gen) == np.arange(self.degree)).all():
                raise UsageError('generators must be permutations of '
                                 '{} points'.format(self.degree))
        self.gens = gens
        self.guard = guard
        self.table_guard = table_guard
        self._base = None if base is None else tuple(int(b) for b in base)
        self._order = order
        self._elements = None
        self._tree = None
        self._keys = None
        self._table = None
        self._inverses = None
        self._sympy = None

    def __repr__(self):
        return 'PermGroup(degree={}, gens={})'.format(self.degree,
                                                      len(self.gens))

    # ------------------------------------------------------
    # plumbing
    # ------------------------------------------------------

    @property
    def identity(self):
        "identity permutation"
        return perm_identity(self.degree)

    @property
    def base(self):
        "points whose images determine an element"
        if self._base is None:
            self._base = tuple(int(b) for b in self.to_sympy().base)
        return self._base

    def to_sympy(self):
        "the same group for sympy's stabilizer-chain algorithms"
        if self._sympy is None:
            perms = [Permutation([int(x) for x in g]) for g in self.gens] \
                or [Permutation(list(range(self.degree)))]
            self._sympy = PermutationGroup(perms)
        return self._sympy

    def _spawn(self, gens, **kwargs):
        "a group on the same points sharing our base and guards"
        return PermGroup(gens, degree=self.degree, base=self.base,
                         guard=self.guard, table_guard=self.table_guard,
                         **kwargs)

    def _keys_of(self, rows):
        """
        Hashable keys for a stack of permutations (their base images)
        """
        images = rows[:, list(self.base)] if self.base else \
            np.zeros((rows.shape[0], 0), dtype=np.int64)
        if self.degree ** max(1, len(self.base)) < 2 ** 62:
            weights = np.array([self.degree ** k
                                for k in range(len(self.base))],
                               dtype=np.int64)
            return [int(x) for x in images.dot(weights)] if self.base \
                else [0] * rows.shape[0]
        return [row.tobytes() for row in images]

    def _close(self):
        """
        List the elements by breadth-first search from the identity,
        recording the search tree
        """
        if self._order is None and self.degree * self.guard > _MEMORY_CELLS:
            self._order = int(self.to_sympy().order())
        if self._order is not None and self._order > self.guard:
            raise SizeGuardError('group of order {}'.format(self._order),
                                 self.guard)
        ident = self.identity
        elements = [ident]
        keys = {self._keys_of(ident[None, :])[0]: 0}
        parent, via = [-1], [-1]
        frontier = [0]
        while frontier:
            block = np.array([elements[i] for i in frontier])
            nxt = []
            for gidx, gen in enumerate(self.gens):
                prods = gen[block]
                for row, key, src in zip(prods, self._keys_of(prods),
                                         frontier):
                    if key in keys:
                        continue
                    keys[key] = len(elements)
                    nxt.append(len(elements))
                    elements.append(row)
                    parent.append(src)
                    via.append(gidx)
                    if len(elements) > self.guard:
                        raise SizeGuardError('group of order > {}'.format(
                            self.guard), self.guard)
            frontier = nxt
        self._elements = np.array(elements, dtype=np.int64).reshape(
            len(elements), self.degree)
        self._keys = keys
        self._tree = (parent, via)
        if self._order is not None and self._order != len(elements):
            raise CheckFailure('element count matches the known order',
                               '{} != {}'.format(len(elements), self._order))
        self._order = len(elements)

    def has_elements(self):
        "true if the element list is (or can be) available"
        try:
            self.elements()
            return True
        except SizeGuardError:
            return False

    # ------------------------------------------------------
    # elements
    # ------------------------------------------------------

    def order(self):
        "exact order"
        if self._order is None:
            try:
                self._close()
            except SizeGuardError:
                self._order = int(self.to_sympy().order())
        return self._order

    def elements(self):
        """
        Every element, identity first, as an (order × degree) array

        Raises
        ------
        SizeGuardError
        """
        if self._elements is None:
            self._close()
        return self._elements

    def tree(self):
        "(parent, generator index) of every element in the search tree"
        self.elements()
        return self._tree

    def index_of(self, rows):
        """
        Element indices of a stack of permutations, -1 for those not in
        the group
        """
        rows = np.asarray(rows, dtype=np.int64)
        single = rows.ndim == 1
        if single:
            rows = rows[None, :]
        elems = self.elements()
        res = np.array([self._keys.get(k, -1) for k in self._keys_of(rows)],
                       dtype=np.int64)
        found = res >= 0
        if found.any():
            same = (elems[res[found]] == rows[found]).all(axis=1)
            idx = np.nonzero(found)[0]
            res[idx[~same]] = -1
        return res[0] if single else res

    def contains(self, perm):
        "membership test"
        perm = _as_perm(perm, self.degree)
        if self.has_elements():
            return bool(self.index_of(perm) >= 0)
        return bool(self.to_sympy().contains(
            Permutation([int(x) for x in perm])))

    def is_trivial(self):
        "true for the trivial group"
        return all(is_identity_perm(g) for g in self.gens)

    def is_abelian(self):
        "generators commute pairwise"
        return all((perm_mul(x, y) == perm_mul(y, x)).all()
                   for i, x in enumerate(self.gens) for y in self.gens[i:])

    def table(self):
        """
        Dense Cayley table: T[i, j] is the index of element i times
        element j

        Raises
        ------
        SizeGuardError
            Above the table guard
        """
        if self._table is None:
            if self.order() > self.table_guard:
                raise SizeGuardError('Cayley table of order {}'.format(
                    self.order()), self.table_guard)
            elems = self.elements()
            m = len(elems)
            table = np.empty((m, m), dtype=np.int64)
            for j in range(m):
                table[:, j] = self.index_of(elems[j][elems])
            if (table < 0).any():
                raise CheckFailure('closure under products')
            self._table = table
            ident = np.nonzero(table == 0)
            inverses = np.empty(m, dtype=np.int64)
            inverses[ident[0]] = ident[1]
            self._inverses = inverses
        return self._table

    def inverses(self):
        "index of each element's inverse"
        self.table()
        return self._inverses

    def random_elements(self, rng, count):
        "`count` elements drawn uniformly (needs the element list)"
        elems = self.elements()
        return elems[rng.integers(0, len(elems), size=count)]

    def evaluate(self, word, alphabet):
        """
        Image of a word, letter i of `alphabet` going to generator i
        """
        res = self.identity
        for sym in word:
            gen = self.gens[alphabet.index(sym)]
            res = perm_mul(res, gen if sym.sign > 0 else perm_inv(gen))
        return res

    # ------------------------------------------------------
    # subgroups
    # ------------------------------------------------------

    def subgroup(self, gens):
        "⟨gens⟩"
        return self._spawn([_as_perm(g, self.degree) for g in gens])

    def from_elements(self, rows):
        """
        The subgroup whose element list is `rows` (assumed closed), with
        a small generating set picked greedily
        """
        res = self._spawn([])
        gens = []
        for row in rows:
            if not res.contains(row):
                gens.append(row)
                res = self._spawn(list(gens))
        if res.order() != len(rows):
            raise CheckFailure('element set is a subgroup',
                               '{} listed, {} generated'.format(
                                   len(rows), res.order()))
        return res

    def is_subgroup_of(self, other):
        "every generator lies in `other`"
        return all(other.contains(g) for g in self.gens)

    def normal_closure(self, gens):
        """
        Smallest subgroup containing `gens` and closed under conjugation
        by our generators
        """
        gens = [_as_perm(g, self.degree) for g in gens]
        res = self._spawn(list(gens))
        while True:
            fresh = []
            for h in res.gens:
                for s in self.gens:
                    conj = perm_conjugate(h, s)
                    if not res.contains(conj) and \
                            not any((conj == f).all() for f in fresh):
                        fresh.append(conj)
            if not fresh:
                return res
            gens.extend(fresh)
            res = self._spawn(list(gens))

    def intersection(self, other):
        """
        Common elements of two subgroups of one parent (by filtering our
        element list)
        """
        elems = self.elements()
        mask = other.index_of(elems) >= 0
        return self.from_elements(elems[mask])

    def join(self, other):
        "⟨self, other⟩"
        return self._spawn(list(self.gens) + list(other.gens))

    def center(self):
        "Z(G)"
        if not self.has_elements():
            centre = self.to_sympy().center()
            return self._spawn([_from_sympy(p, self.degree)
                                for p in centre.generators],
                               order=int(centre.order()))
        elems = self.elements()
        mask = np.ones(len(elems), dtype=bool)
        for gen in self.gens:
            mask &= (gen[elems] == elems[:, gen]).all(axis=1)
        return self.from_elements(elems[mask])

    def pointwise_stabilizer(self, points):
        "the subgroup fixing each of `points`"
        points = [int(p) for p in points]
        if not self.has_elements():
            stab = self.to_sympy().pointwise_stabilizer(points)
            return self._spawn([_from_sympy(p, self.degree)
                                for p in stab.generators],
                               order=int(stab.order()))
        elems = self.elements()
        mask = (elems[:, points] == np.array(points, dtype=np.int64)).all(
            axis=1)
        return self.from_elements(elems[mask])

    def commutes_with(self, other):
        "[self, other] = 1, checked on generators"
        return all((perm_mul(x, y) == perm_mul(y, x)).all()
                   for x in self.gens for y in other.gens)

    def commutator_subgroup(self, other, parent=None):
        """
        [H, K], the normal closure in `parent` (default: ⟨H, K⟩) of the
        generator commutators
        """
        parent = parent if parent is not None else self.join(other)
        comms = [perm_commutator(x, y) for x in self.gens for y in other.gens]
        return parent.normal_closure(comms)

    def derived_subgroup(self):
        "G′"
        return self.commutator_subgroup(self, parent=self)

    def lower_central_series(self):
        """
        γ1 = G, γ(i+1) = [γi, G], down to the first repeated term

        Returns
        -------
        list of PermGroup, without repetition
        """
        series = [self]
        while True:
            last = series[-1]
            nxt = last.commutator_subgroup(self, parent=self)
            if nxt.order() == last.order():
                return series
            series.append(nxt)
            if nxt.order() == 1:
                return series

    def nilpotency_class(self):
        """
        Length of the lower central series, or NotNilpotent when it
        stops above the trivial group (0 for the trivial group)
        """
        series = self.lower_central_series()
        if series[-1].order() != 1:
            return NotNilpotent(series[-1].order())
        return len(series) - 1

    def is_perfect(self):
        "G = G′"
        return self.derived_subgroup().order() == self.order()

    def is_normal_in(self, parent):
        "closed under conjugation by the parent's generators"
        return all(self.contains(perm_conjugate(h, s))
                   for h in self.gens for s in parent.gens)

    def quotient(self, normal):
        """
        G/N acting regularly on the cosets of a normal subgroup

        Returns
        -------
        group: PermGroup
        labels: ndarray
            Coset of each of our elements
        """
        elems = self.elements()
        nelems = normal.elements()
        labels = np.full(len(elems), -1, dtype=np.int64)
        reps = []
        for idx in range(len(elems)):
            if labels[idx] >= 0:
                continue
            members = self.index_of(elems[idx][nelems])
            labels[members] = len(reps)
            reps.append(idx)
        reps = np.array(reps, dtype=np.int64)
        perms = [labels[self.index_of(gen[elems[reps]])] for gen in self.gens]
        res = PermGroup(perms, degree=len(reps), base=(0,), order=len(reps),
                        guard=self.guard, table_guard=self.table_guard)
        return res, labels

    # ------------------------------------------------------
    # Engel conditions
    # ------------------------------------------------------

    def _engel_depths_table(self, cap):
        """
        For each b, least n ≤ cap with γn(a, b) = 1 for all a
        (cap + 1 if none)
        """
        table = self.table()
        inv = self.inverses()
        m = len(inv)
        every = np.arange(m)
        depths = []
        for b in range(m):
            comm = table[table[table[inv[every], inv[b]], every], b]
            depth = 1
            while depth <= cap and (comm != 0).any():
                comm = table[table[table[inv[comm], inv[b]], comm], b]
                depth += 1
            depths.append(depth)
        return depths

    def _engel_depths_rows(self, cap):
        _log.warning('Engel check on a group of order %d without a Cayley '
                     'table (slow)', self.order())
        elems = self.elements()
        ident = self.identity
        inv_all = rows_inv(elems)
        depths = []
        for b in elems:
            right = np.broadcast_to(b, elems.shape).copy()
            right_inv = np.broadcast_to(perm_inv(b), elems.shape).copy()
            comm = rows_mul(rows_mul(rows_mul(inv_all, right_inv), elems),
                            right)
            depth = 1
            while depth <= cap and not (comm == ident).all():
                comm = rows_mul(rows_mul(rows_mul(rows_inv(comm), right_inv),
                                         comm), right)
                depth += 1
            depths.append(depth)
        return depths

    def _engel_depths(self, cap):
        if not self.has_elements():
            raise SizeGuardError('Engel check on a group of order {}'.format(
                self.order()), self.guard)
        if self.order() <= self.table_guard:
            return self._engel_depths_table(cap)
        return self._engel_depths_rows(cap)

    def is_n_engel(self, n):
        "γn(a, b) = 1 for every pair, by exhaustion"
        if n < 1:
            raise UsageError('Engel classes start at 1')
        return max(self._engel_depths(n)) <= n

    def minimal_engel_class(self, cap):
        """
        Least n ≤ cap such that the group is n-Engel, or ExceedsCap
        """
        depths = self._engel_depths(cap)
        worst = max(depths)
        if worst > cap:
            b = depths.index(worst)
            return ExceedsCap(cap, self._engel_witness(b, cap))
        return worst

    def _engel_witness(self, b, cap):
        table = self.table() if self.order() <= self.table_guard else None
        if table is None:
            return (None, b)
        inv = self.inverses()
        for a in range(len(inv)):
            comm = table[table[table[inv[a], inv[b]], a], b]
            for _ in range(cap - 1):
                comm = table[table[table[inv[comm], inv[b]], comm], b]
            if comm != 0:
                return (a, b)
        return (None, b)


def direct_product(groups):
    """
    G1 × ... × Gk acting on the disjoint union of the point sets

    Returns
    -------
    product: PermGroup
        Generators: those of G1 (on its block), then those of G2, ...
    offsets: list of int
        First point of each block
    """
    offsets = []
    total = 0
    for grp in groups:
        offsets.append(total)
        total += grp.degree
    gens = []
    base = []
    order = 1
    for grp, off in zip(groups, offsets):
        for gen in grp.gens:
            perm = perm_identity(total)
            perm[off:off + grp.degree] = gen + off
            gens.append(perm)
        base.extend(b + off for b in grp.base)
        order *= grp.order()
    guard = min(g.guard for g in groups) if groups else ORDER_GUARD
    table_guard = min(g.table_guard for g in groups) if groups \
        else TABLE_GUARD
    return PermGroup(gens, degree=total, base=base, order=order,
                     guard=guard, table_guard=table_guard), offsets


def embed(perms, offsets, degree):
    """
    The tuple (p1, ..., pk) as one permutation of the disjoint union
    """
    res = perm_identity(degree)
    for perm, off in zip(perms, offsets):
        if perm is not None:
            res[off:off + len(perm)] = perm + off
    return res


def project(perm, offset, degree):
    "the block of a product permutation starting at `offset`"
    return perm[offset:offset + degree] - offset


# ---------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------


class GroupHom(object):
    """
    Homomorphism given by the images of the source generators

    The images of all source elements are computed along the source's
    search tree, and every generator edge is checked, so a map that is
    not a homomorphism is refused at construction. When `relators` and
    `alphabet` are given they are checked too (this is the only check
    for sources beyond the order guard).
    """

    def __init__(self, source, target, images, relators=(), alphabet=None):
        self.source = source
        self.target = target
        self.images = [_as_perm(p, target.degree) for p in images]
        if len(self.images) != len(source.gens):
            raise UsageError('one image per source generator')
        for rel in relators:
            img = self._evaluate(rel, alphabet)
            if not is_identity_perm(img):
                raise CheckFailure('relators map to the identity', str(rel))
        self._map = None
        if source.has_elements():
            self.element_images()

    def _evaluate(self, word, alphabet):
        res = self.target.identity
        for sym in word:
            img = self.images[alphabet.index(sym)]
            res = perm_mul(res, img if sym.sign > 0 else perm_inv(img))
        return res

    def element_images(self):
        """
        Image of every source element, in the source's element order
        """
        if self._map is None:
            elems = self.source.elements()
            parent, via = self.source.tree()
            imgs = np.empty((len(elems), self.target.degree), dtype=np.int64)
            imgs[0] = self.target.identity
            for idx in range(1, len(elems)):
                imgs[idx] = self.images[via[idx]][imgs[parent[idx]]]
            for gidx, gen in enumerate(self.source.gens):
                succ = self.source.index_of(gen[elems])
                expected = self.images[gidx][imgs]
                bad = np.nonzero(~(imgs[succ] == expected).all(axis=1))[0]
                if bad.size:
                    raise CheckFailure('homomorphism',
                                       'element {} times generator {}'.format(
                                           int(bad[0]), gidx))
            self._map = imgs
        return self._map

    def __call__(self, perm):
        idx = self.source.index_of(perm)
        if idx < 0:
            raise UsageError('permutation not in the source group')
        return self.element_images()[idx]

    def kernel(self):
        "ker φ"
        imgs = self.element_images()
        mask = (imgs == self.target.identity).all(axis=1)
        return self.source.from_elements(self.source.elements()[mask])

    def image(self):
        "im φ, as a subgroup of the target"
        return self.target.subgroup(self.images)
