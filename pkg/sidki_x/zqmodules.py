# License: CeCILL-B (French BSD3-like)

"""
Modules over ℤQ for a finite group acting on a finitely generated
abelian group

Every module is kept in Smith normal form coordinates: coordinate i has
order `orders[i]` (0 for ℤ, never 1), and a group element acts on the
right by an integer matrix, v ↦ v·A.
"""

from __future__ import print_function
from collections import namedtuple
import logging
import math

import numpy as np

from .errors import CheckFailure, SizeGuardError, UsageError
from .intlinalg import (FinAbGroup,
                        SmithNormalForm,
                        int_matrix,
                        reduce_vector,
                        same_lattice,
                        span_basis,
                        span_exponent,
                        span_is_zero,
                        span_order)
from .local import ORDER_GUARD
from .permgroups import perm_conjugate, perm_inv

_log = logging.getLogger(__name__)

ActionNotNilpotent = namedtuple('ActionNotNilpotent', ['cap'])
"""V·Augˢ did not vanish for any s up to the cap"""


def _reduce_matrix(orders, mat):
    return tuple(reduce_vector(orders, row) for row in mat)


def _vec_mat(vec, mat):
    res = [0] * (len(mat[0]) if len(mat) else 0)
    for coeff, row in zip(vec, mat):
        if coeff:
            res = [x + coeff * y for x, y in zip(res, row)]
    return res


def _mat_mul(left, right):
    return [_vec_mat(row, right) for row in left]


def _kron(left, right):
    rows = []
    for lrow in left:
        for rrow in right:
            rows.append([int(a) * int(b) for a in lrow for b in rrow])
    return rows


class QModule(object):
    """
    A finitely generated abelian group with a right group action

    Parameters
    ----------
    orders: sequence of int
        Order of each coordinate (0 for ℤ)
    actions: sequence of matrices
        One matrix per acting generator
    names: sequence of string, optional
        Acting generator names, for reports
    inverse_actions: sequence of matrices, optional
        Matrices of the inverse generators
    projection: matrix, optional
        Rows map the vectors of an original generating set to our
        coordinates (one row per original generator)

    Attributes
    ----------
    presentation: (int, rows, matrices) or None
        Generator count, relation rows and action matrices on the
        original generators, for modules built from relations
    """

    def __init__(self, orders, actions, names=None, inverse_actions=None,
                 projection=None):
        self.orders = tuple(int(o) for o in orders)
        if any(o == 1 or o < 0 for o in self.orders):
            raise UsageError('coordinate orders must be 0 or at least 2')
        self.actions = [_reduce_matrix(self.orders, a) for a in actions]
        self.inverse_actions = None if inverse_actions is None else \
            [_reduce_matrix(self.orders, a) for a in inverse_actions]
        self.names = list(names) if names is not None else \
            ['q{}'.format(i) for i in range(len(self.actions))]
        self.projection = projection
        self.presentation = None
        self._group = None

    @property
    def rank(self):
        "number of coordinates"
        return len(self.orders)

    @property
    def underlying(self):
        "the abelian group, in invariant-factor form"
        return FinAbGroup.from_orders(self.orders)

    def order(self):
        "None when infinite"
        return self.underlying.order()

    def exponent(self):
        "None when infinite"
        return self.underlying.exponent()

    def is_zero(self):
        "the zero module"
        return not self.orders

    def basis(self):
        "unit vectors"
        return [tuple(1 if i == j else 0 for j in range(self.rank))
                for i in range(self.rank)]

    def reduce(self, vec):
        "canonical coordinates"
        return reduce_vector(self.orders, vec)

    def act(self, vec, mat):
        "v·A"
        return self.reduce(_vec_mat(vec, mat)) if self.rank else ()

    def coordinates(self, original):
        "our coordinates of a vector on the original generators"
        if self.projection is None:
            raise UsageError('module has no original generating set')
        return self.reduce(_vec_mat(original, self.projection))

    def check_automorphisms(self):
        """
        Each matrix is well defined on the underlying group and, when
        inverse matrices are known, A·A⁻¹ is the identity
        """
        for name, mat in zip(self.names, self.actions):
            for row, order in zip(mat, self.orders):
                if order and any(self.reduce([order * x for x in row])):
                    raise CheckFailure('action is well defined', name)
        if self.inverse_actions is not None:
            ident = _reduce_matrix(self.orders, np.eye(self.rank, dtype=int)
                                   .tolist()) if self.rank else ()
            for name, mat, inv in zip(self.names, self.actions,
                                      self.inverse_actions):
                if not self.rank:
                    continue
                if _reduce_matrix(self.orders, _mat_mul(mat, inv)) != ident:
                    raise CheckFailure('q·q⁻¹ acts as the identity', name)
        return True

    def group_matrices(self, guard=ORDER_GUARD):
        """
        The matrices of every element of the acting group (closure of the
        generator matrices under products)
        """
        if self._group is None:
            ident = _reduce_matrix(self.orders, np.eye(self.rank, dtype=int)
                                   .tolist()) if self.rank else ()
            seen = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for mat in frontier:
                    for gen in self.actions:
                        prod = _reduce_matrix(self.orders,
                                              _mat_mul(mat, gen)) \
                            if self.rank else ()
                        if prod not in seen:
                            seen.add(prod)
                            nxt.append(prod)
                            if len(seen) > guard:
                                raise SizeGuardError('acting matrix group',
                                                     guard)
                frontier = nxt
            self._group = sorted(seen)
        return self._group

    def augment(self, vectors):
        """
        span{v(q − 1)} over the given vectors and every acting element q,
        as a small generating set
        """
        if not self.rank:
            return []
        images = []
        for mat in self.group_matrices():
            for vec in vectors:
                img = self.act(vec, mat)
                images.append([a - b for a, b in zip(img, vec)])
        return span_basis(self.orders, images)

    def augmentation_power(self, vectors, power):
        "⟨vectors⟩·Aug^power"
        span = span_basis(self.orders, vectors) if self.rank else []
        for _ in range(power):
            if not span:
                break
            span = self.augment(span)
        return span

    def is_submodule(self, vectors):
        "closed under every generator"
        if not self.rank:
            return True
        span = list(vectors)
        for mat in self.actions:
            for vec in vectors:
                img = self.act(vec, mat)
                if span_order_if_finite(self.orders, span + [img]) != \
                        span_order_if_finite(self.orders, span):
                    return False
        return True

    def quotient(self, vectors):
        """
        The module modulo the submodule spanned by `vectors`
        """
        if not self.is_submodule(vectors):
            raise UsageError('quotient by a non-invariant subgroup')
        rows = [list(v) for v in vectors]
        for i, order in enumerate(self.orders):
            if order:
                row = [0] * self.rank
                row[i] = order
                rows.append(row)
        return module_from_relations(self.rank, rows, self.actions,
                                     names=self.names,
                                     inverse_actions=self.inverse_actions)

    def to_json(self):
        "report form"
        return {'orders': list(self.orders),
                'invariant_factors': list(self.underlying.invariant_factors),
                'free_rank': self.underlying.free_rank,
                'action': {name: [list(r) for r in mat]
                           for name, mat in zip(self.names, self.actions)}}


def span_order_if_finite(orders, vectors):
    """
    Order of a span, or the quotient group for infinite ambient groups
    (either way, equal spans give equal values)
    """
    if all(orders):
        return span_order(orders, vectors)
    from .intlinalg import quotient_by_span
    return quotient_by_span(orders, vectors)


def module_from_relations(nvars, rows, actions, names=None,
                          inverse_actions=None):
    """
    ℤ^nvars / ⟨rows⟩ with actions given on the original generators,
    brought to Smith normal form coordinates

    A matrix A on the original generators becomes (V⁻¹·A·V) restricted
    to the coordinates whose invariant factor is not 1.
    """
    mat = int_matrix(rows, ncols=nvars)
    snf = SmithNormalForm(mat).run()
    diag = snf.diagonal()
    diag = list(diag) + [0] * (nvars - len(diag))
    kept = [j for j in range(nvars) if diag[j] != 1]
    orders = [int(diag[j]) for j in kept]
    V, Vinv = snf.V, snf.Vinv

    def convert(action):
        full = Vinv.dot(int_matrix(action, ncols=nvars)).dot(V)
        return [[int(full[i, j]) for j in kept] for i in kept]

    projection = [[int(V[i, j]) for j in kept] for i in range(nvars)]
    res = QModule(orders, [convert(a) for a in actions], names=names,
                  inverse_actions=None if inverse_actions is None else
                  [convert(a) for a in inverse_actions],
                  projection=projection)
    res.presentation = (nvars, [list(r) for r in rows],
                        [[list(r) for r in a] for a in actions])
    return res


def same_module(left, right):
    """
    True if two modules presented on the same original generators have
    the same relation lattice and their actions agree modulo it
    """
    if left.presentation is None or right.presentation is None:
        raise UsageError('both modules must come from relations')
    lvars, lrows, lacts = left.presentation
    rvars, rrows, racts = right.presentation
    if lvars != rvars or len(lacts) != len(racts):
        return False
    if not same_lattice(lrows, rrows, lvars):
        return False
    for lmat, rmat in zip(lacts, racts):
        for lrow, rrow in zip(lmat, rmat):
            diff = [a - b for a, b in zip(lrow, rrow)]
            if any(diff) and not same_lattice(lrows, lrows + [diff], lvars):
                return False
    return True


# ---------------------------------------------------------------------
# modules out of permutation groups
# ---------------------------------------------------------------------


def abelian_section(group, upper, lower, acting, names=None):
    """
    The abelian section upper/lower of a permutation group, with the
    conjugation action of `acting` (elements normalising both)

    The generators of `upper` present the section: a breadth-first walk
    over the cosets of `lower` records a path vector for every coset, and
    every coset edge gives the relation v(c) + eᵢ − v(c·hᵢ).

    Parameters
    ----------
    group: PermGroup
        Common parent
    upper, lower: PermGroup
        lower normal in upper, upper/lower abelian
    acting: sequence of permutations
    """
    if upper.degree != group.degree:
        raise UsageError('section and parent act on different points')
    hgens = list(upper.gens)
    nvars = len(hgens)
    if nvars == 0:
        return QModule((), [[] for _ in acting], names=names,
                       inverse_actions=[[] for _ in acting],
                       projection=[])
    section, labels = upper.quotient(lower)
    if not section.is_abelian():
        raise CheckFailure('section is abelian')
    selems = section.elements()
    parent, via = section.tree()
    paths = np.zeros((len(selems), nvars), dtype=np.int64)
    for idx in range(1, len(selems)):
        paths[idx] = paths[parent[idx]]
        paths[idx, via[idx]] += 1
    # section element fixing 0 ↦ coset label
    by_label = np.empty(len(selems), dtype=np.int64)
    by_label[selems[:, 0]] = np.arange(len(selems))
    rows = set()
    for gidx, gen in enumerate(section.gens):
        succ = by_label[gen[selems[:, 0]]]
        for idx in range(len(selems)):
            row = paths[idx].copy()
            row[gidx] += 1
            row -= paths[succ[idx]]
            if row.any():
                rows.add(tuple(int(x) for x in row))

    def vector_of(perm):
        idx = upper.index_of(perm)
        if idx < 0:
            raise CheckFailure('acting element normalises the section')
        return paths[by_label[labels[idx]]]

    def matrix(elt):
        return [[int(x) for x in vector_of(perm_conjugate(h, elt))]
                for h in hgens]

    actions = [matrix(y) for y in acting]
    inverses = [matrix(perm_inv(y)) for y in acting]
    return module_from_relations(nvars, sorted(rows), actions, names=names,
                                 inverse_actions=inverses)


def aug_mod_I2(group, names=None):
    """
    Aug(ℤG)/I₂ for a finite group G with its right G-action

    The basis is eₓ = x − 1 for x ≠ 1 (in element order, skipping the
    identity); I₂ is spanned by (g − 1)²h = e(g²h) − 2e(gh) + e(h), and a
    generator x acts by eᵧ ↦ e(yx) − eₓ.

    Parameters
    ----------
    group: PermGroup
        Must have a Cayley table
    """
    table = group.table()
    m = table.shape[0]
    nvars = m - 1
    if nvars == 0:
        return QModule((), [[] for _ in group.gens], names=names,
                       inverse_actions=[[] for _ in group.gens],
                       projection=[])
    rows = set()
    for g in range(m):
        g2 = table[g, g]
        for h in range(m):
            row = [0] * nvars
            for idx, coeff in ((table[g2, h], 1), (table[g, h], -2),
                               (h, 1)):
                if idx:
                    row[idx - 1] += coeff
            if any(row):
                rows.add(tuple(row))

    def matrix(xidx):
        mat = []
        for y in range(1, m):
            row = [0] * nvars
            yx = table[y, xidx]
            if yx:
                row[yx - 1] += 1
            if xidx:
                row[xidx - 1] -= 1
            mat.append(row)
        return mat

    inv = group.inverses()
    gidx = [int(group.index_of(g)) for g in group.gens]
    return module_from_relations(nvars, sorted(rows),
                                 [matrix(x) for x in gidx], names=names,
                                 inverse_actions=[matrix(inv[x])
                                                  for x in gidx])


def action_nilpotency_class(module, cap=None):
    """
    Least s with V·Augˢ = 0, or ActionNotNilpotent(cap)

    The cap defaults to |V| + 3 for finite modules.
    """
    if cap is None:
        order = module.order()
        if order is None:
            raise UsageError('a cap is needed for infinite modules')
        cap = order + 3
    span = module.basis()
    depth = 0
    while span and not span_is_zero(module.orders, span):
        if depth >= cap:
            return ActionNotNilpotent(cap)
        span = module.augment(span)
        depth += 1
    return depth


def two_torsion_rank_order(module):
    "|V/2V|"
    return 2 ** sum(1 for o in module.orders if o % 2 == 0)


def class2_check(module):
    """
    2V·Aug² = 0
    """
    span = [tuple(2 * x for x in vec) for vec in module.basis()]
    return span_is_zero(module.orders, module.augmentation_power(span, 2))


def augmentation_bounds(module):
    """
    The two identities of the augmentation-quotient model: 2V·Aug² = 0,
    and V·Aug^(k+3) = 0 with k = |V/2V|

    Returns
    -------
    dict with s, k and both verdicts
    """
    s = action_nilpotency_class(module)
    k = two_torsion_rank_order(module)
    return {'s': s if isinstance(s, int) else None,
            'k': k,
            'two_V_aug2_zero': class2_check(module),
            'V_aug_k3_zero': isinstance(s, int) and s <= k + 3}


def tensor_square_coinvariants(amod, names=None):
    """
    M = (A ⊗ A) modulo the diagonal action q ↦ (q, q⁻¹), with Q acting on
    the first factor

    Parameters
    ----------
    amod: QModule
        A with its action and inverse action matrices
    """
    rank = amod.rank
    if not rank:
        return QModule((), [[] for _ in amod.actions], names=names,
                       inverse_actions=[[] for _ in amod.actions])
    nvars = rank * rank
    rows = []
    for i, a in enumerate(amod.orders):
        for j, b in enumerate(amod.orders):
            order = math.gcd(a, b)
            if order:
                row = [0] * nvars
                row[i * rank + j] = order
                rows.append(row)
    ident = np.eye(rank, dtype=int).tolist()
    for mat, inv in zip(amod.actions, amod.inverse_actions):
        diag = _kron(mat, inv)
        for k in range(nvars):
            row = list(diag[k])
            row[k] -= 1
            if any(row):
                rows.append(row)
    actions = [_kron(mat, ident) for mat in amod.actions]
    inverses = [_kron(inv, ident) for inv in amod.inverse_actions]
    return module_from_relations(nvars, rows, actions, names=names,
                                 inverse_actions=inverses)


def derived_section(group, names=None):
    """
    A = G′/G″ with the conjugation action of G
    """
    derived = group.derived_subgroup()
    second = derived.derived_subgroup()
    return abelian_section(group, derived, second, group.gens, names=names)


def module_M(group, names=None):
    """
    ((G′/G″) ⊗ (G′/G″)) coinvariants under Q₀ = {(q, q⁻¹)}, for a finite
    group given by its regular realization
    """
    return tensor_square_coinvariants(derived_section(group, names=names),
                                      names=names)


# ---------------------------------------------------------------------
# W-structure checks
# ---------------------------------------------------------------------


CheckResult = namedtuple('CheckResult', ['name', 'passed', 'witness'])
"""Outcome of one machine check"""


def _divides(a, b):
    return b % a == 0 if a else b == 0


def w_structure_checks(xreal):
    """
    Consequences of the structure theorem for W on a realization: W as
    a module, N = W·Aug^(3+s), and the module M

    Returns
    -------
    report: dict
    checks: list of CheckResult
    """
    names = xreal.base_names()
    vmod = xreal.l_abelianization()
    s = action_nilpotency_class(vmod)
    if not isinstance(s, int):
        raise CheckFailure('action on L/L′ is nilpotent', s)
    wmod = xreal.w_module()
    mmod = module_M(xreal.G, names=names)
    amod = derived_section(xreal.G, names=names)
    nspan = wmod.augmentation_power(wmod.basis(), 3 + s)
    n_order = span_order(wmod.orders, nspan) if wmod.rank else 1
    n_exp = span_exponent(wmod.orders, nspan) if wmod.rank else 1
    m_order = mmod.order()
    m_exp = mmod.exponent()
    checks = [
        CheckResult('N_order_divides_M', _divides(n_order, m_order),
                    None if _divides(n_order, m_order) else
                    '|N|={} |M|={}'.format(n_order, m_order)),
        CheckResult('N_exponent_divides_M', _divides(n_exp, m_exp),
                    None if _divides(n_exp, m_exp) else
                    'exp N={} exp M={}'.format(n_exp, m_exp)),
    ]
    w_class = action_nilpotency_class(wmod)
    if amod.is_zero():
        ok = isinstance(w_class, int) and w_class <= 3 + s
        checks.append(CheckResult('W_action_nilpotent', ok,
                                  None if ok else str(w_class)))
    report = {'W': wmod.to_json(),
              'W_order': wmod.order(),
              'W1_order': xreal.W1().order(),
              'W_action_class': w_class if isinstance(w_class, int)
              else None,
              's': s,
              'N_order': n_order,
              'N_exponent': n_exp,
              'A': amod.to_json(),
              'M': mmod.to_json(),
              'M_order': m_order,
              'M_exponent': m_exp}
    for check in checks:
        if not check.passed:
            _log.error('W-structure check %s failed: %s', check.name,
                       check.witness)
    return report, checks


def l_module_checks(xreal):
    """
    L/L′ against its model Aug(ℤG)/I₂ (ℓ_g ↦ g − 1), and the two
    annihilation identities on it

    Returns
    -------
    report: dict
    checks: list of CheckResult
    """
    names = xreal.base_names()
    vmod = xreal.l_abelianization()
    amod = aug_mod_I2(xreal.G, names=names)
    same = same_module(vmod, amod)
    bounds = augmentation_bounds(vmod)
    checks = [
        CheckResult('aug_mod_I2_matches_L_ab', same,
                    None if same else '{} != {}'.format(vmod.underlying,
                                                        amod.underlying)),
        CheckResult('two_V_aug2_zero', bounds['two_V_aug2_zero'], None),
        CheckResult('V_aug_k3_zero', bounds['V_aug_k3_zero'],
                    None if bounds['V_aug_k3_zero'] else
                    's = {}, k = {}'.format(bounds['s'], bounds['k'])),
    ]
    for check in checks:
        if not check.passed:
            _log.error('L/L′ check %s failed: %s', check.name,
                       check.witness)
    report = {'V': vmod.to_json(),
              'aug_mod_I2': amod.to_json(),
              's': bounds['s'],
              'k': bounds['k']}
    return report, checks
