# License: CeCILL-B (French BSD3-like)

"""
Finite realizations of the weak commutativity group 𝔛(G) and machine
checks of its structure

A realization enumerates G and its double, and keeps the regular
permutation group of 𝔛(G) together with the handles every check needs:
the subgroups D = [G, Ḡ], L = ⟨ℓ_g⟩, W = D ∩ L, the split copy of G,
and the maps ρ: 𝔛(G) → G×G×G and π: 𝔛(G) → G.
"""

from __future__ import print_function
import logging

import numpy as np

from .enumerator import enumerate_cosets
from .errors import CheckFailure, NotEngelError, UsageError
from .local import (D_GENERATION_LIMIT,
                    DL_SAMPLES,
                    ELL_EXHAUSTIVE_LIMIT,
                    ELL_SAMPLES,
                    ENGEL_CAP,
                    ENUMERATION_STRATEGY,
                    MAX_COSETS,
                    ORDER_GUARD,
                    RANDOM_SEED,
                    TABLE_GUARD)
from .permgroups import (ExceedsCap,
                         GroupHom,
                         NotNilpotent,
                         PermGroup,
                         direct_product,
                         embed,
                         perm_commutator,
                         perm_conjugate,
                         perm_inv,
                         perm_mul,
                         project,
                         rows_inv,
                         rows_mul)
from .presentations import WitnessPolicy, sidki_double
from .words import render
from .zqmodules import (CheckResult,
                        abelian_section,
                        action_nilpotency_class,
                        l_module_checks,
                        w_structure_checks)

_log = logging.getLogger(__name__)


def _class_or_none(value):
    return value if isinstance(value, int) else None


class XRealization(object):
    """
    A finite group G with the regular realization of 𝔛(G)

    Attributes
    ----------
    base, double: Presentation
    G, X: PermGroup
        Regular realizations (base point 0)
    G3: PermGroup
        G × G × G, blocks starting at `offsets`
    rho, pi: GroupHom
    Gs: PermGroup
        The split copy of G (unbarred generators) inside X
    L, D, W, DL, im_rho: PermGroup
    """

    def __init__(self, base, double, g_table, x_table, G, X):
        self.base = base
        self.double = double
        self.g_table = g_table
        self.x_table = x_table
        self.G = G
        self.X = X
        k = len(base.generators)
        self.G3, self.offsets = direct_product([G, G, G])
        n = G.degree
        images = [embed((g, g, None), self.offsets, 3 * n) for g in G.gens]
        images += [embed((None, g, g), self.offsets, 3 * n) for g in G.gens]
        self.rho = GroupHom(X, self.G3, images, relators=double.relators,
                            alphabet=double.alphabet)
        self.pi = GroupHom(X, G, list(G.gens) + list(G.gens),
                           relators=double.relators, alphabet=double.alphabet)
        self.Gs = X.subgroup(X.gens[:k])
        self._element_perms()
        self.L = X.subgroup(self.ell_perms[1:])
        self.D = X.normal_closure([perm_commutator(x, y)
                                   for x in X.gens[:k] for y in X.gens[k:]])
        self.W = self.D.intersection(self.L)
        self.DL = self.D.join(self.L)
        self.im_rho = self.rho.image()
        self._derived = None
        self._l_derived = None

    def _element_perms(self):
        """
        For every element g of G (in G's element order): g and ḡ as
        elements of X, and ℓ_g = g⁻¹ḡ
        """
        reps = self.g_table.representatives()
        words = [reps[int(c)] for c in self.G.elements()[:, 0]]
        self.element_words = words
        self.elt_perms = [self.x_table.word_image(w) for w in words]
        self.bar_perms = [self.x_table.word_image(w.bar()) for w in words]
        self.ell_perms = [perm_mul(perm_inv(x), y)
                          for x, y in zip(self.elt_perms, self.bar_perms)]

    # ------------------------------------------------------
    # derived data
    # ------------------------------------------------------

    def base_names(self):
        "names of the generators of G"
        return [name for name, _ in self.base.generators]

    def derived(self):
        "G′"
        if self._derived is None:
            self._derived = self.G.derived_subgroup()
        return self._derived

    def q_order(self):
        "|G/G′|"
        return self.G.order() // self.derived().order()

    def l_derived(self):
        "L′"
        if self._l_derived is None:
            self._l_derived = self.L.derived_subgroup()
        return self._l_derived

    def W1(self):
        "W ∩ L′"
        return self.W.intersection(self.l_derived())

    def l_abelianization(self):
        """
        V = L/L′ as a G-module, G acting through its split copy, on the
        generators ℓ_g (g ≠ 1, in G's element order)
        """
        return abelian_section(self.X, self.L, self.l_derived(),
                               self.Gs.gens, names=self.base_names())

    def w_module(self):
        "W as a module over the split copy of G"
        trivial = self.X.subgroup([])
        return abelian_section(self.X, self.W, trivial, self.Gs.gens,
                               names=self.base_names())

    def orders(self):
        "orders of the groups involved"
        return {'G': self.G.order(),
                'X': self.X.order(),
                'D': self.D.order(),
                'L': self.L.order(),
                'W': self.W.order(),
                'im_rho': self.im_rho.order(),
                'Q': self.q_order()}

    def product_index(self, left, right):
        "G element index of a product of G element indices"
        if self.G.order() <= self.G.table_guard:
            return int(self.G.table()[left, right])
        elems = self.G.elements()
        return int(self.G.index_of(perm_mul(elems[left], elems[right])))


def build(pres, max_cosets=MAX_COSETS, strategy=ENUMERATION_STRATEGY,
          guard=ORDER_GUARD, table_guard=TABLE_GUARD, check=True):
    """
    Enumerate G and 𝔛(G) and assemble the realization

    Parameters
    ----------
    pres: Presentation
        Of a finite group, over unbarred generators
    check: bool
        Run the structural checks and raise on the first failure

    Raises
    ------
    Overflow
        G or its double does not enumerate within `max_cosets`
    SizeGuardError
    CheckFailure
    """
    if not pres.generators:
        raise UsageError('the group needs at least one generator')
    g_table = enumerate_cosets(pres, max_cosets=max_cosets,
                               strategy=strategy)
    g_table.check()
    G = g_table.perm_realization(base=(0,), order=g_table.n_cosets,
                                 guard=guard, table_guard=table_guard)
    double = sidki_double(pres, WitnessPolicy.all_elements(), table=g_table)
    x_table = enumerate_cosets(double, max_cosets=max_cosets,
                               strategy=strategy)
    x_table.check()
    X = x_table.perm_realization(base=(0,), order=x_table.n_cosets,
                                 guard=guard, table_guard=table_guard)
    _log.info('%s: |G| = %d, |X(G)| = %d', pres, G.order(), X.order())
    res = XRealization(pres, double, g_table, x_table, G, X)
    if check:
        for result in structural_checks(res):
            if not result.passed:
                raise CheckFailure(result.name, result.witness)
    return res


# ---------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------


def _pair_witness(left, right):
    return 'pair ({}, {})'.format(left, right)


def _commute_D_L(xreal, seed):
    if not xreal.D.commutes_with(xreal.L):
        return CheckResult('commute_D_L', False, 'generators')
    rng = np.random.default_rng(seed)
    lefts = xreal.D.random_elements(rng, DL_SAMPLES)
    rights = xreal.L.random_elements(rng, DL_SAMPLES)
    for idx, (x, y) in enumerate(zip(lefts, rights)):
        if not (perm_mul(x, y) == perm_mul(y, x)).all():
            return CheckResult('commute_D_L', False,
                               'random pair {}'.format(idx))
    return CheckResult('commute_D_L', True, None)


def check_im_rho(xreal):
    """
    im ρ = {(g₁, g₂, g₃) : g₁g₂⁻¹g₃ ∈ G′}, tested elementwise and by
    order inside G×G×G
    """
    n = xreal.G.degree
    elems = xreal.im_rho.elements()
    blocks = [elems[:, off:off + n] - off for off in xreal.offsets]
    prods = rows_mul(rows_mul(blocks[0], rows_inv(blocks[1])), blocks[2])
    inside = xreal.derived().index_of(prods) >= 0
    expected = xreal.G.order() ** 2 * xreal.derived().order()
    return bool(inside.all()) and len(elems) == expected


def ell_identity_failures(xreal, samples=None, seed=RANDOM_SEED):
    """
    Pairs (u, x) of G element indices breaking ℓ_u^x = ℓ_(ux) ℓ_x⁻¹ or
    ℓ_u^x̄ = ℓ_x⁻¹ ℓ_(ux)
    """
    m = xreal.G.order()
    if samples is None and m <= ELL_EXHAUSTIVE_LIMIT:
        pairs = [(u, x) for u in range(m) for x in range(m)]
    else:
        rng = np.random.default_rng(seed)
        count = ELL_SAMPLES if samples is None else samples
        pairs = [tuple(int(v) for v in p)
                 for p in rng.integers(0, m, size=(count, 2))]
    ell = xreal.ell_perms
    failures = []
    for u, x in pairs:
        ux = xreal.product_index(u, x)
        lhs = perm_conjugate(ell[u], xreal.elt_perms[x])
        rhs = perm_mul(ell[ux], perm_inv(ell[x]))
        lhs_bar = perm_conjugate(ell[u], xreal.bar_perms[x])
        rhs_bar = perm_mul(perm_inv(ell[x]), ell[ux])
        if not ((lhs == rhs).all() and (lhs_bar == rhs_bar).all()):
            failures.append((u, x))
    return failures


def ell_identity_check(xreal, samples=None):
    "both ℓ-identities on every sampled pair"
    return not ell_identity_failures(xreal, samples=samples)


def _im_rho_pair_projections(xreal):
    G = xreal.G
    n = G.degree
    pair, offs = direct_product([G, G])
    gens = [project(g, off, n) for g in xreal.im_rho.gens
            for off in xreal.offsets]
    per = len(xreal.offsets)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        images = [embed((gens[k * per + i], gens[k * per + j]), offs, 2 * n)
                  for k in range(len(xreal.im_rho.gens))]
        if pair.subgroup(images).order() != G.order() ** 2:
            return CheckResult('im_rho_pair_projections', False,
                               'coordinates {}{}'.format(i + 1, j + 1))
    return CheckResult('im_rho_pair_projections', True, None)


def _rho_L_image(xreal):
    G = xreal.G
    n = G.degree
    images = [xreal.rho(l) for l in xreal.L.gens]
    for img in images:
        first, middle, last = (project(img, off, n) for off in xreal.offsets)
        if not (middle == np.arange(n)).all() or \
                not xreal.derived().contains(perm_mul(first, last)):
            return CheckResult('rho_L_image', False, 'generator image')
    order = xreal.G3.subgroup(images).order()
    expected = G.order() * xreal.derived().order()
    quotient = xreal.L.order() // xreal.W.order()
    ok = order == expected and quotient == expected
    return CheckResult('rho_L_image', ok, None if ok else
                       '|ρ(L)| = {}, |L/W| = {}, expected {}'.format(
                           order, quotient, expected))


def _action_factors_through_Q(xreal):
    gd = xreal.Gs.derived_subgroup()
    if not gd.commutes_with(xreal.W):
        return CheckResult('action_factors_through_Q', False, 'on W')
    lprime = xreal.l_derived()
    for d in gd.gens:
        for l in xreal.L.gens:
            moved = perm_mul(perm_conjugate(l, d), perm_inv(l))
            if not lprime.contains(moved):
                return CheckResult('action_factors_through_Q', False,
                                   'on L/L′')
    return CheckResult('action_factors_through_Q', True, None)


def _D_generation(xreal):
    elts, bars = xreal.elt_perms, xreal.bar_perms
    comms = [perm_commutator(x, y) for x in elts[1:] for y in bars[1:]]
    full = xreal.X.subgroup(comms).order()
    ok = full == xreal.D.order()
    return CheckResult('D_generation', ok,
                       None if ok else '{} != {}'.format(full,
                                                         xreal.D.order()))


def structural_checks(xreal, seed=RANDOM_SEED):
    """
    Every structural identity of the realization

    Returns
    -------
    list of CheckResult, in a fixed order
    """
    X, L, W, Gs = xreal.X, xreal.L, xreal.W, xreal.Gs
    G3 = xreal.G3
    n = xreal.G.order()
    qn = xreal.q_order()
    ker = xreal.rho.kernel()
    res = [_commute_D_L(xreal, seed)]

    ok = W.order() == ker.order() and W.is_subgroup_of(ker)
    res.append(CheckResult('W_eq_ker_rho', ok, None if ok else
                           '|W| = {}, |ker ρ| = {}'.format(W.order(),
                                                           ker.order())))
    ok = W.commutes_with(xreal.DL)
    res.append(CheckResult('W_central_in_DL', ok, None))
    meet = L.intersection(Gs).order()
    ok = meet == 1 and L.order() * Gs.order() == X.order()
    res.append(CheckResult('splitting', ok, None if ok else
                           '|L ∩ G| = {}'.format(meet)))
    closure = X.normal_closure(L.gens).order()
    ok = closure == L.order()
    res.append(CheckResult('L_generated', ok, None if ok else
                           '{} != {}'.format(closure, L.order())))
    ok = X.order() == W.order() * xreal.im_rho.order()
    res.append(CheckResult('exact_sequence', ok, None))
    res.append(CheckResult('check_im_rho', check_im_rho(xreal), None))

    index = G3.order() // xreal.im_rho.order()
    ok = index == qn and xreal.im_rho.is_normal_in(G3)
    res.append(CheckResult('im_rho_normal_index', ok, None if ok else
                           'index {}, |Q| = {}'.format(index, qn)))
    ok = G3.derived_subgroup().is_subgroup_of(xreal.im_rho)
    res.append(CheckResult('im_rho_contains_derived', ok, None))
    res.append(_im_rho_pair_projections(xreal))
    res.append(_rho_L_image(xreal))

    failures = ell_identity_failures(xreal, seed=seed)
    res.append(CheckResult('ell_identities', not failures,
                           _pair_witness(*failures[0]) if failures
                           else None))
    res.append(_action_factors_through_Q(xreal))
    if n <= D_GENERATION_LIMIT:
        res.append(_D_generation(xreal))
    if xreal.G.is_perfect():
        ok = W.commutes_with(X) and xreal.im_rho.order() == n ** 3
        res.append(CheckResult('perfect_central', ok, None))
    for result in res:
        if not result.passed:
            _log.error('check %s failed: %s', result.name, result.witness)
    return res


# ---------------------------------------------------------------------
# nilpotence and Engel
# ---------------------------------------------------------------------


def nilpotence_report(xreal):
    """
    Nilpotency classes of G and 𝔛(G) (None when not nilpotent)

    Raises
    ------
    CheckFailure
        G nilpotent but 𝔛(G) not
    """
    g_class = xreal.G.nilpotency_class()
    x_class = xreal.X.nilpotency_class()
    if isinstance(g_class, int) and isinstance(x_class, NotNilpotent):
        raise CheckFailure('nilpotent G has nilpotent X(G)',
                           'lower central series of X(G) stops at order '
                           '{}'.format(x_class.stable_order))
    return {'G': _class_or_none(g_class), 'X': _class_or_none(x_class)}


def engel_certificate(xreal, cap=ENGEL_CAP):
    """
    n-Engel G gives an m-Engel 𝔛(G) for m = n + d + s + 3

    n is the least Engel class of G, d the nilpotency class of G/G″ and
    s the nilpotency class of the action of G on L/L′. The bound is
    checked exhaustively on the realization, and the least Engel class of
    𝔛(G) is recorded next to it.

    Raises
    ------
    NotEngelError
        G is not n-Engel for any n ≤ cap
    CheckFailure
        𝔛(G) is not m-Engel
    """
    G = xreal.G
    n = G.minimal_engel_class(cap)
    if isinstance(n, ExceedsCap):
        raise NotEngelError('{} is not n-Engel for n ≤ {} (witness pair '
                            '{})'.format(xreal.base, cap, n.witness))
    second = xreal.derived().derived_subgroup()
    metabelian, _ = G.quotient(second)
    d = metabelian.nilpotency_class()
    if isinstance(d, NotNilpotent):
        raise NotEngelError('G/G″ is not nilpotent')
    s = action_nilpotency_class(xreal.l_abelianization())
    if not isinstance(s, int):
        raise CheckFailure('action on L/L′ is nilpotent', str(s))
    m = n + d + s + 3
    least = xreal.X.minimal_engel_class(m)
    verdict = isinstance(least, int)
    if not verdict:
        raise CheckFailure('X(G) is {}-Engel'.format(m),
                           'pair {}'.format(least.witness))
    return {'n': n, 'd': d, 's': s, 'm': m, 'verdict': verdict,
            'least_X_class': least}


# ---------------------------------------------------------------------
# perfect groups
# ---------------------------------------------------------------------


def build_perfect(pres, max_cosets=MAX_COSETS, strategy=ENUMERATION_STRATEGY,
                  guard=ORDER_GUARD, table_guard=TABLE_GUARD):
    """
    Checks for a perfect G too big for the regular realization of 𝔛(G)

    𝔛(G) acts on the cosets of its split copy of G; the checks go through
    stabilizer chains. W = ker ρ is taken as the stabilizer of the G³
    points in the graph of ρ and must commute with every generator; then
    im ρ = G³, and the centre of 𝔛(G) has order |𝔛(G)|/|G|³, so that W
    is all of it.

    Returns
    -------
    orders: dict
    checks: list of CheckResult
    """
    g_table = enumerate_cosets(pres, max_cosets=max_cosets,
                               strategy=strategy)
    G = g_table.perm_realization(base=(0,), order=g_table.n_cosets,
                                 guard=guard, table_guard=table_guard)
    if not G.is_perfect():
        raise UsageError('{} is not perfect'.format(pres))
    double = sidki_double(pres, WitnessPolicy.all_elements(), table=g_table)
    k = len(pres.generators)
    split = double.generator_words()[:k]
    x_table = enumerate_cosets(double, subgens=split, max_cosets=max_cosets,
                               strategy=strategy)
    x_table.check()
    X = x_table.perm_realization(guard=guard, table_guard=table_guard)
    n = G.order()
    G3, offsets = direct_product([G, G, G])
    deg = 3 * G.degree
    images = [embed((g, g, None), offsets, deg) for g in G.gens]
    images += [embed((None, g, g), offsets, deg) for g in G.gens]
    rho = GroupHom(X, G3, images, relators=double.relators,
                   alphabet=double.alphabet)
    x_order = X.order()
    im_order = rho.image().order()
    centre = X.center().order()
    # 𝔛(G) as the graph of ρ in 𝔛(G) × G³; ker ρ fixes the G³ points
    pair, pair_offsets = direct_product([X, G3])
    graph = PermGroup([embed((x, img), pair_offsets, pair.degree)
                       for x, img in zip(X.gens, rho.images)],
                      degree=pair.degree, order=x_order, guard=guard,
                      table_guard=table_guard)
    W = graph.pointwise_stabilizer(range(pair_offsets[1], pair.degree))
    stray = None
    for w in W.gens:
        for idx, gen in enumerate(graph.gens):
            if not np.array_equal(perm_mul(w, gen), perm_mul(gen, w)):
                stray = idx
                break
        if stray is not None:
            break
    checks = [
        CheckResult('perfect_W_central', stray is None,
                    None if stray is None else
                    'W does not commute with {}'.format(
                        render(double.generator_words()[stray]))),
        CheckResult('perfect_im_rho', im_order == n ** 3,
                    None if im_order == n ** 3 else
                    '|im ρ| = {}'.format(im_order)),
        CheckResult('perfect_central', centre * n ** 3 == x_order,
                    None if centre * n ** 3 == x_order else
                    '|Z| = {}, |X| = {}'.format(centre, x_order)),
    ]
    for result in checks:
        if not result.passed:
            _log.error('check %s failed: %s', result.name, result.witness)
    orders = {'G': n, 'X': x_order, 'W': W.order(),
              'im_rho': im_order, 'center': centre,
              'cosets_of_G': x_table.n_cosets}
    return orders, checks


# ---------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------


def verification_report(xreal, checks, engel=True, modules=True):
    """
    JSON-ready summary of a realization and its checks

    Engel data is only computed for nilpotent G; module data (L/L′ and
    W) only when `modules` is set.
    """
    report = {'group': str(xreal.base),
              'orders': xreal.orders(),
              'checks': [{'name': c.name, 'pass': c.passed,
                          'witness': c.witness} for c in checks],
              'classes': nilpotence_report(xreal)}
    if engel and report['classes']['G'] is not None:
        report['engel'] = engel_certificate(xreal)
    else:
        report['engel'] = None
    if modules:
        wreport, wchecks = w_structure_checks(xreal)
        lreport, lchecks = l_module_checks(xreal)
        wreport['L_ab'] = lreport
        report['modules'] = wreport
        report['checks'].extend({'name': c.name, 'pass': c.passed,
                                 'witness': c.witness}
                                for c in lchecks + wchecks)
    return report


def report_passed(report):
    "every recorded check passed"
    return all(c['pass'] for c in report['checks'])
