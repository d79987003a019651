# License: CeCILL-B (French BSD3-like)

"""
The word problem in 𝔛(G) over a word-problem oracle for G, and growth
of Cayley balls

A word of 𝔛(G) is first sent to G×G×G by ρ; a nontrivial coordinate
settles it. Otherwise it lies in W and two searches are interleaved: one
for a product of relator conjugates equal to the word, one for a finite
quotient in which the word survives. When the double has been realized,
the realization answers directly.
"""

from __future__ import print_function
from collections import OrderedDict, deque, namedtuple
import logging

import numpy as np

from .enumerator import enumerate_cosets
from .errors import (AlphabetError,
                     CheckFailure,
                     Overflow,
                     PartialResultError,
                     UsageError)
from .isoperimetry import (AreaCertificate,
                           Factor,
                           as_relator_conjugate,
                           check_certificate)
from .local import (FALLBACK_LENGTH_BOUND,
                    MAX_COSETS,
                    RANDOM_SEED,
                    WP_BUDGET)
from .permgroups import is_identity_perm, perm_identity, perm_inv, perm_mul
from .presentations import WitnessPolicy, reduced_words, sidki_double
from .words import IDENTITY, Word, render

_log = logging.getLogger(__name__)

TRIVIAL = 'trivial'
NONTRIVIAL = 'nontrivial'
UNKNOWN = 'unknown'


class Verdict(namedtuple('Verdict', ['kind', 'certificate', 'budget',
                                     'method'])):
    """
    Answer to "is this word trivial?"

    Trivial verdicts may carry an AreaCertificate, nontrivial ones a
    witness (a ρ-coordinate or a finite quotient); unknown ones carry the
    budget they spent.
    """
    __slots__ = ()

    @classmethod
    def trivial(cls, certificate=None, method=None):
        "the word is trivial"
        return cls(TRIVIAL, certificate, None, method)

    @classmethod
    def nontrivial(cls, witness=None, method=None):
        "the word is not trivial"
        return cls(NONTRIVIAL, witness, None, method)

    @classmethod
    def unknown(cls, budget, method=None):
        "budget spent without an answer"
        return cls(UNKNOWN, None, budget, method)

    @property
    def is_trivial(self):
        "kind is trivial"
        return self.kind == TRIVIAL

    @property
    def is_nontrivial(self):
        "kind is nontrivial"
        return self.kind == NONTRIVIAL

    @property
    def is_unknown(self):
        "kind is unknown"
        return self.kind == UNKNOWN

    def to_json(self):
        "report form"
        cert = self.certificate
        if isinstance(cert, AreaCertificate):
            cert = cert.to_json()
        return {'verdict': self.kind,
                'method': self.method,
                'certificate': cert,
                'budget': self.budget}


# ---------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------


class WordOracle(object):
    """
    Sound and total word-problem solver over an alphabet

    Subclasses implement `normal_form` when they have one; `decide` then
    comes for free.
    """
    has_normal_form = True

    def __init__(self, alphabet):
        self.alphabet = alphabet

    def check_word(self, word):
        "the word as a Word over our alphabet"
        try:
            return Word(word, alphabet=self.alphabet)
        except AlphabetError as err:
            raise AlphabetError('{} ({!r})'.format(err, self.alphabet))

    def normal_form(self, word):
        "hashable, equal exactly for equal elements"
        raise NotImplementedError

    def identity_form(self):
        "normal form of the identity"
        return self.normal_form(IDENTITY)

    def decide(self, word):
        "Verdict on the word"
        form = self.normal_form(self.check_word(word))
        if form == self.identity_form():
            return Verdict.trivial(method='normal form')
        return Verdict.nontrivial({'normal_form': _printable(form)},
                                  method='normal form')

    def equal(self, left, right):
        "Verdict on left·right⁻¹"
        return self.decide(Word(left) * Word(right).inverse())


def _printable(form):
    if isinstance(form, Word):
        return render(form)
    if isinstance(form, tuple):
        return [int(x) for x in form]
    return int(form)


class FiniteOracle(WordOracle):
    """
    A finite group by its regular coset table; the normal form of a word
    is the coset it sends 0 to
    """

    def __init__(self, table):
        super(FiniteOracle, self).__init__(table.alphabet)
        if table.subgroup_words:
            raise UsageError('a finite oracle needs the regular table')
        self.table = table

    def normal_form(self, word):
        return self.table.coset_of(word)

    def identity_form(self):
        return 0


class FreeGroupOracle(WordOracle):
    "free reduction"

    def normal_form(self, word):
        return Word(word)


class FreeAbelianOracle(WordOracle):
    "exponent sums"

    def normal_form(self, word):
        return tuple(Word(word).exponent_sums(self.alphabet))


class HeisenbergOracle(WordOracle):
    """
    ⟨a, b, c | [a, b] = c central⟩ with normal form a^x b^y c^z

    Right multiplication: (x, y, z)·a^ε = (x + ε, y, z − εy),
    (x, y, z)·b^ε = (x, y + ε, z), (x, y, z)·c^ε = (x, y, z + ε).
    """

    def __init__(self, alphabet, names=('a', 'b', 'c')):
        super(HeisenbergOracle, self).__init__(alphabet)
        self.names = tuple((n, False) for n in names)
        for gen in self.names:
            if gen not in alphabet:
                raise UsageError('{} is not in {!r}'.format(gen[0], alphabet))

    def normal_form(self, word):
        a, b, c = self.names
        x = y = z = 0
        for sym in Word(word):
            if sym.generator == a:
                x += sym.sign
                z -= sym.sign * y
            elif sym.generator == b:
                y += sym.sign
            elif sym.generator == c:
                z += sym.sign
            else:
                raise AlphabetError('{} is not a Heisenberg generator'.format(
                    sym.render()))
        return (x, y, z)


class SidkiFreeAbelianOracle(FreeAbelianOracle):
    """
    The double of ℤ, free abelian on a and ā

    Doubles of ℤⁿ for n > 1 are not abelian ([a, b̄] survives) and are
    refused.
    """

    def __init__(self, alphabet):
        base = {name for name, _ in alphabet}
        if len(base) != 1:
            raise UsageError('only the double of a cyclic group is free '
                             'abelian')
        super(SidkiFreeAbelianOracle, self).__init__(alphabet)


# ---------------------------------------------------------------------
# the word problem in X(G)
# ---------------------------------------------------------------------


XGSetup = namedtuple('XGSetup', ['base', 'oracle', 'double', 'realization',
                                 'max_cosets'])
"""Base presentation with its oracle, the double, (for finite G) the
double's regular coset table, and the coset limit for the searches"""


def make_setup(base, oracle=None, double=None, realize=True,
               max_cosets=MAX_COSETS):
    """
    Gather what the solver needs

    Without an oracle, G is enumerated and its coset table used (a
    FiniteOracle brings its own); with `realize`, the double is
    enumerated as well when G is finite.

    Raises
    ------
    Overflow
        No oracle given and G does not enumerate
    """
    g_table = None
    if oracle is None:
        g_table = enumerate_cosets(base, max_cosets=max_cosets)
        oracle = FiniteOracle(g_table)
    elif isinstance(oracle, FiniteOracle):
        g_table = oracle.table
    if double is None:
        policy = None if g_table is not None else \
            WitnessPolicy.length_bound(FALLBACK_LENGTH_BOUND)
        double = sidki_double(base, policy=policy, table=g_table,
                              max_cosets=max_cosets)
    realization = None
    if realize and g_table is not None:
        try:
            realization = enumerate_cosets(double, max_cosets=max_cosets)
        except Overflow:
            _log.warning('the double of %s does not enumerate within %d '
                         'cosets; using the searches', base, max_cosets)
    return XGSetup(base, oracle, double, realization, max_cosets)


def _fast_path(setup, word):
    table = setup.realization
    if table.coset_of(word) != 0:
        return Verdict.nontrivial({'quotient': 'realization',
                                   'degree': table.n_cosets},
                                  method='realization')
    if word.is_identity():
        return Verdict.trivial(AreaCertificate(word, []),
                               method='realization')
    found = as_relator_conjugate(word, setup.double)
    cert = None
    if found is not None:
        idx, sign, alpha = found
        cert = AreaCertificate(word, [Factor(alpha, idx, sign)])
    return Verdict.trivial(cert, method='realization')


def triviality_search(word, pres):
    """
    Relator insertion: from w = x·y go to x·R′·y, freely reduced, for
    every rotation R′ of a relator or its inverse, until the empty word

    States are taken breadth first up to a length limit. When none are
    left the limit grows by the longest relator and the states put aside
    come back, so every trivial word is reached: peeling the faces of a
    van Kampen diagram off its boundary one at a time is such a path,
    through words no longer than |w| plus the area times the longest
    relator.

    Yields (work, None) for every state expanded, work being the number
    of words built, then (work, certificate). Stops without a
    certificate once no state is left.
    """
    start = Word(word)
    if start.is_identity():
        yield 0, AreaCertificate(start, [])
        return
    rotations = []
    for idx, rel in enumerate(pres.relators):
        for sign in (1, -1):
            power = (rel ** sign).letters
            for shift in range(len(power)):
                rotations.append((idx, sign, Word(power[:shift]),
                                  Word._trusted(power[shift:] +
                                                power[:shift])))
    if not rotations:
        return
    step = max(len(r) for r in pres.relators)
    limit = len(start) + step
    parents = {start: None}
    frontier = deque([start])
    deferred = OrderedDict()
    while frontier or deferred:
        if not frontier:
            limit += step
            _log.debug('relator insertion: length limit now %d (%d states)',
                       limit, len(parents))
            for nxt in list(deferred):
                link = deferred[nxt]
                if nxt in parents:
                    del deferred[nxt]
                elif len(nxt) <= limit:
                    del deferred[nxt]
                    parents[nxt] = link
                    frontier.append(nxt)
            continue
        cur = frontier.popleft()
        work = 0
        for pos in range(len(cur) + 1):
            head = Word._trusted(cur.letters[:pos])
            tail = Word._trusted(cur.letters[pos:])
            for idx, sign, prefix, rot in rotations:
                work += 1
                nxt = head * rot * tail
                if nxt in parents:
                    continue
                # w = (x R′⁻¹ x⁻¹)·w′ and R′ = p⁻¹ R p
                link = (cur, Factor(prefix * head.inverse(), idx, -sign))
                if len(nxt) > limit:
                    deferred.setdefault(nxt, link)
                    continue
                parents[nxt] = link
                if nxt.is_identity():
                    yield work, _chain(start, nxt, parents, pres)
                    return
                frontier.append(nxt)
        yield work, None


def _chain(start, end, parents, pres):
    factors = []
    cur = end
    while parents[cur] is not None:
        prev, fac = parents[cur]
        factors.append(fac)
        cur = prev
    cert = AreaCertificate(start, list(reversed(factors)))
    if not check_certificate(pres, cert):
        raise CheckFailure('relator insertion chain checks', str(start))
    return cert


def _word_perm(word, alphabet, perms, degree):
    res = perm_identity(degree)
    for sym in word:
        gen = perms[alphabet.index(sym)]
        res = perm_mul(res, gen if sym.sign > 0 else perm_inv(gen))
    return res


def quotient_search(word, pres, rng, max_cosets=MAX_COSETS):
    """
    Finite quotients of `pres`: coset tables over cyclic subgroups, and
    random permutation images checked on the relators

    Each lap doubles the cosets a table may define, up to `max_cosets`;
    once there, only the permutation images go on, one degree higher
    every lap.

    Yields (work, None) for every attempt, work being the cosets defined
    or the degree tried, then (work, witness) for the first quotient
    where `word` acts nontrivially.
    """
    candidates = [IDENTITY]
    for cand in reduced_words(pres.alphabet, 2):
        if not cand.is_identity() and cand.inverse() not in candidates:
            candidates.append(cand)
    lap = 0
    limit = 0
    while True:
        lap += 1
        grown = min(2 ** (lap + 3), max(max_cosets, 1))
        if grown > limit:
            limit = grown
            for cand in candidates:
                subgens = [] if cand.is_identity() else [cand]
                try:
                    table = enumerate_cosets(pres, subgens=subgens,
                                             max_cosets=limit,
                                             max_defined=limit)
                except Overflow as err:
                    yield err.defined, None
                    continue
                if table.word_image(word).tolist() != list(range(
                        table.n_cosets)):
                    yield limit, {'quotient': 'cosets',
                                  'subgroup': render(cand),
                                  'degree': table.n_cosets,
                                  'generators':
                                  table.to_json()['generators']}
                    return
                yield limit, None
        degree = lap + 1
        perms = [rng.permutation(degree) for _ in pres.alphabet]
        if all(is_identity_perm(_word_perm(r, pres.alphabet, perms, degree))
               for r in pres.relators) and \
                not is_identity_perm(_word_perm(word, pres.alphabet, perms,
                                                degree)):
            yield degree, {'quotient': 'permutations',
                           'degree': degree,
                           'generators': {'{}{}'.format(n, '~' if b else ''):
                                          [int(x) for x in p]
                                          for (n, b), p in zip(pres.alphabet,
                                                               perms)}}
            return
        yield degree, None


def xg_word_problem(setup, word, budget=WP_BUDGET, seed=RANDOM_SEED):
    """
    Decide whether `word` is trivial in 𝔛(G)

    Trivial and nontrivial verdicts are always right; Unknown means the
    budget ran out. The budget counts words built by the triviality
    search and cosets defined (or permutation degrees tried) by the
    quotient search; a step started within the budget is finished, and
    no coset table may define more cosets than the budget.

    Raises
    ------
    AlphabetError
        Letters outside the double's alphabet
    """
    double = setup.double
    word = Word(word)
    for sym in word:
        if sym not in double.alphabet:
            raise AlphabetError('{} is not a letter of the double'.format(
                sym.render()))
    coords = word.rho()
    for k, coord in enumerate(coords):
        verdict = setup.oracle.decide(coord)
        if verdict.is_nontrivial:
            return Verdict.nontrivial({'rho': [render(c) for c in coords],
                                       'coordinate': k + 1}, method='rho')
        if verdict.is_unknown:
            return Verdict.unknown(verdict.budget, method='rho')
    if setup.realization is not None:
        return _fast_path(setup, word)
    rng = np.random.default_rng(seed)
    searches = [('states', triviality_search(word, double)),
                ('quotients', quotient_search(
                    word, double, rng,
                    max_cosets=min(setup.max_cosets, budget)))]
    spent = {'states': 0, 'quotients': 0}
    alive = [True, True]
    quota = 1
    while any(alive):
        for k, (name, search) in enumerate(searches):
            used = 0
            while alive[k] and used < quota:
                if sum(spent.values()) >= budget:
                    return Verdict.unknown(dict(spent), method='search')
                try:
                    work, found = next(search)
                except StopIteration:
                    alive[k] = False
                    break
                spent[name] += work
                used += max(work, 1)
                if found is None:
                    continue
                if name == 'states':
                    return Verdict.trivial(found, method='search')
                return Verdict.nontrivial(found, method='search')
        quota *= 2
    return Verdict.unknown(dict(spent), method='search')


class XGOracle(WordOracle):
    """
    The solver as an oracle over the double's alphabet (no normal form)
    """
    has_normal_form = False

    def __init__(self, setup, budget=WP_BUDGET):
        super(XGOracle, self).__init__(setup.double.alphabet)
        self.setup = setup
        self.budget = budget

    def decide(self, word):
        return xg_word_problem(self.setup, self.check_word(word),
                               budget=self.budget)


ORACLES = ('finite', 'free', 'abelian', 'heisenberg')


def make_oracle(pres, kind='auto', max_cosets=MAX_COSETS):
    """
    A word-problem oracle for G by name; 'auto' is 'free' for a
    presentation without relators and 'finite' otherwise
    """
    if kind == 'auto':
        kind = 'finite' if pres.relators else 'free'
    if kind == 'finite':
        return FiniteOracle(enumerate_cosets(pres, max_cosets=max_cosets))
    if kind == 'free':
        if pres.relators:
            raise UsageError('{} is not free'.format(pres))
        return FreeGroupOracle(pres.alphabet)
    if kind == 'abelian':
        return FreeAbelianOracle(pres.alphabet)
    if kind == 'heisenberg':
        return HeisenbergOracle(pres.alphabet)
    raise UsageError('unknown oracle {!r} (want one of {})'.format(
        kind, ', '.join(ORACLES)))


def double_oracle(setup, budget=WP_BUDGET):
    """
    The best oracle for 𝔛(G) the setup allows: the realization when
    there is one, exponent sums for the double of ℤ, and the solver
    otherwise
    """
    if setup.realization is not None:
        return FiniteOracle(setup.realization)
    cyclic = len(setup.base.generators) == 1 and not setup.base.relators
    if cyclic and isinstance(setup.oracle, (FreeGroupOracle,
                                            FreeAbelianOracle)):
        return SidkiFreeAbelianOracle(setup.double.alphabet)
    return XGOracle(setup, budget=budget)


# ---------------------------------------------------------------------
# growth
# ---------------------------------------------------------------------


def _symmetrized(gens):
    res = []
    for gen in gens:
        for word in (Word(gen), Word(gen).inverse()):
            if not word.is_identity() and word not in res:
                res.append(word)
    return res


def ball_sizes(gens, oracle, radius):
    """
    |B(0)|, ..., |B(radius)| for the word metric of `gens` (closed under
    inverses here)

    Elements are told apart by the oracle's normal form when it has one,
    and by pairwise equality queries otherwise.

    Raises
    ------
    PartialResultError
        The oracle could not decide an equality; the sizes known so far
        are attached
    """
    gens = _symmetrized(gens)
    sizes = [1]
    if oracle.has_normal_form:
        seen = {oracle.normal_form(IDENTITY)}

        def is_new(word):
            form = oracle.normal_form(word)
            if form in seen:
                return False
            seen.add(form)
            return True
    else:
        known = [IDENTITY]

        def is_new(word):
            for other in known:
                verdict = oracle.equal(word, other)
                if verdict.is_unknown:
                    raise PartialResultError(
                        'could not decide {} = {}'.format(word, other),
                        list(sizes))
                if verdict.is_trivial:
                    return False
            known.append(word)
            return True

    sphere = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for word in sphere:
            for gen in gens:
                cand = word * gen
                if is_new(cand):
                    nxt.append(cand)
        sizes.append(sizes[-1] + len(nxt))
        sphere = nxt
    return sizes


Growth = namedtuple('Growth', ['kind', 'value', 'heuristic'])
"""Classification of finite ball data: kind is 'polynomial' (value: the
degree), 'exponential' (value: the rate) or 'inconclusive'; heuristic is
always set"""

EXPONENTIAL_RATIO = 1.5
DEGREE_TOLERANCE = 0.35
RESIDUAL_TOLERANCE = 0.05


def growth_classifier(sizes):
    """
    Read a growth type off ball sizes, looking at the upper half of the
    radii only

    Constant sizes give degree 0. Successive ratios all above 1.5 and not
    decaying give exponential growth at the last ratio. Otherwise a
    least-squares line through (log r, log |B(r)|) gives the degree when
    its slope is close to an integer and it fits well.

    Raises
    ------
    UsageError
        Fewer than four sizes
    """
    if len(sizes) < 4:
        raise UsageError('growth needs at least 4 ball sizes')
    sizes = np.asarray(sizes, dtype=float)
    upper = np.arange(len(sizes) // 2, len(sizes))
    tail = sizes[upper]
    if (tail == tail[0]).all():
        return Growth('polynomial', 0, True)
    ratios = sizes[upper[upper >= 1]] / sizes[upper[upper >= 1] - 1]
    if ratios.min() >= EXPONENTIAL_RATIO and \
            ratios[-1] / ratios[0] >= 0.9:
        return Growth('exponential', float(ratios[-1]), True)
    radii = upper[upper >= 1]
    design = np.column_stack([np.log(radii), np.ones(len(radii))])
    target = np.log(sizes[radii])
    coef, _, _, _ = np.linalg.lstsq(design, target, rcond=None)
    slope = float(coef[0])
    residual = float(np.abs(design.dot(coef) - target).max())
    degree = int(round(slope))
    if abs(slope - degree) <= DEGREE_TOLERANCE and \
            residual <= RESIDUAL_TOLERANCE:
        return Growth('polynomial', degree, True)
    return Growth('inconclusive', slope, True)


def growth_rate(sizes):
    "|B(R)|^(1/R) at the largest radius R"
    radius = len(sizes) - 1
    if radius < 1:
        raise UsageError('growth rate needs a positive radius')
    return float(sizes[-1]) ** (1.0 / radius)


def growth_report(gens, sizes):
    "{generators, radii, sizes, classification, heuristic_flag}"
    growth = growth_classifier(sizes)
    return {'generators': [render(g) for g in gens],
            'radii': list(range(len(sizes))),
            'sizes': [int(s) for s in sizes],
            'classification': {'kind': growth.kind,
                               'value': growth.value},
            'growth_rate': growth_rate(sizes),
            'heuristic_flag': growth.heuristic}
