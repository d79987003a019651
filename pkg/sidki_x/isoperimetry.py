# License: CeCILL-B (French BSD3-like)

"""
Area certificates: a word w written in the free group as a product of
conjugates of relators, w = ∏ θᵢ⁻¹ rᵢ^(±1) θᵢ

Besides checking and building certificates, this module carries them
through central extensions and runs the free-group reduction behind the
quadratic distortion of L in 𝔛(F).
"""

from __future__ import print_function
from collections import namedtuple
import logging

from joblib import Parallel, delayed

from .errors import (CertificateIndexError,
                     CheckFailure,
                     LiftingError,
                     SizeGuardError,
                     UsageError)
from .intlinalg import same_lattice
from .local import AREA_SEARCH_GUARD
from .presentations import parse_presentation, reduced_words
from .words import (Alphabet,
                    GenSymbol,
                    IDENTITY,
                    Word,
                    commutator,
                    render)

_log = logging.getLogger(__name__)

LIFTING_KEY = 'lifting'
"Presentation meta key holding {central_gens, sigma}"

ELL_ALPHABET = Alphabet.plain(['l_a', 'l_b', 'lam'])
"ℓ_a, ℓ_b and λ = ℓ_a ℓ_b ℓ_ab⁻¹, generators of L in 𝔛(F(a, b))"


Factor = namedtuple('Factor', ['theta', 'relator', 'sign'])
"""One factor θ⁻¹ r^sign θ of a certificate (relator is an index)"""


class AreaCertificate(object):
    """
    A word together with its factors

    Parameters
    ----------
    word: Word
    factors: sequence of Factor
    """
    def __init__(self, word, factors):
        self.word = Word(word)
        self.factors = [Factor(Word(f.theta), int(f.relator), int(f.sign))
                        for f in factors]
        for fac in self.factors:
            if fac.sign not in (1, -1):
                raise UsageError('factor signs must be +1 or -1')

    @property
    def area(self):
        "number of factors"
        return len(self.factors)

    @property
    def radius(self):
        "longest conjugator"
        return max([len(f.theta) for f in self.factors] or [0])

    def product(self, pres):
        """
        ∏ θ⁻¹ r^sign θ, freely reduced

        Raises
        ------
        CertificateIndexError
        """
        res = IDENTITY
        for fac in self.factors:
            if not 0 <= fac.relator < len(pres.relators):
                raise CertificateIndexError(
                    'relator index {} out of range (presentation has {})'
                    .format(fac.relator, len(pres.relators)))
            rel = pres.relators[fac.relator] ** fac.sign
            res = res * rel.conjugate(fac.theta)
        return res

    def to_json(self):
        "{word, factors, area, radius}"
        return {'word': render(self.word),
                'factors': [{'theta': render(f.theta),
                             'relator': f.relator,
                             'sign': f.sign} for f in self.factors],
                'area': self.area,
                'radius': self.radius}

    @classmethod
    def from_json(cls, doc, pres):
        "read a certificate back, words over `pres`"
        return cls(pres.word(doc['word']),
                   [Factor(pres.word(f['theta']), f['relator'], f['sign'])
                    for f in doc['factors']])

    def __repr__(self):
        return 'AreaCertificate({}, area={})'.format(render(self.word),
                                                     self.area)


def check_certificate(pres, cert):
    """
    True iff the product of the factors freely reduces to the word

    Raises
    ------
    CertificateIndexError
        A factor names a relator the presentation does not have
    """
    return cert.product(pres) == cert.word


def commutator_presentation():
    "⟨a, b | [a, b]⟩, the presentation of ℤ²"
    return parse_presentation('< a, b | [a, b] >')


def grid_certificate(n):
    """
    [aⁿ, bⁿ] as n² conjugates of [a, b] over ⟨a, b | [a, b]⟩

    [aⁿ, bⁿ] = ∏ⱼ ∏ᵢ [a, b]^(aⁱ bʲ), j running up from 0 and i down from
    n − 1, so that the radius is 2n − 2.
    """
    if n < 1:
        raise UsageError('grid certificates need n ≥ 1')
    a = Word([GenSymbol('a', False, 1)])
    b = Word([GenSymbol('b', False, 1)])
    factors = [Factor(a ** i * b ** j, 0, 1)
               for j in range(n) for i in reversed(range(n))]
    return AreaCertificate(commutator(a ** n, b ** n), factors)


# ---------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------

MinimalArea = namedtuple('MinimalArea', ['area', 'certificate'])
"""Least area within the search bounds, with a certificate achieving it"""

AreaUnknown = namedtuple('AreaUnknown', ['max_area', 'max_radius', 'reason'])
"""No certificate within the bounds"""


def _in_normal_closure_mod_commutators(pres, word):
    "the exponent sums of `word` lie in the relator lattice"
    rows = [r.exponent_sums(pres.alphabet) for r in pres.relators]
    target = word.exponent_sums(pres.alphabet)
    ncols = len(pres.alphabet)
    if not any(target):
        return True
    return same_lattice(rows, rows + [target], ncols)


def _products(choices, words, length):
    """
    Every tuple of `length` choice indices with its free product, in
    lexicographic order
    """
    if len(choices) ** length > AREA_SEARCH_GUARD:
        raise SizeGuardError('{} factor tuples'.format(
            len(choices) ** length), AREA_SEARCH_GUARD)
    layer = [((), IDENTITY)]
    for _ in range(length):
        layer = [(idx + (k,), prod * words[k])
                 for idx, prod in layer for k in range(len(choices))]
    return layer


def _search_chunk(chunk, target, right):
    for idx, prod in chunk:
        hit = right.get(prod.inverse() * target)
        if hit is not None:
            return idx + hit
    return None


def minimal_area_search(pres, word, max_area, max_radius, n_jobs=1,
                        chunk_size=4096):
    """
    Least number of relator conjugates with conjugators of length at most
    `max_radius` whose product is `word`, searching areas up to `max_area`

    Tuples of factors are split in half: products of the right halves are
    indexed, and each left half looks up the complement it needs.
    Chunks of left halves can be searched in parallel; the first chunk
    (in enumeration order) with a hit decides the certificate.

    Returns
    -------
    MinimalArea or AreaUnknown
    """
    word = Word(word)
    if word.is_identity():
        return MinimalArea(0, AreaCertificate(word, []))
    if not _in_normal_closure_mod_commutators(pres, word):
        return AreaUnknown(max_area, max_radius,
                           'exponent sums outside the relator lattice')
    conjugators = list(reduced_words(pres.alphabet, max_radius))
    choices = [Factor(theta, idx, sign)
               for theta in conjugators
               for idx in range(len(pres.relators))
               for sign in (1, -1)]
    words = [(pres.relators[c.relator] ** c.sign).conjugate(c.theta)
             for c in choices]
    _log.debug('area search for %s: %d factor choices', word, len(choices))
    cache = {}

    def products(length):
        if length not in cache:
            cache[length] = _products(choices, words, length)
        return cache[length]

    for area in range(1, max_area + 1):
        half = area // 2
        right = {}
        for idx, prod in products(area - half):
            right.setdefault(prod, idx)
        left = products(half)
        chunks = [left[k:k + chunk_size]
                  for k in range(0, len(left), chunk_size)]
        hits = Parallel(n_jobs=n_jobs)(delayed(_search_chunk)(c, word, right)
                                       for c in chunks)
        found = next((h for h in hits if h is not None), None)
        if found is not None:
            cert = AreaCertificate(word, [choices[k] for k in found])
            if not check_certificate(pres, cert):
                raise CheckFailure('search certificate is valid', str(word))
            return MinimalArea(area, cert)
    return AreaUnknown(max_area, max_radius, 'no certificate within bounds')


def as_relator_conjugate(word, pres):
    """
    Write `word` as α⁻¹ r^(±1) α for a relator r of `pres`

    The outer conjugator is stripped first; what is left must be a
    rotation p⁻¹ r^(±1) p of a relator power, and then α = p·β.

    Returns
    -------
    (relator index, sign, α), or None
    """
    letters = Word(word).letters
    if not letters:
        return None
    k = 0
    while len(letters) - 2 * k > 1 and \
            letters[k] == letters[-1 - k].inverse():
        k += 1
    core = letters[k:len(letters) - k]
    beta = Word._trusted(letters[len(letters) - k:])
    for idx, rel in enumerate(pres.relators):
        for sign in (1, -1):
            power = (rel ** sign).letters
            if len(power) != len(core):
                continue
            for shift in range(len(power)):
                if power[shift:] + power[:shift] == core:
                    return (idx, sign, Word(power[:shift]) * beta)
    return None


# ---------------------------------------------------------------------
# central extensions
# ---------------------------------------------------------------------


class LiftingData(namedtuple('LiftingData', ['central', 'sigmas'])):
    """
    The central generators of an extension and, for every relator rᵢ of
    the quotient presentation, a word σᵢ over them with rᵢσᵢ = 1
    """
    __slots__ = ()

    @classmethod
    def from_presentation(cls, total):
        "read `meta['lifting']` of the total presentation"
        doc = total.meta.get(LIFTING_KEY)
        if not doc:
            raise LiftingError('presentation carries no lifting data')
        central = [(n, False) for n in doc.get('central_gens', [])]
        for gen in central:
            if gen not in total.generators:
                raise LiftingError('central generator {} is not declared'
                                   .format(gen[0]))
        sigmas = [total.word(text) for text in doc.get('sigma', [])]
        keys = set(central)
        for sigma in sigmas:
            if sigma.generators() - keys:
                raise LiftingError('correction word {} leaves the centre'
                                   .format(sigma))
        return cls(tuple(central), tuple(sigmas))

    def to_json(self):
        "meta form"
        return {'central_gens': [n for n, _ in self.central],
                'sigma': [render(s) for s in self.sigmas]}


def heisenberg_extension():
    """
    ℤ² = ⟨a, b | [a, b]⟩ and the Heisenberg group as its central extension
    by ⟨c⟩, with σ = c⁻¹

    Returns
    -------
    quotient, total: Presentation
    """
    quotient = commutator_presentation()
    total = parse_presentation('< a, b, c | [a, b]*c^-1, [a, c], [b, c] >')
    lifting = LiftingData((('c', False),), (total.word('c^-1'),))
    return quotient, total.with_meta(**{LIFTING_KEY: lifting.to_json()})


class _Rewriter(object):
    """
    Keeps original = (∏ factors)·current in the free group while adjacent
    letters of `current` get swapped

    Swapping p and q in x·p·q·s costs the factor x [p⁻¹, q⁻¹] x⁻¹, since
    x p q s = (x [p⁻¹, q⁻¹] x⁻¹)(x q p s).
    """

    def __init__(self, pres, letters, lookup):
        self.pres = pres
        self.current = list(letters)
        self.factors = []
        self.swaps = 0
        self._lookup = lookup

    def swap(self, pos):
        "exchange current[pos] and current[pos + 1]"
        p, q = self.current[pos], self.current[pos + 1]
        comm = Word([p, q, p.inverse(), q.inverse()])
        idx, sign, alpha = self._lookup(comm)
        prefix = Word(self.current[:pos])
        self.factors.append(Factor(alpha * prefix.inverse(), idx, sign))
        self.current[pos], self.current[pos + 1] = q, p
        self.swaps += 1

    def sort(self, key):
        "stable bubble sort by key, then free reduction"
        done = False
        while not done:
            done = True
            for pos in range(len(self.current) - 1):
                if key(self.current[pos]) > key(self.current[pos + 1]):
                    self.swap(pos)
                    done = False
        self.current = list(Word(self.current).letters)
        return self


CentralCost = namedtuple('CentralCost',
                         ['sort', 'commute', 'relators', 'central', 'total',
                          'bound', 'bound_at_area'])
"""Factor counts of a transformed certificate, by origin, and two closed
form bounds.

`bound_at_area` is n² + μδ² + δ + (n + μδ)², with n = |w|, δ the area and
μ the longest correction word; it holds when the radius r is at most δ.
Moving one σ past a conjugator costs up to μ times its length, so for a
certificate with r > δ the commute term grows to μδr: `bound` is
n² + μδ·max(δ, r) + δ + (n + μδ)², equal to `bound_at_area` when r ≤ δ."""


def central_transform(quotient, total, cert, word=None, oracle=None):
    """
    Carry a certificate over G/C to the central extension G

    If w = ∏ θ⁻¹ r^ε θ over the quotient, then w equals a word z over the
    central generators in G; the result certifies w·nf(z)⁻¹ over `total`,
    nf(z) being z with its letters sorted by generator and reduced.

    Parameters
    ----------
    quotient, total: Presentation
        `total` must hold the lifting data and, for every base letter x
        and central c, a relator [x, c] (up to rotation and inversion),
        plus [c, c′] for distinct central generators
    cert: AreaCertificate
        Over `quotient`
    word: Word, optional
        A word over the total alphabet whose base letters give
        `cert.word`; central letters are sorted out first
    oracle: optional
        Word-problem oracle for `total`, used to confirm rᵢσᵢ = 1

    Returns
    -------
    cert: AreaCertificate
    central_word: Word
        nf(z)
    cost: CentralCost

    Raises
    ------
    LiftingError
    CheckFailure
        The transformed certificate does not check or breaks the bound
    """
    lifting = LiftingData.from_presentation(total)
    central = set(lifting.central)
    if len(lifting.sigmas) != len(quotient.relators):
        raise LiftingError('one correction word per quotient relator '
                           '(got {} for {})'.format(len(lifting.sigmas),
                                                    len(quotient.relators)))
    if not check_certificate(quotient, cert):
        raise UsageError('input certificate does not check')
    word = cert.word if word is None else Word(word)
    base_part = Word(s for s in word if s.generator not in central)
    if base_part != cert.word:
        raise UsageError('certificate is for {}, not for the base part {}'
                         .format(cert.word, base_part))
    cache = {}

    def lookup(comm):
        if comm not in cache:
            found = as_relator_conjugate(comm, total)
            if found is None:
                raise LiftingError('no relator of the extension makes {} '
                                   'trivial'.format(comm))
            cache[comm] = found
        return cache[comm]

    lifted = []
    for rel, sigma in zip(quotient.relators, lifting.sigmas):
        full = rel * sigma
        found = as_relator_conjugate(full, total)
        if found is None:
            raise LiftingError('{} is not a relator of the extension'.format(
                full))
        if oracle is not None and not oracle.decide(full).is_trivial:
            raise LiftingError('{} is not trivial in the extension'.format(
                full))
        lifted.append(found)

    def is_central(sym):
        return sym.generator in central

    sorter = _Rewriter(total, word.letters, lookup).sort(
        lambda s: 1 if is_central(s) else 0)
    factors = list(sorter.factors)
    z_w = [s for s in sorter.current if is_central(s)]
    commute = 0
    accumulated = IDENTITY
    for fac in cert.factors:
        idx, sign, alpha = lifted[fac.relator]
        sigma = lifting.sigmas[fac.relator]
        if fac.sign > 0:
            item = [Factor(alpha * fac.theta, idx, sign)]
            tau = sigma.inverse()
        else:
            item = [Factor(alpha * sigma.inverse() * fac.theta, idx, -sign)]
            tau = sigma
        mover = _Rewriter(total, fac.theta.inverse().letters + tau.letters +
                          fac.theta.letters, lookup)
        mover.sort(lambda s: 0 if is_central(s) else 1)
        commute += mover.swaps
        item.extend(mover.factors)
        back = accumulated.inverse()
        factors.extend(Factor(f.theta * back, f.relator, f.sign)
                       for f in item)
        accumulated = accumulated * tau
    order = {gen: k for k, gen in enumerate(lifting.central)}
    collector = _Rewriter(total, (accumulated * Word(z_w)).letters, lookup)
    collector.sort(lambda s: order[s.generator])
    factors.extend(collector.factors)
    normal_form = Word(collector.current)
    res = AreaCertificate(word * normal_form.inverse(), factors)
    if not check_certificate(total, res):
        raise CheckFailure('transformed certificate is valid', str(word))
    n = len(word)
    area = cert.area
    mu = max([len(s) for s in lifting.sigmas] or [0])
    bound_at_area = n ** 2 + mu * area ** 2 + area + (n + mu * area) ** 2
    bound = bound_at_area + mu * area * max(cert.radius - area, 0)
    cost = CentralCost(sorter.swaps, commute, area, collector.swaps,
                       res.area, bound, bound_at_area)
    if cost.total > bound:
        raise CheckFailure('transformed area within the bound',
                           '{} > {}'.format(cost.total, bound))
    return res, normal_form, cost


# ---------------------------------------------------------------------
# distortion of L in X(F)
# ---------------------------------------------------------------------


def c_n_word(n):
    """
    c_n = ℓ_(aⁿ) ℓ_(bⁿ) ℓ_(aⁿbⁿ)⁻¹ = (a⁻¹ā)ⁿ b⁻ⁿ (ā⁻¹a)ⁿ bⁿ over X ∪ X̄
    """
    if n < 1:
        raise UsageError('c_n needs n ≥ 1')
    a = Word([GenSymbol('a', False, 1)])
    b = Word([GenSymbol('b', False, 1)])
    ell_a = a.inverse() * a.bar()
    return ell_a ** n * b ** -n * ell_a.inverse() ** n * b ** n


def c_n_ell_word(n):
    "the same element over {a, b, ℓ_a}: ℓ_aⁿ b⁻ⁿ ℓ_a⁻ⁿ bⁿ"
    if n < 1:
        raise UsageError('c_n needs n ≥ 1')
    ell_a = Word([GenSymbol('l_a', False, 1)])
    b = Word([GenSymbol('b', False, 1)])
    return ell_a ** n * b ** -n * ell_a ** -n * b ** n


FreeAreaReduction = namedtuple('FreeAreaReduction', ['V', 'factors'])
"""w = V·∏ λ^(sign·θ) in the free group on ℓ_a, ℓ_b, λ; factors are
(θ, sign) pairs"""


def reduce_to_free_area(word):
    """
    Push every λ of a word over {ℓ_a, ℓ_b, λ} to the right with
    v·u^v = u·v, giving w = V·∏ λ^(±θᵢ)

    Raises
    ------
    UsageError
        Letters outside the alphabet
    """
    word = Word(word)
    if word.generators() - set(ELL_ALPHABET.generators):
        raise UsageError('reduction works over l_a, l_b and lam only')
    lam = ('lam', False)
    head = IDENTITY
    factors = []
    for sym in word:
        if sym.generator == lam:
            factors.append((IDENTITY, sym.sign))
            continue
        step = Word([sym])
        head = head * step
        factors = [(theta * step, sign) for theta, sign in factors]
    res = FreeAreaReduction(head, factors)
    if expand_free_area(res) != word:
        raise CheckFailure('free reduction reproduces the word', str(word))
    return res


def expand_free_area(reduction):
    "V·∏ λ^(±θ), freely reduced"
    lam = Word([GenSymbol('lam', False, 1)])
    res = reduction.V
    for theta, sign in reduction.factors:
        res = res * (lam ** sign).conjugate(theta)
    return res


def project_pbar(word):
    "p̄: ℓ_a ↦ ā, ℓ_b ↦ b̄, λ ↦ 1"
    return word.substitute({('l_a', False): Word([GenSymbol('a', True, 1)]),
                            ('l_b', False): Word([GenSymbol('b', True, 1)]),
                            ('lam', False): IDENTITY})


def project_p(word):
    "p: ℓ_a ↦ a⁻¹, ℓ_b ↦ b⁻¹, λ ↦ [a, b]"
    a = Word([GenSymbol('a', False, 1)])
    b = Word([GenSymbol('b', False, 1)])
    return word.substitute({('l_a', False): a.inverse(),
                            ('l_b', False): b.inverse(),
                            ('lam', False): commutator(a, b)})


def free_area_certificate(reduction):
    """
    The image of w = ∏ λ^(±θᵢ) under p: a certificate for p(w) over
    ⟨a, b | [a, b]⟩ with one factor per λ

    Raises
    ------
    UsageError
        V is not empty
    """
    if not reduction.V.is_identity():
        raise UsageError('the reduction has a nonempty ℓ-prefix')
    factors = [Factor(project_p(theta), 0, sign)
               for theta, sign in reduction.factors]
    word = project_p(expand_free_area(reduction))
    return AreaCertificate(word, factors)


def grid_l_word(n):
    """
    ∏ λ^θ over the grid, θ = ℓ_a⁻ⁱ ℓ_b⁻ʲ: a word over {ℓ_a, ℓ_b, λ} with
    p-image [aⁿ, bⁿ] and trivial p̄-image
    """
    la = Word([GenSymbol('l_a', False, 1)])
    lb = Word([GenSymbol('l_b', False, 1)])
    lam = Word([GenSymbol('lam', False, 1)])
    res = IDENTITY
    for fac in grid_certificate(n).factors:
        exps = fac.theta.exponent_sums(Alphabet.plain(['a', 'b']))
        res = res * lam.conjugate(la ** -exps[0] * lb ** -exps[1])
    return res


def distortion_brackets(n):
    """
    Estimates of the length of c_n in L against its length 6n in 𝔛(F)

    The lower bound n² is the area bound behind the reduction; the upper
    figure is the length of the explicit candidate ∏ λ^θ, whose images
    under p and p̄ are checked against those of c_n.
    """
    cn = c_n_word(n)
    candidate = grid_l_word(n)
    first, _, third = cn.rho()
    p_ok = project_p(candidate) == first
    pbar_ok = project_pbar(candidate) == third.bar()
    reduction = reduce_to_free_area(candidate)
    cert = free_area_certificate(reduction)
    return {'n': n,
            'lower': n * n,
            'extrinsic': len(cn),
            'upper_candidate': len(candidate),
            'lambda_factors': len(reduction.factors),
            'projections_match': bool(p_ok and pbar_ok),
            'certificate_checks': check_certificate(commutator_presentation(),
                                                    cert)}


def iterated_central_bound(delta, k):
    """
    Exponent bound δ^(2^k) for k central layers over a group with Dehn
    function nᵟ (each layer squares the bound)
    """
    if k < 0:
        raise UsageError('the number of layers is nonnegative')
    return delta ** (2 ** k)
