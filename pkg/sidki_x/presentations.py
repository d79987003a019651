# License: CeCILL-B (French BSD3-like)

"""
Finite presentations ⟨X | R⟩, their text and JSON forms, and the
constructions we need on them: the Sidki double, abelianization, free
and direct products
"""

from __future__ import print_function
from collections import namedtuple
import itertools
import logging

from .errors import (Overflow,
                     UndeclaredGeneratorError,
                     UsageError)
from .intlinalg import cokernel
from .parser import parse_raw_presentation, parse_raw_word
from .words import (Alphabet,
                    BAR,
                    GenSymbol,
                    IDENTITY,
                    Word,
                    commutator,
                    render)

_log = logging.getLogger(__name__)

PRESENTATION_VERSION = 1
"Schema version of the presentation JSON document"

ELL_PREFIX = 'l_'
"`l_x` in text stands for x⁻¹x̄ when both copies of x are declared"


class Presentation(object):
    """
    A finite presentation

    Parameters
    ----------
    generators: sequence of (string, bool)
        Generator keys (name, barred), in declaration order
    relators: sequence of Word
        Stored cyclically reduced; trivial relators are dropped
    meta: dict, optional
        Free-form annotations (witness policy, lifting data, ...)
    """
    def __init__(self, generators, relators, meta=None):
        self.alphabet = Alphabet(generators)
        self.generators = self.alphabet.generators
        rels = []
        for rel in relators:
            undeclared = rel.generators() - set(self.generators)
            if undeclared:
                names = sorted(n + (BAR if b else '') for n, b in undeclared)
                raise UndeclaredGeneratorError(
                    'relator {} uses undeclared generators: {}'.format(
                        rel, ', '.join(names)))
            rel = rel.cyclically_reduced()
            if not rel.is_identity():
                rels.append(rel)
        self.relators = tuple(rels)
        self.meta = dict(meta or {})

    def __eq__(self, other):
        return isinstance(other, Presentation) and \
            self.generators == other.generators and \
            self.relators == other.relators

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.generators, self.relators))

    def __repr__(self):
        return 'Presentation({!r})'.format(str(self))

    def __str__(self):
        gens = ', '.join(n + (BAR if b else '') for n, b in self.generators)
        rels = ', '.join(render(r) for r in self.relators)
        return '< {} | {} >'.format(gens, rels)

    def generator_words(self):
        "one-letter words for the generators, in order"
        return [Word([GenSymbol(n, b, 1)]) for n, b in self.generators]

    def word(self, text):
        "parse a word over this presentation's generators"
        return _resolve(parse_raw_word(text), self.generators)

    def bar(self):
        "the same presentation on the other copy"
        return Presentation([(n, not b) for n, b in self.generators],
                            [r.bar() for r in self.relators],
                            meta=self.meta)

    def with_meta(self, **kwargs):
        "copy with extra annotations"
        meta = dict(self.meta)
        meta.update(kwargs)
        return Presentation(self.generators, self.relators, meta=meta)

    # ------------------------------------------------------
    # serialisation
    # ------------------------------------------------------

    def to_json(self):
        "versioned JSON document"
        return {'version': PRESENTATION_VERSION,
                'generators': [n + (BAR if b else '')
                               for n, b in self.generators],
                'relators': [render(r) for r in self.relators],
                'meta': self.meta}

    @classmethod
    def from_json(cls, doc):
        "inverse of `to_json`"
        version = doc.get('version', PRESENTATION_VERSION)
        if version != PRESENTATION_VERSION:
            raise UsageError('unsupported presentation version {}'.format(
                version))
        gens = []
        for name in doc.get('generators', []):
            if name.endswith(BAR):
                gens.append((name[:-len(BAR)], True))
            else:
                gens.append((name, False))
        rels = [_resolve(parse_raw_word(t), gens)
                for t in doc.get('relators', [])]
        return cls(gens, rels, meta=doc.get('meta'))


# ---------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------


def _resolve(word, generators):
    """
    Expand `l_x` shorthands and check every letter is declared
    """
    declared = set(generators)
    letters = []
    for sym in word:
        if sym.generator in declared:
            letters.append(sym)
            continue
        name = sym.base_name
        base = name[len(ELL_PREFIX):]
        if name.startswith(ELL_PREFIX) and (base, False) in declared \
                and (base, True) in declared:
            plain = Word([GenSymbol(base, False, 1)])
            ell = plain.inverse() * plain.bar()
            if sym.bar_flag:
                ell = ell.bar()
            if sym.sign < 0:
                ell = ell.inverse()
            letters.extend(ell)
            continue
        raise UndeclaredGeneratorError(
            'undeclared generator: {}'.format(
                GenSymbol(name, sym.bar_flag, 1).render()))
    return Word(letters)


def parse_presentation(text):
    """
    Parse `< gens | relators >`

    Raises
    ------
    PresentationSyntaxError
    UndeclaredGeneratorError
    """
    names, rels = parse_raw_presentation(text)
    return Presentation(names, [_resolve(r, names) for r in rels])


# ---------------------------------------------------------------------
# witness policies and the Sidki double
# ---------------------------------------------------------------------


class WitnessPolicy(namedtuple('WitnessPolicy', ['kind', 'bound'])):
    """
    Which words w get a relator [w, w̄] in the double

    kind is 'all' (one word per element of a finite G) or 'len' (every
    reduced word of length at most `bound`)
    """
    __slots__ = ()

    @classmethod
    def all_elements(cls):
        "one witness per group element"
        return cls('all', None)

    @classmethod
    def length_bound(cls, bound):
        "witnesses of length ≤ bound"
        if bound < 0:
            raise UsageError('length bound must be nonnegative')
        return cls('len', int(bound))

    @classmethod
    def parse(cls, text):
        "'all' or 'len:k'"
        text = text.strip()
        if text == 'all':
            return cls.all_elements()
        if text.startswith('len:'):
            try:
                return cls.length_bound(int(text[4:]))
            except ValueError:
                pass
        raise UsageError('bad witness policy {!r} (want all or len:k)'.format(
            text))

    def __str__(self):
        return 'all' if self.kind == 'all' else 'len:{}'.format(self.bound)


def reduced_words(alphabet, max_len):
    """
    Every freely reduced word of length ≤ max_len, in shortlex order
    """
    letters = alphabet.letters()
    layer = [IDENTITY]
    yield IDENTITY
    for _ in range(max_len):
        nxt = []
        for word in layer:
            for sym in letters:
                if word and word[-1] == sym.inverse():
                    continue
                nxt.append(Word._trusted(word.letters + (sym,)))
        nxt.sort()
        for word in nxt:
            yield word
        layer = nxt


def _length_witnesses(pres, bound):
    seen = set()
    res = []
    for word in reduced_words(pres.alphabet, bound):
        if word.is_identity() or word.inverse() in seen:
            continue
        seen.add(word)
        res.append(word)
    return res


def _element_witnesses(table):
    res = []
    kept = set()
    for coset, word in enumerate(table.representatives()):
        if coset == 0:
            continue
        if table.coset_of(word.inverse()) in kept:
            continue
        kept.add(coset)
        res.append(word)
    return res


def witness_words(pres, policy, table=None, max_cosets=None):
    """
    Words w whose relators [w, w̄] go into the double
    """
    if policy.kind == 'len':
        return _length_witnesses(pres, policy.bound)
    if table is None:
        from .enumerator import enumerate_cosets
        kwargs = {} if max_cosets is None else {'max_cosets': max_cosets}
        table = enumerate_cosets(pres, **kwargs)
    return _element_witnesses(table)


def sidki_double(pres, policy=None, table=None, max_cosets=None,
                 fallback_bound=None):
    """
    The presentation of 𝔛(G) = G ∗ Ḡ / ⟨⟨[g, ḡ]⟩⟩

    Parameters
    ----------
    pres: Presentation
        Over unbarred generators only
    policy: WitnessPolicy, optional
        Default: every element of G when G enumerates within budget,
        otherwise all words up to length `fallback_bound`, flagged in the
        meta as possibly presenting a proper pre-image of 𝔛(G)
    table: CosetTable, optional
        A finished enumeration of G to take element words from

    Raises
    ------
    Overflow
        An explicit all-elements policy on a group that does not
        enumerate
    """
    from .local import FALLBACK_LENGTH_BOUND
    if any(b for _, b in pres.generators):
        raise UsageError('the double is built from unbarred generators')
    meta = {}
    if policy is None:
        try:
            witnesses = witness_words(pres, WitnessPolicy.all_elements(),
                                      table=table, max_cosets=max_cosets)
            policy = WitnessPolicy.all_elements()
        except Overflow:
            bound = FALLBACK_LENGTH_BOUND if fallback_bound is None \
                else fallback_bound
            policy = WitnessPolicy.length_bound(bound)
            _log.warning('%s does not enumerate; witnesses fall back to %s '
                         '(may be a proper pre-image of the double)',
                         pres, policy)
            witnesses = witness_words(pres, policy)
            meta['may_be_proper_preimage'] = True
    else:
        witnesses = witness_words(pres, policy, table=table,
                                  max_cosets=max_cosets)
        if policy.kind == 'len':
            meta['may_be_proper_preimage'] = True
    meta['witness_policy'] = str(policy)
    gens = list(pres.generators) + [(n, True) for n, _ in pres.generators]
    rels = list(pres.relators) + [r.bar() for r in pres.relators]
    rels.extend(commutator(w, w.bar()) for w in witnesses)
    _log.debug('double of %s: %d witnesses', pres, len(witnesses))
    return Presentation(gens, rels, meta=meta)


# ---------------------------------------------------------------------
# other constructions
# ---------------------------------------------------------------------


def exponent_matrix(pres):
    "one row of exponent sums per relator"
    return [r.exponent_sums(pres.alphabet) for r in pres.relators]


def abelianization(pres):
    """
    G/G′ as the cokernel of the relator exponent-sum matrix
    """
    return cokernel(exponent_matrix(pres), ncols=len(pres.generators))


def _disjoint(left, right):
    clash = set(left.generators) & set(right.generators)
    if not clash:
        return left, right

    def rename(pres, suffix):
        mapping = {}
        gens = []
        for name, bar in pres.generators:
            new = name + suffix if (name, bar) in clash else name
            gens.append((new, bar))
            mapping[(name, bar)] = Word([GenSymbol(new, bar, 1)])
        return Presentation(gens, [r.substitute(mapping)
                                   for r in pres.relators])
    return rename(left, '_1'), rename(right, '_2')


def free_product(left, right):
    """
    ⟨X₁ ⊔ X₂ | R₁ ∪ R₂⟩, clashing names suffixed `_1` / `_2`
    """
    left, right = _disjoint(left, right)
    return Presentation(left.generators + right.generators,
                        left.relators + right.relators)


def direct_product(left, right):
    """
    The free product plus every cross commutator [x, y]
    """
    left, right = _disjoint(left, right)
    cross = [commutator(x, y)
             for x, y in itertools.product(left.generator_words(),
                                           right.generator_words())]
    return Presentation(left.generators + right.generators,
                        left.relators + right.relators + tuple(cross))
