# License: CeCILL-B (French BSD3-like)

"""
Free group words over a two-sorted alphabet X ∪ X̄

A word is a freely reduced tuple of signed generator symbols. Barred
symbols stand for the second copy of G inside the Sidki double; they are
written with a trailing `~` in text.
"""

from collections import namedtuple
import itertools

from .errors import AlphabetError, UsageError

BAR = '~'
"Suffix marking barred generators in text"


class GenSymbol(namedtuple('GenSymbol', ['base_name', 'bar_flag', 'sign'])):
    """
    A signed generator letter

    Parameters
    ----------
    base_name: string
        Generator identifier (the `a` in `a~^-1`)
    bar_flag: bool
        True for the second copy X̄
    sign: +1 or -1
    """
    __slots__ = ()

    @property
    def generator(self):
        "(base_name, bar_flag): what identifies the generator"
        return (self.base_name, self.bar_flag)

    def inverse(self):
        "same generator, opposite sign"
        return self._replace(sign=-self.sign)

    def barred(self):
        "swap copies"
        return self._replace(bar_flag=not self.bar_flag)

    def render(self):
        "text form of a single letter"
        name = self.base_name + (BAR if self.bar_flag else '')
        return name if self.sign > 0 else name + '^-1'


def letter(name, bar=False, sign=1):
    """
    Convenience constructor for a letter; validates the identifier
    """
    if not name or not all(c.isalnum() or c == '_' for c in name):
        raise AlphabetError('bad generator name: {!r}'.format(name))
    if sign not in (1, -1):
        raise UsageError('letter sign must be +1 or -1')
    return GenSymbol(name, bool(bar), sign)


class Alphabet(object):
    """
    An ordered set of generators, each one a (base_name, bar_flag) key

    Letter columns follow the coset-table convention: generator `i`
    occupies column `2i`, its inverse column `2i + 1`.
    """
    def __init__(self, generators):
        keys = []
        for gen in generators:
            if isinstance(gen, GenSymbol):
                gen = gen.generator
            keys.append((gen[0], bool(gen[1])))
        if len(set(keys)) != len(keys):
            raise AlphabetError('duplicate generators in alphabet')
        for name, _ in keys:
            letter(name)
        self.generators = tuple(keys)
        self._index = {k: i for i, k in enumerate(keys)}

    @classmethod
    def plain(cls, names):
        "alphabet on unbarred names"
        return cls([(n, False) for n in names])

    @classmethod
    def double(cls, names):
        "X ∪ X̄ for the given names"
        return cls([(n, False) for n in names] + [(n, True) for n in names])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, sym):
        if isinstance(sym, GenSymbol):
            sym = sym.generator
        return sym in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and \
            self.generators == other.generators

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return 'Alphabet({})'.format(
            ', '.join(n + (BAR if b else '') for n, b in self.generators))

    def index(self, sym):
        "position of the generator of this letter"
        try:
            return self._index[sym.generator]
        except KeyError:
            raise AlphabetError('{} is not in {!r}'.format(sym.render(),
                                                           self))

    def column(self, sym):
        "coset table column of a signed letter"
        return 2 * self.index(sym) + (0 if sym.sign > 0 else 1)

    def letters(self):
        "every signed letter, in column order"
        return [GenSymbol(n, b, s) for n, b in self.generators
                for s in (1, -1)]

    def symbol(self, column):
        "inverse of `column`"
        name, bar = self.generators[column // 2]
        return GenSymbol(name, bar, 1 if column % 2 == 0 else -1)

    def word(self, name, bar=False):
        "the one-letter word for a generator of this alphabet"
        sym = GenSymbol(name, bar, 1)
        if sym not in self:
            raise AlphabetError('{} is not in {!r}'.format(sym.render(),
                                                           self))
        return Word([sym])

    def union(self, other):
        "generators of both, ours first"
        extra = [g for g in other.generators if g not in self._index]
        return Alphabet(self.generators + tuple(extra))


def free_reduce(letters, alphabet=None):
    """
    Freely reduce a raw symbol sequence

    Parameters
    ----------
    letters: iterable of GenSymbol
    alphabet: Alphabet, optional
        If given, every symbol must belong to it

    Returns
    -------
    word: Word
    """
    return Word(letters, alphabet=alphabet)


def _cancel(letters):
    stack = []
    for sym in letters:
        if stack and stack[-1].generator == sym.generator and \
                stack[-1].sign == -sym.sign:
            stack.pop()
        else:
            stack.append(sym)
    return tuple(stack)


class Word(object):
    """
    Freely reduced word in a free group

    Words are immutable and hashable. The empty word is the identity.
    """
    __slots__ = ('letters',)

    def __init__(self, letters=(), alphabet=None):
        letters = tuple(letters)
        for sym in letters:
            if not isinstance(sym, GenSymbol):
                raise AlphabetError('not a generator symbol: {!r}'.format(sym))
            if alphabet is not None and sym not in alphabet:
                raise AlphabetError('{} is not in {!r}'.format(sym.render(),
                                                               alphabet))
        object.__setattr__(self, 'letters', _cancel(letters))

    def __setattr__(self, name, value):
        raise AttributeError('words are immutable')

    @classmethod
    def _trusted(cls, letters):
        "wrap an already reduced tuple"
        res = cls.__new__(cls)
        object.__setattr__(res, 'letters', letters)
        return res

    def __reduce__(self):
        return (_from_letters, (self.letters,))

    # ------------------------------------------------------
    # free group structure
    # ------------------------------------------------------

    def __mul__(self, other):
        left, right = self.letters, other.letters
        i = 0
        while i < min(len(left), len(right)):
            a, b = left[-1 - i], right[i]
            if a.generator == b.generator and a.sign == -b.sign:
                i += 1
            else:
                break
        return Word._trusted(left[:len(left) - i] + right[i:])

    def inverse(self):
        "formal inverse"
        return Word._trusted(
            tuple(s.inverse() for s in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        res = Word()
        base = self
        while k:
            if k & 1:
                res = res * base
            base = base * base
            k >>= 1
        return res

    def conjugate(self, by):
        "u^v = v⁻¹ u v"
        return by.inverse() * self * by

    def is_identity(self):
        "true for the empty word"
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.letters[idx])
        return self.letters[idx]

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other):
        return shortlex_key(self) < shortlex_key(other)

    def __repr__(self):
        return 'Word({!r})'.format(str(self))

    def __str__(self):
        return render(self)

    def cyclically_reduced(self):
        "strip inverse pairs across the ends"
        letters = self.letters
        i = 0
        while len(letters) - 2 * i > 1:
            a, b = letters[i], letters[-1 - i]
            if a.generator == b.generator and a.sign == -b.sign:
                i += 1
            else:
                break
        return Word._trusted(letters[i:len(letters) - i])

    def cyclic_conjugates(self):
        "all rotations of the (cyclically reduced) word"
        core = self.cyclically_reduced().letters
        return [Word(core[k:] + core[:k]) for k in range(max(1, len(core)))]

    def generators(self):
        "set of generator keys occurring in the word"
        return {s.generator for s in self.letters}

    def exponent_sums(self, alphabet):
        "exponent sum of every generator of `alphabet`, in order"
        sums = [0] * len(alphabet)
        for sym in self.letters:
            sums[alphabet.index(sym)] += sym.sign
        return sums

    def substitute(self, images):
        """
        Apply the endomorphism given on generators

        Parameters
        ----------
        images: dict from generator key to Word
            Generators missing from the dict are kept
        """
        res = []
        for sym in self.letters:
            img = images.get(sym.generator)
            if img is None:
                res.append(sym)
            elif sym.sign > 0:
                res.extend(img.letters)
            else:
                res.extend(img.inverse().letters)
        return Word(res)

    # ------------------------------------------------------
    # structural maps of the Sidki double
    # ------------------------------------------------------

    def bar(self):
        "swap the two copies"
        return Word._trusted(tuple(s.barred() for s in self.letters))

    def pi(self):
        "𝔛(G) → G identifying g with ḡ"
        return Word(s._replace(bar_flag=False) for s in self.letters)

    def pibar(self):
        "𝔛(G) → Ḡ ≅ G killing the unbarred copy"
        return Word(s._replace(bar_flag=False)
                    for s in self.letters if s.bar_flag)

    def unbarred_part(self):
        "𝔛(G) → G killing the barred copy"
        return Word(s for s in self.letters if not s.bar_flag)

    def rho(self):
        """
        ρ(g) = (g, g, 1) and ρ(ḡ) = (1, g, g), letter by letter

        Returns
        -------
        triple of Word over the unbarred alphabet
        """
        first, second, third = [], [], []
        for sym in self.letters:
            plain = sym._replace(bar_flag=False)
            if sym.bar_flag:
                second.append(plain)
                third.append(plain)
            else:
                first.append(plain)
                second.append(plain)
        return (Word(first), Word(second), Word(third))


def _from_letters(letters):
    "unpickling hook"
    return Word._trusted(tuple(letters))


IDENTITY = Word()
"The empty word"


def shortlex_key(word):
    "length first, then letters by (name, bar, sign)"
    return (len(word), [(s.base_name, s.bar_flag, -s.sign) for s in word])


def render(word):
    """
    Text form of a word, runs of one letter written as powers
    """
    if not word.letters:
        return '1'
    chunks = []
    for gen, run in itertools.groupby(word.letters, key=lambda s: (s.generator,
                                                                   s.sign)):
        (name, bar), sign = gen
        count = sum(1 for _ in run) * sign
        text = name + (BAR if bar else '')
        if count != 1:
            text += '^{}'.format(count)
        chunks.append(text)
    return '*'.join(chunks)


# ---------------------------------------------------------------------
# commutator calculus
# ---------------------------------------------------------------------


def commutator(u, v):
    "[u, v] = u⁻¹ v⁻¹ u v"
    return u.inverse() * v.inverse() * u * v


def left_normed(words):
    """
    [a1, ..., an] = [[a1, ..., a(n-1)], an]

    A single word is returned as is.
    """
    words = list(words)
    if not words:
        raise UsageError('left_normed needs at least one word')
    res = words[0]
    for nxt in words[1:]:
        res = commutator(res, nxt)
    return res


def engel_word(x, y, n):
    """
    γ1(x, y) = [x, y] and γ(k+1)(x, y) = [γk(x, y), y]
    """
    if n < 1:
        raise UsageError('Engel words start at n = 1 (got {})'.format(n))
    return left_normed([x] + [y] * n)


def ell(word):
    "ℓ_w = w⁻¹ w̄"
    return word.inverse() * word.bar()


def structural_maps(word):
    """
    The letter maps of the Sidki double applied to `word`

    Returns
    -------
    dict with keys 'bar', 'pi', 'pibar', 'rho'
    """
    return {'bar': word.bar(),
            'pi': word.pi(),
            'pibar': word.pibar(),
            'rho': word.rho()}
