# License: CeCILL-B (French BSD3-like)

"""
PLY grammar for presentations and words

    < a, b | a^2, b^2, (a*b)^3 >
    [a, a~]^-1 * b
    a^2 = b^2

Juxtaposition and `*` both mean multiplication, `^k` is a power (k may
be negative), `[u, v, ...]` a left-normed commutator, `u = v` the
relator u v⁻¹, `~` marks a barred generator and `1` is the identity.

Names are resolved later (see `presentations`): this module only builds
words out of whatever names it sees.
"""

import sys

import ply.lex as lex
import ply.yacc as yacc

from .errors import PresentationSyntaxError
from .words import GenSymbol, IDENTITY, Word, left_normed

# pylint: disable=invalid-name, missing-docstring

tokens = (
    'NAME', 'INT',
    'LANGLE', 'RANGLE', 'PIPE', 'COMMA', 'STAR', 'CARET',
    'LPAREN', 'RPAREN', 'LBRACKET', 'RBRACKET',
    'TILDE', 'EQUALS', 'MINUS',
)

t_LANGLE = r'<'
t_RANGLE = r'>'
t_PIPE = r'\|'
t_COMMA = r','
t_STAR = r'\*'
t_CARET = r'\^'
t_LPAREN = r'\('
t_RPAREN = r'\)'
t_LBRACKET = r'\['
t_RBRACKET = r'\]'
t_TILDE = r'~'
t_EQUALS = r'='
t_MINUS = r'-'
t_NAME = r'[A-Za-z][A-Za-z0-9_]*'

t_ignore = ' \t\r\n'


def t_INT(t):
    r'[0-9]+'
    t.value = int(t.value)
    return t


def t_error(t):
    raise PresentationSyntaxError(
        'illegal character {!r}'.format(t.value[0]), t.lexpos)


# ---------------------------------------------------------------------
# rules
# ---------------------------------------------------------------------


def p_presentation(p):
    'presentation : LANGLE names PIPE relations RANGLE'
    p[0] = (p[2], p[4])


def p_names(p):
    '''names : namelist
             | empty'''
    p[0] = p[1]


def p_namelist_one(p):
    'namelist : decl'
    p[0] = [p[1]]


def p_namelist_more(p):
    'namelist : namelist COMMA decl'
    p[0] = p[1] + [p[3]]


def p_decl(p):
    '''decl : NAME
            | NAME TILDE'''
    p[0] = (p[1], len(p) == 3)


def p_relations(p):
    '''relations : rellist
                 | empty'''
    p[0] = p[1]


def p_rellist_one(p):
    'rellist : relation'
    p[0] = [p[1]]


def p_rellist_more(p):
    'rellist : rellist COMMA relation'
    p[0] = p[1] + [p[3]]


def p_relation_word(p):
    'relation : word'
    p[0] = p[1]


def p_relation_equation(p):
    'relation : word EQUALS word'
    p[0] = p[1] * p[3].inverse()


def p_word_one(p):
    'word : factor'
    p[0] = p[1]


def p_word_juxtaposed(p):
    'word : word factor'
    p[0] = p[1] * p[2]


def p_word_star(p):
    'word : word STAR factor'
    p[0] = p[1] * p[3]


def p_factor_atom(p):
    'factor : atom'
    p[0] = p[1]


def p_factor_power(p):
    'factor : atom CARET exponent'
    p[0] = p[1] ** p[3]


def p_exponent(p):
    '''exponent : INT
                | MINUS INT'''
    p[0] = p[1] if len(p) == 2 else -p[2]


def p_atom_name(p):
    'atom : NAME'
    p[0] = Word([GenSymbol(p[1], False, 1)])


def p_atom_barred(p):
    'atom : NAME TILDE'
    p[0] = Word([GenSymbol(p[1], True, 1)])


def p_atom_one(p):
    'atom : INT'
    if p[1] != 1:
        raise PresentationSyntaxError(
            'only 1 may stand alone, got {}'.format(p[1]), p.lexpos(1))
    p[0] = IDENTITY


def p_atom_group(p):
    'atom : LPAREN word RPAREN'
    p[0] = p[2]


def p_atom_commutator(p):
    'atom : LBRACKET wordlist RBRACKET'
    p[0] = left_normed(p[2])


def p_wordlist_pair(p):
    'wordlist : word COMMA word'
    p[0] = [p[1], p[3]]


def p_wordlist_more(p):
    'wordlist : wordlist COMMA word'
    p[0] = p[1] + [p[3]]


def p_empty(p):
    'empty :'
    p[0] = []


def p_error(t):
    if t is None:
        raise PresentationSyntaxError('unexpected end of input',
                                      len(_STATE['text']))
    raise PresentationSyntaxError('syntax error on {!r}'.format(t.value),
                                  t.lexpos)


# ---------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------

_STATE = {'text': ''}
_PARSERS = {}


def _parser(start):
    if start not in _PARSERS:
        module = sys.modules[__name__]
        _PARSERS[start] = (lex.lex(module=module),
                           yacc.yacc(module=module, start=start,
                                     write_tables=False, debug=False,
                                     errorlog=yacc.NullLogger()))
    return _PARSERS[start]


def _run(text, start):
    lexer, parser = _parser(start)
    _STATE['text'] = text
    return parser.parse(text, lexer=lexer)


def parse_raw_presentation(text):
    """
    Returns
    -------
    names: list of (string, bool)
        Declared generators as (name, barred), in order
    relators: list of Word
        Relators with names left unresolved
    """
    return _run(text, 'presentation')


def parse_raw_word(text):
    "A word with names left unresolved; blank text is the identity"
    if not text.strip():
        return IDENTITY
    return _run(text, 'word')
