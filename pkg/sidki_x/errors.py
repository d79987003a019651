# License: CeCILL-B (French BSD3-like)

"""
Exceptions raised by sidki-x

The command line maps the three families below onto exit codes:
`CheckFailure` is 1, `BudgetError` is 2, `UsageError` is 3.
"""


class SidkiError(Exception):
    """Root of everything we raise on purpose"""
    exit_code = 1


# ---------------------------------------------------------------------
# usage
# ---------------------------------------------------------------------


class UsageError(SidkiError, ValueError):
    """The caller handed us something we cannot work with"""
    exit_code = 3


class AlphabetError(UsageError):
    """A symbol outside the declared alphabet"""


class PresentationSyntaxError(UsageError):
    """Malformed presentation or word text

    Parameters
    ----------
    message: string
    position: int or None
        Character offset in the input where parsing failed
    """
    def __init__(self, message, position=None):
        if position is not None:
            message = '{} (at position {})'.format(message, position)
        super(PresentationSyntaxError, self).__init__(message)
        self.position = position


class UndeclaredGeneratorError(UsageError):
    """A relator mentions a generator the presentation does not declare"""


class ConfigError(UsageError):
    """Bad flag or config file value"""


class NotEngelError(UsageError):
    """The Engel certificate needs an Engel (hence nilpotent) base group"""


class LiftingError(UsageError):
    """Lifting data for a central extension does not check out"""


class CertificateIndexError(UsageError, IndexError):
    """A certificate names a relator the presentation does not have"""


# ---------------------------------------------------------------------
# budgets
# ---------------------------------------------------------------------


class BudgetError(SidkiError):
    """Some resource bound was hit before we could finish"""
    exit_code = 2


class Overflow(BudgetError):
    """Coset enumeration defined more cosets than allowed

    Increase the budget or shrink the instance. `defined` counts every
    coset the enumeration created, merged ones included.
    """
    def __init__(self, budget, defined=None):
        super(Overflow, self).__init__(
            'coset enumeration exceeded {} cosets'.format(budget))
        self.budget = budget
        self.defined = budget if defined is None else defined


class SizeGuardError(BudgetError):
    """A group is too large for element-set methods"""
    def __init__(self, what, guard):
        super(SizeGuardError, self).__init__(
            '{} exceeds the order guard ({})'.format(what, guard))
        self.guard = guard


class PartialResultError(BudgetError):
    """Growth data cut short by an undecided equality query"""
    def __init__(self, message, partial):
        super(PartialResultError, self).__init__(message)
        self.partial = partial


# ---------------------------------------------------------------------
# mathematics
# ---------------------------------------------------------------------


class CheckFailure(SidkiError):
    """A machine-checked assertion failed

    This always points at an implementation bug, never at the
    mathematics; the witness is there to help find it.
    """
    exit_code = 1

    def __init__(self, name, witness=None):
        msg = 'check failed: {}'.format(name)
        if witness is not None:
            msg += ' (witness: {})'.format(witness)
        super(CheckFailure, self).__init__(msg)
        self.name = name
        self.witness = witness
