"""Exception hierarchy shared by all braidkit modules."""


class BraidkitError(Exception):
    """Base class for every error raised by braidkit."""


class NotAUnit(BraidkitError):
    """Inversion was requested for a scalar that is not a unit monomial."""


class SignatureMismatch(BraidkitError):
    """Tensor signatures of the operands do not line up."""


class BadGrouping(BraidkitError):
    """A regrouping request does not partition the slots into contiguous blocks."""


class UnknownGenerator(BraidkitError):
    """A generator name is not declared in the relevant algebra."""


class NonTerminating(BraidkitError):
    """Rewriting exceeded its step budget; the rule orientation is suspect."""


class CompletionBudgetExceeded(BraidkitError):
    """Critical-pair completion did not reach a fixpoint within its budget."""


class UnorientablePair(BraidkitError):
    """A derived relation cannot be oriented under the term order."""


class MissingEntry(BraidkitError):
    """A generator pair has no entry in the bilinear functional table."""


class CrossedModuleViolation(BraidkitError):
    """Action/coaction data fails the crossed-module compatibility check."""

    def __init__(self, message, failures=None):
        super().__init__(message)
        self.failures = failures or []


class UnknownEntry(BraidkitError):
    """No catalog entry with the requested name."""


class ParseError(BraidkitError):
    """Syntax error in a definition file or element expression."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
        self.line = line
        self.column = column


class VerificationFailed(BraidkitError):
    """A verification suite reported at least one failing check."""

    def __init__(self, report):
        super().__init__(f"verification failed:\n{report}")
        self.report = report
