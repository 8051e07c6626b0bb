"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class WonderError(Exception):
    exit_code = 3


class ParseError(WonderError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class InvalidRootSystem(WonderError, ValueError):
    pass


class InvalidRootId(WonderError, ValueError):
    pass


class InvalidWeight(WonderError, ValueError):
    pass


class InvalidSystem(WonderError, ValueError):
    """A system failed a structural invariant or a V-check."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class PreconditionError(WonderError):
    exit_code = 4


class InvalidIndex(PreconditionError, IndexError):
    pass


class InvalidEmbedding(PreconditionError, ValueError):
    pass


class UnknownColor(PreconditionError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotPositive(PreconditionError, ValueError):
    pass


class NotAdjoint(PreconditionError):
    pass


class NotIndecomposable(PreconditionError):
    pass


class RankTooSmall(PreconditionError):
    pass


class NotClassified(WonderError):
    """The input contradicts the classification the engine relies on."""

    exit_code = 5


class UnsupportedSubdiagram(WonderError):
    exit_code = 5


class InconsistentQuotient(WonderError):
    exit_code = 5
