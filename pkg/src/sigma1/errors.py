"""Exception hierarchy shared by all modules.

Two top-level families matter for the CLI exit codes: `InputError` (bad
user input, exit code 2) and `PreconditionError` (a documented
precondition of an operation was violated, exit code 3).  Every error
carries the name of the module that raised it so messages can say which
contract failed.
"""


class SigmaError(Exception):
    """Base class for all errors raised by this package."""

    module = "sigma1"

    def __init__(self, message, module=None):
        super().__init__(message)
        if module is not None:
            self.module = module

    def __str__(self):
        return "[%s] %s" % (self.module, super().__str__())


class InputError(SigmaError):
    """Malformed user input (files, inline text, flags)."""


class ParseError(InputError):
    """Syntax error in the presentation grammar; reports the position."""

    module = "words"

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class UnknownGeneratorError(InputError):
    module = "words"


class PreconditionError(SigmaError):
    """An operation's stated precondition was violated."""


class DimensionMismatchError(PreconditionError):
    module = "characters"


class InvalidCharacterError(PreconditionError):
    """Character is zero, or does not kill the relator exponent vectors."""

    module = "characters"


class ZeroPullbackError(PreconditionError):
    """A pullback produced the zero character where a sphere point was needed."""

    module = "characters"


class UnsupportedRegionCombination(PreconditionError):
    """Set algebra requested across incompatible region families."""

    module = "regions"
