"""Exception classes; the CLI maps each one to an exit code."""


class SingforgeError(Exception):
    exit_code = 1


class UsageError(SingforgeError, ValueError):
    """Malformed arguments or input data."""

    exit_code = 2


class PreconditionError(SingforgeError):
    """Well-formed input that an operation is not defined for."""

    exit_code = 3


class NotInScope(PreconditionError):
    """A Brieskorn type outside the classified region."""


class InvariantError(SingforgeError, AssertionError):
    """An internal consistency check failed; always a bug or corrupt data."""

    exit_code = 4
