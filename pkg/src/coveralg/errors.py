"""Shared exception types."""


class InputError(ValueError):
    """Bad user input: malformed files, out-of-range labels, wrong sizes."""


class InternalCheckError(RuntimeError):
    """A built-in consistency check failed.

    These checks guard identities that are supposed to hold for every
    valid input, so a failure indicates a bug in this package, not a
    problem with the data.
    """
