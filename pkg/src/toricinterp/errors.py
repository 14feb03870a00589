"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called on input violating one of its preconditions.

    The message names the violated precondition; the command line maps this
    to exit status 2.
    """


class FormatError(ValueError):
    """Text input (matrix, polygon, binomial, point) could not be parsed."""
