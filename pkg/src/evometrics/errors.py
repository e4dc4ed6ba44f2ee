"""Exception types shared across the package."""


class EvometricsError(Exception):
    """Base class for every error this package raises deliberately."""


class InputError(EvometricsError):
    """Malformed or unreadable input: manifest, data file, or source file.

    The CLI maps this to exit status 2.
    """


class AnalysisError(EvometricsError):
    """A computation was refused because its preconditions do not hold.

    The CLI maps this to exit status 1.
    """
