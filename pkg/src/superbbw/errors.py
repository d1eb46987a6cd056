"""Exception hierarchy. ``exit_code`` is what the CLI returns for each."""


class SuperBBWError(Exception):
    exit_code = 1


class DomainError(SuperBBWError, ValueError):
    """A well-formed request outside the region where an answer is defined."""
    exit_code = 2


class NotGenericError(DomainError):
    pass


class NotVeryDominantError(DomainError):
    pass


class NonDominantError(DomainError):
    pass


class UnsupportedTypeError(SuperBBWError, ValueError):
    exit_code = 65


class ConsistencyError(SuperBBWError, RuntimeError):
    """Internal cross-checks disagreed (e.g. composition-factor peeling)."""
    exit_code = 70
