"""Exception types shared across modules."""


class LatkitError(Exception):
    """Base class for library errors."""


class InputError(LatkitError, ValueError):
    """Malformed or inconsistent input data."""


class ParseError(InputError):
    pass


class NotSymmetric(InputError):
    pass


class Degenerate(InputError):
    """The ambient Gram matrix is singular."""


class NotAdmissible(LatkitError, ValueError):
    """The induced form on the subgroup is not integral and even."""


class NotALattice(LatkitError, ValueError):
    """The subgroup is admissible but not of full rank."""


class InfiniteGroup(LatkitError, ValueError):
    pass


class DomainError(LatkitError, ValueError):
    """An argument lies outside the group it is required to belong to."""


class NonUnitDiagonal(LatkitError, ValueError):
    pass


class ReductionMismatch(LatkitError, AssertionError):
    """The reduced braiding disagrees with the discriminant form on the diagonal."""
