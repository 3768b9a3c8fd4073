"""Exception and warning types raised across the package."""


class EqZetaError(Exception):
    """Base class for all errors raised by eqzeta."""


class SizeLimitError(EqZetaError):
    """A group, G-set or enumeration exceeds a configured size cap."""


class InvalidSubgroupError(EqZetaError):
    """A set of elements is not a subgroup of the ambient group."""


class ContainmentError(EqZetaError):
    """A pair (H, Hhat) was given with Hhat not contained in H."""


class GroupMismatchError(EqZetaError):
    """Operands belong to different groups."""


class InvalidActionError(EqZetaError):
    """An action table does not define a group action."""


class NonUnitError(EqZetaError):
    """A series with non-unit constant term was inverted."""


class HorizonError(EqZetaError):
    """A Lefschetz sequence is too short for the requested truncation."""


class StratumError(EqZetaError):
    """One or more resolution strata failed validation.

    ``diagnostics`` holds one human-readable line per violated condition.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class NonIntegralEulerWarning(UserWarning):
    """An isotropy-stratum Euler coefficient is not an integer."""


class StratumWarning(UserWarning):
    """An inert (zero Euler characteristic) stratum violates an invariant."""
