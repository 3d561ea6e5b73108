"""Exception hierarchy shared across the package."""


class SVError(Exception):
    """Base class for all errors raised by this package."""


class ElementNotInCarrier(SVError):
    """A value does not belong to the carrier of the scale it was used with."""


class NotALatticeError(SVError):
    """Some pair of elements lacks a unique least upper / greatest lower bound."""


class BadInvolutionError(SVError):
    """The supplied negation is not a total antitone involution."""


class DeMorganViolationError(SVError):
    """The negation fails one of the De Morgan identities."""


class BoundsMismatchError(SVError):
    """Declared bottom/top are not the least/greatest elements."""


class BadGridError(SVError):
    """Function-scale grid is empty, unsorted, or out of [0, 1]."""


class InfiniteCarrierError(SVError):
    """Exhaustive verification requested on a scale with an infinite carrier."""


class ShapeMismatchError(SVError):
    """Operands disagree on universe, parameter set, or scale."""


class ScaleMismatchError(SVError):
    """A homomorphism or operation was applied across the wrong scales."""


class UnknownParamError(SVError):
    """Parameter label not present in the parameter set."""


class NonTotalMapError(SVError):
    """A relabeling map leaves some element of its domain unmapped."""


class WrongScaleError(SVError):
    """A decoder was given an SV-set over the wrong scale."""


class ConstraintViolationError(SVError):
    """Model-specific constraint violated (mu+nu > 1, lower not inside upper, ...)."""


class NotAChainError(SVError):
    """Operation requires a totally ordered scale."""


class AlphaIsTopError(SVError):
    """Strong cuts require alpha strictly below the top element."""


class ClosureSizeExceededError(SVError):
    """Topology closure generation exceeded the configured size cap."""


class InvalidFamilyError(SVError):
    """A parameterized family does not satisfy the SV-topology axioms."""


class UniverseMismatchError(SVError):
    """SV-set universe does not match the group's element set."""


class NotASubgroupError(SVError):
    """An operation requiring SV-subgroup inputs received one that is not."""


class HomMismatchError(SVError):
    """Group homomorphism endpoints do not match the supplied data."""


class LambdaOutOfRangeError(SVError):
    """Scoring weight must lie strictly between 0 and 1."""


class BoundMismatchError(SVError):
    """Evidence grades with different evidence bounds cannot be combined."""


class EmptyCriteriaError(SVError):
    """Aggregation over an empty criteria set is refused."""


class BadDocumentError(SVError):
    """Malformed JSON/CSV input document."""
