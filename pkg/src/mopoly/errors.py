"""Exception hierarchy shared by all layers."""


class MopolyError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(MopolyError):
    """Family parameters violate a validity or AT-system condition."""


class NonTerminatingError(MopolyError):
    """A hypergeometric sum has no terminating upper parameter."""


class LowerParamPoleError(MopolyError):
    """A lower parameter hits a pole inside the summation range."""


class PoleInParamsError(MopolyError):
    """Identity parameters make one of the two sides undefined."""


class OutOfSupportError(MopolyError):
    """Evaluation point lies outside the weight's support."""


class UnsupportedRepresentationError(MopolyError):
    """Requested representation is not available for this family."""


class DegreeExceedsSupportError(MopolyError):
    """|n| exceeds the finite support bound N."""


class SingularDenominatorError(MopolyError):
    """A closed-form recurrence denominator vanishes; reports the factor."""


class SingularSystemError(MopolyError):
    """An orthogonality linear system is singular (AT property violated)."""


class InvalidShiftError(MopolyError):
    """A shifted multi-index has a negative entry."""


class PoleOnContourError(MopolyError):
    """An integrand pole lies (numerically) on the quadrature contour."""


class WrongEnclosureError(MopolyError):
    """Contour does not enclose exactly the stipulated pole set."""
