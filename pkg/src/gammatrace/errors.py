"""Exception hierarchy shared by every module in the package."""


class GammaTraceError(Exception):
    """Base class for all library errors."""


class DenominatorDivisibleByP(GammaTraceError, ValueError):
    pass


class BadParameterDenominator(DenominatorDivisibleByP):
    """A hypergeometric parameter is not a p-adic integer."""


class EvenPrime(GammaTraceError, ValueError):
    pass


class NotPrime(GammaTraceError, ValueError):
    pass


class NoLiftInWindow(GammaTraceError, ArithmeticError):
    pass


class InsufficientPrecision(GammaTraceError, ArithmeticError):
    """The residue is not known to enough digits for the requested operation."""


class PrecisionExceedsTable(GammaTraceError, ValueError):
    pass


class MissingGammaValue(GammaTraceError, KeyError):
    """The requested residue was not among the targets of the sweep."""


class IndexOutOfRange(GammaTraceError, IndexError):
    pass


class MixedRings(GammaTraceError, TypeError):
    pass


class NonRationalResult(GammaTraceError, ArithmeticError):
    """A pi-coordinate that must cancel did not; signals an arithmetic bug."""


class NotPIntegral(GammaTraceError, ArithmeticError):
    pass


class SingularCurve(GammaTraceError, ValueError):
    pass


CurveSingular = SingularCurve


class ExcludedJInvariant(GammaTraceError, ValueError):
    pass


class WrongCongruenceClass(GammaTraceError, ValueError):
    pass


class ZeroU(GammaTraceError, ValueError):
    pass


class IndexBeyondTruncation(GammaTraceError, IndexError):
    pass
