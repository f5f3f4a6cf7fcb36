"""
Exception hierarchy for hypersieve

Everything the package raises on purpose derives from HypersieveError.
Precondition failures on caller input derive from ValidationError.
"""


class HypersieveError(Exception):
    """Base exception for hypersieve errors"""
    pass


class ValidationError(HypersieveError):
    """Input violates an operation's precondition"""
    pass


class ZeroScaleError(ValidationError):
    """Affine scale factor a is zero"""
    pass


class ZeroMultiplierError(ValidationError):
    """A basis rescaling constant c_k is zero"""
    pass


class ZeroAlphaError(ValidationError):
    """Generalized Hermite parameter alpha is zero"""
    pass


class NonpositiveAlphaError(ValidationError):
    """Deformation parameter alpha is not positive"""
    pass


class BothZeroError(ValidationError):
    """gcd requested of two zero polynomials"""
    pass


class ZeroPolynomialError(ValidationError):
    """Operation undefined on the zero polynomial"""
    pass


class BadIntervalError(ValidationError):
    """Interval endpoints are not ordered lo < hi"""
    pass


class NotRealRootedError(ValidationError):
    """Polynomial was required to be real-rooted but is not"""
    pass


class NotSimpleRealRootedError(ValidationError):
    """q_n does not have only simple real zeros"""
    pass


class NegativeTermsError(ValidationError):
    """Sequence was required to be nonnegative"""
    pass


class ZeroLeadingTermsError(ValidationError):
    """gamma_0 or gamma_1 is zero"""
    pass


class ScheduleTooShortError(ValidationError):
    """Convergence check needs at least two schedule entries"""
    pass


class InvalidSequenceError(ValidationError):
    """Malformed multiplier sequence (empty prefix, bad tail)"""
    pass


class ParseError(HypersieveError):
    """Malformed polynomial literal, basis shorthand or JSON document"""

    def __init__(self, message: str, position: int = -1):
        self.position = position
        if position >= 0:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BasisDegreeError(HypersieveError):
    """A simple set produced q_k with deg q_k != k"""
    pass


class NoUpperBoundFoundError(HypersieveError):
    """E_n upper-bound doubling exceeded its cap"""
    pass


class CertificateError(HypersieveError):
    """An internal certificate invariant was violated"""
    pass
