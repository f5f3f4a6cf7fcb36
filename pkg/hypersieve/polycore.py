"""
Exact univariate polynomial arithmetic over the rationals

RationalPoly is the carrier every other hypersieve module works with:
- dense coefficient tuple, constant term first
- coefficients are fractions.Fraction, always in lowest terms
- the zero polynomial has degree NO_DEGREE (below every int, no arithmetic), never -1
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Tuple, Union

from .errors import (
    BothZeroError, ParseError, ValidationError, ZeroPolynomialError, ZeroScaleError
)

logger = logging.getLogger(__name__)


class ZeroDegree:
    """
    Degree of the zero polynomial

    Orders below every int, so "r.degree < g.degree" still reads naturally,
    but supports no arithmetic: NO_DEGREE + 1 raises TypeError.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @staticmethod
    def _comparable(other: Any) -> bool:
        return isinstance(other, ZeroDegree) or (isinstance(other, int) and not isinstance(other, bool))

    def __lt__(self, other: Any):
        if not self._comparable(other):
            return NotImplemented
        return not isinstance(other, ZeroDegree)

    def __le__(self, other: Any):
        return True if self._comparable(other) else NotImplemented

    def __gt__(self, other: Any):
        return False if self._comparable(other) else NotImplemented

    def __ge__(self, other: Any):
        if not self._comparable(other):
            return NotImplemented
        return isinstance(other, ZeroDegree)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, ZeroDegree)

    def __hash__(self) -> int:
        return hash(ZeroDegree)

    def __repr__(self) -> str:
        return "NO_DEGREE"


NO_DEGREE = ZeroDegree()

RationalLike = Union[Fraction, int, str]


def to_rational(value: Any) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction.

    Floats are refused: every value flowing through hypersieve must be exact.
    """
    if isinstance(value, bool):
        raise ValidationError(f"Expected a rational, got boolean {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Invalid rational literal {value!r}: {e}")
    if isinstance(value, float):
        raise ValidationError(f"Floating-point value {value!r} is not exact; pass a Fraction or 'p/q' string")
    raise TypeError(f"Cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class RationalPoly:
    """
    Dense exact-rational univariate polynomial

    coeffs[k] is the coefficient of x^k. Trailing zeros are stripped on
    construction, so coeffs is empty exactly for the zero polynomial and
    coeffs[-1] is the nonzero leading coefficient otherwise.
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = [to_rational(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    # Constructors

    @classmethod
    def constant(cls, c: RationalLike) -> 'RationalPoly':
        return cls((to_rational(c),))

    @classmethod
    def x(cls) -> 'RationalPoly':
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> 'RationalPoly':
        """c * x^k"""
        if k < 0:
            raise ValidationError(f"Monomial exponent must be nonnegative, got {k}")
        return cls((0,) * k + (to_rational(c),))

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> 'RationalPoly':
        """lead * prod (x - r) over the given roots (repeats allowed)"""
        result = cls.constant(lead)
        for r in roots:
            result = result * cls((-to_rational(r), 1))
        return result

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'RationalPoly':
        """Parse the {"coeffs": ["1/8", "1", "2"]} encoding"""
        if not isinstance(data, dict) or not isinstance(data.get("coeffs"), list):
            raise ParseError("Polynomial JSON must be an object with a 'coeffs' array")
        for c in data["coeffs"]:
            if not isinstance(c, (str, int)) or isinstance(c, bool):
                raise ParseError(f"Polynomial coefficient {c!r} must be a rational string")
        return cls(tuple(to_rational(c) for c in data["coeffs"]))

    def to_json(self) -> Dict[str, List[str]]:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    # Basic attributes

    @property
    def degree(self) -> Union[int, ZeroDegree]:
        """Index of the leading coefficient; NO_DEGREE for the zero polynomial"""
        return len(self.coeffs) - 1 if self.coeffs else NO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def monic(self) -> 'RationalPoly':
        if self.is_zero:
            raise ZeroPolynomialError("The zero polynomial has no monic normalization")
        lead = self.leading
        return RationalPoly(tuple(c / lead for c in self.coeffs))

    def __call__(self, point: RationalLike) -> Fraction:
        """Exact evaluation by Horner's rule"""
        value = to_rational(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # Arithmetic

    @staticmethod
    def _coerce(other: Any) -> 'RationalPoly':
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly.constant(to_rational(other))

    def __add__(self, other: Any) -> 'RationalPoly':
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> 'RationalPoly':
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> 'RationalPoly':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> 'RationalPoly':
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> 'RationalPoly':
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'RationalPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError(f"Polynomial exponent must be a nonnegative integer, got {exponent!r}")
        result = RationalPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Any) -> Tuple['RationalPoly', 'RationalPoly']:
        """Polynomial long division: self = q * other + r with deg r < deg other"""
        divisor = self._coerce(other)
        if divisor.is_zero:
            raise ZeroPolynomialError("Division by the zero polynomial")
        rem = list(self.coeffs)
        dg = len(divisor.coeffs) - 1
        if len(rem) <= dg:
            return RationalPoly(), self
        lead = divisor.leading
        quot = [Fraction(0)] * (len(rem) - dg)
        for i in range(len(rem) - 1 - dg, -1, -1):
            c = rem[i + dg] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(divisor.coeffs):
                    rem[i + j] -= c * d
        return RationalPoly(tuple(quot)), RationalPoly(tuple(rem[:dg]))

    def __floordiv__(self, other: Any) -> 'RationalPoly':
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> 'RationalPoly':
        return divmod(self, other)[1]

    # Rendering

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == 0:
                body = format_rational(mag)
            elif mag == 1:
                body = power
            elif mag.denominator == 1:
                body = f"{mag.numerator}{power}"
            else:
                body = f"({format_rational(mag)}){power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RationalPoly({self})"


ZERO = RationalPoly()
ONE = RationalPoly.constant(1)


def add(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    return f + g


def mul(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    return f * g


def compose_affine(f: RationalPoly, a: RationalLike, b: RationalLike) -> RationalPoly:
    """Return f(a*x + b) exactly. Raises ZeroScaleError when a == 0."""
    a, b = to_rational(a), to_rational(b)
    if a == 0:
        raise ZeroScaleError("compose_affine requires a nonzero scale a")
    inner = RationalPoly((b, a))
    result = RationalPoly()
    for c in reversed(f.coeffs):
        result = result * inner + c
    return result


def derivative(f: RationalPoly) -> RationalPoly:
    return RationalPoly(tuple(k * c for k, c in enumerate(f.coeffs) if k > 0))


def gcd(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """Monic gcd by the Euclidean remainder sequence.

    Remainders are made monic at every step to keep coefficient growth in check.
    """
    if f.is_zero and g.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        r = a % b
        a, b = b, (r.monic() if not r.is_zero else r)
    return a.monic()
