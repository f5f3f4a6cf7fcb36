"""
Certified real-rootedness via Sturm chains on exact rationals

All verdicts are computed on the squarefree part f / gcd(f, f'), so the
counts here are counts of DISTINCT real roots. A polynomial is real-rooted
(with multiplicity) exactly when its squarefree part is.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Union

from .errors import BadIntervalError, NotRealRootedError, ParseError, ZeroPolynomialError
from .polycore import RationalPoly, derivative, format_rational, gcd, to_rational

logger = logging.getLogger(__name__)

POS_INF = float("inf")
NEG_INF = float("-inf")

Endpoint = Union[Fraction, float]

DEFAULT_ISOLATION_WIDTH = Fraction(1, 1024)


class RootVerdict(str, Enum):
    """Outcome of a real-rootedness decision"""
    ALL_REAL_ROOTED = "AllRealRooted"
    HAS_NON_REAL_ROOT = "HasNonRealRoot"
    DEGENERATE_ZERO_POLY = "DegenerateZeroPoly"


@dataclass(frozen=True)
class RealRootCertificate:
    """
    Evidence behind a real-rootedness verdict

    verdict is AllRealRooted exactly when distinct_real_roots equals
    squarefree_degree. The zero polynomial gets DegenerateZeroPoly with all
    counts zero.
    """
    verdict: RootVerdict
    distinct_real_roots: int
    squarefree_degree: int
    sturm_chain_length: int

    @property
    def is_real_rooted(self) -> bool:
        return self.verdict == RootVerdict.ALL_REAL_ROOTED

    def to_json(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "distinct_real_roots": self.distinct_real_roots,
            "squarefree_degree": self.squarefree_degree,
            "sturm_chain_length": self.sturm_chain_length,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'RealRootCertificate':
        try:
            return cls(
                verdict=RootVerdict(data["verdict"]),
                distinct_real_roots=int(data["distinct_real_roots"]),
                squarefree_degree=int(data["squarefree_degree"]),
                sturm_chain_length=int(data.get("sturm_chain_length", 0)),
            )
        except (KeyError, ValueError, TypeError) as e:
            raise ParseError(f"Invalid certificate JSON: {e}")


@dataclass(frozen=True)
class IsolatingInterval:
    """One distinct real root: exactly lo when lo == hi, else inside the open interval (lo, hi)"""
    lo: Fraction
    hi: Fraction

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> Dict[str, str]:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}


def _endpoint(value: Any) -> Endpoint:
    if isinstance(value, float) and value in (POS_INF, NEG_INF):
        return value
    return to_rational(value)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def sign_at(f: RationalPoly, point: Endpoint) -> int:
    """Sign of f at a rational point or at +/-inf (from leading coefficient and degree parity)"""
    if f.is_zero:
        return 0
    if point == POS_INF:
        return _sign(f.leading)
    if point == NEG_INF:
        lead = _sign(f.leading)
        return lead if f.degree % 2 == 0 else -lead
    return _sign(f(point))


def sign_variations(chain: List[RationalPoly], point: Endpoint) -> int:
    """Sign changes along the chain at point, zeros dropped"""
    signs = [s for s in (sign_at(p, point) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def squarefree_part(f: RationalPoly) -> RationalPoly:
    """f / gcd(f, f'): same distinct roots as f, all simple. Keeps f's leading coefficient."""
    if f.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no squarefree part")
    if f.degree <= 1:
        return f
    return f // gcd(f, derivative(f))


def sturm_chain(f: RationalPoly) -> List[RationalPoly]:
    """
    Sturm sequence f, f', -rem(f, f'), ... down to the last nonzero remainder.

    Each negated remainder is divided by the absolute value of its leading
    coefficient; positive rescaling leaves every sign variation unchanged.
    """
    if f.is_zero:
        raise ZeroPolynomialError("Sturm chain of the zero polynomial is undefined")
    chain = [f]
    d = derivative(f)
    if d.is_zero:
        return chain
    chain.append(d)
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            break
        chain.append(-r * (1 / abs(r.leading)))
    return chain


def _count_in(chain: List[RationalPoly], lo: Endpoint, hi: Endpoint) -> int:
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_real_roots(f: RationalPoly, lo: Any = NEG_INF, hi: Any = POS_INF) -> int:
    """Number of distinct real roots of f in the half-open interval (lo, hi]."""
    if f.is_zero:
        raise ZeroPolynomialError("Cannot count roots of the zero polynomial")
    lo, hi = _endpoint(lo), _endpoint(hi)
    if not lo < hi:
        raise BadIntervalError(f"Interval ({lo}, {hi}] is empty; need lo < hi")
    return _count_in(sturm_chain(squarefree_part(f)), lo, hi)


def is_real_rooted(f: RationalPoly) -> RealRootCertificate:
    """Decide whether every complex zero of f is real."""
    if f.is_zero:
        return RealRootCertificate(RootVerdict.DEGENERATE_ZERO_POLY, 0, 0, 0)

    if f.degree <= 1:
        return RealRootCertificate(RootVerdict.ALL_REAL_ROOTED, f.degree, f.degree, len(sturm_chain(f)))

    sq = squarefree_part(f)
    chain = sturm_chain(sq)
    distinct = _count_in(chain, NEG_INF, POS_INF)
    verdict = RootVerdict.ALL_REAL_ROOTED if distinct == sq.degree else RootVerdict.HAS_NON_REAL_ROOT
    logger.debug(f"is_real_rooted({f}): {distinct} distinct real of squarefree degree {sq.degree}")
    return RealRootCertificate(verdict, distinct, sq.degree, len(chain))


def cauchy_bound(f: RationalPoly) -> Fraction:
    """Every root r of f satisfies |r| < 1 + max |a_i / a_n|"""
    lead = f.leading
    return 1 + max((abs(c / lead) for c in f.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(f: RationalPoly, width: Any = DEFAULT_ISOLATION_WIDTH) -> List[IsolatingInterval]:
    """
    Disjoint rational intervals, one per distinct real root, sorted ascending.

    Sturm-guided bisection from the Cauchy bound. Intervals are refined until
    narrower than width; a root hit exactly by a bisection point (or the root
    of a linear squarefree part) is reported as the point interval [r, r].
    """
    if f.is_zero:
        raise ZeroPolynomialError("Cannot isolate roots of the zero polynomial")
    width = to_rational(width)
    if width <= 0:
        raise BadIntervalError(f"Isolation width must be positive, got {width}")

    sq = squarefree_part(f)
    if sq.degree < 1:
        return []
    if sq.degree == 1:
        root = -sq.coeffs[0] / sq.coeffs[1]
        return [IsolatingInterval(root, root)]

    chain = sturm_chain(sq)
    bound = cauchy_bound(sq)
    found: List[IsolatingInterval] = []
    pending = [(-bound, bound, _count_in(chain, -bound, bound))]

    while pending:
        lo, hi, count = pending.pop()
        if count == 0:
            continue
        if count == 1 and hi - lo < width:
            found.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        hit = 1 if sq(mid) == 0 else 0
        if hit:
            found.append(IsolatingInterval(mid, mid))
        # (lo, mid] counts mid itself; the exact point is already reported
        left = _count_in(chain, lo, mid) - hit
        right = count - left - hit
        pending.append((lo, mid, left))
        pending.append((mid, hi, right))

    found.sort(key=lambda iv: iv.lo)
    return found


def all_roots_nonpositive(f: RationalPoly) -> bool:
    """True iff the real-rooted f has no root in (0, inf)."""
    cert = is_real_rooted(f)
    if cert.verdict == RootVerdict.DEGENERATE_ZERO_POLY:
        raise ZeroPolynomialError("all_roots_nonpositive is undefined for the zero polynomial")
    if not cert.is_real_rooted:
        raise NotRealRootedError(f"{f} has a non-real root")
    return count_real_roots(f, 0, POS_INF) == 0
