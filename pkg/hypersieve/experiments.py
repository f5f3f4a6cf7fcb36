"""
Numeric reproduction of the deformed-basis convergence claims and the E_n machinery

E_n = {b : q_n + b q_{n-2} has only real zeros}. For bases whose q_n have
only simple real zeros, E_n contains a neighbourhood of 0 and is bounded
above; en_max_bound brackets its supremum by exact bisection.

Locally uniform convergence is checked as max-gap decay on a finite
rational grid: stepping alpha up by a factor rho must shrink every gap by
at least rho / 2 (5 per decade), or keep a zero gap at zero.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .bases import SimpleSet
from .basischange import alpha_deformed_basis, expand_in_basis
from .errors import (
    CertificateError, NoUpperBoundFoundError, NotRealRootedError, NotSimpleRealRootedError,
    ScheduleTooShortError, ValidationError, ZeroPolynomialError
)
from .mstest import GammaSequence, apply_sequence, gamma_at
from .polycore import RationalLike, RationalPoly, format_rational, to_rational
from .realroots import RealRootCertificate, RootVerdict, is_real_rooted

logger = logging.getLogger(__name__)

DEFAULT_TOL = Fraction(1, 1024)
DEFAULT_CAP = Fraction(2 ** 40)


def default_grid() -> List[Fraction]:
    """21 points on [-2, 2], step 1/5"""
    return [Fraction(-2) + Fraction(k, 5) for k in range(21)]


@dataclass
class EnBound:
    """
    Certified bracket lo <= max E_n < hi

    q_n + lo q_{n-2} is real-rooted and q_n + hi q_{n-2} is not.
    """
    n: int
    basis: Dict[str, Any]
    basis_name: str
    lo: Fraction
    hi: Fraction
    lower_poly: RationalPoly
    upper_poly: RationalPoly
    lo_certificate: RealRootCertificate
    hi_certificate: RealRootCertificate

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def verify(self) -> 'EnBound':
        """Re-certify both endpoints independently; raises CertificateError on mismatch."""
        if not self.lo < self.hi:
            raise CertificateError(f"E_{self.n} bracket is not ordered: lo={self.lo}, hi={self.hi}")
        if not is_real_rooted(self.lower_poly).is_real_rooted:
            raise CertificateError(f"E_{self.n} lower endpoint {self.lo} is not inside E_n")
        if is_real_rooted(self.upper_poly).verdict != RootVerdict.HAS_NON_REAL_ROOT:
            raise CertificateError(f"E_{self.n} upper endpoint {self.hi} is not outside E_n")
        return self

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "basis": self.basis,
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "width": format_rational(self.width),
            "lo_certificate": self.lo_certificate.to_json(),
            "hi_certificate": self.hi_certificate.to_json(),
        }


def en_max_bound(Q: SimpleSet, n: int, tol: RationalLike = DEFAULT_TOL, cap: RationalLike = DEFAULT_CAP,
                 require_simple: bool = True) -> EnBound:
    """
    Bracket max E_n to width <= tol.

    Starts from lo = 0 (inside E_n because q_n is real-rooted), doubles hi
    from 1 until it leaves E_n, then bisects. Assumes E_n meets [0, inf) in
    an interval.

    Raises:
        NotSimpleRealRootedError: q_n lacks simple real zeros (require_simple)
        NotRealRootedError: q_n is not real-rooted (require_simple=False)
        NoUpperBoundFoundError: hi passed cap while still inside E_n
    """
    if not isinstance(n, int) or n < 2:
        raise ValidationError(f"en_max_bound needs n >= 2, got {n!r}")
    tol, cap = to_rational(tol), to_rational(cap)
    if tol <= 0:
        raise ValidationError(f"tol must be positive, got {tol}")

    qn, qn2 = Q.poly(n), Q.poly(n - 2)
    cert = is_real_rooted(qn)
    if require_simple:
        if not (cert.is_real_rooted and cert.squarefree_degree == n and cert.distinct_real_roots == n):
            raise NotSimpleRealRootedError(f"{Q.name}: q_{n} = {qn} does not have {n} simple real zeros")
    elif not cert.is_real_rooted:
        raise NotRealRootedError(f"{Q.name}: q_{n} = {qn} is not real-rooted, so 0 is not in E_{n}")

    def member(b: Fraction) -> RealRootCertificate:
        return is_real_rooted(qn + qn2 * b)

    lo, lo_cert = Fraction(0), cert
    hi = Fraction(1)
    hi_cert = member(hi)
    while hi_cert.is_real_rooted:
        lo, lo_cert = hi, hi_cert
        hi *= 2
        if hi > cap:
            raise NoUpperBoundFoundError(f"{Q.name}: E_{n} still contains {lo}; doubling exceeded cap {cap}")
        hi_cert = member(hi)

    while hi - lo > tol:
        mid = (lo + hi) / 2
        mid_cert = member(mid)
        logger.debug(f"E_{n} bisection on {Q.name}: b={mid} -> {mid_cert.verdict.value}")
        if mid_cert.is_real_rooted:
            lo, lo_cert = mid, mid_cert
        else:
            hi, hi_cert = mid, mid_cert

    bound = EnBound(n, Q.descriptor, Q.name, lo, hi, qn + qn2 * lo, qn + qn2 * hi, lo_cert, hi_cert)
    logger.info(f"E_{n} for {Q.name}: max in [{lo}, {hi}]")
    return bound.verify()


@dataclass
class EnRatioProbe:
    """
    Gamma applied to q_n + lo q_{n-2} at the top of E_n

    With gamma_n > 0, a real-rooted image forces
    gamma_{n-2} <= gamma_n (1 + tol / lo); consistent records whether the
    observed pair respects that.
    """
    bound: EnBound
    image: RationalPoly
    certificate: RealRootCertificate
    gamma_n: Fraction
    gamma_n_minus_2: Fraction
    consistent: Optional[bool]

    def to_json(self) -> Dict[str, Any]:
        return {
            "bound": self.bound.to_json(),
            "image": self.image.to_json(),
            "certificate": self.certificate.to_json(),
            "gamma_n": format_rational(self.gamma_n),
            "gamma_n_minus_2": format_rational(self.gamma_n_minus_2),
            "consistent": self.consistent,
        }


def en_ratio_probe(G: GammaSequence, Q: SimpleSet, n: int, tol: RationalLike = DEFAULT_TOL) -> EnRatioProbe:
    bound = en_max_bound(Q, n, tol=tol)
    image = apply_sequence(G, bound.lower_poly, Q)
    cert = is_real_rooted(image)
    g_n, g_n2 = gamma_at(G, n), gamma_at(G, n - 2)
    consistent = None
    if g_n > 0 and bound.lo > 0:
        allowed = g_n * (1 + bound.width / bound.lo)
        consistent = (not cert.is_real_rooted) or g_n2 <= allowed
    return EnRatioProbe(bound, image, cert, g_n, g_n2, consistent)


@dataclass
class AlphaRecord:
    """Expansion of f in the deformed basis for one alpha"""
    alpha: Fraction
    coeffs: List[Fraction]
    polys: List[RationalPoly]
    basis_gaps: List[Fraction] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "alpha": format_rational(self.alpha),
            "coeffs": [format_rational(c) for c in self.coeffs],
            "basis": [p.to_json() for p in self.polys],
            "basis_gaps": [format_rational(g) for g in self.basis_gaps],
        }


@dataclass
class ConvergenceTrace:
    f: RationalPoly
    source: SimpleSet
    target: SimpleSet
    alpha_schedule: List[Fraction]
    target_coeffs: List[Fraction]
    records: List[AlphaRecord]
    grid: List[Fraction]

    @property
    def degree(self) -> int:
        return len(self.target_coeffs) - 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "f": self.f.to_json(),
            "source": self.source.descriptor,
            "target": self.target.descriptor,
            "alpha_schedule": [format_rational(a) for a in self.alpha_schedule],
            "target_coeffs": [format_rational(c) for c in self.target_coeffs],
            "records": [r.to_json() for r in self.records],
        }


def _sup_gap(p: RationalPoly, q: RationalPoly, grid: Sequence[Fraction]) -> Fraction:
    diff = p - q
    return max(abs(diff(x)) for x in grid)


def _basis_gaps(polys: List[RationalPoly], B: SimpleSet, grid: Sequence[Fraction]) -> List[Fraction]:
    return [_sup_gap(p, B.poly(k), grid) for k, p in enumerate(polys)]


def _validate_schedule(alpha_schedule: Sequence[RationalLike]) -> List[Fraction]:
    schedule = [to_rational(a) for a in alpha_schedule]
    if not schedule:
        raise ValidationError("alpha_schedule must be nonempty")
    if any(a <= 1 for a in schedule):
        raise ValidationError("alpha_schedule entries must all exceed 1")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValidationError("alpha_schedule must be strictly increasing")
    return schedule


def deformed_expansion_trace(f: RationalPoly, Q: SimpleSet, B: SimpleSet, alpha_schedule: Sequence[RationalLike],
                             grid: Optional[Sequence[RationalLike]] = None) -> ConvergenceTrace:
    """
    Expand f in Q*_alpha for every alpha in the schedule.

    The top coefficient c_{alpha,n} must equal m_n (f's top coefficient in B)
    exactly; a mismatch raises CertificateError.
    """
    if f.is_zero:
        raise ZeroPolynomialError("deformed_expansion_trace needs a nonzero f")
    schedule = _validate_schedule(alpha_schedule)
    grid = [to_rational(x) for x in (grid if grid is not None else default_grid())]
    n = f.degree
    m = expand_in_basis(f, B)

    records = []
    for alpha in schedule:
        deformed = alpha_deformed_basis(Q, B, alpha, n)
        polys = deformed.polys(n)
        c = expand_in_basis(f, deformed)
        if c[n] != m[n]:
            raise CertificateError(f"Leading deformed coefficient {c[n]} != {m[n]} at alpha={alpha}")
        records.append(AlphaRecord(alpha, c, polys, _basis_gaps(polys, B, grid)))
        logger.debug(f"alpha={alpha}: c = {[format_rational(v) for v in c]}")

    logger.info(f"Deformed expansion trace of {f} over {Q.name} -> {B.name}: {len(schedule)} alphas")
    return ConvergenceTrace(f, Q, B, schedule, m, records, grid)


@dataclass
class ClaimCheck:
    """One gap comparison between consecutive schedule entries"""
    claim: str
    k: Optional[int]
    alpha_from: Fraction
    alpha_to: Fraction
    gap_from: Fraction
    gap_to: Fraction
    required_factor: Fraction
    passed: bool

    def to_json(self) -> Dict[str, Any]:
        data = {
            "claim": self.claim,
            "alpha_from": format_rational(self.alpha_from),
            "alpha_to": format_rational(self.alpha_to),
            "gap_from": format_rational(self.gap_from),
            "gap_to": format_rational(self.gap_to),
            "required_factor": format_rational(self.required_factor),
            "passed": self.passed,
        }
        if self.k is not None:
            data["k"] = self.k
        return data


@dataclass
class ConvergenceReport:
    checks: List[ClaimCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[ClaimCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _decays(gap_from: Fraction, gap_to: Fraction, factor: Fraction) -> bool:
    if gap_from == 0:
        return gap_to == 0
    return gap_to * factor <= gap_from


def claim_convergence_check(trace: ConvergenceTrace, grid: Sequence[RationalLike],
                            G: GammaSequence) -> ConvergenceReport:
    """
    Check the three convergence claims along the trace's schedule.

    deformed basis: sup |p_k^alpha - b_k| decays for every k
    coefficients: |c_{alpha,k} - m_k| decays for k < n and is 0 at k = n
    images: sup |sum c_{alpha,k} gamma_k p_k^alpha - sum m_k gamma_k b_k| decays
    """
    if len(trace.alpha_schedule) < 2:
        raise ScheduleTooShortError("claim_convergence_check needs at least two schedule entries")
    grid = [to_rational(x) for x in grid]
    if not grid:
        raise ValidationError("claim_convergence_check needs a nonempty grid")

    n = trace.degree
    B = trace.target
    m = trace.target_coeffs
    limit_image = sum((B.poly(k) * (m[k] * gamma_at(G, k)) for k in range(n + 1)), RationalPoly())

    basis_gaps = [_basis_gaps(r.polys, B, grid) for r in trace.records]
    coeff_gaps = [[abs(r.coeffs[k] - m[k]) for k in range(n + 1)] for r in trace.records]
    image_gaps = []
    for r in trace.records:
        image = sum((r.polys[k] * (r.coeffs[k] * gamma_at(G, k)) for k in range(n + 1)), RationalPoly())
        image_gaps.append(_sup_gap(image, limit_image, grid))

    checks = []
    for i in range(len(trace.records) - 1):
        a0, a1 = trace.alpha_schedule[i], trace.alpha_schedule[i + 1]
        factor = (a1 / a0) / 2
        for k in range(n + 1):
            checks.append(ClaimCheck("basis_convergence", k, a0, a1, basis_gaps[i][k], basis_gaps[i + 1][k],
                                     factor, _decays(basis_gaps[i][k], basis_gaps[i + 1][k], factor)))
        for k in range(n + 1):
            g0, g1 = coeff_gaps[i][k], coeff_gaps[i + 1][k]
            ok = (g0 == 0 and g1 == 0) if k == n else _decays(g0, g1, factor)
            checks.append(ClaimCheck("coefficient_convergence", k, a0, a1, g0, g1, factor, ok))
        checks.append(ClaimCheck("image_convergence", None, a0, a1, image_gaps[i], image_gaps[i + 1],
                                 factor, _decays(image_gaps[i], image_gaps[i + 1], factor)))

    report = ConvergenceReport(checks)
    if report.passed:
        logger.info(f"Convergence claims hold on {len(grid)} grid points over {len(trace.records)} alphas")
    else:
        logger.warning(f"Convergence check: {len(report.failures())} gap comparisons failed")
    return report
