"""
Multiplier-sequence semantics

- GammaSequence: a rational prefix gamma_0..gamma_m followed by a tail rule
- apply_sequence: Gamma[f] = sum c_k gamma_k q_k where f = sum c_k q_k
- polya_schur_check: the classical binomial test Gamma[(1+x)^n], n = 1..N
- sequence property laws: Turan, sign pattern, zero pattern, geometric
  extrapolation, monotonicity
- falsify: one-sided search for a real-rooted f whose image is not
"""

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .bases import SimpleSet
from .basischange import expand_in_basis, reconstruct
from .errors import (
    CertificateError, HypersieveError, InvalidSequenceError, NegativeTermsError, NotSimpleRealRootedError,
    ParseError, ValidationError, ZeroLeadingTermsError
)
from .polycore import RationalLike, RationalPoly, compose_affine, format_rational, to_rational
from .realroots import RealRootCertificate, RootVerdict, is_real_rooted

logger = logging.getLogger(__name__)

# Roots for random trial polynomials; small so exact coefficients stay small
ROOT_GRID = tuple(Fraction(v) for v in ("-3", "-2", "-1", "-1/2", "0", "1/2", "1", "2", "3"))

# Multiples of the certified E_n lower bracket tried as q_n + b q_{n-2}
EN_FRACTIONS = tuple(Fraction(v) for v in ("1", "3/4", "1/2", "1/4", "-1/4", "-1/2", "-1"))

# q_n + s q_{n-2} + t q_{n-4}
THREE_TERM_S = tuple(Fraction(v) for v in ("1/64", "1/16", "1/4"))
THREE_TERM_T = tuple(Fraction(v) for v in ("1/4", "1", "4", "16"))


class TailKind(str, Enum):
    """How a sequence continues past its prefix"""
    ZEROS = "zeros"
    CONSTANT = "constant"
    GEOMETRIC = "geometric"


@dataclass(frozen=True)
class Tail:
    kind: TailKind = TailKind.ZEROS
    ratio: Optional[Fraction] = None

    def to_json(self) -> Dict[str, str]:
        if self.kind == TailKind.GEOMETRIC:
            return {"kind": self.kind.value, "ratio": format_rational(self.ratio)}
        return {"kind": self.kind.value}


@dataclass(frozen=True)
class GammaSequence:
    """
    {gamma_k}: explicit prefix gamma_0..gamma_m, then the tail rule

    Zeros: gamma_k = 0 for k > m
    Constant: gamma_k = gamma_m for k > m
    Geometric(r): gamma_k = gamma_m * r^(k - m), requires gamma_m != 0
    """
    prefix: Tuple[Fraction, ...]
    tail: Tail = field(default_factory=Tail)

    def __post_init__(self):
        prefix = tuple(to_rational(v) for v in self.prefix)
        if not prefix:
            raise InvalidSequenceError("Sequence prefix must be nonempty")
        if self.tail.kind == TailKind.GEOMETRIC:
            if self.tail.ratio is None:
                raise InvalidSequenceError("Geometric tail needs a ratio")
            if prefix[-1] == 0:
                raise InvalidSequenceError("Geometric tail needs a nonzero last prefix term")
            object.__setattr__(self, "tail", Tail(TailKind.GEOMETRIC, to_rational(self.tail.ratio)))
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def finite(cls, values: Sequence[RationalLike]) -> 'GammaSequence':
        """values followed by zeros"""
        return cls(tuple(values), Tail(TailKind.ZEROS))

    @classmethod
    def constant(cls, c: RationalLike) -> 'GammaSequence':
        return cls((c,), Tail(TailKind.CONSTANT))

    @classmethod
    def geometric(cls, gamma0: RationalLike, ratio: RationalLike) -> 'GammaSequence':
        """gamma_k = gamma0 * ratio^k"""
        return cls((gamma0,), Tail(TailKind.GEOMETRIC, to_rational(ratio)))

    def at(self, k: int) -> Fraction:
        return gamma_at(self, k)

    def terms(self, n: int) -> List[Fraction]:
        """gamma_0 .. gamma_n"""
        return [gamma_at(self, k) for k in range(n + 1)]

    def scaled(self, r: RationalLike) -> 'GammaSequence':
        """{r gamma_k}"""
        r = to_rational(r)
        if r == 0:
            return GammaSequence((Fraction(0),), Tail(TailKind.ZEROS))
        return GammaSequence(tuple(v * r for v in self.prefix), self.tail)

    def to_json(self) -> Dict[str, Any]:
        return {"prefix": [format_rational(v) for v in self.prefix], "tail": self.tail.to_json()}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'GammaSequence':
        """Parse {"prefix": ["1/8", "1", "2"], "tail": {"kind": "zeros"}}"""
        if not isinstance(data, dict) or not isinstance(data.get("prefix"), list):
            raise ParseError("Sequence JSON must be an object with a 'prefix' array")
        tail_data = data.get("tail", {"kind": "zeros"})
        if not isinstance(tail_data, dict):
            raise ParseError("Sequence 'tail' must be an object")
        try:
            kind = TailKind(tail_data.get("kind", "zeros"))
        except ValueError:
            raise ParseError(f"Unknown tail kind {tail_data.get('kind')!r}")
        ratio = None
        if kind == TailKind.GEOMETRIC:
            if "ratio" not in tail_data:
                raise ParseError("Geometric tail needs a 'ratio'")
            ratio = to_rational(tail_data["ratio"])
        for v in data["prefix"]:
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise ParseError(f"Sequence term {v!r} must be a rational string")
        return cls(tuple(to_rational(v) for v in data["prefix"]), Tail(kind, ratio))

    def __str__(self) -> str:
        head = ", ".join(format_rational(v) for v in self.prefix)
        if self.tail.kind == TailKind.ZEROS:
            return f"{{{head}, 0, 0, ...}}"
        if self.tail.kind == TailKind.CONSTANT:
            return f"{{{head}, {format_rational(self.prefix[-1])}, ...}}"
        return f"{{{head}, ... x{format_rational(self.tail.ratio)}}}"


def gamma_at(G: GammaSequence, k: int) -> Fraction:
    if k < 0:
        raise ValidationError(f"Sequence index must be nonnegative, got {k}")
    m = len(G.prefix) - 1
    if k <= m:
        return G.prefix[k]
    if G.tail.kind == TailKind.ZEROS:
        return Fraction(0)
    if G.tail.kind == TailKind.CONSTANT:
        return G.prefix[-1]
    return G.prefix[-1] * G.tail.ratio ** (k - m)


def power_sequence(G: GammaSequence, m: int) -> GammaSequence:
    """{gamma_k^m}; a geometric tail's ratio becomes r^m."""
    if not isinstance(m, int) or m < 1:
        raise ValidationError(f"power_sequence needs a positive integer exponent, got {m!r}")
    tail = G.tail
    if tail.kind == TailKind.GEOMETRIC:
        tail = Tail(TailKind.GEOMETRIC, tail.ratio ** m)
    return GammaSequence(tuple(v ** m for v in G.prefix), tail)


def apply_sequence(G: GammaSequence, f: RationalPoly, Q: SimpleSet) -> RationalPoly:
    """Gamma[f] in the standard basis"""
    coeffs = expand_in_basis(f, Q)
    return reconstruct([c * gamma_at(G, k) for k, c in enumerate(coeffs)], Q)


def binomial_image(G: GammaSequence, n: int) -> RationalPoly:
    """Gamma[(1+x)^n] = sum gamma_k C(n, k) x^k"""
    return RationalPoly(tuple(gamma_at(G, k) * math.comb(n, k) for k in range(n + 1)))


# Check results

class CheckStatus(str, Enum):
    """Verdicts of the sequence property checks"""
    PASS = "Pass"
    FAIL_AT = "FailAt"
    ALL_SAME_SIGN = "AllSameSign"
    ALTERNATING = "Alternating"
    NEITHER = "Neither"


@dataclass
class CheckResult:
    """Outcome of one property check; index is set for FailAt and Neither"""
    name: str
    status: CheckStatus
    index: Optional[int] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status not in (CheckStatus.FAIL_AT, CheckStatus.NEITHER)

    def to_json(self) -> Dict[str, Any]:
        data = {"check": self.name, "status": self.status.value, "passed": self.passed}
        if self.index is not None:
            data["index"] = self.index
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class PolyaSchurResult:
    """Pass up to degree checked_up_to, or the first failing binomial image"""
    checked_up_to: int
    fail_at: Optional[int] = None
    image: Optional[RationalPoly] = None
    certificate: Optional[RealRootCertificate] = None

    @property
    def passed(self) -> bool:
        return self.fail_at is None

    def to_json(self) -> Dict[str, Any]:
        if self.passed:
            return {"check": "polya_schur", "status": CheckStatus.PASS.value, "passed": True,
                    "checked_up_to": self.checked_up_to}
        return {
            "check": "polya_schur",
            "status": CheckStatus.FAIL_AT.value,
            "passed": False,
            "index": self.fail_at,
            "image": self.image.to_json(),
            "certificate": self.certificate.to_json(),
        }


def _require_bound(N: int, name: str):
    if not isinstance(N, int) or N < 1:
        raise ValidationError(f"{name} needs a bound N >= 1, got {N!r}")


def _assert_newton(G: GammaSequence, n: int):
    """Real-rooted Gamma[(1+x)^n] forces gamma_k^2 >= gamma_{k-1} gamma_{k+1} for 1 <= k <= n-1."""
    for k in range(1, n):
        g_prev, g, g_next = gamma_at(G, k - 1), gamma_at(G, k), gamma_at(G, k + 1)
        if g * g < g_prev * g_next:
            raise CertificateError(
                f"Newton inequality broken at k={k} for certified real-rooted Gamma[(1+x)^{n}] of {G}"
            )


def polya_schur_check(G: GammaSequence, N: int) -> PolyaSchurResult:
    """
    Certify Gamma[(1+x)^n] real-rooted for n = 1..N.

    Pass is evidence up to degree N only. An identically zero image does not
    count as a failure.
    """
    _require_bound(N, "polya_schur_check")
    for n in range(1, N + 1):
        image = binomial_image(G, n)
        cert = is_real_rooted(image)
        if cert.verdict == RootVerdict.HAS_NON_REAL_ROOT:
            logger.info(f"polya_schur_check: {G} fails at n={n}, image {image}")
            return PolyaSchurResult(checked_up_to=n, fail_at=n, image=image, certificate=cert)
        _assert_newton(G, n)
    return PolyaSchurResult(checked_up_to=N)


def turan_check(G: GammaSequence, N: int) -> CheckResult:
    """gamma_k^2 - gamma_{k-1} gamma_{k+1} >= 0 for k = 1..N"""
    _require_bound(N, "turan_check")
    for k in range(1, N + 1):
        g_prev, g, g_next = gamma_at(G, k - 1), gamma_at(G, k), gamma_at(G, k + 1)
        if g * g - g_prev * g_next < 0:
            return CheckResult("turan", CheckStatus.FAIL_AT, k,
                               f"gamma_{k}^2 - gamma_{k-1} gamma_{k+1} = {format_rational(g * g - g_prev * g_next)}")
    return CheckResult("turan", CheckStatus.PASS)


def sign_pattern_check(G: GammaSequence, N: int) -> CheckResult:
    """
    Classify the nonzero terms among gamma_0..gamma_N.

    Alternating means (-1)^k gamma_k has one sign. Neither reports the
    first index by which both patterns have been broken.
    """
    _require_bound(N, "sign_pattern_check")
    same_break: Optional[int] = None
    alt_break: Optional[int] = None
    first_sign = 0
    first_alt = 0
    for k in range(N + 1):
        g = gamma_at(G, k)
        if g == 0:
            continue
        s = 1 if g > 0 else -1
        a = s if k % 2 == 0 else -s
        if first_sign == 0:
            first_sign, first_alt = s, a
            continue
        if same_break is None and s != first_sign:
            same_break = k
        if alt_break is None and a != first_alt:
            alt_break = k
    if same_break is None:
        return CheckResult("sign_pattern", CheckStatus.ALL_SAME_SIGN)
    if alt_break is None:
        return CheckResult("sign_pattern", CheckStatus.ALTERNATING)
    return CheckResult("sign_pattern", CheckStatus.NEITHER, max(same_break, alt_break),
                       "terms neither share a sign nor alternate")


def zero_pattern_check(G: GammaSequence, N: int) -> CheckResult:
    """Once a zero follows a nonzero term, every later term must be zero."""
    _require_bound(N, "zero_pattern_check")
    seen_nonzero = False
    zero_after_nonzero = False
    for k in range(N + 1):
        if gamma_at(G, k) != 0:
            if zero_after_nonzero:
                return CheckResult("zero_pattern", CheckStatus.FAIL_AT, k, "nonzero term after a zero")
            seen_nonzero = True
        elif seen_nonzero:
            zero_after_nonzero = True
    return CheckResult("zero_pattern", CheckStatus.PASS)


@dataclass
class GeometricExtrapolation:
    """
    Outcome of extrapolating gamma_n = gamma_0 alpha^n from the first three terms

    Any violation (in the prefix, or a tail that cannot continue the
    progression) certifies the sequence is not a classical multiplier sequence.
    """
    geometric_start: bool
    alpha: Optional[Fraction] = None
    violations: List[int] = field(default_factory=list)
    tail_consistent: bool = True

    @property
    def certifies_not_classical(self) -> bool:
        return self.geometric_start and (bool(self.violations) or not self.tail_consistent)

    def to_json(self) -> Dict[str, Any]:
        if not self.geometric_start:
            return {"check": "geometric_extrapolation", "status": "NotGeometricStart", "passed": True}
        return {
            "check": "geometric_extrapolation",
            "status": "Extrapolation",
            "passed": not self.certifies_not_classical,
            "alpha": format_rational(self.alpha),
            "violations": list(self.violations),
            "tail_consistent": self.tail_consistent,
        }


def geometric_extrapolation(G: GammaSequence) -> GeometricExtrapolation:
    g0, g1 = gamma_at(G, 0), gamma_at(G, 1)
    if g0 == 0 or g1 == 0:
        raise ZeroLeadingTermsError("geometric_extrapolation needs gamma_0 != 0 and gamma_1 != 0")
    alpha = g1 / g0
    if gamma_at(G, 2) != g1 * alpha:
        return GeometricExtrapolation(geometric_start=False)

    violations = [k for k, v in enumerate(G.prefix) if v != g0 * alpha ** k]
    if G.tail.kind == TailKind.ZEROS:
        tail_consistent = False
    elif G.tail.kind == TailKind.CONSTANT:
        tail_consistent = alpha == 1
    else:
        tail_consistent = G.tail.ratio == alpha
    return GeometricExtrapolation(True, alpha, violations, tail_consistent)


def _require_nonnegative(G: GammaSequence, N: int):
    for k in range(N + 1):
        if gamma_at(G, k) < 0:
            raise NegativeTermsError(f"gamma_{k} = {format_rational(gamma_at(G, k))} is negative")


def monotone_after_first_check(G: GammaSequence, N: int) -> CheckResult:
    """gamma_{k+1} <= gamma_k for 1 <= k < N; FailAt names the larger (later) term."""
    _require_bound(N, "monotone_after_first_check")
    _require_nonnegative(G, N)
    for k in range(1, N):
        if gamma_at(G, k + 1) > gamma_at(G, k):
            return CheckResult("monotone_after_first", CheckStatus.FAIL_AT, k + 1,
                               f"gamma_{k + 1} > gamma_{k}")
    return CheckResult("monotone_after_first", CheckStatus.PASS)


def nondecreasing_check(G: GammaSequence, N: int) -> CheckResult:
    """gamma_{k-1} <= gamma_k for 1 <= k <= N"""
    _require_bound(N, "nondecreasing_check")
    _require_nonnegative(G, N)
    for k in range(1, N + 1):
        if gamma_at(G, k) < gamma_at(G, k - 1):
            return CheckResult("nondecreasing", CheckStatus.FAIL_AT, k, f"gamma_{k} < gamma_{k - 1}")
    return CheckResult("nondecreasing", CheckStatus.PASS)


# Falsification

@dataclass
class Counterexample:
    """A certified real-rooted f whose image Gamma[f] has a non-real root"""
    label: str
    f: RationalPoly
    image: RationalPoly
    input_certificate: RealRootCertificate
    certificate: RealRootCertificate

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": "CounterexampleFound",
            "label": self.label,
            "f": self.f.to_json(),
            "f_text": str(self.f),
            "image": self.image.to_json(),
            "image_text": str(self.image),
            "input_certificate": self.input_certificate.to_json(),
            "certificate": self.certificate.to_json(),
        }


@dataclass
class FalsificationReport:
    """Search outcome for one (sequence, basis, budget) triple"""
    sequence: GammaSequence
    basis: Dict[str, Any]
    basis_name: str
    degree_budget: int
    trials: int
    seed: int
    candidates_checked: int = 0
    counterexample: Optional[Counterexample] = None

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    @property
    def outcome(self) -> str:
        return "CounterexampleFound" if self.found else "NoneFoundWithinBudget"

    def to_json(self) -> Dict[str, Any]:
        return {
            "sequence": self.sequence.to_json(),
            "basis": self.basis,
            "degree_budget": self.degree_budget,
            "trials": self.trials,
            "seed": self.seed,
            "candidates_checked": self.candidates_checked,
            "outcome": self.counterexample.to_json() if self.found else {"kind": self.outcome},
        }

    def summary(self) -> str:
        lines = [
            f"Falsification of {self.sequence} over {self.basis_name}",
            "=" * 60,
            f"Degree budget: {self.degree_budget}   Random trials: {self.trials}   Seed: {self.seed}",
            f"Candidates checked: {self.candidates_checked}",
        ]
        if self.found:
            cx = self.counterexample
            lines.append(f"❌ Not a multiplier sequence for {self.basis_name}: counterexample [{cx.label}]")
            lines.append(f"   f(x)        = {cx.f}")
            lines.append(f"   Gamma[f](x) = {cx.image}  ({cx.certificate.verdict.value})")
        else:
            lines.append(f"⚠️  No counterexample within budget (evidence, not proof)")
        return "\n".join(lines)


def _en_candidates(Q: SimpleSet, n: int, tol: Fraction) -> List[Tuple[str, RationalPoly]]:
    from .experiments import en_max_bound

    try:
        bound = en_max_bound(Q, n, tol=tol)
    except NotSimpleRealRootedError as e:
        # standard-like bases have q_n = x^n at every degree; nothing to report
        logger.debug(f"E_{n} candidates skipped for {Q.name}: {e}")
        return []
    except HypersieveError as e:
        logger.warning(f"E_{n} candidates skipped for {Q.name}: {e}")
        return []
    qn, qn2 = Q.poly(n), Q.poly(n - 2)
    return [(f"E_{n}:b={format_rational(bound.lo * r)}", qn + qn2 * (bound.lo * r)) for r in EN_FRACTIONS]


def structured_candidates(G: GammaSequence, Q: SimpleSet, degree_budget: int,
                          tol: Fraction = Fraction(1, 1024)) -> Iterator[Tuple[str, RationalPoly]]:
    """Deterministic structured candidates, degree by degree."""
    x = RationalPoly.x()
    top = degree_budget if Q.max_degree is None else min(degree_budget, Q.max_degree)
    for n in range(1, top + 1):
        yield f"x^{n}", x ** n
        yield f"(1+x)^{n}", (x + 1) ** n
        yield f"(x-1)^{n}", (x - 1) ** n
        if n == 2:
            yield "4x^2+4x+1", RationalPoly((1, 4, 4))
            g0 = gamma_at(G, 0)
            if g0 != 0:
                g1 = gamma_at(G, 1) / g0
                a, b = g1 + 1, g1 + 2
                if a != 0:
                    yield "ax^2+bx+b^2/(4a)", RationalPoly((b * b / (4 * a), b, a))
        if n >= 2:
            yield from _en_candidates(Q, n, tol)
        if n >= 4:
            qn, qn2, qn4 = Q.poly(n), Q.poly(n - 2), Q.poly(n - 4)
            for s in THREE_TERM_S:
                for t in THREE_TERM_T:
                    yield (f"q_{n}+({format_rational(s)})q_{n-2}+({format_rational(t)})q_{n-4}",
                           qn + qn2 * s + qn4 * t)


def random_candidates(degree_budget: int, trials: int, seed: int) -> Iterator[Tuple[str, RationalPoly]]:
    """`trials` products prod (x - r_i), roots from ROOT_GRID, deterministic in seed"""
    rng = random.Random(seed)
    for i in range(trials):
        degree = rng.randint(1, degree_budget)
        roots = [rng.choice(ROOT_GRID) for _ in range(degree)]
        yield f"random#{i}", RationalPoly.from_roots(roots)


def _evaluate(G: GammaSequence, Q: SimpleSet, label: str, f: RationalPoly) -> Optional[Counterexample]:
    input_cert = is_real_rooted(f)
    if not input_cert.is_real_rooted:
        return None
    image = apply_sequence(G, f, Q)
    cert = is_real_rooted(image)
    if cert.verdict != RootVerdict.HAS_NON_REAL_ROOT:
        return None
    return Counterexample(label, f, image, input_cert, cert)


def _candidates(G: GammaSequence, Q: SimpleSet, degree_budget: int, trials: int, seed: int,
                tol: Fraction) -> Iterator[Tuple[str, RationalPoly]]:
    seen = set()
    top = degree_budget if Q.max_degree is None else min(degree_budget, Q.max_degree)
    for stage in (structured_candidates(G, Q, degree_budget, tol), random_candidates(top, trials, seed)):
        for label, f in stage:
            if f.is_zero or f.coeffs in seen:
                continue
            seen.add(f.coeffs)
            yield label, f


def falsify(G: GammaSequence, Q: SimpleSet, degree_budget: int, trials: int, seed: int,
            tol: RationalLike = Fraction(1, 1024), jobs: int = 1) -> FalsificationReport:
    """
    Search for a real-rooted f with Gamma[f] not real-rooted.

    Structured candidates come first, then `trials` random root-grid products.
    With jobs > 1 candidates are evaluated on a thread pool in chunks; the
    reported counterexample is always the first in enumeration order.
    """
    if not isinstance(degree_budget, int) or degree_budget < 1:
        raise ValidationError(f"degree_budget must be >= 1, got {degree_budget!r}")
    if not isinstance(trials, int) or trials < 0:
        raise ValidationError(f"trials must be >= 0, got {trials!r}")
    tol = to_rational(tol)

    logger.info(f"Falsifying {G} against {Q.name} (budget {degree_budget}, trials {trials}, seed {seed})")
    report = FalsificationReport(G, Q.descriptor, Q.name, degree_budget, trials, seed)
    candidates = _candidates(G, Q, degree_budget, trials, seed, tol)

    if jobs <= 1:
        for index, (label, f) in enumerate(candidates):
            cx = _evaluate(G, Q, label, f)
            if cx is not None:
                report.candidates_checked = index + 1
                report.counterexample = cx
                logger.info(f"Counterexample found at candidate #{index + 1} [{label}]: f = {f}")
                return report
            report.candidates_checked = index + 1
        logger.info(f"No counterexample for {G} within budget after {report.candidates_checked} candidates")
        return report

    chunk_size = jobs * 4
    index = 0
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        while True:
            chunk = []
            for item in candidates:
                chunk.append(item)
                if len(chunk) == chunk_size:
                    break
            if not chunk:
                break
            results = pool.map(lambda item: _evaluate(G, Q, item[0], item[1]), chunk)
            for offset, cx in enumerate(results):
                if cx is not None:
                    report.candidates_checked = index + offset + 1
                    report.counterexample = cx
                    logger.info(f"Counterexample found at candidate #{report.candidates_checked} [{cx.label}]")
                    return report
            index += len(chunk)
            report.candidates_checked = index
    logger.info(f"No counterexample for {G} within budget after {report.candidates_checked} candidates")
    return report


def trace_power_witness(G: GammaSequence, Q: SimpleSet, f: RationalPoly, m: int) -> Optional[Counterexample]:
    """
    Walk f, Gamma[f], Gamma^2[f], ... up to Gamma^m[f] = {gamma_k^m}[f].

    Returns a counterexample for G at the first iterate whose image is not
    real-rooted, or None if every iterate stays real-rooted (or vanishes).
    """
    if m < 1:
        raise ValidationError(f"trace_power_witness needs m >= 1, got {m}")
    current = f
    current_cert = is_real_rooted(current)
    if not current_cert.is_real_rooted:
        raise ValidationError(f"trace_power_witness needs a real-rooted start, got {f}")
    for step in range(1, m + 1):
        image = apply_sequence(G, current, Q)
        cert = is_real_rooted(image)
        if cert.verdict == RootVerdict.HAS_NON_REAL_ROOT:
            return Counterexample(f"power-step-{step}", current, image, current_cert, cert)
        if cert.verdict == RootVerdict.DEGENERATE_ZERO_POLY:
            return None
        current, current_cert = image, cert
    return None


def transfer_counterexample(cx: Counterexample, G: GammaSequence, Q_hat: SimpleSet,
                            a: RationalLike, b: RationalLike) -> Counterexample:
    """
    Carry a counterexample for (G, Q) over to Q_hat = affine_transform_basis(Q, c, a, b).

    f(ax + b) is then a counterexample for (G, Q_hat) with image
    Gamma[f](ax + b); both facts are re-certified.
    """
    f_hat = compose_affine(cx.f, a, b)
    image = apply_sequence(G, f_hat, Q_hat)
    if image != compose_affine(cx.image, a, b):
        raise CertificateError(f"Transferred image {image} does not match Gamma[f](ax+b)")
    input_cert = is_real_rooted(f_hat)
    cert = is_real_rooted(image)
    if not input_cert.is_real_rooted or cert.verdict != RootVerdict.HAS_NON_REAL_ROOT:
        raise CertificateError(f"Transferred counterexample {f_hat} failed re-certification")
    return Counterexample(f"{cx.label}@affine", f_hat, image, input_cert, cert)
