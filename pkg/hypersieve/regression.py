"""
Regression corpus of reproducible multiplier-sequence facts

Each Fact is a small certified computation with a minimum degree budget.
Facts needing more budget than the run allows are reported as
SKIPPED-BUDGET, which still makes the run unsuccessful.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from .bases import (
    affine_transform_basis, generalized_hermite_basis, laguerre_basis, legendre_basis, q1_basis, q2_basis,
    q3_basis, standard_basis
)
from .config import RunConfig
from .errors import HypersieveError, NotSimpleRealRootedError
from .experiments import claim_convergence_check, default_grid, deformed_expansion_trace, en_max_bound
from .mstest import (
    CheckStatus, GammaSequence, apply_sequence, binomial_image, falsify, monotone_after_first_check,
    nondecreasing_check, polya_schur_check, power_sequence, sign_pattern_check, trace_power_witness,
    transfer_counterexample, turan_check, zero_pattern_check
)
from .polycore import RationalPoly
from .realroots import RootVerdict, all_roots_nonpositive, is_real_rooted

logger = logging.getLogger(__name__)

PEAK_SEQUENCE = GammaSequence.finite(["1/8", "1", "2"])
NEGATIVE_ALPHAS = (Fraction(-2), Fraction(-1), Fraction(-1, 2))
POSITIVE_ALPHAS = (Fraction(1, 2), Fraction(1), Fraction(2))


class FactStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED_BUDGET = "SKIPPED-BUDGET"


@dataclass
class Fact:
    name: str
    description: str
    min_budget: int
    check: Callable[[RunConfig], Tuple[bool, str]]


@dataclass
class FactResult:
    name: str
    description: str
    status: FactStatus
    detail: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "description": self.description, "status": self.status.value,
                "detail": self.detail}


def _peak_sequence_is_classical(config: RunConfig) -> Tuple[bool, str]:
    result = polya_schur_check(PEAK_SEQUENCE, 50)
    if not result.passed:
        return False, f"binomial image fails at n={result.fail_at}"
    x = RationalPoly.x()
    for n in range(1, 51):
        expected = RationalPoly.constant(Fraction(1, 8)) + x * n + x * x * (n * (n - 1))
        image = binomial_image(PEAK_SEQUENCE, n)
        if image != expected:
            return False, f"Gamma[(1+x)^{n}] = {image}, expected {expected}"
        if not all_roots_nonpositive(image):
            return False, f"Gamma[(1+x)^{n}] has a positive root"
        if n >= 2 and not n * n - Fraction(n * (n - 1), 2) > 0:
            return False, f"discriminant cross-check fails at n={n}"
    return True, "real-rooted with nonpositive zeros for n = 1..50"


def _peak_sequence_not_hermite_negative(config: RunConfig) -> Tuple[bool, str]:
    g0, g2 = PEAK_SEQUENCE.at(0), PEAK_SEQUENCE.at(2)
    for alpha in NEGATIVE_ALPHAS:
        report = falsify(PEAK_SEQUENCE, generalized_hermite_basis(alpha), 4, 0, config.seed)
        if not report.found:
            return False, f"no counterexample for alpha={alpha}"
        cx = report.counterexample
        expected = RationalPoly((alpha * (g0 - g2), 0, g2))
        if cx.f != RationalPoly.monomial(2) or cx.image != expected:
            return False, f"alpha={alpha}: witness {cx.f} -> {cx.image}, expected x^2 -> {expected}"
    return True, "x^2 falsifies for alpha in {-2, -1, -1/2}"


def _peak_sequence_not_hermite_positive(config: RunConfig) -> Tuple[bool, str]:
    found = []
    for alpha in POSITIVE_ALPHAS:
        report = falsify(PEAK_SEQUENCE, generalized_hermite_basis(alpha), 4, 0, config.seed)
        if not report.found:
            return False, f"no counterexample for alpha={alpha} within budget 4"
        found.append(f"alpha={alpha}: {report.counterexample.label}")
    return True, "; ".join(found)


def _intersection_witnesses(config: RunConfig) -> Tuple[bool, str]:
    q1_image = apply_sequence(GammaSequence.finite([2, 1, 1]), RationalPoly((1, 4, 4)), q1_basis())
    if q1_image != RationalPoly((2, 4, 4)) or is_real_rooted(q1_image).verdict != RootVerdict.HAS_NON_REAL_ROOT:
        return False, f"Q1 witness image {q1_image}"

    report = falsify(GammaSequence.finite([1, 2, 3]), q3_basis(), 2, 0, config.seed)
    if not report.found or report.counterexample.f != RationalPoly.monomial(2) \
            or report.counterexample.image != RationalPoly((2, 0, 3)):
        return False, "Q3 witness x^2 -> 3x^2 + 2 not reproduced"

    q2_image = apply_sequence(GammaSequence.finite([1, -1, 1]), RationalPoly.monomial(2), q2_basis())
    if q2_image != RationalPoly((2, 2, 1)) or is_real_rooted(q2_image).verdict != RootVerdict.HAS_NON_REAL_ROOT:
        return False, f"Q2 witness image {q2_image}"
    return True, "Q1: 4x^2 + 4x + 2, Q3: 3x^2 + 2, Q2: x^2 + 2x + 2"


def _geometric_sequences_classical(config: RunConfig) -> Tuple[bool, str]:
    for a in (Fraction(2), Fraction(3), Fraction(10)):
        for ratio in (a, 1 / a):
            result = polya_schur_check(GammaSequence.geometric(1, ratio), 20)
            if not result.passed:
                return False, f"geometric ratio {ratio} fails at n={result.fail_at}"
    return True, "ratios 2, 3, 10 and reciprocals pass to n = 20"


def _deformed_convergence(config: RunConfig) -> Tuple[bool, str]:
    f = RationalPoly((-1, 0, 1))
    schedule = [Fraction(10), Fraction(100), Fraction(1000)]
    trace = deformed_expansion_trace(f, q2_basis(), standard_basis(), schedule)
    for record in trace.records:
        if record.coeffs[2] != 1 or abs(record.coeffs[1]) != 1 / record.alpha:
            return False, f"alpha={record.alpha}: coefficients {record.coeffs}"
    report = claim_convergence_check(trace, default_grid(), PEAK_SEQUENCE)
    if not report.passed:
        return False, f"{len(report.failures())} gap comparisons failed"
    return True, f"{len(report.checks)} gap comparisons decay"


def _en_bounds(config: RunConfig) -> Tuple[bool, str]:
    h1 = generalized_hermite_basis(1)
    bound = en_max_bound(h1, 2, tol=Fraction(1, 256))
    if not (bound.lo <= 1 <= bound.hi and bound.width <= Fraction(1, 256)):
        return False, f"E_2 bracket [{bound.lo}, {bound.hi}]"
    bound4 = en_max_bound(h1, 4, tol=Fraction(1, 256))
    if bound4.lo != 3:
        return False, f"E_4 lower bracket {bound4.lo}, expected 3"
    try:
        en_max_bound(standard_basis(), 2)
    except NotSimpleRealRootedError:
        return True, f"E_2 in [{bound.lo}, {bound.hi}], E_4 in [{bound4.lo}, {bound4.hi}], x^2 rejected"
    return False, "standard basis q_2 = x^2 was not rejected"


def _hermite_geometric_threshold(config: RunConfig) -> Tuple[bool, str]:
    h1 = generalized_hermite_basis(1)
    shrinking = falsify(GammaSequence.geometric(1, Fraction(1, 2)), h1, 8, config.trials, config.seed, jobs=config.jobs)
    if not shrinking.found:
        return False, "{(1/2)^k} survived budget 8"
    growing = falsify(GammaSequence.geometric(1, 2), h1, 8, config.trials, config.seed, jobs=config.jobs)
    if growing.found:
        return False, f"{{2^k}} falsified by {growing.counterexample.f}"
    return True, (f"(1/2)^k falsified by {shrinking.counterexample.f}; "
                  f"2^k survives {growing.candidates_checked} candidates")


def _peak_sequence_laws(config: RunConfig) -> Tuple[bool, str]:
    checks = [
        (turan_check(PEAK_SEQUENCE, 10), CheckStatus.PASS, None),
        (zero_pattern_check(PEAK_SEQUENCE, 10), CheckStatus.PASS, None),
        (sign_pattern_check(PEAK_SEQUENCE, 10), CheckStatus.ALL_SAME_SIGN, None),
        (monotone_after_first_check(PEAK_SEQUENCE, 10), CheckStatus.FAIL_AT, 2),
        (nondecreasing_check(PEAK_SEQUENCE, 10), CheckStatus.FAIL_AT, 3),
    ]
    for result, status, index in checks:
        if result.status != status or result.index != index:
            return False, f"{result.name}: {result.status.value} at {result.index}"
    return True, "Turan, zero and sign patterns hold; both monotonicity laws fail"


def _scalar_closure(config: RunConfig) -> Tuple[bool, str]:
    f = RationalPoly.from_roots([-1, Fraction(1, 2), 2])
    for basis in (standard_basis(), q2_basis(), generalized_hermite_basis(-1)):
        base = apply_sequence(PEAK_SEQUENCE, f, basis)
        for r in (Fraction(3), Fraction(-1, 5)):
            if apply_sequence(PEAK_SEQUENCE.scaled(r), f, basis) != base * r:
                return False, f"scaling by {r} not linear over {basis.name}"
    return True, "Gamma_{r gamma} = r Gamma_gamma"


def _power_closure(config: RunConfig) -> Tuple[bool, str]:
    corpus = [
        (GammaSequence.finite([1, 2, 3]), q3_basis()),
        (GammaSequence.finite([2, 1, 1]), q1_basis()),
        (PEAK_SEQUENCE, generalized_hermite_basis(-1)),
        (GammaSequence.geometric(1, Fraction(1, 2)), generalized_hermite_basis(1)),
    ]
    for G, basis in corpus:
        report = falsify(power_sequence(G, 2), basis, 2, 0, config.seed)
        if not report.found:
            return False, f"squared {G} not falsified over {basis.name}"
        witness = trace_power_witness(G, basis, report.counterexample.f, 2)
        if witness is None:
            return False, f"no step of Gamma^2 on {report.counterexample.f} exposes {G} over {basis.name}"
    return True, f"{len(corpus)} squared sequences traced back to a counterexample"


def _affine_transfer(config: RunConfig) -> Tuple[bool, str]:
    G = GammaSequence.finite([1, 2, 3])
    report = falsify(G, q3_basis(), 2, 0, config.seed)
    if not report.found:
        return False, "no Q3 counterexample to transfer"
    q_hat = affine_transform_basis(q3_basis(), [2, -1, 3], 2, 1)
    moved = transfer_counterexample(report.counterexample, G, q_hat, 2, 1)
    return True, f"{report.counterexample.f} -> {moved.f} with image {moved.image}"


def _orthogonal_samples(config: RunConfig) -> Tuple[bool, str]:
    brackets = []
    for basis in (laguerre_basis(), legendre_basis()):
        report = falsify(GammaSequence.constant(3), basis, 4, min(config.trials, 50), config.seed)
        if report.found:
            return False, f"constant sequence falsified over {basis.name}"
        for n in range(2, 5):
            bound = en_max_bound(basis, n, tol=config.tol).verify()
            brackets.append(f"{basis.name} E_{n} >= {bound.lo}")
    return True, "constant sequences survive Laguerre and Legendre; " + ", ".join(brackets)


FACTS: List[Fact] = [
    Fact("peak_sequence_classical",
         "{1/8, 1, 2, 0, ...} is a classical multiplier sequence (binomial images to n = 50)", 1,
         _peak_sequence_is_classical),
    Fact("peak_sequence_not_hermite_negative_alpha",
         "{1/8, 1, 2, 0, ...} is falsified over H^(alpha), alpha < 0, by x^2", 2,
         _peak_sequence_not_hermite_negative),
    Fact("peak_sequence_not_hermite_positive_alpha",
         "{1/8, 1, 2, 0, ...} is falsified over H^(alpha), alpha > 0, within degree 4", 4,
         _peak_sequence_not_hermite_positive),
    Fact("intersection_witnesses", "Q1, Q2 and Q3 witnesses of the intersection argument", 2,
         _intersection_witnesses),
    Fact("geometric_sequences_classical", "{a^k} and {a^-k} pass the binomial test", 1,
         _geometric_sequences_classical),
    Fact("deformed_basis_convergence", "x^2 - 1 over the deformed Q2 basis converges at rate 1/alpha", 1,
         _deformed_convergence),
    Fact("en_bounds", "E_n brackets for H^(1) and the simplicity hypothesis", 1, _en_bounds),
    Fact("hermite_geometric_threshold", "{r^k} over H^(1): falsified for r = 1/2, survives for r = 2", 8,
         _hermite_geometric_threshold),
    Fact("peak_sequence_laws", "sequence laws on {1/8, 1, 2, 0, ...}", 1, _peak_sequence_laws),
    Fact("scalar_closure", "Gamma is linear in the sequence", 1, _scalar_closure),
    Fact("power_closure", "counterexamples for {gamma_k^2} trace back to {gamma_k}", 2, _power_closure),
    Fact("affine_transfer", "counterexamples carry over to affinely transformed bases", 2, _affine_transfer),
    Fact("orthogonal_samples", "constant sequences survive Laguerre and Legendre bases; E_2..E_4 brackets verify", 4,
         _orthogonal_samples),
]


def run_facts(config: RunConfig) -> List[FactResult]:
    results = []
    for fact in FACTS:
        if fact.min_budget > config.degree_budget:
            logger.warning(f"Skipping {fact.name}: needs degree budget {fact.min_budget}, have {config.degree_budget}")
            results.append(FactResult(fact.name, fact.description, FactStatus.SKIPPED_BUDGET,
                                      f"needs degree budget >= {fact.min_budget}"))
            continue
        started = time.time()
        try:
            ok, detail = fact.check(config)
        except HypersieveError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        logger.info(f"{fact.name}: {'PASS' if ok else 'FAIL'} in {time.time() - started:.2f}s")
        results.append(FactResult(fact.name, fact.description, FactStatus.PASS if ok else FactStatus.FAIL, detail))
    return results
