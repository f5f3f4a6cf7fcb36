"""
hypersieve - exact-arithmetic toolkit for multiplier sequences over simple sets of polynomials
"""

from .errors import (
    HypersieveError, ValidationError, ParseError, BasisDegreeError, NoUpperBoundFoundError, CertificateError,
    ZeroScaleError, ZeroMultiplierError, ZeroAlphaError, NonpositiveAlphaError, BothZeroError,
    ZeroPolynomialError, BadIntervalError, NotRealRootedError, NotSimpleRealRootedError, NegativeTermsError,
    ZeroLeadingTermsError, ScheduleTooShortError, InvalidSequenceError
)
from .polycore import RationalPoly, ZERO, ONE, add, mul, compose_affine, derivative, gcd, to_rational, format_rational
from .polyparse import parse_poly
from .realroots import (
    RootVerdict, RealRootCertificate, IsolatingInterval, sturm_chain, sign_variations, squarefree_part,
    count_real_roots, is_real_rooted, isolate_real_roots, all_roots_nonpositive
)
from .bases import (
    SimpleSet, standard_basis, generalized_hermite_basis, q1_basis, q2_basis, q3_basis, truncated_sum_basis,
    laguerre_basis, legendre_basis, custom_basis, affine_transform_basis, basis_from_descriptor, parse_basis_spec
)
from .basischange import (
    ExpansionMatrix, expand_in_basis, reconstruct, expansion_matrix, alpha_deformed_basis, alpha_scaled_basis
)
from .mstest import (
    TailKind, Tail, GammaSequence, gamma_at, power_sequence, apply_sequence, binomial_image,
    CheckStatus, CheckResult, PolyaSchurResult, polya_schur_check, turan_check, sign_pattern_check,
    zero_pattern_check, GeometricExtrapolation, geometric_extrapolation, monotone_after_first_check,
    nondecreasing_check, Counterexample, FalsificationReport, structured_candidates, random_candidates, falsify,
    trace_power_witness, transfer_counterexample
)
from .experiments import (
    EnBound, en_max_bound, EnRatioProbe, en_ratio_probe, ConvergenceTrace, deformed_expansion_trace,
    ConvergenceReport, claim_convergence_check, default_grid
)
from .config import OutputFormat, RunConfig
from .regression import FactStatus, FactResult, FACTS, run_facts

__version__ = "0.1.0"
