"""
Simple sets of polynomials

A SimpleSet lazily generates q_0, q_1, ... with deg q_k = k, checking the
degree of every generated polynomial. Generated polynomials are memoized;
the memo only ever grows and is guarded by a lock, so one SimpleSet can be
shared by falsifier worker threads.
"""

import json
import logging
import threading
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from .errors import BasisDegreeError, ParseError, ValidationError, ZeroAlphaError, ZeroMultiplierError, ZeroScaleError
from .polycore import RationalLike, RationalPoly, compose_affine, format_rational, to_rational
from .polyparse import parse_poly

logger = logging.getLogger(__name__)

# generator(k, previous) -> q_k, where previous[i] == q_i for i < k
Generator = Callable[[int, Sequence[RationalPoly]], RationalPoly]


class SimpleSet:
    """
    A named simple set {q_k} of polynomials

    Args:
        name: Human-readable name, e.g. "H^(1)" or "Q2"
        generator: Deterministic map (k, q_0..q_{k-1}) -> q_k in the standard basis
        params: Rational parameters of the family (alpha, j, ...)
        descriptor: JSON-ready descriptor that rebuilds this basis
        max_degree: Highest degree the set can produce (None for unbounded)
    """

    def __init__(self, name: str, generator: Generator, params: Optional[Dict[str, Any]] = None,
                 descriptor: Optional[Dict[str, Any]] = None, max_degree: Optional[int] = None):
        self.name = name
        self.params = dict(params or {})
        self.descriptor = descriptor or {"kind": name}
        self.max_degree = max_degree
        self._generator = generator
        self._polys: List[RationalPoly] = []
        self._leading: List[Fraction] = []
        self._lock = threading.Lock()

    def poly(self, k: int) -> RationalPoly:
        """q_k in the standard basis"""
        if k < 0:
            raise ValidationError(f"Basis index must be nonnegative, got {k}")
        if self.max_degree is not None and k > self.max_degree:
            raise ValidationError(f"{self.name} is only materialized up to degree {self.max_degree}, asked for {k}")
        if k < len(self._polys):
            return self._polys[k]
        with self._lock:
            if len(self._polys) <= k:
                logger.debug(f"Extending {self.name} from degree {len(self._polys) - 1} to {k}")
            while len(self._polys) <= k:
                n = len(self._polys)
                q = self._generator(n, self._polys)
                if q.degree != n:
                    raise BasisDegreeError(f"{self.name}: generated q_{n} = {q} has degree {q.degree}, expected {n}")
                # leading first: lock-free readers only trust indices below len(_polys)
                self._leading.append(q.leading)
                self._polys.append(q)
        return self._polys[k]

    def leading(self, k: int) -> Fraction:
        self.poly(k)
        return self._leading[k]

    def polys(self, n: int) -> List[RationalPoly]:
        """q_0 .. q_n"""
        return [self.poly(k) for k in range(n + 1)]

    def same_as(self, other: 'SimpleSet') -> bool:
        return self.descriptor == other.descriptor

    def __repr__(self) -> str:
        return f"SimpleSet({self.name})"


def _prefix_basis(name: str, prefix: List[RationalPoly], descriptor: Dict[str, Any],
                  params: Optional[Dict[str, Any]] = None) -> SimpleSet:
    """Explicit q_0..q_m, then x^k"""
    frozen = list(prefix)

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        return frozen[k] if k < len(frozen) else RationalPoly.monomial(k)

    return SimpleSet(name, generate, params=params, descriptor=descriptor)


def standard_basis() -> SimpleSet:
    return SimpleSet("standard", lambda k, previous: RationalPoly.monomial(k), descriptor={"kind": "standard"})


def generalized_hermite_basis(alpha: RationalLike) -> SimpleSet:
    """H_0 = 1, H_1 = x, H_{k+1} = x H_k - alpha k H_{k-1}; used for both signs of alpha."""
    alpha = to_rational(alpha)
    if alpha == 0:
        raise ZeroAlphaError("Generalized Hermite basis needs alpha != 0")
    x = RationalPoly.x()

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        if k == 0:
            return RationalPoly.constant(1)
        if k == 1:
            return x
        return x * previous[k - 1] - previous[k - 2] * (alpha * (k - 1))

    return SimpleSet(
        f"H^({format_rational(alpha)})", generate, params={"alpha": alpha},
        descriptor={"kind": "generalized_hermite", "alpha": format_rational(alpha)},
    )


def q1_basis() -> SimpleSet:
    """{1, x, x + x^2, x^3, x^4, ...}"""
    return _prefix_basis("Q1", [RationalPoly((1,)), RationalPoly((0, 1)), RationalPoly((0, 1, 1))], {"kind": "q1"})


def q2_basis() -> SimpleSet:
    """{1, x + 1, x^2 + x + 1, x^3, ...}"""
    return _prefix_basis("Q2", [RationalPoly((1,)), RationalPoly((1, 1)), RationalPoly((1, 1, 1))], {"kind": "q2"})


def q3_basis() -> SimpleSet:
    """{1, x, 1 + x^2, x^3, ...}"""
    return _prefix_basis("Q3", [RationalPoly((1,)), RationalPoly((0, 1)), RationalPoly((1, 0, 1))], {"kind": "q3"})


def truncated_sum_basis(j: int) -> SimpleSet:
    """Q_j: q_k = 1 + x + ... + x^k for k <= j, then x^k."""
    if not isinstance(j, int) or isinstance(j, bool) or j < 0:
        raise ValidationError(f"truncated_sum_basis needs a nonnegative integer j, got {j!r}")

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        if k <= j:
            return RationalPoly((1,) * (k + 1))
        return RationalPoly.monomial(k)

    return SimpleSet(f"Q_{j}", generate, params={"j": j}, descriptor={"kind": "truncated_sum", "j": j})


def laguerre_basis() -> SimpleSet:
    """L_0 = 1, L_1 = 1 - x, (k+1) L_{k+1} = (2k + 1 - x) L_k - k L_{k-1}"""

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        if k == 0:
            return RationalPoly.constant(1)
        if k == 1:
            return RationalPoly((1, -1))
        n = k - 1
        step = RationalPoly((2 * n + 1, -1)) * previous[n] - previous[n - 1] * n
        return step * Fraction(1, k)

    return SimpleSet("Laguerre", generate, descriptor={"kind": "laguerre"})


def legendre_basis() -> SimpleSet:
    """P_0 = 1, P_1 = x, (k+1) P_{k+1} = (2k + 1) x P_k - k P_{k-1}"""

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        if k == 0:
            return RationalPoly.constant(1)
        if k == 1:
            return RationalPoly.x()
        n = k - 1
        step = RationalPoly((0, 2 * n + 1)) * previous[n] - previous[n - 1] * n
        return step * Fraction(1, k)

    return SimpleSet("Legendre", generate, descriptor={"kind": "legendre"})


def custom_basis(polys: List[RationalPoly]) -> SimpleSet:
    """Explicit finite list q_0..q_m (validated deg q_k = k), continued by x^k"""
    if not polys:
        raise ValidationError("Custom basis needs at least one polynomial")
    for k, q in enumerate(polys):
        if q.degree != k:
            raise BasisDegreeError(f"Custom basis entry {k} = {q} has degree {q.degree}, expected {k}")
    return _prefix_basis("custom", polys, {"kind": "custom", "polys": [q.to_json() for q in polys]})


def affine_transform_basis(Q: SimpleSet, c: Union[RationalLike, Sequence[RationalLike]],
                           a: RationalLike, b: RationalLike) -> SimpleSet:
    """
    q^_k = c_k * q_k(a x + b)

    c may be a single scalar or a list; a list's last entry repeats for
    higher k. Every c_k and a must be nonzero.
    """
    a, b = to_rational(a), to_rational(b)
    if a == 0:
        raise ZeroScaleError("affine_transform_basis requires a != 0")
    scales = [to_rational(v) for v in c] if isinstance(c, (list, tuple)) else [to_rational(c)]
    if not scales:
        raise ZeroMultiplierError("affine_transform_basis needs at least one multiplier")
    if any(v == 0 for v in scales):
        raise ZeroMultiplierError("affine_transform_basis multipliers c_k must be nonzero")

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        ck = scales[k] if k < len(scales) else scales[-1]
        return compose_affine(Q.poly(k), a, b) * ck

    descriptor = {
        "kind": "affine",
        "base": Q.descriptor,
        "c": [format_rational(v) for v in scales],
        "a": format_rational(a),
        "b": format_rational(b),
    }
    return SimpleSet(f"affine({Q.name})", generate, params={"a": a, "b": b, "c": scales},
                     descriptor=descriptor, max_degree=Q.max_degree)


def basis_from_descriptor(data: Dict[str, Any]) -> SimpleSet:
    """Rebuild a SimpleSet from its JSON descriptor."""
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("Basis descriptor must be an object with a 'kind' field")
    kind = data["kind"]
    try:
        if kind == "standard":
            return standard_basis()
        if kind == "generalized_hermite":
            return generalized_hermite_basis(data["alpha"])
        if kind == "q1":
            return q1_basis()
        if kind == "q2":
            return q2_basis()
        if kind == "q3":
            return q3_basis()
        if kind == "truncated_sum":
            return truncated_sum_basis(int(data["j"]))
        if kind == "laguerre":
            return laguerre_basis()
        if kind == "legendre":
            return legendre_basis()
        if kind == "custom":
            polys = [parse_poly(p) if isinstance(p, str) else RationalPoly.from_json(p) for p in data["polys"]]
            return custom_basis(polys)
        if kind == "affine":
            return affine_transform_basis(basis_from_descriptor(data["base"]), data.get("c", 1),
                                          data.get("a", 1), data.get("b", 0))
        if kind in ("alpha_deformed", "alpha_scaled"):
            from .basischange import alpha_deformed_basis, alpha_scaled_basis

            build = alpha_deformed_basis if kind == "alpha_deformed" else alpha_scaled_basis
            return build(basis_from_descriptor(data["source"]), basis_from_descriptor(data["target"]),
                         data["alpha"], int(data["n"]))
    except KeyError as e:
        raise ParseError(f"Basis descriptor of kind {kind!r} is missing field {e}")
    raise ParseError(f"Unknown basis kind {kind!r}")


_SHORTHAND_ALIASES = {
    "std": "standard",
    "standard": "standard",
    "q1": "q1",
    "q2": "q2",
    "q3": "q3",
    "laguerre": "laguerre",
    "legendre": "legendre",
}


def parse_basis_spec(text: str) -> SimpleSet:
    """
    Parse a basis from the command line.

    Accepts inline JSON descriptors or kind[:param] shorthand:
    std, q1, q2, q3, laguerre, legendre, hermite:<alpha>, qj:<j>
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            return basis_from_descriptor(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid basis JSON: {e}")

    kind, _, param = text.partition(":")
    kind = kind.strip().lower()
    param = param.strip()
    if kind in _SHORTHAND_ALIASES and not param:
        return basis_from_descriptor({"kind": _SHORTHAND_ALIASES[kind]})
    if kind in ("hermite", "generalized_hermite") and param:
        return generalized_hermite_basis(param)
    if kind in ("qj", "truncated_sum") and param:
        if not param.isdigit():
            raise ParseError(f"qj needs a nonnegative integer parameter, got {param!r}")
        return truncated_sum_basis(int(param))
    raise ParseError(f"Unknown basis shorthand {text!r}")
