"""
Change of basis between simple sets

Expansions go through the standard basis: a polynomial's standard
coefficients are peeled from the top degree down by back-substitution, which
only needs each target q_k's leading coefficient to be nonzero.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from .bases import SimpleSet
from .errors import CertificateError, NonpositiveAlphaError, ValidationError, ZeroAlphaError
from .polycore import RationalLike, RationalPoly, format_rational, to_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpansionMatrix:
    """
    Lower-triangular a[k][j] with q_k = sum_{j<=k} a[k][j] b_j

    rows[k] has exactly k + 1 entries; the diagonal a[k][k] is nonzero.
    """
    rows: Tuple[Tuple[Fraction, ...], ...]
    source: Dict[str, Any]
    target: Dict[str, Any]

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    def entry(self, k: int, j: int) -> Fraction:
        if j > k:
            return Fraction(0)
        return self.rows[k][j]

    def row(self, k: int) -> List[Fraction]:
        return list(self.rows[k])

    def compose(self, other: 'ExpansionMatrix') -> 'ExpansionMatrix':
        """(Q -> B) then (B -> C) gives Q -> C"""
        n = min(self.order, other.order)
        rows = []
        for k in range(n + 1):
            rows.append(tuple(
                sum((self.entry(k, j) * other.entry(j, i) for j in range(i, k + 1)), Fraction(0))
                for i in range(k + 1)
            ))
        return ExpansionMatrix(tuple(rows), self.source, other.target)

    def is_identity(self) -> bool:
        return all(v == (1 if j == k else 0) for k, row in enumerate(self.rows) for j, v in enumerate(row))

    def to_json(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "target": self.target,
            "order": self.order,
            "rows": [[format_rational(v) for v in row] for row in self.rows],
        }


def expand_in_basis(f: RationalPoly, Q: SimpleSet) -> List[Fraction]:
    """Coefficients c_0..c_n with f = sum c_k q_k, n = deg f. Empty for the zero polynomial."""
    if f.is_zero:
        return []
    n = f.degree
    coeffs = [Fraction(0)] * (n + 1)
    remainder = f
    for k in range(n, -1, -1):
        c = remainder.coeff(k) / Q.leading(k)
        coeffs[k] = c
        if c:
            remainder = remainder - Q.poly(k) * c
    if not remainder.is_zero:
        raise CertificateError(f"Back-substitution in {Q.name} left remainder {remainder}")
    return coeffs


def reconstruct(coeffs: Sequence[RationalLike], Q: SimpleSet) -> RationalPoly:
    """sum c_k q_k in the standard basis"""
    result = RationalPoly()
    for k, c in enumerate(coeffs):
        c = to_rational(c)
        if c:
            result = result + Q.poly(k) * c
    return result


def expansion_matrix(Q: SimpleSet, B: SimpleSet, n: int) -> ExpansionMatrix:
    """Rows k = 0..n of q_k expanded in B."""
    if n < 0:
        raise ValidationError(f"Expansion order must be nonnegative, got {n}")
    rows = tuple(tuple(expand_in_basis(Q.poly(k), B)) for k in range(n + 1))
    logger.debug(f"expansion_matrix({Q.name} -> {B.name}, n={n}) computed")
    return ExpansionMatrix(rows, Q.descriptor, B.descriptor)


def alpha_deformed_basis(Q: SimpleSet, B: SimpleSet, alpha: RationalLike, n: int) -> SimpleSet:
    """
    Q*_alpha: p_k = sum_j a[k][j] b_j / (a[k][k] alpha^(k-j)), for k <= n

    Each p_k has b_k-coefficient 1 and tends to b_k as alpha grows.
    Raises NonpositiveAlphaError unless alpha > 0.
    """
    alpha = to_rational(alpha)
    if alpha <= 0:
        raise NonpositiveAlphaError(f"alpha_deformed_basis requires alpha > 0, got {alpha}")
    matrix = expansion_matrix(Q, B, n)
    deformed = []
    for k in range(n + 1):
        diag = matrix.entry(k, k)
        p = RationalPoly()
        for j in range(k + 1):
            a = matrix.entry(k, j)
            if a:
                p = p + B.poly(j) * (a / (diag * alpha ** (k - j)))
        deformed.append(p)

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        return deformed[k]

    descriptor = {
        "kind": "alpha_deformed",
        "source": Q.descriptor,
        "target": B.descriptor,
        "alpha": format_rational(alpha),
        "n": n,
    }
    return SimpleSet(f"{Q.name}*_{format_rational(alpha)}", generate, params={"alpha": alpha},
                     descriptor=descriptor, max_degree=n)


def alpha_scaled_basis(Q: SimpleSet, B: SimpleSet, alpha: RationalLike, n: int) -> SimpleSet:
    """
    q^_k = sum_j alpha^j a[k][j] b_j, for k <= n

    If {alpha^k} and {alpha^-k} are both B-multiplier sequences, every
    Q-multiplier sequence is also a multiplier sequence for this basis.
    """
    alpha = to_rational(alpha)
    if alpha == 0:
        raise ZeroAlphaError("alpha_scaled_basis requires alpha != 0")
    matrix = expansion_matrix(Q, B, n)
    scaled = []
    for k in range(n + 1):
        p = RationalPoly()
        for j in range(k + 1):
            a = matrix.entry(k, j)
            if a:
                p = p + B.poly(j) * (alpha ** j * a)
        scaled.append(p)

    def generate(k: int, previous: Sequence[RationalPoly]) -> RationalPoly:
        return scaled[k]

    descriptor = {
        "kind": "alpha_scaled",
        "source": Q.descriptor,
        "target": B.descriptor,
        "alpha": format_rational(alpha),
        "n": n,
    }
    return SimpleSet(f"{Q.name}^_{format_rational(alpha)}", generate, params={"alpha": alpha},
                     descriptor=descriptor, max_degree=n)
