"""
Arithmetic services on the field tower: the four field operations with
uniform error handling, embed/project between Q(rho) and Q(w7), traces and
norms, valuations at the designated primes of Z[rho], the square-root test
in Q(rho) and numeric embeddings.
"""

from __future__ import annotations

import itertools
import logging
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import numpy as np
from sympy import isprime

from .errors import FieldArithmeticError, UndecidedError
from .fields import K_CLASSES, ORDER, CycAut, CycNum, RhoNum, rho_k
from .quadratic import ALL_TAGS, DiscTag, QuadNum, disc_polynomial, discriminant
from .settings import get_settings

logger = logging.getLogger(__name__)

FieldElement = Union[int, Fraction, RhoNum, CycNum, QuadNum]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


# ============================================================================
# FIELD OPERATIONS
# ============================================================================

def field_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    """
    Apply one of add, sub, mul, div to two field elements.

    Args:
        x: Left operand
        y: Right operand
        op: Operation name

    Returns:
        The exact canonical result

    Raises:
        ValueError: Unknown operation
        FieldArithmeticError: Division by zero
        TagMismatchError: Quadratic elements with different roots
    """
    if op not in _OPS:
        raise ValueError(f"Unknown field operation {op!r}; expected one of {sorted(_OPS)}")
    if op == "div" and y == 0:
        raise FieldArithmeticError(f"division of {x} by zero")
    if isinstance(x, int) and isinstance(y, int) and op == "div":
        return Fraction(x, y)
    return _OPS[op](x, y)


def embed(x: RhoNum) -> CycNum:
    return x.embed()


def project(x: CycNum) -> RhoNum:
    """Raises NotRealError when x is not fixed by complex conjugation."""
    return x.project()


def apply_aut(aut: Union[CycAut, int], x: FieldElement) -> FieldElement:
    if isinstance(aut, int):
        aut = CycAut(aut)
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, QuadNum):
        return x.apply(aut)
    return x.apply_aut(aut)


def trace_norm(x: RhoNum) -> Tuple[Fraction, Fraction]:
    """
    Trace and norm from Q(rho) down to Q.

    Example:
        trace_norm(rho) -> (-1, 1)
        trace_norm(5 + rho) -> (14, 91)
    """
    return x.trace(), x.norm()


def norm_closed_form(x: Union[int, Fraction], y: Union[int, Fraction]) -> Fraction:
    """N(x + y*rho) = x^3 - x^2*y - 2*x*y^2 + y^3."""
    x, y = Fraction(x), Fraction(y)
    return x ** 3 - x ** 2 * y - 2 * x * y ** 2 + y ** 3


def char_poly_of_multiplication(x: RhoNum) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Coefficients (c2, c1, c0) of det(t*I - M_x) = t^3 + c2*t^2 + c1*t + c0,
    where M_x is multiplication by x on the basis {1, rho, rho^2}.
    """
    m = x.multiplication_matrix()
    trace = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return -trace, minors, -det


# ============================================================================
# DESIGNATED PRIMES AND VALUATIONS
# ============================================================================

_THREE_PLUS_RHO = RhoNum.from_linear(3, 1)
# automorphism carrying 3 + rho onto the divisor of Delta_3^k
_PI3_SHIFT = {1: 2, 2: 4, 4: 1}


def designated_prime(tag: DiscTag) -> RhoNum:
    """
    Prime element of Z[rho] attached to a discriminant: Delta_2^k itself
    (norm 1289) for r' = 2, the conjugate of 3 + rho dividing Delta_3^k
    (norm 13) for r' = 3.
    """
    if tag.r_prime == 2:
        return discriminant(2, tag.k_class)
    return _THREE_PLUS_RHO.apply_aut(CycAut(_PI3_SHIFT[tag.k_class]))


def designated_primes() -> Dict[DiscTag, RhoNum]:
    return {tag: designated_prime(tag) for tag in ALL_TAGS}


def valuation(x: RhoNum, pi: RhoNum) -> int:
    """
    Largest v with x / pi^v in Z[rho].

    Args:
        x: Nonzero element of Z[rho]
        pi: Prime element whose norm is a rational prime

    Raises:
        FieldArithmeticError: Zero or non-integral x
        ValueError: pi does not have prime norm
    """
    if x.is_zero():
        raise FieldArithmeticError("valuation of zero is undefined")
    if not x.is_integral():
        raise FieldArithmeticError(f"{x} is not in Z[rho]")
    p = abs(pi.norm())
    if p.denominator != 1 or not isprime(p.numerator):
        raise ValueError(f"{pi} has norm {pi.norm()}, not a rational prime")
    inv = pi.inverse()
    v = 0
    current = x
    while True:
        quotient = current * inv
        if not quotient.is_integral():
            return v
        current = quotient
        v += 1


# ============================================================================
# SQUARE ROOTS IN Q(rho)
# ============================================================================

@dataclass(frozen=True)
class NonSquareCertificate:
    """
    Proof that an element of Q(rho) is not a square.

    Attributes:
        kind: "sign" (negative in some real embedding), "norm" (rational
            norm is not a square) or "valuation"
        norm: Rational norm of the element tested
        prime_tag: Discriminant label of the witnessing prime (valuation kind)
        valuation: Odd valuation at that prime (valuation kind)
        embedding: k-class of the negative real embedding (sign kind)
    """

    kind: str
    norm: Fraction
    prime_tag: Optional[DiscTag] = None
    valuation: Optional[int] = None
    embedding: Optional[int] = None

    def describe(self) -> str:
        if self.kind == "sign":
            return f"negative under the real embedding rho -> rho_{self.embedding}"
        if self.kind == "norm":
            return f"norm {self.norm} is not a rational square"
        return f"valuation {self.valuation} (odd) at prime pi[{self.prime_tag}]"


@dataclass(frozen=True)
class SquareRootResult:
    root: Optional[RhoNum] = None
    certificate: Optional[NonSquareCertificate] = None

    @property
    def is_square(self) -> bool:
        return self.root is not None


def is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den


def _real_embeddings() -> np.ndarray:
    return np.array([2.0 * np.cos(2.0 * np.pi * l / 7) for l in K_CLASSES])


def _negative_embedding(x: RhoNum) -> Optional[int]:
    for l in K_CLASSES:
        if x.numeric(l) < 0:
            return l
    return None


def _numeric_root_candidates(x: RhoNum, max_denominator: int):
    values = np.array([x.numeric(l) for l in K_CLASSES])
    roots = np.sqrt(values)
    nodes = _real_embeddings()
    vandermonde = np.vander(nodes, 3, increasing=True)
    for signs in itertools.product((1, -1), repeat=3):
        coeffs = np.linalg.solve(vandermonde, roots * np.array(signs))
        yield RhoNum(tuple(
            Fraction(float(c)).limit_denominator(max_denominator) for c in coeffs
        ))


def sqrt_in_rho(x: RhoNum, max_denominator: Optional[int] = None) -> SquareRootResult:
    """
    Decide whether x is a square in Q(rho).

    The numeric path rationalizes square roots taken in the three real
    embeddings and keeps a candidate only if it squares to x exactly. The
    disproof path checks the signs of the real embeddings, then the rational
    norm, then the valuations at the designated primes after clearing
    denominators.

    Returns:
        SquareRootResult with either ``root`` or ``certificate`` set

    Raises:
        FieldArithmeticError: x is zero
        UndecidedError: neither path concluded
    """
    if x.is_zero():
        raise FieldArithmeticError("square root test needs a nonzero element")
    bound = max_denominator or get_settings().reconstruct_denominator

    n = x.norm()
    negative = _negative_embedding(x)
    if negative is not None:
        return SquareRootResult(
            certificate=NonSquareCertificate("sign", n, embedding=negative)
        )

    for candidate in _numeric_root_candidates(x, bound):
        if candidate * candidate == x:
            logger.debug("sqrt_in_rho: %s = (%s)^2", x, candidate)
            return SquareRootResult(root=candidate)

    if not is_rational_square(n):
        return SquareRootResult(certificate=NonSquareCertificate("norm", n))

    d = x.denominator()
    integral = x * (d * d)
    for tag, pi in designated_primes().items():
        v = valuation(integral, pi)
        if v % 2 == 1:
            return SquareRootResult(
                certificate=NonSquareCertificate("valuation", n, tag, v)
            )
    raise UndecidedError(f"could not decide whether {x} is a square in Q(rho)")


# ============================================================================
# NUMERIC EMBEDDINGS
# ============================================================================

def numeric_embed(x: FieldElement, embedding: Union[CycAut, int] = 1) -> complex:
    """
    Value of x under w -> exp(2*pi*i*l/7); quadratic elements use the
    positive root of the embedded discriminant.

    Raises:
        EmbeddingError: The embedded discriminant is not positive.
    """
    l = embedding.l if isinstance(embedding, CycAut) else embedding
    if isinstance(x, (int, Fraction)):
        return complex(float(x))
    return complex(x.numeric(l))


def embedded_identity_deviation() -> float:
    """
    Largest gap between the embedded exact values of rho_k, Delta_2^k and
    Delta_3^k and the same quantities evaluated directly in doubles with
    mu = 2cos(2*pi*k/7), over k = 1..6.
    """
    gaps = []
    for k in range(1, ORDER):
        mu = 2.0 * math.cos(2.0 * math.pi * k / ORDER)
        gaps.append(abs(numeric_embed(rho_k(k)) - mu))
        for r_prime in (2, 3):
            c0, c1, c2 = (float(c) for c in disc_polynomial(r_prime))
            direct = c0 + c1 * mu + c2 * mu * mu
            gaps.append(abs(numeric_embed(discriminant(r_prime, k)) - direct))
    return max(gaps)
