"""
Square classes of the discriminants in Q(rho).

Every nonempty product of the six discriminants is shown to be a nonsquare
by an odd valuation at one of the designated primes, so the six square roots
generate an extension of degree 64 over Q(rho). The arithmetic identities
behind the designated primes are checked by ``verify_lemmas``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import factorint, isprime

from . import reference as ref
from .arithmetic import (
    char_poly_of_multiplication,
    designated_prime,
    norm_closed_form,
    sqrt_in_rho,
    valuation,
)
from .errors import UndecidedError
from .fields import K_CLASSES, CycAut, CycNum, RhoNum, rho_k
from .quadratic import ALL_TAGS, DiscTag, discriminant
from .schemas import CheckResult
from .settings import get_settings

logger = logging.getLogger(__name__)


# ============================================================================
# CERTIFICATES
# ============================================================================

@dataclass(frozen=True)
class KummerCertificate:
    """
    Odd valuation of a product of discriminants at a designated prime.

    Attributes:
        subset: Discriminants in the product, in ``ALL_TAGS`` order
        witness: Tag whose designated prime gives the odd valuation
        prime: That prime element of Z[rho]
        valuation: Exponent of the prime in the product
    """

    subset: Tuple[DiscTag, ...]
    witness: DiscTag
    prime: RhoNum
    valuation: int

    @property
    def parity(self) -> int:
        return self.valuation % 2

    def describe(self) -> str:
        names = "*".join(str(t) for t in self.subset)
        return f"{names}: v_pi[{self.witness}] = {self.valuation}"


def subset_product(subset: Iterable[DiscTag]) -> RhoNum:
    product = RhoNum.one()
    for tag in subset:
        product = product * tag.value()
    return product


def subsets(tags: Sequence[DiscTag] = ALL_TAGS) -> List[Tuple[DiscTag, ...]]:
    """Nonempty subsets ordered by bitmask over ``tags``."""
    out = []
    for mask in range(1, 2 ** len(tags)):
        out.append(tuple(t for i, t in enumerate(tags) if mask >> i & 1))
    return out


def certify(subset: Sequence[DiscTag]) -> KummerCertificate:
    """
    Certificate for one subset, trying members in ``ALL_TAGS`` order.

    Raises:
        UndecidedError: No member gives an odd valuation
    """
    product = subset_product(subset)
    for tag in sorted(subset):
        pi = designated_prime(tag)
        v = valuation(product, pi)
        if v % 2:
            return KummerCertificate(tuple(subset), tag, pi, v)
    raise UndecidedError(f"no odd valuation for {'*'.join(map(str, subset))}")


def kummer_independence() -> List[KummerCertificate]:
    """The 63 certificates, one per nonempty subset of the discriminants."""
    certificates = [certify(s) for s in subsets()]
    logger.info("certified %d nonsquare discriminant products", len(certificates))
    return certificates


def valuation_matrix() -> Dict[Tuple[DiscTag, DiscTag], int]:
    """v_{pi[j]}(Delta_i) for all pairs of tags."""
    return {
        (i, j): valuation(i.value(), designated_prime(j))
        for i in ALL_TAGS
        for j in ALL_TAGS
    }


def square_class_rank(tags: Sequence[DiscTag]) -> int:
    """
    F2-rank of the valuation parity vectors of ``tags`` at the designated
    primes, a lower bound for the rank of their square classes.
    """
    rows = []
    for t in tags:
        bits = 0
        for j, p in enumerate(ALL_TAGS):
            if valuation(t.value(), designated_prime(p)) % 2:
                bits |= 1 << j
        rows.append(bits)
    rank = 0
    for bit in range(len(ALL_TAGS)):
        pivot = next((r for r in rows if r >> bit & 1), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if r >> bit & 1 else r for r in rows]
        rank += 1
    return rank


def extension_degree(tags: Sequence[DiscTag] = ALL_TAGS) -> int:
    """[Q(rho, sqrt(Delta) for Delta in tags) : Q(rho)]."""
    return 2 ** square_class_rank(tags)


# ============================================================================
# ARITHMETIC IDENTITIES
# ============================================================================

def _check(name: str, passed: bool, expected, actual, anchor: str,
           section: int = 5, flagged: bool = False) -> CheckResult:
    return CheckResult.record(name, passed, expected, actual, anchor, section, flagged)


def _trace_formula_norm(x: Fraction, a: RhoNum) -> Fraction:
    """N(x + a) = x^3 + tr(a) x^2 + ((tr a)^2 - tr(a^2))/2 x + N(a)."""
    ta, ta2 = a.trace(), (a * a).trace()
    return x ** 3 + ta * x ** 2 + (ta * ta - ta2) / 2 * x + a.norm()


def verify_lemmas() -> List[CheckResult]:
    """Norms, factorizations and congruences behind the designated primes."""
    checks: List[CheckResult] = []
    add = checks.append

    for k in K_CLASSES:
        n = discriminant(2, k).norm()
        add(_check(f"norm_D2_{k}", n == ref.NORM_D2, ref.NORM_D2, n, "two-magnon norm"))
    add(_check("1289_prime", isprime(ref.NORM_D2), True, isprime(ref.NORM_D2), "two-magnon norm"))

    for k in K_CLASSES:
        n = discriminant(3, k).norm()
        add(_check(f"norm_D3_{k}", n == ref.NORM_D3, ref.NORM_D3, n, "three-magnon norm"))
    factors = factorint(ref.NORM_D3)
    add(_check("7553_factors", factors == ref.NORM_D3_FACTORS, ref.NORM_D3_FACTORS, factors,
               "three-magnon norm"))

    for k in K_CLASSES:
        a, b, c = ref.three_magnon_factors(k)
        product = a * b * c
        label = f"D3^{k}" if k != 4 else f"D3^4 (printed {ref.M33_PRINTED_LABEL})"
        add(_check(f"factor_D3_{k}", product == discriminant(3, k), discriminant(3, k), product,
                   f"prime decomposition of {label}", flagged=k == 4))

    lhs = ref.FIVE_PLUS_RHO.apply_aut(ref.TAU2)
    rhs = ref.THREE_PLUS_RHO * ref.TWO_MINUS_RHO
    add(_check("tau2_5_plus_rho", lhs == rhs, rhs, lhs, "tau^2(5+rho) = (3+rho)(2-rho)"))
    d31 = ref.FIVE_MINUS_3RHO * ref.FIVE_PLUS_RHO
    add(_check("D3_1_two_factors", d31 == discriminant(3, 1), discriminant(3, 1), d31,
               "Delta_3^1 = (5-3rho)(5+rho)"))

    elements = {
        "5-3rho": ref.FIVE_MINUS_3RHO,
        "5+rho": ref.FIVE_PLUS_RHO,
        "3+rho": ref.THREE_PLUS_RHO,
        "2-rho": ref.TWO_MINUS_RHO,
    }
    for name, x in elements.items():
        n = x.norm()
        add(_check(f"norm_{name}", n == ref.FACTOR_NORMS[name], ref.FACTOR_NORMS[name], n,
                   "factor norms"))
    add(_check("91_factors", factorint(91) == {7: 1, 13: 1}, {7: 1, 13: 1}, factorint(91),
               "N(5+rho) = 7*13"))
    for p in (13, 83):
        add(_check(f"{p}_prime", isprime(p), True, isprime(p), "factor norms"))

    a = ref.LEMMA_A
    add(_check("lemma_a", a == (RhoNum.rho() - 1) ** 2, "(rho-1)^2", a, "Delta_2^4 = 8 + a"))
    add(_check("D2_4_is_8_plus_a", discriminant(2, 4) == 8 + a, discriminant(2, 4), 8 + a,
               "Delta_2^4 = 8 + a"))
    add(_check("trace_a", a.trace() == ref.LEMMA_A_TRACE, ref.LEMMA_A_TRACE, a.trace(),
               "trace of a"))
    add(_check("a_squared", a * a == ref.LEMMA_A_SQUARED, ref.LEMMA_A_SQUARED, a * a,
               "a^2 = 13 rho_2 - 13 rho + 22"))
    add(_check("trace_a_squared", (a * a).trace() == ref.LEMMA_A_SQUARED_TRACE,
               ref.LEMMA_A_SQUARED_TRACE, (a * a).trace(), "trace of a^2"))
    via_traces = _trace_formula_norm(Fraction(8), a)
    add(_check("norm_from_traces", via_traces == ref.NORM_D2, ref.NORM_D2, via_traces,
               "norm of x + a from traces"))

    n21 = discriminant(2, 1).norm()
    add(_check("norm_D2_mod_7", n21 % 7 == 1, 1, n21 % 7, "norm congruence"))
    for p in (13, 83):
        add(_check(f"{p}_mod_7", p % 7 == 6, -1, p % 7 - 7, "norm congruence"))

    two_minus = ref.TWO_MINUS_RHO
    for k in K_CLASSES:
        q = discriminant(3, k) / two_minus
        add(_check(f"2_minus_rho_divides_D3_{k}", q.is_integral(), "integral", q,
                   "common factor of the three-magnon discriminants"))
    unit = two_minus.apply_aut(ref.TAU) / two_minus
    is_unit = unit.is_integral() and abs(unit.norm()) == 1
    add(_check("tau_2_minus_rho_unit", is_unit, "unit of Z[rho]", unit,
               "the conjugates of (2-rho) generate one ideal"))

    alt = {k: ref.FIVE_MINUS_3RHO.apply_aut(CycAut(k)) for k in K_CLASSES}
    separated = all(
        (valuation(discriminant(3, j), alt[k]) % 2 == 1) == (j == k)
        for j in K_CLASSES for k in K_CLASSES
    )
    add(_check("alternative_primes_separate", separated, True, separated,
               "conjugates of 5-3rho as witnesses"))

    matrix = valuation_matrix()
    identity = all(v == (1 if i == j else 0) for (i, j), v in matrix.items())
    add(_check("valuation_matrix_identity", identity, "identity", identity,
               "designated primes"))

    for tag in ALL_TAGS:
        result = sqrt_in_rho(tag.value())
        ok = not result.is_square and result.certificate is not None
        detail = result.certificate.describe() if result.certificate else "square"
        add(_check(f"nonsquare_{tag}", ok, "certificate", detail, "discriminants are nonsquares"))

    return checks


def verify_trace_and_norm() -> List[CheckResult]:
    """Trace of rho^2, rho_k images and the closed norm form on seeded samples."""
    checks: List[CheckResult] = []
    rho = RhoNum.rho()
    t = (rho * rho).trace()
    checks.append(_check("trace_rho_squared", t == ref.TRACE_RHO_SQUARED, ref.TRACE_RHO_SQUARED,
                         t, "trace of rho^2", section=3))
    checks.append(_check(
        "trace_rho_squared_printed", t != ref.TRACE_RHO_SQUARED_PRINTED,
        f"printed {ref.TRACE_RHO_SQUARED_PRINTED} differs", t, "trace of rho^2",
        section=3, flagged=True,
    ))
    image = (CycNum.omega(2) + CycNum.omega(5)).project()
    checks.append(_check("project_rho_2", image == rho_k(2), rho_k(2), image, "rho_2", section=3))
    checks.append(_check(
        "project_rho_2_printed", image != ref.PROJECT_RHO2_PRINTED,
        f"printed {ref.PROJECT_RHO2_PRINTED} differs", image, "rho_2", section=3, flagged=True,
    ))

    settings = get_settings()
    rng = random.Random(settings.random_seed)
    agree = True
    for _ in range(settings.random_trials):
        x, y = rng.randint(-20, 20), rng.randint(-20, 20)
        if RhoNum.from_linear(x, y).norm() != norm_closed_form(x, y):
            agree = False
    checks.append(_check("norm_closed_form", agree, True, agree,
                         "N(x + y rho) = x^3 - x^2 y - 2 x y^2 + y^3", section=3))

    c2, c1, c0 = char_poly_of_multiplication(rho)
    ok = (c2, c1, c0) == (1, -2, -1)
    checks.append(_check("minimal_polynomial_rho", ok, (1, -2, -1), (c2, c1, c0),
                         "t^3 + t^2 - 2t - 1", section=3))
    return checks
