"""
Printed reference data for the heptagon, as functions of the quasimomentum k.

The values here are transcribed as printed, including the few entries that
are known to be wrong. ``PRINTED_DISCREPANCIES`` lists those together with
the value the generic construction produces; ``report`` checks both.

Notation: xi = w^k, xib = w^-k, mu_l = rho_{lk}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Dict, Tuple

from .fields import CycAut, CycNum, RhoNum, as_cyc, rho_k
from .linalg import ExactMatrix


def _w(k: int, p: int) -> CycNum:
    return CycNum.omega(p * k)


def _matrix(rows) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(as_cyc(x) for x in row) for row in rows))


# ============================================================================
# BLOCK HAMILTONIANS AND LOWERING BLOCKS
# ============================================================================

def ham_block(r: int, k: int) -> ExactMatrix:
    """Printed H_r^k for r = 0..3 in the wavelet basis of ``model.sector_orbits``."""
    x = partial(_w, k)
    if r == 0:
        return _matrix([[0]])
    if r == 1:
        return _matrix([[-2 + x(-1) + x(1)]])
    if r == 2:
        return _matrix([
            [-2, 1 + x(1), 0],
            [1 + x(-1), -4, 1 + x(1)],
            [0, 1 + x(-1), -4 + x(3) + x(-3)],
        ])
    if r == 3:
        return _matrix([
            [-2, 1, 0, x(-1), 0],
            [1, -4, 1, x(-2), x(1)],
            [0, 1, -4, 1, 1 + x(3)],
            [x(1), x(2), 1, -4, x(2)],
            [0, x(-1), 1 + x(-3), x(-2), -6 + x(2) + x(-2)],
        ])
    raise ValueError(f"no printed block for r={r}")


def s11(k: int) -> ExactMatrix:
    x = partial(_w, k)
    return _matrix([[1 + x(-1)], [1 + x(-2)], [1 + x(-3)]])


def s21(k: int) -> ExactMatrix:
    x = partial(_w, k)
    return _matrix([
        [1 + x(-1), 1, 0],
        [1, x(-1), 1],
        [1, 0, x(3) + x(-1)],
        [1, x(2), x(2)],
        [0, 1 + x(-2), x(3)],
    ])


def s12(k: int) -> ExactMatrix:
    """S_{1,2}^k = S_{2,1}^k S_{1,1}^k."""
    return s21(k) @ s11(k)


# tr(S S^dagger) for (r, dr) in {(1, 1), (2, 1), (1, 2)}, every k != 0
SS_TRACES = {(1, 1): 5, (2, 1): 14, (1, 2): 40}


# ============================================================================
# QUBIT HAMILTONIANS AND CHARACTERISTIC POLYNOMIALS
# ============================================================================

def _mu(k: int, l: int = 1) -> RhoNum:
    return rho_k(l * k)


def h22(k: int) -> ExactMatrix:
    mu, mu4 = _mu(k), _mu(k, 4)
    return ExactMatrix((
        (-mu - 4, 2 - mu),
        (2 + mu, mu4 - 4),
    ))


def h33(k: int) -> ExactMatrix:
    mu2, mu4 = _mu(k, 2), _mu(k, 4)
    return ExactMatrix((
        (-3 - mu4 - 4, -1 + mu2 - 2 * mu4),
        (1 + mu2, 1 + mu2 - 4),
    ))


def secular_coefficients(r_prime: int, k: int) -> Tuple[RhoNum, RhoNum]:
    """
    (c1, c0) of the printed secular polynomial y^2 - c1*y + c0, y = x + 4.
    """
    mu = _mu(k)
    if r_prime == 2:
        return (1 - 2 * mu - mu * mu, -3 + mu + mu * mu)
    if r_prime == 3:
        return (-5 + mu + 2 * (mu * mu), mu - 2 * (mu * mu))
    raise ValueError(f"no secular polynomial for r'={r_prime}")


def printed_discriminant(r_prime: int, k: int) -> RhoNum:
    mu = _mu(k)
    if r_prime == 2:
        return 16 - mu - 3 * (mu * mu)
    return 25 - 10 * mu - 3 * (mu * mu)


K0_ENERGIES = {0: (0,), 2: (-2, -6), 3: (-5, -5)}
HIGHEST_WEIGHT_DIMENSIONS = (1, 6, 14, 14)


# ============================================================================
# VECTORS
# ============================================================================

def v21(k: int) -> Tuple[CycNum, ...]:
    x = partial(_w, k)
    return (1 + x(2), -(1 + x(1)), CycNum.zero())


def v22_printed(k: int) -> Tuple[CycNum, ...]:
    x = partial(_w, k)
    return (1 + x(1) + x(2), CycNum.zero(), -CycNum.one())


def v22(k: int) -> Tuple[CycNum, ...]:
    x = partial(_w, k)
    return (1 - x(1) + x(2), CycNum.zero(), -CycNum.one())


def v31(k: int) -> Tuple[CycNum, ...]:
    x = partial(_w, k)
    return (CycNum.zero(), -(1 + x(-2)), -(x(2) - x(-2)), 1 + x(2), x(-1) - x(-2))


def v32(k: int) -> Tuple[CycNum, ...]:
    x = partial(_w, k)
    return (x(1) - x(5), x(5) + x(6), CycNum.zero(), -(x(1) + x(2)), x(3) - x(1))


V20 = (1, 1, 1)
V30 = (1, 1, 1, 1, 1)
V321 = (-2, 0, 1, 0, 1)
V322 = (0, 0, -1, 0, 1)
V331_PRINTED = (2, 3, -2, 3, 2)
V331 = (2, -3, 2, -3, 2)
V332 = (0, 1, 0, -1, 0)


def w30_family(t: int, s: int) -> Tuple[int, ...]:
    """(2t, -3t + s, 2t, -3t - s, 2t): the printed general r' = 3 vector at k = 0."""
    return (2 * t, -3 * t + s, 2 * t, -3 * t - s, 2 * t)


# Projector weights: P = sum coeff * S S^dagger (+ identity where flagged)
PROJECTOR_WEIGHTS = {
    (2, 1): {"s11": Fraction(1, 5)},
    (3, 1): {"s12": Fraction(1, 40)},
    (3, 2): {"s21": Fraction(1, 3), "s12": Fraction(-1, 15)},
    (3, 3): {"identity": Fraction(1), "s21": Fraction(-1, 3), "s12": Fraction(1, 24)},
}


# ============================================================================
# NUMBER FIELD FACTS
# ============================================================================

TAU = CycAut(2)
TAU2 = CycAut(4)

TRACE_RHO_SQUARED_PRINTED = -3
TRACE_RHO_SQUARED = 5
PROJECT_RHO2_PRINTED = RhoNum((-2, -1, 1))

NORM_D2 = 1289
NORM_D3 = 7553
NORM_D3_FACTORS = {7: 1, 13: 1, 83: 1}

FIVE_MINUS_3RHO = RhoNum.from_linear(5, -3)
THREE_PLUS_RHO = RhoNum.from_linear(3, 1)
TWO_MINUS_RHO = RhoNum.from_linear(2, -1)
FIVE_PLUS_RHO = RhoNum.from_linear(5, 1)

FACTOR_NORMS = {
    "5-3rho": 83,
    "5+rho": 91,
    "3+rho": 13,
    "2-rho": 7,
}


def three_magnon_factors(k: int) -> Tuple[RhoNum, RhoNum, RhoNum]:
    """
    Prime factors of Delta_3^k for k in {1, 2, 4}:
    Delta_3^1 = (5-3rho) tau(3+rho) tau(2-rho),
    Delta_3^2 = tau(5-3rho) tau^2(3+rho) tau^2(2-rho),
    Delta_3^4 = tau^2(5-3rho) (3+rho) (2-rho).
    """
    shifts = {1: (1, 2, 2), 2: (2, 4, 4), 4: (4, 1, 1)}[k]
    bases = (FIVE_MINUS_3RHO, THREE_PLUS_RHO, TWO_MINUS_RHO)
    return tuple(b.apply_aut(CycAut(s)) for b, s in zip(bases, shifts))


# The third factorization is printed with superscript 3
M33_PRINTED_LABEL = "D3^3"

# a = (rho - 1)^2 and the trace data used for N(Delta_2^4)
LEMMA_A = RhoNum((3, -2, 0)) + rho_k(2)
LEMMA_A_TRACE = 10
LEMMA_A_SQUARED = 13 * rho_k(2) - 13 * RhoNum.rho() + 22
LEMMA_A_SQUARED_TRACE = 66


@dataclass(frozen=True)
class Discrepancy:
    """One printed value that the exact construction does not reproduce."""

    name: str
    printed: str
    exact: str
    anchor: str


PRINTED_DISCREPANCIES: Tuple[Discrepancy, ...] = (
    Discrepancy("trace of rho^2", "-3", "5", "trace of the real subfield generator"),
    Discrepancy("project(w^2 + w^5)", "-2 - rho + rho^2", "-2 + rho^2", "rho_2"),
    Discrepancy("v_{2,2}^k", "(1+xi+xi^2, 0, -1)", "(1-xi+xi^2, 0, -1)", "two-magnon basis"),
    Discrepancy("v_{3,3;1}^0", "(2, 3, -2, 3, 2)", "(2, -3, 2, -3, 2)", "k = 0 three-magnon vectors"),
    Discrepancy("third three-magnon factorization", "D3^3", "D3^4", "prime decomposition"),
    Discrepancy("basis of H_{2,2}^k", "undivided two-magnon vectors", "(v_{2,1}, v_{2,2})", "two-magnon qubit Hamiltonian"),
)


def fixture_table(k: int) -> Dict[str, object]:
    """Every k-dependent printed object, keyed by name."""
    return {
        "H0": ham_block(0, k),
        "H1": ham_block(1, k),
        "H2": ham_block(2, k),
        "H3": ham_block(3, k),
        "S11": s11(k),
        "S21": s21(k),
        "S12": s12(k),
        "H22": h22(k),
        "H33": h33(k),
    }
