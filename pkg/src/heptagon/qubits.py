"""
Highest-weight reductions of the heptagon blocks.

All vectors are coordinates in the Galois-wavelet basis of a sector (r, k),
ordered like ``model.sector_orbits``. Since every wavelet of a level has the
same norm, the plain Hermitian product of coordinates is proportional to the
product in the arithmetic basis.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import HeptagonError
from .fields import ORDER, CycAut, CycNum, RhoNum, as_cyc, rho_k
from .linalg import ExactMatrix, inner, span_intersection
from .model import (
    BRILLOUIN_ZONE,
    N_NODES,
    Config,
    config_index,
    fourier_block,
    from_wavelet_coordinates,
    s_block,
    s_minus,
    sector_dimension,
    to_wavelet_coordinates,
)
from .quadratic import DiscTag, QuadNum

logger = logging.getLogger(__name__)

QUBIT_WEIGHTS = (2, 3)
NU = (1, -1)


def _xi(k: int, power: int = 1) -> CycNum:
    return CycNum.omega(power * k)


def _is_zero_k(k: int) -> bool:
    return k % ORDER == 0


def _check_weight(r_prime: int) -> None:
    if r_prime not in (0, 1, 2, 3):
        raise ValueError(f"weight r' must lie in 0..3, got {r_prime}")


def _check_level(r: int, r_prime: int) -> None:
    if not r_prime <= r <= N_NODES - r_prime:
        raise ValueError(f"level r={r} carries no weight-{r_prime} states")


def _vec(*entries) -> Tuple[CycNum, ...]:
    return tuple(as_cyc(e) for e in entries)


# ============================================================================
# HIGHEST-WEIGHT VECTORS
# ============================================================================

@lru_cache(maxsize=None)
def highest_weight_basis(r_prime: int, k: int) -> Tuple[Tuple[CycNum, ...], ...]:
    """
    Explicit basis of the highest-weight space of weight r' at quasimomentum k.

    For k = 0 and r' = 2, 3 the vectors are eigenvectors ordered nu = +1, -1.

    Example:
        highest_weight_basis(2, 0) -> ((-1, 0, 1), (1, -2, 1))
    """
    _check_weight(r_prime)
    one = CycNum.one()
    if _is_zero_k(k):
        return {
            0: ((one,),),
            1: (),
            2: (_vec(-1, 0, 1), _vec(1, -2, 1)),
            3: (_vec(2, -3, 2, -3, 2), _vec(0, 1, 0, -1, 0)),
        }[r_prime]

    def xi(p: int) -> CycNum:
        return _xi(k, p)

    if r_prime == 0:
        return ()
    if r_prime == 1:
        return ((one,),)
    if r_prime == 2:
        v1 = (1 + xi(2), -(1 + xi(1)), CycNum.zero())
        scale = (1 + xi(1)).inverse()
        v2 = tuple(scale * c for c in (1 + xi(3), CycNum.zero(), -(1 + xi(1))))
        return (v1, v2)
    v1 = (
        CycNum.zero(),
        -(1 + xi(-2)),
        -(xi(2) - xi(-2)),
        1 + xi(2),
        xi(-1) - xi(-2),
    )
    v2 = (
        xi(1) - xi(5),
        xi(5) + xi(6),
        CycNum.zero(),
        -(xi(1) + xi(2)),
        xi(3) - xi(1),
    )
    return (v1, v2)


def highest_weight_kernel(r_prime: int, k: int) -> List[tuple]:
    """Kernel of S+ on the sector (r', k), computed by exact elimination."""
    _check_weight(r_prime)
    dim = sector_dimension(r_prime, k)
    identity = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    if r_prime == 0 or sector_dimension(r_prime - 1, k) == 0:
        return identity
    raising = s_block(r_prime - 1, 1, k).dagger()
    return raising.nullspace()


def highest_weight_dimension(r_prime: int) -> int:
    """dim of the weight-r' highest-weight space over all k: C(7, r') - rank S-."""
    if r_prime == 0:
        return 1
    return comb(N_NODES, r_prime) - s_minus(r_prime - 1).rank()


def lift(vector: Sequence, r_prime: int, r: int, k: int) -> tuple:
    """(S-)^(r - r') applied to a weight-r' vector of sector k."""
    _check_level(r, r_prime)
    if r == r_prime:
        return tuple(vector)
    image = s_block(r_prime, r - r_prime, k) @ ExactMatrix.column_vector(vector)
    return image.column(0)


def weight_space_basis(r: int, r_prime: int, k: int) -> Tuple[tuple, ...]:
    return tuple(lift(v, r_prime, r, k) for v in highest_weight_basis(r_prime, k))


def singlet_product_vector(
    pairs: Sequence[Tuple[int, int]], k: int, prefactor=None
) -> tuple:
    """
    Translated product of singlet pairs sum_j xi^(-j) T^j [(|a1>-|b1>) ... ],
    returned in wavelet coordinates of the sector (len(pairs), k).

    Args:
        pairs: (a, b) node pairs, 1-based, all nodes distinct
        k: Quasimomentum
        prefactor: Optional scalar multiplying the result
    """
    nodes = [j for pair in pairs for j in pair]
    if len(set(n % N_NODES for n in nodes)) != len(nodes):
        raise ValueError("singlet pairs must use distinct nodes")
    r = len(pairs)
    index = config_index(r)
    vector = [CycNum.zero()] * len(index)
    for shift in range(N_NODES):
        phase = _xi(k, -shift)
        for choice in itertools.product((0, 1), repeat=r):
            sign = -1 if sum(choice) % 2 else 1
            cfg = Config.from_nodes(pair[c] - 1 + shift for pair, c in zip(pairs, choice))
            vector[index[cfg]] = vector[index[cfg]] + phase * sign
    coords = to_wavelet_coordinates(tuple(vector), r, k)
    if prefactor is not None:
        coords = tuple(as_cyc(prefactor) * c for c in coords)
    return coords


# ============================================================================
# QUBIT HAMILTONIANS AND ENERGIES
# ============================================================================

def _check_qubit(r_prime: int, k: int) -> None:
    if r_prime not in QUBIT_WEIGHTS:
        raise ValueError(f"qubits exist for r' = 2, 3, got {r_prime}")
    if _is_zero_k(k):
        raise ValueError("k = 0 qubits are diagonal in their explicit eigenvectors")


@lru_cache(maxsize=None)
def qubit_hamiltonian(r_prime: int, k: int) -> ExactMatrix:
    """
    2x2 matrix Q of the block Hamiltonian in the highest-weight basis,
    H [v1 v2] = [v1 v2] Q, with entries projected to Q(rho).
    """
    _check_qubit(r_prime, k)
    basis = ExactMatrix.from_columns(highest_weight_basis(r_prime, k))
    image = fourier_block(r_prime, k) @ basis
    q = basis.solve(image)
    return q.map(lambda x: as_cyc(x).project())


@dataclass(frozen=True)
class CharPoly:
    """
    y^2 - trace*y + det with y = x + 4, and its discriminant trace^2 - 4*det.
    """

    trace: RhoNum
    det: RhoNum
    discriminant: RhoNum

    def coefficients_in_x(self) -> Tuple[RhoNum, RhoNum, RhoNum]:
        """(1, b, c) with x^2 + b*x + c equal to the polynomial above."""
        return (RhoNum.one(), 8 - self.trace, 16 - 4 * self.trace + self.det)

    def evaluate(self, x):
        y = x + 4
        return y * y - self.trace * y + self.det


@lru_cache(maxsize=None)
def charpoly_disc(r_prime: int, k: int) -> CharPoly:
    q = qubit_hamiltonian(r_prime, k)
    shifted = q + ExactMatrix.identity(2).scale(Fraction(4))
    trace = shifted.trace()
    det = shifted[0, 0] * shifted[1, 1] - shifted[0, 1] * shifted[1, 0]
    return CharPoly(trace, det, trace * trace - 4 * det)


def _rayleigh(r_prime: int, k: int, v: Sequence) -> RhoNum:
    block = fourier_block(r_prime, k)
    hv = (block @ ExactMatrix.column_vector(v)).column(0)
    energy = as_cyc(inner(v, hv) / inner(v, v))
    if any(a != energy * b for a, b in zip(hv, v)):
        raise HeptagonError(f"vector {v} is not an eigenvector of H_{r_prime}^{k}")
    return energy.project()


@lru_cache(maxsize=None)
def energies(r_prime: int, k: int) -> Tuple[QuadNum, ...]:
    """
    Highest-weight energies of weight r' at quasimomentum k, ordered nu = +1, -1
    for r' = 2, 3; one energy for r' = 0 (k = 0) and r' = 1 (k != 0); empty
    when the weight does not occur.

    Example:
        energies(2, 0) -> (-2, -6)
        energies(1, k) -> (-2 + mu,)
    """
    _check_weight(r_prime)
    if r_prime in QUBIT_WEIGHTS and not _is_zero_k(k):
        cp = charpoly_disc(r_prime, k)
        centre = cp.trace / 2 - 4
        tag = DiscTag.of(r_prime, k)
        half = Fraction(1, 2)
        return tuple(QuadNum(centre, RhoNum.from_rat(nu * half), tag) for nu in NU)
    return tuple(
        QuadNum.from_base(_rayleigh(r_prime, k, v)) for v in highest_weight_basis(r_prime, k)
    )


def one_magnon_energy(k: int) -> RhoNum:
    """-2 + xi + conj(xi) = -2 + rho_k."""
    return rho_k(k) - 2


# ============================================================================
# PROJECTORS AND DENSITY MATRICES
# ============================================================================

def _gram_projector(columns: Sequence[Sequence], dim: int) -> ExactMatrix:
    if not columns:
        return ExactMatrix.zeros(dim).map(as_cyc)
    a = ExactMatrix.from_columns(columns)
    gram = a.dagger() @ a
    return (a @ gram.inverse() @ a.dagger()).map(as_cyc)


@lru_cache(maxsize=None)
def projectors(r: int, r_prime: int, k: int) -> ExactMatrix:
    """
    Orthogonal projector of the sector (r, k) onto its weight-r' part,
    A (A^dagger A)^-1 A^dagger with A the lifted highest-weight basis.
    """
    _check_weight(r_prime)
    _check_level(r, r_prime)
    return _gram_projector(weight_space_basis(r, r_prime, k), sector_dimension(r, k))


def _gram(m: ExactMatrix) -> ExactMatrix:
    return m @ m.dagger()


def projector_closed_form(r: int, r_prime: int, k: int) -> ExactMatrix:
    """
    Projectors assembled from S-blocks with fixed rational weights:
    P_{2,1} = S11 S11^+/5, P_{3,1} = S12 S12^+/40,
    P_{3,2} = S21 S21^+/3 - S12 S12^+/15, and the complements.
    """
    if _is_zero_k(k) or r not in (2, 3) or not 1 <= r_prime <= r:
        raise ValueError(f"no closed form for r={r}, r'={r_prime}, k={k}")
    ident = ExactMatrix.identity(sector_dimension(r, k))
    if r == 2:
        p21 = _gram(s_block(1, 1, k)).scale(Fraction(1, 5))
        result = p21 if r_prime == 1 else ident - p21
    else:
        s21 = _gram(s_block(2, 1, k))
        s12 = _gram(s_block(1, 2, k))
        result = {
            1: s12.scale(Fraction(1, 40)),
            2: s21.scale(Fraction(1, 3)) - s12.scale(Fraction(1, 15)),
            3: ident - s21.scale(Fraction(1, 3)) + s12.scale(Fraction(1, 24)),
        }[r_prime]
    return result.map(as_cyc)


@lru_cache(maxsize=None)
def density_matrices(r: int, r_prime: int, k: int) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    Rank-one eigenprojectors (rho_{+1}, rho_{-1}) of the qubit at level r.

    For k != 0, rho_nu = P/2 + nu*(H P - beta P)/sqrt(Delta) with beta the
    mean of the two energies; entries lie in Q(w7, sqrt(Delta)). For k = 0
    they are |v><v| / <v|v> of the lifted eigenvectors.
    """
    if r_prime not in QUBIT_WEIGHTS:
        raise ValueError(f"density matrices are defined for r' = 2, 3, got {r_prime}")
    _check_level(r, r_prime)
    if _is_zero_k(k):
        result = []
        for v in weight_space_basis(r, r_prime, k):
            col = ExactMatrix.column_vector(v)
            outer = col @ col.dagger()
            norm = inner(v, v)
            result.append(outer.map(lambda x: QuadNum.from_base(as_cyc(x / norm))))
        return tuple(result)
    p = projectors(r, r_prime, k)
    cp = charpoly_disc(r_prime, k)
    beta = cp.trace / 2 - 4
    traceless = fourier_block(r, k) @ p - p.scale(beta)
    inv_disc = cp.discriminant.inverse()
    tag = DiscTag.of(r_prime, k)
    half = Fraction(1, 2)
    result = []
    for nu in NU:
        rows = tuple(
            tuple(
                QuadNum(as_cyc(p[i, j] * half), as_cyc(traceless[i, j] * inv_disc * nu), tag)
                for j in range(p.shape[1])
            )
            for i in range(p.shape[0])
        )
        result.append(ExactMatrix(rows))
    return tuple(result)


def eigenvectors(r: int, r_prime: int, k: int) -> Dict[int, tuple]:
    """
    Eigenvectors per nu at level r. For k != 0 the components lie in
    Q(w7, sqrt(Delta)): v = c1*v1 + c2*v2 with (c1, c2) = (Q12, E - Q11).
    """
    if r_prime not in QUBIT_WEIGHTS:
        raise ValueError(f"eigenvectors are indexed by nu for r' = 2, 3, got {r_prime}")
    basis = weight_space_basis(r, r_prime, k)
    if _is_zero_k(k):
        return dict(zip(NU, basis))
    q = qubit_hamiltonian(r_prime, k)
    out = {}
    for nu, energy in zip(NU, energies(r_prime, k)):
        c1 = QuadNum.from_base(q[0, 1])
        c2 = energy - q[0, 0]
        out[nu] = tuple((c1 * a + c2 * b).to_cyc() for a, b in zip(*basis))
    return out


# ============================================================================
# GALOIS QUBITS
# ============================================================================

_DESCENT_GROUPS = {
    "Q": (1, 2, 3, 4, 5, 6),
    "Q(eta)": (1, 2, 4),
    "Q(rho)": (1, 6),
    "Q(w7)": (1,),
}


def galois_qubit_dimension(r: int, r_prime: int, k: int, field: str) -> int:
    """
    dim_K of the K-rational vectors of the weight-r' space at (r, k), in the
    arithmetic basis, found as the dimension of the intersection of its
    Galois conjugates over Gal(Q(w7)/K).

    Example:
        galois_qubit_dimension(2, 2, 0, "Q") -> 2
        galois_qubit_dimension(2, 2, 1, "Q(rho)") -> 0
    """
    if field not in _DESCENT_GROUPS:
        raise ValueError(f"field must be one of {sorted(_DESCENT_GROUPS)}")
    space = [
        from_wavelet_coordinates(v, r, k) for v in weight_space_basis(r, r_prime, k)
    ]
    common = space
    for l in _DESCENT_GROUPS[field][1:]:
        aut = CycAut(l)
        image = [tuple(as_cyc(x).apply_aut(aut) for x in v) for v in space]
        common = span_intersection(common, image)
        if not common:
            return 0
    return len(common)


# ============================================================================
# SPECTRUM
# ============================================================================

@dataclass(frozen=True)
class SpectrumRecord:
    """
    One highest-weight level and its multiplicity over all levels r.

    Attributes:
        k: Quasimomentum in the Brillouin zone
        r: Level of the highest-weight state (equal to r_prime)
        r_prime: Magnon weight
        nu: Qubit digit for r' = 2, 3, None otherwise
        energy_exact: Energy in Q(rho, sqrt(Delta))
        energy_float: Numeric value in the principal embedding
        multiplicity: 8 - 2 r'
    """

    k: int
    r: int
    r_prime: int
    nu: Optional[int]
    energy_exact: QuadNum
    energy_float: float
    multiplicity: int

    @property
    def key(self) -> Tuple[int, int, Optional[int]]:
        return (self.k, self.r_prime, self.nu)


def multiplicity(r_prime: int) -> int:
    return N_NODES + 1 - 2 * r_prime


@lru_cache(maxsize=None)
def full_spectrum() -> Tuple[SpectrumRecord, ...]:
    """All 128 levels as highest-weight records with multiplicity."""
    records = []
    for k in BRILLOUIN_ZONE:
        for r_prime in range(4):
            levels = energies(r_prime, k)
            labels = NU if len(levels) == 2 else (None,) * len(levels)
            for nu, energy in zip(labels, levels):
                records.append(SpectrumRecord(
                    k=k,
                    r=r_prime,
                    r_prime=r_prime,
                    nu=nu,
                    energy_exact=energy,
                    energy_float=energy.numeric(1).real,
                    multiplicity=multiplicity(r_prime),
                ))
    total = sum(rec.multiplicity for rec in records)
    logger.info("assembled %d spectrum records covering %d states", len(records), total)
    return tuple(records)


def sector_spectrum(r: int, k: int) -> List[Tuple[int, Optional[int], QuadNum]]:
    """(r', nu, E) for every eigenvalue of the block (r, k)."""
    out = []
    for rec in full_spectrum():
        if rec.k == k and rec.r_prime <= r <= N_NODES - rec.r_prime:
            out.append((rec.r_prime, rec.nu, rec.energy_exact))
    return out


def expanded_energies() -> List[float]:
    """Numeric energies repeated by multiplicity, sorted ascending."""
    values = []
    for rec in full_spectrum():
        values.extend([rec.energy_float] * rec.multiplicity)
    return sorted(values)
