"""
Floating-point oracle for the exact spectrum.

Eigenvalues come from a cyclic Jacobi iteration written here in numpy. The
oracle reads only the integer Hamiltonian and orbit membership; complex
exponentials for the per-block check are computed directly, never taken from
the exact field types.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConvergenceError, SpectrumMismatchError
from .model import (
    BRILLOUIN_ZONE,
    N_NODES,
    config_index,
    full_hamiltonian,
    hamiltonian_arith,
    sector_orbits,
)
from .qubits import SpectrumRecord, full_spectrum, sector_spectrum
from .settings import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseSym:
    """
    Real symmetric matrix in double precision.

    Attributes:
        n: Dimension
        entries: n x n array, symmetrized on construction
        embedded: True when built from a complex Hermitian matrix
    """

    n: int
    entries: np.ndarray = field(repr=False)
    embedded: bool = False

    @classmethod
    def from_array(cls, a, atol: float = 1e-12) -> "DenseSym":
        """
        Raises:
            ValueError: The array is not square or not symmetric
        """
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.allclose(a, a.T, atol=atol):
            raise ValueError("matrix is not symmetric")
        return cls(a.shape[0], (a + a.T) / 2.0)

    @classmethod
    def from_hermitian(cls, h, atol: float = 1e-12) -> "DenseSym":
        """Real embedding [[Re, -Im], [Im, Re]]; every eigenvalue appears twice."""
        h = np.asarray(h, dtype=complex)
        if not np.allclose(h, h.conj().T, atol=atol):
            raise ValueError("matrix is not Hermitian")
        re, im = h.real, h.imag
        block = np.block([[re, -im], [im, re]])
        return cls(block.shape[0], (block + block.T) / 2.0, embedded=True)


def _off_norm(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(a * a) - np.sum(np.diag(a) ** 2)))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    if theta == 0.0:
        t = 1.0
    else:
        t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0


def jacobi_eigenvalues(
    m: DenseSym, tol: Optional[float] = None, max_sweeps: Optional[int] = None
) -> List[float]:
    """
    Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, sorted ascending.

    Iterates until the off-diagonal Frobenius norm drops below tol times the
    Frobenius norm of the input.

    Raises:
        ValueError: tol is not positive
        ConvergenceError: The sweep cap was reached
    """
    settings = get_settings()
    tol = settings.oracle_tol if tol is None else tol
    max_sweeps = settings.oracle_max_sweeps if max_sweeps is None else max_sweeps
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m.entries, dtype=float, copy=True)
    n = m.n
    scale = float(np.linalg.norm(a))
    if n <= 1 or scale == 0.0:
        return sorted(float(x) for x in np.diag(a))
    bound = tol * scale
    for sweep in range(max_sweeps):
        if _off_norm(a) < bound:
            logger.debug("jacobi: n=%d converged after %d sweeps", n, sweep)
            return sorted(float(x) for x in np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > bound / n:
                    _rotate(a, p, q)
    if _off_norm(a) < bound:
        return sorted(float(x) for x in np.diag(a))
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def hermitian_block_eigenvalues(h, tol: Optional[float] = None) -> List[float]:
    """Eigenvalues of a complex Hermitian matrix, halving the embedded pairs."""
    doubled = jacobi_eigenvalues(DenseSym.from_hermitian(h), tol)
    return doubled[::2]


# ============================================================================
# ORACLE RUNS
# ============================================================================

def integer_hamiltonian(r: Optional[int] = None) -> np.ndarray:
    """The arithmetic-basis Hamiltonian as floats; the full 128 x 128 one by default."""
    exact = full_hamiltonian() if r is None else hamiltonian_arith(r)
    return np.array([[float(x) for x in row] for row in exact.rows])


def wavelet_frame(r: int, k: int) -> np.ndarray:
    """Orthonormal wavelets of sector (r, k) as columns, from raw exponentials."""
    index = config_index(r)
    orbits = sector_orbits(r, k)
    u = np.zeros((len(index), len(orbits)), dtype=complex)
    for col, orbit in enumerate(orbits):
        size = len(orbit.members)
        for j, cfg in enumerate(orbit.members):
            u[index[cfg], col] = np.exp(-2j * np.pi * k * j / N_NODES) / np.sqrt(size)
    return u


def block_oracle(r: int, k: int) -> List[float]:
    """Eigenvalues of U^dagger H_r U for the numeric wavelet frame U of (r, k)."""
    u = wavelet_frame(r, k)
    if u.shape[1] == 0:
        return []
    block = u.conj().T @ integer_hamiltonian(r) @ u
    return hermitian_block_eigenvalues(block)


def oracle_spectrum() -> List[float]:
    """All 128 eigenvalues of the full Hamiltonian."""
    values = jacobi_eigenvalues(DenseSym.from_array(integer_hamiltonian()))
    logger.info("oracle: %d eigenvalues, min %.12f", len(values), values[0])
    return values


def shuffled_spectrum(seed: Optional[int] = None) -> List[float]:
    """Spectrum after a random simultaneous row/column permutation."""
    rng = np.random.default_rng(get_settings().random_seed if seed is None else seed)
    h = integer_hamiltonian()
    perm = rng.permutation(h.shape[0])
    return jacobi_eigenvalues(DenseSym.from_array(h[np.ix_(perm, perm)]))


def expand_records(records: Sequence[SpectrumRecord]) -> List[float]:
    values = []
    for rec in records:
        values.extend([rec.energy_float] * rec.multiplicity)
    return sorted(values)


def clusters(values: Sequence[float], gap: float) -> List[Tuple[float, int]]:
    """(first value, size) of runs of sorted values separated by more than gap."""
    out: List[Tuple[float, int]] = []
    prev = None
    for v in sorted(values):
        if prev is not None and v - prev <= gap:
            first, size = out[-1]
            out[-1] = (first, size + 1)
        else:
            out.append((v, 1))
        prev = v
    return out


@dataclass
class SpectrumComparison:
    """
    Result of matching exact and numeric spectra.

    Attributes:
        total_exact: Sum of exact multiplicities
        total_numeric: Number of numeric eigenvalues
        max_deviation: Largest |exact - numeric| after sorting
        clusters_match: Degenerate cluster sizes agree pairwise
        tol: Deviation bound used
    """

    total_exact: int
    total_numeric: int
    max_deviation: float
    clusters_match: bool
    tol: float
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.total_exact == self.total_numeric
            and self.clusters_match
            and self.max_deviation <= self.tol
        )


def compare_spectra(
    exact: Sequence[SpectrumRecord],
    numeric: Sequence[float],
    tol: Optional[float] = None,
    raise_on_failure: bool = False,
) -> SpectrumComparison:
    """
    Greedy matching of the sorted exact and numeric multisets.

    Raises:
        SpectrumMismatchError: On failure, when raise_on_failure is set
    """
    tol = get_settings().compare_tol if tol is None else tol
    left = expand_records(exact)
    right = sorted(numeric)
    mismatches = []
    if len(left) != len(right):
        mismatches.append(f"total multiplicity {len(left)} vs {len(right)}")
        deviation = float("inf")
    else:
        deviation = max((abs(a - b) for a, b in zip(left, right)), default=0.0)
    cl_exact = clusters(left, 10 * tol)
    cl_numeric = clusters(right, 10 * tol)
    sizes_match = [s for _, s in cl_exact] == [s for _, s in cl_numeric]
    if not sizes_match:
        mismatches.append(f"{len(cl_exact)} exact clusters vs {len(cl_numeric)} numeric")
    if deviation > tol:
        mismatches.append(f"max deviation {deviation:.3e} exceeds {tol:.1e}")
    report = SpectrumComparison(len(left), len(right), deviation, sizes_match, tol, mismatches)
    if raise_on_failure and not report.passed:
        raise SpectrumMismatchError("; ".join(mismatches))
    return report


def block_deviation(r: int, k: int) -> float:
    """Max deviation between block_oracle(r, k) and the exact sector energies."""
    exact = sorted(e.numeric(1).real for _, _, e in sector_spectrum(r, k))
    numeric = block_oracle(r, k)
    if len(exact) != len(numeric):
        return float("inf")
    return max((abs(a - b) for a, b in zip(exact, numeric)), default=0.0)


def block_deviations() -> dict:
    return {
        (r, k): block_deviation(r, k)
        for r in range(N_NODES + 1)
        for k in BRILLOUIN_ZONE
        if sector_orbits(r, k)
    }


def run_oracle(raise_on_failure: bool = False) -> SpectrumComparison:
    return compare_spectra(full_spectrum(), oracle_spectrum(), raise_on_failure=raise_on_failure)
