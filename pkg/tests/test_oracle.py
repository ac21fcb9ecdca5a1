import numpy as np
import pytest

from heptagon.errors import ConvergenceError, SpectrumMismatchError
from heptagon.oracle import (
    DenseSym,
    block_deviation,
    block_deviations,
    clusters,
    compare_spectra,
    expand_records,
    hermitian_block_eigenvalues,
    integer_hamiltonian,
    jacobi_eigenvalues,
    oracle_spectrum,
    run_oracle,
    shuffled_spectrum,
    wavelet_frame,
)
from heptagon.qubits import full_spectrum


def test_jacobi_small():
    values = jacobi_eigenvalues(DenseSym.from_array([[2.0, 1.0], [1.0, 2.0]]))
    assert values == pytest.approx([1.0, 3.0], abs=1e-12)
    assert jacobi_eigenvalues(DenseSym.from_array([[4.0]])) == [4.0]


def test_jacobi_matches_numpy(rng):
    a = np.array([[rng.uniform(-1, 1) for _ in range(6)] for _ in range(6)])
    sym = a + a.T
    values = jacobi_eigenvalues(DenseSym.from_array(sym))
    assert values == pytest.approx(sorted(np.linalg.eigvalsh(sym)), abs=1e-10)


def test_jacobi_errors():
    m = DenseSym.from_array([[1.0, 2.0], [2.0, 1.0]])
    with pytest.raises(ValueError):
        jacobi_eigenvalues(m, tol=0.0)
    with pytest.raises(ConvergenceError):
        jacobi_eigenvalues(m, max_sweeps=0)


def test_dense_sym_validation():
    with pytest.raises(ValueError):
        DenseSym.from_array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        DenseSym.from_array([[1.0, 2.0]])
    with pytest.raises(ValueError):
        DenseSym.from_hermitian([[1.0, 1j], [1j, 1.0]])


def test_hermitian_eigenvalues():
    values = hermitian_block_eigenvalues([[2.0, 1j], [-1j, 2.0]])
    assert values == pytest.approx([1.0, 3.0], abs=1e-12)


def test_clusters():
    assert clusters([1.0, 0.0, 0.0], 0.1) == [(0.0, 2), (1.0, 1)]
    assert clusters([], 0.1) == []


def test_wavelet_frame_is_orthonormal():
    u = wavelet_frame(3, 2)
    assert u.shape == (35, 5)
    assert np.allclose(u.conj().T @ u, np.eye(5))


def test_full_oracle_agrees_with_exact_spectrum():
    result = run_oracle()
    assert result.passed, result.mismatches
    assert result.total_exact == result.total_numeric == 128
    assert integer_hamiltonian().shape == (128, 128)


def test_shuffled_spectrum_is_unchanged():
    assert shuffled_spectrum(seed=3) == pytest.approx(oracle_spectrum(), abs=1e-9)


def test_block_oracle():
    assert block_deviation(3, 1) < 1e-9
    deviations = block_deviations()
    assert len(deviations) == 2 + 6 * 7
    assert max(deviations.values()) < 1e-9


def test_compare_detects_mismatches():
    records = full_spectrum()
    numeric = expand_records(records)
    assert compare_spectra(records, numeric).passed
    shifted = [x + 1e-6 for x in numeric]
    report = compare_spectra(records, shifted)
    assert not report.passed
    assert report.mismatches
    short = compare_spectra(records, numeric[:-1])
    assert short.max_deviation == float("inf")
    with pytest.raises(SpectrumMismatchError):
        compare_spectra(records, shifted, raise_on_failure=True)
