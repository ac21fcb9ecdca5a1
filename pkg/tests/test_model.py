from math import comb

import pytest

from heptagon import reference as ref
from heptagon.fields import rho_k
from heptagon.linalg import ExactMatrix
from heptagon.model import (
    BRILLOUIN_ZONE,
    N_NODES,
    Config,
    block_diagonal_hamiltonian,
    build_configs,
    build_orbits,
    canonical_rotation,
    fourier_block,
    fourier_inverse,
    fourier_transform,
    from_wavelet_coordinates,
    full_hamiltonian,
    hamiltonian_arith,
    lowering_power,
    particle_hole_matrix,
    s_block,
    s_minus,
    sector_dimension,
    sector_table,
    to_wavelet_coordinates,
    wavelet,
    wavelet_vector,
)

NONZERO_K = [k for k in BRILLOUIN_ZONE if k]


def test_configurations():
    assert len(build_configs(3)) == 35
    assert sum(len(build_configs(r)) for r in range(N_NODES + 1)) == 128
    with pytest.raises(ValueError):
        build_configs(8)


def test_config_helpers():
    cfg = Config.from_nodes([0, 2])
    assert cfg.r == 2
    assert cfg.relative_vector() == (2, 5)
    assert cfg.complement().r == 5
    assert cfg.label() == "{1,3}"
    assert cfg.translate(6) == Config.from_nodes([6, 1])
    assert canonical_rotation((5, 2)) == (2, 5)


def test_orbits():
    assert [len(build_orbits(r)) for r in range(N_NODES + 1)] == [1, 1, 3, 5, 5, 3, 1, 1]
    assert [o.t for o in build_orbits(2)] == [(1, 6), (2, 5), (3, 4)]
    assert [o.F for o in build_orbits(2)] == [1, 2, 2]
    assert all(o.is_regular for o in build_orbits(3))
    assert not build_orbits(0)[0].is_regular
    assert sector_table()[3]["configs"] == 35


def test_hamiltonian_rows_sum_to_zero():
    for r in range(N_NODES + 1):
        h = hamiltonian_arith(r)
        assert h == h.transpose()
        assert all(sum(row) == 0 for row in h.rows)
    assert full_hamiltonian().shape == (128, 128)


@pytest.mark.parametrize("r", range(N_NODES))
def test_lowering_commutes_with_hamiltonian(r):
    s = s_minus(r)
    assert hamiltonian_arith(r + 1) @ s == s @ hamiltonian_arith(r)


def test_lowering_power():
    assert lowering_power(1, 3) == s_minus(2) @ s_minus(1)
    assert lowering_power(2, 2) == ExactMatrix.identity(21)
    with pytest.raises(ValueError):
        lowering_power(3, 2)


@pytest.mark.parametrize("r", [1, 2, 5])
def test_particle_hole_symmetry(r):
    p = particle_hole_matrix(r)
    assert hamiltonian_arith(N_NODES - r) @ p == p @ hamiltonian_arith(r)


def test_sector_dimensions():
    assert sector_dimension(0, 0) == 1
    assert sector_dimension(0, 1) == 0
    assert sector_dimension(3, 2) == 5
    for r in range(N_NODES + 1):
        assert sum(sector_dimension(r, k) for k in BRILLOUIN_ZONE) == comb(N_NODES, r)


def test_wavelets():
    orbit = build_orbits(2)[0]
    assert len(wavelet(orbit, 1)) == 7
    assert wavelet(build_orbits(0)[0], 1) == {}
    vec = wavelet_vector(orbit, 2)
    assert to_wavelet_coordinates(vec, 2, 2) == (1, 0, 0)
    assert from_wavelet_coordinates((1, 0, 0), 2, 2) == vec


@pytest.mark.parametrize("r", [1, 2])
def test_fourier_transform_block_diagonalizes(r):
    f, f_inv = fourier_transform(r), fourier_inverse(r)
    assert f @ f_inv == ExactMatrix.identity(comb(N_NODES, r))
    assert f_inv @ hamiltonian_arith(r) @ f == block_diagonal_hamiltonian(r)


@pytest.mark.parametrize("k", NONZERO_K)
def test_one_magnon_block(k):
    assert fourier_block(1, k)[0, 0] == rho_k(k) - 2


@pytest.mark.parametrize("k", BRILLOUIN_ZONE)
def test_blocks_match_printed(k):
    for r in (1, 2, 3):
        assert fourier_block(r, k) == ref.ham_block(r, k)
    assert fourier_block(0, 0) == ref.ham_block(0, 0)


@pytest.mark.parametrize("k", NONZERO_K)
def test_lowering_blocks_match_printed(k):
    assert s_block(1, 1, k) == ref.s11(k)
    assert s_block(2, 1, k) == ref.s21(k)
    assert s_block(1, 2, k) == s_block(2, 1, k) @ s_block(1, 1, k)


def test_invalid_lowering_step():
    with pytest.raises(ValueError):
        s_block(5, 3, 1)
