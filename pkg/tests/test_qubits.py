from fractions import Fraction

import pytest

from heptagon import reference as ref
from heptagon.errors import HeptagonError
from heptagon.fields import K_CLASSES, RhoNum, rho_k
from heptagon.linalg import ExactMatrix, same_span, span_rank
from heptagon.model import BRILLOUIN_ZONE, N_NODES, fourier_block, sector_dimension
from heptagon.quadratic import DiscTag, QuadNum, discriminant
from heptagon.qubits import (
    charpoly_disc,
    density_matrices,
    eigenvectors,
    energies,
    expanded_energies,
    full_spectrum,
    galois_qubit_dimension,
    highest_weight_basis,
    highest_weight_dimension,
    highest_weight_kernel,
    lift,
    multiplicity,
    one_magnon_energy,
    projector_closed_form,
    projectors,
    qubit_hamiltonian,
    sector_spectrum,
    singlet_product_vector,
    weight_space_basis,
)

NONZERO_K = [k for k in BRILLOUIN_ZONE if k]


def test_highest_weight_dimensions():
    assert tuple(highest_weight_dimension(rp) for rp in range(4)) == (1, 6, 14, 14)


def test_k0_basis():
    assert highest_weight_basis(2, 0) == ((-1, 0, 1), (1, -2, 1))
    assert highest_weight_basis(1, 0) == ()
    assert highest_weight_basis(0, 3) == ()


@pytest.mark.parametrize("k", BRILLOUIN_ZONE)
@pytest.mark.parametrize("rp", [2, 3])
def test_basis_spans_the_kernel_of_raising(rp, k):
    assert same_span(highest_weight_basis(rp, k), highest_weight_kernel(rp, k))


def test_second_two_magnon_vector_is_corrected_form():
    for k in NONZERO_K:
        assert highest_weight_basis(2, k)[1] == ref.v22(k)
        assert highest_weight_basis(2, k)[1] != ref.v22_printed(k)


def test_lift_identity_and_levels():
    v = highest_weight_basis(2, 1)[0]
    assert lift(v, 2, 2, 1) == v
    assert len(lift(v, 2, 4, 1)) == sector_dimension(4, 1)
    with pytest.raises(ValueError):
        lift(v, 2, 6, 1)


def test_k0_energies():
    assert energies(0, 0) == (0,)
    assert energies(1, 0) == ()
    assert energies(2, 0) == (-2, -6)
    assert energies(3, 0) == (-5, -5)
    assert energies(0, 1) == ()


@pytest.mark.parametrize("k", NONZERO_K)
def test_one_magnon(k):
    assert energies(1, k) == (one_magnon_energy(k),)
    assert one_magnon_energy(k) == rho_k(k) - 2


@pytest.mark.parametrize("k", NONZERO_K)
@pytest.mark.parametrize("rp", [2, 3])
def test_qubit_energies(rp, k):
    cp = charpoly_disc(rp, k)
    assert cp.discriminant == discriminant(rp, k)
    plus, minus = energies(rp, k)
    assert plus.tag == DiscTag.of(rp, k)
    assert plus - minus == QuadNum.root(DiscTag.of(rp, k))
    assert cp.evaluate(plus) == 0
    assert cp.evaluate(minus) == 0


@pytest.mark.parametrize("k", NONZERO_K)
def test_qubit_hamiltonians_match_printed(k):
    assert qubit_hamiltonian(2, k) == ref.h22(k)
    assert qubit_hamiltonian(3, k) == ref.h33(k)


def test_qubit_hamiltonian_column_convention():
    basis = ExactMatrix.from_columns(highest_weight_basis(3, 2))
    assert fourier_block(3, 2) @ basis == basis @ qubit_hamiltonian(3, 2)


def test_qubit_needs_nonzero_k():
    with pytest.raises(ValueError):
        qubit_hamiltonian(2, 0)
    with pytest.raises(ValueError):
        qubit_hamiltonian(1, 1)


def test_eigenvectors():
    block = fourier_block(2, 1)
    for nu, energy in zip((1, -1), energies(2, 1)):
        v = eigenvectors(2, 2, 1)[nu]
        hv = (block @ ExactMatrix.column_vector(v)).column(0)
        assert all(a == energy * b for a, b in zip(hv, v))


@pytest.mark.parametrize("k", [0, 1, -3])
@pytest.mark.parametrize("r", [2, 3])
def test_projectors_are_orthogonal_and_complete(r, k):
    dim = sector_dimension(r, k)
    total = ExactMatrix.zeros(dim)
    for rp in range(r + 1):
        p = projectors(r, rp, k)
        assert p @ p == p
        assert p.dagger() == p
        total = total + p
    assert total == ExactMatrix.identity(dim)


@pytest.mark.parametrize("k", NONZERO_K)
def test_projector_closed_forms(k):
    for r, rp in ((2, 1), (2, 2), (3, 1), (3, 2), (3, 3)):
        assert projector_closed_form(r, rp, k) == projectors(r, rp, k)


def test_projector_closed_form_rejects_k0():
    with pytest.raises(ValueError):
        projector_closed_form(2, 1, 0)


@pytest.mark.parametrize("r,rp,k", [(2, 2, 1), (3, 3, 2), (3, 2, -1), (2, 2, 0)])
def test_density_matrices(r, rp, k):
    plus, minus = density_matrices(r, rp, k)
    assert plus @ plus == plus
    assert minus @ minus == minus
    assert plus + minus == projectors(r, rp, k)
    assert (plus @ minus).is_zero()


def test_density_needs_qubit_weight():
    with pytest.raises(ValueError):
        density_matrices(2, 1, 1)


def test_galois_qubit_dimensions():
    assert galois_qubit_dimension(2, 2, 0, "Q") == 2
    assert galois_qubit_dimension(3, 3, 1, "Q(rho)") == 0
    assert galois_qubit_dimension(3, 3, 1, "Q(w7)") == 2
    with pytest.raises(ValueError):
        galois_qubit_dimension(2, 2, 0, "R")


def test_singlet_products_are_collinear_with_v31():
    pairs = ((2, 1), (4, 3), (6, 5))
    for k in NONZERO_K:
        assert span_rank([singlet_product_vector(pairs, k), ref.v31(k)]) == 1
    with pytest.raises(ValueError):
        singlet_product_vector(((1, 2), (2, 3)), 1)


def test_weight_spaces_are_two_dimensional():
    for rp in (2, 3):
        for r in range(rp, N_NODES + 1 - rp):
            assert span_rank(weight_space_basis(r, rp, 1)) == 2


def test_full_spectrum_accounting():
    records = full_spectrum()
    assert len(records) == 35
    assert sum(rec.multiplicity for rec in records) == 128
    assert [multiplicity(rp) for rp in range(4)] == [8, 6, 4, 2]
    assert len({rec.key for rec in records}) == len(records)
    ground = min(records, key=lambda rec: rec.energy_float)
    assert ground.r_prime in (2, 3)
    assert len(expanded_energies()) == 128


def test_sector_spectrum_matches_dimension():
    for r in range(N_NODES + 1):
        for k in BRILLOUIN_ZONE:
            assert len(sector_spectrum(r, k)) == sector_dimension(r, k)


def test_rayleigh_rejects_non_eigenvectors(monkeypatch):
    from heptagon import qubits

    qubits.energies.cache_clear()
    monkeypatch.setattr(qubits, "highest_weight_basis", lambda rp, k: (ref.V331_PRINTED,))
    try:
        with pytest.raises(HeptagonError):
            qubits.energies(3, 0)
    finally:
        qubits.energies.cache_clear()


def test_k_classes_share_norms():
    norms = {discriminant(2, k).norm() for k in K_CLASSES}
    assert norms == {Fraction(1289)}
    assert RhoNum.one().norm() == 1
