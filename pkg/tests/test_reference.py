import pytest

from heptagon import reference as ref
from heptagon.fields import K_CLASSES, RhoNum
from heptagon.linalg import ExactMatrix
from heptagon.model import BRILLOUIN_ZONE, fourier_block
from heptagon.quadratic import discriminant
from heptagon.qubits import charpoly_disc

NONZERO_K = [k for k in BRILLOUIN_ZONE if k]


@pytest.mark.parametrize("k", NONZERO_K)
def test_printed_secular_data(k):
    for rp in (2, 3):
        cp = charpoly_disc(rp, k)
        assert (cp.trace, cp.det) == ref.secular_coefficients(rp, k)
        assert ref.printed_discriminant(rp, k) == discriminant(rp, k)


@pytest.mark.parametrize("k", NONZERO_K)
def test_lowering_traces(k):
    blocks = {(1, 1): ref.s11(k), (2, 1): ref.s21(k), (1, 2): ref.s12(k)}
    for key, s in blocks.items():
        assert (s @ s.dagger()).trace() == ref.SS_TRACES[key]


def test_printed_k0_vectors():
    h3 = fourier_block(3, 0)

    def image(v):
        return (h3 @ ExactMatrix.column_vector(v)).column(0)

    assert image(ref.V331) == tuple(-5 * x for x in ref.V331)
    assert image(ref.V331_PRINTED) != tuple(-5 * x for x in ref.V331_PRINTED)
    assert ref.w30_family(1, 0) == ref.V331
    assert ref.w30_family(0, 1) == ref.V332


def test_three_magnon_factorizations():
    for k in K_CLASSES:
        a, b, c = ref.three_magnon_factors(k)
        assert a * b * c == discriminant(3, k)
    assert ref.LEMMA_A == (RhoNum.rho() - 1) ** 2


def test_discrepancies_are_listed():
    names = [d.name for d in ref.PRINTED_DISCREPANCIES]
    assert "trace of rho^2" in names
    assert len(names) == len(set(names))


def test_fixture_table():
    table = ref.fixture_table(2)
    assert set(table) == {"H0", "H1", "H2", "H3", "S11", "S21", "S12", "H22", "H33"}
    assert table["H3"].shape == (5, 5)
    with pytest.raises(ValueError):
        ref.ham_block(4, 1)
