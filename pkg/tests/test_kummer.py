from heptagon.kummer import (
    certify,
    extension_degree,
    kummer_independence,
    square_class_rank,
    subset_product,
    subsets,
    valuation_matrix,
    verify_lemmas,
    verify_trace_and_norm,
)
from heptagon.quadratic import ALL_TAGS, DiscTag, discriminant


def test_subsets():
    assert len(subsets()) == 63
    assert subsets()[0] == (ALL_TAGS[0],)
    assert subset_product(()) == 1
    assert subset_product((DiscTag(2, 1), DiscTag(3, 1))) == discriminant(2, 1) * discriminant(3, 1)


def test_every_product_is_a_nonsquare():
    certificates = kummer_independence()
    assert len(certificates) == 63
    assert all(c.parity == 1 for c in certificates)
    assert {len(c.subset) for c in certificates} == {1, 2, 3, 4, 5, 6}


def test_witness_is_the_lowest_tag():
    cert = certify((DiscTag(3, 1), DiscTag(2, 1)))
    assert cert.witness == DiscTag(2, 1)
    assert cert.valuation == 1
    assert "v_pi[D2^1] = 1" in cert.describe()


def test_valuation_matrix_is_identity():
    matrix = valuation_matrix()
    assert len(matrix) == 36
    assert all(v == (1 if i == j else 0) for (i, j), v in matrix.items())


def test_extension_degrees():
    assert square_class_rank(ALL_TAGS) == 6
    assert extension_degree() == 64
    assert extension_degree([DiscTag(2, 1)]) == 2
    assert extension_degree([DiscTag(3, k) for k in (1, 2, 4)]) == 8


def test_lemmas_hold():
    checks = verify_lemmas()
    failed = [c.name for c in checks if not c.passed]
    assert failed == []
    assert all(c.section == 5 for c in checks)
    names = {c.name for c in checks}
    assert {"norm_D2_1", "7553_factors", "valuation_matrix_identity", "nonsquare_D3^4"} <= names
    flagged = [c.name for c in checks if c.flagged]
    assert flagged == ["factor_D3_4"]


def test_trace_and_norm_checks():
    checks = verify_trace_and_norm()
    assert all(c.passed for c in checks)
    assert all(c.section == 3 for c in checks)
    assert sorted(c.name for c in checks if c.flagged) == [
        "project_rho_2_printed",
        "trace_rho_squared_printed",
    ]
