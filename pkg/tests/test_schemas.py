from fractions import Fraction

import pytest
from pydantic import ValidationError

from heptagon.fields import CycNum, RhoNum
from heptagon.galois import WreathElement
from heptagon.model import fourier_block
from heptagon.quadratic import DiscTag, QuadNum
from heptagon.qubits import full_spectrum
from heptagon.schemas import (
    CheckResult,
    FieldElementModel,
    MatrixModel,
    SpectrumRecordModel,
    TagModel,
    WreathElementModel,
)


def test_field_elements():
    model = FieldElementModel.from_element(RhoNum.rho())
    assert model.field == "Q(rho)"
    assert model.coeffs == ["0/1", "1/1", "0/1"]
    assert model.to_element() == RhoNum.rho()
    assert FieldElementModel.from_element(Fraction(-3, 4)).coeffs == ["-3/4"]
    assert FieldElementModel.from_element(CycNum.omega()).to_element() == CycNum.omega()


def test_quad_layout_is_base_then_root():
    x = QuadNum(RhoNum.from_linear(1, 2), RhoNum.from_rat(Fraction(1, 2)), DiscTag(2, 4))
    model = FieldElementModel.from_element(x)
    assert model.field == "quad"
    assert model.coeffs == ["1/1", "2/1", "0/1", "1/2", "0/1", "0/1"]
    assert model.tag == TagModel(rp=2, k=4)
    assert model.to_element() == x


def test_field_element_errors():
    with pytest.raises(ValidationError):
        FieldElementModel(field="Q", coeffs=["one"])
    with pytest.raises(ValidationError):
        FieldElementModel(field="R", coeffs=["1"])
    with pytest.raises(ValueError):
        FieldElementModel(field="Q", coeffs=["1", "2"]).to_element()
    with pytest.raises(ValueError):
        FieldElementModel(field="quad", coeffs=["1"] * 4).to_element()
    with pytest.raises(TypeError):
        FieldElementModel.from_element(0.5)


def test_spectrum_record_uses_aliases():
    rec = next(r for r in full_spectrum() if r.k == 1 and r.r_prime == 2)
    model = SpectrumRecordModel.from_record(rec)
    data = model.model_dump(by_alias=True)
    assert data["rPrime"] == 2
    assert data["energy"]["disc"] == {"rp": 2, "k": 1}
    assert model.to_record().energy_exact == rec.energy_exact


def test_matrix_model():
    m = fourier_block(2, 1)
    model = MatrixModel.from_matrix(m)
    assert model.row_labels == ["(1, 6)", "(2, 5)", "(3, 4)"]
    assert model.to_matrix() == m
    assert "rowLabels" in model.model_dump(by_alias=True)


def test_wreath_element_model():
    model = WreathElementModel.model_validate_json('{"eps": [[1, -1, 1], [1, 1, 1]], "l": 9}')
    assert model.l == 2
    g = model.to_element()
    assert g == WreathElement.from_signs(l=2, e22=-1)
    assert WreathElementModel.from_element(g) == model
    with pytest.raises(ValidationError):
        WreathElementModel.model_validate_json('{"eps": [[1, 1, 1], [1, 1, 0]], "l": 1}')
    with pytest.raises(ValidationError):
        WreathElementModel.model_validate_json('{"eps": [[1, 1, 1], [1, 1, 1]], "l": 14}')
    with pytest.raises(ValidationError):
        WreathElementModel.model_validate_json('{"eps": [[1, 1, 1]], "l": 1}')


def test_check_result():
    check = CheckResult.record("x", 1, expected=(1, 2), actual=3, section=6)
    assert check.passed is True
    assert check.expected == "(1, 2)"
    assert check.actual == "3"
    with pytest.raises(ValidationError):
        CheckResult.record("x", True, section=8)
