"""
JSON schemas for everything the CLI prints or exports.

Field elements serialize as {"field": ..., "coeffs": ["p/q", ...], "tag": ...}.
For "quad" the coefficient list is the base part followed by the root
coefficient, 3 + 3 entries over Q(rho) or 6 + 6 over Q(w7).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .fields import CycNum, RhoNum, format_rat, to_rat
from .linalg import ExactMatrix
from .qubits import SpectrumRecord
from .quadratic import DiscTag, QuadNum

FieldName = Literal["Q", "Q(rho)", "Q(w7)", "quad"]


class TagModel(BaseModel):
    """Discriminant label Delta_{rp}^k."""

    rp: Literal[2, 3]
    k: Literal[1, 2, 4]

    @classmethod
    def from_tag(cls, tag: DiscTag) -> "TagModel":
        return cls(rp=tag.r_prime, k=tag.k_class)

    def to_tag(self) -> DiscTag:
        return DiscTag(self.rp, self.k)


def _rats(values) -> List[str]:
    return [format_rat(Fraction(v)) for v in values]


class FieldElementModel(BaseModel):
    """
    Exact element of Q, Q(rho), Q(w7) or a tagged quadratic extension.

    Attributes:
        field: Field name
        coeffs: Exact rational coefficients rendered "p/q"
        tag: Discriminant under the root ("quad" only)
    """

    field: FieldName
    coeffs: List[str]
    tag: Optional[TagModel] = None

    @field_validator("coeffs")
    @classmethod
    def _exact_strings(cls, value: List[str]) -> List[str]:
        for item in value:
            to_rat(item)
        return value

    @classmethod
    def from_element(cls, x) -> "FieldElementModel":
        if isinstance(x, QuadNum):
            a, b = x.a, x.b
            coeffs = _rats(a.coeffs) + _rats(b.coeffs)
            tag = TagModel.from_tag(x.tag) if x.tag is not None else None
            return cls(field="quad", coeffs=coeffs, tag=tag)
        if isinstance(x, CycNum):
            return cls(field="Q(w7)", coeffs=_rats(x.coeffs))
        if isinstance(x, RhoNum):
            return cls(field="Q(rho)", coeffs=_rats(x.coeffs))
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return cls(field="Q", coeffs=_rats([x]))
        raise TypeError(f"Cannot serialize {type(x).__name__} as a field element")

    def to_element(self):
        """
        Raises:
            ValueError: Coefficient count does not fit the field
        """
        values = [to_rat(c) for c in self.coeffs]
        if self.field == "Q":
            if len(values) != 1:
                raise ValueError("Q elements carry one coefficient")
            return values[0]
        if self.field == "Q(rho)":
            return RhoNum(tuple(values))
        if self.field == "Q(w7)":
            return CycNum(tuple(values))
        base = {6: RhoNum, 12: CycNum}.get(len(values))
        if base is None:
            raise ValueError(f"quad elements carry 6 or 12 coefficients, got {len(values)}")
        half = len(values) // 2
        tag = self.tag.to_tag() if self.tag is not None else None
        return QuadNum(base(tuple(values[:half])), base(tuple(values[half:])), tag)


class EnergyModel(BaseModel):
    """Energy base + root_coeff * sqrt(disc) with base, root_coeff in Q(rho)."""

    base: FieldElementModel
    root_coeff: FieldElementModel
    disc: Optional[TagModel] = None

    @classmethod
    def from_energy(cls, energy: QuadNum) -> "EnergyModel":
        return cls(
            base=FieldElementModel.from_element(energy.a),
            root_coeff=FieldElementModel.from_element(energy.b),
            disc=TagModel.from_tag(energy.tag) if energy.tag is not None else None,
        )

    def to_energy(self) -> QuadNum:
        tag = self.disc.to_tag() if self.disc is not None else None
        return QuadNum(self.base.to_element(), self.root_coeff.to_element(), tag)


class SpectrumRecordModel(BaseModel):
    k: int = Field(ge=-3, le=3)
    r: int
    r_prime: int = Field(alias="rPrime")
    nu: Optional[int] = None
    energy: EnergyModel
    energy_float: float = Field(alias="energyFloat")
    multiplicity: int

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def from_record(cls, rec: SpectrumRecord) -> "SpectrumRecordModel":
        return cls(
            k=rec.k,
            r=rec.r,
            r_prime=rec.r_prime,
            nu=rec.nu,
            energy=EnergyModel.from_energy(rec.energy_exact),
            energy_float=rec.energy_float,
            multiplicity=rec.multiplicity,
        )

    def to_record(self) -> SpectrumRecord:
        return SpectrumRecord(
            k=self.k,
            r=self.r,
            r_prime=self.r_prime,
            nu=self.nu,
            energy_exact=self.energy.to_energy(),
            energy_float=self.energy_float,
            multiplicity=self.multiplicity,
        )


def _labels(labels) -> Optional[List[str]]:
    return [str(x) for x in labels] if labels is not None else None


class MatrixModel(BaseModel):
    """Dense exact matrix with optional string labels."""

    rows: List[List[FieldElementModel]]
    row_labels: Optional[List[str]] = Field(default=None, alias="rowLabels")
    col_labels: Optional[List[str]] = Field(default=None, alias="colLabels")

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def from_matrix(cls, m: ExactMatrix) -> "MatrixModel":
        return cls(
            rows=[[FieldElementModel.from_element(x) for x in row] for row in m.rows],
            row_labels=_labels(m.row_labels),
            col_labels=_labels(m.col_labels),
        )

    def to_matrix(self) -> ExactMatrix:
        rows = tuple(tuple(x.to_element() for x in row) for row in self.rows)
        return ExactMatrix(rows)


class WreathElementModel(BaseModel):
    """
    Group element {"eps": [[e21, e22, e24], [e31, e32, e34]], "l": l}.
    """

    eps: List[List[int]] = Field(min_length=2, max_length=2)
    l: int

    @field_validator("eps")
    @classmethod
    def _sign_rows(cls, value: List[List[int]]) -> List[List[int]]:
        for row in value:
            if len(row) != 3 or any(e not in (1, -1) for e in row):
                raise ValueError("each eps row needs three entries from {+1, -1}")
        return value

    @field_validator("l")
    @classmethod
    def _unit(cls, value: int) -> int:
        if value % 7 == 0:
            raise ValueError("l must be a unit modulo 7")
        return value % 7

    def to_element(self):
        from .galois import WreathElement

        return WreathElement(tuple(tuple(row) for row in self.eps), self.l)

    @classmethod
    def from_element(cls, g) -> "WreathElementModel":
        return cls(eps=[list(row) for row in g.eps], l=g.l)


class CheckResult(BaseModel):
    """
    One named verification.

    Attributes:
        name: Stable check identifier
        passed: Outcome
        expected: Rendering of the expected value
        actual: Rendering of the computed value
        anchor: Where the checked statement comes from
        section: Report section 2..7
        flagged: Printed value known to differ from the exact one
    """

    name: str
    passed: bool
    expected: str = ""
    actual: str = ""
    anchor: str = ""
    section: int = Field(ge=2, le=7)
    flagged: bool = False

    @classmethod
    def record(
        cls, name: str, passed: bool, expected="", actual="", anchor: str = "",
        section: int = 4, flagged: bool = False,
    ) -> "CheckResult":
        """Build a result, rendering expected and actual values with str()."""
        return cls(
            name=name,
            passed=bool(passed),
            expected=str(expected),
            actual=str(actual),
            anchor=anchor,
            section=section,
            flagged=flagged,
        )


class VerifyReportModel(BaseModel):
    checks: List[CheckResult]
    total: int
    failed: int
    flagged: int


class ExportBundle(BaseModel):
    """Everything ``export`` writes for one quasimomentum."""

    k: int
    spectrum: List[SpectrumRecordModel]
    fourier_blocks: Dict[str, MatrixModel] = Field(alias="fourierBlocks")
    s_blocks: Dict[str, MatrixModel] = Field(alias="sBlocks")
    qubit_hamiltonians: Dict[str, MatrixModel] = Field(alias="qubitHamiltonians")
    projectors: Dict[str, MatrixModel]
    density_matrices: Dict[str, MatrixModel] = Field(alias="densityMatrices")

    model_config = ConfigDict(populate_by_name=True)
