"""
Dense exact linear algebra over any of the supported fields.

Entries may be Fractions, RhoNums, CycNums or QuadNums; the routines only
use field operations and comparison with zero, so a matrix over Q(w7) and a
matrix over Q share the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .errors import MatrixShapeError
from .fields import conjugate

ZERO = Fraction(0)
ONE = Fraction(1)


def _nonzero(x) -> bool:
    return not (x == 0)


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """
    Immutable matrix with optional row/column labels.

    Attributes:
        rows: Tuple of row tuples
        row_labels: Labels for rows (orbit t-vectors, configurations, ...)
        col_labels: Labels for columns
    """

    rows: Tuple[tuple, ...]
    row_labels: Optional[tuple] = None
    col_labels: Optional[tuple] = field(default=None)

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise MatrixShapeError(f"ragged rows with widths {sorted(widths)}")
        object.__setattr__(self, "rows", rows)
        if self.row_labels is not None and len(self.row_labels) != len(rows):
            raise MatrixShapeError("row label count does not match")
        if self.col_labels is not None and rows and len(self.col_labels) != len(rows[0]):
            raise MatrixShapeError("column label count does not match")

    # -- construction -------------------------------------------------------

    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None, **labels) -> "ExactMatrix":
        m = n if m is None else m
        return cls(tuple((ZERO,) * m for _ in range(n)), **labels)

    @classmethod
    def identity(cls, n: int, **labels) -> "ExactMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), **labels)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], **labels) -> "ExactMatrix":
        if not columns:
            raise MatrixShapeError("at least one column is required")
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise MatrixShapeError("columns of different lengths")
        return cls(tuple(tuple(c[i] for c in columns) for i in range(n)), **labels)

    @classmethod
    def column_vector(cls, values: Sequence) -> "ExactMatrix":
        return cls(tuple((v,) for v in values))

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    def with_labels(self, row_labels=None, col_labels=None) -> "ExactMatrix":
        return ExactMatrix(self.rows, row_labels, col_labels)

    # -- shape and access ---------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> List[tuple]:
        return [self.column(j) for j in range(self.shape[1])]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def entries(self) -> Iterable:
        for r in self.rows:
            yield from r

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise MatrixShapeError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.row_labels, self.col_labels,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.row_labels, self.col_labels,
        )

    def __neg__(self) -> "ExactMatrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "ExactMatrix":
        return self.map(lambda x: c * x)

    def __mul__(self, c) -> "ExactMatrix":
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.map(lambda x: x * c)

    def __rmul__(self, c) -> "ExactMatrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise MatrixShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if _nonzero(a)]
            row = []
            for c in cols:
                acc = ZERO
                for k, a in nz:
                    b = c[k]
                    if _nonzero(b):
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix(tuple(out), self.row_labels, other.col_labels)

    def power(self, exponent: int) -> "ExactMatrix":
        if not self.is_square or exponent < 0:
            raise MatrixShapeError("power needs a square matrix and exponent >= 0")
        result = ExactMatrix.identity(self.shape[0])
        for _ in range(exponent):
            result = result @ self
        return result

    def map(self, f: Callable) -> "ExactMatrix":
        return ExactMatrix(
            tuple(tuple(f(x) for x in r) for r in self.rows),
            self.row_labels, self.col_labels,
        )

    def transpose(self) -> "ExactMatrix":
        n, m = self.shape
        return ExactMatrix(
            tuple(tuple(self.rows[i][j] for i in range(n)) for j in range(m)),
            self.col_labels, self.row_labels,
        )

    def conjugate(self) -> "ExactMatrix":
        return self.map(conjugate_entry)

    def dagger(self) -> "ExactMatrix":
        """Conjugate transpose, with tau_-1 applied to each entry."""
        return self.transpose().conjugate()

    def trace(self):
        if not self.is_square:
            raise MatrixShapeError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.shape[0]):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return not any(_nonzero(x) for x in self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.entries(), other.entries())
        )

    __hash__ = None

    def hconcat(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[0] != other.shape[0]:
            raise MatrixShapeError("hconcat needs equal row counts")
        return ExactMatrix(tuple(r + s for r, s in zip(self.rows, other.rows)))

    def vconcat(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[1] != other.shape[1]:
            raise MatrixShapeError("vconcat needs equal column counts")
        return ExactMatrix(self.rows + other.rows)

    # -- elimination --------------------------------------------------------

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        n, m = self.shape
        pivots: List[int] = []
        lead = 0
        for col in range(m):
            if lead >= n:
                break
            pivot_row = next((i for i in range(lead, n) if _nonzero(rows[i][col])), None)
            if pivot_row is None:
                continue
            rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
            inv = ONE / rows[lead][col]
            rows[lead] = [x * inv for x in rows[lead]]
            for i in range(n):
                if i != lead and _nonzero(rows[i][col]):
                    factor = rows[i][col]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[lead])]
            pivots.append(col)
            lead += 1
        return ExactMatrix(tuple(tuple(r) for r in rows)), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List[tuple]:
        """Basis of {x : A x = 0}, one tuple per vector, free variables set to 1."""
        reduced, pivots = self.rref()
        n, m = self.shape
        free = [j for j in range(m) if j not in pivots]
        basis = []
        for f in free:
            vec = [ZERO] * m
            vec[f] = ONE
            for i, p in enumerate(pivots):
                vec[p] = -reduced.rows[i][f]
            basis.append(tuple(vec))
        return basis

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """
        Solve A X = B for A with full column rank; the system may be
        overdetermined but must be consistent.

        Raises:
            MatrixShapeError: Rank-deficient A or inconsistent system.
        """
        n, m = self.shape
        if rhs.shape[0] != n:
            raise MatrixShapeError(f"rhs has {rhs.shape[0]} rows, expected {n}")
        augmented = self.hconcat(rhs)
        reduced, pivots = augmented.rref()
        if pivots[:m] != list(range(m)) or any(p >= m for p in pivots):
            raise MatrixShapeError("system is singular or inconsistent")
        return ExactMatrix(
            tuple(reduced.rows[i][m:] for i in range(m)),
            self.col_labels, rhs.col_labels,
        )

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise MatrixShapeError("inverse of a non-square matrix")
        inv = self.solve(ExactMatrix.identity(self.shape[0]))
        return ExactMatrix(inv.rows, self.col_labels, self.row_labels)

    def charpoly(self) -> List:
        """
        Coefficients [1, c_{n-1}, ..., c_0] of det(t*I - A) by the
        Faddeev-LeVerrier recursion.
        """
        if not self.is_square:
            raise MatrixShapeError("characteristic polynomial of a non-square matrix")
        n = self.shape[0]
        coeffs = [ONE]
        m = ExactMatrix.zeros(n)
        ident = ExactMatrix.identity(n)
        c = ONE
        for k in range(1, n + 1):
            m = self @ m + ident.scale(c)
            am = self @ m
            c = -am.trace() / k
            coeffs.append(c)
        return coeffs

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def conjugate_entry(x):
    return conjugate(x)


def direct_sum(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    """Block-diagonal matrix with the given square blocks in order."""
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        bn, bm = b.shape
        for r in b.rows:
            rows.append((ZERO,) * offset + tuple(r) + (ZERO,) * (m - offset - bm))
        offset += bm
    if len(rows) != n:
        raise MatrixShapeError("direct sum bookkeeping failed")
    return ExactMatrix(tuple(rows))


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return ExactMatrix.from_columns(vectors).rank()


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """True if two families of column vectors span the same space."""
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def span_intersection(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[tuple]:
    """Basis of span(a) ∩ span(b) via the kernel of [A | -B]."""
    if not a or not b:
        return []
    ma = ExactMatrix.from_columns(a)
    mb = ExactMatrix.from_columns(b)
    kernel = ma.hconcat(-mb).nullspace()
    na = len(a)
    images = [ma @ ExactMatrix.column_vector(v[:na]) for v in kernel]
    vectors = [img.column(0) for img in images]
    if not vectors:
        return []
    reduced, pivots = ExactMatrix.from_columns(vectors).rref()
    return [vectors[p] for p in pivots]


def inner(u: Sequence, v: Sequence):
    """<u, v> = sum conj(u_i) v_i."""
    acc = ZERO
    for a, b in zip(u, v):
        if _nonzero(a) and _nonzero(b):
            acc = acc + conjugate_entry(a) * b
    return acc
