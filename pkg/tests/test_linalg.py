from fractions import Fraction

import pytest

from heptagon.errors import MatrixShapeError
from heptagon.fields import CycNum
from heptagon.linalg import ExactMatrix, direct_sum, inner, same_span, span_intersection, span_rank

F = Fraction


def test_shapes_and_labels():
    m = ExactMatrix(((1, 2, 3), (4, 5, 6)), ("a", "b"), ("x", "y", "z"))
    assert m.shape == (2, 3)
    assert m.column(1) == (2, 5)
    assert m.transpose().shape == (3, 2)
    assert m == ExactMatrix(((1, 2, 3), (4, 5, 6)))
    with pytest.raises(MatrixShapeError):
        ExactMatrix(((1, 2), (3,)))
    with pytest.raises(MatrixShapeError):
        ExactMatrix(((1, 2),), row_labels=("a", "b"))


def test_inverse_and_solve():
    a = ExactMatrix(((F(2), F(1)), (F(1), F(1))))
    assert a @ a.inverse() == ExactMatrix.identity(2)
    x = a.solve(ExactMatrix.column_vector((F(3), F(2))))
    assert x.column(0) == (1, 1)
    with pytest.raises(MatrixShapeError):
        ExactMatrix(((F(1), F(1)), (F(1), F(1)))).inverse()


def test_rank_and_nullspace():
    m = ExactMatrix(((F(1), F(2), F(3)), (F(2), F(4), F(6))))
    assert m.rank() == 1
    kernel = m.nullspace()
    assert len(kernel) == 2
    for v in kernel:
        assert (m @ ExactMatrix.column_vector(v)).is_zero()


def test_charpoly():
    a = ExactMatrix(((F(2), F(1)), (F(1), F(2))))
    assert a.charpoly() == [1, -4, 3]


def test_dagger_over_cyclotomic():
    w = CycNum.omega()
    m = ExactMatrix(((w, 1), (0, w * w)))
    d = m.dagger()
    assert d[0, 0] == CycNum.omega(-1)
    assert d[0, 1] == 0
    assert d[1, 0] == 1
    assert m.dagger().dagger() == m


def test_direct_sum():
    a = ExactMatrix.identity(2)
    b = ExactMatrix(((F(5),),))
    s = direct_sum([a, b])
    assert s.shape == (3, 3)
    assert s[2, 2] == 5
    assert s[0, 2] == 0


def test_spans():
    u = [(F(1), F(0), F(0)), (F(0), F(1), F(0))]
    v = [(F(1), F(1), F(0)), (F(1), F(-1), F(0))]
    w = [(F(0), F(1), F(1))]
    assert span_rank(u) == 2
    assert same_span(u, v)
    assert not same_span(u, w)
    meet = span_intersection(u, w + [(F(1), F(0), F(0))])
    assert len(meet) == 1
    assert span_intersection(u, []) == []


def test_inner_is_sesquilinear():
    w = CycNum.omega()
    assert inner((w,), (w,)) == 1
    assert inner((F(2), F(1)), (F(1), F(3))) == 5
