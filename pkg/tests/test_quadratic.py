import math

import pytest

from heptagon.errors import FieldArithmeticError, TagMismatchError
from heptagon.fields import CycAut, CycNum, RhoNum
from heptagon.quadratic import ALL_TAGS, DiscTag, QuadNum, discriminant, disc_polynomial


def test_discriminants():
    assert discriminant(2, 1) == RhoNum((16, -1, -3))
    assert discriminant(3, 4) == RhoNum((9, 7, 10))
    assert discriminant(2, -1) == discriminant(2, 1)
    assert discriminant(3, 5) == discriminant(3, 2)
    assert disc_polynomial(3) == (25, -10, -3)


@pytest.mark.parametrize("tag", ALL_TAGS, ids=str)
def test_discriminants_are_totally_positive(tag):
    assert all(tag.value().numeric(l) > 0 for l in (1, 2, 4))


def test_tags():
    assert len(ALL_TAGS) == 6
    assert DiscTag.of(3, -3) == DiscTag(3, 4)
    assert DiscTag(2, 1).moved(2) == DiscTag(2, 2)
    assert DiscTag(2, 2).moved(3) == DiscTag(2, 1)
    assert DiscTag(3, 4).index == 5
    assert str(DiscTag(2, 4)) == "D2^4"
    with pytest.raises(ValueError):
        DiscTag(4, 1)
    with pytest.raises(ValueError):
        DiscTag(2, 3)


def test_root_squares_to_discriminant():
    tag = DiscTag(2, 1)
    root = QuadNum.root(tag)
    assert root * root == tag.value()
    assert (root * root).tag is None


def test_arithmetic_and_inverse():
    tag = DiscTag(3, 2)
    x = QuadNum(RhoNum.from_linear(1, 2), RhoNum.from_linear(-1, 1), tag)
    assert x * x.inverse() == 1
    assert (x + x.root_conjugate()) == 2 * x.a
    assert x * x.root_conjugate() == x.relative_norm()
    assert x ** 2 == x * x


@pytest.mark.parametrize("n", [0, 1, 2, 3, 5, 8, -1, -3])
def test_powers_match_repeated_products(n):
    x = QuadNum(RhoNum.from_linear(2, -1), RhoNum.from_linear(1, 1), DiscTag(2, 4))
    step = x if n >= 0 else x.inverse()
    expected = QuadNum.from_base(1)
    for _ in range(abs(n)):
        expected = expected * step
    assert x ** n == expected


def test_odd_power_of_a_root():
    tag = DiscTag(3, 1)
    root = QuadNum.root(tag)
    assert root ** 5 == root * (tag.value() * tag.value())


def test_zero_inverse():
    with pytest.raises(FieldArithmeticError):
        QuadNum.from_base(0).inverse()


def test_mixed_roots_refused():
    a = QuadNum.root(DiscTag(2, 1))
    b = QuadNum.root(DiscTag(2, 2))
    with pytest.raises(TagMismatchError):
        a + b
    with pytest.raises(TagMismatchError):
        QuadNum(RhoNum.one(), RhoNum.one())


def test_base_promotes_to_cyclotomic():
    root = QuadNum.root(DiscTag(2, 1))
    value = root * CycNum.omega()
    assert value.is_cyc
    assert value.tag == DiscTag(2, 1)
    assert 1 + root == root + 1


def test_apply_moves_the_root():
    root = QuadNum.root(DiscTag(2, 1))
    image = root.apply(CycAut(2), sign=-1)
    assert image == -QuadNum.root(DiscTag(2, 2))
    with pytest.raises(ValueError):
        root.apply(CycAut(2), sign=0)


def test_conjugation_fixes_the_real_root():
    x = QuadNum(CycNum.omega(), CycNum.omega(2), DiscTag(3, 1))
    assert x.conjugate() == QuadNum(CycNum.omega(-1), CycNum.omega(-2), DiscTag(3, 1))


def test_numeric_uses_the_positive_root():
    tag = DiscTag(2, 4)
    expected = math.sqrt(tag.value().numeric(1))
    assert abs(QuadNum.root(tag).numeric(1) - expected) < 1e-12
    assert abs(QuadNum.root(tag).numeric(2) - math.sqrt(tag.value().numeric(2))) < 1e-12
