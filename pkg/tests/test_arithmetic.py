from fractions import Fraction

import pytest

from heptagon.arithmetic import (
    apply_aut,
    char_poly_of_multiplication,
    designated_prime,
    designated_primes,
    embed,
    embedded_identity_deviation,
    field_arith,
    is_rational_square,
    norm_closed_form,
    numeric_embed,
    project,
    sqrt_in_rho,
    trace_norm,
    valuation,
)
from heptagon.errors import FieldArithmeticError, NotRealError
from heptagon.fields import K_CLASSES, CycAut, CycNum, RhoNum
from heptagon.settings import get_settings
from heptagon.quadratic import ALL_TAGS, DiscTag, QuadNum, discriminant


def test_field_arith():
    assert field_arith(1, 2, "div") == Fraction(1, 2)
    rho = RhoNum.rho()
    assert field_arith(rho, rho, "mul") == rho * rho
    assert field_arith(rho, 1, "sub") == rho - 1
    with pytest.raises(ValueError):
        field_arith(rho, rho, "pow")
    with pytest.raises(FieldArithmeticError):
        field_arith(rho, 0, "div")


def test_embed_and_project():
    rho = RhoNum.rho()
    assert project(embed(rho)) == rho
    with pytest.raises(NotRealError):
        project(CycNum.omega(3))


def test_trace_norm():
    assert trace_norm(RhoNum.rho()) == (-1, 1)
    assert trace_norm(RhoNum.from_linear(5, 1)) == (14, 91)


def test_norm_closed_form_matches(rng):
    for _ in range(20):
        x, y = rng.randint(-15, 15), rng.randint(-15, 15)
        assert RhoNum.from_linear(x, y).norm() == norm_closed_form(x, y)


def test_minimal_polynomial_of_rho():
    assert char_poly_of_multiplication(RhoNum.rho()) == (1, -2, -1)


def test_char_poly_carries_trace_and_norm(random_rho, trials):
    for _ in range(trials):
        x = random_rho()
        c2, c1, c0 = char_poly_of_multiplication(x)
        assert c2 == -x.trace()
        assert c0 == -x.norm()
        assert x ** 3 + c2 * x ** 2 + c1 * x + c0 == 0


def test_designated_primes():
    primes = designated_primes()
    assert set(primes) == set(ALL_TAGS)
    for k in K_CLASSES:
        assert designated_prime(DiscTag(2, k)) == discriminant(2, k)
        assert designated_prime(DiscTag(3, k)).norm() == 13
    assert designated_prime(DiscTag(3, 4)) == RhoNum.from_linear(3, 1)


def test_valuation():
    pi = designated_prime(DiscTag(3, 1))
    assert valuation(discriminant(3, 1), pi) == 1
    assert valuation(discriminant(3, 1) * pi * pi, pi) == 3
    assert valuation(discriminant(2, 1), pi) == 0


def test_valuation_errors():
    pi = designated_prime(DiscTag(3, 1))
    with pytest.raises(FieldArithmeticError):
        valuation(RhoNum.zero(), pi)
    with pytest.raises(FieldArithmeticError):
        valuation(RhoNum((Fraction(1, 2), 0, 0)), pi)
    with pytest.raises(ValueError):
        valuation(RhoNum.one(), RhoNum.from_linear(5, 1))


def test_is_rational_square():
    assert is_rational_square(Fraction(9, 4))
    assert not is_rational_square(Fraction(8))
    assert not is_rational_square(Fraction(-4))


def test_sqrt_finds_roots():
    x = RhoNum.from_linear(3, 1) ** 2
    result = sqrt_in_rho(x)
    assert result.is_square
    assert result.root * result.root == x


def test_sqrt_of_random_squares(random_rho, trials):
    for _ in range(trials):
        y = random_rho()
        result = sqrt_in_rho(y * y)
        assert result.is_square
        assert result.root in (y, -y)


def test_sqrt_sign_certificate():
    # rho^2 - 2 is a unit, negative under rho -> rho_1
    x = RhoNum((-2, 0, 1))
    assert x.norm() == 1
    result = sqrt_in_rho(x)
    assert not result.is_square
    assert result.certificate.kind == "sign"
    assert result.certificate.embedding == 1
    assert x.numeric(result.certificate.embedding) < 0
    assert "negative" in result.certificate.describe()


def test_sqrt_of_negative_rational():
    result = sqrt_in_rho(RhoNum.from_rat(-4))
    assert result.certificate.kind == "sign"


def test_sqrt_norm_certificate():
    result = sqrt_in_rho(discriminant(2, 1))
    assert not result.is_square
    assert result.certificate.kind == "norm"
    assert result.certificate.norm == 1289


def test_sqrt_valuation_certificate():
    # norm 13^2 is a square but the element is not
    x = designated_prime(DiscTag(3, 1)) * designated_prime(DiscTag(3, 4))
    result = sqrt_in_rho(x)
    assert not result.is_square
    assert result.certificate.kind == "valuation"
    assert result.certificate.valuation == 1
    assert "odd" in result.certificate.describe()


def test_sqrt_of_zero():
    with pytest.raises(FieldArithmeticError):
        sqrt_in_rho(RhoNum.zero())


def test_numeric_embed():
    assert numeric_embed(Fraction(1, 2)) == 0.5
    root = QuadNum.root(DiscTag(2, 1))
    assert abs(numeric_embed(root) - discriminant(2, 1).numeric(1) ** 0.5) < 1e-12


def test_embedded_identities_within_tolerance():
    assert embedded_identity_deviation() <= get_settings().embed_tol


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5, 6])
def test_numeric_embed_is_multiplicative(random_cyc, trials, l):
    tol = get_settings().embed_tol
    for _ in range(trials):
        x, y = random_cyc(), random_cyc()
        product = numeric_embed(x * y, l)
        assert abs(product - numeric_embed(x, l) * numeric_embed(y, l)) <= tol * max(1.0, abs(product))
        total = numeric_embed(x + y, l)
        assert abs(total - numeric_embed(x, l) - numeric_embed(y, l)) <= tol * max(1.0, abs(total))


def test_apply_aut_is_a_ring_map(random_rho, random_cyc, trials):
    for _ in range(trials):
        x, y = random_cyc(), random_cyc()
        a, b = random_rho(), random_rho()
        for aut in (CycAut(3), 5):
            assert apply_aut(aut, x + y) == apply_aut(aut, x) + apply_aut(aut, y)
            assert apply_aut(aut, x * y) == apply_aut(aut, x) * apply_aut(aut, y)
            assert apply_aut(aut, a + b) == apply_aut(aut, a) + apply_aut(aut, b)
            assert apply_aut(aut, a * b) == apply_aut(aut, a) * apply_aut(aut, b)
