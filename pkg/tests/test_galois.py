import pytest

from heptagon.errors import GroupError
from heptagon.fields import CycNum, RhoNum
from heptagon.galois import (
    EXPECTED_ORDERS,
    VARIANT_NAMES,
    WreathElement,
    act_on_element,
    act_on_operator,
    act_on_spectrum,
    act_on_subfield,
    check_group,
    check_lattices,
    check_operator_actions,
    cyclotomic_lattice,
    density_label_permutation,
    enumerate_group,
    heisenberg_lattice,
    in_variant,
    kummer_pairing,
    pairing_is_perfect,
    spectrum_action_consistent,
    variant,
    wreath_mul,
)
from heptagon.model import s_block
from heptagon.quadratic import ALL_TAGS, DiscTag, QuadNum


@pytest.mark.parametrize("name", VARIANT_NAMES)
def test_group_orders(name):
    group = variant(name)
    elements = enumerate_group(group)
    assert len(elements) == group.order == EXPECTED_ORDERS[name]
    assert len(set(elements)) == len(elements)


@pytest.mark.parametrize("name", ["real", "complex", "real-total"])
def test_group_axioms(name):
    result = check_group(variant(name))
    assert result.passed
    assert result.order == EXPECTED_ORDERS[name]


def test_variants():
    assert variant("complex").is_complex
    assert not variant("real-total").is_complex
    assert variant("real", r_prime=3).rows == (3,)
    with pytest.raises(GroupError):
        variant("affine")
    with pytest.raises(GroupError):
        variant("real", r_prime=4)


def test_element_validation():
    with pytest.raises(GroupError):
        WreathElement(((1, 1, 1), (1, 1, 2)), 1)
    with pytest.raises(GroupError):
        WreathElement(((1, 1, 1),), 1)
    with pytest.raises(GroupError):
        WreathElement.from_signs(l=7)


def test_signs_follow_k_classes():
    g = WreathElement.from_signs(l=1, e21=-1, e34=-1)
    assert g.sign(2, 1) == g.sign(2, -1) == g.sign(2, 6) == -1
    assert g.sign(2, 2) == 1
    assert g.sign(3, 3) == -1
    assert g.tag_sign(DiscTag(3, 4)) == -1


def test_product_and_inverse(rng):
    elements = enumerate_group(variant("complex-total"))
    ident = WreathElement.identity()
    for _ in range(30):
        g, h, f = (rng.choice(elements) for _ in range(3))
        assert (g * h) * f == g * (h * f)
        assert g * g.inverse() == ident
        assert (g * h).l == g.l * h.l % 7
    assert ident.is_identity()


def test_membership():
    real = variant("real")
    assert in_variant(WreathElement.from_signs(l=2, e24=-1), real)
    assert not in_variant(WreathElement.from_signs(l=3), real)
    assert not in_variant(WreathElement.from_signs(l=1, e31=-1), real)
    with pytest.raises(GroupError):
        wreath_mul(WreathElement.from_signs(l=3), WreathElement.identity(), real)


def test_action_on_roots():
    root = QuadNum.root(DiscTag(2, 1))
    assert act_on_element(WreathElement.from_signs(l=2), root) == QuadNum.root(DiscTag(2, 2))
    assert act_on_element(WreathElement.from_signs(l=1, e21=-1), root) == -root
    conj = WreathElement.from_signs(l=6)
    assert act_on_element(conj, root) == root
    assert act_on_element(conj, CycNum.omega()) == CycNum.omega(-1)
    assert act_on_element(conj, RhoNum.rho()) == RhoNum.rho()
    with pytest.raises(TypeError):
        act_on_element(conj, "w")


def test_action_is_a_homomorphism(rng):
    elements = enumerate_group(variant("complex-total"))
    x = QuadNum(CycNum.omega(2), CycNum.omega(3) + 1, DiscTag(3, 2))
    for _ in range(10):
        g, h = rng.choice(elements), rng.choice(elements)
        assert act_on_element(g * h, x) == act_on_element(g, act_on_element(h, x))


def test_action_respects_field_operations(rng, trials, random_rho, random_cyc):
    elements = enumerate_group(variant("complex-total"))
    for _ in range(trials):
        g = rng.choice(elements)
        tag = rng.choice(ALL_TAGS)
        for draw in (random_rho, random_cyc):
            x = QuadNum(draw(), draw(), tag)
            y = QuadNum(draw(), draw(), tag)
            assert act_on_element(g, x * y) == act_on_element(g, x) * act_on_element(g, y)
            assert act_on_element(g, x + y) == act_on_element(g, x) + act_on_element(g, y)


def test_action_on_lowering_blocks():
    g = WreathElement.from_signs(l=3)
    assert act_on_operator(g, s_block(2, 1, 1)) == s_block(2, 1, 3)


def test_identity_fixes_the_spectrum():
    perm = act_on_spectrum(WreathElement.identity())
    assert perm.is_identity
    assert perm.cycles() == []


def test_frobenius_three_cycles():
    cycles = act_on_spectrum(WreathElement.from_signs(l=2)).cycles()
    assert len(cycles) == 10
    assert all(len(c) == 3 for c in cycles)
    assert ((1, 2, 1), (2, 2, 1), (-3, 2, 1)) in cycles


def test_sign_swaps_two_magnon_levels():
    cycles = act_on_spectrum(WreathElement.from_signs(l=1, e21=-1)).cycles()
    assert cycles == [((-1, 2, 1), (-1, 2, -1)), ((1, 2, 1), (1, 2, -1))]


@pytest.mark.parametrize("g", [
    WreathElement.from_signs(l=2, e22=-1),
    WreathElement.from_signs(l=6, e31=-1, e34=-1),
    WreathElement.from_signs(l=3, e21=-1, e32=-1),
], ids=str)
def test_spectrum_action_is_consistent(g):
    assert spectrum_action_consistent(g)


def test_operator_actions():
    elements = [
        WreathElement.from_signs(l=3, e21=-1),
        WreathElement.from_signs(l=4, e32=-1, e24=-1),
    ]
    result = check_operator_actions(elements)
    assert result.passed


def test_density_labels():
    g = WreathElement.from_signs(l=1, e22=-1)
    perm = density_label_permutation(g)
    assert perm[(2, 2, 1, 2)] == (2, 2, -1, 2)
    assert perm[(3, 3, 1, 1)] == (3, 3, 1, 1)
    assert perm[(4, 2, 1, 0)] == (4, 2, 1, 0)


def test_lattices():
    assert [n.degree for n in cyclotomic_lattice()] == [1, 2, 3, 6]
    real = heisenberg_lattice()
    assert len(real) == 10
    assert real[-1].degree == 192
    assert heisenberg_lattice(True)[-1].degree == 384
    for name, (declared, verified) in check_lattices().items():
        assert declared == verified, name


def test_subfield_action():
    node = next(n for n in heisenberg_lattice() if n.name == "H^1_2,E")
    assert act_on_subfield(WreathElement.from_signs(l=2), node).name == "H^2_2,E"
    assert act_on_subfield(WreathElement.from_signs(l=6), node).name == "H^1_2,E"
    top = heisenberg_lattice()[-1]
    assert act_on_subfield(WreathElement.from_signs(l=3), top) is top


def test_kummer_pairing():
    g = WreathElement.from_signs(l=1, e21=-1)
    assert kummer_pairing(WreathElement.identity(), (1, 1, 1, 1, 1, 1)) == 1
    assert kummer_pairing(g, (1, 0, 0, 0, 0, 0)) == -1
    assert kummer_pairing(g, (2, 0, 0, 0, 0, 0)) == 1
    with pytest.raises(ValueError):
        kummer_pairing(g, (1, 0))
    assert pairing_is_perfect()
