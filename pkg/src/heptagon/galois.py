"""
Galois groups of the heptagon field tower and their actions.

Main functional areas:
1. Wreath products: elements (eps; tau_l), composition, enumeration of the
   four variants C2 wr C3, (C2xC2) wr C3, C2 wr C6, (C2xC2) wr C6
2. Actions: on field elements, vectors, matrices and the spectrum
3. Subfield lattices and the Kummer pairing

An element (eps; tau_l) sends sqrt(Delta_{r'}^k) to eps[r'][k] * sqrt(Delta_{r'}^{lk})
and acts on Q(w7) by tau_l. Composition is
    (eps; l) * (eps'; l') = (k -> eps[l'k] * eps'[k]; l l')
so that (g * h)(x) = g(h(x)).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import GroupError
from .fields import (
    K_CLASSES,
    ORDER,
    UNITS,
    CycAut,
    CycNum,
    RhoNum,
    brillouin,
    k_class,
)
from .kummer import extension_degree
from .linalg import ExactMatrix
from .model import N_NODES, s_block
from .quadratic import ALL_TAGS, DiscTag, QuadNum
from .qubits import QUBIT_WEIGHTS, SpectrumRecord, density_matrices, full_spectrum, projectors

logger = logging.getLogger(__name__)

Signs = Tuple[Tuple[int, int, int], Tuple[int, int, int]]

_ROW = {2: 0, 3: 1}
_COL = {1: 0, 2: 1, 4: 2}
_TRIVIAL_ROW = (1, 1, 1)


# ============================================================================
# WREATH PRODUCTS
# ============================================================================

@dataclass(frozen=True)
class WreathVariant:
    """
    One of the four groups acting on the tower.

    Attributes:
        name: Identifier used on the command line
        units: Allowed automorphism indices l
        rows: Magnon weights r' whose signs may be nontrivial
    """

    name: str
    units: Tuple[int, ...]
    rows: Tuple[int, ...]

    @property
    def order(self) -> int:
        return 2 ** (len(K_CLASSES) * len(self.rows)) * len(self.units)

    @property
    def is_complex(self) -> bool:
        return len(self.units) == len(UNITS)


def variant(name: str, r_prime: int = 2) -> WreathVariant:
    """
    Look up a variant; the one-row groups act on the roots of weight r_prime.

    Raises:
        GroupError: Unknown name or weight
    """
    if r_prime not in QUBIT_WEIGHTS:
        raise GroupError(f"r' must be 2 or 3, got {r_prime}")
    table = {
        "real": (K_CLASSES, (r_prime,)),
        "real-total": (K_CLASSES, QUBIT_WEIGHTS),
        "complex": (UNITS, (r_prime,)),
        "complex-total": (UNITS, QUBIT_WEIGHTS),
    }
    if name not in table:
        raise GroupError(f"unknown group {name!r}; expected one of {sorted(table)}")
    units, rows = table[name]
    return WreathVariant(name, units, rows)


VARIANT_NAMES = ("real", "real-total", "complex", "complex-total")


@dataclass(frozen=True)
class WreathElement:
    """
    Group element (eps; tau_l).

    Attributes:
        eps: Sign rows for r' = 2 and r' = 3, columns k-classes 1, 2, 4
        l: Unit modulo 7
    """

    eps: Signs
    l: int

    def __post_init__(self) -> None:
        eps = tuple(tuple(int(e) for e in row) for row in self.eps)
        if len(eps) != 2 or any(len(row) != 3 for row in eps):
            raise GroupError("eps must be a 2x3 sign matrix")
        if any(e not in (1, -1) for row in eps for e in row):
            raise GroupError("eps entries must be +1 or -1")
        l = self.l % ORDER
        if l == 0:
            raise GroupError("l must be a unit modulo 7")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "l", l)

    @classmethod
    def identity(cls) -> "WreathElement":
        return cls((_TRIVIAL_ROW, _TRIVIAL_ROW), 1)

    @classmethod
    def from_signs(cls, l: int = 1, **signs: int) -> "WreathElement":
        """
        Build from keyword signs ``e21``, ``e34``, ...; unspecified signs are +1.

        Example:
            WreathElement.from_signs(l=1, e21=-1)
        """
        eps = [list(_TRIVIAL_ROW), list(_TRIVIAL_ROW)]
        for key, value in signs.items():
            rp, kc = int(key[1]), int(key[2:])
            eps[_ROW[rp]][_COL[kc]] = value
        return cls((tuple(eps[0]), tuple(eps[1])), l)

    def sign(self, r_prime: int, k: int) -> int:
        """eps_{r', [k]} for any nonzero k."""
        return self.eps[_ROW[r_prime]][_COL[k_class(k)]]

    def tag_sign(self, tag: DiscTag) -> int:
        return self.sign(tag.r_prime, tag.k_class)

    @property
    def aut(self) -> CycAut:
        return CycAut(self.l)

    @property
    def l_class(self) -> int:
        """phi(l): the class of +-l in {1, 2, 4}."""
        return k_class(self.l)

    def is_identity(self) -> bool:
        return self == WreathElement.identity()

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if not isinstance(other, WreathElement):
            return NotImplemented
        rows = []
        for rp in QUBIT_WEIGHTS:
            rows.append(tuple(
                self.sign(rp, other.l * k) * other.sign(rp, k) for k in K_CLASSES
            ))
        return WreathElement(tuple(rows), self.l * other.l)

    def inverse(self) -> "WreathElement":
        l_inv = pow(self.l, -1, ORDER)
        rows = tuple(
            tuple(self.sign(rp, l_inv * k) for k in K_CLASSES) for rp in QUBIT_WEIGHTS
        )
        return WreathElement(rows, l_inv)

    def signed_permutation(self) -> Tuple[Tuple[int, int], ...]:
        """(target index, sign) of each root sqrt(Delta) in ``ALL_TAGS`` order."""
        return tuple(
            (tag.moved(self.l).index, self.tag_sign(tag)) for tag in ALL_TAGS
        )

    def to_dict(self) -> Dict[str, object]:
        return {"eps": [list(row) for row in self.eps], "l": self.l}

    def __str__(self) -> str:
        rows = "; ".join(",".join(f"{e:+d}" for e in row) for row in self.eps)
        return f"({rows}; tau_{self.l})"


def in_variant(g: WreathElement, var: WreathVariant) -> bool:
    if g.l not in var.units:
        return False
    return all(
        g.eps[_ROW[rp]] == _TRIVIAL_ROW for rp in QUBIT_WEIGHTS if rp not in var.rows
    )


def wreath_mul(g: WreathElement, h: WreathElement, var: WreathVariant) -> WreathElement:
    """
    Product in a given variant.

    Raises:
        GroupError: An operand lies outside the variant
    """
    for x in (g, h):
        if not in_variant(x, var):
            raise GroupError(f"{x} is not an element of {var.name}")
    return g * h


def enumerate_group(var: WreathVariant) -> List[WreathElement]:
    """All elements, ordered by l and then by sign pattern."""
    elements = []
    free = len(var.rows) * len(K_CLASSES)
    for l in var.units:
        for signs in itertools.product((1, -1), repeat=free):
            eps = [list(_TRIVIAL_ROW), list(_TRIVIAL_ROW)]
            it = iter(signs)
            for rp in var.rows:
                eps[_ROW[rp]] = [next(it) for _ in K_CLASSES]
            elements.append(WreathElement((tuple(eps[0]), tuple(eps[1])), l))
    return elements


@dataclass
class GroupCheck:
    """Outcome of the exhaustive structure checks for one variant."""

    variant: str
    order: int
    expected_order: int
    closed: bool = True
    identity: bool = True
    inverses: bool = True
    faithful: bool = True
    compatible: bool = True
    normal_sign_part: bool = True
    surjective: bool = True

    @property
    def passed(self) -> bool:
        return self.order == self.expected_order and all((
            self.closed, self.identity, self.inverses, self.faithful,
            self.compatible, self.normal_sign_part, self.surjective,
        ))


EXPECTED_ORDERS = {"real": 24, "real-total": 192, "complex": 48, "complex-total": 384}


def _action_signature(g: WreathElement) -> Tuple:
    return (g.l, g.signed_permutation())


def _compose_signatures(a: Tuple, b: Tuple) -> Tuple:
    la, pa = a
    lb, pb = b
    perm = tuple((pa[target][0], pa[target][1] * sign) for target, sign in pb)
    return (la * lb % ORDER, perm)


def check_group(var: WreathVariant) -> GroupCheck:
    """
    Exhaustive group axioms.

    The elements act faithfully on the signed roots together with w, and the
    product of every pair acts as the composition of the two actions, so
    associativity is inherited from composition of maps.
    """
    elements = enumerate_group(var)
    members = set(elements)
    result = GroupCheck(var.name, len(members), EXPECTED_ORDERS[var.name])
    ident = WreathElement.identity()
    signatures = {g: _action_signature(g) for g in elements}
    result.faithful = len(set(signatures.values())) == len(elements)
    result.identity = ident in members and all(g * ident == g == ident * g for g in elements)
    for g in elements:
        inv = g.inverse()
        if inv not in members or g * inv != ident or inv * g != ident:
            result.inverses = False
        for h in elements:
            gh = g * h
            if gh not in members:
                result.closed = False
            elif signatures[gh] != _compose_signatures(signatures[g], signatures[h]):
                result.compatible = False
            if gh.l != g.l * h.l % ORDER:
                result.surjective = False
    sign_part = [g for g in elements if g.l == 1]
    for g in elements:
        inv = g.inverse()
        if any((g * n * inv).l != 1 for n in sign_part):
            result.normal_sign_part = False
            break
    if {g.l for g in elements} != set(var.units):
        result.surjective = False
    logger.info("group %s: order %d, passed=%s", var.name, result.order, result.passed)
    return result


# ============================================================================
# ACTIONS
# ============================================================================

def act_on_element(g: WreathElement, x):
    """
    Apply g to a rational, Q(rho), Q(w7) or tagged quadratic element.

    Example:
        act_on_element(WreathElement.from_signs(l=2), QuadNum.root(DiscTag(2, 1)))
            -> sqrt(Delta_2^2)
    """
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, QuadNum):
        sign = g.tag_sign(x.tag) if x.tag is not None else 1
        return x.apply(g.aut, sign)
    if isinstance(x, (RhoNum, CycNum)):
        return x.apply_aut(g.aut)
    raise TypeError(f"no Galois action on {type(x).__name__}")


def act_on_vector(g: WreathElement, v: Sequence) -> tuple:
    return tuple(act_on_element(g, x) for x in v)


def act_on_operator(g: WreathElement, m: ExactMatrix) -> ExactMatrix:
    """Theta_g: entrywise action, labels kept."""
    return m.map(lambda x: act_on_element(g, x))


@dataclass(frozen=True)
class SpectrumPermutation:
    """
    Induced map on spectrum records, keyed by (k, r', nu).

    Attributes:
        element: The acting group element
        mapping: Source key to target key
    """

    element: WreathElement
    mapping: Dict[Tuple[int, int, Optional[int]], Tuple[int, int, Optional[int]]] = field(
        compare=False
    )

    @property
    def is_identity(self) -> bool:
        return all(src == dst for src, dst in self.mapping.items())

    def cycles(self) -> List[Tuple[Tuple[int, int, Optional[int]], ...]]:
        """Nontrivial cycles, each starting at its smallest key."""
        seen = set()
        out = []
        for start in sorted(self.mapping, key=_key_order):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.mapping[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.mapping[nxt]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out


def _key_order(key: Tuple[int, int, Optional[int]]):
    k, rp, nu = key
    return (rp, abs(k), k, -(nu or 0))


def target_key(g: WreathElement, key: Tuple[int, int, Optional[int]]):
    """g E_{r',nu}^k = E_{r', eps_k nu}^{lk}; k = 0 is fixed."""
    k, rp, nu = key
    if k == 0:
        return key
    new_nu = nu * g.sign(rp, k) if nu is not None else None
    return (brillouin(g.l * k), rp, new_nu)


def act_on_spectrum(g: WreathElement) -> SpectrumPermutation:
    records = full_spectrum()
    mapping = {rec.key: target_key(g, rec.key) for rec in records}
    return SpectrumPermutation(g, mapping)


def spectrum_action_consistent(g: WreathElement) -> bool:
    """The record permutation agrees with act_on_element on every exact energy."""
    by_key: Dict[Tuple, SpectrumRecord] = {rec.key: rec for rec in full_spectrum()}
    perm = act_on_spectrum(g)
    return all(
        act_on_element(g, by_key[src].energy_exact) == by_key[dst].energy_exact
        for src, dst in perm.mapping.items()
    )


def density_label_permutation(g: WreathElement, r_values: Sequence[int] = (2, 3, 4, 5)):
    """Labels (r, r', nu, k) of density matrices and their images."""
    out = {}
    for rp in QUBIT_WEIGHTS:
        for r in r_values:
            if not rp <= r <= N_NODES - rp:
                continue
            for k in range(-3, 4):
                for nu in (1, -1):
                    tk, _, tnu = target_key(g, (k, rp, nu))
                    out[(r, rp, nu, k)] = (r, rp, tnu, tk)
    return out


# Operator identities are memoized by what they depend on: S and P only on l,
# density matrices on l and one sign.

@lru_cache(maxsize=None)
def _s_block_moves(r: int, dr: int, k: int, l: int) -> bool:
    g = WreathElement((_TRIVIAL_ROW, _TRIVIAL_ROW), l)
    return act_on_operator(g, s_block(r, dr, k)) == s_block(r, dr, brillouin(l * k))


@lru_cache(maxsize=None)
def _projector_moves(r: int, rp: int, k: int, l: int) -> bool:
    g = WreathElement((_TRIVIAL_ROW, _TRIVIAL_ROW), l)
    return act_on_operator(g, projectors(r, rp, k)) == projectors(r, rp, brillouin(l * k))


@lru_cache(maxsize=None)
def _density_moves(r: int, rp: int, k: int, l: int, sign: int) -> bool:
    eps = [list(_TRIVIAL_ROW), list(_TRIVIAL_ROW)]
    eps[_ROW[rp]][_COL[k_class(k)]] = sign
    g = WreathElement((tuple(eps[0]), tuple(eps[1])), l)
    source = density_matrices(r, rp, k)
    target = density_matrices(r, rp, brillouin(l * k))
    for nu_index, nu in enumerate((1, -1)):
        image = act_on_operator(g, source[nu_index])
        if image != target[(1, -1).index(nu * sign)]:
            return False
    return True


S_BLOCK_STEPS = ((1, 1), (2, 1), (1, 2))
PROJECTOR_LEVELS = ((2, 1), (2, 2), (3, 1), (3, 2), (3, 3))
DENSITY_LEVELS = ((2, 2), (3, 3), (3, 2))


@dataclass
class OperatorActionCheck:
    s_blocks: bool = True
    projectors: bool = True
    density: bool = True
    k0_fixed: bool = True
    spectrum: bool = True

    @property
    def passed(self) -> bool:
        return all((self.s_blocks, self.projectors, self.density, self.k0_fixed, self.spectrum))


def check_operator_actions(elements: Sequence[WreathElement]) -> OperatorActionCheck:
    """
    Theta_g S^k = S^{lk}, Theta_g P^k = P^{lk},
    Theta_g rho_nu^k = rho_{eps_k nu}^{lk} for every k != 0, k = 0 objects
    fixed, and the energy permutation, for every given element.
    """
    out = OperatorActionCheck()
    ks = [k for k in range(-3, 4) if k != 0]
    for g in elements:
        for k in ks:
            if not all(_s_block_moves(r, dr, k, g.l) for r, dr in S_BLOCK_STEPS):
                out.s_blocks = False
            if not all(_projector_moves(r, rp, k, g.l) for r, rp in PROJECTOR_LEVELS):
                out.projectors = False
            if not all(
                _density_moves(r, rp, k, g.l, g.sign(rp, k)) for r, rp in DENSITY_LEVELS
            ):
                out.density = False
        if not all(_s_block_moves(r, dr, 0, g.l) for r, dr in S_BLOCK_STEPS):
            out.k0_fixed = False
        if not all(_projector_moves(r, rp, 0, g.l) for r, rp in PROJECTOR_LEVELS):
            out.k0_fixed = False
        if not spectrum_action_consistent(g):
            out.spectrum = False
    return out


# ============================================================================
# SUBFIELD LATTICES
# ============================================================================

@dataclass(frozen=True)
class SubfieldNode:
    """
    A field in one of the subfield lattices.

    Attributes:
        name: Display name
        generators: Generators over Q
        degree: Degree over Q
        parents: Names of the maximal subfields below this one
        roots: Discriminants whose square roots are adjoined
        k_class: Quasimomentum class for the single-root fields
    """

    name: str
    generators: Tuple[str, ...]
    degree: int
    parents: Tuple[str, ...] = ()
    roots: Tuple[DiscTag, ...] = ()
    k_class: Optional[int] = None
    r_prime: Optional[int] = None
    complex: bool = False


def cyclotomic_lattice() -> List[SubfieldNode]:
    return [
        SubfieldNode("Q", (), 1),
        SubfieldNode("Q(eta)", ("eta",), 2, ("Q",)),
        SubfieldNode("Q(rho)", ("rho",), 3, ("Q",)),
        SubfieldNode("Q(w7)", ("w",), 6, ("Q(eta)", "Q(rho)")),
    ]


def heisenberg_lattice(complex_fields: bool = False) -> List[SubfieldNode]:
    """
    Q(rho) or Q(w7), the six single-root fields H^k_{r'}, the two fields
    H_{r'} of one weight and the total field H.
    """
    base, gen, deg = ("Q(w7)", "w", 6) if complex_fields else ("Q(rho)", "rho", 3)
    suffix = "G" if complex_fields else "E"
    nodes = [SubfieldNode(base, (gen,), deg, complex=complex_fields)]
    for rp in QUBIT_WEIGHTS:
        for kc in K_CLASSES:
            tag = DiscTag(rp, kc)
            nodes.append(SubfieldNode(
                f"H^{kc}_{rp},{suffix}", (gen, f"sqrt({tag})"), deg * 2, (base,),
                (tag,), kc, rp, complex_fields,
            ))
    for rp in QUBIT_WEIGHTS:
        tags = tuple(DiscTag(rp, kc) for kc in K_CLASSES)
        nodes.append(SubfieldNode(
            f"H_{rp},{suffix}", (gen,) + tuple(f"sqrt({t})" for t in tags), deg * 8,
            tuple(f"H^{kc}_{rp},{suffix}" for kc in K_CLASSES), tags, None, rp, complex_fields,
        ))
    nodes.append(SubfieldNode(
        f"H_{suffix}", (gen,) + tuple(f"sqrt({t})" for t in ALL_TAGS), deg * 64,
        tuple(f"H_{rp},{suffix}" for rp in QUBIT_WEIGHTS), ALL_TAGS, None, None, complex_fields,
    ))
    return nodes


def act_on_subfield(g: WreathElement, node: SubfieldNode) -> SubfieldNode:
    """Single-root fields move from class k to class lk; the others are fixed."""
    if node.k_class is None:
        return node
    target = k_class(g.l * node.k_class)
    lattice = heisenberg_lattice(node.complex)
    return next(n for n in lattice if n.k_class == target and n.r_prime == node.r_prime)


def _generator_rank(x: CycNum) -> int:
    """Dimension over Q of Q(x), from the rank of its first six powers."""
    powers = [CycNum.one()]
    for _ in range(5):
        powers.append(powers[-1] * x)
    return ExactMatrix(tuple(p.coeffs for p in powers)).rank()


def verified_degree(node: SubfieldNode) -> int:
    """
    Degree over Q recomputed from exact data: ranks of generator powers for
    the cyclotomic subfields and valuation parity ranks for the root fields.

    Over Q(w7) the Q(rho) rank carries over because every discriminant is
    totally positive and so no product of them is -7 times a square.
    """
    generators = {
        "Q": CycNum.one(),
        "Q(eta)": CycNum.eta(),
        "Q(rho)": RhoNum.rho().embed(),
        "Q(w7)": CycNum.omega(1),
    }
    if not node.roots:
        return _generator_rank(generators[node.name])
    base = 6 if node.complex else 3
    if node.complex and not all(t.value().numeric(l) > 0 for t in node.roots for l in K_CLASSES):
        raise ValueError(f"{node.name}: a discriminant is not totally positive")
    return base * extension_degree(node.roots)


def check_lattices() -> Dict[str, Tuple[int, int]]:
    """Declared and recomputed degree of every lattice node."""
    nodes = cyclotomic_lattice() + heisenberg_lattice(False) + heisenberg_lattice(True)
    out = {}
    for node in nodes:
        out[node.name] = (node.degree, verified_degree(node))
    return out


# ============================================================================
# KUMMER PAIRING
# ============================================================================

def kummer_pairing(g: WreathElement, exponents: Sequence[int]) -> int:
    """<g, prod Delta_i^a_i> = prod eps_i^a_i over ``ALL_TAGS``."""
    if len(exponents) != len(ALL_TAGS):
        raise ValueError(f"need {len(ALL_TAGS)} exponents")
    value = 1
    for tag, a in zip(ALL_TAGS, exponents):
        if a % 2:
            value *= g.tag_sign(tag)
    return value


def pairing_is_perfect() -> bool:
    """Every nontrivial sign pattern and every nonzero exponent vector pair to -1 somewhere."""
    signs = [g for g in enumerate_group(variant("real-total")) if g.l == 1]
    vectors = list(itertools.product((0, 1), repeat=len(ALL_TAGS)))
    for a in vectors[1:]:
        if all(kummer_pairing(g, a) == 1 for g in signs):
            return False
    for g in signs:
        if g.is_identity():
            continue
        if all(kummer_pairing(g, a) == 1 for a in vectors):
            return False
    return True
