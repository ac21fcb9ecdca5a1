"""
Exact Number Fields

Exact arithmetic in the tower Q ⊂ Q(rho) ⊂ Q(w7), where w = exp(2*pi*i/7)
and rho = w + 1/w.

Main functional areas:
1. Rationals: ``Rat`` is ``fractions.Fraction`` plus parsing/rendering helpers
2. Cyclotomic numbers: ``CycNum`` in the power basis {1, w, ..., w^5}
3. Real subfield: ``RhoNum`` in the basis {1, rho, rho^2}
4. Automorphisms: ``CycAut`` (tau_l : w -> w^l) and the k-class helper

Dependencies:
- numpy: numeric embeddings
- Standard library: fractions, dataclasses

All values are immutable; every operation returns a new canonical instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import FieldArithmeticError, NotRealError

Rat = Fraction
RatLike = Union[int, Fraction]

ORDER = 7
DEGREE = 6
UNITS = (1, 2, 3, 4, 5, 6)
K_CLASSES = (1, 2, 4)


# ============================================================================
# RATIONAL HELPERS
# ============================================================================

def to_rat(value: Union[int, Fraction, str]) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string to a Fraction.

    Raises:
        ValueError: If the value cannot be parsed or is a float.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Refusing inexact value {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"Cannot interpret {value!r} as a rational")


def format_rat(value: Fraction) -> str:
    """Render a rational as the fixed "p/q" string used in JSON output."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _format_terms(coeffs: Sequence[Fraction], labels: Sequence[str]) -> str:
    parts = []
    for c, label in zip(coeffs, labels):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not label:
            body = str(mag)
        elif mag == 1:
            body = label
        else:
            body = f"{mag}*{label}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ============================================================================
# AUTOMORPHISMS
# ============================================================================

def k_class(m: int) -> int:
    """
    Class of +-m modulo 7 as one of 1, 2, 4.

    Example:
        k_class(-3) -> 4, k_class(5) -> 2
    """
    r = m % ORDER
    if r == 0:
        raise ValueError("k-class is undefined for multiples of 7")
    return {1: 1, 6: 1, 2: 2, 5: 2, 3: 4, 4: 4}[r]


def brillouin(m: int) -> int:
    """Representative of m modulo 7 in the zone {-3, ..., 3}."""
    r = m % ORDER
    return r - ORDER if r > 3 else r


@dataclass(frozen=True)
class CycAut:
    """
    Galois automorphism tau_l of Q(w7), sending w to w^l.

    ``l`` is stored as its residue in 1..6; ``signed`` gives the
    representative in {-3..3}.
    """

    l: int

    def __post_init__(self) -> None:
        if self.l % ORDER == 0:
            raise ValueError("tau_l needs l to be a unit modulo 7")
        object.__setattr__(self, "l", self.l % ORDER)

    @classmethod
    def identity(cls) -> "CycAut":
        return cls(1)

    @classmethod
    def conjugation(cls) -> "CycAut":
        return cls(-1)

    @property
    def signed(self) -> int:
        return brillouin(self.l)

    @property
    def is_real_part(self) -> bool:
        """True when tau_l lies in the subgroup C3 = {tau_1, tau_2, tau_4}."""
        return self.l in K_CLASSES

    def __mul__(self, other: "CycAut") -> "CycAut":
        if not isinstance(other, CycAut):
            return NotImplemented
        return CycAut(self.l * other.l)

    def inverse(self) -> "CycAut":
        return CycAut(pow(self.l, -1, ORDER))

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        return x.apply_aut(self)

    def __str__(self) -> str:
        return f"tau_{self.signed}"


# ============================================================================
# CYCLOTOMIC NUMBERS
# ============================================================================

def _canonical(cyclic: Sequence[Fraction]) -> tuple:
    # x^7 = 1 representation folded onto the power basis via w^6 = -(1+...+w^5)
    top = cyclic[DEGREE]
    return tuple(Fraction(c - top) for c in cyclic[:DEGREE])


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_sub(p: list, q: list) -> list:
    n = max(len(p), len(q))
    out = [
        (p[i] if i < len(p) else Fraction(0)) - (q[i] if i < len(q) else Fraction(0))
        for i in range(n)
    ]
    return _poly_trim(out)


def _poly_divmod(p: list, q: list) -> tuple:
    p = _poly_trim(list(p))
    q = _poly_trim(list(q))
    if not q:
        raise FieldArithmeticError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    rem = p
    lead = q[-1]
    while len(rem) >= len(q):
        shift = len(rem) - len(q)
        factor = rem[-1] / lead
        quot[shift] = factor
        rem = _poly_sub(rem, [Fraction(0)] * shift + [factor * c for c in q])
    return _poly_trim(quot), rem


_CYCLOTOMIC_POLY = [Fraction(1)] * (DEGREE + 1)


@dataclass(frozen=True, eq=False)
class CycNum:
    """
    Element c0 + c1*w + ... + c5*w^5 of Q(w7).

    Attributes:
        coeffs: Six rational coefficients in the power basis
    """

    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = tuple(to_rat(c) for c in self.coeffs)
        if len(coeffs) != DEGREE:
            raise ValueError(f"CycNum needs {DEGREE} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rat(cls, value: RatLike) -> "CycNum":
        return cls((value, 0, 0, 0, 0, 0))

    @classmethod
    def zero(cls) -> "CycNum":
        return cls.from_rat(0)

    @classmethod
    def one(cls) -> "CycNum":
        return cls.from_rat(1)

    @classmethod
    def omega(cls, power: int = 1) -> "CycNum":
        """The root of unity w^power (any integer power)."""
        cyclic = [Fraction(0)] * ORDER
        cyclic[power % ORDER] = Fraction(1)
        return cls(_canonical(cyclic))

    @classmethod
    def from_cyclic(cls, cyclic: Sequence[RatLike]) -> "CycNum":
        """Build from seven coefficients of 1, w, ..., w^6."""
        if len(cyclic) != ORDER:
            raise ValueError("from_cyclic needs 7 coefficients")
        return cls(_canonical([to_rat(c) for c in cyclic]))

    @classmethod
    def from_root_basis(cls, coeffs: Sequence[RatLike]) -> "CycNum":
        """Build from coordinates in the root basis {w, w^2, ..., w^6}."""
        if len(coeffs) != DEGREE:
            raise ValueError("root basis has 6 elements")
        return cls.from_cyclic([0, *coeffs])

    @classmethod
    def eta(cls, sign: int = 0) -> "CycNum":
        """
        Gauss periods of the subgroup C3.

        sign=+1 gives eta_1 = w + w^2 + w^4, sign=-1 gives eta_-1, and the
        default 0 gives eta = eta_1 - eta_-1 = i*sqrt(7).
        """
        plus = cls.omega(1) + cls.omega(2) + cls.omega(4)
        minus = cls.omega(-1) + cls.omega(-2) + cls.omega(-4)
        if sign > 0:
            return plus
        if sign < 0:
            return minus
        return plus - minus

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "CycNum | None":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, RhoNum):
            return other.embed()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNum.from_rat(other)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        cyclic = [Fraction(0)] * ORDER
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    cyclic[(i + j) % ORDER] += a * b
        return CycNum(_canonical(cyclic))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """
        Multiplicative inverse by the extended Euclidean algorithm modulo
        the cyclotomic polynomial x^6 + ... + 1.

        Raises:
            FieldArithmeticError: If self is zero.
        """
        if self.is_zero():
            raise FieldArithmeticError("inverse of zero in Q(w7)")
        r0, r1 = list(_CYCLOTOMIC_POLY), _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant because f is irreducible
        scale = r0[0]
        _, s = _poly_divmod([c / scale for c in s0], _CYCLOTOMIC_POLY)
        s = s + [Fraction(0)] * (DEGREE - len(s))
        return CycNum(tuple(s))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "CycNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = CycNum.one()
        n = abs(exponent)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(("cyc", self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- Galois structure ---------------------------------------------------

    def cyclic(self) -> tuple:
        """Seven coefficients of 1, w, ..., w^6 with the w^6 slot zero."""
        return (*self.coeffs, Fraction(0))

    def apply_aut(self, aut: CycAut) -> "CycNum":
        cyclic = [Fraction(0)] * ORDER
        for i, c in enumerate(self.coeffs):
            if c:
                cyclic[(aut.l * i) % ORDER] += c
        return CycNum(_canonical(cyclic))

    def conjugate(self) -> "CycNum":
        return self.apply_aut(CycAut.conjugation())

    def is_real(self) -> bool:
        return self == self.conjugate()

    def fixed_by(self, subgroup: str) -> bool:
        """
        Check invariance under C2 = {tau_1, tau_-1}, C3 = {tau_1, tau_2, tau_4}
        or the whole group C6.
        """
        generators = {"C2": (6,), "C3": (2,), "C6": (6, 2)}
        if subgroup not in generators:
            raise ValueError(f"Unknown subgroup {subgroup!r}")
        return all(self.apply_aut(CycAut(l)) == self for l in generators[subgroup])

    def root_basis(self) -> tuple:
        """Coordinates in the root basis {w, ..., w^6}."""
        c0 = self.coeffs[0]
        return tuple(c - c0 for c in (*self.coeffs[1:], Fraction(0)))

    def trace(self) -> Fraction:
        total = CycNum.zero()
        for l in UNITS:
            total = total + self.apply_aut(CycAut(l))
        return total.coeffs[0]

    def norm(self) -> Fraction:
        total = CycNum.one()
        for l in UNITS:
            total = total * self.apply_aut(CycAut(l))
        return total.coeffs[0]

    def project(self) -> "RhoNum":
        """
        Express a conjugation-fixed element in the basis {1, rho, rho^2}.

        Raises:
            NotRealError: If the element is not fixed by tau_-1.
        """
        if not self.is_real():
            raise NotRealError(f"{self} is not in the real subfield")
        c0, _, c2, c3, _, _ = self.coeffs
        # real elements are c0 + c2*rho_2 + c3*rho_3 with rho_2 = rho^2 - 2, rho_3 = 1 - rho - rho^2
        return RhoNum((c0 - 2 * c2 + c3, -c3, c2 - c3))

    # -- numerics and display -----------------------------------------------

    def numeric(self, l: int = 1) -> complex:
        """Value under the embedding w -> exp(2*pi*i*l/7)."""
        powers = np.exp(2j * np.pi * l * np.arange(DEGREE) / ORDER)
        values = np.array([float(c) for c in self.coeffs])
        return complex(np.dot(values, powers))

    def __str__(self) -> str:
        return _format_terms(self.coeffs, ["", "w", "w^2", "w^3", "w^4", "w^5"])

    def __repr__(self) -> str:
        return f"CycNum({self})"


# ============================================================================
# REAL SUBFIELD
# ============================================================================

@dataclass(frozen=True, eq=False)
class RhoNum:
    """
    Element a0 + a1*rho + a2*rho^2 of Q(rho), rho = w + 1/w, reduced with
    rho^3 = 1 + 2*rho - rho^2.
    """

    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = tuple(to_rat(c) for c in self.coeffs)
        if len(coeffs) != 3:
            raise ValueError(f"RhoNum needs 3 coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_rat(cls, value: RatLike) -> "RhoNum":
        return cls((value, 0, 0))

    @classmethod
    def zero(cls) -> "RhoNum":
        return cls.from_rat(0)

    @classmethod
    def one(cls) -> "RhoNum":
        return cls.from_rat(1)

    @classmethod
    def rho(cls) -> "RhoNum":
        return cls((0, 1, 0))

    @classmethod
    def from_linear(cls, x: RatLike, y: RatLike) -> "RhoNum":
        """The element x + y*rho."""
        return cls((x, y, 0))

    @staticmethod
    def _coerce(other) -> "RhoNum | None":
        if isinstance(other, RhoNum):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RhoNum.from_rat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RhoNum(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "RhoNum":
        return RhoNum(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RhoNum(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = [Fraction(0)] * 5
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    p[i + j] += a * b
        # rho^3 = 1 + 2 rho - rho^2 ; rho^4 = -1 - rho + 3 rho^2
        return RhoNum((
            p[0] + p[3] - p[4],
            p[1] + 2 * p[3] - p[4],
            p[2] - p[3] + 3 * p[4],
        ))

    __rmul__ = __mul__

    def inverse(self) -> "RhoNum":
        """
        Inverse as tau(x) * tau^2(x) / N(x).

        Raises:
            FieldArithmeticError: If self is zero.
        """
        if self.is_zero():
            raise FieldArithmeticError("inverse of zero in Q(rho)")
        cofactor = self.apply_aut(CycAut(2)) * self.apply_aut(CycAut(4))
        n = (self * cofactor).coeffs[0]
        return RhoNum(tuple(c / n for c in cofactor.coeffs))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "RhoNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = RhoNum.one()
        n = abs(exponent)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.embed() == other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(("cyc", self.embed().coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral(self) -> bool:
        """Integer coordinates in {1, rho, rho^2}, i.e. membership in Z[rho]."""
        return all(c.denominator == 1 for c in self.coeffs)

    def denominator(self) -> int:
        return math.lcm(*(c.denominator for c in self.coeffs))

    def embed(self) -> CycNum:
        a0, a1, a2 = self.coeffs
        # rho = -1 - w^2 - w^3 - w^4 - w^5 and rho^2 = 2 + w^2 + w^5
        return CycNum((a0 - a1 + 2 * a2, 0, a2 - a1, -a1, -a1, a2 - a1))

    def apply_aut(self, aut: CycAut) -> "RhoNum":
        image = rho_k(aut.l)
        a0, a1, a2 = self.coeffs
        return a0 + a1 * image + a2 * (image * image)

    def conjugates(self) -> tuple:
        """The triple (a_1, a_2, a_4) = (a, tau(a), tau^2(a))."""
        return tuple(self.apply_aut(CycAut(l)) for l in K_CLASSES)

    def conjugate(self) -> "RhoNum":
        return self

    def trace(self) -> Fraction:
        return sum((c for c in self.conjugates()), RhoNum.zero()).coeffs[0]

    def norm(self) -> Fraction:
        a1, a2, a4 = self.conjugates()
        return (a1 * a2 * a4).coeffs[0]

    def multiplication_matrix(self) -> tuple:
        """Matrix of y -> self*y on {1, rho, rho^2}; column j is self*rho^j."""
        columns = [(self * RhoNum.rho() ** j).coeffs for j in range(3)]
        return tuple(tuple(columns[j][i] for j in range(3)) for i in range(3))

    def numeric(self, l: int = 1) -> float:
        r = 2.0 * np.cos(2.0 * np.pi * l / ORDER)
        a0, a1, a2 = (float(c) for c in self.coeffs)
        return float(a0 + a1 * r + a2 * r * r)

    def __str__(self) -> str:
        return _format_terms(self.coeffs, ["", "rho", "rho^2"])

    def __repr__(self) -> str:
        return f"RhoNum({self})"


_RHO_IMAGES = {
    1: (0, 1, 0),
    2: (-2, 0, 1),
    4: (1, -1, -1),
}


def rho_k(k: int) -> RhoNum:
    """
    rho_k = w^k + w^-k expressed in {1, rho, rho^2}.

    Example:
        rho_k(2) -> -2 + rho^2, rho_k(-3) -> 1 - rho - rho^2
    """
    if k % ORDER == 0:
        return RhoNum.from_rat(2)
    return RhoNum(_RHO_IMAGES[k_class(k)])


def xi(k: int) -> CycNum:
    """xi = w^k, the phase of quasimomentum k."""
    return CycNum.omega(k)


def as_cyc(value) -> CycNum:
    """Coerce an int, Fraction, RhoNum or CycNum into Q(w7)."""
    coerced = CycNum._coerce(value)
    if coerced is None:
        raise TypeError(f"Cannot coerce {type(value).__name__} into Q(w7)")
    return coerced


def field_name(value) -> str:
    """Name of the smallest field type carrying ``value``: Q, Q(rho) or Q(w7)."""
    if isinstance(value, (int, Fraction)):
        return "Q"
    if isinstance(value, RhoNum):
        return "Q(rho)"
    if isinstance(value, CycNum):
        return "Q(w7)"
    raise TypeError(f"Not a field element: {value!r}")


def conjugate(value):
    """Complex conjugation tau_-1 on any supported element."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return value.conjugate()


def sum_exact(values: Iterable, start=None):
    total = start if start is not None else Fraction(0)
    for v in values:
        total = total + v
    return total
