"""
Tagged quadratic extensions K(sqrt(D)) over K = Q(rho) or Q(w7).

Only the six two- and three-magnon discriminants ever appear under the root,
so the root is carried symbolically as a ``DiscTag`` instead of building the
composite field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import EmbeddingError, FieldArithmeticError, TagMismatchError
from .fields import K_CLASSES, CycAut, CycNum, RhoNum, as_cyc, k_class, rho_k

Base = Union[RhoNum, CycNum]

# Discriminant polynomials in mu = rho_k, coefficients of (1, mu, mu^2)
_DISC_POLY = {
    2: (16, -1, -3),
    3: (25, -10, -3),
}


@dataclass(frozen=True, order=True)
class DiscTag:
    """Label (r', k) of the discriminant Delta_{r'}^k, k a class in {1, 2, 4}."""

    r_prime: int
    k_class: int

    def __post_init__(self) -> None:
        if self.r_prime not in _DISC_POLY:
            raise ValueError(f"r' must be 2 or 3, got {self.r_prime}")
        if self.k_class not in K_CLASSES:
            raise ValueError(f"k-class must be one of 1, 2, 4, got {self.k_class}")

    @classmethod
    def of(cls, r_prime: int, k: int) -> "DiscTag":
        """Tag for any nonzero quasimomentum k."""
        return cls(r_prime, k_class(k))

    @property
    def index(self) -> int:
        """Position in ``ALL_TAGS``."""
        return ALL_TAGS.index(self)

    def moved(self, l: int) -> "DiscTag":
        """Tag of tau_l(Delta): the k-class goes to the class of l*k."""
        return DiscTag(self.r_prime, k_class(l * self.k_class))

    def value(self) -> RhoNum:
        return discriminant(self.r_prime, self.k_class)

    def __str__(self) -> str:
        return f"D{self.r_prime}^{self.k_class}"


ALL_TAGS = tuple(DiscTag(rp, k) for rp in (2, 3) for k in K_CLASSES)


def disc_polynomial(r_prime: int) -> tuple:
    """Coefficients (c0, c1, c2) of Delta_{r'} as a polynomial in mu."""
    return tuple(Fraction(c) for c in _DISC_POLY[r_prime])


def discriminant(r_prime: int, k: int) -> RhoNum:
    """
    Delta_{r'}^k as an element of Q(rho).

    Example:
        discriminant(2, 1) -> 16 - rho - 3*rho^2
        discriminant(3, 4) -> 9 + 7*rho + 10*rho^2
    """
    return _discriminant(r_prime, k_class(k))


@lru_cache(maxsize=None)
def _discriminant(r_prime: int, k: int) -> RhoNum:
    c0, c1, c2 = disc_polynomial(r_prime)
    mu = rho_k(k)
    return c0 + c1 * mu + c2 * (mu * mu)


def _is_zero(x) -> bool:
    return x == 0


def _unify(a, b):
    """Bring two base elements to a common type (promoting to Q(w7) if needed)."""
    if isinstance(a, CycNum) or isinstance(b, CycNum):
        return as_cyc(a), as_cyc(b)
    if isinstance(a, (int, Fraction)):
        a = RhoNum.from_rat(a)
    if isinstance(b, (int, Fraction)):
        b = RhoNum.from_rat(b)
    return a, b


@dataclass(frozen=True, eq=False)
class QuadNum:
    """
    Element a + b*sqrt(Delta_tag) with a, b in Q(rho) or Q(w7).

    Attributes:
        a: Rational part
        b: Coefficient of the root
        tag: Discriminant under the root, ``None`` when b is zero
    """

    a: Base
    b: Base
    tag: Optional[DiscTag] = None

    def __post_init__(self) -> None:
        a, b = _unify(self.a, self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if _is_zero(b):
            object.__setattr__(self, "tag", None)
        elif self.tag is None:
            raise TagMismatchError("a nonzero root coefficient needs a discriminant tag")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_base(cls, a) -> "QuadNum":
        return cls(a, 0)

    @classmethod
    def root(cls, tag: DiscTag, base: type = RhoNum) -> "QuadNum":
        """sqrt(Delta_tag) itself."""
        return cls(base.from_rat(0), base.from_rat(1), tag)

    @property
    def is_cyc(self) -> bool:
        return isinstance(self.a, CycNum)

    def _coerce(self, other) -> "QuadNum | None":
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (RhoNum, CycNum)) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        ):
            return QuadNum.from_base(other)
        return None

    def _join_tag(self, other: "QuadNum") -> Optional[DiscTag]:
        if self.tag is None:
            return other.tag
        if other.tag is None or other.tag == self.tag:
            return self.tag
        raise TagMismatchError(f"cannot combine sqrt({self.tag}) with sqrt({other.tag})")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        tag = self._join_tag(o)
        a, oa = _unify(self.a, o.a)
        b, ob = _unify(self.b, o.b)
        return QuadNum(a + oa, b + ob, tag)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.a, -self.b, self.tag)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        tag = self._join_tag(o)
        a, oa = _unify(self.a, o.a)
        b, ob = _unify(self.b, o.b)
        if tag is None:
            return QuadNum(a * oa, b * 0)
        d = tag.value()
        return QuadNum(a * oa + d * (b * ob), a * ob + b * oa, tag)

    __rmul__ = __mul__

    def root_conjugate(self) -> "QuadNum":
        """a - b*sqrt(Delta), the other root of the minimal polynomial."""
        return QuadNum(self.a, -self.b, self.tag)

    def relative_norm(self) -> Base:
        """a^2 - Delta*b^2, the norm down to the base field."""
        if self.tag is None:
            return self.a * self.a
        return self.a * self.a - self.tag.value() * (self.b * self.b)

    def inverse(self) -> "QuadNum":
        """
        Raises:
            FieldArithmeticError: If self is zero.
        """
        n = self.relative_norm()
        if _is_zero(n):
            raise FieldArithmeticError("inverse of zero in a quadratic extension")
        inv = n.inverse()
        return QuadNum(self.a * inv, -self.b * inv, self.tag)

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

    def __pow__(self, exponent: int) -> "QuadNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadNum.from_base(1)
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
        if self.tag != o.tag:
            return False
        a, oa = _unify(self.a, o.a)
        b, ob = _unify(self.b, o.b)
        return a == oa and b == ob

    def __hash__(self) -> int:
        if self.tag is None:
            return hash(self.a)
        return hash((self.a, self.b, self.tag))

    def is_zero(self) -> bool:
        return _is_zero(self.a) and _is_zero(self.b)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- automorphisms ------------------------------------------------------

    def conjugate(self) -> "QuadNum":
        """Complex conjugation; the real root sqrt(Delta) is fixed."""
        return QuadNum(self.a.conjugate(), self.b.conjugate(), self.tag)

    def apply(self, aut: CycAut, sign: int = 1) -> "QuadNum":
        """
        Map the base by tau_l and sqrt(Delta^k) to sign*sqrt(Delta^{lk}).
        """
        if sign not in (1, -1):
            raise ValueError("root sign must be +1 or -1")
        a = self.a.apply_aut(aut)
        if self.tag is None:
            return QuadNum(a, self.b.apply_aut(aut))
        b = self.b.apply_aut(aut)
        return QuadNum(a, b * sign, self.tag.moved(aut.l))

    def to_cyc(self) -> "QuadNum":
        return QuadNum(as_cyc(self.a), as_cyc(self.b), self.tag)

    # -- numerics and display -----------------------------------------------

    def numeric(self, l: int = 1) -> complex:
        """
        Value under the embedding w -> exp(2*pi*i*l/7), with the principal
        positive root of the embedded discriminant.

        Raises:
            EmbeddingError: If the embedded discriminant is not positive.
        """
        value = complex(self.a.numeric(l))
        if self.tag is None:
            return value
        d = self.tag.value().numeric(l)
        if d <= 0:
            raise EmbeddingError(f"{self.tag} embeds to {d}, not a positive real")
        return value + complex(self.b.numeric(l)) * math.sqrt(d)

    def __str__(self) -> str:
        if self.tag is None:
            return str(self.a)
        return f"({self.a}) + ({self.b})*sqrt({self.tag})"

    def __repr__(self) -> str:
        return f"QuadNum({self})"
