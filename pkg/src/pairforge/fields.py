"""Exact base fields: the rationals and the prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values.  Elements of GF(p)
are :class:`Residue` instances.  Plain ``int`` operands are accepted by both
and coerced, anything else from a different field raises
:class:`~pairforge.errors.FieldMismatchError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import FieldMismatchError, ParseError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Residue:
    """An element of GF(p), stored as its least nonnegative representative."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot combine GF({self.p}) with a rational")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(("GF", self.p, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)

    def __reduce__(self):
        return (Residue, (self.value, self.p))


@dataclass(frozen=True)
class FieldSpec:
    """Q (``kind="Q"``, characteristic 0) or GF(p) (``kind="GF"``)."""

    kind: str
    characteristic: int

    def __post_init__(self):
        if self.kind == "Q":
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == "GF":
            if not is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    @property
    def degree(self) -> int:
        return 1

    @property
    def base(self) -> "FieldSpec":
        return self

    def __call__(self, value):
        if self.kind == "Q":
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, Residue):
                raise FieldMismatchError("a GF(p) element is not a rational")
            if isinstance(value, str):
                return self.parse(value)
            raise FieldMismatchError(f"cannot interpret {value!r} as a rational")
        p = self.characteristic
        if isinstance(value, Residue):
            if value.p != p:
                raise FieldMismatchError(f"GF({value.p}) element used in GF({p})")
            return value
        if isinstance(value, int):
            return Residue(value, p)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return Residue(value.numerator, p) / Residue(value.denominator, p)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatchError(f"cannot interpret {value!r} in GF({p})")

    def contains(self, value) -> bool:
        if self.kind == "Q":
            return isinstance(value, (Fraction, int)) and not isinstance(value, bool)
        return isinstance(value, Residue) and value.p == self.characteristic

    def parse(self, text: str):
        text = text.strip()
        try:
            if self.kind == "Q":
                return Fraction(text)
            if "/" in text:
                num, den = text.split("/")
                return self(Fraction(int(num), int(den)))
            return Residue(int(text), self.characteristic)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{text!r} is not an element of {self}") from exc

    def format(self, value) -> str:
        return str(self(value))

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.characteristic})"


QQ = FieldSpec("Q", 0)


@lru_cache(maxsize=None)
def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


def field_from_name(name: str) -> FieldSpec:
    """Parse ``"Q"``, ``"GF 5"`` or ``"GF(5)"``."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("GF"):
        rest = name[2:].strip().strip("()").strip()
        try:
            return GF(int(rest))
        except ValueError as exc:
            raise ParseError(f"bad field declaration {name!r}") from exc
    raise ParseError(f"bad field declaration {name!r}")
