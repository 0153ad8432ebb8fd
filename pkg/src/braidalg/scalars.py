"""Exact scalar fields: the rationals and prime fields F_p with p odd.

Rational scalars are plain :class:`fractions.Fraction` values.  Prime-field
scalars are :class:`Mod` values carrying their modulus.  A :class:`Field`
coerces integers, fractions and strings into its own elements, so the rest
of the package never has to care which family it is working over.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CharTwoField, FieldMismatch, NonInvertible, ParseError


class Mod:
    """Residue class modulo an odd prime, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Mod is immutable")

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise NonInvertible(f"denominator of {other} vanishes mod {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(o, self.p) * self.inverse()

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.value, n, self.p), self.p)

    def inverse(self) -> Mod:
        if self.value == 0:
            raise NonInvertible(f"0 has no inverse in F_{self.p}")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self._coerce(other) % self.p
            except NonInvertible:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


_SCALAR_RE = re.compile(r"\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Field:
    """An exact field: ``Field()`` is Q, ``Field(p)`` is F_p for an odd prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is None:
            return
        if self.p == 2:
            raise CharTwoField("characteristic 2 is not supported")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(p)

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, Mod, or text) into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            if isinstance(x, Mod):
                raise FieldMismatch(f"F_{x.p} element used over Q")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element used over F_{self.p}")
            return x
        if isinstance(x, Fraction):
            return Mod(0, self.p) + x
        return Mod(int(x), self.p)

    def contains(self, a) -> bool:
        if self.p is None:
            return isinstance(a, Fraction)
        return isinstance(a, Mod) and a.p == self.p

    def parse(self, text: str):
        m = _SCALAR_RE.match(text)
        if not m:
            raise ParseError("malformed scalar", text, 0)
        sign, num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ParseError("zero denominator", text, text.index("/"))
        value = Fraction(int(num), int(den or 1))
        if sign == "-":
            value = -value
        return self(value)

    def format(self, a) -> str:
        a = self(a)
        return str(a)

    def sort_key(self, a):
        return a.value if isinstance(a, Mod) else a

    def __str__(self):
        return "q" if self.p is None else f"fp:{self.p}"


QQ = Field()


def inv(a):
    """Multiplicative inverse; raises NonInvertible on zero."""
    if isinstance(a, Mod):
        return a.inverse()
    if a == 0:
        raise NonInvertible("0 has no inverse")
    return 1 / Fraction(a)


class Sign(enum.Enum):
    PLUS = "Plus"
    MINUS = "Minus"
    NEITHER = "Neither"


def is_sign(a) -> Sign:
    if a == 1:
        return Sign.PLUS
    if a == -1:
        return Sign.MINUS
    return Sign.NEITHER
