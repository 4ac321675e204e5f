"""Exact scalar arithmetic over the rationals or a prime field.

A ``Field`` handle owns the arithmetic; element values are plain
``Fraction`` objects (characteristic 0) or ints in ``[0, p)``
(characteristic p).  Everything is exact; floats are never accepted.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CharacteristicError, FieldMismatch


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (``char == 0``) or the prime field F_p (``char == p``)."""

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        if char != 0 and not is_prime(char):
            raise ValueError(f"field characteristic must be 0 or prime, got {char}")
        object.__setattr__(self, "char", char)

    def __setattr__(self, *_):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    # -- element construction ------------------------------------------------

    def of(self, v):
        """Coerce an int or Fraction into this field."""
        if isinstance(v, float):
            raise TypeError("floats are banned; use Fraction or int")
        if self.char == 0:
            return Fraction(v)
        if isinstance(v, Fraction):
            den = v.denominator % self.char
            if den == 0:
                raise CharacteristicError(f"denominator divisible by {self.char}")
            return v.numerator * pow(den, -1, self.char) % self.char
        return int(v) % self.char

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return (a + b) if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return (a - b) if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return (a * b) if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.char == 0 else pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def div_int(self, a, n: int):
        """Divide by the integer n·1 in this field (errors if p | n)."""
        if self.char != 0 and n % self.char == 0:
            raise CharacteristicError(f"division by {n} in characteristic {self.char}")
        return self.div(a, self.of(n))

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)


QQ = Field(0)

_gf_cache: dict[int, Field] = {}


def GF(p: int) -> Field:
    if p not in _gf_cache:
        _gf_cache[p] = Field(p)
    return _gf_cache[p]


def same_field(a: Field, b: Field) -> Field:
    if a != b:
        raise FieldMismatch(f"mixed fields: {a} vs {b}")
    return a


def field_from_name(name: str) -> Field:
    """Parse a field spec: 'Q' or 'F<p>'."""
    name = name.strip()
    if name in ("Q", "QQ", "0"):
        return QQ
    if name.startswith("F"):
        return GF(int(name[1:]))
    raise ValueError(f"unknown field spec {name!r} (expected Q or F<p>)")
