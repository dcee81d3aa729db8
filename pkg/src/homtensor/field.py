"""Exact scalar fields: the rationals and prime fields GF(p).

Elements of QQ are plain :class:`fractions.Fraction` values.  Elements of
GF(p) are :class:`GFElement` instances that refuse to mix with other fields.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Integral

__all__ = [
    "QQ",
    "GF",
    "GFElement",
    "Rationals",
    "PrimeField",
    "field_of",
    "parse_field",
]

_MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Rationals:
    """The field QQ; elements are reduced ``Fraction`` objects."""

    characteristic = 0
    name = "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, GFElement):
            raise TypeError(f"cannot coerce {x!r} into QQ")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, Integral)) and not isinstance(x, bool)

    def parse(self, s: str) -> Fraction:
        s = s.strip()
        if "mod" in s:
            raise ValueError(f"{s!r} is not a rational")
        return Fraction(s)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime ``p <= 2**31``."""

    def __init__(self, p: int):
        p = int(p)
        if p > _MAX_PRIME or not _is_prime(p):
            raise ValueError(f"{p} is not a prime <= 2^31")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"

    def __call__(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise TypeError(f"cannot coerce {x!r} into GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return GFElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return GFElement(int(x), self.p)

    @property
    def zero(self) -> GFElement:
        return GFElement(0, self.p)

    @property
    def one(self) -> GFElement:
        return GFElement(1, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, GFElement) and x.p == self.p

    def elements(self):
        return [GFElement(i, self.p) for i in range(self.p)]

    def parse(self, s: str) -> GFElement:
        s = s.strip()
        if "mod" in s:
            k, _, p = s.partition("mod")
            if int(p) != self.p:
                raise ValueError(f"{s!r} is not an element of GF({self.p})")
            return GFElement(int(k), self.p)
        return self(Fraction(s))

    def format(self, x) -> str:
        return f"{self(x).value} mod {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class GFElement:
    """Residue modulo a prime, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise TypeError(f"mixed fields GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, Integral) and not isinstance(other, bool):
            return int(other)
        if isinstance(other, Fraction):
            raise TypeError(f"mixed fields GF({self.p}) and QQ")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> GFElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * GFElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(o, self.p) * self.inverse()

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return GFElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} mod {self.p}"

    __str__ = __repr__


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x):
    """Field an element belongs to (ints and Fractions count as QQ)."""
    if isinstance(x, GFElement):
        return GF(x.p)
    return QQ


def parse_field(spec: str):
    """``"q"`` -> QQ, ``"gf:p"`` -> GF(p)."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rationals"):
        return QQ
    if spec.startswith("gf:"):
        return GF(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r}; expected 'q' or 'gf:p'")


def to_integers(values, field):
    """Integer images of ``values`` for fast inner loops.

    Returns ``(ints, scale, modulus)``.  Over QQ every value is multiplied by
    ``scale`` (the lcm of denominators) and ``modulus`` is ``None``; over
    GF(p) the residues are returned with ``scale == 1`` and ``modulus == p``.
    """
    values = list(values)
    if isinstance(field, PrimeField):
        return [field(v).value for v in values], 1, field.p
    scale = 1
    for v in values:
        den = Fraction(v).denominator
        scale = scale * den // gcd(scale, den)
    return [int(Fraction(v) * scale) for v in values], scale, None


def from_integer(total: int, scale: int, field):
    """Inverse of :func:`to_integers` for an accumulated total."""
    if isinstance(field, PrimeField):
        return GFElement(total * pow(scale, -1, field.p), field.p)
    return Fraction(total, scale)
