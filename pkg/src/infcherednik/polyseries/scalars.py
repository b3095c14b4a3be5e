"""Exact scalars: rationals (``fractions.Fraction``) and prime-field residues."""

from fractions import Fraction


class CharacteristicError(ValueError):
    """Raised when scalars of different characteristic are combined."""


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Residue:
    """An element of F_p, stored as its representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise CharacteristicError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise CharacteristicError(f"cannot mix F_{self.p} and a rational")
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

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
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

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.p}"

    __str__ = __repr__


class Field:
    """Coefficient field: Q when ``char == 0``, otherwise F_p.

    Calling the field coerces ints, Fractions, residues and strings
    (``"3/2"``, ``"-4"``, ``"3 mod 7"``) into it.
    """

    __slots__ = ("char",)

    def __init__(self, char=0):
        if char != 0 and not is_prime(char):
            raise ValueError(f"characteristic must be 0 or a prime, got {char}")
        self.char = char

    def __call__(self, value):
        p = self.char
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Residue):
            if value.p != p:
                raise CharacteristicError(f"residue mod {value.p} in field of characteristic {p}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if p == 0:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return Residue(value, p)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{p}")
            return Residue(value.numerator, p) / value.denominator
        raise TypeError(f"cannot coerce {value!r} into F_{p}")

    def parse(self, text):
        text = text.strip()
        if "mod" in text:
            k, _, q = text.partition("mod")
            if int(q) != self.char:
                raise CharacteristicError(f"'{text}' is not in characteristic {self.char}")
            return Residue(int(k), self.char)
        return self(Fraction(text))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)


def scalar_to_str(c):
    """Wire form of a scalar: ``"p/q"`` for rationals, ``"k mod p"`` for residues."""
    if isinstance(c, Residue):
        return f"{c.value} mod {c.p}"
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def reduce_mod(c, p):
    """Image of a rational in F_p."""
    return Field(p)(Fraction(c))
