"""Dense univariate polynomials over GF(2), bit-packed into Python ints.

The polynomial c_n x^n + ... + c_1 x + c_0 is stored as the integer
c_n 2^n + ... + c_1 2 + c_0.  Addition is xor, squaring spreads the bits
apart (Frobenius), and multiplication is carry-less schoolbook over the
set bits of the smaller operand.  Python's arbitrary-precision ints make
this exact at any degree; the heavy consumers in this package routinely
push degrees into the tens of thousands.

The zero polynomial has no degree; ``degree`` returns the ``NEG_INF``
sentinel for it, which supports comparisons but no arithmetic, so a
forgotten zero-check fails loudly instead of corrupting a degree count.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Union


class _NegativeInfinity:
    """Order-only sentinel: smaller than every int, equal only to itself."""

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return other is self

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("NEG_INF")

    def __repr__(self) -> str:
        return "NEG_INF"


NEG_INF = _NegativeInfinity()

Degree = Union[int, _NegativeInfinity]

# Squaring table: byte -> the same 8 bits interleaved with zeros (16 bits,
# little-endian pair of bytes).
def _spread_byte(b: int) -> int:
    w = 0
    for i in range(8):
        if b & (1 << i):
            w |= 1 << (2 * i)
    return w


_SQUARE_BYTES = [(_spread_byte(b)).to_bytes(2, "little") for b in range(256)]


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    if a == 0 or b == 0:
        return 0
    if a.bit_length() < b.bit_length():
        a, b = b, a
    acc = 0
    while b:
        top = b.bit_length() - 1
        acc ^= a << top
        b ^= 1 << top
    return acc


def _square(a: int) -> int:
    """Carry-less square: interleave zeros between the bits of ``a``."""
    if a == 0:
        return 0
    data = a.to_bytes((a.bit_length() + 7) // 8, "little")
    return int.from_bytes(b"".join(map(_SQUARE_BYTES.__getitem__, data)), "little")


def _divmod_bits(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length()
    return q, a


def _gcd_bits(a: int, b: int) -> int:
    while b:
        db = b.bit_length()
        da = a.bit_length()
        while da >= db:
            a ^= b << (da - db)
            da = a.bit_length()
        a, b = b, a
    return a


_TERM_RE = re.compile(r"^([a-zA-Z])(?:\^(\d+))?$")


class BinaryPoly:
    """An immutable univariate polynomial over GF(2).

    Over GF(2) every nonzero polynomial is monic, addition and
    subtraction coincide, and squaring is coefficient-wise.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient bits must be a nonnegative int")
        self._bits = bits

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def degree(self) -> Degree:
        """Index of the highest set bit; NEG_INF for the zero polynomial."""
        return self._bits.bit_length() - 1 if self._bits else NEG_INF

    @classmethod
    def zero(cls) -> BinaryPoly:
        return _ZERO

    @classmethod
    def one(cls) -> BinaryPoly:
        return _ONE

    @classmethod
    def x(cls) -> BinaryPoly:
        """The generator of the polynomial ring (whatever it is named)."""
        return _X

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> BinaryPoly:
        """Build a polynomial from the exponents with coefficient 1."""
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            bits ^= 1 << e
        return cls(bits)

    def exponents(self) -> Iterator[int]:
        """Yield the exponents with nonzero coefficient, descending."""
        bits = self._bits
        while bits:
            top = bits.bit_length() - 1
            yield top
            bits ^= 1 << top

    def __bool__(self) -> bool:
        return self._bits != 0

    def is_one(self) -> bool:
        return self._bits == 1

    def __add__(self, other: BinaryPoly) -> BinaryPoly:
        if not isinstance(other, BinaryPoly):
            return NotImplemented
        return BinaryPoly(self._bits ^ other._bits)

    __sub__ = __add__

    def __mul__(self, other: BinaryPoly) -> BinaryPoly:
        if not isinstance(other, BinaryPoly):
            return NotImplemented
        return BinaryPoly(_clmul(self._bits, other._bits))

    def square(self) -> BinaryPoly:
        return BinaryPoly(_square(self._bits))

    def __pow__(self, n: int) -> BinaryPoly:
        if n < 0:
            raise ValueError("negative powers are not defined in GF(2)[x]")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def frobenius(self, n: int) -> BinaryPoly:
        """Raise to the power 2^n by repeated squaring."""
        if n < 0:
            raise ValueError("frobenius exponent must be nonnegative")
        bits = self._bits
        for _ in range(n):
            bits = _square(bits)
        return BinaryPoly(bits)

    def __divmod__(self, other: BinaryPoly) -> tuple[BinaryPoly, BinaryPoly]:
        if not isinstance(other, BinaryPoly):
            return NotImplemented
        q, r = _divmod_bits(self._bits, other._bits)
        return BinaryPoly(q), BinaryPoly(r)

    def __floordiv__(self, other: BinaryPoly) -> BinaryPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: BinaryPoly) -> BinaryPoly:
        if not isinstance(other, BinaryPoly):
            return NotImplemented
        return BinaryPoly(_divmod_bits(self._bits, other._bits)[1])

    def exact_div(self, other: BinaryPoly) -> BinaryPoly:
        """Divide, raising ExactnessError if a remainder is left."""
        from .errors import ExactnessError

        q, r = _divmod_bits(self._bits, other._bits)
        if r:
            raise ExactnessError(
                f"inexact polynomial division: {self} by {other}"
            )
        return BinaryPoly(q)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BinaryPoly) and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((BinaryPoly, self._bits))

    def to_str(self, var: str = "x") -> str:
        """Render as "x^4+x", descending powers; "0" and "1" for constants."""
        if self._bits == 0:
            return "0"
        parts = []
        for e in self.exponents():
            if e == 0:
                parts.append("1")
            elif e == 1:
                parts.append(var)
            else:
                parts.append(f"{var}^{e}")
        return "+".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "x") -> BinaryPoly:
        """Parse the ``to_str`` grammar; '*' between factors is accepted."""
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise ValueError("empty polynomial string")
        bits = 0
        for term in cleaned.split("+"):
            exponent = 0
            for factor in term.split("*"):
                if factor == "1":
                    continue
                if factor == "0":
                    exponent = -1
                    break
                m = _TERM_RE.match(factor)
                if m is None or m.group(1) != var:
                    raise ValueError(f"cannot parse term {term!r} in {text!r}")
                exponent += int(m.group(2)) if m.group(2) else 1
            if exponent >= 0:
                bits ^= 1 << exponent
        return cls(bits)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"BinaryPoly({self.to_str()!r})"


_ZERO = BinaryPoly(0)
_ONE = BinaryPoly(1)
_X = BinaryPoly(2)


def gcd(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    """Greatest common divisor; monic automatically, gcd(0, 0) is an error."""
    if not a and not b:
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    return BinaryPoly(_gcd_bits(a.bits, b.bits))
