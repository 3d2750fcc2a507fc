"""The twisted polynomial ring K{tau} with the rule tau*c = c^2*tau.

A twisted polynomial sum(c_i tau^i) acts on field elements as the
additive map z -> sum(c_i z^(2^i)).  Multiplication is the
noncommutative product (c tau^i)(d tau^j) = c d^(2^i) tau^(i+j),
extended bilinearly.  Coefficients are kept in the fraction field so
intermediate recursions may divide freely; integrality is asserted by
callers where the theory promises it.
"""

from __future__ import annotations

from typing import Iterable

from .curvering import AElem, KElem, K_ZERO
from .f2poly import NEG_INF, Degree


def _coerce(c: KElem | AElem) -> KElem:
    return c if isinstance(c, KElem) else KElem(c)


class TwistedPoly:
    """A polynomial in tau with KElem coefficients, trailing zeros trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[KElem | AElem] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[KElem, ...]:
        return self._coeffs

    @property
    def tau_degree(self) -> Degree:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @classmethod
    def zero(cls) -> TwistedPoly:
        return cls()

    @classmethod
    def constant(cls, c: KElem | AElem) -> TwistedPoly:
        return cls((c,))

    @classmethod
    def tau(cls) -> TwistedPoly:
        return cls((K_ZERO, KElem.one()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __getitem__(self, i: int) -> KElem:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else K_ZERO

    def __len__(self) -> int:
        return len(self._coeffs)

    def __add__(self, other: TwistedPoly) -> TwistedPoly:
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] = merged[i] + c
        return TwistedPoly(merged)

    __sub__ = __add__

    def __mul__(self, other: TwistedPoly) -> TwistedPoly:
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return TwistedPoly()
        out: list[KElem] = [K_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            for j, d in enumerate(other._coeffs):
                if d:
                    out[i + j] = out[i + j] + c * d.frobenius(i)
        return TwistedPoly(out)

    def apply(self, z: KElem | AElem) -> KElem:
        """Evaluate the additive map: sum(c_i * z^(2^i))."""
        z = _coerce(z)
        terms = []
        power = z
        for i, c in enumerate(self._coeffs):
            if i:
                power = power.square()
            if c:
                terms.append(c * power)
        return KElem.sum(terms)

    def all_integral(self) -> bool:
        """True when every coefficient lies in the coordinate ring."""
        return all(c.is_integral() for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TwistedPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((TwistedPoly, self._coeffs))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"({c})")
            elif i == 1:
                parts.append(f"({c})*t")
            else:
                parts.append(f"({c})*t^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TwistedPoly({str(self)!r})"
