"""The coordinate ring A = F2[x,y]/(y^2+y = x^3+x+1) and its fraction field.

Elements of A are written f(x) + g(x)*y with the relation
y^2 = y + (x^3+x+1) used to keep the y-degree below 2, so the pair
(f, g) of BinaryPoly values is a unique representation.  The pole order
at infinity gives deg(x) = 2 and deg(y) = 3; since the two candidate
degrees 2*deg(f) and 3 + 2*deg(g) have opposite parity they never
cancel, and A has no element of degree 1.

Fractions are kept with denominators in F2[x] only: the conjugation
y -> y+1 turns any denominator into its norm
N(f+gy) = f^2 + fg + g^2*(x^3+x+1), a plain polynomial in x, and
gcd-reduction then happens in the Euclidean ring F2[x].  Every operation
returns the canonical reduced form, so equality is structural.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import ExactnessError
from .f2poly import NEG_INF, BinaryPoly, Degree, gcd

# Right-hand side of the curve equation: y^2 + y = x^3 + x + 1.
CURVE_RHS = BinaryPoly(0b1011)

_P_ZERO = BinaryPoly.zero()
_P_ONE = BinaryPoly.one()


class AElem:
    """An element f(x) + g(x)*y of the coordinate ring, y-reduced."""

    __slots__ = ("_f", "_g")

    def __init__(self, f: BinaryPoly = _P_ZERO, g: BinaryPoly = _P_ZERO):
        self._f = f
        self._g = g

    @property
    def f(self) -> BinaryPoly:
        return self._f

    @property
    def g(self) -> BinaryPoly:
        return self._g

    @classmethod
    def zero(cls) -> AElem:
        return A_ZERO

    @classmethod
    def one(cls) -> AElem:
        return A_ONE

    @classmethod
    def from_poly(cls, f: BinaryPoly) -> AElem:
        return cls(f, _P_ZERO)

    def __bool__(self) -> bool:
        return bool(self._f) or bool(self._g)

    def is_one(self) -> bool:
        return self._f.is_one() and not self._g

    @property
    def degree(self) -> Degree:
        """max(2*deg f, 3 + 2*deg g); NEG_INF for the zero element."""
        candidates = []
        if self._f:
            candidates.append(2 * self._f.degree)
        if self._g:
            candidates.append(3 + 2 * self._g.degree)
        return max(candidates) if candidates else NEG_INF

    def __add__(self, other: AElem) -> AElem:
        if not isinstance(other, AElem):
            return NotImplemented
        return AElem(self._f + other._f, self._g + other._g)

    __sub__ = __add__

    def __mul__(self, other: AElem) -> AElem:
        if not isinstance(other, AElem):
            return NotImplemented
        # (f1+g1*y)(f2+g2*y) with y^2 = y + CURVE_RHS
        f1, g1, f2, g2 = self._f, self._g, other._f, other._g
        gg = g1 * g2
        return AElem(f1 * f2 + gg * CURVE_RHS, f1 * g2 + g1 * f2 + gg)

    def scale(self, p: BinaryPoly) -> AElem:
        """Multiply by a polynomial in x alone."""
        return AElem(self._f * p, self._g * p)

    def square(self) -> AElem:
        # (f+gy)^2 = (f^2 + g^2*(x^3+x+1)) + g^2*y
        g2 = self._g.square()
        return AElem(self._f.square() + g2 * CURVE_RHS, g2)

    def frobenius(self, n: int) -> AElem:
        """Raise to the power 2^n."""
        if n < 0:
            raise ValueError("frobenius exponent must be nonnegative")
        a = self
        for _ in range(n):
            a = a.square()
        return a

    def __pow__(self, n: int) -> AElem:
        if n < 0:
            raise ValueError("negative powers live in KElem, not AElem")
        result = A_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def conjugate(self) -> AElem:
        """Image under y -> y+1, the nontrivial automorphism over F2[x]."""
        return AElem(self._f + self._g, self._g)

    def norm(self) -> BinaryPoly:
        """Product with the conjugate: f^2 + fg + g^2*(x^3+x+1), in F2[x]."""
        return self._f.square() + self._f * self._g + self._g.square() * CURVE_RHS

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AElem)
            and self._f == other._f
            and self._g == other._g
        )

    def __hash__(self) -> int:
        return hash((AElem, self._f.bits, self._g.bits))

    def __str__(self) -> str:
        return render_a(self)

    def __repr__(self) -> str:
        return f"AElem({render_a(self)!r})"


A_ZERO = AElem()
A_ONE = AElem(_P_ONE)
X = AElem(BinaryPoly(0b10))
Y = AElem(_P_ZERO, _P_ONE)


def _content(a: AElem) -> BinaryPoly:
    """gcd of the two coordinate polynomials (0 for the zero element)."""
    if not a.f:
        return a.g
    if not a.g:
        return a.f
    return gcd(a.f, a.g)


class KElem:
    """An element (f + g*y)/h of the fraction field, canonically reduced.

    The denominator is a nonzero polynomial in x and
    gcd(f, g, h) = 1; an element of A embeds with h = 1.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: AElem, den: BinaryPoly = _P_ONE):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self._num = A_ZERO
            self._den = _P_ONE
            return
        c = _content(num)
        g = gcd(c, den)
        if not g.is_one():
            num = AElem(num.f // g, num.g // g)
            den = den // g
        self._num = num
        self._den = den

    @property
    def num(self) -> AElem:
        return self._num

    @property
    def den(self) -> BinaryPoly:
        return self._den

    @classmethod
    def zero(cls) -> KElem:
        return K_ZERO

    @classmethod
    def one(cls) -> KElem:
        return K_ONE

    @classmethod
    def from_a(cls, a: AElem) -> KElem:
        return cls(a)

    @classmethod
    def from_poly(cls, f: BinaryPoly) -> KElem:
        return cls(AElem.from_poly(f))

    def __bool__(self) -> bool:
        return bool(self._num)

    def is_one(self) -> bool:
        return self._den.is_one() and self._num.is_one()

    def is_integral(self) -> bool:
        """True when the reduced denominator is 1, i.e. the value lies in A."""
        return self._den.is_one()

    def as_a(self) -> AElem:
        """Return the value as an AElem; ExactnessError if it is not in A."""
        if not self._den.is_one():
            raise ExactnessError(f"{self} is not integral")
        return self._num

    @property
    def degree(self) -> Degree:
        """deg(num) - 2*deg(den); NEG_INF for zero."""
        if not self._num:
            return NEG_INF
        return self._num.degree - 2 * self._den.degree

    def __add__(self, other: KElem | AElem) -> KElem:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        h1, h2 = self._den, other._den
        if h1 == h2:
            return KElem(self._num + other._num, h1)
        g = gcd(h1, h2)
        h2r = h2 // g
        return KElem(self._num.scale(h2r) + other._num.scale(h1 // g), h1 * h2r)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other: KElem | AElem) -> KElem:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KElem(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> KElem:
        """Multiplicative inverse via the norm; error on zero."""
        if not self._num:
            raise ZeroDivisionError("inverse of zero")
        return KElem(self._num.conjugate().scale(self._den), self._num.norm())

    def __truediv__(self, other: KElem | AElem) -> KElem:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def square(self) -> KElem:
        # The square of a reduced fraction is already reduced: any prime
        # dividing both coordinate squares and den^2 would divide all of
        # (f, g, den), contradicting canonical form.
        sq = KElem.__new__(KElem)
        sq._num = self._num.square()
        sq._den = self._den.square()
        return sq

    def frobenius(self, n: int) -> KElem:
        if n < 0:
            raise ValueError("frobenius exponent must be nonnegative")
        a = self
        for _ in range(n):
            a = a.square()
        return a

    @classmethod
    def sum(cls, terms: Iterable[KElem]) -> KElem:
        """Sum with a single final reduction (one running denominator)."""
        num = A_ZERO
        den = _P_ONE
        for t in terms:
            g = gcd(den, t._den)
            h2r = t._den // g
            num = num.scale(h2r) + t._num.scale(den // g)
            den = den * h2r
        return cls(num, den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AElem):
            return self._den.is_one() and self._num == other
        return (
            isinstance(other, KElem)
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        if self._den.is_one():
            return hash(self._num)
        return hash((KElem, self._num.f.bits, self._num.g.bits, self._den.bits))

    def __str__(self) -> str:
        return render_k(self)

    def __repr__(self) -> str:
        return f"KElem({render_k(self)!r})"


K_ZERO = KElem(A_ZERO)
K_ONE = KElem(A_ONE)


def _coerce(value: KElem | AElem) -> KElem:
    if isinstance(value, KElem):
        return value
    if isinstance(value, AElem):
        return KElem(value)
    return NotImplemented


def bracket_x(j: int) -> AElem:
    """The bracket x^(2^j) + x; zero for j = 0."""
    if j < 0:
        raise ValueError("bracket index must be nonnegative")
    if j == 0:
        return A_ZERO
    return AElem(BinaryPoly((1 << (1 << j)) ^ 2))


def t_elem(k: int) -> AElem:
    """The canonical element of degree k: x^(k/2), or y*x^((k-3)/2)."""
    if k < 2:
        raise ValueError("t_k is defined only for k >= 2")
    if k % 2 == 0:
        return AElem(BinaryPoly(1 << (k // 2)))
    return AElem(_P_ZERO, BinaryPoly(1 << ((k - 3) // 2)))


def degree_basis(k: int) -> tuple[AElem, ...]:
    """The F2-basis (1, t_2, ..., t_{k-1}) of the space of degrees < k.

    Empty for k <= 1 (this package takes the degree-below-1 space to be
    {0}, which keeps the k = 1 vanishing product equal to w).
    """
    if k <= 1:
        return ()
    return (A_ONE,) + tuple(t_elem(j) for j in range(2, k))


def elements_below(k: int) -> list[AElem]:
    """All 2^(k-1) combinations of the degree basis, 0 first.

    The order is fixed: element i sums the basis vectors selected by the
    bits of i, least significant bit = the constant 1.
    """
    if k < 0:
        raise ValueError("degree bound must be nonnegative")
    basis = degree_basis(k)
    out = []
    for i in range(1 << len(basis)):
        a = A_ZERO
        j = i
        pos = 0
        while j:
            if j & 1:
                a = a + basis[pos]
            j >>= 1
            pos += 1
        out.append(a)
    return out


def elements_of_degree(k: int) -> list[AElem]:
    """All 2^(k-1) elements of degree exactly k, as t_k + (degrees < k).

    Degree 0 has the single element 1; degree 1 is empty (no element of
    A has degree 1); negative degrees are an error.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return [A_ONE]
    if k == 1:
        return []
    tk = t_elem(k)
    return [tk + a for a in elements_below(k)]


# --- text rendering and parsing -------------------------------------------
#
# Grammar: sums of '*'-separated factors over {x, y}, e.g. "x^3+x*y+1";
# an optional single '/' splits numerator and denominator, either side
# optionally parenthesized, e.g. "(x^2+x)/(x^2+x+1)".  Any y-power >= 2
# in the input is reduced through the curve equation.


def _monomials(a: AElem) -> list[tuple[int, int, int]]:
    """(degree, x-exponent, y-exponent) triples, descending by degree."""
    terms = [(2 * e, e, 0) for e in a.f.exponents()]
    terms += [(2 * e + 3, e, 1) for e in a.g.exponents()]
    terms.sort(reverse=True)
    return terms


def render_a(a: AElem) -> str:
    """Render an AElem with terms in descending degree order."""
    if not a:
        return "0"
    parts = []
    for _, xe, ye in _monomials(a):
        factors = []
        if xe == 1:
            factors.append("x")
        elif xe > 1:
            factors.append(f"x^{xe}")
        if ye:
            factors.append("y")
        parts.append("*".join(factors) if factors else "1")
    return "+".join(parts)


def _wrap(s: str) -> str:
    return f"({s})" if "+" in s else s


def render_k(v: KElem) -> str:
    """Render a KElem, with parentheses only around multi-term operands."""
    num = render_a(v.num)
    if v.den.is_one():
        return num
    return f"{_wrap(num)}/{_wrap(v.den.to_str())}"


def _split_fraction(text: str) -> tuple[str, str | None]:
    depth = 0
    slash = -1
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        elif ch == "/" and depth == 0:
            if slash >= 0:
                raise ValueError(f"more than one '/' in {text!r}")
            slash = i
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    if slash < 0:
        return text, None
    return text[:slash], text[slash + 1 :]


def _strip_parens(text: str) -> str:
    if text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    return text  # not a single outer group
        return text[1:-1]
    return text


def parse_a(text: str) -> AElem:
    """Parse a ring element; y-powers >= 2 are reduced via the curve."""
    cleaned = _strip_parens(text.replace(" ", ""))
    if not cleaned:
        raise ValueError("empty element string")
    total = A_ZERO
    for term in cleaned.split("+"):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        xe = 0
        ye = 0
        zero = False
        for factor in term.split("*"):
            if factor == "1":
                continue
            if factor == "0":
                zero = True
                break
            m = re.match(r"^([xy])(?:\^(\d+))?$", factor)
            if m is None:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            e = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "x":
                xe += e
            else:
                ye += e
        if zero:
            continue
        mono = AElem(BinaryPoly(1 << xe))
        total = total + mono * (Y ** ye)
    return total


def parse_k(text: str) -> KElem:
    """Parse a field element: an A-element or "num/den" with den in F2[x]."""
    num_text, den_text = _split_fraction(text.replace(" ", ""))
    num = parse_a(num_text)
    if den_text is None:
        return KElem(num)
    den = parse_a(_strip_parens(den_text))
    if den.g:
        # denominators are polynomials in x by construction; clear y anyway
        return KElem(num) / KElem(den)
    return KElem(num, den.f)
