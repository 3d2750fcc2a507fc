"""Additive vanishing polynomials, degree products, and their identities.

The vanishing polynomial of the space of elements of degree below k,

    e_k(w) = prod_{deg(a) < k} (w + a),

is additive: only 2-power exponents survive, so it is stored sparsely as
k coefficients even though it has 2^(k-1) roots.  Its value on the
degree-k layer is the constant D_k = e_k(t_k) = prod_{deg(a)=k} a, and
for k >= 3 the half-space split gives the recursion

    e_k(w) = e_{k-1}(w)^2 + D_{k-1} * e_{k-1}(w),

seeded with e_2(w) = w^2 + w.  The same polynomial expands in the
bracket basis [1]_w^(2^i) with coefficients given by twisted symmetric
sums of D_2..D_{k-1}.  Finally, division of the rho-coefficient
polynomial p_k by e_k produces the exact identities

    p_k(w) = e_k(w)^2 / d_k + C * e_k(w),
    C = 1/d_{k-1} + B_{k,k-2}^2/d_k = 1/D_k + D_k/d_k,

from which d_k and l_k are reconstructed from the D-values alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .curvering import (
    AElem,
    A_ONE,
    A_ZERO,
    KElem,
    K_ONE,
    K_ZERO,
    elements_below,
    elements_of_degree,
    t_elem,
)
from .errors import VerificationError
from .series import exp_denominators, log_denominators, rho_coefficient_poly

BRUTE_FORCE_BUDGET = 10


def _coerce(c: KElem | AElem) -> KElem:
    return c if isinstance(c, KElem) else KElem(c)


class AddPoly:
    """An additive polynomial sum(c_i w^(2^i)), coefficients in K."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[KElem | AElem] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[KElem, ...]:
        return self._coeffs

    def __getitem__(self, i: int) -> KElem:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else K_ZERO

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: AddPoly) -> AddPoly:
        if not isinstance(other, AddPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] = merged[i] + c
        return AddPoly(merged)

    __sub__ = __add__

    def scale(self, c: KElem | AElem) -> AddPoly:
        c = _coerce(c)
        return AddPoly(c * v for v in self._coeffs)

    def poly_square(self) -> AddPoly:
        """The square as a polynomial: shifts every exponent up one level."""
        if not self._coeffs:
            return self
        return AddPoly((K_ZERO,) + tuple(c.square() for c in self._coeffs))

    def evaluate(self, z: KElem | AElem) -> KElem:
        z = _coerce(z)
        terms = []
        power = z
        for i, c in enumerate(self._coeffs):
            if i:
                power = power.square()
            if c:
                terms.append(c * power)
        return KElem.sum(terms)

    def evaluate_a(self, a: AElem) -> AElem:
        """Evaluate inside A; requires every coefficient to be integral."""
        total = A_ZERO
        power = a
        for i, c in enumerate(self._coeffs):
            if i:
                power = power.square()
            if c:
                total = total + c.as_a() * power
        return total

    def all_integral(self) -> bool:
        return all(c.is_integral() for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AddPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((AddPoly, self._coeffs))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            w = "w" if i == 0 else f"w^{1 << i}"
            parts.append(f"({c})*{w}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AddPoly({str(self)!r})"


class OneBasisPoly:
    """The same kind of polynomial written in the basis [1]_w^(2^i)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[KElem | AElem] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[KElem, ...]:
        return self._coeffs

    def __getitem__(self, i: int) -> KElem:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else K_ZERO

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OneBasisPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((OneBasisPoly, self._coeffs))

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"OneBasisPoly([{inner}])"


def bracket_w(k: int, w: KElem | AElem) -> KElem:
    """The bracket value w^(2^k) + w (zero for k = 0)."""
    if k < 0:
        raise ValueError("bracket index must be nonnegative")
    w = _coerce(w)
    return w.frobenius(k) + w


def bracket_to_power(p: OneBasisPoly) -> AddPoly:
    """Expand sum(T_i [1]_w^(2^i)) into the w-power basis.

    [1]_w^(2^i) = w^(2^(i+1)) + w^(2^i), so the power-basis coefficient
    at level i is T_i + T_{i-1} with out-of-range terms zero.
    """
    t = p.coeffs
    if not t:
        return AddPoly()
    return AddPoly(
        [t[0]]
        + [t[i] + t[i - 1] for i in range(1, len(t))]
        + [t[len(t) - 1]]
    )


def power_to_bracket(p: AddPoly) -> OneBasisPoly:
    """Invert bracket_to_power; the coefficients must sum to zero.

    (A polynomial lies in the span of the brackets exactly when it
    vanishes at w = 1, i.e. its coefficients cancel.)
    """
    b = p.coeffs
    if not b:
        return OneBasisPoly()
    t = []
    acc = K_ZERO
    for c in b[:-1]:
        acc = acc + c
        t.append(acc)
    if acc != b[-1]:
        raise ValueError("polynomial is not in the bracket-basis span")
    return OneBasisPoly(t)


# --- dense product oracle ---------------------------------------------------


def _dense_mul(p: list[AElem], q: list[AElem]) -> list[AElem]:
    out = [A_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _tree_product(factors: list[list[AElem]]) -> list[AElem]:
    while len(factors) > 1:
        paired = [
            _dense_mul(factors[i], factors[i + 1])
            for i in range(0, len(factors) - 1, 2)
        ]
        if len(factors) % 2:
            paired.append(factors[-1])
        factors = paired
    return factors[0]


def vanishing_poly_product(k: int, budget: int = BRUTE_FORCE_BUDGET) -> AddPoly:
    """e_k as the literal expanded product over all roots.

    The dense product is computed with a balanced tree of schoolbook
    multiplications and then checked to be supported on 2-power
    exponents only.  This is the independent oracle for the recursion.
    """
    if k < 1:
        raise ValueError("the product form needs k >= 1")
    if k > budget:
        raise ValueError(f"brute-force budget exceeded: k={k} > {budget}")
    dense = _tree_product([[a, A_ONE] for a in elements_below(k)])
    coeffs = []
    next_power = 1
    for i, c in enumerate(dense):
        if i == next_power:
            coeffs.append(c)
            next_power <<= 1
        elif c:
            raise VerificationError(
                f"product of linear factors has a stray w^{i} term for k={k}"
            )
    return AddPoly(coeffs)


@lru_cache(maxsize=None)
def _vanishing_chain(k: int) -> AddPoly:
    if k == 2:
        return AddPoly((A_ONE, A_ONE))
    prev = _vanishing_chain(k - 1)
    d_prev = prev.evaluate_a(t_elem(k - 1))
    return prev.poly_square() + prev.scale(d_prev)


def vanishing_poly(k: int) -> AddPoly:
    """e_k from the square-and-scale recursion, seeded with e_2 = w^2 + w."""
    if k < 2:
        raise ValueError("the recursion is seeded at k = 2")
    return _vanishing_chain(k)


def degree_product(
    k: int, mode: str = "eval", budget: int = BRUTE_FORCE_BUDGET
) -> AElem:
    """D_k, the product of all elements of degree k.

    mode "eval" computes e_k(t_k); mode "brute" multiplies the 2^(k-1)
    elements directly (tree-reduced, subject to the budget).
    """
    if k < 2:
        raise ValueError("the D-chain starts at k = 2")
    if mode == "eval":
        return vanishing_poly(k).evaluate_a(t_elem(k))
    if mode == "brute":
        if k > budget:
            raise ValueError(f"brute-force budget exceeded: k={k} > {budget}")
        values = elements_of_degree(k)
        while len(values) > 1:
            paired = [
                values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)
            ]
            if len(values) % 2:
                paired.append(values[-1])
            values = paired
        return values[0]
    raise ValueError(f"unknown mode {mode!r}")


@lru_cache(maxsize=None)
def _power_chain(k: int) -> tuple[AElem, ...]:
    if k == 2:
        return (A_ONE, A_ONE)
    prev = _power_chain(k - 1)
    d_prev = degree_product(k - 1)
    row = [d_prev * prev[0]]
    row += [d_prev * prev[i] + prev[i - 1].square() for i in range(1, k - 1)]
    row.append(prev[k - 2])
    return tuple(row)


def power_coeffs(k: int) -> list[AElem]:
    """B_{k,0}..B_{k,k-1}, the w-power coefficients of e_k.

    Computed by the coefficient recursion B_{k,i} = D_{k-1} B_{k-1,i} +
    B_{k-1,i-1}^2 with B_{k,k-1} = 1 and B_{k,0} = D_{k-1}...D_2.
    """
    if k < 2:
        raise ValueError("coefficients start at k = 2")
    return list(_power_chain(k))


def twisted_symmetric_sum(
    n: int, r: int, values: Sequence[KElem]
) -> KElem:
    """S_{n,r}: sum over n >= i_1 > ... > i_r >= 1 of twisted products.

    The j-th chosen value is raised to the power 2^(n-j+1-i_j).  The
    direct enumeration is compared against the recursion
    S_{n+1,r} = S_{n,r}^2 + x_{n+1} S_{n,r-1} before returning.
    """
    if n < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    if len(values) != n:
        raise ValueError(f"expected {n} values, got {len(values)}")
    direct = _symmetric_direct(n, r, values)
    if direct != _symmetric_recursive(n, r, values):
        raise VerificationError(
            f"symmetric-sum recursion disagrees with enumeration at n={n}, r={r}"
        )
    return direct


def _symmetric_direct(n: int, r: int, values: Sequence[KElem]) -> KElem:
    if r > n:
        return K_ZERO
    total = K_ZERO
    for combo in combinations(range(1, n + 1), r):
        term = K_ONE
        for j, i_j in enumerate(reversed(combo), start=1):
            term = term * values[i_j - 1].frobenius(n - j + 1 - i_j)
        total = total + term
    return total


def _symmetric_recursive(n: int, r: int, values: Sequence[KElem]) -> KElem:
    if r == 0:
        return K_ONE
    if r > n:
        return K_ZERO
    prev = values[: n - 1]
    square = _symmetric_recursive(n - 1, r, prev).square()
    return square + values[n - 1] * _symmetric_recursive(n - 1, r - 1, prev)


def bracket_coeffs(k: int) -> OneBasisPoly:
    """T_{k,0}..T_{k,k-2}, the bracket-basis coefficients of e_k.

    T_{k,i} = S_{k-2,k-2-i}(D_2,...,D_{k-1}); the values are also checked
    against the chain recursion T_{k+1,i} = T_{k,i-1}^2 + D_k T_{k,i}.
    """
    if k < 2:
        raise ValueError("coefficients start at k = 2")
    d_values = [KElem(degree_product(j)) for j in range(2, k)]
    n = k - 2
    from_sums = [
        twisted_symmetric_sum(n, n - i, d_values) for i in range(n + 1)
    ]
    chain = _bracket_chain(k)
    if tuple(from_sums) != chain:
        raise VerificationError(
            f"bracket coefficients: symmetric sums disagree with recursion at k={k}"
        )
    return OneBasisPoly(from_sums)


@lru_cache(maxsize=None)
def _bracket_chain(k: int) -> tuple[KElem, ...]:
    if k == 2:
        return (K_ONE,)
    prev = _bracket_chain(k - 1)
    dk = KElem(degree_product(k - 1))
    row = [dk * prev[0]]
    row += [prev[i - 1].square() + dk * prev[i] for i in range(1, k - 2)]
    row.append(K_ONE)
    return tuple(row)


# --- the division identity and the reconstruction formulas -----------------


@dataclass(frozen=True)
class DivisionQuotient:
    """The quotient p_k / e_k: an additive part e_k(w)/d_k plus a constant."""

    additive_part: AddPoly
    constant: KElem


def division_identity_check(k: int) -> tuple[DivisionQuotient, KElem]:
    """Verify p_k(w) = e_k(w)^2/d_k + C*e_k(w) and the two forms of C.

    C is computed both as 1/d_{k-1} + B_{k,k-2}^2/d_k and as
    1/D_k + D_k/d_k; the identity is checked coefficient by coefficient.
    Returns the quotient record and C.
    """
    if k < 2:
        raise ValueError("the identity starts at k = 2")
    d = exp_denominators(k)
    ell = log_denominators(k)
    p = rho_coefficient_poly(k, list(zip(d, ell)))
    b = power_coeffs(k)
    dk_inv = d[k].inverse()

    c_theorem = d[k - 1].inverse() + KElem(b[k - 2].square()) * dk_inv
    big_d = KElem(degree_product(k))
    c_product = big_d.inverse() + big_d * dk_inv
    if c_theorem != c_product:
        raise VerificationError(
            f"the two expressions for C disagree at k={k}: "
            f"{c_theorem} != {c_product}"
        )

    for j in range(k + 1):
        rhs = K_ZERO
        if j >= 1:
            rhs = rhs + KElem(b[j - 1].square()) * dk_inv
        if j <= k - 1:
            rhs = rhs + c_theorem * KElem(b[j])
        if p[j] != rhs:
            raise VerificationError(
                f"division identity fails at k={k}, exponent 2^{j}: "
                f"{p[j]} != {rhs}"
            )

    quotient = DivisionQuotient(
        additive_part=AddPoly(KElem(c) * dk_inv for c in b),
        constant=c_theorem,
    )
    return quotient, c_theorem


def product_formula_table(
    kmax: int,
) -> list[tuple[int, KElem, KElem, AElem]]:
    """Rows (k, d_k, l_k, D_k) with d, l rebuilt from the D-values alone.

    Reconstruction: d_2 = D_2 and, for k >= 3,

        d_k = D_k d_{k-1} / (d_{k-1} + D_k)
              * (1 + D_k + D_{k-1}^2 + ... + D_2^(2^(k-2))),

    where the trailing factor must also equal B_{k+1,k-1}; then

        l_k = D_k d_k / ((d_k + D_k^2) * D_{k-1} D_{k-2} ... D_2).

    Every reconstructed value is compared against the series recursions;
    a mismatch raises VerificationError naming k and the quantity.
    """
    if kmax < 2:
        raise ValueError("the table starts at k = 2")
    d_series = exp_denominators(kmax)
    ell_series = log_denominators(kmax)
    big_d = {k: degree_product(k) for k in range(2, kmax + 1)}

    rows: list[tuple[int, KElem, KElem, AElem]] = []
    d_prev = K_ONE  # d_1
    running_product = K_ONE  # D_{k-1} * ... * D_2
    for k in range(2, kmax + 1):
        multiplier = _reconstruction_multiplier(k, big_d)
        if multiplier != KElem(_power_chain(k + 1)[k - 1]):
            raise VerificationError(
                f"multiplier differs from B_{{{k + 1},{k - 1}}} at k={k}"
            )
        dk = KElem(big_d[k])
        if k == 2:
            d_k = dk
        else:
            d_k = dk * d_prev / (d_prev + dk) * multiplier
        ell_k = dk * d_k / ((d_k + dk.square()) * running_product)
        if d_k != d_series[k]:
            raise VerificationError(
                f"reconstructed d_{k} differs from the series recursion"
            )
        if ell_k != ell_series[k]:
            raise VerificationError(
                f"reconstructed l_{k} differs from the series recursion"
            )
        rows.append((k, d_k, ell_k, big_d[k]))
        d_prev = d_k
        running_product = running_product * dk
    return rows


def _reconstruction_multiplier(k: int, big_d: dict[int, AElem]) -> KElem:
    """1 + D_k + D_{k-1}^2 + D_{k-2}^4 + ... + D_2^(2^(k-2))."""
    multiplier = A_ONE + big_d[k]
    for j in range(1, k - 1):
        multiplier = multiplier + big_d[k - j].frobenius(j)
    return KElem(multiplier)
