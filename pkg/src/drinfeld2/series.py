"""Truncated additive power series: exponential and logarithm coefficients.

Both series have terms only at 2-power exponents,
e(z) = sum a_i z^(2^i) and log(z) = sum b_i z^(2^i), with denominators
d_i = 1/a_i and l_i = 1/b_i.  The coefficients obey, for j >= 2 and with
[j] = x^(2^j) + x,

    a_j = ([1] a_{j-1}^2 + a_{j-2}^4) / [j]         a_1 = a_0^2
    b_j = ([1]^(2^(j-1)) b_{j-1} + b_{j-2}) / [j]    b_1 = b_0

    d_j = [j] d_{j-1}^2 d_{j-2}^4 / ([1] d_{j-2}^4 + d_{j-1}^2)
    l_j = [j] l_{j-1} l_{j-2} / ([1]^(2^(j-1)) l_{j-2} + l_{j-1})

Everything is truncated explicitly: coefficient sizes grow doubly
exponentially with the index, so there is no lazy/infinite mode.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .curvering import AElem, KElem, K_ONE, K_ZERO, bracket_x
from .errors import VerificationError

_B1 = KElem(bracket_x(1))  # [1]_x = x^2 + x


def _bracket_k(j: int) -> KElem:
    return KElem(bracket_x(j))


class QSeries:
    """A truncated series sum(c_i z^(2^i)), i = 0..K.

    ``kind`` tags the two families produced here ("exp" / "log") so that
    rescaling can rerun the defining recursion as a cross-check.
    """

    __slots__ = ("_coeffs", "_kind")

    def __init__(self, coeffs: Iterable[KElem], kind: str | None = None):
        self._coeffs = tuple(coeffs)
        self._kind = kind

    @property
    def coeffs(self) -> tuple[KElem, ...]:
        return self._coeffs

    @property
    def kind(self) -> str | None:
        return self._kind

    @property
    def order(self) -> int:
        """The truncation order K (index of the last stored coefficient)."""
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> KElem:
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def evaluate(self, z: KElem) -> KElem:
        """Value of the truncated series at z."""
        terms = []
        power = z
        for i, c in enumerate(self._coeffs):
            if i:
                power = power.square()
            if c:
                terms.append(c * power)
        return KElem.sum(terms)

    def is_identity(self) -> bool:
        """True when the series is z itself up to the truncation order."""
        return self._coeffs[0] == K_ONE and not any(self._coeffs[1:])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((QSeries, self._coeffs))

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"QSeries([{inner}])"


def _exp_chain(K: int, a0: KElem) -> list[KElem]:
    coeffs = [a0]
    if K >= 1:
        coeffs.append(a0.square())
    for j in range(2, K + 1):
        num = _B1 * coeffs[j - 1].square() + coeffs[j - 2].frobenius(2)
        coeffs.append(num / _bracket_k(j))
    return coeffs


def _log_chain(K: int, b0: KElem) -> list[KElem]:
    coeffs = [b0]
    if K >= 1:
        coeffs.append(b0)
    for j in range(2, K + 1):
        num = _B1.frobenius(j - 1) * coeffs[j - 1] + coeffs[j - 2]
        coeffs.append(num / _bracket_k(j))
    return coeffs


def exp_series(K: int) -> QSeries:
    """Normalized exponential coefficients a_0..a_K (a_0 = 1)."""
    if K < 0:
        raise ValueError("truncation order must be nonnegative")
    return QSeries(_exp_chain(K, K_ONE), kind="exp")


def log_series(K: int) -> QSeries:
    """Normalized logarithm coefficients b_0..b_K (b_0 = 1)."""
    if K < 0:
        raise ValueError("truncation order must be nonnegative")
    return QSeries(_log_chain(K, K_ONE), kind="log")


@lru_cache(maxsize=None)
def _d_chain(K: int) -> tuple[KElem, ...]:
    if K == 0:
        return (K_ONE,)
    if K == 1:
        return (K_ONE, K_ONE)
    prev = _d_chain(K - 1)
    d1, d2 = prev[K - 1].square(), prev[K - 2].frobenius(2)
    dK = _bracket_k(K) * d1 * d2 / (_B1 * d2 + d1)
    return prev + (dK,)


@lru_cache(maxsize=None)
def _ell_chain(K: int) -> tuple[KElem, ...]:
    if K == 0:
        return (K_ONE,)
    if K == 1:
        return (K_ONE, K_ONE)
    prev = _ell_chain(K - 1)
    l1, l2 = prev[K - 1], prev[K - 2]
    lK = _bracket_k(K) * l1 * l2 / (_B1.frobenius(K - 1) * l2 + l1)
    return prev + (lK,)


def exp_denominators(K: int) -> list[KElem]:
    """d_0..d_K; each term is checked to be the reciprocal of a_j."""
    if K < 0:
        raise ValueError("truncation order must be nonnegative")
    d = list(_d_chain(K))
    for j, (dj, aj) in enumerate(zip(d, _exp_chain(K, K_ONE))):
        if dj * aj != K_ONE:
            raise VerificationError(f"d_{j} * a_{j} != 1")
    return d


def log_denominators(K: int) -> list[KElem]:
    """l_0..l_K; each term is checked to be the reciprocal of b_j."""
    if K < 0:
        raise ValueError("truncation order must be nonnegative")
    ell = list(_ell_chain(K))
    for j, (lj, bj) in enumerate(zip(ell, _log_chain(K, K_ONE))):
        if lj * bj != K_ONE:
            raise VerificationError(f"l_{j} * b_{j} != 1")
    return ell


def scale_series(s: QSeries, c0: KElem) -> QSeries:
    """The series with initial term c0, i.e. c0 times a normalized series.

    For the logarithm family the defining recursion is linear, so
    rerunning it from c0 reproduces exactly c0*log(z); that rerun is
    performed and checked here.  For the exponential family the
    recursion is quadratic and rerunning it from c0 produces the
    argument-substituted series e(c0*z) = sum a_j c0^(2^j) z^(2^j)
    instead; that identity is what the rerun is checked against, while
    the returned series is the rescaled one, e(z, c0) = c0*e(z).
    """
    if not c0:
        raise ValueError("initial term must be nonzero")
    scaled = tuple(c0 * c for c in s.coeffs)
    if s.kind == "log":
        rerun = _log_chain(s.order, c0)
        if tuple(rerun) != scaled:
            raise VerificationError("log recursion rerun disagrees with b0-scaling")
    elif s.kind == "exp":
        rerun = _exp_chain(s.order, c0)
        power = c0
        for j, (rj, cj) in enumerate(zip(rerun, s.coeffs)):
            if j:
                power = power.square()
            if rj != cj * power:
                raise VerificationError(
                    f"exp recursion rerun disagrees with substitution at index {j}"
                )
    return QSeries(scaled, kind=s.kind)


def compose_scaled(outer: QSeries, a: AElem, inner: QSeries, K: int) -> QSeries:
    """Coefficients of outer(a * inner(z)) up to z^(2^K).

    The coefficient of z^(2^k) is sum_{j=0}^{k} outer_j * a^(2^j) *
    inner_{k-j}^(2^j); with outer = exp and inner = log this is the
    coefficient sequence of rho_a.
    """
    if outer.order < K or inner.order < K:
        raise ValueError("both series must be truncated at order >= K")
    a_powers = [KElem(a)]
    for _ in range(K):
        a_powers.append(a_powers[-1].square())
    out = []
    for k in range(K + 1):
        terms = [
            outer[j] * a_powers[j] * inner[k - j].frobenius(j)
            for j in range(k + 1)
        ]
        out.append(KElem.sum(terms))
    return QSeries(out)


def rho_coefficient_poly(
    k: int, pairs: Sequence[tuple[KElem, KElem]]
) -> list[KElem]:
    """Coefficients of the additive polynomial whose value at a is rho_{a,k}.

    ``pairs[j]`` holds (d_j, l_j); the returned list has the coefficient
    of w^(2^j) at index j, namely 1/(d_j * l_{k-j}^(2^j)), ending with
    1/d_k.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    if len(pairs) <= k:
        raise ValueError("need denominator pairs up to index k")
    return [
        (pairs[j][0] * pairs[k - j][1].frobenius(j)).inverse()
        for j in range(k + 1)
    ]


def functional_equation_check(a: AElem, rho_a_coeffs: Sequence[KElem], K: int) -> None:
    """Check e(a*z) = rho_a(e(z)) coefficientwise up to z^(2^K).

    ``rho_a_coeffs`` is the coefficient sequence of rho_a.  Raises
    VerificationError naming the failing index.
    """
    e = exp_series(K)
    a_k = KElem(a)
    for i in range(K + 1):
        left = e[i] * a_k.frobenius(i)
        right = KElem.sum(
            rho_a_coeffs[m] * e[i - m].frobenius(m)
            for m in range(min(len(rho_a_coeffs) - 1, i) + 1)
        )
        if left != right:
            raise VerificationError(
                f"functional equation fails for a={a} at index {i}: "
                f"{left} != {right}"
            )
