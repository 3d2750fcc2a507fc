"""The module generators and the images rho_a, computed three ways.

The action is determined by its values on x and y,

    rho_x = x + (x^2+x) tau + tau^2
    rho_y = y + y_1 tau + y_2 tau^2 + tau^3,

where y_1, y_2 are solved here from the commutation rho_x rho_y =
rho_y rho_x rather than copied in, with exact-divisibility checked at
each step.  For a general element a the coefficient sequence of rho_a
comes from three independent routes: the commutation recursion, plain
composition of the generator images, and the exponential/logarithm
series; the agreement table asserts all three coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .curvering import (
    AElem,
    A_ONE,
    KElem,
    K_ONE,
    X,
    Y,
    bracket_x,
    elements_below,
)
from .errors import ExactnessError, VerificationError
from .f2poly import NEG_INF
from .series import compose_scaled, exp_series, log_series
from .twisted import TwistedPoly


@dataclass(frozen=True)
class DrinfeldGenerators:
    rho_x: TwistedPoly
    rho_y: TwistedPoly


def _exact(value: KElem, what: str) -> AElem:
    if not value.is_integral():
        raise ExactnessError(f"{what} left the coordinate ring: {value}")
    return value.as_a()


def derive_generators() -> DrinfeldGenerators:
    """Solve for the generator coefficients and verify commutation.

    With x_1 = x^2+x fixed (the sign normalization), the tau^1 part of
    the commutator forces x_1*(y^2+y) = y_1*(x^2+x), and the tau^2 part
    forces (x^4+x)*y_2 = y_1*x_1^2 + y_1^2*x_1 + (y^4+y).  Both
    divisions must be exact in A, and the assembled generators must
    commute exactly.
    """
    x1 = bracket_x(1)
    rho_x = TwistedPoly((KElem(X), KElem(x1), K_ONE))

    y2y = Y.square() + Y
    y1 = _exact(KElem(x1 * y2y) / KElem(bracket_x(1)), "solving y_1")
    rhs = y1 * x1 * x1 + y1 * y1 * x1 + (Y.frobenius(2) + Y)
    y2 = _exact(KElem(rhs) / KElem(bracket_x(2)), "solving y_2")
    rho_y = TwistedPoly((KElem(Y), KElem(y1), KElem(y2), K_ONE))

    if rho_x * rho_y != rho_y * rho_x:
        raise VerificationError("derived generators do not commute")
    return DrinfeldGenerators(rho_x, rho_y)


def rho_from_commutation(a: AElem) -> TwistedPoly:
    """rho_a from the recursion forced by commutation with rho_x.

    rho_{a,0} = a, rho_{a,1} = a^2 + a, and for k >= 2

        rho_{a,k} = ([1]^(2^(k-1)) r_{k-1} + r_{k-2}
                     + [1] r_{k-1}^2 + r_{k-2}^4) / [k],

    ending at k = deg(a) with leading coefficient 1.  Every division by
    [k] must be exact; every coefficient must lie in A.
    """
    d = a.degree
    if d is NEG_INF or d == 0:
        return TwistedPoly((KElem(a),))
    b1 = KElem(bracket_x(1))
    coeffs = [KElem(a), KElem(a.square() + a)]
    for k in range(2, d + 1):
        num = (
            b1.frobenius(k - 1) * coeffs[k - 1]
            + coeffs[k - 2]
            + b1 * coeffs[k - 1].square()
            + coeffs[k - 2].frobenius(2)
        )
        rk = num / KElem(bracket_x(k))
        _exact(rk, f"rho coefficient {k} of {a}")
        coeffs.append(rk)
    if coeffs[d] != K_ONE:
        raise VerificationError(f"rho_a for a={a} is not monic: {coeffs[d]}")
    return TwistedPoly(coeffs)


def rho_from_generators(a: AElem) -> TwistedPoly:
    """rho_a as f(rho_x) + g(rho_x) * rho_y for a = f(x) + g(x)*y.

    Horner evaluation keeps intermediate tau-degrees minimal, which
    matters because coefficient sizes grow doubly exponentially with the
    tau-degree.
    """
    gens = _generators()
    fx = _eval_at_rho_x(a.f, gens.rho_x)
    if not a.g:
        return fx
    return fx + _eval_at_rho_x(a.g, gens.rho_x) * gens.rho_y


_GENERATORS: DrinfeldGenerators | None = None


def _generators() -> DrinfeldGenerators:
    global _GENERATORS
    if _GENERATORS is None:
        _GENERATORS = derive_generators()
    return _GENERATORS


def _eval_at_rho_x(f, rho_x: TwistedPoly) -> TwistedPoly:
    one = TwistedPoly((K_ONE,))
    acc = TwistedPoly()
    for e in range(f.bits.bit_length() - 1, -1, -1):
        acc = acc * rho_x
        if (f.bits >> e) & 1:
            acc = acc + one
    return acc


def rho_agreement_table(max_deg: int) -> Mapping[AElem, tuple[KElem, ...]]:
    """Coefficients of rho_a for every a of degree <= max_deg, cross-checked.

    For each element the commutation recursion, the generator
    composition, and the series route (exp composed with a*log) must
    agree coefficientwise; coefficients must be integral, the
    coefficient at deg(a) must be 1 and later series coefficients 0.
    """
    if max_deg < 2:
        raise ValueError("need max_deg >= 2 to cover a nontrivial element")
    e = exp_series(max_deg)
    log = log_series(max_deg)
    table: dict[AElem, tuple[KElem, ...]] = {}
    for a in elements_below(max_deg + 1):
        recursive = rho_from_commutation(a)
        composed = rho_from_generators(a)
        if recursive != composed:
            raise VerificationError(
                f"recursion and composition disagree for a={a}"
            )
        series_route = compose_scaled(e, a, log, max_deg)
        d = a.degree
        top = -1 if d is NEG_INF else d
        for k, c in enumerate(series_route):
            if c != recursive[k]:
                raise VerificationError(
                    f"series route disagrees for a={a} at k={k}: "
                    f"{c} != {recursive[k]}"
                )
            if not c.is_integral():
                raise VerificationError(
                    f"non-integral rho coefficient for a={a} at k={k}: {c}"
                )
            if k > top and c:
                raise VerificationError(
                    f"rho coefficient past deg(a) is nonzero for a={a} at k={k}"
                )
        if a and recursive[top] != K_ONE:
            raise VerificationError(f"leading coefficient not 1 for a={a}")
        table[a] = recursive.coeffs
    return table
