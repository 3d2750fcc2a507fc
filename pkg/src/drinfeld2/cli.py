"""Command-line front-end: tables, rho coefficients, enumeration, verification.

Subcommands
-----------
table      rows (k, d_k, l_k, D_k) as text, CSV, or JSON lines
rho        the coefficient sequence of rho_a for a parsed element
ek         the coefficients of the vanishing polynomial e_k
enumerate  the elements of degree below / exactly a given bound
verify     run the identity suites; exit 0 on success, 1 on failure

All values are exact symbolic elements rendered in the ring grammar
("x^3+x*y+1", "(x^2+x)/(x^2+x+1)"); nothing is ever a float.  Identical
invocations produce byte-identical output.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import json
import random
import sys

import click

from . import carlitz
from .curvering import (
    AElem,
    KElem,
    X,
    Y,
    elements_below,
    elements_of_degree,
    parse_a,
)
from .drinfeld import (
    derive_generators,
    rho_agreement_table,
    rho_from_commutation,
    rho_from_generators,
)
from .ekpoly import (
    bracket_coeffs,
    bracket_to_power,
    bracket_w,
    degree_product,
    division_identity_check,
    power_coeffs,
    product_formula_table,
    twisted_symmetric_sum,
    vanishing_poly,
    vanishing_poly_product,
)
from .errors import ExactnessError, VerificationError
from .f2poly import BinaryPoly, NEG_INF
from .series import (
    compose_scaled,
    exp_denominators,
    exp_series,
    functional_equation_check,
    log_denominators,
    log_series,
    scale_series,
)

RHO_DEGREE_BUDGET = 12
_SEED = 0x5EED


@click.group()
def main() -> None:
    """Exact computations for a rank-one Drinfeld module in characteristic 2."""


@main.command()
@click.option(
    "--max-k",
    type=click.IntRange(2, 14),
    default=8,
    show_default=True,
    help="Largest index k in the table.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "json"]),
    default="text",
    show_default=True,
)
def table(max_k: int, fmt: str) -> None:
    """Print rows (k, d_k, l_k, D_k), cross-checked against the product formulas."""
    try:
        rows = product_formula_table(max_k)
    except VerificationError as exc:
        click.echo(f"cross-check failed: {exc}", err=True)
        sys.exit(1)
    if fmt == "csv":
        click.echo("k,d,ell,D")
        for k, d, ell, big_d in rows:
            click.echo(f"{k},{d},{ell},{big_d}")
    elif fmt == "json":
        for k, d, ell, big_d in rows:
            click.echo(
                json.dumps(
                    {"k": k, "d": str(d), "ell": str(ell), "D": str(big_d)}
                )
            )
    else:
        for k, d, ell, big_d in rows:
            click.echo(f"k={k}")
            click.echo(f"  d   = {d}")
            click.echo(f"  ell = {ell}")
            click.echo(f"  D   = {big_d}")
    status = "main-theorem cross-check: ok"
    if fmt == "text":
        click.echo(status)
    else:
        click.echo(status, err=True)


@main.command()
@click.option("--element", required=True, help='Ring element, e.g. "x^2+x*y+1".')
def rho(element: str) -> None:
    """Print deg(a) and the coefficients of rho_a; all three routes must agree."""
    try:
        a = parse_a(element)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    deg = a.degree
    if deg is not NEG_INF and deg > RHO_DEGREE_BUDGET:
        raise click.UsageError(
            f"deg(a) = {deg} exceeds the budget {RHO_DEGREE_BUDGET}"
        )
    try:
        recursive = rho_from_commutation(a)
        composed = rho_from_generators(a)
        order = 0 if deg is NEG_INF else deg
        series_route = compose_scaled(
            exp_series(order), a, log_series(order), order
        )
        if recursive != composed:
            raise VerificationError(
                f"commutation and composition routes disagree for a={a}"
            )
        for k in range(order + 1):
            if series_route[k] != recursive[k]:
                raise VerificationError(
                    f"series route disagrees for a={a} at k={k}: "
                    f"{series_route[k]} != {recursive[k]}"
                )
    except (VerificationError, ExactnessError) as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    click.echo(f"deg = {'-inf' if deg is NEG_INF else deg}")
    for k in range(order + 1):
        click.echo(f"rho[{k}] = {recursive[k]}")


@main.command()
@click.option("--degree", "k", type=click.IntRange(2, 14), required=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "json"]),
    default="text",
    show_default=True,
)
def ek(k: int, fmt: str) -> None:
    """Print the vanishing polynomial e_k in both coefficient bases."""
    poly = vanishing_poly(k)
    brackets = bracket_coeffs(k)
    if fmt == "csv":
        click.echo("i,exponent,B,T")
        for i, c in enumerate(poly.coeffs):
            t = str(brackets[i]) if i < len(brackets) else ""
            click.echo(f"{i},{1 << i},{c},{t}")
    elif fmt == "json":
        for i, c in enumerate(poly.coeffs):
            record = {"k": k, "i": i, "exponent": 1 << i, "B": str(c)}
            if i < len(brackets):
                record["T"] = str(brackets[i])
            click.echo(json.dumps(record))
    else:
        click.echo(f"e_{k}(w) = {poly}")
        for i, c in enumerate(poly.coeffs):
            click.echo(f"B[{i}] = {c}")
        for i in range(len(brackets)):
            click.echo(f"T[{i}] = {brackets[i]}")


@main.command("enumerate")
@click.option("--degree", "k", type=click.IntRange(0, 16), required=True)
@click.option(
    "--mode",
    type=click.Choice(["below", "exact"]),
    default="below",
    show_default=True,
)
def enumerate_cmd(k: int, mode: str) -> None:
    """List ring elements of degree below (or exactly) the given bound."""
    elems = elements_below(k) if mode == "below" else elements_of_degree(k)
    for a in elems:
        click.echo(str(a))


@main.command()
@click.option(
    "--suite",
    type=click.Choice(
        ["all", "commute", "series", "division", "main", "symbols", "carlitz"]
    ),
    default="all",
    show_default=True,
)
@click.option(
    "--max-k",
    type=click.IntRange(2, 12),
    default=8,
    show_default=True,
    help="Largest index exercised by the suites (brute-force parts are capped).",
)
def verify(suite: str, max_k: int) -> None:
    """Run the identity suites and report pass/fail, one line per check."""
    suites = {
        "commute": _suite_commute,
        "series": _suite_series,
        "division": _suite_division,
        "main": _suite_main,
        "symbols": _suite_symbols,
        "carlitz": _suite_carlitz,
    }
    names = list(suites) if suite == "all" else [suite]
    try:
        for name in names:
            suites[name](max_k)
    except (VerificationError, ExactnessError) as exc:
        click.echo(f"FAIL: {exc}", err=True)
        sys.exit(1)
    click.echo("all checks passed")


def _random_a(rng: random.Random, fdeg: int = 8, gdeg: int = 6) -> AElem:
    return AElem(
        BinaryPoly(rng.getrandbits(fdeg + 1)), BinaryPoly(rng.getrandbits(gdeg + 1))
    )


def _random_k(rng: random.Random) -> KElem:
    den = BinaryPoly(0)
    while not den:
        den = BinaryPoly(rng.getrandbits(5))
    return KElem(_random_a(rng, 5, 4), den)


def _suite_commute(max_k: int) -> None:
    gens = derive_generators()
    y2y = Y.square() + Y
    if gens.rho_y[1] != KElem(y2y) or gens.rho_y[2] != KElem(X * y2y):
        raise VerificationError("derived generator coefficients are wrong")
    click.echo("[commute] generator derivation and commutation OK")
    bound = min(max_k, 8)
    rho_agreement_table(bound)
    click.echo(
        f"[commute] three-way rho agreement on all {2 ** bound} elements "
        f"of degree <= {bound} OK"
    )
    rng = random.Random(_SEED)
    for _ in range(20):
        a, b = _random_a(rng, 4, 3), _random_a(rng, 4, 3)
        if rho_from_commutation(a + b) != rho_from_commutation(
            a
        ) + rho_from_commutation(b):
            raise VerificationError(f"rho is not additive at a={a}, b={b}")
        if rho_from_commutation(a * b) != rho_from_commutation(
            a
        ) * rho_from_commutation(b):
            raise VerificationError(
                f"rho is not multiplicative at a={a}, b={b}"
            )
    click.echo("[commute] homomorphism laws on 20 random pairs OK")


def _suite_series(max_k: int) -> None:
    exp_denominators(max_k)
    log_denominators(max_k)
    click.echo(f"[series] reciprocity d_j*a_j = l_j*b_j = 1 up to {max_k} OK")
    K = 10
    e, log = exp_series(K), log_series(K)
    one = AElem.one()
    if not compose_scaled(e, one, log, K).is_identity():
        raise VerificationError("exp(log(z)) is not the identity series")
    if not compose_scaled(log, one, e, K).is_identity():
        raise VerificationError("log(exp(z)) is not the identity series")
    click.echo("[series] exp/log inversion to order 10 OK")
    rng = random.Random(_SEED)
    for _ in range(20):
        c0 = _random_k(rng)
        while not c0:
            c0 = _random_k(rng)
        z = _random_k(rng)
        if scale_series(e, c0).evaluate(z) != c0 * e.evaluate(z):
            raise VerificationError(f"exp scaling identity fails at c0={c0}")
        if scale_series(log, c0).evaluate(z) != c0 * log.evaluate(z):
            raise VerificationError(f"log scaling identity fails at c0={c0}")
    click.echo("[series] scaling identities for 20 random initial terms OK")
    for a in (X, Y, X + Y, X * Y):
        functional_equation_check(a, rho_from_commutation(a).coeffs, K)
    click.echo("[series] functional equation for x, y, x+y, x*y to order 10 OK")


def _suite_division(max_k: int) -> None:
    for k in range(2, min(max_k, 10) + 1):
        if degree_product(k, "eval") != degree_product(k, "brute"):
            raise VerificationError(f"D_{k}: evaluation differs from product")
    click.echo(f"[division] D_k oracle agreement up to {min(max_k, 10)} OK")
    bound = min(max_k, 8)
    for k in range(2, bound + 1):
        poly = vanishing_poly(k)
        if poly != vanishing_poly_product(k):
            raise VerificationError(f"e_{k}: recursion differs from product")
        big_d = degree_product(k)
        for a in elements_below(k):
            if poly.evaluate_a(a):
                raise VerificationError(f"e_{k}({a}) != 0")
        for a in elements_of_degree(k):
            if poly.evaluate_a(a) != big_d:
                raise VerificationError(f"e_{k}({a}) != D_{k}")
    click.echo(f"[division] e_k oracle and vanishing pattern up to {bound} OK")
    for k in range(2, max_k + 1):
        division_identity_check(k)
    click.echo(f"[division] division identity and C agreement up to {max_k} OK")


def _suite_main(max_k: int) -> None:
    for k, _, _, _ in product_formula_table(max_k):
        click.echo(f"[main] k={k}: d_k OK, ell_k OK, multiplier OK")


def _suite_symbols(max_k: int) -> None:
    rng = random.Random(_SEED)
    for prop in range(1, 6):
        for _ in range(100):
            k = rng.randrange(0, 7)
            j = rng.randrange(0, 5)
            w = KElem(_random_a(rng))
            w2 = KElem(_random_a(rng))
            if prop == 1:
                ok = bracket_w(k, w).frobenius(j) == bracket_w(k, w.frobenius(j))
            elif prop == 2:
                ok = bracket_w(1, bracket_w(k, w)) == bracket_w(k, bracket_w(1, w))
            elif prop == 3:
                ok = bracket_w(k, w + w2) == bracket_w(k, w) + bracket_w(k, w2)
            elif prop == 4:
                b = bracket_w(k, w)
                ok = bracket_w(k + 1, w) == b.square() + bracket_w(1, w)
            else:
                total = KElem.zero()
                b1 = bracket_w(1, w)
                for i in range(k):
                    total = total + b1.frobenius(i)
                ok = bracket_w(k, w) == total
            if not ok:
                raise VerificationError(
                    f"bracket property {prop} fails at k={k}, w={w}"
                )
    click.echo("[symbols] all 5 bracket properties on 100 random inputs each OK")
    for n in range(0, 7):
        values = [_random_k(rng) for _ in range(n)]
        for r in range(0, n + 2):
            twisted_symmetric_sum(n, r, values)  # self-checks both routes
    click.echo("[symbols] symmetric-sum recursion vs enumeration up to n=6 OK")
    for k in range(2, min(max_k, 9) + 1):
        brackets = bracket_coeffs(k)  # self-checks the symmetric-sum formula
        if bracket_to_power(brackets) != vanishing_poly(k):
            raise VerificationError(f"bracket-basis expansion differs at k={k}")
        b = power_coeffs(k)
        if list(vanishing_poly(k).coeffs) != [KElem(c) for c in b]:
            raise VerificationError(f"power coefficients differ at k={k}")
    click.echo(
        f"[symbols] bracket/power coefficient formulas up to {min(max_k, 9)} OK"
    )


def _suite_carlitz(max_k: int) -> None:
    for n in range(0, 7):
        d = carlitz.exp_denominator(n)  # recursion vs closed product inside
        if d != carlitz.monic_product(n):
            raise VerificationError(
                f"carlitz d_{n} differs from the monic product"
            )
    click.echo("[carlitz] d_n = monic product up to n=6 OK")
    report = carlitz.functional_check(8)
    click.echo(
        f"[carlitz] coefficient identity up to i={report.checked_up_to} OK"
        f" ({report.note})"
    )


if __name__ == "__main__":
    main()
