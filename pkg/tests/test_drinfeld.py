import random

import pytest

from drinfeld2.curvering import (
    AElem,
    A_ONE,
    A_ZERO,
    KElem,
    K_ONE,
    X,
    Y,
    elements_below,
    parse_a,
)
from drinfeld2.drinfeld import (
    derive_generators,
    rho_agreement_table,
    rho_from_commutation,
    rho_from_generators,
)
from drinfeld2.f2poly import BinaryPoly
from drinfeld2.twisted import TwistedPoly


def test_generator_derivation():
    gens = derive_generators()
    y2y = Y.square() + Y
    assert gens.rho_y[1] == KElem(y2y)  # solved y_1 = y^2+y
    assert gens.rho_y[2] == KElem(X * y2y)  # solved y_2 = x(y^2+y)
    assert gens.rho_x * gens.rho_y == gens.rho_y * gens.rho_x
    assert gens.rho_x[0] == KElem(X) and gens.rho_y[0] == KElem(Y)
    assert gens.rho_x[2] == K_ONE and gens.rho_y[3] == K_ONE


def test_rho_recursive_examples():
    assert [str(c) for c in rho_from_commutation(X).coeffs] == ["x", "x^2+x", "1"]
    assert [str(c) for c in rho_from_commutation(Y).coeffs] == [
        "y",
        "x^3+x+1",
        "x^4+x^2+x",
        "1",
    ]
    assert rho_from_commutation(A_ONE) == TwistedPoly((K_ONE,))
    assert rho_from_commutation(A_ZERO) == TwistedPoly.zero()
    assert [str(c) for c in rho_from_commutation(X + A_ONE).coeffs] == [
        "x+1",
        "x^2+x",
        "1",
    ]


def test_rho_compose_examples():
    gens = derive_generators()
    sq = rho_from_generators(X * X)
    assert sq == gens.rho_x * gens.rho_x
    assert sq.tau_degree == 4 and sq[4] == K_ONE
    s = rho_from_generators(X + Y)
    assert s == gens.rho_x + gens.rho_y
    p = rho_from_generators(X * Y)
    assert p == gens.rho_x * gens.rho_y == gens.rho_y * gens.rho_x


def test_rho_structure():
    rng = random.Random(17)
    for _ in range(25):
        a = AElem(BinaryPoly(rng.getrandbits(5)), BinaryPoly(rng.getrandbits(3)))
        r = rho_from_commutation(a)
        assert r == rho_from_generators(a)
        if a:
            assert r.tau_degree == (0 if a.degree == 0 else a.degree)
            assert r[0] == KElem(a)
            assert r[r.tau_degree] == K_ONE
        assert r.all_integral()


def test_homomorphism_exhaustive_small():
    cache = {}

    def rho(a):
        if a not in cache:
            cache[a] = rho_from_commutation(a)
        return cache[a]

    elems = elements_below(7)
    for a in elems:
        for b in elems:
            assert rho(a + b) == rho(a) + rho(b)
            assert rho(a * b) == rho(a) * rho(b)


def test_homomorphism_random_larger():
    rng = random.Random(23)
    for _ in range(10):
        a = AElem(BinaryPoly(rng.getrandbits(5)), BinaryPoly(rng.getrandbits(4)))
        b = AElem(BinaryPoly(rng.getrandbits(5)), BinaryPoly(rng.getrandbits(4)))
        assert rho_from_commutation(a * b) == rho_from_commutation(
            a
        ) * rho_from_commutation(b)
        assert rho_from_commutation(a) * rho_from_commutation(
            b
        ) == rho_from_commutation(b) * rho_from_commutation(a)


def test_agreement_table_small():
    table = rho_agreement_table(3)
    assert len(table) == 8
    for a, coeffs in table.items():
        if a:
            assert coeffs[a.degree if a.degree != 0 else 0] == K_ONE
        assert all(c.is_integral() for c in coeffs)


def test_agreement_table_rejects_tiny_bound():
    with pytest.raises(ValueError):
        rho_agreement_table(1)
