import random

from hypothesis import given, settings, strategies as st

from drinfeld2.curvering import AElem, KElem, K_ONE, K_ZERO, X, Y, parse_a
from drinfeld2.f2poly import NEG_INF, BinaryPoly
from drinfeld2.twisted import TwistedPoly

small_k = st.builds(
    lambda num, den: KElem(num, den),
    st.builds(
        AElem,
        st.integers(min_value=0, max_value=255).map(BinaryPoly),
        st.integers(min_value=0, max_value=63).map(BinaryPoly),
    ),
    st.integers(min_value=1, max_value=15).map(BinaryPoly),
)
twisted = st.lists(small_k, min_size=0, max_size=4).map(TwistedPoly)


def test_commutation_rule():
    c = KElem(Y)
    tau = TwistedPoly.tau()
    assert tau * TwistedPoly.constant(c) == TwistedPoly((K_ZERO, c.square()))
    a, b = KElem(X), KElem(Y)
    left = TwistedPoly((K_ZERO, a)) * TwistedPoly((K_ZERO, b))
    assert left == TwistedPoly((K_ZERO, K_ZERO, a * b.square()))


def test_addition_cancels():
    p = TwistedPoly((KElem(X), KElem(Y)))
    assert p + p == TwistedPoly.zero()
    assert p + TwistedPoly.zero() == p


def test_apply_examples():
    rho_x = TwistedPoly((KElem(X), KElem(parse_a("x^2+x")), K_ONE))
    assert rho_x.apply(K_ONE) == KElem(parse_a("x^2+1"))
    assert TwistedPoly.constant(KElem(Y)).apply(KElem(X)) == KElem(X * Y)
    assert rho_x.apply(K_ZERO) == K_ZERO


def test_tau_degree():
    assert TwistedPoly.zero().tau_degree is NEG_INF
    assert TwistedPoly.constant(K_ONE).tau_degree == 0
    assert TwistedPoly.tau().tau_degree == 1


@settings(max_examples=60, deadline=None)
@given(twisted, twisted, twisted)
def test_mul_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(twisted, twisted)
def test_tau_degree_additive(a, b):
    if a and b:
        assert (a * b).tau_degree == a.tau_degree + b.tau_degree


@settings(max_examples=60, deadline=None)
@given(twisted, twisted, small_k)
def test_apply_is_ring_action(a, b, z):
    assert (a * b).apply(z) == a.apply(b.apply(z))
    assert (a + b).apply(z) == a.apply(z) + b.apply(z)


@settings(max_examples=60, deadline=None)
@given(twisted, small_k, small_k)
def test_apply_is_additive_in_z(p, z1, z2):
    assert p.apply(z1 + z2) == p.apply(z1) + p.apply(z2)


def test_rendering():
    p = TwistedPoly((KElem(X), KElem(parse_a("x^2+x")), K_ONE))
    assert str(p) == "(x) + (x^2+x)*t + (1)*t^2"
    assert str(TwistedPoly.zero()) == "0"
