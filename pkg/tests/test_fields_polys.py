from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pairforge.errors import FieldMismatchError, ParseError
from pairforge.fields import GF, QQ, Residue, field_from_name
from pairforge.polys import ExtensionField, Poly, irreducible_over_base, minimal_polynomial

t = sympy.symbols("t")


def test_residue_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a * b == F(1)
    assert a.inverse() == b
    assert F(Fraction(1, 2)) * 2 == F(1)
    with pytest.raises(FieldMismatchError):
        a + GF(5)(1)
    with pytest.raises(FieldMismatchError):
        QQ(Residue(1, 7))


def test_field_names():
    assert field_from_name("Q") is QQ
    assert field_from_name("GF(5)") == GF(5) == field_from_name("GF 5")
    with pytest.raises(ParseError):
        field_from_name("R")
    with pytest.raises(ValueError):
        GF(6)


@given(st.integers(-50, 50), st.integers(1, 50))
def test_gf_parse_matches_fraction(n, d):
    F = GF(101)
    if d % 101:
        assert F.parse(f"{n}/{d}") == F(Fraction(n, d))


def _monic(coeffs):
    return Poly(QQ, list(coeffs) + [1])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_irreducibility_agrees_with_sympy(low):
    p = _monic(low)
    sp = sympy.Poly(list(reversed(p.coeffs)), t, domain="QQ")
    if sympy.gcd(sp, sp.diff(t)).degree() > 0:
        with pytest.raises(ValueError):
            irreducible_over_base(p)
        return
    factors = sympy.factor_list(sp)[1]
    expected = len(factors) == 1 and factors[0][1] == 1
    assert irreducible_over_base(p) == expected


@pytest.mark.parametrize("coeffs,expected", [((1, 1, 1), True), ((1, 0, 1), False), ((0, 1, 1), None)])
def test_irreducibility_mod_2(coeffs, expected):
    # t^2+t+1 is irreducible over GF(2); t^2+1 = (t+1)^2 is not square-free; t^2+t = t(t+1)
    p = Poly(GF(2), coeffs)
    if expected is False:
        with pytest.raises(ValueError):
            irreducible_over_base(p)
    else:
        assert irreducible_over_base(p) is bool(expected)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_minimal_polynomial_matches_sympy(entries):
    m = [entries[0:3], entries[3:6], entries[6:9]]
    mp = minimal_polynomial(m, QQ)
    M = sympy.Matrix(m)
    # annihilates, and divides the characteristic polynomial
    acc = sympy.zeros(3)
    for k, c in enumerate(mp.coeffs):
        acc += sympy.Rational(c.numerator, c.denominator) * M ** k
    assert acc == sympy.zeros(3)
    cp = M.charpoly(t)
    sp = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in mp.coeffs])), t)
    assert sympy.rem(cp.as_expr(), sp.as_expr(), t) == 0
    # minimality: I, M, ..., M^(deg-1) are independent
    for d in range(mp.degree):
        basis = [list(M ** k) for k in range(d + 1)]
        assert sympy.Matrix(basis).rank() == d + 1


def test_extension_field_gaussian():
    K = ExtensionField(QQ, Poly(QQ, (1, 0, 1)))
    i = K.gen
    assert i * i == K(-1)
    x = K((2, 3))
    assert x * x.inverse() == K.one
    assert str(K) == "Q[t]/(t^2 + 1)"


def test_poly_division():
    a = Poly(QQ, (1, 2, 3, 4))
    b = Poly(QQ, (1, 1))
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
