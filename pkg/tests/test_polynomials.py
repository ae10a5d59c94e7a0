"""Tests for sparse polynomials over the group algebra."""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from ehrmono.errors import NonPolynomialResult
from ehrmono.groupring import GroupRingElement, TorsionClass
from ehrmono.polynomials import (
    FractionalPolynomial,
    Polynomial,
    fractional_from_hstar,
    parse_polynomial,
)

UV = ("u", "v")

classes = st.fractions(min_value=0, max_value=1, max_denominator=6).map(TorsionClass.of)
coeffs = st.dictionaries(classes, st.integers(-4, 4), max_size=3).map(GroupRingElement)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exponents, coeffs, max_size=4).map(lambda t: Polynomial(UV, t))


class TestArithmetic:
    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        assert (p + q) * r == p * r + q * r

    @given(polys, polys)
    def test_commutative(self, p, q):
        assert p * q == q * p

    @given(polys)
    def test_zero_and_one(self, p):
        assert p + Polynomial.zero(UV) == p
        assert p * Polynomial.one(UV) == p

    def test_power(self):
        u = Polynomial.variable(UV, "u")
        assert (u + 1) ** 3 == u**3 + 3 * u**2 + 3 * u + 1


class TestSubstitute:
    def test_drop_variable(self):
        p = Polynomial.one(("u", "v", "w")) + Polynomial.monomial(("u", "v", "w"), (1, 1, 2))
        q = p.substitute({"w": 1})
        assert q.coefficient((1, 1, 0)) == GroupRingElement.one()

    def test_negative_exponent_rejected(self):
        p = Polynomial.monomial(UV, (1, 1))
        sub = {
            "u": Polynomial.monomial(UV, (1, -1)),
            "v": Polynomial.one(UV),
        }
        with pytest.raises(NonPolynomialResult):
            p.substitute(sub)
        # the same substitution is fine when the exponents cancel
        ok = Polynomial.monomial(UV, (1, 1)).substitute(
            {"u": Polynomial.monomial(UV, (1, 0)), "v": Polynomial.monomial(UV, (1, 2))}
        )
        assert ok == Polynomial.monomial(UV, (2, 2))

    @given(polys, polys)
    def test_commutes_with_product(self, p, q):
        sub = {"u": Polynomial.monomial(UV, (1, 1)), "v": Polynomial.monomial(UV, (0, 2))}
        assert (p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub)

    def test_monomial_inversion(self):
        p = Polynomial.monomial(UV, (2, 0))
        lau = p.laurent_substitute({"u": Polynomial.monomial(UV, (-1, 0))})
        assert not lau.is_polynomial()
        assert lau.coefficient((-2, 0)) == GroupRingElement.one()


class TestDivision:
    def test_monomial_division(self):
        p = Polynomial.monomial(UV, (2, 3), 5)
        assert p.divide_exact_monomial((1, 1)) == Polynomial.monomial(UV, (1, 2), 5)
        with pytest.raises(NonPolynomialResult):
            (p + 1).divide_exact_monomial((1, 1))

    def test_linear_division(self):
        t = Polynomial.variable(("t",), "t")
        p = (t - 1) * (t**2 + 3 * t + 2)
        assert p.divide_exact_linear("t") == t**2 + 3 * t + 2
        with pytest.raises(NonPolynomialResult):
            (p + 1).divide_exact_linear("t")


class TestEncodingRoundTrips:
    @given(polys)
    def test_json(self, p):
        assert Polynomial.from_json(p.to_json()) == p

    @given(polys)
    def test_pretty(self, p):
        assert parse_polynomial(p.pretty(), UV) == p

    def test_pretty_form(self):
        p = (
            Polynomial.one(UV)
            + Polynomial.monomial(UV, (1, 0), 4)
            + Polynomial.monomial(UV, (1, 0), GroupRingElement.of_class("1/2", 2))
        )
        assert p.pretty() == "1 + 4*u + 2*[1/2]*u"


class TestFractionalEncoding:
    def test_constant(self):
        assert fractional_from_hstar(Polynomial.one(("u",))) == FractionalPolynomial({0: 1})

    def test_segment(self):
        h = Polynomial.one(("u",)) + Polynomial.monomial(
            ("u",), (1,), GroupRingElement.of_class("1/2")
        )
        assert fractional_from_hstar(h) == FractionalPolynomial(
            {Fraction(0): 1, Fraction(1, 2): 1}
        )

    def test_integer_classes_shift_to_one(self):
        h = Polynomial.one(("u",)) + Polynomial.monomial(("u",), (1,), 4)
        assert fractional_from_hstar(h) == FractionalPolynomial({0: 1, 1: 4})

    def test_palindromy_check(self):
        f = FractionalPolynomial({Fraction(0): 1, Fraction(1, 2): 2, Fraction(1): 1})
        assert f.is_palindromic(1)
        assert not f.is_palindromic(2)
