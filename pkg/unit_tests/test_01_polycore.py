#!/usr/bin/env python3
"""
Unit tests for exact polynomial arithmetic and the infix literal parser

Tests:
- Normalization, degree and the zero polynomial
- Ring operations, long division, composition and gcd
- Rational coercion (floats refused)
- JSON encoding and human rendering
- Infix literal parsing and its error positions
"""

import unittest

from base_test import BaseHypersieveTest, P, F, Fraction, RationalPoly

from hypersieve.errors import BothZeroError, ParseError, ValidationError, ZeroPolynomialError, ZeroScaleError
from hypersieve.polycore import NO_DEGREE, ONE, ZERO, compose_affine, derivative, gcd, to_rational, format_rational
from hypersieve.polyparse import MAX_POWER_DEGREE, parse_poly


class TestRationalPoly(BaseHypersieveTest):
    """Arithmetic on RationalPoly"""

    def test_01_normalization_and_degree(self):
        print("\n🔢 Testing normalization and degree...")
        f = RationalPoly((1, 2, 0, 0))
        self.assertEqual(f.coeffs, (F(1), F(2)))
        self.assertEqual(f.degree, 1)
        self.assertEqual(f.leading, F(2))

        self.assertTrue(ZERO.is_zero)
        self.assertEqual(RationalPoly((0, 0)).degree, NO_DEGREE)
        self.assertEqual(RationalPoly((0, 0)), ZERO)
        self.assertEqual(ONE.degree, 0)
        print("✅ Trailing zeros stripped, zero polynomial has degree NO_DEGREE")

    def test_02_ring_operations(self):
        print("\n➕ Testing ring operations...")
        x = RationalPoly.x()
        self.assertPolyEqual((x + 1) ** 3, [1, 3, 3, 1])
        self.assertPolyEqual((x - 1) * (x + 1), "x^2 - 1")
        self.assertPolyEqual(x * F("1/2") + F("1/2"), ["1/2", "1/2"])
        self.assertPolyEqual(2 - x, [2, -1])
        self.assertPolyEqual(x ** 0, [1])
        self.assertEqual((x - x), ZERO)
        self.assertEqual((x * ZERO).degree, NO_DEGREE)
        with self.assertRaises(ValidationError):
            x ** -1
        print("✅ +, -, *, ** agree with hand expansion")

    def test_03_long_division(self):
        print("\n➗ Testing polynomial long division...")
        q, r = divmod(P("x^3 - 1"), P("x - 1"))
        self.assertPolyEqual(q, "x^2 + x + 1")
        self.assertTrue(r.is_zero)

        q, r = divmod(P("x^2 + 1"), RationalPoly.x())
        self.assertPolyEqual(q, "x")
        self.assertPolyEqual(r, "1")

        q, r = divmod(P("x + 1"), P("x^2"))
        self.assertTrue(q.is_zero)
        self.assertPolyEqual(r, "x + 1")

        self.assertPolyEqual(P("2x^2 + 2x") // P("2x"), "x + 1")
        self.assertPolyEqual(P("x^2") % P("2x + 2"), "1")

        with self.assertRaises(ZeroPolynomialError):
            divmod(P("x"), ZERO)
        print("✅ divmod satisfies f = q*g + r")

    def test_04_evaluation_and_roots(self):
        print("\n📍 Testing evaluation and construction from roots...")
        self.assertEqual(P("x^2 - 1")(3), F(8))
        self.assertEqual(P("x^2 - 1")("1/2"), F("-3/4"))
        f = RationalPoly.from_roots([1, -2])
        self.assertPolyEqual(f, "x^2 + x - 2")
        self.assertPolyEqual(RationalPoly.from_roots(["1/2"], lead=2), "2x - 1")
        self.assertPolyEqual(RationalPoly.monomial(3, "1/4"), [0, 0, 0, "1/4"])
        print("✅ Horner evaluation exact")

    def test_05_compose_affine_and_derivative(self):
        print("\n🔁 Testing affine composition and derivative...")
        self.assertPolyEqual(compose_affine(P("x^2"), 2, 1), "4x^2 + 4x + 1")
        self.assertPolyEqual(compose_affine(P("x^3 - x"), 1, 0), "x^3 - x")
        self.assertPolyEqual(compose_affine(P("5"), 3, 7), "5")
        with self.assertRaises(ZeroScaleError):
            compose_affine(P("x"), 0, 1)

        self.assertPolyEqual(derivative(P("x^3 + 2x")), "3x^2 + 2")
        self.assertTrue(derivative(P("7")).is_zero)
        print("✅ f(ax+b) and f' correct")

    def test_06_gcd(self):
        print("\n🧮 Testing monic gcd...")
        f = P("(x - 1)^2 (x + 2)")
        g = P("(x - 1)(x + 3)")
        self.assertPolyEqual(gcd(f, g), "x - 1")
        self.assertPolyEqual(gcd(ZERO, P("2x + 4")), "x + 2")
        self.assertPolyEqual(gcd(P("3x^2"), ZERO), "x^2")
        self.assertPolyEqual(gcd(P("x^2 + 1"), P("x - 5")), "1")
        with self.assertRaises(BothZeroError):
            gcd(ZERO, ZERO)
        print("✅ gcd is monic and divides both arguments")

    def test_07_rational_coercion(self):
        print("\n🎯 Testing rational coercion...")
        self.assertEqual(to_rational("1/8"), F(1) / 8)
        self.assertEqual(to_rational(" -3 "), F(-3))
        self.assertEqual(to_rational(5), F(5))
        self.assertEqual(format_rational(F(6, 4)), "3/2")
        self.assertEqual(format_rational(F(4, 2)), "2")

        with self.assertRaises(ValidationError):
            to_rational(0.5)
        with self.assertRaises(ValidationError):
            to_rational(True)
        with self.assertRaises(ParseError):
            to_rational("one half")
        with self.assertRaises(ParseError):
            to_rational("1/0")
        with self.assertRaises(TypeError):
            to_rational([1])
        with self.assertRaises(ValidationError):
            RationalPoly((0.25, 1))
        print("✅ Floats refused, strings parsed exactly")

    def test_08_json_and_rendering(self):
        print("\n🖨️  Testing JSON encoding and rendering...")
        f = P("6x^2 + 3x + 1/8")
        self.assertEqual(f.to_json(), {"coeffs": ["1/8", "3", "6"]})
        self.assertEqual(RationalPoly.from_json({"coeffs": ["1/8", "3", "6"]}), f)
        self.assertEqual(RationalPoly.from_json({"coeffs": []}), ZERO)
        for bad in ({}, {"coeffs": "1,2"}, {"coeffs": [0.5]}, {"coeffs": [True]}, ["1"]):
            with self.assertRaises(ParseError):
                RationalPoly.from_json(bad)

        self.assertEqual(str(f), "6x^2 + 3x + 1/8")
        self.assertEqual(str(RationalPoly((0, F(1, 8)))), "(1/8)x")
        self.assertEqual(str(P("-x^2")), "-x^2")
        self.assertEqual(str(P("x^2 - 1")), "x^2 - 1")
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(str(P("-2x + 3")), "-2x + 3")
        print(f"✅ Rendered: {f}")

    def test_09_monic(self):
        self.assertPolyEqual(P("4x^2 + 2").monic(), ["1/2", 0, 1])
        with self.assertRaises(ZeroPolynomialError):
            ZERO.monic()

    def test_10_zero_degree_sentinel(self):
        degree = ZERO.degree
        self.assertIs(degree, NO_DEGREE)
        self.assertEqual(repr(degree), "NO_DEGREE")
        for k in (-1, 0, 5):
            self.assertLess(degree, k)
            self.assertGreater(k, degree)
        self.assertLessEqual(degree, NO_DEGREE)
        self.assertNotEqual(degree, -1)
        self.assertFalse(degree < NO_DEGREE)
        with self.assertRaises(TypeError):
            degree + 1
        with self.assertRaises(TypeError):
            range(degree)
        with self.assertRaises(TypeError):
            degree < F(1, 2)


class TestPolyParse(BaseHypersieveTest):
    """Infix literal grammar"""

    def test_01_accepted_literals(self):
        print("\n📝 Testing accepted literals...")
        cases = {
            "4x^2+4x+1": [1, 4, 4],
            "2(x+1)": [2, 2],
            "-x^2": [0, 0, -1],
            "x^0": [1],
            "(x-1)(x+1)": [-1, 0, 1],
            "(1+x)^3": [1, 3, 3, 1],
            "1/8x": [0, "1/8"],
            "x*x*x": [0, 0, 0, 1],
            "--x": [0, 1],
            "3 X": [0, 3],
            "x^2/4 + 3/4": ["3/4", 0, "1/4"],
        }
        for text, coeffs in cases.items():
            with self.subTest(text=text):
                self.assertPolyEqual(parse_poly(text), coeffs, text)
        print(f"✅ {len(cases)} literals parsed")

    def test_02_rejected_literals(self):
        print("\n🚫 Testing rejected literals...")
        for text in ("", "   ", "x/x", "x/0", "x^y", "x^-1", "(x+1", "x+", "2 $ x", "1.5x", "x)"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_poly(text)
        print("✅ Malformed literals raise ParseError")

    def test_03_error_position(self):
        with self.assertRaises(ParseError) as ctx:
            parse_poly("2 $ x")
        self.assertEqual(ctx.exception.position, 2)
        self.assertIn("position 2", str(ctx.exception))

    def test_04_power_degree_cap(self):
        self.assertEqual(parse_poly(f"x^{MAX_POWER_DEGREE}").degree, MAX_POWER_DEGREE)
        self.assertEqual(parse_poly("(x^2)^500").degree, 1000)
        for text in ("(1+x)^10000000", f"x^{MAX_POWER_DEGREE + 1}", "(x^2)^501"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_poly(text)
        with self.assertRaises(ParseError) as ctx:
            parse_poly("(1+x)^10000000")
        self.assertEqual(ctx.exception.position, 6)


if __name__ == "__main__":
    unittest.main()
