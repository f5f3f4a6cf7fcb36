#!/usr/bin/env python3
"""
Unit tests for Sturm-chain real-root certification

Tests:
- Sturm chains and sign variations at finite and infinite points
- Root counting on half-open intervals
- Real-rootedness certificates (including repeated roots and the zero polynomial)
- Root isolation and the nonpositive-roots predicate
- Cross-check of root counts against sympy
"""

import unittest

import sympy
from hypothesis import assume, given, strategies as st

from base_test import BaseHypersieveTest, P, F, Fraction, RationalPoly, RootVerdict

from hypersieve.errors import BadIntervalError, NotRealRootedError, ParseError, ValidationError, ZeroPolynomialError
from hypersieve.polycore import ZERO
from hypersieve.realroots import (
    NEG_INF, POS_INF, RealRootCertificate, all_roots_nonpositive, count_real_roots, is_real_rooted,
    isolate_real_roots, sign_at, sign_variations, squarefree_part, sturm_chain
)

_X = sympy.Symbol("x")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def to_sympy(f: RationalPoly) -> sympy.Poly:
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    return sympy.Poly(coeffs, _X, domain="QQ")


class TestSturmChains(BaseHypersieveTest):
    """Sturm chains, signs and counting"""

    def test_01_chain_shape(self):
        print("\n⛓️  Testing Sturm chain construction...")
        self.assertEqual(sturm_chain(P("x^2 - 1")), [P("x^2 - 1"), P("2x"), P("1")])
        self.assertEqual(sturm_chain(P("5")), [P("5")])
        self.assertEqual(len(sturm_chain(P("x^3 - 3x"))), 4)
        with self.assertRaises(ZeroPolynomialError):
            sturm_chain(ZERO)
        print("✅ Chains end at the last nonzero remainder")

    def test_02_signs_at_infinity(self):
        self.assertEqual(sign_at(P("x^3"), NEG_INF), -1)
        self.assertEqual(sign_at(P("x^3"), POS_INF), 1)
        self.assertEqual(sign_at(P("-x^2"), POS_INF), -1)
        self.assertEqual(sign_at(P("-x^2"), NEG_INF), -1)
        self.assertEqual(sign_at(P("x^2 - 1"), F(1)), 0)
        self.assertEqual(sign_at(ZERO, F(3)), 0)

        chain = sturm_chain(P("x^2 - 1"))
        self.assertEqual(sign_variations(chain, NEG_INF), 2)
        self.assertEqual(sign_variations(chain, POS_INF), 0)
        # zero at the root itself is dropped
        self.assertEqual(sign_variations(chain, F(1)), 0)

    def test_03_half_open_counts(self):
        print("\n📏 Testing (lo, hi] root counts...")
        f = P("x^2 - 1")
        self.assertEqual(count_real_roots(f), 2)
        self.assertEqual(count_real_roots(f, -1, 1), 1)
        self.assertEqual(count_real_roots(f, 0, 1), 1)
        self.assertEqual(count_real_roots(f, 1, 2), 0)
        self.assertEqual(count_real_roots(f, -2, -1), 1)
        self.assertEqual(count_real_roots(f, "-1/2", "1/2"), 0)
        self.assertEqual(count_real_roots(P("(x - 1)^3 (x + 1)")), 2)

        with self.assertRaises(BadIntervalError):
            count_real_roots(f, 1, 1)
        with self.assertRaises(BadIntervalError):
            count_real_roots(f, 2, -2)
        with self.assertRaises(ValidationError):
            count_real_roots(f, 0.5, 2)
        with self.assertRaises(ZeroPolynomialError):
            count_real_roots(ZERO)
        print("✅ Right endpoint included, left excluded")

    def test_04_squarefree_part(self):
        self.assertPolyEqual(squarefree_part(P("(x - 1)^2 (x + 2)")), "x^2 + x - 2")
        self.assertPolyEqual(squarefree_part(P("3(x + 1)^4")), "3x + 3")
        self.assertPolyEqual(squarefree_part(P("2x + 1")), "2x + 1")
        with self.assertRaises(ZeroPolynomialError):
            squarefree_part(ZERO)


class TestRealRootedness(BaseHypersieveTest):
    """Certificates from is_real_rooted"""

    def test_01_verdicts(self):
        print("\n🔍 Testing real-rootedness verdicts...")
        self.assertCertificate(is_real_rooted(P("x^2 + 1")), RootVerdict.HAS_NON_REAL_ROOT, 0, 2)
        self.assertCertificate(is_real_rooted(P("(x - 1)^2 (x + 2)")), RootVerdict.ALL_REAL_ROOTED, 2, 2)
        self.assertCertificate(is_real_rooted(P("6x^2 + 3x + 1/8")), RootVerdict.ALL_REAL_ROOTED, 2, 2)
        self.assertCertificate(is_real_rooted(P("x^3 - 3x")), RootVerdict.ALL_REAL_ROOTED, 3, 3)
        self.assertCertificate(is_real_rooted(P("x^4 + 1")), RootVerdict.HAS_NON_REAL_ROOT, 0, 4)
        self.assertCertificate(is_real_rooted(P("(x^2 + 1)^2")), RootVerdict.HAS_NON_REAL_ROOT, 0, 2)
        self.assertCertificate(is_real_rooted(P("2x^2 + 15/8")), RootVerdict.HAS_NON_REAL_ROOT)
        self.assertCertificate(is_real_rooted(P("3x^2 + 2")), RootVerdict.HAS_NON_REAL_ROOT)
        self.assertCertificate(is_real_rooted(P("x^2")), RootVerdict.ALL_REAL_ROOTED, 1, 1)
        print("✅ Verdicts match hand analysis")

    def test_02_degenerate_and_low_degree(self):
        self.assertCertificate(is_real_rooted(ZERO), RootVerdict.DEGENERATE_ZERO_POLY, 0, 0)
        self.assertFalse(is_real_rooted(ZERO).is_real_rooted)
        self.assertCertificate(is_real_rooted(P("3")), RootVerdict.ALL_REAL_ROOTED, 0, 0)
        self.assertCertificate(is_real_rooted(P("2x + 1")), RootVerdict.ALL_REAL_ROOTED, 1, 1)

    def test_03_certificate_json(self):
        cert = is_real_rooted(P("x^3 - 3x"))
        data = cert.to_json()
        self.assertEqual(data["verdict"], "AllRealRooted")
        self.assertEqual(set(data), {"verdict", "distinct_real_roots", "squarefree_degree", "sturm_chain_length"})
        self.assertEqual(RealRootCertificate.from_json(data), cert)
        with self.assertRaises(ParseError):
            RealRootCertificate.from_json({"verdict": "Maybe", "distinct_real_roots": 0, "squarefree_degree": 0})
        with self.assertRaises(ParseError):
            RealRootCertificate.from_json({"verdict": "AllRealRooted"})


class TestRootIsolation(BaseHypersieveTest):
    """isolate_real_roots and all_roots_nonpositive"""

    def assertIsolates(self, intervals, roots):
        self.assertEqual(len(intervals), len(roots))
        for iv, r in zip(intervals, sorted(roots)):
            if iv.is_exact:
                self.assertEqual(iv.lo, r)
            else:
                self.assertTrue(iv.lo < r < iv.hi, f"{r} not inside ({iv.lo}, {iv.hi})")
                self.assertLess(iv.width, Fraction(1, 1024))
        for a, b in zip(intervals, intervals[1:]):
            self.assertLessEqual(a.hi, b.lo)

    def test_01_exact_points(self):
        print("\n🎯 Testing exact root hits...")
        intervals = isolate_real_roots(P("x^2 - 1"))
        self.assertEqual([(iv.lo, iv.hi) for iv in intervals], [(F(-1), F(-1)), (F(1), F(1))])
        self.assertTrue(all(iv.is_exact for iv in intervals))

        (only,) = isolate_real_roots(P("2x + 1"))
        self.assertEqual(only.lo, F("-1/2"))
        self.assertTrue(only.is_exact)
        print("✅ Midpoint hits and linear roots reported as points")

    def test_02_open_intervals(self):
        print("\n📐 Testing open isolating intervals...")
        roots = [F(1, 3), F(2), F(-5)]
        self.assertIsolates(isolate_real_roots(RationalPoly.from_roots(roots)), roots)
        self.assertIsolates(isolate_real_roots(RationalPoly.from_roots(["1/3", "1/3", "-2/7"])), [F(1, 3), F(-2, 7)])

        intervals = isolate_real_roots(P("6x^2 + 3x + 1/8"))
        self.assertEqual(len(intervals), 2)
        self.assertTrue(all(iv.hi <= 0 for iv in intervals))
        print(f"✅ Intervals: {[iv.to_json() for iv in intervals]}")

    def test_03_no_real_roots_and_errors(self):
        self.assertEqual(isolate_real_roots(P("x^2 + 1")), [])
        self.assertEqual(isolate_real_roots(P("7")), [])
        with self.assertRaises(ZeroPolynomialError):
            isolate_real_roots(ZERO)
        with self.assertRaises(BadIntervalError):
            isolate_real_roots(P("x"), 0)

    def test_04_nonpositive_roots(self):
        print("\n➖ Testing nonpositive-roots predicate...")
        self.assertTrue(all_roots_nonpositive(P("6x^2 + 3x + 1/8")))
        self.assertTrue(all_roots_nonpositive(P("x^2")))
        self.assertTrue(all_roots_nonpositive(P("(x + 1)^3")))
        self.assertFalse(all_roots_nonpositive(P("x^2 - 1")))
        with self.assertRaises(NotRealRootedError):
            all_roots_nonpositive(P("x^2 + 1"))
        with self.assertRaises(ZeroPolynomialError):
            all_roots_nonpositive(ZERO)
        print("✅ Nonpositive roots certified")


class TestSympyOracle(BaseHypersieveTest):
    """Root counts agree with an independent implementation"""

    @given(st.lists(small_rationals, min_size=1, max_size=6, unique=True),
           st.lists(st.integers(1, 9), max_size=2, unique=True))
    def test_01_constructed_squarefree(self, roots, quadratic_shifts):
        f = RationalPoly.from_roots(roots)
        for c in quadratic_shifts:
            f = f * RationalPoly((c, 0, 1))
        self.assertEqual(count_real_roots(f), len(roots))
        self.assertEqual(to_sympy(f).count_roots(), len(roots))
        expected = RootVerdict.HAS_NON_REAL_ROOT if quadratic_shifts else RootVerdict.ALL_REAL_ROOTED
        self.assertEqual(is_real_rooted(f).verdict, expected)

    @given(st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda cs: cs[-1] != 0))
    def test_02_integer_polynomials(self, coeffs):
        f = RationalPoly(tuple(coeffs))
        oracle = to_sympy(f).sqf_part()
        self.assertEqual(count_real_roots(f), oracle.count_roots())

    @given(st.lists(st.integers(-4, 4), min_size=2, max_size=6).filter(lambda cs: cs[-1] != 0),
           small_rationals, small_rationals)
    def test_03_interval_counts(self, coeffs, a, b):
        f = RationalPoly(tuple(coeffs))
        lo, hi = min(a, b), max(a, b)
        assume(lo != hi and f(lo) != 0)
        oracle = to_sympy(f).sqf_part().count_roots(sympy.Rational(lo.numerator, lo.denominator),
                                                     sympy.Rational(hi.numerator, hi.denominator))
        self.assertEqual(count_real_roots(f, lo, hi), oracle)


if __name__ == "__main__":
    unittest.main()
