import random
from fractions import Fraction

import pytest

from treespectra.polys import (DivisibilityError, IntPoly, SymmetryError,
                               count_roots_open, even_part, integer_roots,
                               isolate_kth_largest, poly_gcd,
                               rational_root_multiplicity, root_bound,
                               square_free_decomposition, taylor_shift)

X = IntPoly.x()


def lin(k):
    return IntPoly((-k, 1))


class TestArithmetic:
    def test_square_of_quadratic(self):
        p = IntPoly((-1, 0, 1))
        assert p * p == IntPoly((1, 0, -2, 0, 1))

    def test_exact_divide(self):
        assert IntPoly((0, -1, 0, 1)).exact_divide(X) == IntPoly((-1, 0, 1))

    def test_exact_divide_failure(self):
        with pytest.raises(DivisibilityError):
            IntPoly((-1, 0, 1)).exact_divide(IntPoly((-2, 1)))

    def test_pow_and_neg(self):
        assert (X - IntPoly.one()) ** 2 == IntPoly((1, -2, 1))
        assert -X == IntPoly((0, -1))

    def test_scalar_multiply(self):
        assert 3 * X == IntPoly((0, 3))
        assert X * 0 == IntPoly.zero()

    def test_zero_behavior(self):
        z = IntPoly.zero()
        assert z.degree == -1 and z.is_zero
        assert z + X == X and X * z == z

    def test_evaluate_fraction(self):
        p = IntPoly((-1, 0, 1))
        assert p.evaluate(Fraction(1, 2)) == Fraction(-3, 4)

    def test_text_roundtrip(self):
        p = IntPoly((-1, 0, 1))
        assert p.to_text() == "-1,0,1"
        assert IntPoly.from_text("-1,0,1") == p

    def test_str_form(self):
        assert str(IntPoly((1, 0, -3, 0, 1))) == "x^4 - 3x^2 + 1"


class TestGcdSquareFree:
    def test_gcd_shared_factor(self):
        a = lin(1) * lin(-2) ** 2
        b = lin(1) ** 2 * lin(-2)
        assert poly_gcd(a, b) == lin(1) * lin(-2)

    def test_gcd_coprime(self):
        assert poly_gcd(lin(1), lin(2)).degree == 0

    def test_square_free_cube(self):
        assert square_free_decomposition(IntPoly((0, 0, 0, 1))) == [(X, 3)]

    def test_square_free_random_products(self):
        rng = random.Random(5)
        for _ in range(25):
            roots = rng.sample(range(-6, 7), k=rng.randrange(1, 4))
            mults = [rng.randrange(1, 4) for _ in roots]
            p = IntPoly.one()
            for r, m in zip(roots, mults):
                p = p * lin(r) ** m
            rebuilt = IntPoly.one()
            for factor, mult in square_free_decomposition(p):
                rebuilt = rebuilt * factor ** mult
            assert rebuilt == p


class TestRootCounting:
    def test_quartic_two_in_unit_gap(self):
        p = IntPoly((1, 0, -3, 0, 1))
        assert count_roots_open(p, -1, 1) == (2, 2)

    def test_unit_roots_excluded(self):
        assert count_roots_open(IntPoly((-1, 0, 1)), -1, 1) == (0, 0)

    def test_triple_zero(self):
        rc = count_roots_open(IntPoly((0, 0, 0, 1)), -1, 1)
        assert rc.with_multiplicity == 3 and rc.distinct == 1

    def test_constructed_roots(self):
        rng = random.Random(11)
        for _ in range(30):
            roots = sorted(rng.sample(range(-8, 9), k=rng.randrange(1, 5)))
            mults = {r: rng.randrange(1, 3) for r in roots}
            p = IntPoly.one()
            for r in roots:
                p = p * lin(r) ** mults[r]
            a = Fraction(rng.randrange(-20, 18), 2)
            b = a + Fraction(rng.randrange(1, 12), 2)
            inside = [r for r in roots if a < r < b]
            rc = count_roots_open(p, a, b)
            assert rc.distinct == len(inside)
            assert rc.with_multiplicity == sum(mults[r] for r in inside)

    def test_interval_additivity(self):
        p = lin(0) * lin(1) ** 2 * lin(3)
        a, b, c = Fraction(-1), Fraction(1), Fraction(4)
        left = count_roots_open(p, a, b).with_multiplicity
        right = count_roots_open(p, b, c).with_multiplicity
        at_b = rational_root_multiplicity(p, b)
        assert left + right + at_b == count_roots_open(p, a, c).with_multiplicity

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            count_roots_open(IntPoly.zero(), 0, 1)

    def test_rational_root_multiplicity(self):
        p = IntPoly((1, 2, 1)) * lin(3)
        assert rational_root_multiplicity(p, -1) == 2
        assert rational_root_multiplicity(p, 3) == 1
        assert rational_root_multiplicity(p, 0) == 0
        half = IntPoly((-1, 2))  # 2x - 1
        assert rational_root_multiplicity(half * half, Fraction(1, 2)) == 2


class TestIntegerRoots:
    def test_star_like_poly(self):
        p = IntPoly.monomial(3) * (X * X - IntPoly.const(4))
        summary = integer_roots(p)
        assert summary.roots == {0: 3, 2: 1, -2: 1}
        assert summary.is_integral and summary.nullity == 3
        assert summary.residual == IntPoly.one()

    def test_no_integer_roots(self):
        p = IntPoly((1, 0, -3, 0, 1))
        summary = integer_roots(p)
        assert summary.roots == {} and not summary.is_integral
        assert summary.residual == p

    def test_mixed_multiplicities(self):
        p = X * (X * X - IntPoly.const(4)) * (X * X - IntPoly.one()) ** 2
        summary = integer_roots(p)
        assert summary.roots == {0: 1, 1: 2, -1: 2, 2: 1, -2: 1}
        assert summary.is_integral

    def test_reassembly(self):
        rng = random.Random(3)
        for _ in range(25):
            p = IntPoly.one()
            for _ in range(rng.randrange(1, 4)):
                p = p * lin(rng.randrange(-5, 6))
            if rng.random() < 0.5:
                p = p * IntPoly((1, 1, 1))  # irreducible quadratic
            assert integer_roots(p).reassemble() == p

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            integer_roots(IntPoly((0, 2)))


class TestEvenPart:
    def test_odd_valuation(self):
        assert even_part(IntPoly((0, 0, 0, -4, 0, 1))) == (3, IntPoly((-4, 1)))

    def test_even_cycle_poly(self):
        h, q = even_part(IntPoly((-4, 0, 9, 0, -6, 0, 1)))
        assert h == 0 and q == IntPoly((-4, 9, -6, 1))

    def test_plain_quartic(self):
        assert even_part(IntPoly((1, 0, -3, 0, 1))) == (0, IntPoly((1, -3, 1)))

    def test_violation(self):
        with pytest.raises(SymmetryError):
            even_part(IntPoly((0, 1, 1)))

    def test_roundtrip(self):
        rng = random.Random(7)
        for _ in range(20):
            h = rng.randrange(0, 3)
            q = IntPoly([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 4))]
                        + [1])
            p = IntPoly.monomial(h) * IntPoly(
                [c if i % 2 == 0 else 0
                 for i, c in enumerate(_interleave(q.coeffs))])
            got_h, got_q = even_part(p)
            assert IntPoly.monomial(got_h) * _substitute_square(got_q) == p


def _interleave(coeffs):
    out = []
    for c in coeffs:
        out.extend((c, 0))
    return out[:-1]


def _substitute_square(q):
    out = IntPoly.zero()
    for i, c in enumerate(q.coeffs):
        out = out + IntPoly.monomial(2 * i, c)
    return out


class TestTaylorShift:
    def test_linear(self):
        assert taylor_shift(IntPoly((-1, 1)), 3) == IntPoly((-4, 1))

    def test_square(self):
        assert taylor_shift(IntPoly((0, 0, 1)), 1) == IntPoly((1, -2, 1))

    def test_negative_shift(self):
        assert taylor_shift(IntPoly((1, -3, 1)), -2) == IntPoly((-1, 1, 1))

    def test_involution(self):
        rng = random.Random(1)
        for _ in range(20):
            q = IntPoly([rng.randrange(-9, 10) for _ in range(rng.randrange(1, 6))])
            if q.is_zero:
                continue
            r = rng.randrange(-5, 6)
            assert taylor_shift(taylor_shift(q, r), -r) == q


class TestIsolation:
    def test_rational_root_pinched(self):
        box = isolate_kth_largest(IntPoly((-4, 0, 1)), 1, Fraction(1, 8))
        assert box.exact == 2 and box.certified
        assert box.lo < 2 < box.hi and box.width <= Fraction(1, 8)

    def test_second_root(self):
        box = isolate_kth_largest(IntPoly((-1, 0, 1)), 2, Fraction(1, 4))
        assert box.exact == -1

    def test_sqrt5(self):
        box = isolate_kth_largest(IntPoly((-5, 0, 1)), 1, Fraction(1, 64))
        assert box.certified and box.width <= Fraction(1, 64)
        assert 0 < box.lo and box.lo ** 2 < 5 < box.hi ** 2
        tight = isolate_kth_largest(IntPoly((-5, 0, 1)), 1, Fraction(1, 512))
        assert Fraction(223, 100) < tight.lo < tight.hi < Fraction(224, 100)

    def test_index_too_large(self):
        with pytest.raises(ValueError):
            isolate_kth_largest(IntPoly((-1, 0, 1)), 3, 1)

    def test_multiplicity_ranking(self):
        p = lin(2) * lin(1) ** 2
        assert isolate_kth_largest(p, 2, Fraction(1, 4)).exact == 1
        assert isolate_kth_largest(p, 3, Fraction(1, 4)).exact == 1
        assert isolate_kth_largest(p, 1, Fraction(1, 4)).exact == 2

    def test_root_bound_contains_roots(self):
        rng = random.Random(9)
        for _ in range(20):
            p = IntPoly.one()
            for _ in range(rng.randrange(1, 5)):
                p = p * lin(rng.randrange(-9, 10))
            bound = root_bound(p)
            assert count_roots_open(p, -bound, bound).with_multiplicity == p.degree
