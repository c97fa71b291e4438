"""Exact arithmetic layers: integer polynomials, rational functions in q,
truncated series, and small multivariate polynomials."""

from fractions import Fraction

import pytest

from qcharsum.exact import QPoly, Rat, RatFunc, Series, SymPoly, qpow


def test_rat_is_fraction():
    assert Rat is Fraction


class TestQPoly:
    def test_basic_arithmetic(self):
        q = QPoly.x()
        p = (1 + q) * (1 + q)
        assert p == QPoly([1, 2, 1])
        assert (p - QPoly([1])) == QPoly([0, 2, 1])
        assert QPoly([1, 2, 1]).degree() == 2

    def test_content_is_factored_out(self):
        p = QPoly([2, 4, 6])
        assert p.content == 2
        assert tuple(p.ic) == (1, 2, 3)

    def test_fraction_content(self):
        p = QPoly([Fraction(1, 2), Fraction(3, 2)])
        assert p.content == Fraction(1, 2)
        assert tuple(p.ic) == (1, 3)

    def test_cross_symbol_operations_rejected(self):
        with pytest.raises(ValueError):
            QPoly.x("q") + QPoly.x("t")

    def test_evaluation_via_coefficients(self):
        p = QPoly([1, 0, 3])  # 1 + 3 q^2
        value = sum(c * Fraction(2) ** i for i, c in enumerate(p.coefficients))
        assert value == 13


class TestRatFunc:
    def test_reduction_to_lowest_terms(self):
        q = RatFunc.x()
        assert (q ** 2 - 1) / (q - 1) == q + 1

    def test_partial_fractions_recombine(self):
        q = RatFunc.x()
        assert 1 / (q - 1) + 1 / (q + 1) == 2 * q / (q ** 2 - 1)

    def test_negative_powers(self):
        q = RatFunc.x()
        assert qpow(-3) == 1 / q ** 3
        assert qpow(-3) * qpow(5) == q ** 2

    def test_valuation_at_infinity(self):
        q = RatFunc.x()
        assert (1 / (q ** 2 - q)).valuation_at_infinity() == 2
        assert ((q ** 3 + 1) / (q - 1)).valuation_at_infinity() == -2
        assert RatFunc.const(0).valuation_at_infinity() is None

    def test_reciprocal(self):
        q = RatFunc.x()
        f = (q + 2) / (q ** 2 + 1)
        assert f * f.reciprocal() == 1

    def test_as_poly_rejects_proper_fractions(self):
        q = RatFunc.x()
        with pytest.raises(ValueError):
            (1 / q).as_poly()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc.const(1) / RatFunc.const(0)


class TestSeries:
    def test_geometric_inverse(self):
        one = Fraction(1)
        s = Series([one, -one], 8)
        inv = s.inv()
        assert all(inv.coefficient(i) == 1 for i in range(9))

    def test_exp_log_roundtrip(self):
        s = Series([Fraction(0), Fraction(1), Fraction(1, 3)], 10)
        assert (s.exp().log()).first_difference(s) is None

    def test_log_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            Series([Fraction(0), Fraction(1)], 4).log()

    def test_exp_requires_zero_constant_term(self):
        with pytest.raises(ValueError):
            Series([Fraction(1)], 4).exp()

    def test_compose_scale(self):
        q = RatFunc.x()
        s = Series([RatFunc.const(1), q, q ** 2], 2)
        t = s.compose_scale(-1)
        assert t.coefficient(0) == 1
        assert t.coefficient(1) == -q
        assert t.coefficient(2) == q ** 2

    def test_compose_scale_with_power(self):
        s = Series([Fraction(1), Fraction(2), Fraction(3)], 2)
        t = s.compose_scale(Fraction(1), 2)  # u -> u^2
        assert t.order == 2
        assert [t.coefficient(i) for i in range(3)] == [1, 0, 2]

    def test_first_difference(self):
        a = Series([Fraction(1), Fraction(2), Fraction(5)], 2)
        b = Series([Fraction(1), Fraction(2), Fraction(7)], 2)
        assert a.first_difference(b) == 2
        assert a.first_difference(a) is None

    def test_coefficient_beyond_order_raises(self):
        s = Series([Fraction(1)], 3)
        with pytest.raises(IndexError):
            s.coefficient(4)

    def test_mixed_order_operations_truncate(self):
        a = Series([Fraction(1)] * 6, 5)
        b = Series([Fraction(1)] * 3, 2)
        assert (a * b).order == 2

    def test_scalar_operations(self):
        s = Series([Fraction(1), Fraction(2)], 1)
        assert ((s * 3) / 3).first_difference(s) is None
        assert (s + 1).coefficient(0) == 2

    def test_pow_negative(self):
        one = Fraction(1)
        s = Series([one, one], 6)
        assert ((s ** -2) * s * s).first_difference(Series.constant(one, 6)) is None

    def test_ratfunc_coefficients(self):
        q = RatFunc.x()
        s = Series([RatFunc.const(1), 1 / (q - 1)], 4)
        t = s.inv() * s
        assert t.coefficient(0) == 1
        assert all(t.coefficient(i) == 0 for i in range(1, 5))


class TestSymPoly:
    def test_generators_commute_and_collect(self):
        a, b = SymPoly.gen("a"), SymPoly.gen("b")
        assert a * b == b * a
        assert (a + b) * (a - b) == a * a - b * b

    def test_scalar_comparison(self):
        a = SymPoly.gen("a")
        assert (a - a) == 0
        assert SymPoly.const(Fraction(3, 2)) == Fraction(3, 2)

    def test_ratfunc_coefficients(self):
        q = RatFunc.x()
        t = SymPoly.gen("t")
        p = t * (1 / (q - 1)) + t * (1 / (q + 1))
        assert p == t * (2 * q / (q ** 2 - 1))

    def test_scalar_value(self):
        assert SymPoly.const(5).scalar_value() == 5
        t = SymPoly.gen("t")
        with pytest.raises(ValueError):
            t.scalar_value()

    def test_powers(self):
        t = SymPoly.gen("t")
        assert t ** 3 == t * t * t

    def test_unhashable(self):
        with pytest.raises(TypeError):
            hash(SymPoly.gen("a"))
