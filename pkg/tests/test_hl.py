"""Tests for Hall-Littlewood data: Kostka tables, principal values, q-helpers."""

from fractions import Fraction

import pytest

from qcharsum.exact import QPoly, Rat, RatFunc, SymPoly
from qcharsum.hl import (
    c_nu,
    hl_finite_oracle,
    hl_principal,
    kostka_foulkes,
    pochhammer_cd,
    rogers_szego,
    rs_homog,
    rs_multi,
    schur_principal,
)
from qcharsum.partitions import Partition, dominates, enumerate_partitions


def _count_ssyt(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu.

    Counts chains of shapes built one letter at a time, where each letter
    occupies a horizontal strip: consecutive shapes must interlace.
    """
    lam = tuple(lam)
    mu = tuple(mu)

    def shrink(shape, size):
        # All shapes obtained from `shape` by removing a horizontal strip
        # of `size` cells (at most one cell per column).
        out = []
        k = len(shape)

        def rec(i, remaining, acc):
            if i == k:
                if remaining == 0:
                    out.append(tuple(x for x in acc if x > 0))
                return
            below = shape[i + 1] if i + 1 < k else 0
            lo = max(below, shape[i] - remaining)
            for r in range(lo, shape[i] + 1):
                rec(i + 1, remaining - (shape[i] - r), acc + [r])

        rec(0, size, [])
        return out

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def f(shape, j):
        if j == 0:
            return 1 if shape == () else 0
        return sum(f(s, j - 1) for s in shrink(shape, mu[j - 1]))

    return f(lam, len(mu))


def test_schur_principal_hook_form():
    z = RatFunc.x("q")
    # shape (2,1): weight 1, hooks {3, 1, 1}
    expect = z / ((1 - z) ** 2 * (1 - z**3))
    assert schur_principal([2, 1], z) == expect
    # single row (n): weight 0, hooks 1..n
    got = schur_principal([3], z)
    assert got == 1 / ((1 - z) * (1 - z**2) * (1 - z**3))


def test_kostka_small_values():
    kt = kostka_foulkes(3)
    t = QPoly.x("t")
    assert kt.K[((2, 1), (1, 1, 1))] == t + t**2
    assert kt.K[((3,), (3,))] == t * 0 + 1
    assert kt.K[((3,), (2, 1))] == t


def test_kostka_triangular_and_diagonal():
    for n in range(1, 8):
        kt = kostka_foulkes(n)
        for lam in kt.order:
            for mu in kt.order:
                key = (lam.parts, mu.parts)
                if key in kt.K:
                    assert dominates(lam, mu), key
                    if lam.parts == mu.parts:
                        assert kt.K[key].is_one
                else:
                    assert not dominates(lam, mu), key


def test_kostka_at_one_counts_tableaux():
    for n in range(1, 7):
        kt = kostka_foulkes(n)
        for lam in kt.order:
            for mu in kt.order:
                val = kt.K.get((lam.parts, mu.parts))
                got = 0 if val is None else val.eval(1)
                assert got == _count_ssyt(lam.parts, mu.parts), (lam, mu)


def test_kostka_inverse_is_inverse():
    for n in range(1, 9):
        kt = kostka_foulkes(n)
        order = [p.parts for p in kt.order]
        for a in order:
            for c in order:
                total = sum(
                    kt.K.get((a, b), QPoly.x("t") * 0)
                    * kt.K_inv.get((b, c), QPoly.x("t") * 0)
                    for b in order
                )
                expect = 1 if a == c else 0
                assert total == QPoly.x("t") * 0 + expect, (a, c)


def test_hl_at_t_zero_is_schur():
    z = RatFunc.x("q")
    t0 = RatFunc.const(Rat(0))
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            assert hl_principal(lam, z, t0).value == schur_principal(lam, z)


def test_hl_column_is_elementary():
    # One-column shapes give elementary symmetric functions: the principal
    # value is z^(m(m-1)/2) / prod_{j<=m} (1 - z^j), independent of t.
    z = RatFunc.x("q")
    for m in range(1, 6):
        expect = z ** (m * (m - 1) // 2)
        for j in range(1, m + 1):
            expect = expect / (1 - z**j)
        for t in (RatFunc.const(Rat(1, 3)), 1 / z, RatFunc.const(Rat(-2))):
            assert hl_principal([1] * m, z, t).value == expect, (m, t)


def test_rogers_szego_small():
    z = SymPoly.gen("a")
    t = SymPoly.gen("t")
    one = SymPoly.const(1)
    assert rogers_szego(0, z, t) == one
    assert rogers_szego(1, z, t) == 1 + z
    assert rogers_szego(2, z, t) == 1 + z + t * z + z**2


def test_rogers_szego_at_unit_arguments():
    one = Fraction(1)
    for m in range(9):
        # z = 1, t = -1 halves the ladder: value is 2^ceil(m/2)
        assert rogers_szego(m, one, Fraction(-1)) == 2 ** ((m + 1) // 2)
    t = QPoly.x("t")
    for m in range(1, 9, 2):
        assert rogers_szego(m, t * 0 - 1, t) == t * 0
    for m in range(0, 9, 2):
        expect = t * 0 + 1
        for i in range(1, m // 2 + 1):
            expect = expect * (1 - t ** (2 * i - 1))
        assert rogers_szego(m, t * 0 - 1, t) == expect


def test_rogers_szego_recurrence():
    z = SymPoly.gen("a")
    t = SymPoly.gen("t")
    for m in range(2, 9):
        lhs = rogers_szego(m, z, t)
        rhs = (1 + z) * rogers_szego(m - 1, z, t) - (
            1 - t ** (m - 1)
        ) * z * rogers_szego(m - 2, z, t)
        assert lhs == rhs, m


def test_rs_homog_and_multi():
    a = SymPoly.gen("a")
    b = SymPoly.gen("b")
    t = SymPoly.gen("t")
    assert rs_homog(2, a, b, t) == a**2 + a * b + t * a * b + b**2
    assert rs_multi([2, 1], a, t) == (1 + a) * (1 + a)
    assert rs_multi([2, 2], a, t) == rogers_szego(2, a, t)


def test_pochhammer():
    c = SymPoly.gen("a")
    d = SymPoly.gen("t")
    assert pochhammer_cd(c, d, 0) == SymPoly.const(1)
    assert pochhammer_cd(c, d, 2) == (1 - c) * (1 - c * d)


def test_c_nu_values():
    t = QPoly.x("t")
    one = t * 0 + 1
    assert c_nu([2, 2], t) == 1 - t
    assert c_nu([1, 1, 1, 1], t) == (1 - t) * (1 - t**3)
    assert c_nu([2, 2, 1, 1], t) == (1 - t) * (1 - t)
    assert c_nu([3], t) == one


def test_c_nu_at_minus_one():
    # For shapes whose conjugate is even (all multiplicities even), the
    # normalizer at t = -1 is 2^(length/2).
    for n in range(2, 9, 2):
        for nu in enumerate_partitions(n):
            if all(m % 2 == 0 for m in nu.mults().values()):
                assert c_nu(nu, Fraction(-1)) == 2 ** (nu.ell // 2)


def test_finite_oracle_small_shapes():
    q = RatFunc.x("q")
    x1, x2 = q, q + 1
    t = 1 / (q * q)
    assert hl_finite_oracle([1], (x1, x2), t) == x1 + x2
    assert hl_finite_oracle([1, 1], (x1, x2), t) == x1 * x2
    assert hl_finite_oracle([2], (x1, x2), t) == x1**2 + x2**2 + (1 - t) * x1 * x2


def test_finite_oracle_rectangles_two_vars():
    # In two variables the only tableau of shape (m, m) is constant columns,
    # so the value collapses to (x1 x2)^m.
    q = RatFunc.x("q")
    x1, x2 = q, 1 + q**2
    for t in (RatFunc.const(Rat(2, 7)), 1 / q):
        for m in range(1, 4):
            got = hl_finite_oracle([m, m], (x1, x2), t)
            assert got == (x1 * x2) ** m, (m, t)


def test_finite_oracle_two_two_three_vars():
    # Degree-4 component of prod_{i<j} (1 - t x_i x_j)/(1 - x_i x_j) in three
    # variables: shape (2,2) carries y_a^2 terms plus (1-t) cross terms,
    # where y ranges over the pairwise products.
    q = RatFunc.x("q")
    xs = (q, q + 1, 1 - q)
    for t in (RatFunc.const(Rat(1, 5)), q / (q + 2)):
        ys = [xs[0] * xs[1], xs[0] * xs[2], xs[1] * xs[2]]
        expect = sum(y**2 for y in ys) + (1 - t) * (
            ys[0] * ys[1] + ys[0] * ys[2] + ys[1] * ys[2]
        )
        assert hl_finite_oracle([2, 2], xs, t) == expect


def test_finite_oracle_symmetry():
    q = RatFunc.x("q")
    t = RatFunc.const(Rat(1, 3))
    a = hl_finite_oracle([2, 1], (q, q + 1, q + 2), t)
    b = hl_finite_oracle([2, 1], (q + 2, q, q + 1), t)
    assert a == b


def test_hl_principal_accepts_partition_objects():
    z = RatFunc.x("q")
    t = RatFunc.const(Rat(1, 2))
    lam = Partition([2, 1])
    assert hl_principal(lam, z, t).value == hl_principal([2, 1], z, t).value
