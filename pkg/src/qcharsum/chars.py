"""Real character degree sums and involution counts.

Conventions used throughout (gamma for the linear flavor, omega for the
unitary one):

* gamma_n = |GL(n,q)| = q^binom(n,2) * prod_{i=1..n} (q^i - 1)
* omega_n = |U(n,q)|  = q^binom(n,2) * prod_{i=1..n} (q^i - (-1)^i)
* prefactors: (q^n-1)...(q-1) for gl, (q^n-(-1)^n)...(q+1) for u.

Characters are parametrized by assigning a partition to each polynomial
class (polycount module); a character is real iff conjugate classes carry
equal partitions, so real-degree sums factor over self-conjugate classes
and pairs.  Everything is exact: integers at numeric q, RatFunc values
symbolically (q=None).  Closed-form involution sums call the module-level
group-order functions dynamically, so tests can perturb those and watch
the downstream identity checks fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RatFunc, Series, qpow
from .partitions import Partition, enumerate_partitions, partitions_up_to
from .polycount import count_selfdual_and_pairs, brute_poly_census
from .hl import hl_principal, rs_multi, rs_homog, rogers_szego, pochhammer_cd
from .qseries import named_gf, series_pow_general


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def _qval(q):
    if q is None:
        return RatFunc.x()
    if not isinstance(q, int) or q < 2:
        raise ValueError("q must be an integer >= 2 or None for symbolic")
    return Fraction(q)


def _to_int(x) -> int:
    f = Fraction(x)
    if f.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {f}")
    return int(f)


def _finish(x, q):
    """Symbolic results stay RatFunc; numeric results become ints."""
    if q is None:
        return x
    if isinstance(x, RatFunc):
        x = x.eval(q)
    return _to_int(x)


def _eval_sym(x: RatFunc, q):
    return x if q is None else x.eval(q)


def gl_group_order(n: int, q=None):
    """gamma_n; an int for integer q, a RatFunc for q=None."""
    qq = _qval(q)
    out = qq ** _binom2(n)
    for i in range(1, n + 1):
        out = out * (qq ** i - 1)
    return _finish(out, q)


def u_group_order(n: int, q=None):
    """omega_n; an int for integer q, a RatFunc for q=None."""
    qq = _qval(q)
    out = qq ** _binom2(n)
    for i in range(1, n + 1):
        out = out * (qq ** i - (-1) ** i)
    return _finish(out, q)


def gl_prefactor(n: int, q=None):
    """(q^n - 1)(q^(n-1) - 1)...(q - 1)."""
    qq = _qval(q)
    out = qq ** 0
    for i in range(1, n + 1):
        out = out * (qq ** i - 1)
    return _finish(out, q)


def u_prefactor_abs(n: int, q=None):
    """(q^n - (-1)^n)(q^(n-1) - (-1)^(n-1))...(q + 1), without sign."""
    qq = _qval(q)
    out = qq ** 0
    for i in range(1, n + 1):
        out = out * (qq ** i - (-1) ** i)
    return _finish(out, q)


def _parity_e(q, parity) -> int:
    if q is not None:
        e = 1 if q % 2 == 0 else 2
        if parity is not None and {1: "even", 2: "odd"}[e] != parity:
            raise ValueError(f"parity {parity!r} contradicts q={q}")
        return e
    if parity == "even":
        return 1
    if parity == "odd":
        return 2
    raise ValueError("symbolic evaluation needs parity='even' or 'odd'")


def involution_count(flavor: str, n: int, q=None, parity=None):
    """Number of group elements squaring to the identity, by closed formula.

    Even characteristic:  sum_{r <= n/2} g_n / (q^(r(2n-3r)) g_r g_(n-2r))
    Odd characteristic:   sum_{r <= n}   g_n / (g_r g_(n-r))
    with g = gamma (gl) or omega (u).  Calls the group-order functions
    through the module namespace on purpose.
    """
    if flavor not in ("gl", "u"):
        raise ValueError(f"flavor must be 'gl' or 'u', got {flavor!r}")
    e = _parity_e(q, parity)
    order = gl_group_order if flavor == "gl" else u_group_order
    qq = _qval(q)
    g = [order(j, q) for j in range(n + 1)]
    total = qq * 0
    if e == 1:
        for r in range(n // 2 + 1):
            total = total + Fraction(1) * g[n] / (qq ** (r * (2 * n - 3 * r)) * g[r] * g[n - 2 * r])
    else:
        for r in range(n + 1):
            total = total + Fraction(1) * g[n] / (g[r] * g[n - r])
    return _finish(total, q)


# ---------------------------------------------------------------------------
# Character degrees.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharParam:
    """A character label: partitions attached to polynomial classes.

    assignments: tuple of (kind, d, parts) with kind in {"selfdual", "pair"};
    d is the class degree and parts the attached partition.  A "pair" entry
    stands for a conjugate pair of classes carrying the same partition, so
    it contributes its factor squared and weight 2*d*|parts|.
    """

    flavor: str
    assignments: tuple

    def __post_init__(self):
        if self.flavor not in ("gl", "u"):
            raise ValueError("flavor must be 'gl' or 'u'")
        for kind, d, parts in self.assignments:
            if kind not in ("selfdual", "pair") or d < 1:
                raise ValueError(f"bad assignment ({kind!r}, {d}, {parts})")
            Partition(parts)

    @property
    def weight(self) -> int:
        total = 0
        for kind, d, parts in self.assignments:
            mult = 2 if kind == "pair" else 1
            total += mult * d * Partition(parts).size
        return total


def _class_factor(flavor: str, d: int, lam: Partition, qq):
    """q^(d*n(lam')) / prod_boxes (q^(d*h) - 1)   [gl]
    q^(d*n(lam')) / prod_boxes (q^(d*h) - (-1)^(d*h))   [u]."""
    num = qq ** (d * lam.conjugate().n_stat())
    den = qq ** 0
    for h in lam.hooks():
        if flavor == "gl":
            den = den * (qq ** (d * h) - 1)
        else:
            den = den * (qq ** (d * h) - (-1) ** (d * h))
    return num / den


def char_degree(param: CharParam, q=None):
    """Exact degree of the character labelled by `param` at rank = weight."""
    n = param.weight
    qq = _qval(q)
    pref = gl_prefactor(n, q) if param.flavor == "gl" else u_prefactor_abs(n, q)
    out = qq ** 0 * pref
    for kind, d, parts in param.assignments:
        f = _class_factor(param.flavor, d, Partition(parts), qq)
        out = out * (f * f if kind == "pair" else f)
    return _finish(out, q)


# ---------------------------------------------------------------------------
# Degree-sum generating functions from class data.
# ---------------------------------------------------------------------------


def assignment_block_gf(flavor: str, d: int, order: int, q=None):
    """(T_d, G_d): per-class generating functions in u.

    T_d = sum_lam u^(d|lam|) f(d,lam) for one self-conjugate class,
    G_d = sum_lam u^(2d|lam|) f(d,lam)^2 for one conjugate pair,
    where f is the class factor entering the degree formula.
    """
    qq = _qval(q)
    one = qq ** 0
    t_co = [one * 0] * (order + 1)
    g_co = [one * 0] * (order + 1)
    t_co[0] = one
    g_co[0] = one
    for m in range(1, order // d + 1):
        for lam in enumerate_partitions(m):
            f = _class_factor(flavor, d, lam, qq)
            t_co[d * m] = t_co[d * m] + f
            if 2 * d * m <= order:
                g_co[2 * d * m] = g_co[2 * d * m] + f * f
    return Series(t_co, order), Series(g_co, order)


def real_sum_gf_from_classes(flavor: str, order: int, q=None, parity=None,
                             counts: str = "formula") -> Series:
    """Generating function sum_n u^n * (real degree sum at rank n)/prefactor,
    assembled from polynomial-class counts and per-class blocks.

    counts = "formula" uses the closed count formulas (symbolic q allowed);
    counts = "census" uses brute orbit enumeration (numeric q only).
    """
    if counts not in ("formula", "census"):
        raise ValueError("counts must be 'formula' or 'census'")
    if counts == "census" and q is None:
        raise ValueError("census counts need numeric q")
    e = _parity_e(q, parity)
    qq = _qval(q)
    out = Series.constant(qq ** 0, order)
    for d in range(1, order + 1):
        if counts == "census":
            cc = brute_poly_census(d, q, flavor)
        else:
            cc = count_selfdual_and_pairs(d, q, flavor,
                                          parity={1: "even", 2: "odd"}[e])
        t_d, g_d = assignment_block_gf(flavor, d, order, q)
        for block, count in ((t_d, cc.n_selfdual), (g_d, cc.m_pairs)):
            if isinstance(count, int):
                if count:
                    out = out * block ** count
            else:
                out = out * series_pow_general(block, count)
    return out


def real_degree_sum_oracle(flavor: str, n: int, q: int) -> int:
    """Real-character degree sum at rank n by honest enumeration:
    brute-force class census plus explicit expansion over all partition
    assignments (organized as a truncated product of per-class blocks)."""
    if flavor not in ("gl", "u"):
        raise ValueError("flavor must be 'gl' or 'u'")
    if not isinstance(q, int):
        raise ValueError("the oracle needs numeric q")
    if n > 4 or q > 5:
        raise ValueError("oracle budget: n <= 4 and q <= 5")
    gf = real_sum_gf_from_classes(flavor, n, q, counts="census")
    pref = gl_prefactor(n, q) if flavor == "gl" else u_prefactor_abs(n, q)
    return _to_int(gf.coefficient(n) * pref)


def real_degree_sum_gf(flavor: str, n: int, q=None, parity=None):
    """Real-character degree sum at rank n from the named closed-form
    generating functions (prefactor times u^n coefficient)."""
    e = _parity_e(q, parity)
    par = {1: "even", 2: "odd"}[e]
    if flavor == "gl":
        coeff = named_gf("gl_real_gf", par, n).coefficient(n)
        return _finish(coeff * gl_prefactor(n, None), q)
    coeff = named_gf("u_real_gf", par, n).coefficient(n)
    return _finish(coeff * u_prefactor_abs(n, None) * (-1) ** n, q)


def involution_count_gf(flavor: str, n: int, q=None, parity=None):
    """Involution count at rank n via the generating-function route."""
    e = _parity_e(q, parity)
    par = {1: "even", 2: "odd"}[e]
    if flavor == "gl":
        coeff = named_gf("gl_invol_gf", par, n).coefficient(n)
        return _finish(coeff * gl_prefactor(n, None), q)
    coeff = named_gf("u_invol_gf", par, n).coefficient(n)
    sign = (-1) ** (n + _binom2(n))
    return _finish(coeff * u_prefactor_abs(n, None) * sign, q)


def u_eps_sum_gf(n: int, sign: int, q=None, parity=None):
    """Degree sum over real characters with indicator-like label epsilon =
    +1 or -1, from the eps-split generating functions."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    e = _parity_e(q, parity)
    par = {1: "even", 2: "odd"}[e]
    name = "u_eps_plus_gf" if sign == 1 else "u_eps_minus_gf"
    coeff = named_gf(name, par, n).coefficient(n)
    return _finish(coeff * u_prefactor_abs(n, None) * (-1) ** n, q)


# ---------------------------------------------------------------------------
# Unitary closed-form sums over Hall-Littlewood specializations.
# ---------------------------------------------------------------------------


def _hl_z():
    return -qpow(-1)  # the alternating geometric point 1, -1/q, 1/q^2, ...


def u_term_even(lam: Partition) -> RatFunc:
    """q^(-(l(lam_odd)+|lam|)/2) * P_lam(1, -1/q, 1/q^2, ...; 1/q)."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    expo = -((lam.ell_odd + lam.size) // 2)
    return qpow(expo) * hl_principal(lam, _hl_z(), qpow(-1)).value


def u_real_sum_even_closed(n: int, q=None):
    """Even-characteristic real degree sum: prefactor times the partition
    sum of u_term_even over |lam| = n."""
    total = RatFunc.const(0)
    for lam in enumerate_partitions(n):
        total = total + u_term_even(lam)
    return _finish(total * u_prefactor_abs(n, None), q)


def u_unsumodd_exprs(n: int, q=None):
    """The two partition-pair expressions for the odd-characteristic real
    degree sum, without the prefactor: returns (expr1, expr2)."""
    t = qpow(-1)
    z = _hl_z()
    half_pairs = []
    for k in range(n + 1):
        for lam in enumerate_partitions(k):
            for nu in enumerate_partitions(n - k):
                half_pairs.append((lam, nu))
    expr1 = RatFunc.const(0)
    expr2 = RatFunc.const(0)
    for lam, nu in half_pairs:
        lam_o, lam_e = lam.odd_part(), lam.even_part()
        p_lam = hl_principal(lam, z, t).value
        p_nu = hl_principal(nu, z, Fraction(-1)).value
        qexp = qpow(-nu.size - (lam.ell_odd + lam.size) // 2)
        # first form: nu with all multiplicities even
        if all(m % 2 == 0 for m in nu.mults().values()):
            sgn = (-1) ** (nu.size // 2 + lam.ell_odd)
            coeff = Fraction(2) ** (nu.ell // 2)
            term = (sgn * coeff) * qexp \
                * rs_multi(lam_e, t, t) * rs_multi(lam_o, RatFunc.const(1), t) \
                * p_lam * p_nu
            expr1 = expr1 + term
        # second form: odd part of lam and even part of nu have even columns
        nu_o, nu_e = nu.odd_part(), nu.even_part()
        if all(m % 2 == 0 for m in lam_o.mults().values()) and \
           all(m % 2 == 0 for m in nu_e.mults().values()):
            sgn = (-1) ** ((lam.ell_odd + nu.ell_odd + nu.size) // 2)
            two_pow = 1
            for m in nu.mults().values():
                two_pow *= 2 ** ((m + 1) // 2)
            poch = RatFunc.const(1)
            for m in lam_o.mults().values():
                poch = poch * pochhammer_cd(qpow(-1), qpow(-2), m // 2)
            term = (sgn * two_pow) * qexp * rs_multi(lam_e, t, t) * poch \
                * p_lam * p_nu
            expr2 = expr2 + term
    return _eval_sym(expr1, q), _eval_sym(expr2, q)


def u_real_sum_odd_closed(n: int, q=None):
    """Odd-characteristic real degree sum: (-1)^n * prefactor * expr, with
    the two equivalent expressions asserted equal first."""
    e1, e2 = u_unsumodd_exprs(n)
    if e1 != e2:
        raise AssertionError(f"odd-characteristic expressions disagree at n={n}")
    val = e1 * u_prefactor_abs(n, None) * (-1) ** n
    return _finish(val, q)


def u_real_sum_closed(n: int, q=None, parity=None):
    """Closed-form unitary real degree sum (partition-sum route)."""
    e = _parity_e(q, parity)
    return u_real_sum_even_closed(n, q) if e == 1 else u_real_sum_odd_closed(n, q)


def u_eps_sum_closed(n: int, sign: int, q=None, parity=None):
    """(real sum +- involution count)/2, closed-form routes for both."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    e = _parity_e(q, parity)
    par = {1: "even", 2: "odd"}[e]
    real = u_real_sum_closed(n, None, par)
    inv = involution_count("u", n, None, par)
    val = (real + sign * inv) * Fraction(1, 2)
    return _finish(val, q)


def _u_invol_inner(m: int) -> RatFunc:
    """(-1)^(m+binom(m,2)) q^binom(m,2) sum_{s<=m/2} 1/(q^(s(2m-3s)) w_s w_(m-2s))."""
    qq = RatFunc.x()
    total = RatFunc.const(0)
    w = [u_group_order(j, None) for j in range(m + 1)]
    for s in range(m // 2 + 1):
        total = total + Fraction(1) / (qq ** (s * (2 * m - 3 * s)) * w[s] * w[m - 2 * s])
    return total * qq ** _binom2(m) * (-1) ** (m + _binom2(m))


def u_eps_sum_alt_even(n: int, sign: int, q=None):
    """Even-characteristic eps-split sums via the alternative double sum:
    (-1)^n * prefactor * [ (1 +- (-1)^binom(n,2))/2 * S(n)
      + 1/2 * sum_{k=1..n/2} T_k * S(n-2k) ]
    with S as in _u_invol_inner and T_k the partition sum of q^(-k) P_lam
    over l(lam_odd) + |lam| = 2k."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    t = qpow(-1)
    z = _hl_z()
    half = Fraction(1, 2)
    eps0 = 1 if _binom2(n) % 2 == 0 else -1
    total = _u_invol_inner(n) * ((1 + sign * eps0) * half)
    for k in range(1, n // 2 + 1):
        t_k = RatFunc.const(0)
        for lam in partitions_up_to(2 * k):
            if lam.ell_odd + lam.size == 2 * k:
                t_k = t_k + qpow(-k) * hl_principal(lam, z, t).value
        total = total + t_k * _u_invol_inner(n - 2 * k) * half
    val = total * u_prefactor_abs(n, None) * (-1) ** n
    return _finish(val, q)


# ---------------------------------------------------------------------------
# Weyl-group analogues.
# ---------------------------------------------------------------------------


def _hook_product(lam: Partition) -> int:
    out = 1
    for h in lam.hooks():
        out *= h
    return out


def _factorials(n: int):
    out = [1]
    for i in range(1, n + 1):
        out.append(out[-1] * i)
    return out


def _egf_coeff_times_factorial(log_co, n: int) -> int:
    """n! * [u^n] exp(series with given low-order coefficients)."""
    s = Series([Fraction(c) for c in log_co] + [Fraction(0)] * (n + 1), n)
    return _to_int(s.exp().coefficient(n) * _factorials(n)[n])


def weyl_sums(family: str, n: int) -> dict:
    """Character degree sum and involution count for the classical Weyl
    families: A (symmetric group S_n), B (hyperoctahedral group), D (its
    index-two rotation subgroup), each verified against exponential
    generating functions elsewhere."""
    fact = _factorials(n)

    def sym_degree_sum(m: int) -> int:
        return sum(fact[m] // _hook_product(lam) for lam in enumerate_partitions(m))

    if family == "A":
        degree_sum = sym_degree_sum(n)
        involutions = _egf_coeff_times_factorial([0, 1, Fraction(1, 2)], n)
    elif family == "B":
        degree_sum = 0
        for k in range(n + 1):
            for lam in enumerate_partitions(k):
                for tau in enumerate_partitions(n - k):
                    degree_sum += fact[n] // (_hook_product(lam) * _hook_product(tau))
        involutions = _egf_coeff_times_factorial([0, 2, 1], n)
    elif family == "D":
        b_sum = weyl_sums("B", n)["degree_sum"]
        diag = 0
        if n % 2 == 0:
            for lam in enumerate_partitions(n // 2):
                diag += fact[n] // (_hook_product(lam) ** 2)
        degree_sum = (b_sum + diag) // 2
        if (b_sum + diag) % 2:
            raise AssertionError("degree sum halving failed")
        # n!/2 * [u^n] exp(u^2) (exp(2u) + 1)
        e_u2 = Series([Fraction(0), Fraction(0), Fraction(1)], n).exp()
        e_2u = Series([Fraction(0), Fraction(2)], n).exp()
        coeff = (e_u2 * (e_2u + 1)).coefficient(n)
        involutions = _to_int(coeff * fact[n] / 2)
    else:
        raise ValueError(f"family must be 'A', 'B', or 'D', got {family!r}")
    return {"degree_sum": degree_sum, "involutions": involutions}
