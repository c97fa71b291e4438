"""Exact arithmetic: q-polynomials, rational functions, truncated series.

Everything in this package reduces to arithmetic in the field Q(q) of
rational functions over the rationals, plus truncated power series in a
formal variable u over such coefficients.  No floats, ever; equality is
structural equality of canonical forms.

Canonical forms
---------------
QPoly      coefficients are exact rationals, stored as a primitive integer
           coefficient tuple `ic` (little-endian, positive leading entry,
           trailing entry nonzero) times a single Fraction `content`.  The
           zero polynomial is `ic=(), content=0`.
RatFunc    num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
Series     explicit truncation order; length of the coefficient tuple is
           order + 1; arithmetic truncates to the minimum operand order.
SymPoly    polynomials in the auxiliary symbols (a, b, t) whose
           coefficients live in Q(q).  Only numerators ever need the extra
           symbols here, so division is restricted to Q(q)-scalars.

Fractions of integers are `fractions.Fraction` (exposed as `Rat`); the
integer polynomial inner loops live in `qcharsum._kernel`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from . import _kernel as _k

Rat = Fraction


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    """Positive g with a/g, b/g coprime integers (a, b not both zero)."""
    num = _igcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // _igcd(a.denominator, b.denominator)
    return Fraction(num, den)


class QPoly:
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ("ic", "content", "sym")

    def __init__(self, coeffs=(), sym: str = "q"):
        fracs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while fracs and not fracs[-1]:
            fracs.pop()
        if not fracs:
            self.ic = ()
            self.content = Fraction(0)
        else:
            den = 1
            for c in fracs:
                den = den * c.denominator // _igcd(den, c.denominator)
            ints = [c.numerator * (den // c.denominator) for c in fracs]
            g = 0
            for c in ints:
                g = _igcd(g, c)
            if ints[-1] < 0:
                g = -g
            self.ic = tuple(c // g for c in ints)
            self.content = Fraction(g, den)
        self.sym = sym

    @classmethod
    def _mk(cls, ic: tuple, content: Fraction, sym: str) -> "QPoly":
        p = cls.__new__(cls)
        p.ic = ic
        p.content = content
        p.sym = sym
        return p

    @classmethod
    def zero(cls, sym: str = "q") -> "QPoly":
        return cls._mk((), Fraction(0), sym)

    @classmethod
    def one(cls, sym: str = "q") -> "QPoly":
        return cls._mk((1,), Fraction(1), sym)

    @classmethod
    def x(cls, sym: str = "q") -> "QPoly":
        return cls._mk((0, 1), Fraction(1), sym)

    @classmethod
    def monomial(cls, k: int, c=1, sym: str = "q") -> "QPoly":
        c = Fraction(c)
        if not c:
            return cls.zero(sym)
        return cls._mk((0,) * k + (1,), c, sym)

    # -- queries ----------------------------------------------------------

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.ic) - 1

    @property
    def is_zero(self) -> bool:
        return not self.ic

    def __bool__(self) -> bool:
        return bool(self.ic)

    @property
    def is_one(self) -> bool:
        return self.ic == (1,) and self.content == 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.ic):
            return self.content * self.ic[i]
        return Fraction(0)

    @property
    def coefficients(self) -> tuple:
        return tuple(self.content * c for c in self.ic)

    def leading_coefficient(self) -> Fraction:
        return self.content * self.ic[-1] if self.ic else Fraction(0)

    # -- symbol plumbing ---------------------------------------------------

    def _join_sym(self, other: "QPoly") -> str:
        if self.sym == other.sym:
            return self.sym
        if len(self.ic) <= 1:
            return other.sym
        if len(other.ic) <= 1:
            return self.sym
        raise ValueError(f"mixed polynomial symbols {self.sym!r} and {other.sym!r}")

    @staticmethod
    def _coerce(x, sym: str):
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            c = Fraction(x)
            return QPoly._mk((1,), c, sym) if c else QPoly.zero(sym)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other, self.sym)
        if other is None:
            return NotImplemented
        sym = self._join_sym(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = _frac_gcd(self.content, other.content)
        m1 = int(self.content / g)
        m2 = int(other.content / g)
        ints = _k.zz_add(_k.zz_mul_scalar(list(self.ic), m1),
                         _k.zz_mul_scalar(list(other.ic), m2))
        if not ints:
            return QPoly.zero(sym)
        c, prim = _k.zz_primitive(ints)
        if prim[-1] < 0:
            c, prim = -c, [-v for v in prim]
        return QPoly._mk(tuple(prim), g * c, sym)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return QPoly._mk(self.ic, -self.content, self.sym)

    def __sub__(self, other):
        other = self._coerce(other, self.sym)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other, self.sym)
        if other is None:
            return NotImplemented
        sym = self._join_sym(other)
        if self.is_zero or other.is_zero:
            return QPoly.zero(sym)
        ic = tuple(_k.zz_mul(list(self.ic), list(other.ic)))
        return QPoly._mk(ic, self.content * other.content, sym)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        out = QPoly.one(self.sym)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other, self.sym)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        sym = self._join_sym(other)
        a = list(self.coefficients)
        b = other.coefficients
        db = len(b) - 1
        q = [Fraction(0)] * max(len(a) - db, 0)
        while len(a) - 1 >= db and a:
            t = a[-1] / b[-1]
            k = len(a) - 1 - db
            q[k] = t
            for j in range(db + 1):
                a[k + j] -= t * b[j]
            while a and not a[-1]:
                a.pop()
        return QPoly(q, sym), QPoly(a, sym)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def div_exact(self, other: "QPoly") -> "QPoly":
        """Exact quotient; ValueError if the division leaves a remainder."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return QPoly.zero(self._join_sym(other))
        sym = self._join_sym(other)
        ic = tuple(_k.zz_divexact(list(self.ic), list(other.ic)))
        return QPoly._mk(ic, self.content / other.content, sym)

    def gcd(self, other: "QPoly") -> "QPoly":
        """Monic gcd over Q (1 for coprime inputs, 0 only for gcd(0, 0))."""
        other = self._coerce(other, self.sym)
        sym = self._join_sym(other)
        g = _k.zz_gcd(list(self.ic), list(other.ic))
        if not g:
            return QPoly.zero(sym)
        return QPoly._mk(tuple(g), Fraction(1, g[-1]), sym)

    def monic(self) -> "QPoly":
        if self.is_zero:
            return self
        return QPoly._mk(self.ic, Fraction(1, self.ic[-1]), self.sym)

    def mul_xpow(self, k: int) -> "QPoly":
        if self.is_zero or k == 0:
            return self
        return QPoly._mk((0,) * k + self.ic, self.content, self.sym)

    # -- maps ---------------------------------------------------------------

    def eval(self, x):
        """Horner evaluation; x may be any ring element (Fraction, RatFunc, SymPoly)."""
        acc = x * 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def subs_neg(self) -> "QPoly":
        """Substitute the variable by its negative."""
        ic = list(self.ic)
        for i in range(1, len(ic), 2):
            ic[i] = -ic[i]
        content = self.content
        if ic and ic[-1] < 0:
            ic = [-c for c in ic]
            content = -content
        return QPoly._mk(tuple(ic), content, self.sym)

    # -- comparisons / output ------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other, self.sym)
        if other is None:
            return NotImplemented
        if self.sym != other.sym and len(self.ic) > 1 and len(other.ic) > 1:
            return False
        return self.ic == other.ic and self.content == other.content

    def __hash__(self):
        return hash((self.ic, self.content))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.ic) - 1, -1, -1):
            c = self.content * self.ic[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                v = self.sym if i == 1 else f"{self.sym}^{i}"
                term = v if abs(c) == 1 else f"{abs(c)}*{v}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)

    def __repr__(self):
        return f"QPoly({self!s})"


class RatFunc:
    """Element of Q(q): quotient of two QPoly in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, sym: str = "q"):
        if isinstance(num, RatFunc):
            if den is not None:
                raise ValueError("cannot combine a RatFunc numerator with a denominator")
            self.num, self.den = num.num, num.den
            return
        numq = num if isinstance(num, QPoly) else QPoly._coerce(num, sym)
        if numq is None:
            raise TypeError(f"cannot build RatFunc from {type(num).__name__}")
        if den is None:
            denq = QPoly.one(numq.sym)
        else:
            denq = den if isinstance(den, QPoly) else QPoly._coerce(den, numq.sym)
            if denq is None:
                raise TypeError(f"cannot build RatFunc from {type(den).__name__}")
        self.num, self.den = _ratfunc_normalize(numq, denq)

    @classmethod
    def _mk(cls, num: QPoly, den: QPoly) -> "RatFunc":
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def x(cls, sym: str = "q") -> "RatFunc":
        return cls._mk(QPoly.x(sym), QPoly.one(sym))

    @classmethod
    def const(cls, c, sym: str = "q") -> "RatFunc":
        c = Fraction(c)
        num = QPoly._mk((1,), c, sym) if c else QPoly.zero(sym)
        return cls._mk(num, QPoly.one(sym))

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_poly(self) -> QPoly:
        if not self.den.is_one:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def valuation_at_infinity(self):
        """deg(den) - deg(num); None for zero.  Positive means vanishing as q grows."""
        if self.is_zero:
            return None
        return self.den.degree() - self.num.degree()

    # -- coercion ----------------------------------------------------------

    def _coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, QPoly):
            return RatFunc._mk(x, QPoly.one(x.sym))
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x, self.num.sym)
        return None

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        d1, d2 = self.den, other.den
        g = d1.gcd(d2)
        if g.degree() == 0:
            num = self.num * d2 + other.num * d1
            den = d1 * d2
            if num.is_zero:
                return RatFunc.const(0, num.sym)
            return _monicized(num, den)
        d1r = d1.div_exact(g)
        d2r = d2.div_exact(g)
        num = self.num * d2r + other.num * d1r
        den = d1 * d2r
        if num.is_zero:
            return RatFunc.const(0, num.sym)
        h = num.gcd(g)
        if h.degree() > 0:
            num = num.div_exact(h)
            den = den.div_exact(h)
        return _monicized(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._mk(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.const(0, self.num.sym)
        # cross-cancellation keeps the product already reduced
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return _monicized(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverting zero rational function")
        return _monicized(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        out = RatFunc.const(1, self.num.sym)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- maps -----------------------------------------------------------------

    def eval(self, q0) -> Fraction:
        d = self.den.eval(Fraction(q0))
        if not d:
            raise ZeroDivisionError(f"pole at {self.num.sym} = {q0}")
        return self.num.eval(Fraction(q0)) / d

    def subs_neg(self) -> "RatFunc":
        """Substitute q by -q (an automorphism, so the result stays reduced)."""
        return _monicized(self.num.subs_neg(), self.den.subs_neg())

    # -- comparisons / output ---------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if self.num.degree() > 0 and len(self.num.ic) - self.num.ic.count(0) > 1:
            n = f"({n})"
        if self.den.degree() > 0 and len(self.den.ic) - self.den.ic.count(0) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self!s})"


def _ratfunc_normalize(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    sym = num._join_sym(den)
    if num.is_zero:
        return QPoly.zero(sym), QPoly.one(sym)
    g = _k.zz_gcd(list(num.ic), list(den.ic))
    if len(g) > 1:
        nic = tuple(_k.zz_divexact(list(num.ic), g))
        dic = tuple(_k.zz_divexact(list(den.ic), g))
    else:
        nic, dic = num.ic, den.ic
    lead = dic[-1]
    new_den = QPoly._mk(dic, Fraction(1, lead), sym)
    new_num = QPoly._mk(nic, num.content / (den.content * lead), sym)
    return new_num, new_den


def _monicized(num: QPoly, den: QPoly) -> RatFunc:
    """Build a RatFunc from an already-coprime num/den pair."""
    sym = num._join_sym(den)
    lead = den.content * den.ic[-1]
    den = QPoly._mk(den.ic, Fraction(1, den.ic[-1]), sym)
    num = QPoly._mk(num.ic, num.content / lead, sym)
    return RatFunc._mk(num, den)


def _cancel(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    g = _k.zz_gcd(list(a.ic), list(b.ic))
    if len(g) <= 1:
        return a, b
    a2 = QPoly._mk(tuple(_k.zz_divexact(list(a.ic), g)), a.content, a.sym)
    b2 = QPoly._mk(tuple(_k.zz_divexact(list(b.ic), g)), b.content, b.sym)
    return a2, b2


def qpow(k: int, sym: str = "q") -> RatFunc:
    """q^k as a RatFunc, any integer k."""
    if k >= 0:
        return RatFunc._mk(QPoly.monomial(k, 1, sym), QPoly.one(sym))
    return RatFunc._mk(QPoly.one(sym), QPoly.monomial(-k, 1, sym))


QVAR = RatFunc.x()


def _elem_inv(c):
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    if isinstance(c, RatFunc):
        return c.reciprocal()
    return 1 / c


def _elem_div_int(c, n: int):
    if isinstance(c, int):
        return Fraction(c, n)
    return c / n


class Series:
    """Truncated power series in u: known coefficients 0..order inclusive.

    Coefficients may be ints, Fractions, RatFuncs, or SymPolys, as long as
    they interoperate; arithmetic truncates to the minimum operand order.
    """

    __slots__ = ("order", "co")

    def __init__(self, coeffs, order: int | None = None):
        co = list(coeffs)
        if not co:
            raise ValueError("a series needs at least one known coefficient")
        if order is None:
            order = len(co) - 1
        if len(co) < order + 1:
            zero = co[0] * 0
            co.extend([zero] * (order + 1 - len(co)))
        self.order = order
        self.co = tuple(co[: order + 1])

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        zero = value * 0
        return cls([value] + [zero] * order, order)

    def coefficient(self, n: int):
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.co[n]

    def truncate(self, m: int) -> "Series":
        if m >= self.order:
            return self
        return Series(self.co[: m + 1], m)

    @property
    def zero_elem(self):
        return self.co[0] * 0

    @property
    def one_elem(self):
        return self.co[0] * 0 + 1

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series([self.co[i] + other.co[i] for i in range(n + 1)], n)
        out = list(self.co)
        out[0] = out[0] + other
        return Series(out, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.co], self.order)

    def __sub__(self, other):
        if isinstance(other, Series):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.co], self.order)
        n = min(self.order, other.order)
        a, b = self.co, other.co
        out = []
        for k in range(n + 1):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                if a[i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inv()
        inv = _elem_inv(other)
        return Series([c * inv for c in self.co], self.order)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = Series.constant(self.one_elem, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def inv(self) -> "Series":
        a = self.co
        if not a[0]:
            raise ZeroDivisionError("series inverse needs an invertible constant term")
        b0 = _elem_inv(a[0])
        out = [b0]
        for n in range(1, self.order + 1):
            acc = self.zero_elem
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + a[k] * out[n - k]
            out.append(-acc * b0 if acc else acc)
        return Series(out, self.order)

    def exp(self) -> "Series":
        a = self.co
        if a[0] != a[0] * 0:
            raise ValueError("series exp needs constant term 0")
        out = [self.one_elem]
        for n in range(1, self.order + 1):
            acc = self.zero_elem
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + (a[k] * k) * out[n - k]
            out.append(_elem_div_int(acc, n))
        return Series(out, self.order)

    def log(self) -> "Series":
        a = self.co
        if a[0] != a[0] * 0 + 1:
            raise ValueError("series log needs constant term 1")
        out = [self.zero_elem]
        for n in range(1, self.order + 1):
            acc = self.zero_elem
            for k in range(1, n):
                if out[k] and a[n - k]:
                    acc = acc + (out[k] * k) * a[n - k]
            out.append(a[n] - _elem_div_int(acc, n))
        return Series(out, self.order)

    def compose_scale(self, c, k: int = 1) -> "Series":
        """Substitute u <- c*u^k (k >= 1), truncated at the same order."""
        if k < 1:
            raise ValueError("compose_scale needs k >= 1")
        zero = self.zero_elem
        out = [zero] * (self.order + 1)
        cp = self.one_elem
        for n in range(self.order + 1):
            if n * k > self.order:
                break
            out[n * k] = self.co[n] * cp if n else self.co[0] + zero
            cp = cp * c
        return Series(out, self.order)

    # -- comparisons / output -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            self.co[i] == other.co[i] for i in range(self.order + 1)
        )

    def __hash__(self):
        return hash((self.order, self.co))

    def first_difference(self, other: "Series"):
        """Smallest n (up to the common order) where coefficients differ, else None."""
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.co[i] != other.co[i]:
                return i
        return None

    def __str__(self):
        shown = []
        for i, c in enumerate(self.co[:5]):
            if c or i == 0:
                shown.append(f"({c})*u^{i}" if i else f"({c})")
        tail = " + ..." if self.order >= 5 else ""
        return " + ".join(shown) + tail + f"  [order {self.order}]"

    def __repr__(self):
        return f"Series({self!s})"


class SymPoly:
    """Polynomial in the auxiliary symbols a, b, t over Q(q).

    Stored as a dict mapping exponent triples (i, j, k) for a^i b^j t^k to
    nonzero RatFunc coefficients.  This is deliberately *not* a field:
    division is only defined by Q(q)-scalars, which is all the identity
    checks need (every denominator they produce is free of a, b, t).
    """

    SYMS = ("a", "b", "t")
    __slots__ = ("d",)

    def __init__(self, d: dict | None = None):
        self.d = d if d is not None else {}

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "SymPoly":
        i = cls.SYMS.index(name)
        key = tuple(power if j == i else 0 for j in range(len(cls.SYMS)))
        return cls({key: RatFunc.const(1)})

    @classmethod
    def const(cls, value) -> "SymPoly":
        r = value if isinstance(value, RatFunc) else RatFunc.const(value)
        return cls({(0, 0, 0): r} if r else {})

    @staticmethod
    def _coerce(x):
        if isinstance(x, SymPoly):
            return x
        if isinstance(x, (int, Fraction, RatFunc)):
            return SymPoly.const(x)
        return None

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.d

    def __bool__(self) -> bool:
        return bool(self.d)

    def scalar_value(self) -> RatFunc:
        """The Q(q) value of a constant SymPoly; ValueError if symbols remain."""
        if not self.d:
            return RatFunc.const(0)
        if set(self.d) == {(0, 0, 0)}:
            return self.d[(0, 0, 0)]
        raise ValueError(f"not a scalar: {self}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.d)
        for key, val in other.d.items():
            cur = out.get(key)
            if cur is None:
                out[key] = val
            else:
                s = cur + val
                if s:
                    out[key] = s
                else:
                    del out[key]
        return SymPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({k: -v for k, v in self.d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            if not other:
                return SymPoly({})
            return SymPoly({k: v * other for k, v in self.d.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.d.items():
            for k2, v2 in other.d.items():
                key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                p = v1 * v2
                cur = out.get(key)
                if cur is None:
                    out[key] = p
                else:
                    s = cur + p
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return SymPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a SymPoly")
        out = SymPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, SymPoly):
            other = other.scalar_value()
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, (Fraction, RatFunc)):
            return self * _elem_inv(other)
        return NotImplemented

    def __rtruediv__(self, other):
        inv = _elem_inv(self.scalar_value())
        return SymPoly._coerce(other) * inv

    # -- comparisons / output ---------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.d == other.d

    __hash__ = None  # type: ignore[assignment]

    def __str__(self):
        if not self.d:
            return "0"
        parts = []
        for key in sorted(self.d):
            mono = "".join(
                f"*{s}^{e}" if e > 1 else (f"*{s}" if e == 1 else "")
                for s, e in zip(self.SYMS, key)
            )
            parts.append(f"({self.d[key]}){mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymPoly({self!s})"
