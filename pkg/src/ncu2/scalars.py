"""Exact coefficient arithmetic.

Everything downstream of this module computes over the field

    K = Q(i)(hbar, t, rho, g)

of rational functions in the deformation parameter hbar, the central
generator t, the quantum radius rho and the opaque charge constant g,
with Gaussian-rational coefficients.  No floating point appears anywhere
here; numerics live in `reporacle` only.

Three public scalar layers:

* ``GaussRat``  -- exact complex rationals a + b*i;
* ``HRat``      -- rational functions of hbar alone (PBW coefficients);
* ``CenterFun`` -- rational functions of (t, rho) over HRat, i.e. the
  coefficient field of the extended algebra.

``HRat`` and ``CenterFun`` share one implementation (``RatFun``), a reduced
fraction of sparse polynomials.  Fractions are kept canonical: numerator and
denominator coprime, denominator nonzero with leading coefficient 1 in the
fixed degree-lexicographic order (rho > t > hbar > g), so equality is plain
structural comparison.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DivisionByZero, PoleAtZero

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Q

__all__ = [
    "GaussRat",
    "Poly",
    "RatFun",
    "HRat",
    "CenterFun",
    "cf_arith",
    "shift_rho",
    "shift_t_ihbar",
    "drho",
    "dr_classical",
    "limit_h0",
    "specialize_hbar",
    "theta_central_pair",
    "rho_infinity_limit",
    "eval_at_rho",
]

_Q0 = _Q(0)
_Q1 = _Q(1)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

class GaussRat:
    """An exact complex rational re + im*i, components in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _Q(re))
        object.__setattr__(self, "im", _Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def coerce(v):
        if isinstance(v, GaussRat):
            return v
        return GaussRat(v)

    def __add__(self, o):
        o = GaussRat.coerce(o)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = GaussRat.coerce(o)
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussRat.coerce(o) - self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, o):
        o = GaussRat.coerce(o)
        return GaussRat(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussRat.coerce(o)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise DivisionByZero("division by zero Gaussian rational")
        return GaussRat((self.re * o.re + self.im * o.im) / n,
                        (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, o):
        return GaussRat.coerce(o) / self

    def __pow__(self, n):
        if n < 0:
            return GaussRat(1) / self ** (-n)
        out = GaussRat(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self):
        return GaussRat(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, o):
        if isinstance(o, (int, type(_Q0))):
            return self.im == 0 and self.re == o
        if not isinstance(o, GaussRat):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        im = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re}{im}{istr}"


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)
GR_TWO_I = GaussRat(0, 2)


# ---------------------------------------------------------------------------
# Sparse polynomials in (hbar, t, rho, g)
# ---------------------------------------------------------------------------

HBAR, T, RHO, G = 0, 1, 2, 3
NVARS = 4
VAR_NAMES = ("hbar", "t", "rho", "g")
_ZMONO = (0, 0, 0, 0)


def _order_key(mono):
    # degree-lex with priority rho > t > hbar > g
    return (sum(mono), mono[RHO], mono[T], mono[HBAR], mono[G])


class Poly:
    """Sparse multivariate polynomial over GaussRat.  Immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        d = {}
        if terms:
            for m, c in terms.items():
                if not c.is_zero():
                    d[m] = c
        object.__setattr__(self, "terms", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return _P_ZERO

    @staticmethod
    def one():
        return _P_ONE

    @staticmethod
    def const(c):
        c = GaussRat.coerce(c)
        return Poly({_ZMONO: c})

    @staticmethod
    def var(idx, exp=1):
        m = [0, 0, 0, 0]
        m[idx] = exp
        return Poly({tuple(m): GR_ONE})

    @staticmethod
    def monomial(mono, coeff):
        return Poly({tuple(mono): GaussRat.coerce(coeff)})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ZMONO in self.terms)

    def const_value(self):
        if self.is_zero():
            return GR_ZERO
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms[_ZMONO]

    def degree(self, var):
        if not self.terms:
            return -1
        return max(m[var] for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def variables(self):
        used = set()
        for m in self.terms:
            for v in range(NVARS):
                if m[v]:
                    used.add(v)
        return used

    def leading(self):
        """Leading (monomial, coeff) in the fixed deglex order."""
        m = max(self.terms, key=_order_key)
        return m, self.terms[m]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, o):
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        d = dict(self.terms)
        for m, c in o.terms.items():
            s = d.get(m)
            if s is None:
                d[m] = c
            else:
                s = s + c
                if s.is_zero():
                    del d[m]
                else:
                    d[m] = s
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", d)
        object.__setattr__(p, "_hash", None)
        return p

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        d = {m: -c for m, c in self.terms.items()}
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", d)
        object.__setattr__(p, "_hash", None)
        return p

    def __mul__(self, o):
        if isinstance(o, GaussRat):
            return self.scale(o)
        if self.is_zero() or o.is_zero():
            return _P_ZERO
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                c = c1 * c2
                s = d.get(m)
                if s is None:
                    d[m] = c
                else:
                    d[m] = s + c
        d = {m: c for m, c in d.items() if not c.is_zero()}
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", d)
        object.__setattr__(p, "_hash", None)
        return p

    def scale(self, c):
        if c.is_zero() or self.is_zero():
            return _P_ZERO
        d = {m: cc * c for m, cc in self.terms.items()}
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", d)
        object.__setattr__(p, "_hash", None)
        return p

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = _P_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        if not isinstance(o, Poly):
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset((m, c.re, c.im) for m, c in self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- substitution and evaluation ----------------------------------------

    def subs(self, mapping):
        """Substitute variables by polynomials; mapping: {var_index: Poly}."""
        out = _P_ZERO
        powcache = {}

        def power(v, e):
            key = (v, e)
            p = powcache.get(key)
            if p is None:
                p = mapping[v] ** e
                powcache[key] = p
            return p

        for m, c in self.terms.items():
            term = Poly.const(c)
            rest = [0, 0, 0, 0]
            for v in range(NVARS):
                if m[v]:
                    if v in mapping:
                        term = term * power(v, m[v])
                    else:
                        rest[v] = m[v]
            if tuple(rest) != _ZMONO:
                term = term * Poly.monomial(tuple(rest), GR_ONE)
            out = out + term
        return out

    def deriv(self, var):
        d = {}
        for m, c in self.terms.items():
            e = m[var]
            if e:
                mm = list(m)
                mm[var] = e - 1
                mm = tuple(mm)
                add = c * GaussRat(e)
                s = d.get(mm)
                d[mm] = add if s is None else s + add
        return Poly(d)

    def eval_complex(self, vals):
        """vals: sequence of 4 complex numbers for (hbar, t, rho, g)."""
        out = 0j
        for m, c in self.terms.items():
            z = complex(c)
            for v in range(NVARS):
                if m[v]:
                    z *= vals[v] ** m[v]
            out += z
        return out

    # -- division / gcd ------------------------------------------------------

    def mono_content(self):
        """Per-variable minimum exponent over all terms (self nonzero)."""
        it = iter(self.terms)
        m0 = list(next(it))
        for m in it:
            for v in range(NVARS):
                if m[v] < m0[v]:
                    m0[v] = m[v]
        return tuple(m0)

    def shift_down(self, mono):
        if mono == _ZMONO:
            return self
        d = {}
        for m, c in self.terms.items():
            d[(m[0] - mono[0], m[1] - mono[1], m[2] - mono[2], m[3] - mono[3])] = c
        p = Poly.__new__(Poly)
        object.__setattr__(p, "terms", d)
        object.__setattr__(p, "_hash", None)
        return p

    def divexact(self, b):
        """Exact division self / b; raises ValueError if not divisible."""
        if b.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero():
            return _P_ZERO
        if b.is_const():
            return self.scale(GR_ONE / b.const_value())
        rem = self
        quo = _P_ZERO
        bm, bc = b.leading()
        while not rem.is_zero():
            rm, rc = rem.leading()
            qm = tuple(rm[v] - bm[v] for v in range(NVARS))
            if any(e < 0 for e in qm):
                raise ValueError("polynomials do not divide exactly")
            qt = Poly.monomial(qm, rc / bc)
            quo = quo + qt
            rem = rem - qt * b
        return quo

    def divides(self, other):
        try:
            other.divexact(self)
            return True
        except ValueError:
            return False

    # -- printing ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)

    def __repr__(self):
        return f"Poly({self.to_str()})"

    def to_str(self, names=VAR_NAMES):
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v in range(NVARS):
                if m[v] == 1:
                    factors.append(names[v])
                elif m[v] > 1:
                    factors.append(f"{names[v]}^{m[v]}")
            cs = str(c)
            if factors:
                if c == GR_ONE:
                    s = "*".join(factors)
                elif c == -GR_ONE:
                    s = "-" + "*".join(factors)
                else:
                    if ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs or "*" in cs:
                        cs = f"({cs})"
                    s = cs + "*" + "*".join(factors)
            else:
                s = cs
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += s if s.startswith("-") else "+" + s
        return out


_P_ZERO = Poly({})
_P_ONE = Poly({_ZMONO: GR_ONE})


# ---------------------------------------------------------------------------
# multivariate gcd (monic Euclid over the fraction field of the other vars)
# ---------------------------------------------------------------------------

def _monic(p):
    if p.is_zero():
        return p
    _, lc = p.leading()
    if lc == GR_ONE:
        return p
    return p.scale(GR_ONE / lc)


def _univar_coeffs(p, v):
    """View p as a polynomial in variable v: dict degree -> v-free Poly."""
    out = {}
    for m, c in p.terms.items():
        e = m[v]
        mm = list(m)
        mm[v] = 0
        mm = tuple(mm)
        b = out.setdefault(e, {})
        s = b.get(mm)
        b[mm] = c if s is None else s + c
    return {e: Poly(d) for e, d in out.items()}


def _content_in(p, v):
    """gcd of the coefficients of p viewed as univariate in v."""
    coeffs = sorted(_univar_coeffs(p, v).values(), key=lambda q: len(q.terms))
    g = _P_ZERO
    for c in coeffs:
        g = poly_gcd(g, c)
        if g.is_const() and not g.is_zero():
            return _P_ONE
    return g


_GCD_MEMO = {}


def poly_gcd(a, b):
    """Monic gcd of two polynomials over Q(i)."""
    if a.is_zero():
        return _monic(b)
    if b.is_zero():
        return _monic(a)
    if a.is_const() or b.is_const():
        return _P_ONE
    if a.terms == b.terms:
        return _monic(a)

    ma, mb = a.mono_content(), b.mono_content()
    mg = tuple(min(x, y) for x, y in zip(ma, mb))
    a = a.shift_down(ma)
    b = b.shift_down(mb)

    if a.is_const() or b.is_const():
        g = _P_ONE
    else:
        key = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
        g = _GCD_MEMO.get(key)
        if g is None:
            g = _gcd_core(a, b)
            if len(_GCD_MEMO) > 200000:
                _GCD_MEMO.clear()
            _GCD_MEMO[key] = g
    if mg != _ZMONO:
        g = g * Poly.monomial(mg, GR_ONE)
    return _monic(g)


def _lead_coeff_in(p, v):
    """Leading coefficient (a v-free Poly) of p viewed as univariate in v."""
    d = p.degree(v)
    out = {}
    for m, c in p.terms.items():
        if m[v] == d:
            mm = list(m)
            mm[v] = 0
            out[tuple(mm)] = c
    return Poly(out)


def _prem(f, g, v):
    """Strict pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r."""
    m = g.degree(v)
    lg = _lead_coeff_in(g, v)
    r = f
    e = f.degree(v) - m + 1
    while not r.is_zero():
        d = r.degree(v)
        if d < m:
            break
        lr = _lead_coeff_in(r, v)
        r = r * lg - g * (lr * Poly.var(v, d - m))
        e -= 1
    if e > 0:
        r = r * lg ** e
    return r


def _gcd_core(a, b):
    """gcd of monomial-content-free, nonconstant polynomials.

    Subresultant pseudo-remainder sequence: fraction-free, with predicted
    exact divisors keeping coefficient growth polynomial.
    """
    common = a.variables() & b.variables()
    if not common:
        return _P_ONE
    # main variable: smallest joint degree keeps the remainder sequence short
    v = min(common, key=lambda w: max(a.degree(w), b.degree(w)))
    ca = _content_in(a, v)
    cb = _content_in(b, v)
    if not ca.is_const():
        a = a.divexact(ca)
    if not cb.is_const():
        b = b.divexact(cb)
    cg = poly_gcd(ca, cb)

    if a.degree(v) < b.degree(v):
        a, b = b, a
    if b.degree(v) == 0:
        return cg
    g = _P_ONE
    h = _P_ONE
    while True:
        delta = a.degree(v) - b.degree(v)
        r = _prem(a, b, v)
        if r.is_zero():
            gpp = b
            break
        if r.degree(v) == 0:
            return cg
        a, b = b, r.divexact(g * h ** delta)
        g = _lead_coeff_in(a, v)
        if delta == 0:
            h = h  # unchanged: h^(1-0)*g^0
        elif delta == 1:
            h = g
        else:
            h = (g ** delta).divexact(h ** (delta - 1))
    cont = _content_in(gpp, v)
    if not cont.is_const():
        gpp = gpp.divexact(cont)
    return cg * gpp


# ---------------------------------------------------------------------------
# Rational functions (HRat / CenterFun)
# ---------------------------------------------------------------------------

class RatFun:
    """Reduced fraction of Polys; canonical (monic denominator).  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, Poly):
            num = Poly.const(GaussRat.coerce(num))
        if den is None:
            den = _P_ONE
        elif not isinstance(den, Poly):
            den = Poly.const(GaussRat.coerce(den))
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = _P_ONE
        elif reduce:
            if den.is_const():
                num = num.scale(GR_ONE / den.const_value())
                den = _P_ONE
            else:
                g = poly_gcd(num, den)
                if not g.is_const():
                    num = num.divexact(g)
                    den = den.divexact(g)
                _, lc = den.leading()
                if lc != GR_ONE:
                    inv = GR_ONE / lc
                    num = num.scale(inv)
                    den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def coerce(v):
        if isinstance(v, RatFun):
            return v
        if isinstance(v, Poly):
            return RatFun(v, None, reduce=False)
        return RatFun(Poly.const(GaussRat.coerce(v)), None, reduce=False)

    @staticmethod
    def zero():
        return RF_ZERO

    @staticmethod
    def one():
        return RF_ONE

    @staticmethod
    def var(idx, exp=1):
        if exp >= 0:
            return RatFun(Poly.var(idx, exp), None, reduce=False)
        return RatFun(_P_ONE, Poly.var(idx, -exp), reduce=False)

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == _P_ONE and self.den == _P_ONE

    def is_polynomial(self):
        return self.den == _P_ONE

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value() / self.den.const_value()

    def variables(self):
        return self.num.variables() | self.den.variables()

    def uses_only(self, allowed):
        return self.variables() <= set(allowed)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _raw(num, den):
        r = RatFun.__new__(RatFun)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        object.__setattr__(r, "_hash", None)
        return r

    @staticmethod
    def _monic_raw(num, den):
        _, lc = den.leading()
        if lc != GR_ONE:
            inv = GR_ONE / lc
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFun._raw(num, den)

    def __add__(self, o):
        # Henrici's algorithm: inputs reduced, output reduced, gcds stay small
        o = RatFun.coerce(o)
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == _P_ONE and d == _P_ONE:
            return RatFun._raw(a + c, _P_ONE)
        if b == d:
            num = a + c
            g = poly_gcd(num, b)
            if g.is_const():
                return RatFun._raw(num, b) if not num.is_zero() else RF_ZERO
            return RatFun._monic_raw(num.divexact(g), b.divexact(g))
        g = poly_gcd(b, d)
        if g.is_const():
            num = a * d + c * b
            if num.is_zero():
                return RF_ZERO
            return RatFun._monic_raw(num, b * d)
        bp = b.divexact(g)
        dp = d.divexact(g)
        num = a * dp + c * bp
        if num.is_zero():
            return RF_ZERO
        h = poly_gcd(num, g)
        if h.is_const():
            return RatFun._monic_raw(num, bp * d)
        return RatFun._monic_raw(num.divexact(h), bp * d.divexact(h))

    __radd__ = __add__

    def __sub__(self, o):
        return self + (-RatFun.coerce(o))

    def __rsub__(self, o):
        return RatFun.coerce(o) - self

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __mul__(self, o):
        o = RatFun.coerce(o)
        if self.is_zero() or o.is_zero():
            return RF_ZERO
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == _P_ONE and d == _P_ONE:
            return RatFun._raw(a * c, _P_ONE)
        g1 = poly_gcd(a, d)
        if not g1.is_const():
            a = a.divexact(g1)
            d = d.divexact(g1)
        g2 = poly_gcd(c, b)
        if not g2.is_const():
            c = c.divexact(g2)
            b = b.divexact(g2)
        den = b * d
        if den == _P_ONE:
            return RatFun._raw(a * c, _P_ONE)
        return RatFun._monic_raw(a * c, den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RatFun.coerce(o)
        if o.is_zero():
            raise DivisionByZero("division by zero rational function")
        if self.is_zero():
            return RF_ZERO
        return self * RatFun._monic_raw(o.den, o.num)

    def __rtruediv__(self, o):
        return RatFun.coerce(o) / self

    def inv(self):
        return RF_ONE / self

    def __pow__(self, n):
        if n < 0:
            return (RF_ONE / self) ** (-n)
        out = RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, (int, GaussRat)):
            o = RatFun.coerce(o)
        if not isinstance(o, RatFun):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    # -- substitution -----------------------------------------------------------

    def subs(self, mapping):
        """Substitute variables by Polys (a ring map; never introduces poles)."""
        return RatFun(self.num.subs(mapping), self.den.subs(mapping))

    def eval_complex(self, vals):
        d = self.den.eval_complex(vals)
        if d == 0:
            raise ZeroDivisionError("denominator vanished at numeric point")
        return self.num.eval_complex(vals) / d

    # -- printing -------------------------------------------------------------

    def __repr__(self):
        return f"RatFun({self.to_str()})"

    def to_str(self, names=VAR_NAMES):
        ns = self.num.to_str(names)
        if self.den == _P_ONE:
            return ns
        ds = self.den.to_str(names)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        return f"{ns}/({ds})"

    def __str__(self):
        return self.to_str()


RF_ZERO = RatFun(_P_ZERO, None, reduce=False)
RF_ONE = RatFun(_P_ONE, None, reduce=False)

# The two documented views of RatFun.  HRat values must satisfy
# uses_only({HBAR}); CenterFun values may use all four symbols.
HRat = RatFun
CenterFun = RatFun

RF_I = RatFun.coerce(GR_I)
RF_HBAR = RatFun.var(HBAR)
RF_T = RatFun.var(T)
RF_RHO = RatFun.var(RHO)
RF_G = RatFun.var(G)
# h = 2*i*hbar; the permutation relations use c = h/2 = i*hbar
RF_H = RatFun(Poly.var(HBAR).scale(GR_TWO_I), None, reduce=False)
RF_IH = RatFun(Poly.var(HBAR).scale(GR_I), None, reduce=False)
# counit value of the shifted t-derivative: 2/h = 1/(i*hbar) = -i/hbar
RF_TWO_OVER_H = RatFun(Poly.const(GaussRat(0, -1)), Poly.var(HBAR), reduce=False)


def hrat_check(f):
    """Validate the HRat view: no t, rho or g dependence."""
    if not f.uses_only({HBAR}):
        raise ValueError(f"not an HRat (uses {f.variables()}): {f}")
    return f


# ---------------------------------------------------------------------------
# the named scalar operations
# ---------------------------------------------------------------------------

def cf_arith(a, b, op):
    """Field arithmetic on CenterFun values; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("cf_arith: division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def shift_rho(f, k):
    """Substitute rho -> rho + k*hbar."""
    if k == 0:
        return f
    shift = Poly.var(RHO) + Poly.var(HBAR).scale(GaussRat(k))
    return f.subs({RHO: shift})


def shift_t_ihbar(f):
    """Substitute t -> t + i*hbar (the image of t under the theta map)."""
    return f.subs({T: Poly.var(T) + Poly.var(HBAR).scale(GR_I)})


def drho(f):
    """Central-difference derivative in the quantum radius:
    (f(rho+hbar) - f(rho-hbar)) / (2*hbar)."""
    return (shift_rho(f, 1) - shift_rho(f, -1)) / (RF_HBAR * 2)


def dr_classical(f):
    """Ordinary d/dr on a classical radial function (rho slot read as r)."""
    return RatFun(f.num.deriv(RHO) * f.den - f.num * f.den.deriv(RHO),
                  f.den * f.den)


def limit_h0(f):
    """Set hbar = 0; raises PoleAtZero on a genuine pole.

    The rho slot of the result is to be read as the classical radius r.
    """
    den0 = f.den.subs({HBAR: _P_ZERO})
    if den0.is_zero():
        raise PoleAtZero(f"pole at hbar=0: {f}")
    return RatFun(f.num.subs({HBAR: _P_ZERO}), den0)


def specialize_hbar(f, value):
    """Substitute a Gaussian-rational value for hbar."""
    value = GaussRat.coerce(value)
    den = f.den.subs({HBAR: Poly.const(value)})
    if den.is_zero():
        raise PoleAtZero(f"pole at hbar={value}: {f}")
    return RatFun(f.num.subs({HBAR: Poly.const(value)}), den)


@lru_cache(maxsize=None)
def theta_central_pair(f):
    """Decompose the theta image of a central function:

        theta_hat(f) = alpha*I + beta*A

    in the commutative subalgebra K(t,rho)[A].  Derived from the spectral
    action: on the two eigenspaces of A the radius acts as rho +- hbar and
    t acts shifted by i*hbar, so

        alpha = ((rho+hbar)*f_plus + (rho-hbar)*f_minus) / (2*rho)
        beta  = (f_plus - f_minus) / (2*i*rho)

    with f_(+-) = f(t + i*hbar, rho +- hbar).
    """
    fp = shift_t_ihbar(shift_rho(f, 1))
    fm = shift_t_ihbar(shift_rho(f, -1))
    rho = RF_RHO
    hb = RF_HBAR
    alpha = ((rho + hb) * fp + (rho - hb) * fm) / (rho * 2)
    beta = (fp - fm) / (rho * GR_TWO_I)
    return alpha, beta


def eval_at_rho(f, value):
    """Substitute an exact value for rho; raises DivisionByZero on a pole."""
    value = GaussRat.coerce(value)
    den = f.den.subs({RHO: Poly.const(value)})
    if den.is_zero():
        raise DivisionByZero(f"pole of {f} at rho={value}")
    return RatFun(f.num.subs({RHO: Poly.const(value)}), den)


def rho_infinity_limit(f):
    """Limit of f as rho -> infinity: 0, a finite RatFun, or None (pole)."""
    dn = f.num.degree(RHO)
    dd = f.den.degree(RHO)
    if f.is_zero() or dn < dd:
        return RF_ZERO
    if dn > dd:
        return None
    lead_n = _univar_coeffs(f.num, RHO)[dn]
    lead_d = _univar_coeffs(f.den, RHO)[dd]
    return RatFun(lead_n, lead_d)
