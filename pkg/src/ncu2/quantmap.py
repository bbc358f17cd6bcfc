"""Quantization with a noncommutative configuration space.

The quantization map used here is full symmetrization: a commutative
monomial goes to the average of all orderings of its letters, normalized
back to PBW form.  It is linear, degree-filtered, covariant and invertible
on every bounded-degree layer, which is all the downstream constructions
need; the star product is the pullback of the noncommutative product,

    f * g = alpha^-1( alpha(f) . alpha(g) ).

Radial functions f(t, r) quantize by the substitution r -> rho, fractions
by right fractions alpha(f) alpha(g)^-1, differential operators by
quantizing coefficients and replacing the partial derivatives with their
quantum counterparts.  In general alpha(P(f)) differs from alpha(P)(alpha(f)),
and alpha does not intertwine the classical and quantum de Rham operators;
both non-identities are exercised in the tests rather than hidden.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .aext import AElem, a_from_u, as_skew, skew_inverse
from .errors import ZeroDenominator
from .scalars import GaussRat, HBAR, Poly, RatFun, T, RHO, G, hrat_check
from .upbw import UPoly, pbw_normalize
from .whcalc import DERIV_NAMES, Form, deriv

__all__ = ["ClassPoly", "ClassOp", "QuantOp", "ClassForm", "alpha_poly",
           "alpha_inverse", "alpha_central", "alpha_mixed", "alpha_fraction",
           "alpha_operator", "star_product", "alpha_form", "classical_d",
           "classical_elem_to_poly"]

_RF_ONE = RatFun.one()


class ClassPoly:
    """Commutative polynomial in t, x, y, z over HRat.  Immutable."""

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
        raise AttributeError("ClassPoly is immutable")

    @staticmethod
    def zero():
        return ClassPoly({})

    @staticmethod
    def one():
        return ClassPoly({(0, 0, 0, 0): _RF_ONE})

    @staticmethod
    def gen(name):
        m = [0, 0, 0, 0]
        m[("t", "x", "y", "z").index(name)] = 1
        return ClassPoly({tuple(m): _RF_ONE})

    @staticmethod
    def monomial(exps, coeff=_RF_ONE):
        return ClassPoly({tuple(exps): hrat_check(RatFun.coerce(coeff))})

    def __add__(self, o):
        d = dict(self.terms)
        for m, c in o.terms.items():
            s = d.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(m, None)
            else:
                d[m] = s
        return ClassPoly(d)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return ClassPoly({m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = RatFun.coerce(c)
        if c.is_zero():
            return ClassPoly({})
        return ClassPoly({m: c * cc for m, cc in self.terms.items()})

    def __mul__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            return self.scale(o)
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                p = c1 * c2
                s = d.get(m)
                d[m] = p if s is None else s + p
        return ClassPoly(d)

    __rmul__ = __mul__

    def partial(self, u):
        """Classical partial derivative."""
        k = ("t", "x", "y", "z").index(u)
        d = {}
        for m, c in self.terms.items():
            if m[k]:
                mm = list(m)
                mm[k] -= 1
                d[tuple(mm)] = c * m[k]
        return ClassPoly(d)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, o):
        if not isinstance(o, ClassPoly):
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        if not self.terms:
            return "ClassPoly(0)"
        names = ("t", "x", "y", "z")
        bits = []
        for m, c in sorted(self.terms.items()):
            fac = "*".join(f"{names[k]}^{m[k]}" if m[k] > 1 else names[k]
                           for k in range(4) if m[k])
            bits.append(f"({c})*{fac}" if fac else f"({c})")
        return "ClassPoly(" + " + ".join(bits) + ")"


@lru_cache(maxsize=None)
def _alpha_mono(mono):
    """Symmetrized image of the commutative monomial t^a x^b y^c z^d."""
    a, b, c, d = mono
    word = "x" * b + "y" * c + "z" * d
    perms = set(permutations(word))
    if not perms:
        total = UPoly.one()
    else:
        total = UPoly.zero()
        for p in perms:
            total = total + pbw_normalize("".join(p))
        total = total.scale(RatFun.coerce(GaussRat(1)) / len(perms))
    if a:
        total = UPoly.monomial((a, 0, 0, 0)) * total
    return total


def alpha_poly(p):
    """The symmetrization quantization map Sym -> U."""
    out = UPoly.zero()
    for m, c in p.terms.items():
        out = out + _alpha_mono(m).scale(c)
    return out


def alpha_inverse(u):
    """Inverse of alpha_poly by downward induction on the total degree:
    the top-degree part of alpha(p) equals the top-degree part of p."""
    rest = u
    out = ClassPoly.zero()
    while not rest.is_zero():
        n = rest.total_degree()
        top = ClassPoly({m: c for m, c in rest.terms.items() if sum(m) == n})
        out = out + top
        rest = rest - alpha_poly(top)
        if not rest.is_zero() and rest.total_degree() >= n:
            raise AssertionError("alpha_inverse failed to reduce degree")
    return out


def star_product(f, g):
    """f * g = alpha^-1(alpha(f) alpha(g)); associative, commutative at h=0."""
    return alpha_inverse(alpha_poly(f) * alpha_poly(g))


def alpha_central(f):
    """Quantize a radial function f(t, r) by substituting r -> rho.

    The input is a CenterFun whose rho slot is read classically as r; the
    output is the same data read as a function of the quantum radius.
    Classical input must not depend on hbar.
    """
    f = RatFun.coerce(f)
    if HBAR in f.variables():
        raise ValueError("classical radial data must be hbar-free")
    return f


def alpha_mixed(arg):
    """Quantize classical data presented in split radial-polynomial form.

    Accepted shapes: a ClassPoly; a CenterFun read as radial data f(t, r);
    a tuple (radial, ClassPoly) meaning their product; or a list of any of
    these, meaning the sum.  Returns an AElem.
    """
    if isinstance(arg, tuple) and len(arg) == 2 \
            and isinstance(arg[0], RatFun) and isinstance(arg[1], ClassPoly):
        radial, poly = arg
        return a_from_u(alpha_poly(poly)).scale(alpha_central(radial))
    if isinstance(arg, list):
        out = AElem.zero()
        for part in arg:
            out = out + alpha_mixed(part)
        return out
    if isinstance(arg, ClassPoly):
        return a_from_u(alpha_poly(arg))
    if isinstance(arg, RatFun):
        return AElem.scalar(alpha_central(arg))
    raise TypeError(f"cannot quantize {arg!r}")


def alpha_fraction(f, g):
    """Right-fraction quantization alpha(f) alpha(g)^-1 as a lazy tree.

    Arguments may be any shape alpha_mixed accepts; a radial g folds the
    reciprocal into the coefficient field.
    """
    num = alpha_mixed(f)
    den = alpha_mixed(g)
    if den.is_zero():
        raise ZeroDenominator("alpha_fraction: zero denominator")
    if den.is_central():
        # central denominator folds straight into the coefficient
        return as_skew(num.scale(_RF_ONE / den.central_part()))
    return as_skew(num) * skew_inverse(as_skew(den))


class ClassOp:
    """Classical differential operator: sum of fraction-form coefficients
    times commutative derivative monomials (dt, dx, dy, dz exponents)."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        # terms: iterable of (num: ClassPoly, den: ClassPoly | None, dmono)
        object.__setattr__(self, "terms", tuple(
            (num, den, tuple(dmono)) for num, den, dmono in terms))

    def __setattr__(self, name, value):
        raise AttributeError("ClassOp is immutable")

    @staticmethod
    def derivative(u):
        m = [0, 0, 0, 0]
        m[DERIV_NAMES.index(u)] = 1
        return ClassOp([(ClassPoly.one(), None, tuple(m))])


class QuantOp:
    """Quantized operator: coefficients in A or its skew field, quantum
    derivative monomials on the right."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("QuantOp is immutable")

    def apply(self, a):
        """Apply to an element of A.  Requires plain AElem coefficients;
        skew coefficients produce a lazy SkewExpr result."""
        out_plain = AElem.zero()
        out_skew = None
        for coeff, dmono in self.terms:
            val = a
            for k, name in enumerate(DERIV_NAMES):
                for _ in range(dmono[k]):
                    val = deriv(name, val)
            if isinstance(coeff, AElem):
                out_plain = out_plain + coeff * val
            else:
                term = coeff * as_skew(val)
                out_skew = term if out_skew is None else out_skew + term
        if out_skew is None:
            return out_plain
        if not out_plain.is_zero():
            out_skew = out_skew + as_skew(out_plain)
        return out_skew


def alpha_operator(p):
    """Quantize a classical differential operator: quantize every
    coefficient, keep the derivative monomials (now acting quantumly)."""
    out = []
    for num, den, dmono in p.terms:
        if den is None or den == ClassPoly.one():
            coeff = a_from_u(alpha_poly(num))
        else:
            coeff = alpha_fraction(num, den)
        out.append((coeff, dmono))
    return QuantOp(out)


class ClassForm:
    """Classical differential form: dict {mask: ClassPoly}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {m: c for m, c in (terms or {}).items() if not c.is_zero()}
        object.__setattr__(self, "terms", d)

    def __setattr__(self, name, value):
        raise AttributeError("ClassForm is immutable")

    @staticmethod
    def of(mask, p):
        return ClassForm({mask: p})

    def __add__(self, o):
        d = dict(self.terms)
        for m, c in o.terms.items():
            s = d.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(m, None)
            else:
                d[m] = s
        return ClassForm(d)

    def __eq__(self, o):
        if not isinstance(o, ClassForm):
            return NotImplemented
        return self.terms == o.terms

    def __repr__(self):
        return f"ClassForm({self.terms!r})"


def _wedge_sign(mask, k):
    bit = 1 << k
    if mask & bit:
        return None
    higher = sum(1 for j in range(k + 1, 4) if mask & (1 << j))
    return -1 if higher % 2 else +1


def classical_d(w):
    """The commutative de Rham operator on ClassForm."""
    out = ClassForm({})
    for mask, p in w.terms.items():
        for k, name in enumerate(DERIV_NAMES):
            sign = _wedge_sign(mask, k)
            if sign is None:
                continue
            dp = p.partial(name)
            if dp.is_zero():
                continue
            if sign < 0:
                dp = -dp
            out = out + ClassForm.of(mask | (1 << k), dp)
    return out


def alpha_form(w):
    """Quantize a classical form coefficientwise; the exterior part is
    carried over verbatim.  In general alpha(d w) != d(alpha(w))."""
    out = Form.zero()
    for mask, p in w.terms.items():
        out = out + Form.of(mask, a_from_u(alpha_poly(p)))
    return out


def classical_elem_to_poly(ce):
    """Flatten a ClassicalElem to a ClassPoly by expanding even powers of
    the radius through r^2 = x^2 + y^2 + z^2.

    Raises ValueError when a coefficient is not polynomial or carries an
    odd power of r (such elements are not polynomial data).
    """
    cas = (ClassPoly.gen("x") * ClassPoly.gen("x")
           + ClassPoly.gen("y") * ClassPoly.gen("y")
           + ClassPoly.gen("z") * ClassPoly.gen("z"))
    out = ClassPoly.zero()
    for (a, b, c), coeff in ce.terms.items():
        if not coeff.is_polynomial():
            raise ValueError(f"coefficient {coeff} is not polynomial")
        base = ClassPoly.monomial((0, a, b, c))
        for pm, pc in coeff.num.terms.items():
            if pm[HBAR]:
                raise ValueError("classical data must be hbar-free")
            er = pm[RHO]
            if er % 2:
                raise ValueError("odd power of r is not polynomial data")
            scalar = RatFun.coerce(Poly.monomial((0, 0, 0, pm[G]), pc))
            piece = ClassPoly({(pm[T], 0, 0, 0): scalar}) * base
            for _ in range(er // 2):
                piece = piece * cas
            out = out + piece
    return out
