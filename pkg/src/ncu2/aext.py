"""The centrally extended algebra and its canonical form.

A = (U(su(2)_h) (x) K(t, rho)) / < x^2 + y^2 + z^2 - rho^2 + hbar^2 >

Elements are reduced to the canonical basis x^a y^b z^c with c <= 1 over
the central coefficient field K(t, rho): the ideal relation rewrites every
z^2 to (rho^2 - hbar^2) - x^2 - y^2, and t only ever appears inside
coefficients.  The rewriting terminates (each application lowers the
z-degree at fixed total degree, commutator spill-over lowers total degree);
confluence is exercised empirically by the representation oracle rather
than proved.

Inverses of noncentral elements are lazy ``SkewExpr`` trees certified
numerically, mirroring the case-by-case treatment of the skew field.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import SingularInverse
from .scalars import (GR_ONE, GaussRat, Poly, RatFun, RF_H, RF_HBAR, RF_RHO,
                      RF_T, limit_h0)
from . import upbw

__all__ = ["AElem", "ClassicalElem", "a_from_u", "a_mul", "a_classical_limit",
           "SkewExpr", "SkewAtom", "SkewSum", "SkewProd", "SkewInv",
           "skew_inverse", "as_skew", "CAS_VALUE"]

_RF_ONE = RatFun.one()
_RF_ZERO = RatFun.zero()

# rho^2 - hbar^2, the central value of the Casimir
CAS_VALUE = RF_RHO * RF_RHO - RF_HBAR * RF_HBAR

AXES = ("x", "y", "z")

# w v -> v w + sign * h * u over letters 0=x, 1=y, 2=z
_SWAP3 = {
    (1, 0): (-1, 2),   # y x = x y - h z
    (2, 1): (-1, 0),   # z y = y z - h x
    (2, 0): (+1, 1),   # z x = x z + h y
}


def _mono3(word):
    m = [0, 0, 0]
    for w in word:
        m[w] += 1
    return tuple(m)


@lru_cache(maxsize=None)
def _word_normal3(word):
    """PBW normal form over the letters x, y, z: tuple of ((a,b,c), coeff)."""
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            break
    else:
        return ((_mono3(word), _RF_ONE),)
    w, v = word[i], word[i + 1]
    acc = {}
    for mono, c in _word_normal3(word[:i] + (v, w) + word[i + 2:]):
        acc[mono] = acc.get(mono, _RF_ZERO) + c
    sign, u = _SWAP3[(w, v)]
    corr = RF_H if sign > 0 else -RF_H
    for mono, c in _word_normal3(word[:i] + (u,) + word[i + 2:]):
        acc[mono] = acc.get(mono, _RF_ZERO) + corr * c
    return tuple((m, c) for m, c in acc.items() if not c.is_zero())


@lru_cache(maxsize=None)
def _casimir_reduce(mono):
    """Reduce x^a y^b z^c to the c <= 1 basis: tuple of ((a,b,c), coeff)."""
    a, b, c = mono
    if c <= 1:
        return (((a, b, c), _RF_ONE),)
    acc = {}
    base = (a, b, c - 2)
    # z^2 -> (rho^2 - hbar^2) - x^2 - y^2, applied to the rightmost factors
    for m, k in _casimir_reduce(base):
        acc[m] = acc.get(m, _RF_ZERO) + k * CAS_VALUE
    for letter in (0, 1):
        word = (0,) * a + (1,) * b + (2,) * (c - 2) + (letter, letter)
        for m1, k1 in _word_normal3(word):
            for m2, k2 in _casimir_reduce(m1):
                acc[m2] = acc.get(m2, _RF_ZERO) - k1 * k2
    return tuple((m, k) for m, k in acc.items() if not k.is_zero())


@lru_cache(maxsize=None)
def _mono_product(m1, m2):
    """Canonical form of (x^a y^b z^c) * (x^a' y^b' z^c')."""
    word = ((0,) * m1[0] + (1,) * m1[1] + (2,) * m1[2]
            + (0,) * m2[0] + (1,) * m2[1] + (2,) * m2[2])
    acc = {}
    for m, k in _word_normal3(word):
        for mm, kk in _casimir_reduce(m):
            s = acc.get(mm)
            p = k * kk
            acc[mm] = p if s is None else s + p
    return tuple((m, k) for m, k in acc.items() if not k.is_zero())


class AElem:
    """Canonical element of the extended algebra.  Immutable.

    terms: dict mapping (a, b, c) with c in {0, 1} for x^a y^b z^c to
    CenterFun coefficients.
    """

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
        raise AttributeError("AElem is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return _A_ZERO

    @staticmethod
    def one():
        return _A_ONE

    @staticmethod
    def scalar(f):
        """Embed a central function as f * 1."""
        return AElem({(0, 0, 0): RatFun.coerce(f)})

    @staticmethod
    def gen(name):
        m = [0, 0, 0]
        m[AXES.index(name)] = 1
        return AElem({tuple(m): _RF_ONE})

    @staticmethod
    def monomial(exps, coeff=_RF_ONE):
        out = {}
        coeff = RatFun.coerce(coeff)
        for m, k in _casimir_reduce(tuple(exps)):
            s = out.get(m)
            p = coeff * k
            out[m] = p if s is None else s + p
        return AElem(out)

    # -- queries ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_central(self):
        return all(m == (0, 0, 0) for m in self.terms)

    def central_part(self):
        """The coefficient of the unit monomial."""
        return self.terms.get((0, 0, 0), _RF_ZERO)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            o = AElem.scalar(o)
        d = dict(self.terms)
        for m, c in o.terms.items():
            s = d.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(m, None)
            else:
                d[m] = s
        return AElem(d)

    __radd__ = __add__

    def __sub__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            o = AElem.scalar(o)
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __neg__(self):
        return AElem({m: -c for m, c in self.terms.items()})

    def scale(self, f):
        f = RatFun.coerce(f)
        if f.is_zero():
            return _A_ZERO
        return AElem({m: f * c for m, c in self.terms.items()})

    def __mul__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            return self.scale(o)
        if not isinstance(o, AElem):
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                c = c1 * c2
                for m, k in _mono_product(m1, m2):
                    s = acc.get(m)
                    p = c * k
                    acc[m] = p if s is None else s + p
        return AElem(acc)

    def __rmul__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            return self.scale(o)
        return NotImplemented

    def __pow__(self, n):
        out = _A_ONE
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, o):
        return self * o - o * self

    def __eq__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            o = AElem.scalar(o)
        if not isinstance(o, AElem):
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- structure maps ----------------------------------------------------------

    def rotate_cyclic(self):
        """The algebra map x -> y -> z -> x (an SO(3) generator rotation)."""
        out = _A_ZERO
        for (a, b, c), coeff in self.terms.items():
            word = (1,) * a + (2,) * b + (0,) * c
            part = {}
            for m, k in _word_normal3(word):
                for mm, kk in _casimir_reduce(m):
                    s = part.get(mm)
                    p = k * kk
                    part[mm] = p if s is None else s + p
            out = out + AElem(part).scale(coeff)
        return out

    # -- printing -------------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def to_str(self):
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v in range(3):
                if m[v] == 1:
                    factors.append(AXES[v])
                elif m[v] > 1:
                    factors.append(f"{AXES[v]}^{m[v]}")
            cs = c.to_str()
            if factors:
                if c == _RF_ONE:
                    s = "*".join(factors)
                elif c == -_RF_ONE:
                    s = "-" + "*".join(factors)
                else:
                    if not (cs.lstrip("-").isdigit() or cs.isalnum()):
                        cs = f"({cs})"
                    s = cs + "*" + "*".join(factors)
            else:
                s = cs if (cs.lstrip("-").isdigit() or cs.isalnum()) else f"({cs})"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += s if s.startswith("-") else "+" + s
        return out

    def __repr__(self):
        return f"AElem({self.to_str()})"

    __str__ = to_str


_A_ZERO = AElem({})
_A_ONE = AElem({(0, 0, 0): _RF_ONE})


def a_from_u(p):
    """Quotient map U(u(2)_h) -> A: t-powers become coefficients and z^2 is
    eliminated through the Casimir relation."""
    out = _A_ZERO
    for (a, b, c, d), coeff in p.terms.items():
        cf = RatFun.coerce(coeff) * RF_T ** a
        out = out + AElem.monomial((b, c, d), cf)
    return out


def a_mul(a, b):
    """Product in the extended algebra (canonical form)."""
    return a * b


def a_classical_limit(a):
    """Image in the commutative classical-limit algebra (hbar -> 0)."""
    return ClassicalElem({m: limit_h0(c) for m, c in a.terms.items()})


@lru_cache(maxsize=None)
def _classical_reduce(mono):
    """Commutative z^2 -> r^2 - x^2 - y^2 reduction to the c <= 1 basis."""
    a, b, c = mono
    if c <= 1:
        return (((a, b, c), _RF_ONE),)
    acc = {}
    for m, k in _classical_reduce((a, b, c - 2)):
        acc[m] = acc.get(m, _RF_ZERO) + k * CAS_R2
        m1 = (m[0] + 2, m[1], m[2])
        acc[m1] = acc.get(m1, _RF_ZERO) - k
        m2 = (m[0], m[1] + 2, m[2])
        acc[m2] = acc.get(m2, _RF_ZERO) - k
    return tuple((m, k) for m, k in acc.items() if not k.is_zero())


CAS_R2 = RF_RHO * RF_RHO  # read as r^2 in the classical limit


class ClassicalElem:
    """Commutative limit: monomials x^a y^b z^c (c <= 1) over K(t, r).

    The rho slot of each coefficient is read as the classical radius r,
    subject to r^2 = x^2 + y^2 + z^2; products are reduced to the same
    canonical basis as the quantum side so the limit map is multiplicative.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        for m, c in (terms or {}).items():
            if c.is_zero():
                continue
            for mm, k in _classical_reduce(m):
                s = d.get(mm)
                p = c * k
                s = p if s is None else s + p
                if s.is_zero():
                    d.pop(mm, None)
                else:
                    d[mm] = s
        object.__setattr__(self, "terms", d)

    def __setattr__(self, name, value):
        raise AttributeError("ClassicalElem is immutable")

    def __add__(self, o):
        d = dict(self.terms)
        for m, c in o.terms.items():
            s = d.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(m, None)
            else:
                d[m] = s
        return ClassicalElem(d)

    def __neg__(self):
        return ClassicalElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                p = c1 * c2
                s = d.get(m)
                d[m] = p if s is None else s + p
        return ClassicalElem(d)

    def is_zero(self):
        return not self.terms

    def __eq__(self, o):
        if not isinstance(o, ClassicalElem):
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        body = " + ".join(f"({c.to_str(('hbar', 't', 'r', 'g'))})*x^{m[0]}*y^{m[1]}*z^{m[2]}"
                          for m, c in sorted(self.terms.items()))
        return f"ClassicalElem({body or '0'})"


# ---------------------------------------------------------------------------
# lazy skew-field expressions
# ---------------------------------------------------------------------------

class SkewExpr:
    """Expression tree over A with formal inverses.

    Nodes are never rewritten to fractions; identities about them are
    checked numerically through the representation oracle.
    """

    __slots__ = ()

    def __add__(self, o):
        return SkewSum((self, as_skew(o)))

    def __radd__(self, o):
        return SkewSum((as_skew(o), self))

    def __mul__(self, o):
        return SkewProd((self, as_skew(o)))

    def __rmul__(self, o):
        return SkewProd((as_skew(o), self))

    def __sub__(self, o):
        return SkewSum((self, SkewProd((as_skew(-1), as_skew(o)))))

    def __neg__(self):
        return SkewProd((as_skew(-1), self))

    def is_zero(self):
        return False


class SkewAtom(SkewExpr):
    __slots__ = ("elem",)

    def __init__(self, elem):
        object.__setattr__(self, "elem", elem)

    def is_zero(self):
        return self.elem.is_zero()

    def __repr__(self):
        return f"atom({self.elem})"


class SkewSum(SkewExpr):
    __slots__ = ("parts",)

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.parts)) + ")"


class SkewProd(SkewExpr):
    __slots__ = ("parts",)

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))

    def __repr__(self):
        return "(" + " * ".join(map(repr, self.parts)) + ")"


class SkewInv(SkewExpr):
    __slots__ = ("child",)

    def __init__(self, child):
        object.__setattr__(self, "child", child)

    def __repr__(self):
        return f"inv({self.child!r})"


def as_skew(v):
    if isinstance(v, SkewExpr):
        return v
    if isinstance(v, AElem):
        return SkewAtom(v)
    if isinstance(v, (int, GaussRat, RatFun)):
        return SkewAtom(AElem.scalar(v))
    raise TypeError(f"cannot interpret {v!r} as a skew expression")


def skew_inverse(e, certify=True):
    """Formal inverse of a skew expression.

    A purely central atom folds straight into a coefficient reciprocal.
    Otherwise the inverse node is only created after the representation
    oracle certifies the operand invertible at sampled parameters; a
    SingularInverse is raised when every sample fails.
    """
    e = as_skew(e)
    if isinstance(e, SkewAtom) and e.elem.is_central():
        f = e.elem.central_part()
        if f.is_zero():
            raise SingularInverse("inverse of zero")
        return SkewAtom(AElem.scalar(_RF_ONE / f))
    if isinstance(e, SkewInv):
        return e.child
    if certify:
        from . import reporacle
        reporacle.certify_invertible(e)
    return SkewInv(e)
