"""The quantized u(2) enveloping algebra in PBW normal form.

Generators t, x, y, z with bracket relations

    [x, y] = h z,   [y, z] = h x,   [z, x] = h y,   t central,

where h = 2*i*hbar.  Elements are finitely supported sums of ordered
monomials t^a x^b y^c z^d with rational-in-hbar coefficients; products are
normalized by rewriting adjacent inversions with the bracket table, which
terminates because every rewrite either lowers the inversion count at fixed
degree or lowers the total degree.
"""

from __future__ import annotations

from functools import lru_cache

from .matrices import Mat
from .scalars import (GR_I, GR_ONE, GaussRat, HRat, Poly, RatFun, RF_H,
                      hrat_check)

__all__ = ["Gen", "GENS", "UPoly", "UMat", "pbw_normalize", "u_mul",
           "gen_matrix_N", "ch_residual", "braid_residual", "casimir"]

GENS = ("t", "x", "y", "z")
Gen = str  # one of GENS; the fixed total order is t < x < y < z
UMat = Mat  # matrices with UPoly entries (2x2 for N, 4x4 for the braid form)

_LETTER = {name: k for k, name in enumerate(GENS)}

# w v -> v w + sign * h * u  for an inversion (w > v); t commutes with all
_SWAP = {
    (2, 1): (-1, 3),   # y x = x y - h z
    (3, 2): (-1, 1),   # z y = y z - h x
    (3, 1): (+1, 2),   # z x = x z + h y
}

_RF_ONE = RatFun.one()


def _word_mono(word):
    m = [0, 0, 0, 0]
    for w in word:
        m[w] += 1
    return tuple(m)


@lru_cache(maxsize=None)
def _word_normal(word):
    """Normal form of a product of letters: tuple of ((a,b,c,d), HRat)."""
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            break
    else:
        return ((_word_mono(word), _RF_ONE),)
    w, v = word[i], word[i + 1]
    acc = {}
    for mono, c in _word_normal(word[:i] + (v, w) + word[i + 2:]):
        acc[mono] = acc.get(mono, RatFun.zero()) + c
    if v != 0:
        sign, u = _SWAP[(w, v)]
        corr = RF_H if sign > 0 else -RF_H
        for mono, c in _word_normal(word[:i] + (u,) + word[i + 2:]):
            acc[mono] = acc.get(mono, RatFun.zero()) + corr * c
    return tuple((m, c) for m, c in acc.items() if not c.is_zero())


class UPoly:
    """Element of the enveloping algebra in PBW normal form.  Immutable.

    terms: dict mapping exponent vectors (a, b, c, d) of t^a x^b y^c z^d
    to HRat coefficients (no zero coefficients stored).
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
        raise AttributeError("UPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero():
        return _U_ZERO

    @staticmethod
    def one():
        return _U_ONE

    @staticmethod
    def scalar(c):
        if isinstance(c, (int, GaussRat, Poly)):
            c = RatFun.coerce(c)
        return UPoly({(0, 0, 0, 0): hrat_check(c)})

    @staticmethod
    def gen(name):
        m = [0, 0, 0, 0]
        m[_LETTER[name]] = 1
        return UPoly({tuple(m): _RF_ONE})

    @staticmethod
    def monomial(exps, coeff=_RF_ONE):
        return UPoly({tuple(exps): hrat_check(RatFun.coerce(coeff))})

    # -- queries ----------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, o):
        if isinstance(o, (int, GaussRat)):
            o = UPoly.scalar(o)
        d = dict(self.terms)
        for m, c in o.terms.items():
            s = d.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(m, None)
            else:
                d[m] = s
        return UPoly(d)

    __radd__ = __add__

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return UPoly({m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = RatFun.coerce(c)
        if c.is_zero():
            return _U_ZERO
        return UPoly({m: c * cc for m, cc in self.terms.items()})

    def __mul__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            return self.scale(o)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                c = c1 * c2
                # t is central: multiply the t-exponents straight through
                word = ((1,) * m1[1] + (2,) * m1[2] + (3,) * m1[3]
                        + (1,) * m2[1] + (2,) * m2[2] + (3,) * m2[3])
                tt = m1[0] + m2[0]
                for mono, k in _word_normal(word):
                    key = (mono[0] + tt, mono[1], mono[2], mono[3])
                    s = acc.get(key)
                    s = c * k if s is None else s + c * k
                    acc[key] = s
        return UPoly(acc)

    def __rmul__(self, o):
        if isinstance(o, (int, GaussRat, RatFun)):
            return self.scale(o)
        return NotImplemented

    def __pow__(self, n):
        out = _U_ONE
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, o):
        return self * o - o * self

    def __eq__(self, o):
        if not isinstance(o, UPoly):
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- printing --------------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def to_str(self):
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v in range(4):
                if m[v] == 1:
                    factors.append(GENS[v])
                elif m[v] > 1:
                    factors.append(f"{GENS[v]}^{m[v]}")
            cs = c.to_str()
            if factors:
                if c == RatFun.one():
                    s = "*".join(factors)
                elif c == -RatFun.one():
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
        return f"UPoly({self.to_str()})"

    __str__ = to_str


_U_ZERO = UPoly({})
_U_ONE = UPoly({(0, 0, 0, 0): _RF_ONE})


def pbw_normalize(word):
    """Normal form of a product of generators given as names, e.g. "yx"."""
    letters = tuple(_LETTER[w] for w in word)
    tt = sum(1 for w in letters if w == 0)
    rest = tuple(w for w in letters if w != 0)
    return UPoly({(m[0] + tt, m[1], m[2], m[3]): c
                  for m, c in _word_normal(rest)})


def u_mul(p, q):
    """Product in the enveloping algebra (bilinear PBW normalization)."""
    return p * q


def casimir():
    """Cas = x^2 + y^2 + z^2."""
    return UPoly({(0, 2, 0, 0): _RF_ONE, (0, 0, 2, 0): _RF_ONE,
                  (0, 0, 0, 2): _RF_ONE})


_I = RatFun.coerce(GR_I)


def gen_matrix_N():
    """The 2x2 generating matrix [[t - i z, -i x - y], [-i x + y, t + i z]]."""
    t = UPoly.gen("t")
    x = UPoly.gen("x")
    y = UPoly.gen("y")
    z = UPoly.gen("z")
    iz = z.scale(_I)
    ix = x.scale(_I)
    return Mat([[t - iz, -ix - y],
                [-ix + y, t + iz]])


def ch_residual():
    """N^2 - (2t + h) N + (t^2 + Cas + h t) I; zero by the quantum
    Cayley-Hamilton identity."""
    n = gen_matrix_N()
    t = UPoly.gen("t")
    h = UPoly.scalar(RF_H)
    trace_like = t.scale(RatFun.coerce(2)) + h
    det_like = t * t + casimir() + h * t
    return (n @ n) - Mat.diag(trace_like, 2, UPoly.zero()) @ n \
        + Mat.diag(det_like, 2, UPoly.zero())


def braid_residual():
    """P N1 P N1 - N1 P N1 P - h (P N1 - N1 P) over U, a 4x4 zero matrix.

    P is the flip on V (x) V and N1 = N (x) I.
    """
    n = gen_matrix_N()
    zero = UPoly.zero()
    one = UPoly.one()
    p = Mat([[one, zero, zero, zero],
             [zero, zero, one, zero],
             [zero, one, zero, zero],
             [zero, zero, zero, one]])
    # N1[(i,j),(k,l)] = N[i,k] delta[j,l], row index 2i+j
    n1 = Mat([[n[i, k] if j == l else zero
               for k in range(2) for l in range(2)]
              for i in range(2) for j in range(2)])
    pn = p @ n1
    np_ = n1 @ p
    h = UPoly.scalar(RF_H)
    return (pn @ pn) - (np_ @ np_) - (pn - np_).map(lambda e: h * e)
