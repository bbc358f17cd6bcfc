"""The multiplicative theta-matrix calculus.

theta_hat sends an algebra element a to a 4x4 matrix over A whose first
column stores i*hbar times the four partial derivatives

    (d~_t(a), d_x(a), d_y(a), d_z(a)),

and which is multiplicative: theta_hat(a*b) = theta_hat(a) theta_hat(b),
theta_hat(1) = I.  Inverting theta_hat(a) defines the derivatives of a^-1;
inversion is supported exactly where it can be carried out explicitly:
inside the commutative subalgebra K(t,rho)[A] and for matrices with
pairwise commuting entries.  Everything else reports CannotInvert.

Sign convention: the antisymmetric matrix A used here is the negative of a
naive reading of the x/y/z pattern; this choice is the one consistent with
the explicit radius matrix, the closed form for theta_hat(rho^p) and the
quadratic relation A^2 = (hbar^2 - rho^2) I - 2 i hbar A simultaneously.
"""

from __future__ import annotations

from functools import lru_cache

from .aext import AElem, SkewAtom, SkewExpr, SkewInv, SkewProd, SkewSum, as_skew, skew_inverse
from .errors import (CannotInvert, NonCommutingEntries, NonInvertibleCentral,
                     SingularDeterminant)
from .matrices import Mat
from .scalars import (GR_I, GaussRat, RatFun, RF_HBAR, RF_IH, RF_RHO,
                      RF_T, RF_TWO_OVER_H, shift_rho, shift_t_ihbar,
                      theta_central_pair)

__all__ = ["ThetaMat", "A_PATTERN", "a_matrix", "theta_gen", "theta_central",
           "theta_hat", "deriv_extract", "theta_hat_rho_power",
           "central_pair_of_matrix", "central_inverse", "commuting_inverse",
           "theta_det_commuting", "quaternion_norm_det", "theta_invert",
           "deriv_of_inverse"]

ThetaMat = Mat  # 4x4 with AElem (or SkewExpr) entries

_ONE = AElem.one()
_ZERO = AElem.zero()
_RF_ONE = RatFun.one()

# A[i][j] as (sign, axis) with axes 0=x, 1=y, 2=z; None on the diagonal.
A_PATTERN = (
    (None, (+1, 0), (+1, 1), (+1, 2)),
    ((-1, 0), None, (+1, 2), (-1, 1)),
    ((-1, 1), (-1, 2), None, (+1, 0)),
    ((-1, 2), (+1, 1), (-1, 0), None),
)

# off-diagonal patterns of the explicit generator images:
# theta_hat(v) = v*I + i*hbar*M(v)
_M_X = ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0))
_M_Y = ((0, 0, -1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, -1, 0, 0))
_M_Z = ((0, 0, 0, -1), (0, 0, -1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
_M_BY_AXIS = {"x": _M_X, "y": _M_Y, "z": _M_Z}


def _aelem_axis(axis, coeff):
    m = [0, 0, 0]
    m[axis] = 1
    return AElem({tuple(m): coeff})


def a_matrix():
    """The antisymmetric matrix A with A^2 = (hbar^2-rho^2) I - 2 i hbar A."""
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            pat = A_PATTERN[i][j]
            if pat is None:
                row.append(_ZERO)
            else:
                sign, axis = pat
                row.append(_aelem_axis(axis, _RF_ONE if sign > 0 else -_RF_ONE))
        rows.append(row)
    return Mat(rows)


@lru_cache(maxsize=None)
def theta_gen(name):
    """theta_hat of a generator letter x, y or z (explicit 4x4 image)."""
    pat = _M_BY_AXIS[name]
    g = AElem.gen(name)
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            e = _ZERO
            if i == j:
                e = e + g
            if pat[i][j]:
                e = e + AElem.scalar(RF_IH if pat[i][j] > 0 else -RF_IH)
            row.append(e)
        rows.append(row)
    return Mat(rows)


def theta_central(f):
    """theta_hat of a central function: alpha*I + beta*A in K(t,rho)[A]."""
    alpha, beta = theta_central_pair(f)
    return _central_matrix(alpha, beta)


def _central_matrix(alpha, beta):
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            e = _ZERO
            if i == j and not alpha.is_zero():
                e = e + AElem.scalar(alpha)
            pat = A_PATTERN[i][j]
            if pat is not None and not beta.is_zero():
                sign, axis = pat
                e = e + _aelem_axis(axis, beta if sign > 0 else -beta)
            row.append(e)
        rows.append(row)
    return Mat(rows)


@lru_cache(maxsize=None)
def _theta_mono(mono):
    """theta_hat of the basis monomial x^a y^b z^c."""
    out = None
    for axis, name in enumerate(("x", "y", "z")):
        for _ in range(mono[axis]):
            m = theta_gen(name)
            out = m if out is None else out @ m
    if out is None:
        return Mat.diag(_ONE, 4, _ZERO)
    return out


def theta_hat(a):
    """theta_hat of a canonical-form element, extended multiplicatively."""
    if isinstance(a, RatFun):
        a = AElem.scalar(a)
    total = None
    for mono, coeff in a.terms.items():
        part = _theta_mono(mono)
        if not coeff.is_one():
            part = theta_central(coeff) @ part
        total = part if total is None else total + part
    if total is None:
        return Mat.diag(_ZERO, 4, _ZERO)
    return total


def deriv_extract(m):
    """Read (d~_t(a), d_x(a), d_y(a), d_z(a)) off the first column of
    theta_hat(a), dividing out the i*hbar prefactor."""
    col = m.col(0)
    out = []
    for e in col:
        if isinstance(e, AElem):
            out.append(e.scale(RF_TWO_OVER_H))
        else:
            out.append(SkewProd((as_skew(AElem.scalar(RF_TWO_OVER_H)), e)))
    return tuple(out)


def theta_hat_rho_power(p):
    """Closed form for theta_hat(rho^p):

        ((rho+hbar)^(p+1) + (rho-hbar)^(p+1)) / (2 rho) * I
        - i ((rho+hbar)^p - (rho-hbar)^p) / (2 rho) * A
    """
    rp = RF_RHO + RF_HBAR
    rm = RF_RHO - RF_HBAR
    two_rho = RF_RHO * 2
    alpha = (rp ** (p + 1) + rm ** (p + 1)) / two_rho
    beta = -RatFun.coerce(GR_I) * (rp ** p - rm ** p) / two_rho
    return _central_matrix(alpha, beta)


def central_pair_of_matrix(m):
    """Recover (alpha, beta) from a matrix of the form alpha*I + beta*A.

    Raises NonInvertibleCentral if the matrix is not of that shape.
    """
    alpha = m[0, 0].central_part()
    e01 = m[0, 1]
    beta = e01.terms.get((1, 0, 0), RatFun.zero())
    if _central_matrix(alpha, beta) != m:
        raise NonInvertibleCentral("matrix is not of the form alpha*I + beta*A")
    return alpha, beta


def central_inverse(m):
    """Exact inverse of alpha*I + beta*A inside K(t,rho)[A].

    Uses A^2 = (hbar^2-rho^2) I - 2 i hbar A to reduce inversion to a
    2x2 central linear solve.
    """
    alpha, beta = central_pair_of_matrix(m) if isinstance(m, Mat) else m
    hb = RF_HBAR
    i2h = RatFun.coerce(GaussRat(0, 2)) * hb
    det = alpha * alpha - i2h * alpha * beta \
        - beta * beta * (hb * hb - RF_RHO * RF_RHO)
    if det.is_zero():
        raise NonInvertibleCentral("central 2x2 system is singular")
    gamma = (alpha - i2h * beta) / det
    delta = -beta / det
    return _central_matrix(gamma, delta)


def _entries_commute(m):
    ents = [e for row in m.rows for e in row]
    for i in range(len(ents)):
        for j in range(i + 1, len(ents)):
            a, b = ents[i], ents[j]
            if a * b != b * a:
                return False
    return True


_PERMS4 = []


def _perms4():
    if not _PERMS4:
        from itertools import permutations
        for p in permutations(range(4)):
            sign = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if p[i] > p[j]:
                        sign = -sign
            _PERMS4.append((p, sign))
    return _PERMS4


def theta_det_commuting(m, checked=False):
    """Determinant by direct Leibniz expansion; valid for matrices whose
    entries pairwise commute."""
    if not checked and not _entries_commute(m):
        raise NonCommutingEntries("entries do not pairwise commute")
    det = AElem.zero()
    for p, sign in _perms4():
        prod = m[0, p[0]] * m[1, p[1]] * m[2, p[2]] * m[3, p[3]]
        det = det + prod if sign > 0 else det - prod
    return det


def quaternion_norm_det(derivs):
    """hbar^4 (d~t^2 + dx^2 + dy^2 + dz^2)^2 from the extracted derivatives.

    The hbar^4 prefactor is the one consistent with direct expansion and
    with det theta(x) = (x^2 - hbar^2)^2; a -hbar normalization is not.
    """
    s = AElem.zero()
    for d in derivs:
        s = s + d * d
    return (s * s).scale(RF_HBAR ** 4)


def _minor_det3(m, rows, cols):
    from itertools import permutations
    det = AElem.zero()
    for p in permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    sign = -sign
        prod = m[rows[0], cols[p[0]]] * m[rows[1], cols[p[1]]] * m[rows[2], cols[p[2]]]
        det = det + prod if sign > 0 else det - prod
    return det


def commuting_inverse(m):
    """Adjugate-over-determinant inverse for pairwise commuting entries.

    Returns a matrix of SkewExpr values: cofactor * det^-1, with the
    determinant inverse kept as a lazy skew-field node.
    """
    if not _entries_commute(m):
        raise NonCommutingEntries("entries do not pairwise commute")
    det = theta_det_commuting(m, checked=True)
    if det.is_zero():
        raise SingularDeterminant("determinant is exactly zero")
    if det.is_central():
        det_inv = SkewAtom(AElem.scalar(RatFun.one() / det.central_part()))
    else:
        det_inv = skew_inverse(as_skew(det))
    idx = (0, 1, 2, 3)
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            rs = tuple(r for r in idx if r != j)
            cs = tuple(c for c in idx if c != i)
            cof = _minor_det3(m, rs, cs)
            if (i + j) % 2:
                cof = -cof
            if cof.is_zero():
                row.append(SkewAtom(AElem.zero()))
            else:
                row.append(SkewProd((as_skew(cof), det_inv)))
        rows.append(row)
    return Mat(rows)


def theta_invert(a):
    """Inverse of theta_hat(a), defining theta_hat(a^-1) := theta_hat(a)^-1.

    Dispatch: central-subalgebra form, then commuting entries, then a
    CannotInvert mirroring the genuinely open cases.
    """
    if isinstance(a, RatFun):
        a = AElem.scalar(a)
    if a.is_zero():
        raise CannotInvert("zero element")
    if a.is_central():
        return central_inverse(theta_central(a.central_part()))
    m = theta_hat(a)
    if _entries_commute(m):
        return commuting_inverse(m)
    raise CannotInvert(
        "entries of theta_hat(a) do not commute and the element is not "
        "central; explicit inversion of this case is unresolved")


def deriv_of_inverse(a):
    """The four derivatives of a^-1, read off the first column of
    theta_hat(a)^-1.  Central a yields exact AElem values; the commuting
    case yields lazy skew expressions (cofactor times det^-1)."""
    return deriv_extract(theta_invert(a))
