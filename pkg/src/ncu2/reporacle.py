"""Numeric oracle: spin-j matrix representations of the generators.

Every symbolic identity in this package can be replayed on complex
matrices.  A representation sends x, y, z to scaled angular-momentum
matrices satisfying [x,y] = h z (cyclic) exactly (up to floating point),
t to a scalar, and the quantum radius to the principal square root of
the Casimir scalar plus hbar^2 (branch recorded).  Characteristic
tolerances sit far above machine epsilon, so a numeric failure flags a
real bug rather than roundoff.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .aext import AElem, SkewAtom, SkewExpr, SkewInv, SkewProd, SkewSum
from .errors import RelationViolation, SingularInverse
from .matrices import Mat
from .scalars import RatFun
from .upbw import UPoly

__all__ = ["Rep", "ScalarPoint", "make_rep", "default_reps",
           "certification_reps", "rep_eval", "skew_numeric_eval",
           "check_identity", "CheckReport", "certify_invertible"]


class Rep:
    """A concrete matrix representation plus the scalar parameters."""

    __slots__ = ("j", "dim", "t0", "hval", "hbar", "rho", "gval",
                 "mats", "rho_branch")

    def __init__(self, j, t0, hval, gval=1.0):
        j = Fraction(j)
        dim = int(2 * j) + 1
        if Fraction(2 * j) != int(2 * j):
            raise ValueError("j must be a half-integer")
        if isinstance(hval, str):
            hval = Fraction(hval)
        if isinstance(t0, str):
            t0 = Fraction(t0)
        if hval == 0:
            raise ValueError("hval must be nonzero")
        ms = [j - k for k in range(dim)]  # weights, descending
        jp = np.zeros((dim, dim), dtype=complex)
        for k in range(1, dim):
            m = ms[k]
            jp[k - 1, k] = np.sqrt(float(j * (j + 1) - m * (m + 1)))
        jm = jp.conj().T
        j1 = (jp + jm) / 2
        j2 = (jp - jm) / 2j
        j3 = np.diag([complex(m) for m in ms])
        hval = complex(hval)
        x = 1j * hval * j1
        y = -1j * hval * j2
        z = 1j * hval * j3
        t = complex(t0) * np.eye(dim, dtype=complex)

        scale = max(abs(hval), 1.0) ** 2 * (float(j) + 1) ** 2
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            err = np.max(np.abs(a @ b - b @ a - hval * c))
            if err > 1e-12 * scale:
                raise RelationViolation(f"bracket residual {err}")

        hbar = hval / 2j
        cas = x @ x + y @ y + z @ z
        cas_scalar = np.trace(cas) / dim
        if np.max(np.abs(cas - cas_scalar * np.eye(dim))) > 1e-10 * scale:
            raise RelationViolation("Casimir image is not scalar")
        rho = complex(np.sqrt(complex(cas_scalar + hbar ** 2)))

        object.__setattr__(self, "j", j)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "t0", complex(t0))
        object.__setattr__(self, "hval", hval)
        object.__setattr__(self, "hbar", hbar)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "gval", complex(gval))
        object.__setattr__(self, "mats", {"t": t, "x": x, "y": y, "z": z})
        object.__setattr__(self, "rho_branch",
                           "principal" if rho.imag >= 0 else "negative")

    def __setattr__(self, name, value):
        raise AttributeError("Rep is immutable")

    def scalar_values(self):
        """(hbar, t, rho, g) numeric values in the Poly variable order."""
        return (self.hbar, self.t0, self.rho, self.gval)

    def __repr__(self):
        return (f"Rep(j={self.j}, t0={self.t0}, h={self.hval}, "
                f"rho={self.rho:.6g} [{self.rho_branch}])")


def make_rep(j, t0, hval, gval=1.0):
    return Rep(j, t0, hval, gval)


class ScalarPoint:
    """A commutative evaluation point: every generator becomes a 1x1 matrix.

    Not a representation of the bracket relations; used to sample classical
    limits of expressions whose ingredients commute (e.g. entries of a
    single generator's theta matrix as hbar -> 0).
    """

    __slots__ = ("dim", "t0", "hbar", "rho", "gval", "mats")

    def __init__(self, x0, y0, z0, t0, hbar, gval=1.0):
        object.__setattr__(self, "dim", 1)
        object.__setattr__(self, "t0", complex(t0))
        object.__setattr__(self, "hbar", complex(hbar))
        rho = complex(np.sqrt(complex(x0) ** 2 + complex(y0) ** 2
                              + complex(z0) ** 2 + complex(hbar) ** 2))
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "gval", complex(gval))
        object.__setattr__(self, "mats", {
            "t": np.array([[complex(t0)]]),
            "x": np.array([[complex(x0)]]),
            "y": np.array([[complex(y0)]]),
            "z": np.array([[complex(z0)]]),
        })

    def __setattr__(self, name, value):
        raise AttributeError("ScalarPoint is immutable")

    def scalar_values(self):
        return (self.hbar, self.t0, self.rho, self.gval)


_DEFAULT = None
_CERT = None


def default_reps():
    """The default test grid: j in {1/2, 1, 3/2}, h in {1, 1/3, i/2}, t0 in {0, 1}."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = tuple(make_rep(j, t0, hval)
                         for j in (Fraction(1, 2), 1, Fraction(3, 2))
                         for hval in (1, Fraction(1, 3), 0.5j)
                         for t0 in (0, 1))
    return _DEFAULT


def certification_reps():
    """Grid used to certify skew-field inverse nodes.

    Mixes half-integer and integer spins: generator letters are invertible
    exactly on half-integer spins (spectrum avoids 0), while quantities
    like x^2 - hbar^2 are invertible exactly on integer spins (spectrum
    avoids +-h/2).  An element nonzero in the skew field is expected to be
    invertible somewhere on this grid.
    """
    global _CERT
    if _CERT is None:
        _CERT = tuple(make_rep(j, 1, hval)
                      for j in (Fraction(1, 2), 1, Fraction(3, 2), 2)
                      for hval in (1, Fraction(1, 3)))
    return _CERT


def _eval_scalar(f, rep):
    return f.eval_complex(rep.scalar_values())


def _mono_matrix(rep, exps, names):
    out = np.eye(rep.dim, dtype=complex)
    for e, name in zip(exps, names):
        m = rep.mats[name]
        for _ in range(e):
            out = out @ m
    return out


def rep_eval(e, rep):
    """Numeric image of an algebra-side object in the representation.

    Supports scalars (RatFun), UPoly, AElem, SkewExpr trees, matrices of
    these (as block matrices), and tuples/lists componentwise.
    """
    if isinstance(e, RatFun):
        return _eval_scalar(e, rep) * np.eye(rep.dim, dtype=complex)
    if isinstance(e, UPoly):
        out = np.zeros((rep.dim, rep.dim), dtype=complex)
        for mono, c in e.terms.items():
            out += _eval_scalar(c, rep) * _mono_matrix(rep, mono, "txyz")
        return out
    if isinstance(e, AElem):
        out = np.zeros((rep.dim, rep.dim), dtype=complex)
        for mono, c in e.terms.items():
            out += _eval_scalar(c, rep) * _mono_matrix(rep, mono, "xyz")
        return out
    if isinstance(e, SkewAtom):
        return rep_eval(e.elem, rep)
    if isinstance(e, SkewSum):
        out = None
        for p in e.parts:
            v = rep_eval(p, rep)
            out = v if out is None else out + v
        return out
    if isinstance(e, SkewProd):
        out = None
        for p in e.parts:
            v = rep_eval(p, rep)
            out = v if out is None else out @ v
        return out
    if isinstance(e, SkewInv):
        m = rep_eval(e.child, rep)
        return _safe_inv(m)
    if isinstance(e, Mat):
        blocks = [[rep_eval(x, rep) for x in row] for row in e.rows]
        return np.block(blocks)
    if isinstance(e, (tuple, list)):
        return tuple(rep_eval(x, rep) for x in e)
    raise TypeError(f"cannot evaluate {type(e).__name__} numerically")


def _safe_inv(m):
    if not np.all(np.isfinite(m)):
        raise SingularInverse("matrix contains non-finite entries")
    try:
        cond = np.linalg.cond(m)
    except np.linalg.LinAlgError as exc:
        raise SingularInverse(str(exc)) from exc
    if not np.isfinite(cond) or cond > 1e12:
        raise SingularInverse(f"condition number {cond:.3g}")
    return np.linalg.inv(m)


class CheckReport:
    """Outcome of a numeric identity check over several representations."""

    __slots__ = ("passed", "max_err", "evaluated", "skipped", "tol")

    def __init__(self, passed, max_err, evaluated, skipped, tol):
        self.passed = passed
        self.max_err = max_err
        self.evaluated = evaluated
        self.skipped = skipped
        self.tol = tol

    def __bool__(self):
        return self.passed

    def __repr__(self):
        state = "pass" if self.passed else "FAIL"
        return (f"CheckReport({state}, max_err={self.max_err:.3g}, "
                f"evaluated={self.evaluated}, skipped={self.skipped}, "
                f"tol={self.tol:g})")


def check_identity(lhs, rhs, reps=None, tol=1e-10):
    """Max-norm comparison of two evaluable objects across representations.

    Representations where either side has a genuine pole (a vanishing
    denominator at the sampled parameters) are skipped; the check passes
    when every evaluated representation agrees and at least one evaluated.
    """
    if reps is None:
        reps = default_reps()
    max_err = 0.0
    evaluated = 0
    skipped = 0
    for rep in reps:
        try:
            lv = rep_eval(lhs, rep)
            rv = rep_eval(rhs, rep)
        except (ZeroDivisionError, SingularInverse):
            skipped += 1
            continue
        if isinstance(lv, tuple):
            err = max(float(np.max(np.abs(a - b))) for a, b in zip(lv, rv))
        else:
            err = float(np.max(np.abs(lv - rv)))
        max_err = max(max_err, err)
        evaluated += 1
    passed = evaluated > 0 and max_err <= tol
    return CheckReport(passed, max_err, evaluated, skipped, tol)


def skew_numeric_eval(e, rep):
    """Numeric image of a skew-field expression (alias of rep_eval)."""
    return rep_eval(e, rep)


def certify_invertible(e):
    """Require a skew expression to be numerically invertible in at least
    one certification representation."""
    failures = []
    for rep in certification_reps():
        try:
            m = rep_eval(e, rep)
            _safe_inv(m)
            return True
        except (SingularInverse, ZeroDivisionError) as exc:
            failures.append(str(exc))
    raise SingularInverse(
        "operand not invertible in any sampled representation: "
        + "; ".join(failures))
