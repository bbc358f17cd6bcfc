"""Noncommutative vector calculus and the quantum Dirac monopole.

div and rot keep their classical component formulas but act through the
quantum partial derivatives.  A spherically symmetric field f(rho)(x,y,z)
is automatically curl-free; divergence-freeness forces the difference
equation

    (rho + 2 hbar) psi(rho + hbar) = (rho - 2 hbar) psi(rho - hbar),
    psi(rho) = rho f(rho),

whose rational solution is the monopole profile g / (rho (rho^2 - hbar^2)).
The distributional statement div H = 4 pi g delta is realized only as the
radial pairing chain: the integral collapses onto the radial line, where
the telescoping rule int_a^b drho(phi) = phi(b) - phi(a) applies; no
distribution type exists here.
"""

from __future__ import annotations

from fractions import Fraction

from .aext import AElem, SkewProd, as_skew, skew_inverse
from .errors import IrregularTestFunction, NonUnitVector
from .scalars import (GaussRat, RatFun, RF_G, RF_HBAR, RF_RHO, HBAR, RHO, G,
                      drho, eval_at_rho, rho_infinity_limit, shift_rho)
from .whcalc import deriv
from .errors import DivisionByZero

__all__ = ["VecField", "div", "rot", "monopole_residual", "monopole_profile",
           "monopole", "radial_pairing", "FourPi", "monopole_pairing",
           "vector_potential"]

_AX = ("x", "y", "z")


class VecField:
    """An ordered triple of algebra elements (H_x, H_y, H_z)."""

    __slots__ = ("components",)

    def __init__(self, hx, hy, hz):
        object.__setattr__(self, "components", (hx, hy, hz))

    def __setattr__(self, name, value):
        raise AttributeError("VecField is immutable")

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, k):
        return self.components[k]

    @staticmethod
    def radial(f):
        """f(rho) * (x, y, z) for a central profile f."""
        f = RatFun.coerce(f)
        return VecField(AElem.gen("x").scale(f),
                        AElem.gen("y").scale(f),
                        AElem.gen("z").scale(f))

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __eq__(self, o):
        if not isinstance(o, VecField):
            return NotImplemented
        return self.components == o.components

    def __repr__(self):
        return f"VecField({self.components[0]}, {self.components[1]}, {self.components[2]})"


def div(h):
    """d_x(H_x) + d_y(H_y) + d_z(H_z) with quantum partials."""
    out = AElem.zero()
    for name, comp in zip(_AX, h):
        out = out + deriv(name, comp)
    return out


def rot(h):
    """The classical curl formula with quantum partials."""
    hx, hy, hz = h
    return VecField(deriv("y", hz) - deriv("z", hy),
                    deriv("z", hx) - deriv("x", hz),
                    deriv("x", hy) - deriv("y", hx))


def _require_radial(f, who):
    bad = f.variables() - {RHO, G, HBAR}
    if bad:
        raise ValueError(f"{who}: profile must be rational in rho only "
                         f"(found extra variables {sorted(bad)})")


def monopole_residual(f):
    """Left minus right side of the divergence difference equation for the
    radial profile f; zero exactly when div(f * (x,y,z)) vanishes."""
    f = RatFun.coerce(f)
    _require_radial(f, "monopole_residual")
    psi = RF_RHO * f
    two_h = RF_HBAR * 2
    return (RF_RHO + two_h) * shift_rho(psi, 1) \
        - (RF_RHO - two_h) * shift_rho(psi, -1)


def monopole_profile(gval=None):
    """g / (rho (rho^2 - hbar^2)); gval defaults to the formal symbol g."""
    gval = RF_G if gval is None else RatFun.coerce(gval)
    return gval / (RF_RHO * (RF_RHO * RF_RHO - RF_HBAR * RF_HBAR))


def monopole(gval=None):
    """The divergence-free, curl-free radial field with charge gval."""
    return VecField.radial(monopole_profile(gval))


def radial_pairing(phi, a, b):
    """The telescoping radial integral of drho(phi): phi(b) - phi(a).

    Endpoints are exact numbers; pass a=0, b="inf" for the distributional
    mode, which requires phi regular at 0 and vanishing at infinity and
    returns -phi(0).
    """
    phi = RatFun.coerce(phi)
    _require_radial(phi, "radial_pairing")
    if b == "inf":
        if a != 0:
            raise ValueError("distributional mode is the limit a->0, b->inf")
        lim = rho_infinity_limit(phi)
        if lim is None or not lim.is_zero():
            raise IrregularTestFunction(
                f"test function does not vanish at infinity: {phi}")
        try:
            at0 = eval_at_rho(phi, 0)
        except DivisionByZero as exc:
            raise IrregularTestFunction(f"pole at rho=0: {phi}") from exc
        return -at0
    try:
        va = eval_at_rho(phi, GaussRat.coerce(a))
        vb = eval_at_rho(phi, GaussRat.coerce(b))
    except DivisionByZero as exc:
        raise IrregularTestFunction(str(exc)) from exc
    return vb - va


class FourPi:
    """An exact multiple of 4*pi (the hard-coded solid-angle factor)."""

    __slots__ = ("coeff",)

    def __init__(self, coeff):
        object.__setattr__(self, "coeff", RatFun.coerce(coeff))

    def __setattr__(self, name, value):
        raise AttributeError("FourPi is immutable")

    def __eq__(self, o):
        if isinstance(o, FourPi):
            return self.coeff == o.coeff
        return NotImplemented

    def __repr__(self):
        return f"FourPi({self.coeff})"

    def __str__(self):
        c = self.coeff
        if c == RatFun.coerce(1):
            return "4*pi"
        if c == RatFun.coerce(-1):
            return "-4*pi"
        return f"({c})*4*pi"


def monopole_pairing(phi, gval=None):
    """The radial pairing of the monopole field against a test function:

        int sum_u H_u d_u(phi) dx dy dz  ->  4 pi g (phi(inf) - phi(0))
                                          =  -4 pi g phi(0).

    Reproduces the full chain: the angular average collapses the integrand
    to a central radial function, the volume normalization contributes
    rho^2, the result telescopes.  phi must be rational in rho, regular at
    0, with zero limit at infinity.
    """
    phi = RatFun.coerce(phi)
    _require_radial(phi, "monopole_pairing")
    gval = RF_G if gval is None else RatFun.coerce(gval)
    h = monopole(gval)
    integrand = AElem.zero()
    for name, comp in zip(_AX, h):
        integrand = integrand + comp * deriv(name, AElem.scalar(phi))
    if not integrand.is_central():
        raise AssertionError("monopole pairing integrand must be central")
    radial = integrand.central_part() * RF_RHO * RF_RHO
    if radial != gval * drho(phi):
        raise AssertionError("pairing chain failed to telescope")
    return FourPi(gval * radial_pairing(phi, 0, "inf"))


def vector_potential(n, gval=None):
    """Quantized classical vector potential for the monopole:

        A = (g/r) ((x,y,z) x n) / (r - (x,y,z).n),

    componentwise as right fractions.  n must be an exact unit vector;
    the curl of the result is deliberately not computed (the matrix
    theta_hat(rho - n.(x,y,z)) has no explicit inverse here).
    """
    n = tuple(GaussRat.coerce(Fraction(v) if not isinstance(v, GaussRat) else v)
              for v in n)
    norm = n[0] * n[0] + n[1] * n[1] + n[2] * n[2]
    if norm != GaussRat(1):
        raise NonUnitVector(f"|n|^2 = {norm}, expected 1")
    gval = RF_G if gval is None else RatFun.coerce(gval)
    axes = tuple(AElem.gen(a) for a in _AX)
    cross = (
        axes[1].scale(RatFun.coerce(n[2])) - axes[2].scale(RatFun.coerce(n[1])),
        axes[2].scale(RatFun.coerce(n[0])) - axes[0].scale(RatFun.coerce(n[2])),
        axes[0].scale(RatFun.coerce(n[1])) - axes[1].scale(RatFun.coerce(n[0])),
    )
    dot = AElem.zero()
    for nk, ax in zip(n, axes):
        dot = dot + ax.scale(RatFun.coerce(nk))
    denom = AElem.scalar(RF_RHO) - dot
    inv = skew_inverse(as_skew(denom))
    g_over_r = gval / RF_RHO
    return tuple(SkewProd((as_skew(c.scale(g_over_r)), inv)) for c in cross)
