"""The noncommutative Dirac monopole.

Look for a rotation-invariant magnetic field H = f(rho) (x, y, z) with
div H = 0 and rot H = 0, where both operators use the quantum partials.
The curl vanishes for every rational profile; the divergence forces a
difference equation whose rational solution deforms the classical g/r^3:

    f(rho) = g / (rho (rho^2 - hbar^2)).
"""

from ncu2.ncmaxwell import (VecField, div, monopole, monopole_pairing,
                            monopole_profile, monopole_residual,
                            radial_pairing, rot, vector_potential)
from ncu2.scalars import RF_G, RF_HBAR, RF_RHO, RatFun, limit_h0

rho, g, hb = RF_RHO, RF_G, RF_HBAR

# Any rational radial profile is curl-free:
for f in (rho ** 2, (rho * rho + 1).inv()):
    print("rot for", f, "->", rot(VecField.radial(f)).is_zero())

# The classical profile g/r^3 does NOT solve the quantum problem:
print("\nresidual for g/rho^3        :", monopole_residual(g / rho ** 3))

# ... but the deformed profile does, exactly:
prof = monopole_profile()
print("residual for the NC profile :", monopole_residual(prof))

h = monopole()
print("div H =", div(h), "   rot H =", rot(h))

# It limits back to the classical monopole:
print("\nclassical limit of the profile:",
      limit_h0(prof).to_str(("hbar", "t", "r", "g")), "  (g/r^3)")

# The distributional content: pairing H against a radial test function
# collapses to a telescoping integral on the half line and always returns
# -4 pi phi(0), the quantum image of div H = 4 pi g delta.
phi = RatFun.one() / (rho * rho + 1)
print("\ntelescoping integral of drho(rho^2) over [1,2]:",
      radial_pairing(rho ** 2, 1, 2))
print("pairing of H against 1/(1+rho^2):", monopole_pairing(phi, 1))

# Classical vector potentials quantize componentwise as right fractions;
# their curl is left alone (the needed matrix inverse is an open case).
vp = vector_potential((0, 0, 1))
print("\nA_x for n = e_z:", vp[0])
