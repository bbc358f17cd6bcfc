"""The multiplicative theta-matrix calculus and derivatives of inverses.

theta_hat(a) is a 4x4 matrix over the algebra whose first column holds
i*hbar times the four derivatives of a, and theta_hat(ab) =
theta_hat(a) theta_hat(b).  Setting theta_hat(a^-1) := theta_hat(a)^-1
extends the derivatives to inverses - exactly where the matrix can be
inverted explicitly.
"""

from ncu2 import AElem
from ncu2.thetamat import (a_matrix, deriv_of_inverse, theta_det_commuting,
                           theta_gen, theta_hat, theta_hat_rho_power,
                           theta_invert)
from ncu2.scalars import RF_HBAR, RF_RHO
from ncu2.errors import CannotInvert

x, y, z = (AElem.gen(n) for n in "xyz")
rho = RF_RHO

print("theta(x) =")
for row in theta_gen("x").rows:
    print("   [", ", ".join(str(e) for e in row), "]")

# Multiplicativity in action:
lhs = theta_hat(x * y)
rhs = theta_gen("x") @ theta_gen("y")
print("\ntheta(xy) == theta(x) theta(y):", (lhs - rhs).is_zero())

# The quantum radius rho (rho^2 = Cas + hbar^2) has a closed-form theta
# image  alpha I + beta A  built on the antisymmetric matrix A with
# A^2 = (hbar^2 - rho^2) I - 2 i hbar A:
print("\ntheta(rho) =")
for row in theta_hat_rho_power(1).rows:
    print("   [", ", ".join(str(e) for e in row), "]")

ths = {p: theta_hat_rho_power(p) for p in (-2, -1, 1, 2)}
print("\ngroup law theta(rho) theta(rho^-1) == I:",
      (ths[1] @ ths[-1] - theta_hat_rho_power(0)).is_zero())

# Derivatives of rho^-1, read off the inverted matrix:
dt, dx, dy, dz = deriv_of_inverse(AElem.scalar(rho))
print("\nd_x(rho^-1)     =", dx)
print("dtilde(rho^-1)  =", dt)

# Generator letters invert through the commuting-entry adjugate:
print("\ndet theta(x) =", theta_det_commuting(theta_gen("x")),
      " (= (x^2 - hbar^2)^2)")
inv_x = theta_invert(x)
print("theta(x)^-1 [0,0] =", inv_x[0, 0])

# The case the calculus cannot resolve explicitly:
try:
    theta_invert(AElem.scalar(rho) - x)
except CannotInvert as e:
    print("\ntheta_invert(rho - x):", e)
