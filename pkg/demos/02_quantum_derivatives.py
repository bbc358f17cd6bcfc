"""Quantum partial derivatives: three equivalent evaluators.

The derivatives d_t, d_x, d_y, d_z act on the algebra through permutation
relations: push the derivative to the right of an element, then apply the
counit.  They reduce to ordinary partials at hbar = 0, but differ at higher
degree: famously d_x(yz) = h/2 even though yz "contains no x".
"""

from ncu2 import AElem, DPoly, sigma_push, deriv, deriv_via_coprod, h_leibniz, circ
from ncu2.thetamat import theta_hat, deriv_extract
from ncu2.scalars import RF_IH

x, y, z = (AElem.gen(n) for n in "xyz")

# The permutation step, explicitly: sigma(d_x (x) yz) normal-orders to
#   yz d_x - (h/2) y d_y + (h/2) z d_z + (h/2)^2 ttilde
w = sigma_push(DPoly.gen("x"), y * z)
print("sigma(d_x (x) yz), shifted basis:")
for (am, dm), c in sorted(w.tilde_terms().items()):
    print("   ", am, "(x)", dm, " coeff", c)

# Applying the counit leaves the derivative:
print("\nd_x(yz) =", deriv("x", y * z), "   (= h/2)")
print("d_x(zy) =", deriv("x", z * y), "   (= -h/2)")
print("consistency with yz - zy = hx:",
      deriv("x", y * z - z * y) == deriv("x", x.scale(RF_IH * 2)))

# Evaluator 2: the coproduct Leibniz rule computes d(ab) from all four
# derivatives of the factors.
print("\ncoproduct route d_x(y*z) =", deriv_via_coprod("x", y, z))

# Evaluator 3: the first column of the theta matrix.
dt, dx, dy, dz = deriv_extract(theta_hat(y * z))
print("theta-column route d_x(yz) =", dx)

# The h-Leibniz rule on generators: d_u(ab) = d_u(a) b + a d_u(b) + h d_u(a o b)
print("\nx o y =", circ("x", "y"), "  (z/2)")
print("h-Leibniz d_x(y z) =", h_leibniz("x", "y", "z"))

# A genuinely quantum effect: the t-derivative sees spatial squares.
print("\nd_t(x^2) =", deriv("t", x * x), "  (classically zero)")
print("d_x(x^2) =", deriv("x", x * x))
