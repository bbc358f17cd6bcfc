"""Quantization with a noncommutative configuration space.

Full symmetrization maps the commutative polynomial algebra bijectively
(degree by degree) onto the quantized one; pulling the noncommutative
product back gives an associative star product deforming the pointwise one.
Radial functions quantize by r -> rho, fractions as right fractions, and
differential operators by swapping in the quantum partials.
"""

from ncu2.quantmap import (ClassForm, ClassOp, ClassPoly, alpha_central,
                           alpha_form, alpha_fraction, alpha_inverse,
                           alpha_operator, alpha_poly, classical_d,
                           star_product)
from ncu2.whcalc import d_op
from ncu2.scalars import RF_G, RF_RHO, limit_h0, RF_H

t, x, y, z = (ClassPoly.gen(n) for n in "txyz")

print("alpha(x y)      =", alpha_poly(x * y))
print("alpha(x y z)    =", alpha_poly(x * y * z))
print("round trip      =", alpha_inverse(alpha_poly(x * y * z)) == x * y * z)

# The star product recovers the bracket:
comm = star_product(x, y) - star_product(y, x)
print("\nx * y - y * x   =", comm, "  (= h z)")

sq = star_product(x, x)
print("x * x           =", sq)

# Radial data: the classical monopole profile g/r^3 becomes g/rho^3.
prof = alpha_central(RF_G / RF_RHO ** 3)
print("\nalpha(g/r^3)    =", prof)

# A right fraction with a noncommutative denominator stays a lazy tree:
print("alpha(1/x)      =", alpha_fraction(ClassPoly.one(), x))

# Operators: quantize coefficients, replace partials by quantum partials.
op = alpha_operator(ClassOp([(x, None, (0, 0, 1, 0))]))  # x d_y
from ncu2.aext import a_from_u
a = a_from_u(alpha_poly(y * z))
print("\n(x d_y) acting on alpha(yz):", op.apply(a))

# Quantization does not intertwine the de Rham operators: for omega = x^2,
# d(alpha(omega)) acquires a dt-term with coefficient -h/2 that
# alpha(d omega) lacks.
w = ClassForm.of(0, x * x)
print("\nalpha(d(x^2)) =", alpha_form(classical_d(w)))
print("d(alpha(x^2)) =", d_op(alpha_form(w)))
