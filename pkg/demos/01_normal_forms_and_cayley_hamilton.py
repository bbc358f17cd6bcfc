"""Normal forms in the quantized u(2) algebra and the Cayley-Hamilton identity.

The algebra has generators t, x, y, z with [x,y] = hz (cyclic) and central t,
where h = 2*i*hbar.  Every element has a unique normal form as a combination
of ordered monomials t^a x^b y^c z^d.
"""

from ncu2 import UPoly, pbw_normalize, gen_matrix_N, ch_residual, braid_residual, casimir
from ncu2.scalars import RF_H

t, x, y, z = (UPoly.gen(n) for n in "txyz")
h = UPoly.scalar(RF_H)

# Reordering a word picks up bracket corrections:
print("yx  ->", pbw_normalize("yx"))       # x*y - h z
print("zy  ->", pbw_normalize("zy"))       # y*z - h x
print("zyx ->", pbw_normalize("zyx"))

# The defining relations, as products:
print("\n[y, z] == h x :", y * z - z * y == h * x)
print("[x, y] == h z :", x * y - y * x == h * z)

# t and the quadratic Casimir x^2 + y^2 + z^2 are central:
cas = casimir()
p = x * y * z + t * x
print("Cas central   :", (cas * p - p * cas).is_zero())

# The generating matrix packs the four generators into 2x2 form:
n = gen_matrix_N()
print("\nN =")
for row in n.rows:
    print("   [", ", ".join(str(e) for e in row), "]")

# It satisfies a quantum Cayley-Hamilton identity with central coefficients:
#   N^2 - (2t + h) N + (t^2 + Cas + h t) I = 0
print("\nCayley-Hamilton residual is zero:", ch_residual().is_zero())

# The same relations in braid form: P N1 P N1 - N1 P N1 P = h (P N1 - N1 P)
print("braid-form residual is zero:     ", braid_residual().is_zero())
