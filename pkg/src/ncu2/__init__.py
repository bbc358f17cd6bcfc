"""Exact noncommutative differential calculus on a quantized u(2) algebra.

Modules:

* scalars    -- exact Gaussian-rational / rational-function arithmetic
* upbw       -- the enveloping algebra in PBW normal form, Cayley-Hamilton
* aext       -- the central extension by the quantum radius; skew trees
* whcalc     -- permutation relations, quantum derivatives, de Rham complex
* thetamat   -- the multiplicative theta-matrix calculus and its inverses
* quantmap   -- symmetrization quantization and the star product
* ncmaxwell  -- noncommutative div/rot and the quantum Dirac monopole
* reporacle  -- numeric spin-j matrix oracle cross-checking everything
* parser/cli -- expression grammar and the `ncu2` command line tool
"""

__version__ = "0.1.0"

from .scalars import (GaussRat, HRat, CenterFun, RatFun, Poly, cf_arith,
                      shift_rho, drho, limit_h0, specialize_hbar)
from .upbw import (UPoly, pbw_normalize, u_mul, gen_matrix_N, ch_residual,
                   braid_residual, casimir)
from .aext import (AElem, ClassicalElem, a_from_u, a_mul, a_classical_limit,
                   SkewExpr, skew_inverse, as_skew)
from .whcalc import (DPoly, WHElem, sigma_push, counit, deriv, deriv_central,
                     coprod, deriv_via_coprod, circ, h_leibniz, Form, d_op)
from .thetamat import (theta_hat, deriv_extract, theta_hat_rho_power,
                       central_inverse, commuting_inverse, theta_det_commuting,
                       theta_invert, deriv_of_inverse, a_matrix)
from .quantmap import (ClassPoly, ClassOp, alpha_poly, alpha_inverse,
                       alpha_central, alpha_fraction, alpha_operator,
                       star_product, alpha_form)
from .ncmaxwell import (VecField, div, rot, monopole_residual, monopole,
                        monopole_profile, radial_pairing, monopole_pairing,
                        vector_potential, FourPi)
from .reporacle import (Rep, ScalarPoint, make_rep, default_reps, rep_eval,
                        check_identity)
from .parser import parse
