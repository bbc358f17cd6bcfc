from fractions import Fraction

import numpy as np
import pytest

from ncu2.aext import AElem, as_skew, skew_inverse
from ncu2.errors import RelationViolation, SingularInverse
from ncu2.reporacle import (CheckReport, ScalarPoint, certification_reps,
                            check_identity, default_reps, make_rep, rep_eval)
from ncu2.scalars import GaussRat, RatFun, RF_H, RF_RHO
from ncu2.upbw import UPoly, casimir

t, x, y, z = (UPoly.gen(n) for n in "txyz")
h = UPoly.scalar(RF_H)


class TestMakeRep:
    def test_fundamental_matrices(self):
        r = make_rep(Fraction(1, 2), 0.5, 1)
        assert np.allclose(r.mats["t"], 0.5 * np.eye(2))
        assert np.allclose(r.mats["x"], 0.5j * np.array([[0, 1], [1, 0]]))
        assert np.allclose(r.mats["y"], 0.5 * np.array([[0, -1], [1, 0]]))
        assert np.allclose(r.mats["z"], 0.5j * np.array([[1, 0], [0, -1]]))

    def test_bracket_relations(self):
        for rep in default_reps():
            for a, b, c in (("x", "y", "z"), ("y", "z", "x"), ("z", "x", "y")):
                ma, mb, mc = rep.mats[a], rep.mats[b], rep.mats[c]
                err = np.max(np.abs(ma @ mb - mb @ ma - rep.hval * mc))
                assert err < 1e-12 * max(1.0, abs(rep.hval) ** 2 * rep.dim ** 2)

    def test_rho_branch(self):
        rep = make_rep(Fraction(1, 2), 0, 1)
        cas = rep_eval(casimir(), rep)
        assert abs(rep.rho ** 2 - (cas[0, 0] + rep.hbar ** 2)) < 1e-12
        assert rep.rho_branch in ("principal", "negative")

    def test_dimension(self):
        assert make_rep(Fraction(3, 2), 0, 1).dim == 4
        assert make_rep(2, 0, 1).dim == 5

    def test_bad_spin(self):
        with pytest.raises(ValueError):
            make_rep(Fraction(1, 3), 0, 1)

    def test_zero_h_rejected(self):
        with pytest.raises(ValueError):
            make_rep(1, 0, 0)


class TestRepEval:
    def test_defining_relation(self):
        rep = make_rep(1, 1, Fraction(1, 3))
        m = rep_eval(x * y - y * x - h * z, rep)
        assert np.max(np.abs(m)) < 1e-13

    def test_inverse_roundtrip(self):
        rep = make_rep(Fraction(1, 2), 1, 1)
        inv_x = skew_inverse(as_skew(AElem.gen("x")))
        m = rep_eval(as_skew(AElem.gen("x")) * inv_x, rep)
        assert np.allclose(m, np.eye(2))

    def test_singular_inverse_detected(self):
        rep = make_rep(1, 1, 1)  # integer spin: x has eigenvalue 0
        inv_x = skew_inverse(as_skew(AElem.gen("x")))
        with pytest.raises(SingularInverse):
            rep_eval(inv_x, rep)

    def test_unsupported_type(self):
        rep = make_rep(1, 1, 1)
        with pytest.raises(TypeError):
            rep_eval(object(), rep)


class TestCheckIdentity:
    def test_scalar_identity(self):
        # d_x(yz) = h/2 is a scalar identity; check it oracle-style
        from ncu2.whcalc import deriv
        from ncu2.aext import AElem
        from ncu2.scalars import RF_IH
        lhs = deriv("x", AElem.gen("y") * AElem.gen("z"))
        rhs = AElem.scalar(RF_IH)
        rep = check_identity(lhs, rhs, tol=1e-12)
        assert rep.passed and rep.evaluated == len(default_reps())

    def test_negative_control(self):
        eps = UPoly.gen("x").scale(RatFun.coerce(GaussRat("1/1000")))
        rep = check_identity(x * y - y * x, h * z + eps)
        assert not rep.passed

    def test_skips_singular_reps(self):
        inv_x = skew_inverse(as_skew(AElem.gen("x")))
        prod = as_skew(AElem.gen("x")) * inv_x
        one = as_skew(AElem.one())
        rep = check_identity(prod, one, tol=1e-10)
        assert rep.passed
        assert rep.skipped > 0  # integer spins cannot invert x

    def test_report_repr(self):
        rep = check_identity(x, x, reps=default_reps()[:2])
        assert "pass" in repr(rep)


class TestCertification:
    def test_grid_mixes_spins(self):
        js = {r.j for r in certification_reps()}
        assert Fraction(1, 2) in js and 1 in js

    def test_zero_never_certifies(self):
        with pytest.raises(SingularInverse):
            skew_inverse(as_skew(AElem.gen("x") - AElem.gen("x")))


class TestHomomorphism:
    def test_a_mul_to_matrix_product_at_1e12(self):
        import random
        from ncu2.aext import AElem
        rng = random.Random(61)
        reps = default_reps()[:6]
        for _ in range(10):
            a = AElem.zero()
            b = AElem.zero()
            for _ in range(2):
                a = a + AElem.monomial(tuple(rng.randint(0, 1) for _ in range(3)),
                                       RatFun.coerce(rng.randint(-2, 2)))
                b = b + AElem.monomial(tuple(rng.randint(0, 1) for _ in range(3)),
                                       RatFun.coerce(rng.randint(-2, 2)))
            for rep in reps:
                lhs = rep_eval(a, rep) @ rep_eval(b, rep)
                rhs = rep_eval(a * b, rep)
                assert np.max(np.abs(lhs - rhs)) < 1e-12


class TestScalarPoint:
    def test_radius_consistency(self):
        pt = ScalarPoint(0.3, 0.4, 0.5, 1.0, 0.01)
        v = pt.rho ** 2 - (0.3 ** 2 + 0.4 ** 2 + 0.5 ** 2 + 0.01 ** 2)
        assert abs(v) < 1e-14

    def test_eval_scalar(self):
        pt = ScalarPoint(1.0, 0.0, 0.0, 2.0, 0.0)
        m = rep_eval(AElem.scalar(RF_RHO), pt)
        assert abs(m[0, 0] - 1.0) < 1e-14
