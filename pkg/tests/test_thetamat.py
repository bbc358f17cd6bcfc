import random

import numpy as np
import pytest

from ncu2.aext import AElem, CAS_VALUE, a_from_u, as_skew
from ncu2.errors import (CannotInvert, NonCommutingEntries,
                         NonInvertibleCentral, SingularDeterminant)
from ncu2.matrices import Mat
from ncu2.reporacle import ScalarPoint, check_identity, make_rep, rep_eval
from ncu2.scalars import (GaussRat, RatFun, RF_HBAR, RF_I, RF_IH, RF_RHO,
                          RF_T, theta_central_pair)
from ncu2.thetamat import (a_matrix, central_inverse, central_pair_of_matrix,
                           commuting_inverse, deriv_extract, deriv_of_inverse,
                           quaternion_norm_det, theta_central,
                           theta_det_commuting, theta_gen, theta_hat,
                           theta_hat_rho_power, theta_invert)
from ncu2.upbw import casimir
from ncu2.whcalc import coprod_tilde, deriv

x, y, z = (AElem.gen(n) for n in "xyz")
rho, hb = RF_RHO, RF_HBAR
I4 = Mat.diag(AElem.one(), 4, AElem.zero())


def rand_aelem(rng, deg=3, nterms=2, central=False):
    out = AElem.zero()
    for _ in range(nterms):
        exps = [rng.randint(0, 2) for _ in range(3)]
        while sum(exps) > deg:
            exps[rng.randrange(3)] = 0
        coeff = RatFun.coerce(rng.randint(-3, 3))
        if central and rng.random() < 0.4:
            coeff = coeff * rng.choice((rho, rho.inv(), (RF_T + 1).inv()))
        out = out + AElem.monomial(tuple(exps), coeff)
    return out


class TestPrintedMatrices:
    def test_theta_x(self):
        m = theta_gen("x")
        ih = AElem.scalar(RF_IH)
        assert m[0, 0] == x and m[1, 1] == x
        assert m[0, 1] == -ih and m[1, 0] == ih
        assert m[2, 3] == -ih and m[3, 2] == ih
        assert m[0, 2].is_zero() and m[1, 3].is_zero()

    def test_theta_unit(self):
        assert theta_hat(AElem.one()) == I4

    def test_theta_cas_is_square_identity(self):
        th_rho = theta_hat_rho_power(1)
        lhs = theta_hat(a_from_u(casimir()))
        rhs = th_rho @ th_rho - I4.scale(AElem.scalar(hb * hb))
        assert (lhs - rhs).is_zero()

    def test_theta_cas_explicit_entries(self):
        m = theta_hat(a_from_u(casimir()))
        assert m[0, 0] == AElem.scalar(CAS_VALUE + hb * hb * 3)
        two_ih = RF_I * hb * 2
        assert m[0, 1] == x.scale(-two_ih)
        assert m[1, 0] == x.scale(two_ih)
        assert m[1, 2] == z.scale(-two_ih)
        assert m[3, 1] == y.scale(-two_ih)

    def test_radius_matrix_closed_form(self):
        m = theta_hat_rho_power(1)
        diag = AElem.scalar((rho * rho + hb * hb) / rho)
        ihr = RF_I * hb / rho
        expected = Mat([
            [diag, x.scale(-ihr), y.scale(-ihr), z.scale(-ihr)],
            [x.scale(ihr), diag, z.scale(-ihr), y.scale(ihr)],
            [y.scale(ihr), z.scale(ihr), diag, x.scale(-ihr)],
            [z.scale(ihr), y.scale(-ihr), x.scale(ihr), diag],
        ])
        assert (m - expected).is_zero()

    def test_linear_form_matrix(self):
        # theta(a0 t + a1 x + a2 y + a3 z) = (a + i hbar a0) I + i hbar M
        a0, a1, a2, a3 = (RatFun.coerce(v) for v in (2, 3, -1, 5))
        a = AElem.scalar(a0 * RF_T) + x.scale(a1) + y.scale(a2) + z.scale(a3)
        m = theta_hat(a)
        diag = a + AElem.scalar(RF_IH * a0)
        for i in range(4):
            assert m[i, i] == diag
        ih = RF_IH
        assert m[0, 1] == AElem.scalar(-a1 * ih)
        assert m[0, 2] == AElem.scalar(-a2 * ih)
        assert m[0, 3] == AElem.scalar(-a3 * ih)
        assert m[1, 2] == AElem.scalar(-a3 * ih)
        assert m[1, 3] == AElem.scalar(a2 * ih)
        assert m[3, 2] == AElem.scalar(a1 * ih)  # the alpha_1 s typo reads alpha_1
        # all sixteen entries commute
        assert commuting_inverse(m) is not None


class TestAMatrix:
    def test_quadratic_relation(self):
        a = a_matrix()
        lhs = a @ a
        rhs = I4.scale(AElem.scalar(hb * hb - rho * rho)) \
            + a.scale(AElem.scalar(-RF_I * hb * 2))
        assert (lhs - rhs).is_zero()


class TestMultiplicativity:
    def test_generators(self):
        for n1 in "xyz":
            for n2 in "xyz":
                a = AElem.gen(n1)
                b = AElem.gen(n2)
                assert (theta_hat(a * b) - theta_gen(n1) @ theta_gen(n2)).is_zero()

    def test_random_pairs(self):
        rng = random.Random(30)
        for k in range(20):
            a = rand_aelem(rng, central=(k % 3 == 0))
            b = rand_aelem(rng)
            assert (theta_hat(a * b) - theta_hat(a) @ theta_hat(b)).is_zero()

    def test_numeric(self):
        rng = random.Random(31)
        a, b = rand_aelem(rng), rand_aelem(rng)
        assert check_identity(theta_hat(a * b),
                              theta_hat(a) @ theta_hat(b), tol=1e-10).passed

    def test_rho_commutes_with_generators(self):
        th_rho = theta_hat_rho_power(1)
        for n in "xyz":
            tg = theta_gen(n)
            assert (th_rho @ tg - tg @ th_rho).is_zero()


class TestRhoPowers:
    def test_group_law(self):
        ths = {p: theta_hat_rho_power(p) for p in range(-3, 4)}
        for p in range(-3, 4):
            for q in range(-3, 4):
                if -3 <= p + q <= 3:
                    assert ((ths[p] @ ths[q]) - ths[p + q]).is_zero()

    def test_p_zero(self):
        assert (theta_hat_rho_power(0) - I4).is_zero()

    def test_extract_p_minus_one_values(self):
        dt, dx, dy, dz = deriv_extract(theta_hat_rho_power(-1))
        assert dx == x.scale(RatFun.one() / (rho * (hb * hb - rho * rho)))
        assert dt == AElem.scalar(-RF_I / (hb * rho))

    def test_extract_radius(self):
        dt, dx, dy, dz = deriv_extract(theta_hat_rho_power(1))
        assert dx == x.scale(rho.inv())
        assert dy == y.scale(rho.inv())


class TestDerivExtract:
    def test_on_generator(self):
        dt, dx, dy, dz = deriv_extract(theta_gen("x"))
        assert dx == AElem.one()
        assert dt == x.scale(RatFun.one() / RF_IH)
        assert dy.is_zero() and dz.is_zero()

    def test_agrees_with_sigma_evaluator(self):
        rng = random.Random(32)
        for _ in range(10):
            a = rand_aelem(rng, central=True)
            dt, dx, dy, dz = deriv_extract(theta_hat(a))
            assert dt == deriv("ttilde", a)
            assert dx == deriv("x", a)
            assert dy == deriv("y", a)
            assert dz == deriv("z", a)


class TestCentralInverse:
    def test_radius(self):
        got = central_inverse(theta_hat_rho_power(1))
        assert (got - theta_hat_rho_power(-1)).is_zero()

    def test_identity(self):
        assert (central_inverse(I4) - I4).is_zero()

    def test_zero_rejected(self):
        zero = Mat.diag(AElem.zero(), 4, AElem.zero())
        with pytest.raises(NonInvertibleCentral):
            central_inverse(zero)

    def test_pair_extraction(self):
        f = (rho ** 2 + 1) / (RF_T + 2)
        alpha, beta = theta_central_pair(f)
        got = central_pair_of_matrix(theta_central(f))
        assert got == (alpha, beta)


class TestCommutingInverse:
    def test_noncommuting_rejected(self):
        m = theta_hat(AElem.scalar(rho) - x)
        with pytest.raises(NonCommutingEntries):
            commuting_inverse(m)

    def test_determinant_x(self):
        det = theta_det_commuting(theta_gen("x"))
        e = x * x - AElem.scalar(hb * hb)
        assert det == e * e

    def test_determinant_y_z_t(self):
        for n in "yz":
            det = theta_det_commuting(theta_gen(n))
            g = AElem.gen(n)
            e = g * g - AElem.scalar(hb * hb)
            assert det == e * e
        mt = theta_central(RF_T)
        dett = theta_det_commuting(mt)
        e = RF_T + RF_I * hb
        assert dett == AElem.scalar(e ** 4)

    def test_quaternion_norm_form(self):
        # hbar^4 (sum of squared derivatives)^2 is the consistent prefactor
        for n in "xyz":
            m = theta_gen(n)
            det = theta_det_commuting(m)
            assert quaternion_norm_det(deriv_extract(m)) == det
            # a -hbar prefactor would contradict det theta(x)
            s = AElem.zero()
            for d in deriv_extract(m):
                s = s + d * d
            assert (s * s).scale(-hb) != det

    def test_numeric_inverse_where_defined(self):
        ti = theta_invert(x)
        tm = theta_gen("x")
        # x^2 - hbar^2 is invertible on integer spins only
        for rep in (make_rep(1, 1, 1), make_rep(2, 0, "1/3")):
            p = rep_eval(tm, rep) @ rep_eval(ti, rep)
            assert np.max(np.abs(p - np.eye(4 * rep.dim))) < 1e-10

    def test_singular_determinant(self):
        zero = Mat.diag(AElem.zero(), 4, AElem.zero())
        with pytest.raises(SingularDeterminant):
            commuting_inverse(zero)


class TestThetaInvertDispatch:
    def test_central_route(self):
        got = theta_invert(AElem.scalar(rho))
        assert (got - theta_hat_rho_power(-1)).is_zero()

    def test_commuting_route_generators(self):
        for n in "xyz":
            m = theta_invert(AElem.gen(n))
            assert m.shape == (4, 4)
        # t is central: theta(t)^-1 = (t + i hbar)^-1 I
        m = theta_invert(AElem.scalar(RF_T))
        expect = Mat.diag(AElem.scalar((RF_T + RF_I * hb).inv()), 4,
                          AElem.zero())
        assert (m - expect).is_zero()

    def test_open_case(self):
        with pytest.raises(CannotInvert):
            theta_invert(AElem.scalar(rho) - x)

    def test_zero(self):
        with pytest.raises(CannotInvert):
            theta_invert(AElem.zero())


class TestDerivOfInverse:
    def test_radius(self):
        dt, dx, dy, dz = deriv_of_inverse(AElem.scalar(rho))
        assert dx == x.scale(RatFun.one() / (rho * (hb * hb - rho * rho)))
        assert dt == AElem.scalar(-RF_I / (hb * rho))
        # d_t(rho^-1) = 0
        dt_plain = dt - AElem.scalar(rho.inv() / RF_IH)
        assert dt_plain.is_zero()

    def test_t_inverse(self):
        dt, dx, dy, dz = deriv_of_inverse(AElem.scalar(RF_T))
        assert dx.is_zero() and dy.is_zero() and dz.is_zero()
        assert dt == AElem.scalar((RatFun.one() / RF_IH)
                                  / (RF_T + RF_I * hb))

    def test_x_inverse_classical_limit(self):
        # lim_{hbar->0} d_x(x^-1) = -x^-2 at generic scalar points
        ds = deriv_of_inverse(x)
        x0 = 0.7
        errs = []
        for hv in (0.01, 0.001):
            pt = ScalarPoint(x0, 0.4, -0.2, 0.3, hv)
            got = complex(rep_eval(ds[1], pt)[0, 0])
            errs.append(abs(got + 1 / x0 ** 2))
        assert errs[0] < 1e-3 and errs[1] < 1e-5

    def test_propagates_cannot_invert(self):
        with pytest.raises(CannotInvert):
            deriv_of_inverse(AElem.scalar(rho) - x)


class TestCoproductCompatibility:
    def test_delta_theta_is_theta_tensor_theta(self):
        # Delta applied entrywise to the tilde-basis Theta pattern satisfies
        # Delta(Theta) = (h/2) Theta (x). Theta; entries are generators so
        # both sides live in span{d~t, dx, dy, dz} (x) same.
        pattern = (
            ((1, +1), (2, -1), (3, -1), (4, -1)),
            ((2, +1), (1, +1), (4, -1), (3, +1)),
            ((3, +1), (4, +1), (1, +1), (2, -1)),
            ((4, +1), (3, -1), (2, +1), (1, +1)),
        )
        names = {1: "ttilde", 2: "x", 3: "y", 4: "z"}
        half_h = RF_IH
        for i in range(4):
            for j in range(4):
                lab, sgn = pattern[i][j]
                lhs = {}
                for key, c in coprod_tilde(names[lab]).items():
                    lhs[key] = c if sgn > 0 else -c
                rhs = {}
                for k in range(4):
                    lab1, s1 = pattern[i][k]
                    lab2, s2 = pattern[k][j]
                    key = (lab1, lab2)
                    add = half_h if s1 * s2 > 0 else -half_h
                    rhs[key] = rhs.get(key, RatFun.zero()) + add
                rhs = {k: v for k, v in rhs.items() if not v.is_zero()}
                assert lhs == rhs, (i, j)
