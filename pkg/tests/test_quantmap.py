import random

import numpy as np
import pytest

from ncu2.aext import AElem, SkewInv, SkewProd, a_classical_limit, a_from_u, as_skew
from ncu2.errors import ZeroDenominator
from ncu2.quantmap import (ClassForm, ClassOp, ClassPoly, alpha_central,
                           alpha_form, alpha_fraction, alpha_inverse,
                           alpha_mixed, alpha_operator, alpha_poly,
                           classical_d, classical_elem_to_poly, star_product)
from ncu2.reporacle import make_rep, rep_eval
from ncu2.scalars import (RatFun, RF_G, RF_H, RF_HBAR, RF_IH, RF_RHO, RF_T,
                          limit_h0)
from ncu2.upbw import UPoly
from ncu2.whcalc import Form, d_op, deriv

t, x, y, z = (ClassPoly.gen(n) for n in "txyz")
ux, uy, uz = (UPoly.gen(n) for n in "xyz")


def rand_classpoly(rng, deg=4, nterms=3):
    out = ClassPoly.zero()
    for _ in range(nterms):
        exps = [rng.randint(0, 2) for _ in range(4)]
        while sum(exps) > deg:
            exps[rng.randrange(4)] = 0
        out = out + ClassPoly.monomial(tuple(exps),
                                       RatFun.coerce(rng.randint(-3, 3)))
    return out


class TestAlphaPoly:
    def test_degree_one(self):
        assert alpha_poly(x) == ux

    def test_symmetrized_xy(self):
        # (xy + yx)/2 = xy - (h/2) z in PBW form
        assert alpha_poly(x * y) == ux * uy - uz.scale(RF_IH)

    def test_linear_and_degree_preserving(self):
        rng = random.Random(40)
        for _ in range(10):
            p, q = rand_classpoly(rng), rand_classpoly(rng)
            assert alpha_poly(p) + alpha_poly(q) == alpha_poly(p + q)
            assert alpha_poly(p).total_degree() == p.total_degree()

    def test_round_trip(self):
        rng = random.Random(41)
        for _ in range(20):
            p = rand_classpoly(rng)
            assert alpha_inverse(alpha_poly(p)) == p


class TestStarProduct:
    def test_bracket(self):
        h = RatFun.coerce(RF_H)
        assert star_product(x, y) - star_product(y, x) == z.scale(h)

    def test_unit(self):
        rng = random.Random(42)
        f = rand_classpoly(rng)
        assert star_product(ClassPoly.one(), f) == f
        assert star_product(f, ClassPoly.one()) == f

    def test_associativity(self):
        rng = random.Random(43)
        for _ in range(8):
            f, g, k = (rand_classpoly(rng, 2, 2) for _ in range(3))
            assert star_product(star_product(f, g), k) \
                == star_product(f, star_product(g, k))

    def test_poisson_limit_on_linears(self):
        # (f*g - g*f)/h at h -> 0 is the Lie-Poisson bracket {x,y} = z cyclic
        pairs = {("x", "y"): "z", ("y", "z"): "x", ("z", "x"): "y"}
        for (a, b), c in pairs.items():
            comm = star_product(ClassPoly.gen(a), ClassPoly.gen(b)) \
                - star_product(ClassPoly.gen(b), ClassPoly.gen(a))
            scaled = ClassPoly({m: limit_h0(v / RF_H)
                                for m, v in comm.terms.items()})
            assert scaled == ClassPoly.gen(c)
        # t is central classically and quantumly
        comm = star_product(t, x) - star_product(x, t)
        assert comm.is_zero()


class TestAlphaCentral:
    def test_monopole_profile(self):
        f = RF_G / RF_RHO ** 3
        assert alpha_central(f) == f

    def test_t_passthrough(self):
        assert alpha_central(RF_T) == RF_T

    def test_rational(self):
        f = RatFun.one() / (RF_RHO ** 2 + 1)
        assert alpha_central(f) == f

    def test_hbar_rejected(self):
        with pytest.raises(ValueError):
            alpha_central(RF_HBAR)


class TestAlphaFraction:
    def test_inverse_atom(self):
        fr = alpha_fraction(ClassPoly.one(), x)
        assert isinstance(fr, SkewProd)
        assert any(isinstance(p, SkewInv) for p in fr.parts)

    def test_self_fraction_is_identity_numerically(self):
        fr = alpha_fraction(x, x)
        rep = make_rep("3/2", 0.5, 1)
        assert np.max(np.abs(rep_eval(fr, rep) - np.eye(rep.dim))) < 1e-10

    def test_central_radial_denominator_folds(self):
        # z / r^2 with r^2 the radial square: folds to (1/rho^2) z
        fr = alpha_fraction(z, RF_RHO ** 2)
        assert fr.elem == AElem.gen("z").scale(RF_RHO.inv() ** 2)

    def test_polynomial_casimir_denominator_folds(self):
        # the polynomial x^2+y^2+z^2 quantizes to rho^2 - hbar^2
        r2 = ClassPoly.monomial((0, 2, 0, 0)) + ClassPoly.monomial((0, 0, 2, 0)) \
            + ClassPoly.monomial((0, 0, 0, 2))
        fr = alpha_fraction(z, r2)
        assert fr.elem == AElem.gen("z").scale(
            (RF_RHO * RF_RHO - RF_HBAR * RF_HBAR).inv())

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            alpha_fraction(x, ClassPoly.zero())


class TestAlphaOperator:
    def test_constant_coefficient(self):
        qp = alpha_operator(ClassOp.derivative("x"))
        a = a_from_u(alpha_poly(x * y))
        assert qp.apply(a) == deriv("x", a)

    def test_polynomial_coefficient(self):
        qp = alpha_operator(ClassOp([(x, None, (0, 0, 1, 0))]))
        a = a_from_u(alpha_poly(y * z))
        assert qp.apply(a) == a_from_u(alpha_poly(x)) * deriv("y", a)

    def test_divergence_shape(self):
        # sum of the three quantum partials: the vector-calculus divergence
        op = ClassOp([(ClassPoly.one(), None, (0, 1, 0, 0)),
                      (ClassPoly.one(), None, (0, 0, 1, 0)),
                      (ClassPoly.one(), None, (0, 0, 0, 1))])
        qp = alpha_operator(op)
        a = a_from_u(alpha_poly(x + y + z))
        got = qp.apply(a)
        assert got == AElem.scalar(RatFun.coerce(3))


class TestAlphaForm:
    def test_pure_differential(self):
        w = ClassForm.of(2, ClassPoly.one())  # dx
        assert alpha_form(w) == Form.of(2, AElem.one())

    def test_coefficient_quantized(self):
        w = ClassForm.of(0, x * y)
        got = alpha_form(w)
        assert got == Form.of(0, a_from_u(ux * uy - uz.scale(RF_IH)))

    def test_nonintertwining_witness(self):
        # omega = x^2: alpha(d omega) lacks the dt (x) -h/2 term of
        # d(alpha(omega))
        w = ClassForm.of(0, x * x)
        lhs = alpha_form(classical_d(w))
        rhs = d_op(alpha_form(w))
        assert lhs != rhs
        assert rhs - lhs == Form.of(1, AElem.scalar(-RF_IH))


class TestMixedQuantization:
    def test_radial_times_polynomial(self):
        got = alpha_mixed((RF_G / RF_RHO, z))
        assert got == AElem.gen("z").scale(RF_G / RF_RHO)

    def test_sum_form(self):
        got = alpha_mixed([RF_RHO, -ClassPoly.gen("z")])
        assert got == AElem.scalar(RF_RHO) - AElem.gen("z")


class TestClassicalFlatten:
    def test_round_trip(self):
        rng = random.Random(44)
        for _ in range(10):
            p = rand_classpoly(rng, 3)
            ae = a_from_u(alpha_poly(p))
            assert classical_elem_to_poly(a_classical_limit(ae)) == p

    def test_rejects_fractions(self):
        ce = a_classical_limit(AElem.scalar(RF_RHO.inv()))
        with pytest.raises(ValueError):
            classical_elem_to_poly(ce)
