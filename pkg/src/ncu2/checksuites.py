"""Randomized identity suites behind the `check` CLI command.

Each suite takes a seeded Random instance and returns (passed, details).
The suites mirror the library's own test assertions so a user can replay
the core guarantees from the command line.
"""

from __future__ import annotations

from .aext import AElem, a_from_u, a_mul
from .matrices import Mat
from .scalars import RatFun, RF_RHO, RF_T
from .thetamat import deriv_extract, theta_hat
from .upbw import UPoly, braid_residual, ch_residual
from .whcalc import Form, d_op, deriv, deriv_via_coprod

__all__ = ["SUITES", "random_aelem", "random_form"]


def random_aelem(rng, max_degree=3, nterms=3, central_fraction=False):
    out = AElem.zero()
    for _ in range(nterms):
        exps = [rng.randint(0, max_degree) for _ in range(3)]
        while sum(exps) > max_degree:
            exps[rng.randrange(3)] = 0
        coeff = RatFun.coerce(rng.randint(-3, 3))
        if central_fraction and rng.random() < 0.4:
            coeff = coeff * rng.choice((RF_RHO, RF_RHO.inv(),
                                        RF_T + 1, (RF_RHO ** 2 + 1).inv()))
        out = out + AElem.monomial(tuple(exps), coeff)
    return out


def random_form(rng, max_degree=2):
    out = Form.zero()
    for _ in range(2):
        mask = rng.randrange(16)
        out = out + Form.of(mask, random_aelem(rng, max_degree, 2))
    return out


def suite_ch(rng):
    r = ch_residual()
    ok = r.is_zero()
    return ok, "Cayley-Hamilton residual == 0" if ok else f"residual {r!r}"


def suite_braid(rng):
    r = braid_residual()
    ok = r.is_zero()
    return ok, "braid-form residual == 0" if ok else f"residual {r!r}"


def suite_theta_mult(rng, trials=25):
    for k in range(trials):
        a = random_aelem(rng, 2, 2, central_fraction=(k % 3 == 0))
        b = random_aelem(rng, 2, 2)
        lhs = theta_hat(a * b)
        rhs = theta_hat(a) @ theta_hat(b)
        if not (lhs - rhs).is_zero():
            return False, f"multiplicativity failed on trial {k}"
    return True, f"theta(ab) == theta(a)theta(b) on {trials} random pairs"


def suite_drham(rng, trials=25):
    for k in range(trials):
        w = random_form(rng)
        if not d_op(d_op(w)).is_zero():
            return False, f"d^2 != 0 on trial {k}"
    return True, f"d^2 == 0 on {trials} random forms"


def suite_evaluators(rng, trials=25):
    for k in range(trials):
        a = random_aelem(rng, 2, 2)
        b = random_aelem(rng, 2, 2)
        prod = a * b
        ds = {u: deriv(u, prod) for u in "txyz"}
        for u in "txyz":
            if deriv_via_coprod(u, a, b) != ds[u]:
                return False, f"coproduct evaluator disagreed on trial {k}"
        dt, dx, dy, dz = deriv_extract(theta_hat(prod))
        if (dx, dy, dz) != (ds["x"], ds["y"], ds["z"]) \
                or dt != deriv("ttilde", prod):
            return False, f"theta-column evaluator disagreed on trial {k}"
    return True, f"three evaluators agree on {trials} random products"


SUITES = {
    "ch": suite_ch,
    "braid": suite_braid,
    "theta-mult": suite_theta_mult,
    "drham": suite_drham,
    "evaluators": suite_evaluators,
}
