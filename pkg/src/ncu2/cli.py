"""Command-line interface.

Commands:

    norm EXPR                      canonical form in the extended algebra
    deriv --wrt {t|ttilde|x|y|z} EXPR   quantum partial derivative
    theta EXPR                     the 4x4 theta-hat matrix
    inv EXPR                       inverse of theta-hat(EXPR) when supported
    monopole --profile EXPR        residual / div / rot for a radial profile
    limit EXPR                     classical limit (hbar -> 0, rho -> r)
    check {ch|braid|theta-mult|drham|evaluators|all} [--seed N]

Global flags: --hbar RAT|'formal' (default formal), --format {text|json}.
Exit codes: 0 ok, 1 parse error, 2 domain error, 3 internal invariant breach.

All printed algebra output re-parses under the same grammar (coefficients
are emitted with inv(...) instead of division); the classical `limit`
output uses the extra symbol r and is the one documented exception.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .aext import AElem, SkewAtom, SkewExpr, SkewInv, SkewProd, SkewSum, \
    a_classical_limit, as_skew, skew_inverse
from .errors import NCU2Error, ParseError
from .matrices import Mat
from .parser import parse, parse_gauss_rat
from .scalars import (GaussRat, Poly, RatFun, RF_G, RF_HBAR, RF_RHO, RF_T,
                      specialize_hbar)
from .thetamat import theta_hat, theta_invert
from .whcalc import deriv
from . import checksuites
from . import ncmaxwell

GRAMMAR_NAMES = ("hbar", "t", "rho", "g")
CLASSICAL_NAMES = ("hbar", "t", "r", "g")


# ---------------------------------------------------------------------------
# canonical, re-parseable printing
# ---------------------------------------------------------------------------

def fmt_gauss(c):
    """A Gaussian rational as a grammar expression (uses the symbol i)."""
    def rat(q):
        return str(q)

    re, im = c.re, c.im
    if im == 0:
        return rat(re)
    if im == 1:
        istr = "i"
    elif im == -1:
        istr = "-i"
    else:
        istr = f"{rat(im)}*i"
    if re == 0:
        return istr
    joined = istr if istr.startswith("-") else "+" + istr
    return f"{rat(re)}{joined}"


def fmt_poly(p, names=GRAMMAR_NAMES):
    if p.is_zero():
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        factors = []
        for v in range(4):
            if mono[v] == 1:
                factors.append(names[v])
            elif mono[v] > 1:
                factors.append(f"{names[v]}^{mono[v]}")
        cs = fmt_gauss(c)
        if factors:
            body = "*".join(factors)
            if c == GaussRat(1):
                s = body
            elif c == GaussRat(-1):
                s = "-" + body
            else:
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = f"({cs})"
                s = f"{cs}*{body}"
        else:
            s = cs
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


def fmt_ratfun(f, names=GRAMMAR_NAMES):
    ns = fmt_poly(f.num, names)
    if f.is_polynomial():
        return ns
    ds = fmt_poly(f.den, names)
    inv = f"inv({ds})"
    if ns == "1":
        return inv
    if ns == "-1":
        return "-" + inv
    if "+" in ns[1:] or "-" in ns[1:]:
        ns = f"({ns})"
    return f"{ns}*{inv}"


def _mono_str(mono, axes=("x", "y", "z")):
    factors = []
    for v in range(len(axes)):
        if mono[v] == 1:
            factors.append(axes[v])
        elif mono[v] > 1:
            factors.append(f"{axes[v]}^{mono[v]}")
    return "*".join(factors) if factors else "1"


def _aelem_parts(a, names=GRAMMAR_NAMES):
    """List of (coeff_str, mono_str) in a stable order."""
    out = []
    for mono, c in a.sorted_terms():
        out.append((fmt_ratfun(c, names), _mono_str(mono)))
    return out


def fmt_aelem(a, names=GRAMMAR_NAMES):
    if a.is_zero():
        return "0"
    parts = []
    for cs, ms in _aelem_parts(a, names):
        if ms == "1":
            s = cs
        elif cs == "1":
            s = ms
        elif cs == "-1":
            s = "-" + ms
        else:
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            s = f"{cs}*{ms}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


def fmt_classical(ce):
    parts = []
    for mono, c in sorted(ce.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]),
                          reverse=True):
        cs = fmt_ratfun(c, CLASSICAL_NAMES)
        ms = _mono_str(mono)
        if ms == "1":
            s = cs
        elif cs == "1":
            s = ms
        elif cs == "-1":
            s = "-" + ms
        else:
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            s = f"{cs}*{ms}"
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for s in parts[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


def fmt_skew(e, names=GRAMMAR_NAMES):
    if isinstance(e, SkewAtom):
        s = fmt_aelem(e.elem, names)
        return f"({s})" if ("+" in s[1:] or "-" in s[1:] or "*" in s) else s
    if isinstance(e, SkewSum):
        return "(" + "+".join(fmt_skew(p, names) for p in e.parts) + ")"
    if isinstance(e, SkewProd):
        return "*".join(fmt_skew(p, names) for p in e.parts)
    if isinstance(e, SkewInv):
        return f"inv({fmt_skew(e.child, names)})"
    raise TypeError(type(e))


def fmt_value(v, names=GRAMMAR_NAMES):
    if isinstance(v, AElem):
        return fmt_aelem(v, names)
    if isinstance(v, SkewExpr):
        return fmt_skew(v, names)
    if isinstance(v, RatFun):
        return fmt_ratfun(v, names)
    return str(v)


def fmt_matrix(m, names=GRAMMAR_NAMES):
    return [[fmt_value(e, names) for e in row] for row in m.rows]


# ---------------------------------------------------------------------------
# Ast evaluation into the algebra
# ---------------------------------------------------------------------------

_SYM_VALUES = {
    "t": lambda: AElem.scalar(RF_T),
    "rho": lambda: AElem.scalar(RF_RHO),
    "hbar": lambda: AElem.scalar(RF_HBAR),
    "g": lambda: AElem.scalar(RF_G),
    "i": lambda: AElem.scalar(RatFun.coerce(GaussRat(0, 1))),
    "x": lambda: AElem.gen("x"),
    "y": lambda: AElem.gen("y"),
    "z": lambda: AElem.gen("z"),
}


def eval_ast(node):
    """Evaluate an Ast to an AElem, or a SkewExpr when inv() cannot fold."""
    kind = node[0]
    if kind == "num":
        return AElem.scalar(RatFun.coerce(node[1]))
    if kind == "sym":
        return _SYM_VALUES[node[1]]()
    if kind == "neg":
        v = eval_ast(node[1])
        return -v if isinstance(v, AElem) else as_skew(-1) * v
    if kind in ("add", "sub"):
        a = eval_ast(node[1])
        b = eval_ast(node[2])
        if isinstance(a, AElem) and isinstance(b, AElem):
            return a + b if kind == "add" else a - b
        a, b = as_skew(a), as_skew(b)
        return a + b if kind == "add" else a - b
    if kind == "mul":
        a = eval_ast(node[1])
        b = eval_ast(node[2])
        if isinstance(a, AElem) and isinstance(b, AElem):
            return a * b
        return as_skew(a) * as_skew(b)
    if kind == "pow":
        base = eval_ast(node[1])
        n = node[2]
        if isinstance(base, AElem):
            return base ** n
        out = as_skew(AElem.one())
        for _ in range(n):
            out = out * base
        return out
    if kind == "inv":
        v = eval_ast(node[1])
        folded = skew_inverse(as_skew(v))
        if isinstance(folded, SkewAtom):
            return folded.elem
        return folded
    raise AssertionError(f"unknown ast node {kind!r}")


# ---------------------------------------------------------------------------
# the commands
# ---------------------------------------------------------------------------

def _specialize_value(v, hval):
    if hval is None:
        return v
    if isinstance(v, AElem):
        return AElem({m: specialize_hbar(c, hval) for m, c in v.terms.items()})
    if isinstance(v, RatFun):
        return specialize_hbar(v, hval)
    if isinstance(v, SkewAtom):
        return SkewAtom(_specialize_value(v.elem, hval))
    if isinstance(v, SkewSum):
        return SkewSum(tuple(_specialize_value(p, hval) for p in v.parts))
    if isinstance(v, SkewProd):
        return SkewProd(tuple(_specialize_value(p, hval) for p in v.parts))
    if isinstance(v, SkewInv):
        return SkewInv(_specialize_value(v.child, hval))
    if isinstance(v, Mat):
        return v.map(lambda e: _specialize_value(e, hval))
    return v


def _result_terms(a):
    return [{"coeff": cs, "mono": ms} for cs, ms in _aelem_parts(a)]


def cmd_norm(args, out):
    v = eval_ast(parse(args.expr))
    v = _specialize_value(v, args.hbar_value)
    out["result"] = {"text": fmt_value(v)}
    if isinstance(v, AElem):
        out["result"]["terms"] = _result_terms(v)
    return fmt_value(v)


def cmd_deriv(args, out):
    v = eval_ast(parse(args.expr))
    if isinstance(v, SkewInv) and isinstance(v.child, SkewAtom):
        from .scalars import RF_TWO_OVER_H
        from .thetamat import deriv_of_inverse
        vals = deriv_of_inverse(v.child.elem)
        if args.wrt == "t":
            # d_t = d~t - (2/h) a^-1, with a^-1 kept as the lazy inverse
            shift = SkewProd((as_skew(AElem.scalar(-RF_TWO_OVER_H)), v))
            d = SkewSum((as_skew(vals[0]), shift))
        else:
            d = vals[("ttilde", "x", "y", "z").index(args.wrt)]
    elif isinstance(v, AElem):
        d = deriv(args.wrt, v)
    else:
        raise NCU2Error("deriv supports canonical-form expressions and "
                        "inv(...) of a single element")
    d = _specialize_value(d, args.hbar_value)
    text = fmt_value(d)
    out["result"] = {"wrt": args.wrt, "text": text}
    if isinstance(d, AElem):
        terms = _result_terms(d)
        out["result"]["terms"] = terms
        if len(terms) == 1:
            out["result"]["coeff"] = terms[0]["coeff"]
            out["result"]["mono"] = terms[0]["mono"]
    return text


def cmd_theta(args, out):
    v = eval_ast(parse(args.expr))
    if isinstance(v, AElem):
        m = theta_hat(v)
    elif isinstance(v, SkewInv) and isinstance(v.child, SkewAtom):
        m = theta_invert(v.child.elem)
    else:
        raise NCU2Error("theta supports canonical-form expressions and "
                        "inv(...) of a single element")
    m = _specialize_value(m, args.hbar_value)
    rows = fmt_matrix(m)
    out["result"] = {"matrix": rows}
    return "\n".join("[" + ", ".join(r) + "]" for r in rows)


def cmd_inv(args, out):
    v = eval_ast(parse(args.expr))
    if not isinstance(v, AElem):
        raise NCU2Error("inv expects a canonical-form expression")
    m = theta_invert(v)
    m = _specialize_value(m, args.hbar_value)
    rows = fmt_matrix(m)
    out["result"] = {"matrix": rows}
    return "\n".join("[" + ", ".join(r) + "]" for r in rows)


def cmd_monopole(args, out):
    v = eval_ast(parse(args.profile))
    if not (isinstance(v, AElem) and v.is_central()):
        raise NCU2Error("--profile must be a central radial function")
    f = v.central_part()
    residual = ncmaxwell.monopole_residual(f)
    field = ncmaxwell.VecField.radial(f)
    dv = ncmaxwell.div(field)
    rt = ncmaxwell.rot(field)
    if args.hbar_value is not None:
        residual = specialize_hbar(residual, args.hbar_value)
        dv = _specialize_value(dv, args.hbar_value)
        rt = ncmaxwell.VecField(*(_specialize_value(c, args.hbar_value)
                                  for c in rt))
    rtxt = [fmt_value(c) for c in rt]
    out["result"] = {"residual": fmt_ratfun(residual), "div": fmt_value(dv),
                     "rot": rtxt}
    return (f"residual: {fmt_ratfun(residual)}  div: {fmt_value(dv)}  "
            f"rot: ({', '.join(rtxt)})")


def cmd_limit(args, out):
    v = eval_ast(parse(args.expr))
    if not isinstance(v, AElem):
        raise NCU2Error("limit expects a canonical-form expression")
    ce = a_classical_limit(v)
    text = fmt_classical(ce)
    out["result"] = {"text": text}
    return text


def cmd_check(args, out):
    rng = random.Random(args.seed)
    names = checksuites.SUITES.keys() if args.suite == "all" else [args.suite]
    results = []
    lines = []
    ok = True
    for name in names:
        passed, details = checksuites.SUITES[name](rng)
        ok = ok and passed
        results.append({"name": name, "passed": passed, "details": details})
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}: {details}")
    out["result"] = {"suites": results, "all_passed": ok}
    if not ok:
        out["_exit"] = 3
    return "\n".join(lines)


def build_arg_parser():
    ap = argparse.ArgumentParser(
        prog="ncu2",
        description="Exact quantum differential calculus on the quantized "
                    "u(2) algebra.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--hbar", default="formal",
                       help="Gaussian-rational value for hbar, or 'formal'")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("norm", help="normalize an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=cmd_norm)

    p = sub.add_parser("deriv", help="quantum partial derivative")
    p.add_argument("--wrt", required=True,
                   choices=("t", "ttilde", "x", "y", "z"))
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=cmd_deriv)

    p = sub.add_parser("theta", help="theta-hat matrix of an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("inv", help="inverse of theta-hat(expr) if supported")
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=cmd_inv)

    p = sub.add_parser("monopole", help="check a radial magnetic profile")
    p.add_argument("--profile", required=True)
    common(p)
    p.set_defaults(fn=cmd_monopole)

    p = sub.add_parser("limit", help="classical limit hbar -> 0")
    p.add_argument("expr")
    common(p)
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("check", help="run identity suites")
    p.add_argument("suite", choices=tuple(checksuites.SUITES) + ("all",))
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=cmd_check)
    return ap


def main(argv=None):
    ap = build_arg_parser()
    args = ap.parse_args(argv)
    out = {"command": args.command,
           "input": getattr(args, "expr", None) or getattr(args, "profile", None)
           or getattr(args, "suite", None),
           "result": None, "errors": []}
    args.hbar_value = None
    code = 0
    text = ""
    try:
        if args.hbar != "formal":
            args.hbar_value = parse_gauss_rat(args.hbar)
        text = args.fn(args, out)
        code = out.pop("_exit", 0)
    except ParseError as exc:
        out["errors"].append({"type": "ParseError", "message": str(exc),
                              "offset": exc.offset,
                              "expected": list(exc.expected)})
        text = f"parse error: {exc}"
        code = 1
    except NCU2Error as exc:
        out["errors"].append({"type": type(exc).__name__, "message": str(exc)})
        text = f"error: {type(exc).__name__}: {exc}"
        code = 2
    except Exception as exc:  # pragma: no cover - internal invariant breach
        out["errors"].append({"type": type(exc).__name__, "message": str(exc)})
        text = f"internal error: {type(exc).__name__}: {exc}"
        code = 3
    if args.format == "json":
        print(json.dumps(out, indent=None, sort_keys=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
