"""Command-line interface: ``order10 <subcommand> ...``.

Output is JSON (sorted keys, two-space indent) unless ``--format text``.
Exit codes: 0 success, 1 computation failure or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import reference
from .cfrac10 import IDENTITIES, NAMES, named_qexp, verify_identity
from .classfield import ImagQuadPoint, class_polynomial
from .classfield.singular import DEFAULT_PREC, VALUE_NAMES, evaluate_functions
from .modeq import (DerivationError, derive_G_report, derive_U_report, structure_checks,
                    verify_modeq)
from .modforms import (EtaQuotientSpec, GenEtaQuotientSpec, gen_order_table, order_table,
                       parse_exponents)


class CheckFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__("check failed")
        self.payload = payload


def _quad(text: str) -> ImagQuadPoint:
    try:
        a, b, c = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b,c' with integers, got {text!r}") from None
    if b * b - 4 * a * c >= 0:
        raise argparse.ArgumentTypeError(f"{text!r} has non-negative discriminant")
    return ImagQuadPoint(a, b, c)


def _order(text: str):
    if text == "auto":
        return None
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer or 'auto', got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("order must be positive")
    return v


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, text)


def cmd_qexp(args):
    s = named_qexp(args.name, args.order)
    terms = sorted(s.terms().items())
    start = s.valuation if s.valuation is not None else Fraction(0)
    # finest spacing actually used by the exponents, counted from the leading one
    step = Fraction(1, math.lcm(*((e - start).denominator for e, _ in terms))) if terms else Fraction(1)
    coeffs = [str(c) for c in s.coefficient_list(start, args.order, step)] if terms else []
    payload = {"name": args.name, "order": args.order, "valuation": str(start), "step": str(step),
               "coefficients": coeffs, "terms": [{"e": str(e), "c": str(c)} for e, c in terms]}
    text = " + ".join(f"{c}*q^{e}" for e, c in terms) + f" + O(q^{args.order})"
    return payload, text


def cmd_verify(args):
    r = verify_identity(args.identity, args.order)
    payload = r.to_json_dict()
    payload["statement"] = IDENTITIES[args.identity].statement
    if not r.passed:
        raise CheckFailed(payload)
    return payload, f"{args.identity}: pass to O(q^{args.order})"


def cmd_cusp_orders(args):
    exps = parse_exponents(args.eta)
    if args.generalized:
        table = gen_order_table(GenEtaQuotientSpec(args.level, exps))
    else:
        table = order_table(EtaQuotientSpec(args.level, exps))
    payload = {str(x): str(v) for x, v in table.items()}
    return payload, "\n".join(f"{k}\t{v}" for k, v in payload.items())


def _derive(function, level, order):
    return (derive_G_report if function == "g" else derive_U_report)(level, order)


def cmd_derive(args):
    d = _derive(args.function, args.level, args.order)
    payload = d.poly.to_json_dict()
    payload["text"] = d.poly.to_text()
    return payload, d.poly.to_text()


def cmd_check(args):
    function = "g" if args.table == 4 else "U"
    d = _derive(function, args.level, None)
    table = reference.G_REFERENCE if function == "g" else reference.U_REFERENCE
    if args.level not in table:
        raise KeyError(f"no printed row for level {args.level}; printed levels: "
                       f"{', '.join(map(str, sorted(table)))}")
    matches = d.poly.equal_up_to_sign(table[args.level])
    vm = verify_modeq(d.poly, function, args.level)
    st = structure_checks(d.poly, args.level, function)
    payload = {"table": args.table, "level": args.level, "matches_printed": matches,
               "series_check": {"pass": vm.passed, "residual_order": str(vm.residual_order)},
               "structure": st.to_json_dict(), "pass": matches and vm.passed}
    if not payload["pass"]:
        raise CheckFailed(payload)
    return payload, f"table {args.table} level {args.level}: pass"


def cmd_eval(args):
    names = [n.strip() for n in args.functions.split(",") if n.strip()]
    vals = evaluate_functions(args.quad, names, args.prec)
    payload = {n: v.to_json_dict() for n, v in vals.items()}
    lines = []
    for n, v in payload.items():
        mp = " ".join(v["minpoly"]) if v["minpoly"] else "unrecognized"
        lines.append(f"{n}\t{v['approx_re']}\t{v['approx_im']}\t[{mp}]")
    return payload, "\n".join(lines)


def cmd_class_poly(args):
    cp = class_polynomial(args.disc, args.prec)
    payload = cp.to_json_dict()
    return payload, " ".join(payload["coeffs"])


def cmd_reproduce(args):
    from .reproduce import SECTIONS, manifest_without_timings, run_all

    sections = list(SECTIONS) if args.all or not args.section else args.section
    m = manifest_without_timings(run_all(sections))
    text = "\n".join(f"{'PASS' if c['pass'] else 'FAIL'} {c['kind']:10s} {c['id']}"
                     for c in m["checks"])
    text += f"\n{m['passed']}/{m['total']} printed checks pass"
    if not m["all_pass"]:
        raise CheckFailed(m)
    return m, text


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="order10", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "text"), default="json")
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)  # noqa: E731

    q = add("qexp", help="q-expansion of a named function")
    q.add_argument("--name", required=True, choices=NAMES)
    q.add_argument("--order", type=_positive, default=50)
    q.set_defaults(func=cmd_qexp)

    v = add("verify", help="check a catalog identity as a series")
    v.add_argument("--identity", required=True, choices=list(IDENTITIES))
    v.add_argument("--order", type=_positive, default=200)
    v.set_defaults(func=cmd_verify)

    c = add("cusp-orders", help="orders of an eta quotient at the cusps")
    c.add_argument("--level", type=_positive, required=True)
    c.add_argument("--eta", required=True, help='exponents, e.g. "1:-4,2:2,5:4,10:-2"')
    c.add_argument("--generalized", action="store_true",
                   help="read --eta as g:r for generalized eta functions of the level")
    c.set_defaults(func=cmd_cusp_orders)

    d = add("derive", help="modular equation of g or U at a level")
    d.add_argument("--function", required=True, choices=("g", "U"))
    d.add_argument("--level", type=_positive, required=True)
    d.add_argument("--order", type=_order, default=None)
    d.set_defaults(func=cmd_derive)

    k = add("check", help="compare a derived equation with the printed one")
    k.add_argument("--table", type=int, choices=(4, 5), required=True)
    k.add_argument("--level", type=_positive, required=True)
    k.set_defaults(func=cmd_check)

    e = add("eval", help="singular values at a quadratic irrationality")
    e.add_argument("--quad", type=_quad, required=True, help="A,B,C with tau the root of AX^2+BX+C")
    e.add_argument("--prec", type=_positive, default=DEFAULT_PREC)
    e.add_argument("--functions", default=",".join(VALUE_NAMES))
    e.set_defaults(func=cmd_eval)

    h = add("class-poly", help="class polynomial of g0")
    h.add_argument("--disc", type=int, required=True)
    h.add_argument("--prec", type=_positive, default=DEFAULT_PREC)
    h.set_defaults(func=cmd_class_poly)

    r = add("reproduce", help="rerun every published table and example")
    r.add_argument("--all", action="store_true")
    r.add_argument("--section", action="append",
                   choices=("expansions", "cusps", "identities", "modeq", "structure", "base", "half"))
    r.set_defaults(func=cmd_reproduce)
    return p


def _emit(payload, text, fmt, stream):
    if fmt == "text" and text is not None:
        stream.write(text + "\n")
    else:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        payload, text = args.func(args)
    except CheckFailed as exc:
        _emit(exc.payload, None, "json", stdout)
        return 1
    except (ArithmeticError, ValueError, KeyError, DerivationError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        _emit({"error": type(exc).__name__, "message": msg}, None, "json", stdout)
        return 1
    _emit(payload, text, args.format, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
