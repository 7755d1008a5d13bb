"""Command-line interface.

    gammachains chain 3/7
    gammachains closed-form 1/5 --format latex
    gammachains verify --qmax 20 --digits 50
    gammachains table --qmax 8
    gammachains period 7 4 --quadrature
    gammachains branch-symmetry 5

Exit codes: 0 success, 1 verification or convergence failure, 2 usage error.
The default precision can be set with ``GAMMACHAINS_DIGITS``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from math import gcd

from .chains import minimal_chain, render_chain
from .closed_form import solve_closed_form
from .geometry import table_row
from .numerics import (context, eval_expr, period_value, quad_I, quad_I_nk,
                       ref_gamma, symmetry_ratio)
from .periodexpr import to_canonical_string, to_dict, to_latex

DEFAULT_DIGITS = 50
ENV_DIGITS = "GAMMACHAINS_DIGITS"


class UsageError(Exception):
    pass


def format_real(x, digits: int) -> str:
    """Round half-even to ``digits`` significant digits."""
    text = context(digits + 10).nstr(x, digits + 10, strip_zeros=False)
    return str(Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(Decimal(text)))


def parse_fraction(text: str) -> tuple:
    """Parse ``"p/q"`` (whitespace allowed) into a reduced ``(p, q)``."""
    try:
        if "/" in text:
            a, b = text.split("/", 1)
            p, q = int(a.strip()), int(b.strip())
        else:
            p, q = int(text.strip()), 1
    except ValueError:
        raise UsageError(f"not a fraction: {text!r}") from None
    if q < 1 or not 1 <= p <= q:
        raise UsageError(f"need 1 <= p <= q, got {text!r}")
    d = gcd(p, q)
    if d != 1:
        print(f"note: {p}/{q} reduced to {p // d}/{q // d}", file=sys.stderr)
    return p // d, q // d


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# chain ------------------------------------------------------------------

def cmd_chain(args) -> int:
    p, q = parse_fraction(args.fraction)
    chain = minimal_chain(p, q)
    arrows = render_chain(chain)
    if args.format == "json":
        out = {
            "start": _frac_str(chain.start),
            "chain": arrows,
            "visited": [_frac_str(x) for x in chain.visited],
            "steps": [{"kind": s.kind.value, "at": _frac_str(s.at)} for s in chain.steps],
            "doublings": chain.doublings,
            "sign": chain.sign,
            "closure": chain.closure.value,
            "reentry_index": chain.reentry_index,
        }
        print(json.dumps(out, ensure_ascii=False, indent=2))
        return 0
    print(arrows)
    if chain.is_empty:
        print("empty chain")
    sign = "+" if chain.sign > 0 else "-"
    print(f"m = {chain.doublings}, sign = {sign}, closure = {chain.closure.value}, "
          f"reentry index = {chain.reentry_index}")
    return 0


# closed form ------------------------------------------------------------

def _closed_form_payload(cf, exponent=None) -> dict:
    e = cf.exponent if exponent is None else exponent
    expr = cf.gamma_power(e)
    return {"arg": _frac_str(cf.arg), "exponent": e, "expr": to_dict(expr)}


def cmd_closed_form(args) -> int:
    p, q = parse_fraction(args.fraction)
    cf = solve_closed_form(p, q)
    e = cf.exponent if args.power is None else args.power
    if e < 1:
        raise UsageError("--power must be a positive integer")
    expr = cf.gamma_power(e)
    arg = _frac_str(cf.arg) if cf.arg != 1 else "1"
    if args.format == "json":
        print(json.dumps(_closed_form_payload(cf, e), sort_keys=True))
    elif args.format == "latex":
        print(rf"\Gamma({arg})^{{{e}}} = {to_latex(expr, pi=args.pi)}")
    else:
        print(f"Γ({arg})^{e} = {to_canonical_string(expr)}")
    return 0


# verify -----------------------------------------------------------------

def verify_rows(qmax: int, digits: int, quadrature: bool = False):
    tol = Fraction(1, 10 ** (digits // 2))
    ctx = context(digits + 10)
    for q in range(2, qmax + 1):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            cf = solve_closed_form(p, q)
            want = ctx.mpf(ref_gamma(cf.arg, digits)) ** cf.exponent
            got = ctx.mpf(eval_expr(cf.expr, digits, quadrature))
            rel = abs(got / want - 1)
            yield {
                "p": p, "q": q, "exponent": cf.exponent,
                "expr": to_canonical_string(cf.expr),
                "rel_error": float(rel),
                "pass": bool(rel < ctx.mpf(tol.numerator) / tol.denominator),
            }


def cmd_verify(args) -> int:
    if args.qmax < 2:
        raise UsageError("--qmax must be >= 2")
    rows = list(verify_rows(args.qmax, args.digits, args.quadrature))
    failures = [r for r in rows if not r["pass"]]
    report = {"qmax": args.qmax, "digits": args.digits,
              "tolerance": f"1e-{args.digits // 2}", "checked": len(rows),
              "failures": len(failures), "rows": rows}
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        worst = max(rows, key=lambda r: r["rel_error"])
        print(f"checked {len(rows)} fractions with q <= {args.qmax} at {args.digits} digits, "
              f"tolerance 1e-{args.digits // 2}")
        print(f"worst relative error {worst['rel_error']:.3e} at {worst['p']}/{worst['q']}")
        print(f"{len(failures)} failures")
    for r in failures:
        print(f"FAIL {r['p']}/{r['q']}: relative error {r['rel_error']:.3e}", file=sys.stderr)
    return 1 if failures else 0


# table ------------------------------------------------------------------

def _yes_no(b: bool) -> str:
    return "Yes" if b else "No"


def _row_payload(row) -> dict:
    cf = row.closed_form
    return {
        "q": row.q,
        "exponent": cf.exponent,
        "expr": to_dict(cf.expr),
        "expr_text": to_canonical_string(cf.expr),
        "uses_meromorphic": row.uses_meromorphic,
        "elliptic_K": row.elliptic_K_status.value,
        "schneider": {_frac_str(s): v.verdict.value for s, v in row.schneider.items()},
        "rel_error": row.rel_error,
        "extrapolated": row.extrapolated,
    }


def cmd_table(args) -> int:
    if args.qmax < 2:
        raise UsageError("--qmax must be >= 2")
    rows = [table_row(q, args.digits) for q in range(2, args.qmax + 1)]
    if args.format == "json":
        print(json.dumps([_row_payload(r) for r in rows], indent=2))
        return 0
    if args.format == "latex":
        print(r"\begin{tabular}{|c|c|c|c|}")
        print(r"\hline")
        print(r"$q$ & $\Gamma(1/q)$ & Elliptic Period K(k)? & Meromorphic Form? \\")
        for r in rows:
            e = r.closed_form.exponent
            body = to_latex(r.closed_form.expr)
            cell = body if e == 1 else rf"\left({body}\right)^{{1/{e}}}"
            print(r"\hline")
            print(rf"${r.q}$ & ${cell}$ & {r.elliptic_K_status.value} & "
                  rf"{_yes_no(r.uses_meromorphic)} \\")
        print(r"\hline")
        print(r"\end{tabular}")
        return 0
    for r in rows:
        cf = r.closed_form
        verdicts = ", ".join(
            f"I_{_frac_str(s) if s.denominator != 1 else s.numerator}: "
            f"{'transcendental' if v.proven else 'n/a'}"
            for s, v in r.schneider.items())
        flag = " (extrapolated)" if r.extrapolated else ""
        print(f"q={r.q}{flag}: Γ(1/{r.q})^{cf.exponent} = {to_canonical_string(cf.expr)}")
        print(f"    meromorphic form: {_yes_no(r.uses_meromorphic)}; "
              f"elliptic K: {r.elliptic_K_status.value}; Schneider: {verdicts}; "
              f"relative error {r.rel_error:.2e}")
    return 0


# period -----------------------------------------------------------------

def _parse_index(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a number: {text!r}") from None


def cmd_period(args) -> int:
    vals = list(args.index)
    if vals and vals[0] == "I":
        vals = vals[1:]
    if len(vals) == 1:
        s = _parse_index(vals[0])
        nk = None
    elif len(vals) == 2:
        n, k = (int(_parse_index(v)) for v in vals)
        if not 1 <= k <= n:
            raise UsageError(f"need 1 <= k <= n, got n={n}, k={k}")
        s, nk = Fraction(n, k), (n, k)
    else:
        raise UsageError("period takes s or n k")
    if s < 1:
        raise UsageError(f"I_s is only defined here for Re(s) >= 1, got s={s}")
    if args.quadrature:
        res = quad_I_nk(*nk, args.digits) if nk else quad_I(s, args.digits)
        value, err, method, ok = res.value, res.err_estimate, "tanh-sinh", res.converged
    else:
        value = period_value(s, args.digits)
        err, method, ok = float(abs(value)) * 10.0 ** -(args.digits - 6), "beta", True
    label = f"I_{_frac_str(s) if s.denominator != 1 else s.numerator}"
    if args.format == "json":
        print(json.dumps({"index": _frac_str(s), "value": format_real(value, args.digits),
                          "err_estimate": err, "method": method, "converged": ok}))
    else:
        print(f"{label} = {format_real(value, args.digits)}")
        print(f"error estimate {err:.2e} ({method})")
    return 0 if ok else 1


# branch symmetry --------------------------------------------------------

def cmd_branch_symmetry(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    P = args.digits
    ctx = context(P)
    ratio, branch, period = symmetry_ratio(args.n, P)
    zeta = ctx.mpc(ctx.cospi(ctx.mpf(2) / args.n), ctx.sinpi(ctx.mpf(2) / args.n))
    rhs = (1 - zeta) * period.value / 2
    ok = branch.converged and period.converged
    digits = min(P, 30)
    fields = {
        "n": args.n,
        "lhs": [format_real(branch.value.real, digits), format_real(branch.value.imag, digits)],
        "rhs": [format_real(rhs.real, digits), format_real(rhs.imag, digits)],
        "ratio": [format_real(ratio.real, digits), format_real(ratio.imag, digits)],
        "abs_ratio": format_real(abs(ratio), digits),
        "phase_over_pi": format_real(ctx.arg(ratio) / ctx.pi, digits),
        "err_estimate": max(branch.err_estimate, period.err_estimate),
        "converged": ok,
    }
    if args.format == "json":
        print(json.dumps(fields, indent=2))
    else:
        for key in ("lhs", "rhs", "ratio"):
            re, im = fields[key]
            sign, im = ("-", im[1:]) if im.startswith("-") else ("+", im)
            print(f"{key:>10}: {re} {sign} {im}i")
        print(f"{'|ratio|':>10}: {fields['abs_ratio']}")
        print(f"{'phase/pi':>10}: {fields['phase_over_pi']}")
        print(f"{'error':>10}: {fields['err_estimate']:.2e}")
    if not ok:
        print("quadrature did not converge", file=sys.stderr)
    return 0 if ok else 1


# entry point ------------------------------------------------------------

def _default_digits() -> int:
    raw = os.environ.get(ENV_DIGITS)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        return -1  # rejected by validation below


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS,
                        help=f"working precision in decimal digits (default {DEFAULT_DIGITS}, "
                             f"env {ENV_DIGITS})")
    common.add_argument("--format", choices=("text", "json", "latex"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="gammachains", description=__doc__.split("\n")[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--digits", type=int, default=None)
    parser.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("chain", parents=[common], help="minimal computation chain of p/q")
    sp.add_argument("fraction")
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("closed-form", parents=[common], help="closed form of Gamma(p/q)")
    sp.add_argument("fraction")
    sp.add_argument("--power", type=int, default=None,
                    help="report Gamma(p/q)^N instead of the natural exponent")
    sp.add_argument("--pi", action="store_true", help="render I_2 as pi in LaTeX")
    sp.set_defaults(func=cmd_closed_form)

    sp = sub.add_parser("verify", parents=[common], help="check all closed forms with q <= qmax")
    sp.add_argument("--qmax", type=int, default=8)
    sp.add_argument("--quadrature", action="store_true",
                    help="evaluate periods by quadrature instead of the Beta function")
    sp.add_argument("--report", help="also write the JSON report to this path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", parents=[common], help="table of Gamma(1/q) for q <= qmax")
    sp.add_argument("--qmax", type=int, default=8)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("period", parents=[common], help="numeric value of I_s or I_{n/k}")
    sp.add_argument("index", nargs="+", help="s, or n k")
    sp.add_argument("--quadrature", action="store_true")
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("branch-symmetry", parents=[common],
                        help="compare the chord integral from 1 to zeta_n with (1 - zeta_n) I_n / 2")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_branch_symmetry)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.digits is None:
        args.digits = _default_digits()
    if args.digits < 15:
        parser.error("--digits must be an integer >= 15")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
