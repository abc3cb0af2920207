"""Command-line front end.

    psi-grh bound   --deg N --r2 R (--disc D | --log-disc L) | --field FILE  X-SPEC [--kind K] [--T T]
    psi-grh lemma3  regenerate [--out FILE] | verify [--cert FILE]
    psi-grh psi     --field FILE --x-max X [--x-min A]
    psi-grh verify  --field FILE --kind K --from A --to B [--margin M]

X-SPEC is one of --x a,b,c / --x-range a:b:step / --x-log a:b:n.  Output is
CSV by default, JSON lines with --json.  Exit status is 0 only when every
record succeeded and every verification passed.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from psi_grh.bound_engine import bound_by_kind, corollary3_report
from psi_grh.errors import PsiGRHError
from psi_grh.field_params import FieldParams, load_field

SCHEMA_VERSION = "1"
BOUND_KINDS = ("best", "theorem1", "cor1", "cor2_general", "cor2_large", "cor3", "schoenfeld_Q")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ------------------------------------------------------------ formatting


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_val(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


class Emitter:
    def __init__(self, command: str, fields: list[str], as_json: bool, out=None):
        self.command = command
        self.fields = ["schema_version", "command"] + fields
        self.as_json = as_json
        self.out = out or sys.stdout
        self._writer = None

    def emit(self, **record):
        rec = {"schema_version": SCHEMA_VERSION, "command": self.command}
        rec.update(record)
        if self.as_json:
            self.out.write(json.dumps({k: _json_val(rec.get(k)) for k in self.fields}) + "\n")
            return
        if self._writer is None:
            self._writer = csv.writer(self.out, lineterminator="\n")
            self._writer.writerow(self.fields)
        self._writer.writerow([_fmt(rec.get(k)) for k in self.fields])


# ---------------------------------------------------------------- inputs


def _number(s: str) -> float:
    try:
        return float(Fraction(s)) if "/" in s else float(s)
    except ValueError as exc:
        raise UsageError(f"not a number: {s!r}") from exc


def parse_x_values(args) -> list[float]:
    given = [a for a in (args.x, args.x_range, args.x_log) if a is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --x, --x-range, --x-log")
    if args.x is not None:
        return [_number(t) for t in args.x.split(",") if t.strip()]
    if args.x_range is not None:
        parts = args.x_range.split(":")
        if len(parts) != 3:
            raise UsageError("--x-range expects a:b:step")
        a, b, step = (Fraction(p) for p in parts)
        if step <= 0 or b < a:
            raise UsageError("--x-range needs step > 0 and b >= a")
        count = int((b - a) / step)
        return [float(a + i * step) for i in range(count + 1)]
    parts = args.x_log.split(":")
    if len(parts) != 3:
        raise UsageError("--x-log expects a:b:n")
    a, b, n = _number(parts[0]), _number(parts[1]), int(parts[2])
    if a <= 0 or b < a or n < 1:
        raise UsageError("--x-log needs 0 < a <= b and n >= 1")
    if n == 1:
        return [a]
    la, lb = math.log(a), math.log(b)
    return [a] + [math.exp(la + (lb - la) * i / (n - 1)) for i in range(1, n - 1)] + [b]


def params_from_args(args) -> FieldParams:
    if args.field:
        if any(v is not None for v in (args.deg, args.r2, args.disc, args.log_disc)):
            raise UsageError("--field cannot be combined with --deg/--r2/--disc/--log-disc")
        return load_field(args.field).params()
    if args.deg is None:
        raise UsageError("give --field or --deg with --r2 and --disc/--log-disc")
    r2 = args.r2 or 0
    if (args.disc is None) == (args.log_disc is None):
        raise UsageError("give exactly one of --disc and --log-disc")
    L = math.log(abs(args.disc)) if args.disc is not None else args.log_disc
    return FieldParams(args.deg, args.deg - 2 * r2, r2, L)


# -------------------------------------------------------------- commands


def cmd_bound(args) -> int:
    params = params_from_args(args)
    xs = parse_x_values(args)
    em = Emitter("bound", ["x", "kind", "value", "T_used", "coef_log_disc", "coef_n", "constant", "error"],
                 args.json)
    status = EXIT_OK
    for x in xs:
        try:
            if args.kind == "cor3":
                if args.x_bar is None:
                    raise UsageError("--kind cor3 needs --x-bar")
                r = corollary3_report(x, args.x_bar, params)
            else:
                r = bound_by_kind(args.kind, x, params, args.T)
            a, b, c = r.components if r.components else (None, None, None)
            em.emit(x=x, kind=r.bound_kind, value=r.value, T_used=r.T_used,
                    coef_log_disc=a, coef_n=b, constant=c)
        except PsiGRHError as exc:
            em.emit(x=x, kind=args.kind, error=str(exc))
            status = EXIT_FAIL
    return status


def cmd_lemma3(args) -> int:
    from psi_grh.zero_bounds.certificate import (
        REFERENCE_COEFFS, reference_certificate, read_certificate, solve_certificate, write_certificate)

    if args.action == "regenerate":
        cert = solve_certificate(dps=args.dps)
        if args.out:
            write_certificate(cert, args.out)
        em = Emitter("lemma3-regenerate", ["j", "coefficient", "table_value", "match"], args.json)
        ok = len(cert.coefficients) == len(REFERENCE_COEFFS)
        for j, c in enumerate(cert.coefficients, 1):
            t = REFERENCE_COEFFS[j - 1] if j <= len(REFERENCE_COEFFS) else None
            ok &= c == t
            em.emit(j=j, coefficient=c, table_value=t, match=c == t)
        return EXIT_OK if ok else EXIT_FAIL

    from psi_grh.errors import SignPatternViolation
    from psi_grh.zero_bounds.majorization import verify_majorization
    from psi_grh.zero_bounds.prime_sum import closure_report, verify_prime_sum

    cert = read_certificate(args.cert) if args.cert else reference_certificate()
    fields = ["check", "passed", "value", "detail"]
    em = Emitter("lemma3-verify", fields, args.json)
    status = EXIT_OK
    errs = cert.validation_errors()
    em.emit(check="structure", passed=not errs, detail="; ".join(errs) or None)
    maj = verify_majorization(cert)
    em.emit(check="majorization", passed=maj.passed, value=maj.witness_gamma,
            detail=None if maj.passed else f"{maj.failed_check} fails at gamma={maj.witness_gamma!r}")
    if not maj.passed or errs:
        return EXIT_FAIL
    try:
        k = verify_prime_sum(cert)
    except SignPatternViolation as exc:
        em.emit(check="sign_pattern", passed=False, detail=str(exc))
        return EXIT_FAIL
    em.emit(check="sign_pattern", passed=True, detail=f"S(n) > 0 for n <= {cert.n_pos}, < 0 up to {cert.n_check}")
    limits = {
        "sum_a": (k.sum_a, 1.011 < k.sum_a < 1.012),
        "sum_gamma_half": (k.sum_gamma_half, k.sum_gamma_half <= -1.13),
        "sum_gamma_shift": (k.sum_gamma_shift, k.sum_gamma_shift <= -0.31),
        "sum_pole": (k.sum_pole, k.sum_pole <= 7.04),
        "prime_sum_slack": (k.prime_sum_slack, k.prime_sum_slack <= 0.12),
    }
    for name, (v, ok) in limits.items():
        em.emit(check=name, passed=ok, value=v)
        if not ok:
            status = EXIT_FAIL
    cl = closure_report(k)
    em.emit(check="closure", passed=cl.passed, value=cl.worst_degree_coeff,
            detail=f"worst signature {cl.worst_signature}")
    return status if cl.passed else EXIT_FAIL


def cmd_psi(args) -> int:
    from psi_grh.exact_psi.psi import psi_tables

    field = load_field(args.field)
    if args.x_max < args.x_min:
        raise UsageError("--x-max must be >= --x-min")
    tabs = psi_tables(field, args.x_max)
    em = Emitter("psi", ["x", "psi", "theta", "pi"], args.json)
    for x in range(args.x_min, args.x_max + 1):
        em.emit(x=x, psi=float(tabs.psi[x]), theta=float(tabs.theta[x]), pi=int(tabs.pi[x]))
    return EXIT_OK


def cmd_verify(args) -> int:
    from psi_grh.exact_psi.psi import verify_bound_on_range

    if args.to < args.from_:
        raise UsageError("--to must be >= --from")
    field = load_field(args.field)
    rep = verify_bound_on_range(field, args.kind, args.from_, args.to, args.margin, T=args.T)
    em = Emitter("verify", ["x", "psi", "theta", "pi", "bound", "margin"], args.json)
    for r in rep.rows:
        em.emit(x=r.x, psi=r.psi, theta=r.theta, pi=r.pi, bound=r.bound, margin=r.margin)
    verdict = "pass" if rep.passed else "FAIL"
    print(f"{verdict}: minimum margin {rep.min_margin:.6g} at x={rep.argmin} "
          f"(required {rep.required_margin:g})", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psi-grh", description="Explicit GRH bounds for psi_K(x).")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON lines instead of CSV")

    b = sub.add_parser("bound", help="evaluate a bound at one or more x")
    b.add_argument("--field")
    b.add_argument("--deg", type=int)
    b.add_argument("--r2", type=int)
    b.add_argument("--disc", type=int, help="|disc_K|")
    b.add_argument("--log-disc", type=float)
    b.add_argument("--x")
    b.add_argument("--x-range")
    b.add_argument("--x-log")
    b.add_argument("--kind", choices=BOUND_KINDS, default="best")
    b.add_argument("--T", type=float, help="fix T for theorem1 instead of optimizing")
    b.add_argument("--x-bar", type=float, help="lower endpoint for --kind cor3")
    add_json(b)
    b.set_defaults(func=cmd_bound)

    l3 = sub.add_parser("lemma3", help="regenerate or verify the majorant certificate")
    l3.add_argument("action", choices=("regenerate", "verify"))
    l3.add_argument("--cert", help="certificate file to verify (default: built-in table)")
    l3.add_argument("--out", help="where regenerate writes the certificate")
    l3.add_argument("--dps", type=int, default=200)
    add_json(l3)
    l3.set_defaults(func=cmd_lemma3)

    ps = sub.add_parser("psi", help="exact psi_K, theta_K, pi_K at every integer x")
    ps.add_argument("--field", required=True)
    ps.add_argument("--x-max", type=int, required=True)
    ps.add_argument("--x-min", type=int, default=1)
    add_json(ps)
    ps.set_defaults(func=cmd_psi)

    v = sub.add_parser("verify", help="check a bound against exact psi_K on an integer range")
    v.add_argument("--field", required=True)
    v.add_argument("--kind", choices=[k for k in BOUND_KINDS if k != "cor3"], required=True)
    v.add_argument("--from", dest="from_", type=int, required=True)
    v.add_argument("--to", type=int, required=True)
    v.add_argument("--margin", type=float, default=1.0)
    v.add_argument("--T", type=float)
    add_json(v)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PsiGRHError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
