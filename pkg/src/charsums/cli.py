"""Command line front end for the scans and checks.

Every subcommand prints a JSON array (or CSV table) of flat row objects, so
runs with equal arguments are byte-identical.  Exit codes: 0 clean, 1 bad
input, 2 a cap refused the computation, 3 a genuine violation was found (a
bound failed with its hypothesis met, or a characterization failed on an
instance where it is guaranteed to apply).
"""

import argparse
import csv
import io
import json
import sys

from .affine import parse_space_text
from .characters import build_table
from .fields import build_field
from .knormal import (
    NoDivisorError,
    artin_schreier_check,
    census_rows,
    fqp_knormal_scan,
    primitive_knormal_search,
)
from .primitive import (
    count_primitive,
    digit_search,
    grassmann_threshold,
    primitive_space_scan,
    translate_check,
)
from .sums import run_suite, violations
from .util import CapExceeded


def _parse_field(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("--field wants three comma-separated integers: p,k,n")
    try:
        p, k, n = (int(s) for s in parts)
    except ValueError:
        raise ValueError(f"--field parts must be integers, got {text!r}") from None
    return p, k, n


def _parse_dims(text, n):
    if text is None:
        return None
    try:
        dims = sorted({int(s) for s in text.split(",")})
    except ValueError:
        raise ValueError(f"--dims parts must be integers, got {text!r}") from None
    for t in dims:
        if not 1 <= t <= n:
            raise ValueError(f"dimension {t} outside [1, {n}]")
    return dims


def _parse_element(fd, text):
    try:
        coeffs = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ValueError(f"bad element text {text!r}") from None
    return fd.element(coeffs)


def _parse_prescription(text):
    pres = {}
    if not text:
        return pres
    for part in text.split(","):
        pos, sep, val = part.partition(":")
        if not sep:
            raise ValueError(f"bad prescription entry {part!r}: want pos:val")
        try:
            pos_i, val_i = int(pos), int(val)
        except ValueError:
            raise ValueError(f"bad prescription entry {part!r}: want integers") from None
        if pos_i in pres:
            raise ValueError(f"position {pos_i} prescribed twice")
        pres[pos_i] = val_i
    return pres


def _field_from(args):
    p, k, n = _parse_field(args.field)
    return build_field(p, k, n, seed=args.seed)


# ---- subcommand bodies: each returns (rows, violated) -------------------------


def cmd_verify_bounds(args):
    fd = _field_from(args)
    table = build_table(fd, seed=args.seed)
    reports = run_suite(
        table,
        mode=args.mode,
        dims=_parse_dims(args.dims, fd.n),
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
    )
    return [r.to_json_dict() for r in reports], bool(violations(reports))


def cmd_scan_primitive(args):
    fd = _field_from(args)
    if args.space:
        r = count_primitive(parse_space_text(fd, args.space))
        bad = (
            r.contains_primitive
            and not (r.condition_i or r.condition_ii)
            and fd.n <= fd.q
        )
        return [r.to_json_dict()], bad
    if args.translate:
        rep = translate_check(fd, seed=args.seed, samples=args.samples)
        row = {
            "field": rep.field,
            "tested": rep.tested,
            "exhaustive": rep.exhaustive,
            "failure_count": len(rep.failures),
            "failures": rep.failures,
        }
        return [row], bool(rep.failures)
    report = primitive_space_scan(
        fd,
        dims=_parse_dims(args.dims, fd.n),
        mode=args.mode,
        seed=args.seed,
        samples=args.samples,
        budget=args.budget,
    )
    rows = [r.to_json_dict() for r in report.results]
    return rows, bool(report.necessity_violations) and report.guaranteed


def cmd_knormal(args):
    fd = _field_from(args)
    if args.k is None:
        return [row.to_json_dict() for row in census_rows(fd)], False
    try:
        result = primitive_knormal_search(fd, args.k)
    except NoDivisorError as exc:
        # an empty candidate set is a conclusive negative answer, not an error
        row = {
            "field": fd.field_str,
            "k": args.k,
            "found": False,
            "no_divisor": True,
            "detail": str(exc),
        }
        return [row], False
    return [result.to_json_dict()], False


def cmd_fqp(args):
    rep = fqp_knormal_scan(args.q, args.p, seed=args.seed)
    rows = []
    for r in rep.results:
        row = r.to_json_dict()
        row["q"] = rep.q
        row["p"] = rep.p
        rows.append(row)
    return rows, False


def cmd_digits(args):
    fd = _field_from(args)
    if args.basis:
        basis = [_parse_element(fd, chunk) for chunk in args.basis.split("|")]
    else:
        basis = [fd.x**i for i in range(fd.n)]
    pres = _parse_prescription(args.prescribe)
    hit = digit_search(fd, basis, pres)
    row = {
        "field": fd.field_str,
        "basis": [b.text() for b in basis],
        "prescription": args.prescribe,
        "found": hit is not None,
        "witness": hit.text() if hit is not None else "",
    }
    return [row], False


def cmd_grassmann(args):
    fd = _field_from(args)
    rep = grassmann_threshold(fd, budget=args.budget)
    row = {
        "field": rep.field,
        "lower": rep.lower,
        "upper": rep.upper,
        "complete": rep.complete,
        "witness": rep.witness,
        "subfield_dim": rep.subfield_dim,
        "scanned": rep.scanned,
    }
    return [row], False


def cmd_artin_schreier(args):
    rep = artin_schreier_check(args.p, args.a)
    row = {
        "p": rep.p,
        "a": rep.a,
        "modulus": rep.modulus,
        "theta_order": rep.theta_order,
        "theta_knormal": rep.theta_knormal,
        "theta_primitive": rep.theta_primitive,
        "knormal_count": rep.knormal_count,
        **rep.search.to_json_dict(),
    }
    return [row], False


# ---- parser and emission -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master seed")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write output here, not stdout")

    fieldopt = argparse.ArgumentParser(add_help=False)
    fieldopt.add_argument("--field", required=True, help="tower as p,k,n")

    parser = _Parser(prog="charsums", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    vb = sub.add_parser(
        "verify-bounds",
        parents=[common, fieldopt],
        help="evaluate every character-sum bound over (character, space) pairs",
    )
    vb.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    vb.add_argument("--dims", default=None, help="space dimensions, e.g. 1,2")
    vb.add_argument("--samples", type=int, default=500)
    vb.add_argument("--budget", type=int, default=200_000)
    vb.set_defaults(func=cmd_verify_bounds)

    sp = sub.add_parser(
        "scan-primitive",
        parents=[common, fieldopt],
        help="census primitive elements of affine spaces against the two conditions",
    )
    sp.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    sp.add_argument("--dims", default=None)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--budget", type=int, default=200_000)
    sp.add_argument("--space", default=None, help='one space as "u=...;V=...|..."')
    sp.add_argument(
        "--translate",
        action="store_true",
        help="check theta + F_q holds a primitive element for full-degree theta",
    )
    sp.set_defaults(func=cmd_scan_primitive)

    kn = sub.add_parser(
        "knormal",
        parents=[common, fieldopt],
        help="q-order census, or primitive k-normal search with --k",
    )
    kn.add_argument("--k", type=int, default=None)
    kn.set_defaults(func=cmd_knormal)

    fq = sub.add_parser(
        "fqp",
        parents=[common],
        help="primitive k-normal searches in F_{q^p} for k = 0 .. p-2",
    )
    fq.add_argument("--q", type=int, required=True)
    fq.add_argument("--p", type=int, required=True)
    fq.set_defaults(func=cmd_fqp)

    dg = sub.add_parser(
        "digits",
        parents=[common, fieldopt],
        help="search for a primitive element with prescribed basis digits",
    )
    dg.add_argument("--prescribe", default="", help='digits as "pos:val,pos:val"')
    dg.add_argument("--basis", default=None, help='basis as "elem|elem|..."')
    dg.set_defaults(func=cmd_digits)

    gr = sub.add_parser(
        "grassmann",
        parents=[common, fieldopt],
        help="largest dimension of a primitive-free subspace",
    )
    gr.add_argument("--budget", type=int, default=100_000)
    gr.set_defaults(func=cmd_grassmann)

    ar = sub.add_parser(
        "artin-schreier",
        parents=[common],
        help="census and primitive (p-2)-normal search in F_p[x]/(x^p - x - a)",
    )
    ar.add_argument("--p", type=int, required=True)
    ar.add_argument("--a", type=int, default=None)
    ar.set_defaults(func=cmd_artin_schreier)

    return parser


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return "|".join(str(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def _emit(rows, fmt, out):
    if fmt == "json":
        text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    else:
        fields = sorted({key for row in rows for key in row})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        text = buf.getvalue()
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        rows, violated = args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(rows, args.format, args.out)
    return 3 if violated else 0


def entry():
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
