"""Command-line front end.

Exit status: 0 on success, 2 on malformed arguments, 3 when a certificate
or identity check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .doublecover import CertificateError, ConstructionCertificate, curve_probes
from .family import ADMISSIBLE, Region, audit_noether_chain, certify, classify, enumerate_certificates
from .hirzebruch import SurfaceDivisorClass, cohomology, is_base_point_free, is_nef, is_very_ample
from .hirzebruch import format_linear, parse_surface_class
from .exactring import parse
from .identities import verify_identities
from .pbundle import BundleGeometry

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

FORMATS = ("json", "csv", "table")
ROW_COLUMNS = ("e", "a", "region", "kobayashi", "K3", "pg", "k", "degSigma", "slack")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``lo..hi`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected lo..hi") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _render_table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _render_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render_rows(header, rows, fmt: str) -> str:
    if fmt == "csv":
        return _render_csv(header, rows)
    if fmt == "table":
        return _render_table(header, rows)
    return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"


def certificate_row(cert: ConstructionCertificate) -> list:
    return [cert.e, cert.a, cert.region, str(bool(cert.kobayashi_subfamily)).lower(), cert.K_cubed,
            cert.p_g, cert.k, cert.deg_Sigma, _fraction_text(cert.noether_slack)]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# subcommands


def run_invariants(args) -> tuple[str, int]:
    e, a = args.e, args.a
    if e < 0:
        raise UsageError("--e must be >= 0")
    if a < 0 and not args.explore:
        raise UsageError("negative --a needs --explore")
    if not classify(e, a).admissible and not args.explore:
        raise UsageError(f"({e}, {a}) is {classify(e, a).region.value}; pass --explore to inspect it")
    cert = certify(e, a, explore=args.explore)
    if args.format == "json":
        out = _dump(cert.to_json())
    elif args.format == "csv":
        out = _render_csv(ROW_COLUMNS, [certificate_row(cert)])
    else:
        flat = cert.to_json()
        rows = []
        for key, value in flat.items():
            if isinstance(value, dict) and key not in ("noether_slack",):
                if set(value) == {"alpha", "beta"}:
                    rows.append((key, format_linear(((value["alpha"], "s"), (value["beta"], "l")))))
                else:
                    rows.extend((f"{key}[{k}]", json.dumps(v)) for k, v in value.items())
            elif key == "noether_slack":
                rows.append((key, _fraction_text(cert.noether_slack)))
            elif key == "pushforward_summands":
                rows.append((key, " + ".join(f"O({c})" for c in cert.pushforward_summands)))
            else:
                rows.append((key, json.dumps(value)))
        width = max(len(k) for k, _ in rows)
        out = "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)
    if not cert.checks_pass:
        failed = sorted(name for name, ok in cert.branch_checks.items() if not ok)
        if cert.noether_slack != 0:
            failed.append(f"noether_slack={_fraction_text(cert.noether_slack)}")
        print(f"noetherline: ({e}, {a}) failed checks: {', '.join(failed)}", file=sys.stderr)
        return out, EXIT_FAILURE
    return out, EXIT_OK


def run_enumerate(args) -> tuple[str, int]:
    e_range = parse_range(args.e_range)
    a_range = parse_range(args.a_range)
    if e_range.start < 0:
        raise UsageError("e must be >= 0")
    if a_range.start < 0 and not args.explore:
        raise UsageError("negative a needs --explore")
    regions = {Region(r) for r in args.region} if args.region else ADMISSIBLE
    certs = enumerate_certificates(e_range, a_range, regions, explore=args.explore)
    status = EXIT_OK if all(c.checks_pass for c in certs) else EXIT_FAILURE
    if args.format == "json":
        return _dump([c.to_json() for c in certs]), status
    rows = [certificate_row(c) for c in certs]
    return _render_rows(ROW_COLUMNS, rows, args.format), status


def run_cohomology(args) -> tuple[str, int]:
    if args.e < 0:
        raise UsageError("--e must be >= 0")
    if args.divisor is not None:
        try:
            d = parse_surface_class(args.divisor)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.alpha is None or args.beta is None:
            raise UsageError("give --class, or both --alpha and --beta")
        try:
            d = SurfaceDivisorClass(parse(args.alpha), parse(args.beta))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.a is None and d.evaluate(args.e, 0) != d.evaluate(args.e, 1):
        raise UsageError("class depends on a; pass --a")
    d = d.evaluate(args.e, args.a if args.a is not None else 0)
    table = cohomology(d, args.e)
    alpha, beta = d.concrete()
    result = {
        "e": args.e,
        "class": {"alpha": alpha, "beta": beta},
        "h0": table.h0,
        "h1": table.h1,
        "h2": table.h2,
        "chi": table.chi,
        "nef": is_nef(d, args.e),
        "base_point_free": is_base_point_free(d, args.e),
        "very_ample": is_very_ample(d, args.e),
    }
    return _render_mapping(result, args.format), EXIT_OK


def run_probe(args) -> tuple[str, int]:
    if args.e < 0:
        raise UsageError("--e must be >= 0")
    table = curve_probes(BundleGeometry(args.e, args.a))
    return _render_mapping({"e": args.e, "a": args.a, **table}, args.format), EXIT_OK


def run_audit_chain(args) -> tuple[str, int]:
    if args.e is not None or args.a is not None:
        if args.e is None or args.a is None:
            raise UsageError("--e and --a go together")
        if args.e < 0:
            raise UsageError("--e must be >= 0")
        cert = certify(args.e, args.a, explore=True)
        pg, d_sigma, gamma = cert.p_g, cert.deg_Sigma, Fraction(cert.p_g - 4, 3)
    else:
        if args.pg is None or args.d_sigma is None or args.gamma is None:
            raise UsageError("give --pg, --d-sigma and --gamma, or --e and --a")
        try:
            pg, d_sigma, gamma = args.pg, args.d_sigma, Fraction(args.gamma)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        report = audit_noether_chain(pg, d_sigma, gamma, Fraction(args.remainder))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK if all(link.holds for link in report.links) else EXIT_FAILURE
    if args.format == "json":
        return _dump({"p_g": pg, "d_sigma": d_sigma, "gamma_degree": _fraction_text(gamma),
                      "links": report.to_json(), "on_noether_line": report.on_noether_line}), status
    rows = [(link.name, _fraction_text(link.left), _fraction_text(link.right),
             _fraction_text(link.slack), str(link.tight).lower()) for link in report.links]
    return _render_rows(("link", "left", "right", "slack", "tight"), rows, args.format), status


def run_verify_identities(args, identities=None) -> tuple[str, int]:
    results = verify_identities() if identities is None else verify_identities(identities)
    status = EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE
    if args.format == "json":
        return _dump([{"name": r.name, "passed": r.passed, "residual": r.residual} for r in results]), status
    if args.format == "csv":
        return _render_csv(("identity", "status", "residual"),
                           [(r.name, "PASS" if r.passed else "FAIL", r.residual) for r in results]), status
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + ("" if r.passed else f"  residual: {r.residual}")
             for r in results]
    return "\n".join(lines) + "\n", status


def _render_mapping(mapping: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(mapping)
    flat = {}
    for k, v in mapping.items():
        if isinstance(v, dict):
            flat.update({f"{k}.{kk}": vv for kk, vv in v.items()})
        else:
            flat[k] = v
    flat = {k: (str(v).lower() if isinstance(v, bool) else v) for k, v in flat.items()}
    if fmt == "csv":
        return _render_csv(list(flat), [list(flat.values())])
    width = max(len(k) for k in flat)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in flat.items())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="noetherline", description="Invariants of 3-folds on the Noether line.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p, default="table"):
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("invariants", help="certificate for one pair (e, a)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--explore", action="store_true", help="allow pairs outside the classified region")
    fmt(p, "json")
    p.set_defaults(func=run_invariants)

    p = sub.add_parser("enumerate", help="certificates over a grid of pairs")
    p.add_argument("--e", "--e-range", dest="e_range", required=True, metavar="LO..HI")
    p.add_argument("--a", "--a-range", dest="a_range", required=True, metavar="LO..HI")
    p.add_argument("--region", action="append", choices=[r.value for r in Region],
                   help="regions to include (repeatable); default: the three admissible regions")
    p.add_argument("--explore", action="store_true")
    fmt(p)
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("cohomology", help="line-bundle cohomology on Sigma_e")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--a", type=int, help="value substituted for a in the coefficients")
    p.add_argument("--alpha", help="coefficient of s")
    p.add_argument("--beta", help="coefficient of l")
    p.add_argument("--class", dest="divisor", help="class as 'alpha*s + beta*l'")
    fmt(p)
    p.set_defaults(func=run_cohomology)

    p = sub.add_parser("probe", help="intersection numbers against the probe curves")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    fmt(p)
    p.set_defaults(func=run_probe)

    p = sub.add_parser("audit-chain", help="slack in each link of the Noether-inequality chain")
    p.add_argument("--pg", type=int)
    p.add_argument("--d-sigma", type=int)
    p.add_argument("--gamma", help="degree on the section curve, e.g. 5/3")
    p.add_argument("--remainder", default="0", help="aggregate of the nonnegative remainder terms")
    p.add_argument("--e", type=int)
    p.add_argument("--a", type=int)
    fmt(p)
    p.set_defaults(func=run_audit_chain)

    p = sub.add_parser("verify-identities", help="check the symbolic identities in Z[e, a]")
    fmt(p)
    p.set_defaults(func=run_verify_identities)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out, status = args.func(args)
    except UsageError as exc:
        print(f"noetherline: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificateError as exc:
        print(f"noetherline: certificate failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
