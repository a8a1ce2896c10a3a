"""Command line surface: distributions, the verification harness, tables.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
integrity error (e.g. a non-integer EGF coefficient).  The default worker
count comes from the WEYLRUNS_THREADS environment variable; --threads
overrides it.  Output for fixed inputs is byte-identical across runs and
worker counts.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .errors import DomainError, IntegrityError
from .oracle import SignedDistributionRequest, dist_runs, dist_runs_parity_split, family_poly
from .poly import UniPoly, poly_to_json


def _latex(poly) -> str:
    if isinstance(poly, UniPoly):
        if poly.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(poly.coeffs):
            if c == 0:
                continue
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{{{e}}}")
            parts.append(_latex_term(c, mono, not parts))
        return "".join(parts)
    if poly.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(poly.terms.items()):
        mono = ("p" if i == 1 else f"p^{{{i}}}" if i else "") + ("q" if j == 1 else f"q^{{{j}}}" if j else "")
        parts.append(_latex_term(c, mono, not parts))
    return "".join(parts)


def _latex_term(c: int, mono: str, leading: bool) -> str:
    mag = abs(c)
    body = mono if mag == 1 and mono else f"{mag}{mono}"
    if leading:
        return f"-{body}" if c < 0 else body
    return f" - {body}" if c < 0 else f" + {body}"


def _render_poly(poly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly_to_json(poly), sort_keys=True)
    if fmt == "latex":
        return _latex(poly)
    # csv: one term per row
    if isinstance(poly, UniPoly):
        lines = ["exp_t,coef"]
        lines += [f"{e},{c}" for e, c in enumerate(poly.coeffs) if c != 0]
    else:
        lines = ["exp_p,exp_q,coef"]
        lines += [f"{i},{j},{c}" for (i, j), c in sorted(poly.terms.items())]
    return "\n".join(lines)


def cmd_dist(args) -> int:
    signed_map = {"none": "none", "invA": "inv_a", "invB": "inv_b", "invD": "inv_d"}
    sign_statistic = signed_map[args.signed]
    if args.parity != "all":
        if args.biv or sign_statistic != "none" or args.end or args.first:
            raise DomainError("--parity plus/minus is a plain univariate split; "
                              "it excludes --biv, --signed, --end and --first")
        plus, minus = dist_runs_parity_split(args.group, args.n, workers=args.threads)
        poly = plus if args.parity == "plus" else minus
    else:
        first = {None: None, "pos": "positive", "neg": "negative"}[args.first]
        req = SignedDistributionRequest(
            args.group, args.n, sign_statistic=sign_statistic,
            end_restriction=args.end, first_letter_sign=first,
        )
        poly = dist_runs(req, "pq" if args.biv else "t", workers=args.threads)
    print(_render_poly(poly, args.format))
    return 0


def cmd_verify(args) -> int:
    report = verify_mod.run_checks(args.theorem, args.n_min, args.n_max, workers=args.threads)
    if args.format == "json":
        payload = report.to_json()
        statuses = sorted({o.status for o in report.outcomes if o.status != "ok"})
        payload["statuses"] = statuses
        print(json.dumps(payload, sort_keys=True))
    else:
        for o in report.outcomes:
            tag = "PASS" if o.passed else "FAIL"
            if o.status == verify_mod.SKIPPED:
                tag = "SKIP"
            elif o.status == verify_mod.MISMATCH_DOCUMENTED:
                tag = "NOTE"
            print(f"{tag} {o.theorem} n={o.n}: {o.detail}")
        counts = (
            sum(o.passed for o in report.outcomes),
            sum(not o.passed for o in report.outcomes),
        )
        print(f"# {counts[0]} passed, {counts[1]} failed")
    return 0 if report.ok else 1


POLY_FAMILIES = {
    "R": ("R",), "Rpm": ("R+", "R-"),
    "RB": ("RB",), "RBpm": ("RB+", "RB-"), "RBgt": ("RB>",),
    "RD": ("RD",), "RDpm": ("RD+", "RD-"), "RDgt": ("RD>",),
    "RBmD": ("RB-D",), "RBmDpm": ("RB-D+", "RB-D-"), "RBmDgt": ("RB-D>",),
}
COUNT_FAMILIES = {
    "E": ("A",), "Epm": ("A+", "A-"),
    "EB": ("B",), "EBpm": ("B+", "B-"), "ED": ("D",), "EDpm": ("D+", "D-"),
    "EBmD": ("B-D",), "EBmDpm": ("B-D+", "B-D-"),
    "S": ("B",), "SB": ("B",), "SBpm": ("B+", "B-"), "SD": ("D",), "SDpm": ("D+", "D-"),
    "SBmD": ("B-D",), "SBmDpm": ("B-D+", "B-D-"),
}


def _table_rows(family: str, n_max: int, workers):
    if family in POLY_FAMILIES:
        tokens = POLY_FAMILIES[family]
        header = ["n", "k"] + list(tokens)
        rows = []
        for n in range(1, n_max + 1):
            polys = [family_poly(tok, n, workers) for tok in tokens]
            top = max((p.degree if not p.is_zero() else 0) for p in polys)
            for k in range(0, int(top) + 1):
                coefs = [p.coeff(k) for p in polys]
                if any(coefs):
                    rows.append([n, k] + coefs)
        return header, rows
    if family in COUNT_FAMILIES:
        tokens = COUNT_FAMILIES[family]
        counter = verify_mod.snake_count if family.startswith("S") else verify_mod.alt_count
        if family.endswith("pm"):
            labels = [family[:-2] + "+", family[:-2] + "-"]
        else:
            labels = [family]
        header = ["n"] + labels
        rows = [[n] + [counter(tok, n, workers) for tok in tokens] for n in range(0, n_max + 1)]
        return header, rows
    raise DomainError(f"unknown table family {family!r}; "
                      f"choose from {sorted(POLY_FAMILIES) + sorted(COUNT_FAMILIES)}")


def cmd_table(args) -> int:
    header, rows = _table_rows(args.family, args.n_max, args.threads)
    if args.format == "json":
        body = json.dumps({"columns": header, "rows": rows}, sort_keys=True, indent=2) + "\n"
    else:
        lines = [",".join(header)] + [",".join(str(x) for x in row) for row in rows]
        body = "\n".join(lines) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(body)
    except OSError as exc:
        raise DomainError(f"cannot write {args.out}: {exc}") from exc
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylruns", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="compute a run-distribution polynomial")
    p.add_argument("--group", required=True, choices=["A", "B", "D", "B-D"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--signed", default="none", choices=["none", "invA", "invB", "invD"])
    p.add_argument("--biv", action="store_true", help="bivariate peak/valley polynomial")
    p.add_argument("--end", choices=["a", "d"], help="restrict to a final ascent or descent")
    p.add_argument("--first", choices=["pos", "neg"], help="restrict by first-letter sign")
    p.add_argument("--parity", default="all", choices=["all", "plus", "minus"])
    p.add_argument("--format", default="json", choices=["json", "csv", "latex"])
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("verify", help="run oracle-vs-formula checks")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("table", help="write a coefficient or count table")
    p.add_argument("--family", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
