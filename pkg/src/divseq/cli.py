"""Command line front end.

Subcommands: terms, lcmseq, invert, verify, cyclotomic, psi, wnbei,
catalog.  Sequences come from the built-in catalog (--sequence NAME,
parameters via repeated --param k=v) or from a terms file (--input).
Output is text, json, or csv (--format), to stdout or --out.

Exit codes: 0 for a completed run, including a verification that found
a counterexample; 1 for usage errors; 2 for domain or internal errors.
The environment variable DIVSEQ_MAX_TERMS (default 512) caps every
term-count and index argument.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .catalog import (
    CATALOG,
    builtin,
    catalog_names,
    cyclotomic_phi,
    cyclotomic_phi_at,
    psi,
)
from .errors import (
    DivseqError,
    DomainError,
    InexactDivision,
    InternalError,
    UsageError,
)
from .ring import RingElement
from .sequences import (
    SequenceSpec,
    VerificationReport,
    check_strong_divisibility,
    lcm_sequence,
    materialize,
    mobius_invert,
    read_terms_file,
    verify_equivalence,
    wnbei_quotient,
)

_DEFAULT_CAP = 512


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through UsageError
    # so the exit-code contract (usage -> 1) holds.
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="divseq", description=__doc__, add_help=True)
    parser.add_argument("--version", action="version", version=f"divseq {__version__}")
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")

    out_opts = _Parser(add_help=False)
    out_opts.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    out_opts.add_argument("--out", metavar="FILE", help="write output to FILE")

    seq_opts = _Parser(add_help=False)
    seq_opts.add_argument("--sequence", metavar="NAME", help="catalog sequence name")
    seq_opts.add_argument(
        "--param", action="append", default=[], metavar="K=V",
        help="sequence parameter, repeatable",
    )
    seq_opts.add_argument(
        "--input", metavar="FILE", help="read explicit terms from FILE"
    )

    terms_opts = _Parser(add_help=False)
    terms_opts.add_argument(
        "--terms", type=int, default=40, metavar="N",
        help="number of terms (default 40)",
    )

    sub.add_parser(
        "terms", parents=[seq_opts, terms_opts, out_opts],
        help="generate canonical terms a_1..a_N",
    )
    sub.add_parser(
        "lcmseq", parents=[seq_opts, terms_opts, out_opts],
        help="running lcms e_n and quotients c_n",
    )
    sub.add_parser(
        "invert", parents=[seq_opts, terms_opts, out_opts],
        help="Mobius inversion of a divisor-product sequence",
    )
    sub.add_parser(
        "verify", parents=[seq_opts, terms_opts, out_opts],
        help="check strong divisibility and the divisor-product identity",
    )
    cyc = sub.add_parser(
        "cyclotomic", parents=[out_opts],
        help="n-th cyclotomic polynomial via the lcm quotient",
    )
    cyc.add_argument("--n", type=int, required=True, metavar="N")
    cyc.add_argument(
        "--at", type=int, metavar="B",
        help="evaluate at integer base B >= 2 (computed inside the integers)",
    )
    psi_p = sub.add_parser(
        "psi", parents=[out_opts],
        help="homogenized cyclotomic polynomial in x and y",
    )
    psi_p.add_argument("--n", type=int, required=True, metavar="N")
    wn = sub.add_parser(
        "wnbei", parents=[seq_opts, out_opts],
        help="c_n two ways: lcm quotient and a_n over lcm of a_(n/p)",
    )
    wn.add_argument("--n", type=int, required=True, metavar="N")
    sub.add_parser(
        "catalog", parents=[out_opts], help="list built-in sequences"
    )
    return parser


def _max_terms() -> int:
    raw = os.environ.get("DIVSEQ_MAX_TERMS")
    if raw is None:
        return _DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"DIVSEQ_MAX_TERMS must be an integer, got {raw!r}")
    if cap < 1:
        raise UsageError(f"DIVSEQ_MAX_TERMS must be positive, got {cap}")
    return cap


def _checked_count(value: int, flag: str, minimum: int = 1) -> int:
    if value < minimum:
        raise UsageError(f"{flag} must be >= {minimum}, got {value}")
    cap = _max_terms()
    if value > cap:
        raise UsageError(f"{flag} {value} exceeds DIVSEQ_MAX_TERMS ({cap})")
    return value


def _parse_params(pairs) -> dict[str, int]:
    params = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise UsageError(f"--param expects K=V, got {item!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {value!r}")
    return params


def _sequence_from_args(args) -> SequenceSpec:
    if (args.sequence is None) == (args.input is None):
        raise UsageError("exactly one of --sequence or --input is required")
    if args.input is not None:
        if args.param:
            raise UsageError("--param only applies to --sequence")
        return read_terms_file(args.input)
    return builtin(args.sequence, _parse_params(args.param))


def _ring_directive(ring) -> str:
    return "INT" if ring.depth == 0 else " ".join(ring.variables)


def _cell(value: RingElement):
    # QUOTE_NONNUMERIC quotes strings; keep integers bare.
    return int(value) if value.ring.depth == 0 else str(value)


def _csv_rows(header: str, rows) -> str:
    buf = io.StringIO()
    buf.write(header + "\n")
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json_doc(command: str, options: dict, payload: dict) -> str:
    doc = {
        "tool": "divseq",
        "version": __version__,
        "command": command,
        "options": options,
    }
    doc.update(payload)
    return json.dumps(doc, indent=2) + "\n"


def _witness_json(report: VerificationReport):
    if report.witness is None:
        return None
    w = report.witness
    return {
        "indices": list(w.indices),
        "found": w.found,
        "expected": w.expected,
        "note": w.note,
    }


def _report_line(label: str, report: VerificationReport) -> str:
    if report.holds:
        return f"{label}: ok, checked {report.checked_terms} terms"
    w = report.witness
    at = ", ".join(str(i) for i in w.indices)
    return f"{label}: FAIL at ({at}): {w.note} (found {w.found}, expected {w.expected})"


def _seq_options(args, spec: SequenceSpec, n_terms: int | None) -> dict:
    opts = {
        "sequence": args.sequence,
        "params": _parse_params(args.param) if args.sequence else {},
        "input": args.input,
        "ring": str(spec.ring),
    }
    if n_terms is not None:
        opts["terms"] = n_terms
    return opts


def _cmd_terms(args) -> str:
    spec = _sequence_from_args(args)
    n = _checked_count(args.terms, "--terms")
    a = materialize(spec, n)
    if args.format == "text":
        lines = [f"# ring: {_ring_directive(spec.ring)}"]
        lines += [str(t) for t in a]
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        return _csv_rows("n,a_n", ((i, _cell(t)) for i, t in enumerate(a, 1)))
    return _json_doc(
        "terms",
        _seq_options(args, spec, n),
        {"terms_out": [str(t) for t in a]},
    )


def _cmd_lcmseq(args) -> str:
    spec = _sequence_from_args(args)
    n = _checked_count(args.terms, "--terms")
    seq = lcm_sequence(spec, n)
    if args.format == "text":
        lines = ["n\ta_n\te_n\tc_n"]
        for i in range(n):
            lines.append(f"{i + 1}\t{seq.a[i]}\t{seq.e[i]}\t{seq.c[i]}")
        lines.append(f"e_final\t{seq.e[n]}")
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        rows = (
            (i + 1, _cell(seq.a[i]), _cell(seq.e[i]), _cell(seq.c[i]))
            for i in range(n)
        )
        return _csv_rows("n,a_n,e_n,c_n", rows)
    return _json_doc(
        "lcmseq",
        _seq_options(args, spec, n),
        {
            "a": [str(t) for t in seq.a],
            "e": [str(t) for t in seq.e[:n]],
            "e_final": str(seq.e[n]),
            "c": [str(t) for t in seq.c],
        },
    )


def _cmd_invert(args) -> str:
    spec = _sequence_from_args(args)
    n = _checked_count(args.terms, "--terms")
    inv = mobius_invert(spec, n)
    if args.format == "text":
        lines = ["n\tb_n"]
        for i, t in enumerate(inv.b, 1):
            lines.append(f"{i}\t{t if t is not None else '(not exact)'}")
        if inv.first_inexact is None:
            lines.append("all divisions exact")
        else:
            lines.append(f"first inexact division at n={inv.first_inexact}")
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        rows = (
            (i, _cell(t) if t is not None else "")
            for i, t in enumerate(inv.b, 1)
        )
        return _csv_rows("n,b_n", rows)
    return _json_doc(
        "invert",
        _seq_options(args, spec, n),
        {
            "b": [str(t) if t is not None else None for t in inv.b],
            "exact": list(inv.exact),
            "first_inexact": inv.first_inexact,
        },
    )


def _cmd_verify(args) -> str:
    spec = _sequence_from_args(args)
    n = _checked_count(args.terms, "--terms")
    report = verify_equivalence(spec, n)
    gcd_r, prod_r = report.gcd_condition, report.product_condition
    if args.format == "text":
        lines = [
            f"sequence: {spec.describe()}",
            f"terms: {n}",
            _report_line("strong_divisibility", gcd_r),
            _report_line("divisor_product", prod_r),
            f"holds: {'true' if report.holds else 'false'}",
        ]
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        rows = []
        for r in (gcd_r, prod_r):
            w = r.witness
            rows.append(
                (
                    r.name,
                    str(r.holds).lower(),
                    " ".join(str(i) for i in w.indices) if w else "",
                    w.found if w else "",
                    w.expected if w else "",
                )
            )
        return _csv_rows("check,holds,indices,found,expected", rows)
    return _json_doc(
        "verify",
        _seq_options(args, spec, n),
        {
            "holds": report.holds,
            "checks": {
                gcd_r.name: {
                    "holds": gcd_r.holds,
                    "witness": _witness_json(gcd_r),
                },
                prod_r.name: {
                    "holds": prod_r.holds,
                    "witness": _witness_json(prod_r),
                },
            },
        },
    )


def _cmd_cyclotomic(args) -> str:
    n = _checked_count(args.n, "--n")
    if args.at is not None:
        value = cyclotomic_phi_at(n, args.at)
        if args.format == "text":
            return f"{value}\n"
        if args.format == "csv":
            return _csv_rows("n,b,value", [(n, args.at, value)])
        return _json_doc(
            "cyclotomic", {"n": n, "at": args.at}, {"value": value}
        )
    phi = cyclotomic_phi(n)
    if args.format == "text":
        return f"{phi}\n"
    if args.format == "csv":
        return _csv_rows("n,phi_n", [(n, str(phi))])
    return _json_doc(
        "cyclotomic",
        {"n": n, "at": None},
        {"ring": str(phi.ring), "phi": str(phi)},
    )


def _cmd_psi(args) -> str:
    n = _checked_count(args.n, "--n")
    value = psi(n)
    if args.format == "text":
        return f"{value}\n"
    if args.format == "csv":
        return _csv_rows("n,psi_n", [(n, str(value))])
    return _json_doc(
        "psi", {"n": n}, {"ring": str(value.ring), "psi": str(value)}
    )


def _cmd_wnbei(args) -> str:
    spec = _sequence_from_args(args)
    n = _checked_count(args.n, "--n", minimum=2)
    sd = check_strong_divisibility(spec, n)
    if not sd.holds:
        w = sd.witness
        at = ", ".join(str(i) for i in w.indices)
        raise DomainError(
            f"{spec.describe()} is not strongly divisible up to {n}: "
            f"{w.note} at ({at})"
        )
    try:
        left, right = wnbei_quotient(spec, n)
        c_n = lcm_sequence(spec, n).c[n - 1]
    except InexactDivision as exc:
        raise InternalError(
            f"inexact division on a verified strong divisibility sequence: {exc}"
        ) from exc
    agree = left == right == c_n
    if not agree:
        raise InternalError(
            f"quotient identity violated for {spec.describe()} at n={n}: "
            f"left {left}, right {right}, c_n {c_n}"
        )
    if args.format == "text":
        lines = [f"left: {left}", f"right: {right}", f"c_n: {c_n}", "agree: true"]
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        return _csv_rows(
            "n,left,right,c_n", [(n, _cell(left), _cell(right), _cell(c_n))]
        )
    return _json_doc(
        "wnbei",
        _seq_options(args, spec, None) | {"n": n},
        {"left": str(left), "right": str(right), "c_n": str(c_n), "agree": True},
    )


def _cmd_catalog(args) -> str:
    entries = [CATALOG[name] for name in catalog_names()]
    if args.format == "text":
        lines = []
        for e in entries:
            params = ", ".join(p.name for p in e.params) or "-"
            ring = str(e.ring({p.name: 2 for p in e.params}))
            flag = "yes" if e.strongly_divisible else "no"
            lines.append(f"{e.name}\t{ring}\tstrong_divisible={flag}\tparams={params}")
            lines.append(f"\t{e.doc}")
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        rows = []
        for e in entries:
            ring = str(e.ring({p.name: 2 for p in e.params}))
            rows.append(
                (
                    e.name,
                    ring,
                    str(e.strongly_divisible).lower(),
                    " ".join(p.name for p in e.params),
                )
            )
        return _csv_rows("name,ring,strongly_divisible,params", rows)
    listing = []
    for e in entries:
        listing.append(
            {
                "name": e.name,
                "ring": str(e.ring({p.name: 2 for p in e.params})),
                "strongly_divisible": e.strongly_divisible,
                "params": [{"name": p.name, "doc": p.doc} for p in e.params],
                "doc": e.doc,
                "note": e.note,
            }
        )
    return _json_doc("catalog", {}, {"sequences": listing})


_COMMANDS = {
    "terms": _cmd_terms,
    "lcmseq": _cmd_lcmseq,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
    "cyclotomic": _cmd_cyclotomic,
    "psi": _cmd_psi,
    "wnbei": _cmd_wnbei,
    "catalog": _cmd_catalog,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse argv, execute, render; returns the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand is None:
            raise UsageError("a subcommand is required (see --help)")
        rendered = _COMMANDS[args.subcommand](args)
        if getattr(args, "out", None):
            try:
                with open(args.out, "w", newline="") as fh:
                    fh.write(rendered)
            except OSError as exc:
                raise UsageError(f"cannot write {args.out}: {exc}")
        else:
            out.write(rendered)
        return 0
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except DivseqError as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
