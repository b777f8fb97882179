"""Command-line front end.

Exit codes: 0 on success, 1 when a verification sweep finds a failure,
2 on a usage error (bad arguments or an input outside the valid range).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .errors import FriezeLinkError
from .frieze import frieze_from_word, frieze_of, render_frieze
from .jones import extended_weight, frieze_jones, jones, jones_plus_minus, weight
from .laurent import format_poly
from .lrwords import orbit, word_of
from .rational import Fraction, cf_expand, classify_type, parents, parse_fraction, require_unit_interval
from .schubert import classes_to_csv, classify_denominator
from .tangle import bracket_of_denominator
from .verify import SUITES, resolve, run_sweeps
from .writhe import sign_sequence, writhe_principal

_WORD_RE = re.compile(r"^[LR]*$")


class UsageError(Exception):
    pass


def _fraction_arg(text: str) -> Fraction:
    try:
        alpha = parse_fraction(text)
        require_unit_interval(alpha)
    except (ValueError, FriezeLinkError) as exc:
        raise UsageError(str(exc)) from exc
    return alpha


def dump_json(rec: dict) -> str:
    """One key per line with compact values, so the output diffs cleanly."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in rec.items())
    return "{\n" + body + "\n}\n"


def _signs_text(signs) -> str:
    return " ".join(f"{s:+d}" for s in signs)


def jones_record(alpha: Fraction) -> dict:
    """The schema-stable JSON record of ``jones``."""
    v = jones(alpha)
    return {
        "alpha": str(alpha),
        "wr": writhe_principal(alpha),
        "wt": weight(alpha),
        "ext_wt": extended_weight(alpha),
        "V_A": v.poly_A.to_json()["terms"],
        "V_t": v.pretty(),
    }


def report_record(alpha: Fraction) -> dict:
    even, odd = cf_expand(alpha, "even"), cf_expand(alpha, "odd")
    left, right = parents(alpha)
    cls = frieze_jones(alpha)
    canon = cf_expand(alpha)
    return {
        "alpha": str(alpha),
        "cf_even": even.as_list(),
        "cf_odd": odd.as_list(),
        "word": str(word_of(alpha)),
        "orbit": {k: str(v) for k, v in orbit(alpha).items()},
        "orbit_size": len(set(orbit(alpha).values())),
        "type": str(classify_type(alpha)),
        "parents": [str(left), str(right)],
        "wt": weight(alpha),
        "wr": writhe_principal(alpha),
        "ext_wt": extended_weight(alpha),
        "cf_signs": canon.as_list(),
        "signs": list(sign_sequence(canon)),
        "bracket": format_poly(bracket_of_denominator(alpha)),
        "V_t": jones(alpha).pretty(),
        "jones_class": {"case": cls.case, "members": cls.pretty()},
    }


def _render_report(rec: dict) -> str:
    cf = lambda xs: "[" + ", ".join(map(str, xs)) + "]"
    o = rec["orbit"]
    lines = [
        f"alpha      = {rec['alpha']}",
        f"type       = {rec['type']}",
        f"cf (even)  = {cf(rec['cf_even'])}",
        f"cf (odd)   = {cf(rec['cf_odd'])}",
        f"word       = {rec['word'] or '(empty)'}",
        f"parents    = {rec['parents'][0]}, {rec['parents'][1]}",
        f"orbit      = id {o['id']}, i {o['i']}, r {o['r']}, ir {o['ir']}  (size {rec['orbit_size']})",
        f"wt = {rec['wt']}",
        f"wr = {rec['wr']}",
        f"ext_wt = {rec['ext_wt']}",
        f"signs      = {_signs_text(rec['signs'])}  for {cf(rec['cf_signs'])}",
        f"<D>        = {rec['bracket']}",
        f"V          = {rec['V_t']}",
        f"class      = {rec['jones_class']['case']}: " + "; ".join(rec["jones_class"]["members"]),
    ]
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    rec = report_record(_fraction_arg(args.alpha))
    sys.stdout.write(dump_json(rec) if args.json else _render_report(rec))
    return 0


def cmd_frieze(args) -> int:
    text = args.input.strip()
    as_word = args.word or (not args.fraction and _WORD_RE.match(text) is not None)
    if as_word:
        if not _WORD_RE.match(text):
            raise UsageError(f"not an LR word: {text!r}")
        f = frieze_from_word(text)
    else:
        f = frieze_of(_fraction_arg(text))
    sys.stdout.write(render_frieze(f, args.format, args.mark_max))
    return 0


def cmd_orbit(args) -> int:
    alpha = _fraction_arg(args.alpha)
    images = orbit(alpha)
    rows = [(k, str(v), str(word_of(v))) for k, v in images.items()]
    if args.json:
        out = json.dumps({k: {"fraction": f, "word": w} for k, f, w in rows}, indent=2) + "\n"
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["map", "fraction", "word"])
        w.writerows(rows)
        out = buf.getvalue()
    else:
        out = "".join(f"{k:3s} {f:>10s}  {w or '(empty)'}\n" for k, f, w in rows)
    sys.stdout.write(out)
    return 0


def cmd_jones(args) -> int:
    alpha = _fraction_arg(args.alpha)
    if args.plus_minus:
        try:
            v = jones_plus_minus(alpha)
        except FriezeLinkError as exc:
            raise UsageError(str(exc)) from exc
        if args.json:
            rec = {"alpha": str(alpha), "orientation": v.orientation,
                   "V_A": v.poly_A.to_json()["terms"], "V_t": v.pretty()}
            sys.stdout.write(dump_json(rec))
        else:
            sys.stdout.write(f"V+-({alpha}) = {v.pretty()}\n")
        return 0
    rec = jones_record(alpha)
    if args.json:
        sys.stdout.write(dump_json(rec))
    else:
        sys.stdout.write(f"wr = {rec['wr']}, wt = {rec['wt']}, ext_wt = {rec['ext_wt']}\n")
        sys.stdout.write(f"V({alpha}) = {rec['V_t']}\n")
    return 0


def cmd_classify(args) -> int:
    if args.q < 2:
        raise UsageError(f"q must be at least 2, got {args.q}")
    classes = classify_denominator(args.q)
    if args.csv:
        sys.stdout.write(classes_to_csv(classes))
    elif args.json:
        rec = [{"q": c.q, "members": c.sorted_members(), "size": c.size,
                "representative": c.representative} for c in classes]
        sys.stdout.write(json.dumps(rec, indent=2) + "\n")
    else:
        for c in classes:
            members = ", ".join(f"{p}/{c.q}" for p in c.sorted_members())
            sys.stdout.write(f"{{{members}}}\n")
        sys.stdout.write(f"{len(classes)} classes\n")
    return 0


def cmd_verify(args) -> int:
    if args.max_q is not None and args.max_q < 2:
        raise UsageError("--max-q must be at least 2")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    names = args.suite or list(SUITES)
    for name in names:
        try:
            resolve(name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
    report = run_sweeps(names, args.max_q, args.jobs)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.render() + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="friezelink", description=(
        "Friezes of zigzag type, rational links and their Jones polynomials."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="everything computed for one fraction")
    p.add_argument("alpha", help="fraction p/q in (0, 1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("frieze", help="render the frieze of an LR word or a fraction")
    p.add_argument("input", help="LR word (may be empty) or fraction p/q")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--word", action="store_true", help="read the input as an LR word")
    kind.add_argument("--fraction", action="store_true", help="read the input as a fraction")
    p.add_argument("--format", choices=("ascii", "markdown", "json"), default="ascii")
    p.add_argument("--mark-max", action="store_true", help="mark the maximum and its four neighbours")
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("orbit", help="alpha and its images under i, r, ir")
    p.add_argument("alpha")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("jones", help="Jones polynomial of the rational link of alpha")
    p.add_argument("alpha")
    p.add_argument("--plus-minus", action="store_true", help="reverse one component (even q only)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("classify", help="classes of rational links with denominator q")
    p.add_argument("q", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the verification sweeps")
    p.add_argument("--max-q", type=int, default=None, help="denominator bound (default: per suite)")
    p.add_argument("--suite", action="append", help="suite name, repeatable (default: all)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except KeyboardInterrupt:
        sys.stderr.write("interrupted\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
