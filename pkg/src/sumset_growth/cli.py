"""Command-line front end.

Exit codes:
    0  success / the checked property holds
    1  invalid sequence, or a realization or check did not match
    2  malformed input or an exceeded cap
    3  sharp realization requested for a sequence containing a zero
    4  Buchberger certificate failed and completion changed the leading ideal
"""

from __future__ import annotations

import argparse
import json
import os
import random
import shutil
import sys
import textwrap

from . import groebner, lexideal, macaulay, semigroup

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ZERO = 3
EXIT_CERT = 4


class UsageError(Exception):
    pass


def output_width() -> int:
    raw = os.environ.get("SUMSET_WIDTH")
    if raw and raw.isdigit() and int(raw) > 0:
        return int(raw)
    return shutil.get_terminal_size((100, 24)).columns


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [["-" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _wrap(label: str, items) -> str:
    body = ", ".join(map(str, items)) or "(none)"
    return textwrap.fill(
        body, width=output_width(), initial_indent=f"{label}: ", subsequent_indent=" " * (len(label) + 2)
    )


def _parse_seq(text: str) -> macaulay.BoundSequence:
    try:
        return macaulay.parse_sequence(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _apply_cap(seq, max_degree):
    if max_degree is None:
        return seq
    if max_degree < 1:
        raise UsageError("--max-degree must be >= 1")
    return macaulay.BoundSequence(seq.values[: max_degree + 1])


def _rep_pairs(rep):
    return [list(p) for p in rep.parts]


# -- bound -------------------------------------------------------------------


def cmd_bound(args, out) -> int:
    if args.upper:
        a, h = args.upper
        if a < 0 or h < 1:
            raise UsageError("--upper needs a >= 0 and h >= 1")
        value = macaulay.macaulay_upper(a, h)
        rec = {"operation": "upper", "a": a, "h": h, "value": value}
        if a >= 1:
            rep = macaulay.h_binomial_rep(a, h)
            rec["representation"] = _rep_pairs(rep)
            rec["shifted"] = [list(p) for p in rep.shifted()]
            text = f"{a} = {rep}\n{a}^<{h}> = " + " + ".join(
                f"C({x},{j})" for x, j in rep.shifted()
            ) + f" = {value}\n"
        else:
            text = f"0^<{h}> = 0\n"
    elif args.lower_inverse:
        t, h = args.lower_inverse
        if t < 1 or h < 1:
            raise UsageError("--lower-inverse needs target >= 1 and h >= 1")
        value = macaulay.macaulay_lower_inverse(t, h)
        rep = macaulay.h_binomial_rep(value, h)
        at = macaulay.macaulay_upper(value, h)
        below = macaulay.macaulay_upper(value - 1, h) if value > 1 else 0
        rec = {
            "operation": "lower-inverse",
            "target": t,
            "h": h,
            "value": value,
            "representation": _rep_pairs(rep),
            "upper_at_value": at,
            "upper_below_value": below,
        }
        text = (
            f"least a with a^<{h}> >= {t}: {value}\n"
            f"{value} = {rep}\n"
            f"{value}^<{h}> = {at}, {value - 1}^<{h}> = {below}\n"
        )
    else:
        d, i, h = args.plunnecke
        if d < 1 or i < 1 or h < 1:
            raise UsageError("--plunnecke needs positive integers")
        if i <= h:
            value = macaulay.plunnecke_upper(d, i, h)
            rec = {"operation": "plunnecke-upper", "d": d, "i": i, "h": h, "value": value}
            text = f"|{i}A| = {d}  =>  |{h}A| <= floor({d}^({h}/{i})) = {value}\n"
        else:
            value = macaulay.plunnecke_lower(d, i, h)
            rec = {"operation": "plunnecke-lower", "d": d, "i": i, "h": h, "value": value}
            text = f"|{i}A| = {d}  =>  |{h}A| >= {value}  (least a with a^({i}/{h}) >= {d})\n"
    out.write(dump_json(rec) if args.format == "json" else text)
    return EXIT_OK


# -- validate ----------------------------------------------------------------


def cmd_validate(args, out) -> int:
    seq = _apply_cap(_parse_seq(args.sequence), args.max_degree)
    report = macaulay.validate_sequence(seq)
    if args.format == "json":
        out.write(dump_json(report.to_json()))
    else:
        out.write(f"sequence: {seq}\n{report}\n")
        out.write(f"monotone: {'yes' if report.monotone else 'no'}\n")
        rows = []
        for row in semigroup.bound_report(seq):
            rows.append([row.h + 1, row.next_size, row.macaulay, "ok" if row.holds else "VIOLATED"])
        if rows:
            out.write(render_table(["h", "d_h", "d_{h-1}^<h-1>", "status"], rows))
    return EXIT_OK if report.valid else EXIT_FAIL


# -- realize -----------------------------------------------------------------


def _certify_or_complete(basis, L):
    """Return (basis to use, report of the first check, completed?, usable?)."""
    report = groebner.buchberger_check(basis)
    if report.passed:
        return groebner.certify(basis), report, False, True
    completed = groebner.buchberger_complete(basis)
    return completed, report, True, groebner.leading_ideal_agrees(completed, L)


def _build(seq):
    report = macaulay.validate_sequence(seq)
    if not report.valid:
        return None, report
    if seq.D < 1 or seq[1] == 0:
        return None, report
    return lexideal.build_lexideal(seq), report


def cmd_realize(args, out, err) -> int:
    seq = _apply_cap(_parse_seq(args.sequence), args.max_degree)
    L, report = _build(seq)
    if L is None:
        err.write(f"cannot realize {seq}: {str(report).splitlines()[0] if not report.valid else 'need d_1 >= 1'}\n")
        return EXIT_FAIL
    rec = {
        "sequence": list(seq),
        "n": L.n,
        "D": L.D,
        "segment_sizes": list(L.segment_sizes),
        "generator_counts": list(L.generator_counts()),
        "generators": {str(i): [str(g) for g in L.generators[i]] for i in range(1, L.D + 1)},
    }
    status = EXIT_OK
    if args.deform:
        if not report.all_positive:
            err.write("--deform needs every d_h >= 1; this sequence has a zero\n")
            return EXIT_ZERO
        basis = groebner.deform(L)
        used, cert, completed, usable = _certify_or_complete(basis, L)
        rec["deformed"] = [str(f) for f in basis]
        rec["certificate"] = cert.to_json()
        if completed:
            rec["completed"] = [str(f) for f in used]
            rec["leading_ideal_agrees"] = usable
            if not usable:
                status = EXIT_CERT
    if args.format == "json":
        out.write(dump_json(rec))
    else:
        out.write(f"sequence: {seq}\nn = {L.n}, D = {L.D}\n")
        out.write(render_table(
            ["degree", "|M_i|", "|L_i|", "d_i", "|G_i|"],
            [[i, macaulay.num_monomials(L.n, i), L.segment_sizes[i], seq[i], len(L.generators[i])]
             for i in range(1, L.D + 1)],
        ))
        out.write(_wrap("G", L.all_generators()) + "\n")
        if args.deform:
            out.write(_wrap("deformed", rec["deformed"]) + "\n")
            out.write(str(cert) + "\n")
            if "completed" in rec:
                out.write(_wrap("completed", rec["completed"]) + "\n")
                out.write(f"leading ideal agrees: {rec['leading_ideal_agrees']}\n")
    return status


# -- verify ------------------------------------------------------------------


def cmd_verify(args, out, err) -> int:
    seq = _apply_cap(_parse_seq(args.sequence), args.max_degree)
    L, report = _build(seq)
    if L is None:
        err.write(f"cannot realize {seq}\n")
        return EXIT_FAIL
    if args.mode == "sharp" and not report.all_positive:
        err.write("sharp realization needs every d_h >= 1; this sequence has a zero\n")
        return EXIT_ZERO

    mono = semigroup.monomial_quotient_powers(L)
    binom_sizes = None
    cert_rec = None
    status = EXIT_OK
    if report.all_positive:
        basis = groebner.deform(L)
        used, cert, completed, usable = _certify_or_complete(basis, L)
        cert_rec = cert.to_json()
        cert_rec["completed"] = completed
        cert_rec["leading_ideal_agrees"] = usable
        if usable:
            binom_sizes = semigroup.binomial_quotient_powers(used, L).sizes
        elif args.mode == "sharp":
            status = EXIT_CERT

    rows = []
    for h in range(L.D + 1):
        mac = macaulay.macaulay_upper(seq[h - 1], h - 1) if h >= 2 else None
        plun = (
            macaulay.plunnecke_upper(seq[h - 1], h - 1, h) if h >= 2 and seq[h - 1] >= 1 else None
        )
        rows.append([h, seq[h], mono[h], None if binom_sizes is None else binom_sizes[h], mac, plun])

    if status == EXIT_OK:
        if args.mode == "sharp":
            ok = binom_sizes is not None and tuple(binom_sizes) == tuple(seq)
        else:
            ok = all(seq[h] <= mono[h] <= seq[h] + 1 for h in range(L.D + 1))
        status = EXIT_OK if ok else EXIT_FAIL

    if args.format == "json":
        keys = ["h", "target", "monomial_quotient", "binomial_quotient", "macaulay_bound", "plunnecke_bound"]
        out.write(dump_json({
            "sequence": list(seq),
            "mode": args.mode,
            "rows": [dict(zip(keys, r)) for r in rows],
            "certificate": cert_rec,
            "matches": status == EXIT_OK,
        }))
    else:
        out.write(render_table(["h", "target", "monomial", "binomial", "macaulay", "plunnecke"], rows))
        if cert_rec is not None:
            out.write(f"certificate: {'pass' if cert_rec['passed'] else 'FAIL'}"
                      f"{' (completed)' if cert_rec['completed'] else ''}\n")
        verdict = {"sharp": "|A^h| = d_h", "almost": "d_h <= |A^h| <= d_h + 1"}[args.mode]
        out.write(f"{args.mode}: {verdict} for all h <= {L.D}: {'yes' if status == EXIT_OK else 'NO'}\n")
    return status


# -- additive-check ----------------------------------------------------------


def cmd_additive_check(args, out) -> int:
    if args.samples is not None:
        seed = args.seed if args.seed is not None else random.randrange(2**32)
        rep = semigroup.additive_macaulay_check(args.n, args.h, "sampled", args.samples, seed)
    else:
        try:
            rep = semigroup.additive_macaulay_check(args.n, args.h, "exhaustive")
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(dump_json(rep.to_json()))
    else:
        seed = f", seed {rep.seed}" if rep.seed is not None else ""
        out.write(
            f"n={rep.n} h={rep.h} {rep.mode}{seed}: {rep.tested} subsets, "
            f"{len(rep.violations)} violations\n"
            f"largest gap |A+B| - |A_lex+B| = {rep.max_gap} at A = {rep.max_gap_example}\n"
        )
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- oracle ------------------------------------------------------------------


def _parse_point(text: str):
    try:
        coords = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"malformed point {text!r}") from None
    return coords


def cmd_oracle(args, out) -> int:
    pts = [_parse_point(p) for p in args.points]
    if len({len(p) for p in pts}) != 1:
        raise UsageError("all points must have the same number of coordinates")
    series = semigroup.naive_sumset_powers(pts, args.max_degree)
    rows = semigroup.bound_report(series)
    ok = all(r.holds for r in rows)
    if args.format == "json":
        out.write(dump_json({
            "points": [list(p) for p in pts],
            "sizes": list(series),
            "macaulay_holds": ok,
            "bounds": [
                {"h": r.h, "d_h": r.size, "d_next": r.next_size, "macaulay": r.macaulay, "plunnecke": r.plunnecke}
                for r in rows
            ],
        }))
    else:
        out.write(f"|hA| for h = 0..{series.D}: {', '.join(map(str, series))}\n")
        out.write(render_table(
            ["h", "|hA|", "|(h+1)A|", "macaulay", "plunnecke", "status"],
            [[r.h, r.size, r.next_size, r.macaulay, r.plunnecke, "ok" if r.holds else "VIOLATED"] for r in rows],
        ))
    return EXIT_OK if ok else EXIT_FAIL


# -- wiring ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    p = _Parser(prog="sumset-growth", description="Macaulay bounds on iterated sumsets and their sharp realization.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bound", parents=[common], help="Macaulay and Plünnecke bounds")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--upper", nargs=2, type=int, metavar=("A", "H"), help="a^<h>")
    g.add_argument("--lower-inverse", nargs=2, type=int, metavar=("TARGET", "H"),
                   help="least a with a^<h> >= target")
    g.add_argument("--plunnecke", nargs=3, type=int, metavar=("D", "I", "H"),
                   help="bound on |hA| from |iA| = d (upper if i <= h, lower otherwise)")

    for name, helptext in [("validate", "check the Macaulay conditions"),
                           ("realize", "build the lexideal (and its deformation)"),
                           ("verify", "simulate the realization and compare")]:
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("sequence", help="comma-separated d_0,d_1,...,d_D")
        s.add_argument("--max-degree", type=int, default=None)
        if name == "realize":
            s.add_argument("--deform", action="store_true", help="also emit the binomial deformation")
        if name == "verify":
            s.add_argument("--mode", choices=["sharp", "almost"], default="sharp")

    a = sub.add_parser("additive-check", parents=[common], help="test |A+B| >= |A_lex+B| in N^n")
    a.add_argument("n", type=int)
    a.add_argument("h", type=int)
    m = a.add_mutually_exclusive_group()
    m.add_argument("--exhaustive", action="store_true", help="all subsets (default)")
    m.add_argument("--samples", type=int, metavar="K")
    a.add_argument("--seed", type=int, default=None)

    o = sub.add_parser("oracle", parents=[common], help="naive iterated sumsets of a point list")
    o.add_argument("points", nargs="+", help="points as comma-separated coordinates, e.g. 0 1 3 or 1,0 0,1")
    o.add_argument("-D", "--max-degree", type=int, default=5)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "bound":
            return cmd_bound(args, out)
        if args.command == "validate":
            return cmd_validate(args, out)
        if args.command == "realize":
            return cmd_realize(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        if args.command == "additive-check":
            return cmd_additive_check(args, out)
        return cmd_oracle(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
