"""Command-line front end.

Exit status: 0 on success, 1 on usage or parse errors, 2 when the run
completed but some closed form disagreed with a computed value.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import classify, delpezzo
from .coords import FactorProfile, format_coord, format_profile, parse_profile
from .flatten import build_flattening, emit_minors, enumerate_splits, flattening_shape
from .numeric import DEFAULT_PRIME, FieldConfig
from .poly import SparsePoly, parse_poly
from .secant import independent_count, secant_report, verify_rank_bound, verify_vanishing

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3"`` or ``"2..5"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad secant range {text!r}") from exc
    if lo < 1 or hi < lo:
        raise UsageError(f"bad secant range {text!r}")
    return list(range(lo, hi + 1))


def parse_split(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad split {text!r}") from exc


# ---------------------------------------------------------------- equation files


@dataclass
class EquationFile:
    profile: FactorProfile
    header: dict
    polys: list[SparsePoly]


def write_equations(profile: FactorProfile, header: dict, polys: Sequence[SparsePoly]) -> str:
    fields = {"profile": format_profile(profile), **header}
    lines = ["# " + " ".join(f"{k}={v}" for k, v in fields.items())]
    lines.extend(f.to_text(profile) for f in polys)
    return "\n".join(lines) + "\n"


def read_equations(text: str) -> EquationFile:
    header: dict = {}
    body = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            for item in line[1:].split():
                if "=" not in item:
                    raise UsageError(f"bad header item {item!r}")
                k, v = item.split("=", 1)
                header[k] = v
        else:
            body.append(line)
    if "profile" not in header:
        raise UsageError("equation file has no profile header")
    profile = parse_profile(header.pop("profile"))
    try:
        polys = [parse_poly(profile, line) for line in body]
    except ValueError as exc:
        raise UsageError(f"bad polynomial line: {exc}") from exc
    return EquationFile(profile, header, polys)


# ---------------------------------------------------------------- output helpers


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    out.extend("  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells)
    return "\n".join(out) + "\n"


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v) if v else "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) if isinstance(r.get(c), (list, tuple)) else ("" if r.get(c) is None else r.get(c)) for c in columns])
    return buf.getvalue()


def render(doc: dict, rows: list[dict], columns: list[str], fmt: str, title: str = "") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _csv(rows, columns)
    return (title + "\n" if title else "") + _table(rows, columns)


def _config(args) -> FieldConfig:
    try:
        return FieldConfig(p=args.prime, seed=args.seed, trials=args.trials)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _config_doc(cfg: FieldConfig) -> dict:
    return {"prime": cfg.p, "seed": cfg.seed, "trials": cfg.trials}


def _profile(args) -> FactorProfile:
    if not args.profile:
        raise UsageError("a profile is required (-p/--profile)")
    try:
        return parse_profile(args.profile)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------- commands


ANALYZE_COLUMNS = ["s", "ambient", "expected_dim", "oracle_dim", "defect", "unbalanced_case", "closed_form_defect", "flags"]


def cmd_analyze(args) -> tuple[str, int]:
    profile = _profile(args)
    cfg = _config(args)
    svals = parse_range(args.secant or "1")
    reports = [secant_report(profile, s, cfg) for s in svals]
    rows = [r.to_dict() for r in reports]
    doc = {"schema": SCHEMA, "command": "analyze", "profile": format_profile(profile), "config": _config_doc(cfg), "rows": rows}
    status = 2 if any(set(r.flags) & classify.DISCREPANCY_FLAGS for r in reports) else 0
    return render(doc, rows, ANALYZE_COLUMNS, args.format, f"profile {format_profile(profile)}  N={profile.ambient_dim}  dim={profile.dim}"), status


def cmd_flatten(args) -> tuple[str, int]:
    profile = _profile(args)
    if args.split is None:
        splits = enumerate_splits(profile)
        rows = [{"split": list(s), "rows": flattening_shape(profile, s)[0], "cols": flattening_shape(profile, s)[1]} for s in splits]
        census: dict[str, int] = {}
        for r in rows:
            key = f"{r['rows']}x{r['cols']}"
            census[key] = census.get(key, 0) + 1
        census = dict(sorted(census.items(), key=lambda kv: -kv[1]))
        doc = {"schema": SCHEMA, "command": "flatten", "profile": format_profile(profile), "splits": rows, "census": census}
        if args.format == "text":
            summary = ", ".join(f"{v} of {k}" for k, v in census.items())
            return f"profile {format_profile(profile)}: {len(rows)} splits: {summary}\n" + _table(rows, ["split", "rows", "cols"]), 0
        return render(doc, rows, ["split", "rows", "cols"], args.format), 0
    try:
        F = build_flattening(profile, parse_split(args.split))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    names = [[format_coord(profile, int(v)) for v in row] for row in F.entries]
    doc = {
        "schema": SCHEMA,
        "command": "flatten",
        "profile": format_profile(profile),
        "split": list(F.split),
        "shape": list(F.shape),
        "entries": names,
    }
    if args.format == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n", 0
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(names)
        return buf.getvalue(), 0
    width = max(len(x) for row in names for x in row)
    text = f"{F.shape[0]}x{F.shape[1]} flattening of {format_profile(profile)}, split {','.join(map(str, F.split))}\n"
    return text + "\n".join("  ".join(x.ljust(width) for x in row).rstrip() for row in names) + "\n", 0


def cmd_equations(args) -> tuple[str, int]:
    profile = _profile(args)
    if args.split is None:
        raise UsageError("equations needs --split")
    s = _single_s(args)
    try:
        F = build_flattening(profile, parse_split(args.split))
        total, stream = emit_minors(F, s + 1, args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    polys = [f for _, _, f in stream]
    header = {
        "split": ",".join(map(str, F.split)),
        "s": s,
        "minor_size": s + 1,
        "count": len(polys),
        "total": total,
        "truncated": str(len(polys) < total).lower(),
    }
    return write_equations(profile, header, polys), 0


def _single_s(args) -> int:
    svals = parse_range(args.secant or "")
    if len(svals) != 1:
        raise UsageError("this command takes a single secant order -s")
    return svals[0]


def cmd_verify(args) -> tuple[str, int]:
    cfg = _config(args)
    s = _single_s(args)
    doc: dict = {"schema": SCHEMA, "command": "verify", "s": s, "config": _config_doc(cfg)}
    rows = []
    if args.equations:
        files = []
        for path in args.equations:
            try:
                with open(path) as fh:
                    files.append(read_equations(fh.read()))
            except OSError as exc:
                raise UsageError(str(exc)) from exc
        profile = files[0].profile
        if any(f.profile != profile for f in files):
            raise UsageError("equation files use different profiles")
        polys = [p for f in files for p in f.polys]
        vanish = verify_vanishing(polys, profile, s, cfg)
        try:
            span = independent_count(polys, profile, cfg)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        doc.update(profile=format_profile(profile), polynomials=len(polys), vanishes=vanish, independent=span)
        rows.append({"check": "vanishing", "polynomials": len(polys), "result": vanish})
        rows.append({"check": "independent_count", "polynomials": len(polys), "result": span})
    elif args.split is not None:
        profile = _profile(args)
        try:
            rb = verify_rank_bound(profile, parse_split(args.split), s, cfg)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        doc.update(profile=format_profile(profile), split=list(parse_split(args.split)), holds=rb.holds,
                   max_rank=rb.max_rank, constrained=rb.constrained, shape=list(rb.shape))
        rows.append({"check": "rank_bound", "shape": f"{rb.shape[0]}x{rb.shape[1]}", "max_rank": rb.max_rank,
                     "result": rb.holds, "note": None if rb.constrained else "no constraint"})
    else:
        raise UsageError("verify needs --equations FILE or --split")
    columns = sorted({k for r in rows for k in r}, key=lambda c: (c != "check", c))
    return render(doc, rows, columns, args.format, f"verification on sigma_{s}"), 0


def cmd_degree(args) -> tuple[str, int]:
    try:
        value = classify.giambelli_degree(args.a, args.b, args.s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = {"schema": SCHEMA, "command": "degree", "a": args.a, "b": args.b, "s": args.s, "degree": value}
    if args.format == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n", 0
    if args.format == "csv":
        return f"a,b,s,degree\n{args.a},{args.b},{args.s},{value}\n", 0
    return f"{value}\n", 0


def cmd_delpezzo(args) -> tuple[str, int]:
    cfg = _config(args)
    report = delpezzo.delpezzo_report(cfg)
    doc = {"schema": SCHEMA, "command": "delpezzo", "config": _config_doc(cfg), **report}
    cols = ["surface", "s", "ambient", "expected_dim", "oracle_dim", "defect", "matrix_shape", "minors_checked", "minors_vanish", "flags"]
    if args.format != "text":
        return render(doc, report["secants"], cols, args.format), 0
    text = _table(report["secants"], cols)
    text += "\n" + _table(report["degrees"], ["surface", "secant", "matrix_shape", "degree", "source", "flags"])
    text += "\n" + _table(report["notes"], ["surface", "sigma2", "ideal"])
    return text, 0


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="secantvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, profile=True, secant=True):
        if profile:
            p.add_argument("-p", "--profile", help='factor profile, e.g. "P(1)xP(1)xP(5)" or "P(2,2)xP(2,2)"')
        if secant:
            p.add_argument("-s", "--secant", help="secant order s, or a range a..b")
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--cap", type=int, default=1000)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("-o", "--out", help="write output here instead of stdout")

    p = sub.add_parser("analyze", help="secant dimensions: expected, oracle, closed forms")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("flatten", help="list one flattening, or the census of all splits")
    common(p, secant=False)
    p.add_argument("--split", help="row-side degree per factor, e.g. 1,1,0")
    p.set_defaults(func=cmd_flatten)

    p = sub.add_parser("equations", help="write the (s+1)-minors of a flattening")
    common(p)
    p.add_argument("--split", help="row-side degree per factor")
    p.set_defaults(func=cmd_equations)

    p = sub.add_parser("verify", help="check equations vanish on sigma_s, or a flattening rank bound")
    common(p)
    p.add_argument("--split", help="check the rank bound of this flattening")
    p.add_argument("-e", "--equations", action="append", help="equation file (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("degree", help="degree of the rank-<=s locus of (a+1)x(b+1) matrices")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("delpezzo", help="dimension/degree table for the Del Pezzo surfaces")
    common(p, profile=False, secant=False)
    p.set_defaults(func=cmd_delpezzo)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except UsageError as exc:
        print(f"secantvar: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
