"""Command line driver.

    torusgroups cases list|verify|export
    torusgroups geometry identity|family
    torusgroups invariants abelianize|homcount|coset|rb3
    torusgroups present double-cover|quotient|normalize

Exit status: 0 when no check failed (INCONCLUSIVE included), 1 on any FAIL,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import curvegeom, registry
from .invariants import (
    BATTERY_NAMES,
    DEFAULT_LIMIT,
    CosetOverflow,
    abelianization,
    battery,
    group_by_name,
    hom_count,
    rb3_verify,
    todd_coxeter,
)
from .invariants.z2z3 import braid_assignment
from .presentation import (
    Presentation,
    PresentationError,
    double_cover,
    format_presentation,
    normalize,
    parse_presentation,
    quotient_add_relators,
)
from .verify import FAIL, INCONCLUSIVE, PASS, Check, Options, Report, verify_case
from .word import WordError, parse_word

SCHEMA = "1"


class UsageError(Exception):
    pass


class Outcome:
    """Reports plus an optional payload (a presentation, an export, a listing)."""

    def __init__(self, command: str):
        self.command = command
        self.reports: List[Report] = []
        self.payload: Optional[dict] = None
        self.text: Optional[str] = None

    @property
    def exit_code(self) -> int:
        return 1 if any(r.exit_code for r in self.reports) else 0


# --- input helpers ------------------------------------------------------------


def _battery(opt: Optional[str]):
    if not opt:
        return None
    out = []
    for name in opt.split(","):
        name = name.strip()
        try:
            out.append(group_by_name(name))
        except KeyError:
            raise UsageError(f"unknown battery group {name!r}; known: {','.join(BATTERY_NAMES)}")
    return out


def _presentation(args) -> Presentation:
    sources = [x for x in (args.presentation, args.case, args.named) if x]
    if len(sources) != 1:
        raise UsageError("give exactly one of --presentation FILE, --case ID[:pibar], --named NAME")
    try:
        if args.presentation:
            text = sys.stdin.read() if args.presentation == "-" else _read(args.presentation)
            return parse_presentation(text).presentation
        if args.case:
            cid, _, which = args.case.partition(":")
            if which == "pibar":
                return registry.pibar_presentation(cid)
            if which not in ("", "pi1"):
                raise UsageError(f"unknown presentation kind {which!r}; use pi1 or pibar")
            return registry.pi1_presentation(cid)
        return registry.named_presentation(args.named)
    except (PresentationError, WordError, registry.RegistryError) as exc:
        raise UsageError(str(exc))


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _parse_value(text: str):
    """``3/4`` or ``[c0,c1,...]/x^3+4`` as a field element."""
    try:
        if text.startswith("["):
            return curvegeom.parse_element(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad parameter value {text!r}: {exc}")


# --- subcommands --------------------------------------------------------------


def cmd_cases_list(args, out: Outcome) -> None:
    rows = []
    for cid in registry.list_cases():
        c = registry.get_case(cid)
        rows.append({"id": cid, "curve": c.curve_id, "tag": c.expected.tag,
                     "perturbations": [f"{b.rule} [{b.binding}]" for b in c.perturbations]})
    out.payload = {"cases": rows}
    out.text = "\n".join(f"{r['id']:<12} {r['curve']:<6} {r['tag']:<8} "
                         + ", ".join(r["perturbations"]) for r in rows)


def cmd_cases_verify(args, out: Outcome) -> None:
    ids = registry.list_cases() if args.all else args.ids
    if not ids:
        raise UsageError("give case ids or --all")
    opts = Options(args.coset_limit, _battery(args.battery))
    for cid in ids:
        try:
            out.reports.append(verify_case(cid, opts))
        except registry.RegistryError as exc:
            raise UsageError(str(exc))


def cmd_cases_export(args, out: Outcome) -> None:
    text = registry.export_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.text = f"wrote {args.output}"
        out.payload = {"output": args.output}
    else:
        out.text = text.rstrip("\n")
        out.payload = json.loads(text)


def cmd_geometry_identity(args, out: Outcome) -> None:
    names = list(curvegeom.IDENTITIES) if args.name == "all" else [args.name]
    rep = Report("identities")
    for name in names:
        try:
            ok = curvegeom.verify_identity(name, seed=args.seed)
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
        rep.add(name, PASS if ok else FAIL, "exact", "polynomial identity")
    out.reports.append(rep)


def cmd_geometry_family(args, out: Outcome) -> None:
    if args.name not in curvegeom.FAMILIES:
        raise UsageError(f"unknown family {args.name!r}; known: {', '.join(curvegeom.FAMILIES)}")
    rep = Report(f"family {args.name}")
    if args.param:
        params = {}
        for item in args.param:
            key, sep, val = item.partition("=")
            if not sep:
                raise UsageError(f"--param expects key=value, got {item!r}")
            params[key] = _parse_value(val)
        try:
            reports = [curvegeom.verify_family(args.name, params)]
        except (ValueError, curvegeom.ExclusionError) as exc:
            raise UsageError(str(exc))
    else:
        reports = curvegeom.sample_family(args.name, args.samples, args.seed)
    for fr in reports:
        label = " ".join(f"{k}={v}" for k, v in sorted(fr.params.items()))
        prof = ", ".join(f"{p.label} x={p.x}: {p.actual}" for p in fr.points)
        bad = [n for n, ok, _ in fr.facts if not ok]
        detail = f"section ({fr.section.a}, {fr.section.b}, {fr.section.c}); {prof}; total {fr.total}"
        if bad:
            detail += "; failed: " + ", ".join(bad)
        rep.add(label, PASS if fr.passed else FAIL, detail, f"{args.name} section family")
    out.reports.append(rep)
    out.payload = {"families": [fr.to_json_obj() for fr in reports]}


def cmd_abelianize(args, out: Outcome) -> None:
    p = _presentation(args)
    ab = abelianization(p)
    rep = Report("abelianize")
    rep.add("abelianization", PASS, str(ab))
    out.reports.append(rep)
    out.text = str(ab)


def cmd_homcount(args, out: Outcome) -> None:
    p = _presentation(args)
    groups = _battery(args.battery) or battery()
    rep = Report("homcount")
    for g in groups:
        rep.add(g.name, PASS, str(hom_count(p, g)))
    out.reports.append(rep)


def cmd_coset(args, out: Outcome) -> None:
    p = _presentation(args)
    try:
        sub = [parse_word(w) for w in args.subgroup]
    except WordError as exc:
        raise UsageError(str(exc))
    rep = Report("coset")
    try:
        n = todd_coxeter(p, sub, args.coset_limit)
        status = PASS if args.expect is None or n == args.expect else FAIL
        rep.add("index", status, str(n))
    except CosetOverflow as exc:
        rep.add("index", INCONCLUSIVE, f"OVERFLOW: {exc}")
    out.reports.append(rep)


def cmd_rb3(args, out: Outcome) -> None:
    p = _presentation(args)
    s1, s2 = args.s1.split(), args.s2.split()
    if set(s1) | set(s2) != set(p.generators):
        raise UsageError("--s1 and --s2 must together list every generator")
    ok = rb3_verify(p, braid_assignment(s1, s2))
    rep = Report("rb3")
    rep.add("rb3-epimorphism", PASS if ok else FAIL, f"s1 <- {' '.join(s1)}; s2 <- {' '.join(s2)}")
    out.reports.append(rep)


def _emit_presentation(p: Presentation, out: Outcome) -> None:
    out.text = format_presentation(p).rstrip("\n")
    out.payload = {"generators": list(p.generators),
                   "relators": format_presentation(p).splitlines()[1:]}


def cmd_double_cover(args, out: Outcome) -> None:
    p = _presentation(args)
    try:
        _emit_presentation(double_cover(p, args.distinguished), out)
    except PresentationError as exc:
        raise UsageError(str(exc))


def cmd_quotient(args, out: Outcome) -> None:
    p = _presentation(args)
    try:
        _emit_presentation(quotient_add_relators(p, args.relation), out)
    except (PresentationError, WordError) as exc:
        raise UsageError(str(exc))


def cmd_normalize(args, out: Outcome) -> None:
    _emit_presentation(normalize(_presentation(args)), out)


# --- parser -------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--coset-limit", type=int, default=DEFAULT_LIMIT)
    c.add_argument("--battery", help="comma separated group names, e.g. S3,A4")
    c.add_argument("--no-timestamp", action="store_true")
    return c


def _pres_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--presentation", metavar="FILE", help="presentation file ('-' for stdin)")
    p.add_argument("--case", metavar="ID[:pibar]", help="a registry case's printed group")
    p.add_argument("--named", metavar="NAME", help="an auxiliary registry presentation")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    top = argparse.ArgumentParser(prog="torusgroups", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="area", required=True)

    def leaf(parent, area, name, func, help_text):
        p = parent.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func, command=f"{area} {name}")
        return p

    cases = sub.add_parser("cases", help="registry cases").add_subparsers(dest="op", required=True)
    leaf(cases, "cases", "list", cmd_cases_list, "list case ids")
    p = leaf(cases, "cases", "verify", cmd_cases_verify, "run the invariant checks for cases")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    p = leaf(cases, "cases", "export", cmd_cases_export, "write the registry as JSON")
    p.add_argument("--output", metavar="FILE")

    geo = sub.add_parser("geometry", help="exact curve geometry").add_subparsers(dest="op", required=True)
    p = leaf(geo, "geometry", "identity", cmd_geometry_identity, "check a polynomial identity")
    p.add_argument("name", help="identity id or 'all'")
    p = leaf(geo, "geometry", "family", cmd_geometry_family, "check a section family")
    p.add_argument("name")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="check one parameter point instead of sampling")

    inv = sub.add_parser("invariants", help="group invariants").add_subparsers(dest="op", required=True)
    _pres_args(leaf(inv, "invariants", "abelianize", cmd_abelianize, "abelian invariants"))
    _pres_args(leaf(inv, "invariants", "homcount", cmd_homcount, "hom counts into the battery"))
    p = leaf(inv, "invariants", "coset", cmd_coset, "Todd-Coxeter index")
    _pres_args(p)
    p.add_argument("--subgroup", action="append", default=[], metavar="WORD")
    p.add_argument("--expect", type=int)
    p = leaf(inv, "invariants", "rb3", cmd_rb3, "certify an epimorphism onto Z2*Z3")
    _pres_args(p)
    p.add_argument("--s1", required=True, help="generators sent to s1 (space separated)")
    p.add_argument("--s2", required=True, help="generators sent to s2 (space separated)")

    pres = sub.add_parser("present", help="presentation rewriting").add_subparsers(dest="op", required=True)
    p = leaf(pres, "present", "double-cover", cmd_double_cover, "index-2 kernel over a generator")
    _pres_args(p)
    p.add_argument("--distinguished", "-d", required=True)
    p = leaf(pres, "present", "quotient", cmd_quotient, "add relations")
    _pres_args(p)
    p.add_argument("--relation", "-r", action="append", required=True)
    _pres_args(leaf(pres, "present", "normalize", cmd_normalize, "reduce and deduplicate relators"))
    return top


# --- rendering ----------------------------------------------------------------


def render(out: Outcome, args) -> str:
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": out.command,
            "argv": args.argv,
            "seed": args.seed,
            "reports": [r.to_json_obj() for r in out.reports],
            "result": out.payload,
            "exit": out.exit_code,
        }
        if not args.no_timestamp:
            doc["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)
    lines = []
    for r in out.reports:
        if len(out.reports) > 1 or not out.text:
            lines.append(f"== {r.target}")
        if out.text is None:
            for c in r.checks:
                lines.append(f"{c.status:<12} {c.name}" + (f": {c.detail}" if c.detail else ""))
    if out.text is not None:
        lines.append(out.text)
    elif out.reports:
        n = [c.status for r in out.reports for c in r.checks]
        lines.append(f"-- {n.count(PASS)} PASS, {n.count(FAIL)} FAIL, {n.count(INCONCLUSIVE)} INCONCLUSIVE")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None) -> Tuple[Outcome, int, str]:
    """Parse and execute; returns the outcome, exit code and rendered output."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    out = Outcome(args.command)
    if args.coset_limit < 1:
        raise UsageError("--coset-limit must be positive")
    args.func(args, out)
    return out, out.exit_code, render(out, args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        _, code, text = run(argv)
    except UsageError as exc:
        print(f"torusgroups: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
