"""Command-line interface: ``satake <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import analysis, unitarity
from .orbits import catalog, find_orbit
from .repweights import (
    ADJOINT,
    HALF_SPIN_MINUS,
    HALF_SPIN_PLUS,
    SPIN,
    STANDARD,
    RepLabel,
    central_pattern,
    filtration_row,
    minuscule,
    weight_pattern,
    weights_of,
)
from .rootdata import (
    ChamberPoint,
    DomainError,
    SimpleType,
    build_root_datum,
    datum_to_json,
    fmt_rational,
    fmt_vector,
    fold,
    parse_rational,
)

FORMATS = ("json", "tsv", "paper-table")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit with 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# --- argument helpers -----------------------------------------------------


def take_type(tokens: Sequence[str]) -> Tuple[SimpleType, List[str]]:
    """Read ``E8`` or ``E 8`` from the front of ``tokens``."""
    if not tokens:
        raise UsageError("missing type")
    first, rest = tokens[0], list(tokens[1:])
    if len(first.strip()) == 1 and rest and rest[0].isdigit():
        return SimpleType.parse(first, int(rest[0])), rest[1:]
    return SimpleType.parse(first), rest


def parse_point(text: str, d) -> ChamberPoint:
    """``c1,c2,...`` in fundamental-weight coordinates, rationals as ``p/q``."""
    t = d.simple_type
    coeffs = [parse_rational(x) for x in text.split(",")]
    if len(coeffs) != d.rank:
        raise DomainError(f"{t} needs {d.rank} fundamental coordinates, got {len(coeffs)}")
    return ChamberPoint.from_fundamental(d, coeffs)


def parse_rep(text: str, d) -> RepLabel:
    key = text.strip().lower()
    named = {
        "adjoint": ADJOINT,
        "standard": STANDARD,
        "spin": SPIN,
        "halfspin+": HALF_SPIN_PLUS,
        "halfspin-": HALF_SPIN_MINUS,
    }
    if key in named:
        return named[key]
    if key.startswith("minuscule:"):
        t = d.simple_type
        idx = int(key.split(":", 1)[1]) - 1
        if not 0 <= idx < d.rank:
            raise DomainError(f"no fundamental coweight {idx + 1} for {t}")
        return minuscule(d.fundamental_coweights[idx])
    raise DomainError(f"unknown representation {text!r}")


# --- output ---------------------------------------------------------------


def emit(fmt: str, doc, rows: Optional[List[List[str]]] = None, header: Optional[List[str]] = None, text: Optional[List[str]] = None):
    if fmt == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    elif fmt == "tsv":
        if header:
            print("\t".join(header))
        for r in rows or []:
            print("\t".join(str(x) for x in r))
    else:
        for line in text if text is not None else [" | ".join(str(x) for x in r) for r in rows or []]:
            print(line)


def _coroot_name(coeffs: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c:
            parts.append(f"{c if c != 1 else ''}α{i + 1}∨")
    return "+".join(parts)


# --- subcommands ----------------------------------------------------------


def cmd_roots(args) -> None:
    t, rest = take_type(args.type)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    d = build_root_datum(t)
    doc = datum_to_json(d)
    doc["highest_coroot_coefficients"] = list(d.coroot_coefficients[-1])
    rows = []
    for b, a in zip(d.coroot_coefficients, d.positive_coroots):
        rows.append([int(d.level(a)), _coroot_name(b), fmt_vector(a)])
    text = [
        f"type {t} (rank {d.rank}, dimension {d.dimension})",
        f"Coxeter number h = {d.coxeter_number}; degrees {', '.join(map(str, d.degrees))}",
        f"highest coroot γ∨ = {_coroot_name(d.coroot_coefficients[-1])} = {fmt_vector(d.highest_coroot)}",
    ]
    for i in range(d.rank):
        text.append(
            f"  α{i + 1} = {fmt_vector(d.simple_roots[i])}   α{i + 1}∨ = {fmt_vector(d.simple_coroots[i])}"
            f"   ω{i + 1} = {fmt_vector(d.fundamental_weights[i])}"
        )
    text.append("positive coroots by level:")
    text += [f"  {lv} | {name} | {vec}" for lv, name, vec in rows]
    emit(args.format, doc, rows, ["level", "coroot", "coordinates"], text)


def cmd_orbits(args) -> None:
    t, rest = take_type(args.type)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    orbits = catalog(t)
    rows = [
        [o.name, ",".join(map(str, o.marks)), fmt_vector(o.neutral_element), o.dimension, "+".join(o.centralizer_type) or "0"]
        for o in orbits
    ]
    emit(args.format, {"type": str(t), "orbits": [o.to_json() for o in orbits]}, rows, ["label", "marks", "h", "dimension", "centralizer"])


def cmd_filtration_table(args) -> None:
    t, rest = take_type(args.type)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    if not t.is_exceptional:
        raise DomainError("filtration tables are produced for exceptional types")
    rows = []
    for o in catalog(t):
        r = filtration_row(o)
        rows.append([o.label, r.top, r.paper_string()])
    doc = {"type": str(t), "rows": [{"label": a, "i_max": b, "row": [int(x) for x in c.split(",")]} for a, b, c in rows]}
    emit(args.format, doc, rows, ["label", "i_max", "row"])


def cmd_half_integral(args) -> None:
    t, rest = take_type(args.type)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    pts = unitarity.sorted_points(unitarity.half_integral_unitary_points(t))
    labels = [unitarity.point_label(p) for p in pts]
    doc = {"type": str(t), "points": [{"fundamental": unitarity.point_label(p), "coordinates": [fmt_rational(x) for x in p.nu]} for p in pts]}
    rows = [[lab, fmt_vector(p.nu)] for lab, p in zip(labels, pts)]
    emit(args.format, doc, rows, ["point", "coordinates"], [", ".join(labels)])


def _orbit_arg(t: SimpleType, rest: List[str]):
    if not rest:
        raise UsageError("missing orbit label")
    return find_orbit(t, " ".join(rest))


def cmd_extraneous(args) -> None:
    t, rest = take_type(args.args)
    entries = unitarity.extraneous_points(_orbit_arg(t, rest)) if rest else unitarity.extraneous_catalog(t)
    rows = []
    for e in entries:
        eps = ",".join(f"{j}:{x}" for j, x in e.eps) if e.eps is not None else ""
        rows.append([e.orbit.name, e.centralizer, eps, fmt_vector(e.re_s.nu), unitarity.point_label(e.re_s)])
    text = [" | ".join(r) for r in rows] or ["no extraneous points"]
    emit(args.format, {"type": str(t), "entries": [e.to_json() for e in entries]}, rows, ["orbit", "centralizer", "eps", "re_s", "fundamental"], text)


def cmd_central_point(args) -> None:
    t, rest = take_type(args.args)
    o = _orbit_arg(t, rest)
    p = unitarity.central_point(o)
    doc = {"type": str(t), "orbit": o.name, "coordinates": [fmt_rational(x) for x in p.nu], "fundamental": unitarity.point_label(p)}
    emit(args.format, doc, [[o.name, fmt_vector(p.nu), unitarity.point_label(p)]], ["orbit", "coordinates", "fundamental"])


def cmd_weight_pattern(args) -> None:
    # the type is that of the dual Lie algebra, as for the orbit commands
    t, rest = take_type(args.args)
    d = build_root_datum(t.dual)
    rep = parse_rep(args.rep, d)
    if args.point is not None:
        if rest:
            raise UsageError("give either an orbit or --point")
        p = parse_point(args.point, d)
        pat = weight_pattern(weights_of(d, rep), p)
        subject = unitarity.point_label(p)
    else:
        o = _orbit_arg(t, rest)
        pat = central_pattern(o, rep)
        subject = o.name
    if not args.all:
        pat = pat.nonnegative()
    rows = [[i, n] for i, n in sorted(pat.items(), reverse=True)]
    doc = {"type": str(t), "subject": subject, "rep": str(rep), "pattern": pat.to_json()}
    emit(args.format, doc, rows, ["i", "n"], [pat.paper_string() if not args.all else ", ".join(f"{i}:{n}" for i, n in pat.items())])


def cmd_orbit_from_pattern(args) -> None:
    t, rest = take_type(args.args)
    if len(rest) != 1:
        raise UsageError("expected a single comma-separated row")
    o = analysis.orbit_from_pattern(t, rest[0], halfspin_top=args.halfspin_top)
    emit(args.format, {"type": str(t), "orbit": o.to_json()}, [[o.name]], ["orbit"])


def cmd_cs_4a1(args) -> None:
    if args.scan:
        hits = unitarity.quarter_grid_extra_members(parse_rational(args.scan))
        doc = {"bound": args.scan, "members": [[fmt_rational(x) for x in h] for h in hits]}
        emit(args.format, doc, [[fmt_vector(h)] for h in hits], ["nu"], [f"{len(hits)} quarter-integral points in the extra region"])
        return
    if len(args.nu) != 4:
        raise UsageError("expected four coordinates nu1 nu2 nu3 nu4")
    nu = [parse_rational(x) for x in args.nu]
    member = unitarity.cs_e8_4a1_member(nu)
    extra = unitarity.cs_e8_4a1_extra_region(nu)
    region = "nu4<1/2" if nu[3] < Fraction(1, 2) else ("extra" if extra else "none")
    doc = {"nu": [fmt_rational(x) for x in nu], "member": member, "region": region}
    emit(args.format, doc, [[fmt_vector(nu), str(member).lower(), region]], ["nu", "member", "region"])


def cmd_regions(args) -> None:
    t, rest = take_type(args.type)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    m = unitarity.count_chamber_regions(t)
    doc = {"type": str(t), "formula": m}
    row = [str(t), m]
    if args.enumerate:
        e = unitarity.enumerate_chamber_regions(t)
        doc["enumerated"] = e
        row.append(e)
    emit(args.format, doc, [row], ["type", "formula"] + (["enumerated"] if args.enumerate else []), [" ".join(map(str, row[1:]))])


def cmd_fold(args) -> None:
    t, rest = take_type(args.args)
    if len(rest) != 1 or not rest[0].isdigit():
        raise UsageError("expected the order of the automorphism")
    order = int(rest[0])
    g = fold(t, order)
    r = unitarity.quasi_split_reduction(t, order)
    pts = [unitarity.point_label(p) for p in unitarity.sorted_points(r.points)]
    trace = [
        {"point": unitarity.point_label(e.point), "rep": e.rep, "eliminated": e.eliminated, "reason": e.reason}
        for e in r.trace
    ]
    doc = {"type": str(t), "order": order, "folded": str(g), "points": pts, "trace": trace}
    rows = [[x["point"], x["rep"], "eliminated" if x["eliminated"] else "kept", x["reason"]] for x in trace]
    text = [f"{t} order {order} -> {g}", "points: " + ", ".join(pts)] + ["  " + " | ".join(r) for r in rows]
    emit(args.format, doc, rows, ["point", "rep", "status", "reason"], text)


def cmd_check_property_a(args) -> None:
    if args.random:
        rng = random.Random(args.seed)
        counts = {"DiagonalMatch": 0, "TruncationAt": 0, "Violation": 0}
        for _ in range(args.random):
            nv, nu = analysis.marginals(analysis.random_symmetric_matrix(rng))
            counts[analysis.property_a_check(nu, nv).case] += 1
        doc = {"seed": args.seed, "instances": args.random, "counts": counts}
        emit(args.format, doc, [[k, v] for k, v in counts.items()], ["case", "count"])
        return
    if not args.matrix:
        raise UsageError("give a matrix file or --random N")
    try:
        text = open(args.matrix, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    m = analysis.MarginalMatrix.from_tsv(text)
    nv, nu = analysis.marginals(m)
    verdict = analysis.property_a_check(nu, nv)
    support = sorted(set(nu) | set(nv), reverse=True)
    doc = {
        "symmetric": m.is_symmetric(),
        "n_u": nu.to_json(),
        "n_v": nv.to_json(),
        "verdict": verdict.to_json(),
    }
    rows = [[i, nu[i], nv[i]] for i in support]
    text = ["i | n_u | n_v"] + [f"{i} | {nu[i]} | {nv[i]}" for i in support]
    text += [f"symmetric: {str(m.is_symmetric()).lower()}", f"verdict: {verdict}"]
    emit(args.format, doc, rows, ["i", "n_u", "n_v"], text)


def cmd_azs_table(args) -> None:
    rows = analysis.azs_elimination_table()
    table = [
        [r.dual_type, r.orbit, ",".join(f"{j}:{x}" for j, x in r.eps) if r.eps else "", r.rep, r.i0, r.n_v, r.n_u, str(r.verdict), "ok" if r.matches else "MISMATCH"]
        for r in rows
    ]
    emit(args.format, {"rows": [r.to_json() for r in rows]}, table, ["dual_type", "orbit", "eps", "rep", "i0", "n_v", "n_u", "verdict", "check"])


# --- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p = _Parser(prog="satake", description="Half-integral unitary points and weight patterns for split groups.", parents=[common])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=func)
        return sp

    add("roots", cmd_roots, "root datum summary").add_argument("type", nargs="+")
    add("orbits", cmd_orbits, "nilpotent orbits of the dual Lie algebra").add_argument("type", nargs="+")
    add("filtration-table", cmd_filtration_table, "adjoint filtration table").add_argument("type", nargs="+")
    add("half-integral", cmd_half_integral, "half-integral generic unitary points").add_argument("type", nargs="+")
    add("extraneous", cmd_extraneous, "extraneous points (all orbits, or one)").add_argument("args", nargs="+")
    add("central-point", cmd_central_point, "the point h/2 of an orbit").add_argument("args", nargs="+")
    sp = add("weight-pattern", cmd_weight_pattern, "weight pattern of an orbit or a point")
    sp.add_argument("args", nargs="+")
    sp.add_argument("--rep", default="adjoint", help="adjoint, standard, spin, halfspin+, halfspin-, minuscule:K")
    sp.add_argument("--point", help="fundamental coordinates c1,...,cl")
    sp.add_argument("--all", action="store_true", help="include negative levels")
    sp = add("orbit-from-pattern", cmd_orbit_from_pattern, "identify an orbit from its filtration row")
    sp.add_argument("args", nargs="+")
    sp.add_argument("--halfspin-top", type=int)
    sp = add("cs-4a1", cmd_cs_4a1, "membership in the 4A1 complementary series of E8")
    sp.add_argument("nu", nargs="*")
    sp.add_argument("--scan", metavar="BOUND", help="scan quarter-integral points with nu4 < BOUND")
    sp = add("regions", cmd_regions, "regions of the fundamental chamber")
    sp.add_argument("type", nargs="+")
    sp.add_argument("--enumerate", action="store_true", help="also count by enumeration (rank <= 4)")
    add("fold", cmd_fold, "folding of a quasi-split group and its reduction").add_argument("args", nargs="+")
    sp = add("check-property-a", cmd_check_property_a, "Property A verdict for a matrix file")
    sp.add_argument("matrix", nargs="?")
    sp.add_argument("--random", type=int, metavar="N", help="run N seeded random symmetric matrices")
    add("azs-table", cmd_azs_table, "elimination data for every extraneous point")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "paper-table"
    if not hasattr(args, "seed"):
        args.seed = 0
    try:
        args.func(args)
    except UsageError as exc:
        print(f"satake: usage error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"satake: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
