"""Command line interface.

    rotamap analyze FILE [--json] [--max-cosets N] [--require-polytopal]
    rotamap construct petrie-coxeter FILE [--out PATH] [--json] [--max-cosets N]
    rotamap construct quotient FILE --petrie K [--out PATH] [--json] [--max-cosets N]
    rotamap generate torus FAMILY B C [--out DIR]
    rotamap generate catalog [NAME] [--verify] [--out DIR] [--max-cosets N]

Exit codes: 0 success, 1 mathematical verdict failure (not polytopal
under --require-polytopal, not self-dual, verification mismatch),
2 operational error (parse failure, coset cap, bad invocation).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .engine import DEFAULT_CAP, enumerate_group
from .errors import (
    CapExceededError,
    ConstructionError,
    InconsistencyError,
    NotPolytopalError,
    ParseError,
    RotamapError,
)
from .rotary import (
    Chirality,
    InvolutionReport,
    RegularCGroup4,
    RegularMap3,
    RotationGroup3,
    RotationGroup4,
    _c_group_condition,
    check_polytopal4,
    classify4,
    involution_report,
    map_invariants3,
    map_invariants_regular,
    petrie4,
    schlafli,
)
from .selfdual import (
    DualityKind,
    detect_self_duality,
    extend_improper,
    extend_proper,
    find_polarity,
)
from .constructions import (
    TorusFamily,
    catalog,
    lattice_torus_oracle,
    pc_map_improper,
    pc_map_proper,
    pc_map_regular,
    petrie_quotient,
    torus_presentation,
    verify_catalog_entry,
)
from .words import Presentation, Word, parse_presentation, serialize_presentation

SCHEMA_VERSION = 1


@dataclass
class AnalysisReport:
    """Flat, JSON-ready view of everything the toolkit computes for one
    input; inapplicable fields are None."""

    group_order: int
    schlafli: tuple
    polytopal: bool
    chirality: str
    self_duality: str | None = None
    petrie: dict | None = None
    holes: dict | None = None
    zigzags: dict | None = None
    f_vector: tuple | None = None
    euler: int | None = None
    genus: int | None = None
    involutions: dict | None = None
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {"schema": SCHEMA_VERSION}
        d.update(asdict(self))
        d["schlafli"] = list(self.schlafli)
        if self.f_vector is not None:
            d["f_vector"] = list(self.f_vector)
        if self.holes is not None:
            d["holes"] = {str(j): v for j, v in sorted(self.holes.items())}
        if self.zigzags is not None:
            d["zigzags"] = {str(j): v for j, v in sorted(self.zigzags.items())}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        keep = {k: d.get(k) for k in cls.__dataclass_fields__}
        keep["schlafli"] = tuple(keep["schlafli"] or ())
        if keep.get("f_vector") is not None:
            keep["f_vector"] = tuple(keep["f_vector"])
        for name in ("holes", "zigzags"):
            if keep.get(name) is not None:
                keep[name] = {int(j): v for j, v in keep[name].items()}
        keep["warnings"] = list(keep.get("warnings") or [])
        return cls(**keep)


def _involutions_dict(r: InvolutionReport) -> dict:
    return {
        "n_tau_order": r.n_tau_order,
        "n_tau_index": r.n_tau_index,
        "group_gen_by_involutions": r.group_gen_by_involutions,
        "prop62_consistent": r.prop62_consistent,
    }


def _nominal_warnings(pres: Presentation, rep) -> list:
    """Flag power relators whose nominal exponent collapsed."""
    out = []
    for r in pres.relators:
        cols = r.cols()
        if len(cols) >= 2 and len(set(cols)) == 1 and cols[0] % 2 == 0:
            g = cols[0] >> 1
            actual = rep.element_order(Word.gen(g))
            if actual != len(cols):
                out.append(
                    f"nominal order {len(cols)} of generator "
                    f"{pres.names[g]} collapsed to {actual}"
                )
    return out


def report_rotation3(m: RotationGroup3, warnings=()) -> AnalysisReport:
    inv = map_invariants3(m)
    ir = involution_report(m)
    w = list(warnings)
    if inv.chirality is Chirality.NOT_POLYTOPAL:
        w.append("intersection condition fails; counts are diagnostic only")
    return AnalysisReport(
        group_order=m.order,
        schlafli=inv.schlafli,
        polytopal=inv.chirality is not Chirality.NOT_POLYTOPAL,
        chirality=inv.chirality.value,
        f_vector=inv.f_vector,
        euler=inv.euler,
        genus=inv.genus,
        holes=inv.holes,
        involutions=_involutions_dict(ir),
        warnings=w,
    )


def report_rotation4(m: RotationGroup4, warnings=()) -> AnalysisReport:
    left, right = petrie4(m)
    cls = classify4(m)
    w = list(warnings)
    sd = None
    try:
        sd = detect_self_duality(m).kind.value
    except InconsistencyError as exc:
        w.append(f"self-duality detection inconsistent: {exc}")
    return AnalysisReport(
        group_order=m.order,
        schlafli=schlafli(m),
        polytopal=check_polytopal4(m),
        chirality=cls.value,
        self_duality=sd,
        petrie={"left": left, "right": right},
        warnings=w,
    )


def report_regular_map(m: RegularMap3, warnings=()) -> AnalysisReport:
    inv = map_invariants_regular(m)
    w = list(warnings)
    if inv.genus is None:
        w.append("rotation subgroup has index 1; genus not reported")
    return AnalysisReport(
        group_order=m.order,
        schlafli=inv.schlafli,
        polytopal=_c_group_condition(m.rep, m.rho),
        chirality=inv.chirality.value,
        f_vector=inv.f_vector,
        euler=inv.euler,
        genus=inv.genus,
        holes=inv.holes,
        zigzags=inv.zigzags,
        warnings=w,
    )


def report_cgroup4(c: RegularCGroup4, warnings=()) -> AnalysisReport:
    rot = [
        (c.rho[0] * c.rho[1]).reduce(),
        (c.rho[1] * c.rho[2]).reduce(),
        (c.rho[2] * c.rho[3]).reduce(),
    ]
    sd = find_polarity(c).kind.value
    left = c.rep.element_order((rot[0] * rot[2]).reduce())
    right = c.rep.element_order((rot[0] * ~rot[2]).reduce())
    return AnalysisReport(
        group_order=c.order,
        schlafli=tuple(c.rep.element_order(w) for w in rot),
        polytopal=True,
        chirality=Chirality.REGULAR.value,
        self_duality=sd,
        petrie={"left": left, "right": right},
        warnings=list(warnings),
    )


def analyze_presentation(pres: Presentation, cap: int = DEFAULT_CAP) -> AnalysisReport:
    if pres.distinguished is None:
        raise RotamapError(
            "presentation needs a sigma or rho line to fix rank semantics"
        )
    rep = enumerate_group(pres, cap=cap)
    warnings = _nominal_warnings(pres, rep)
    kind = pres.distinguished_kind
    n = len(pres.distinguished)
    if kind == "sigma" and n == 2:
        return report_rotation3(RotationGroup3(rep, pres.distinguished), warnings)
    if kind == "sigma" and n == 3:
        return report_rotation4(RotationGroup4(rep, pres.distinguished), warnings)
    if kind == "rho" and n == 3:
        return report_regular_map(RegularMap3(rep, pres.distinguished), warnings)
    if kind == "rho" and n == 4:
        return report_cgroup4(RegularCGroup4(rep, pres.distinguished), warnings)
    raise RotamapError(f"unsupported input: {kind} line with {n} words")


def format_text(report: AnalysisReport) -> str:
    d = report.to_dict()

    def fmt(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "yes" if v else "no"
        if isinstance(v, dict):
            return "  ".join(f"{k} {fmt(x)}" for k, x in v.items())
        if isinstance(v, list):
            return "{" + ",".join(str(x) for x in v) + "}"
        return str(v)

    labels = [
        ("group order", d["group_order"]),
        ("schlafli", d["schlafli"]),
        ("polytopal", d["polytopal"]),
        ("chirality", d["chirality"]),
        ("self-duality", d["self_duality"]),
        ("petrie", d["petrie"]),
        ("holes", d["holes"]),
        ("zigzags", d["zigzags"]),
        ("f-vector", d["f_vector"]),
        ("euler", d["euler"]),
        ("genus", d["genus"]),
        ("involutions", d["involutions"]),
    ]
    width = max(len(k) for k, _ in labels)
    lines = [f"{k:<{width}}  {fmt(v)}" for k, v in labels]
    for w in d["warnings"]:
        lines.append(f"{'warning':<{width}}  {w}")
    return "\n".join(lines)


def _emit(report: AnalysisReport, as_json: bool):
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(format_text(report))


def _load(path: str) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


# -- commands -------------------------------------------------------------------


def cmd_analyze(args) -> int:
    pres = _load(args.file)
    report = analyze_presentation(pres, cap=args.max_cosets)
    _emit(report, args.json)
    if args.require_polytopal and not report.polytopal:
        return 1
    return 0


def cmd_construct(args) -> int:
    pres = _load(args.file)
    if pres.distinguished is None:
        raise RotamapError("input needs a sigma or rho line")
    rep = enumerate_group(pres, cap=args.max_cosets)
    kind = pres.distinguished_kind
    n = len(pres.distinguished)
    warnings = []

    if args.what == "quotient":
        if args.petrie is None:
            raise RotamapError("construct quotient requires --petrie K")
        if not (kind == "sigma" and n == 3):
            raise RotamapError("quotient input must be a rank-4 sigma file")
        m = RotationGroup4(rep, pres.distinguished)
        s1, _, s3 = m.sigma
        period = m.rep.element_order(s1 * s3)
        if period % args.petrie != 0:
            warnings.append(
                f"--petrie {args.petrie} does not divide the Petrie length "
                f"{period}; the quotient may collapse"
            )
        q = petrie_quotient(m, args.petrie, cap=args.max_cosets)
        out_pres = q.rep.presentation
        report = report_rotation4(q, warnings)
        default_name = f"{Path(args.file).stem}-petrie{args.petrie}.pres"
    elif args.what == "petrie-coxeter":
        if kind == "sigma" and n == 3:
            m = RotationGroup4(rep, pres.distinguished)
            sd = detect_self_duality(m)
            if sd.kind == DualityKind.IMPROPER:
                ext = extend_improper(m, cap=args.max_cosets)
                skew = pc_map_improper(ext)
                out_pres = ext.rep.presentation
                out_pres = Presentation(
                    out_pres.generators, out_pres.relators, skew.sigma, "sigma"
                )
                report = report_rotation3(skew, warnings)
            elif sd.kind == DualityKind.PROPER:
                ext = extend_proper(m, cap=args.max_cosets)
                reg = pc_map_proper(ext)
                out_pres = ext.rep.presentation
                out_pres = Presentation(
                    out_pres.generators, out_pres.relators, reg.rho, "rho"
                )
                report = report_regular_map(reg, warnings)
            else:
                print("input is not self-dual; nothing to construct",
                      file=sys.stderr)
                return 1
        elif kind == "rho" and n == 4:
            c = RegularCGroup4(rep, pres.distinguished)
            if find_polarity(c).kind != DualityKind.REGULAR_POLARITY:
                print("input admits no polarity; nothing to construct",
                      file=sys.stderr)
                return 1
            reg = pc_map_regular(c, cap=args.max_cosets)
            out_pres = Presentation(
                reg.rep.presentation.generators,
                reg.rep.presentation.relators,
                reg.rho,
                "rho",
            )
            report = report_regular_map(reg, warnings)
        else:
            raise RotamapError(
                "petrie-coxeter input must be rank-4 (sigma with 3 words or "
                "rho with 4 words)"
            )
        default_name = f"{Path(args.file).stem}-pc.pres"
    else:
        raise RotamapError(f"unknown construct subcommand {args.what!r}")

    out_path = Path(args.out) if args.out else Path(args.file).parent / default_name
    out_path.write_text(serialize_presentation(out_pres), encoding="utf-8")
    print(f"wrote {out_path}", file=sys.stderr)
    _emit(report, args.json)
    return 0


def cmd_generate(args) -> int:
    outdir = Path(args.out) if args.out else Path.cwd()
    if args.what == "torus":
        fam = TorusFamily(args.family, args.b, args.c)
        pres = torus_presentation(fam)
        order, v, e, f = lattice_torus_oracle(fam)
        path = outdir / f"{fam.name}.pres"
        path.write_text(serialize_presentation(pres), encoding="utf-8")
        manifest = {
            "schema": SCHEMA_VERSION,
            "name": fam.name,
            "order": order,
            "f_vector": [v, e, f],
            "expect_regular": fam.expect_regular,
        }
        (outdir / f"{fam.name}.expected.json").write_text(
            json.dumps(manifest, indent=2), encoding="utf-8"
        )
        print(f"wrote {path}", file=sys.stderr)
        return 0

    if args.what == "catalog":
        entries = catalog(cap=args.max_cosets)
        if args.verify:
            failures = 0
            for name, entry in entries.items():
                bad = verify_catalog_entry(entry, cap=args.max_cosets)
                if bad:
                    failures += 1
                    print(f"{name}: FAIL")
                    for path_, want, got in bad:
                        print(f"  {path_}: expected {want!r}, got {got!r}")
                else:
                    print(f"{name}: ok")
            return 1 if failures else 0
        names = [args.name] if args.name else list(entries)
        for name in names:
            if name not in entries:
                raise RotamapError(f"unknown catalog entry {name!r}")
            entry = entries[name]
            path = outdir / f"{name}.pres"
            path.write_text(
                serialize_presentation(entry.presentation), encoding="utf-8"
            )
            manifest = {"schema": SCHEMA_VERSION, "name": name}
            manifest.update(_jsonable(entry.expected))
            (outdir / f"{name}.expected.json").write_text(
                json.dumps(manifest, indent=2), encoding="utf-8"
            )
            print(f"wrote {path}", file=sys.stderr)
        return 0

    raise RotamapError(f"unknown generate subcommand {args.what!r}")


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rotamap",
        description="analyze and construct rotation groups of maps and polytopes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument(
            "--max-cosets", type=int, default=DEFAULT_CAP, metavar="N",
            help="coset cap for enumerations (default %(default)s)",
        )

    p = sub.add_parser("analyze", help="report invariants of a presentation file")
    p.add_argument("file")
    p.add_argument(
        "--require-polytopal", action="store_true",
        help="exit 1 if the intersection condition fails",
    )
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="run a construction on an input file")
    p.add_argument("what", choices=["petrie-coxeter", "quotient"])
    p.add_argument("file")
    p.add_argument("--petrie", type=int, metavar="K",
                   help="Petrie relator exponent for quotient")
    p.add_argument("--out", metavar="PATH", help="output presentation path")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("generate", help="write built-in presentations")
    gsub = p.add_subparsers(dest="what", required=True)

    pt = gsub.add_parser("torus", help="a torus map presentation")
    pt.add_argument("family", help="4,4 or 3,6 or 6,3")
    pt.add_argument("b", type=int)
    pt.add_argument("c", type=int)
    pt.add_argument("--out", metavar="DIR", help="output directory")
    pt.add_argument("--max-cosets", type=int, default=DEFAULT_CAP)
    pt.set_defaults(func=cmd_generate)

    pc = gsub.add_parser("catalog", help="catalog entries, or --verify them")
    pc.add_argument("name", nargs="?", help="entry name (default: all)")
    pc.add_argument("--verify", action="store_true",
                    help="recompute all entries and compare")
    pc.add_argument("--out", metavar="DIR", help="output directory")
    pc.add_argument("--max-cosets", type=int, default=DEFAULT_CAP)
    pc.set_defaults(func=cmd_generate)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"{exc} (see --max-cosets)", file=sys.stderr)
        return 2
    except NotPolytopalError as exc:
        print(f"not polytopal: {exc}", file=sys.stderr)
        return 1
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    except (InconsistencyError, RotamapError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
