"""Command-line entry point.

Exit codes: 0 when verdicts were computed (a negative verdict included),
2 when theorem preconditions are unmet or the input is invalid, 3 when two
independent computations disagree.

Only graphs with finitely many vertices can be given.  For infinite vertex
sets a simple L_K(E) always has a simple commutator Lie algebra and zero
center, so there is nothing to compute.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from .exactfield import FieldError, FieldSpec
from .graphcore import GraphError, classify_vertex, parse_graph
from .groupoidcore import GroupoidError, is_effective, is_minimal, pair_groupoid, parse_groupoid
from .lieoracle import DEFAULT_SEED, LieAlgebraError, OracleInconclusive, cross_check_groupoid
from .lpalie import b_vectors, lpa_center, lpa_lie_simple
from .graphcore import lpa_is_simple
from .selfsimilar import ActionError, NonHausdorffError, ep_verdict, parse_action
from .steinberg import SteinbergAlgebra, center_basis, center_verdict, commutator_subspace, lie_simplicity_verdict
from .verdicts import InvariantBreach, Kind

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BREACH = 3


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    field: str = "Q"
    format: str = "text"
    depth: int | None = None
    seed: int = DEFAULT_SEED
    primes: list[int] = dc_field(default_factory=lambda: [2, 3, 5])
    max_n: int = 4


def _read(path: str) -> dict:
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _theorems(*verdicts) -> list[str]:
    seen = []
    for v in verdicts:
        for t in v.theorems:
            if t not in seen:
                seen.append(t)
    return seen


def run_lpa(cfg: RunConfig):
    F = FieldSpec.parse(cfg.field)
    g = parse_graph(_read(cfg.input))
    simple = lpa_is_simple(g)
    lie = lpa_lie_simple(g, F)
    center = lpa_center(g, F)
    report = {
        "command": "lpa",
        "input": cfg.input,
        "field": str(F),
        "vertices": [{"name": v, "class": classify_vertex(g, v).value} for v in g.vertices],
        "b_vectors": [[F.format_scalar(x) for x in b.entries] for b in b_vectors(g, F)],
        "simple": simple.to_json(F),
        "lie": lie.to_json(F),
        "center": center.to_json(F),
        "theorems": _theorems(simple, lie, center),
    }
    code = EXIT_PRECONDITION if lie.kind is Kind.INAPPLICABLE else EXIT_OK
    return report, code


def run_groupoid(cfg: RunConfig):
    F = FieldSpec.parse(cfg.field)
    g = parse_groupoid(_read(cfg.input))
    eff, arrow = is_effective(g)
    mini, orbit = is_minimal(g)
    A = SteinbergAlgebra(g, F)
    center = center_basis(A)
    cverdict = center_verdict(g, F)
    lie = lie_simplicity_verdict(g, F)
    report = {
        "command": "groupoid",
        "input": cfg.input,
        "field": str(F),
        "units": len(g.units),
        "arrows": len(g.arrows),
        "effective": {"value": eff, "witness": arrow},
        "minimal": {"value": mini, "witness": sorted(orbit, key=g.units.index) if orbit else None},
        "center_dimension": center.dim,
        "commutator_dimension": commutator_subspace(A).dim,
        "center": cverdict.to_json(F),
        "lie": lie.to_json(F),
        "theorems": _theorems(cverdict, lie),
    }
    code = EXIT_PRECONDITION if lie.kind is Kind.INAPPLICABLE else EXIT_OK
    return report, code


def run_ep(cfg: RunConfig):
    F = FieldSpec.parse(cfg.field)
    a = parse_action(_read(cfg.input))
    try:
        rep = ep_verdict(a, F, depth_bound=cfg.depth)
    except NonHausdorffError as exc:
        report = {
            "command": "ep",
            "input": cfg.input,
            "field": str(F),
            "hausdorff": False,
            "reason": str(exc),
            "witness": exc.witness.to_json(),
        }
        return report, EXIT_PRECONDITION
    report = {"command": "ep", "input": cfg.input, "field": str(F)}
    report.update(rep.to_json(F))
    report["theorems"] = _theorems(rep.simple, rep.center, rep.lie)
    code = EXIT_PRECONDITION if rep.lie.kind is Kind.INAPPLICABLE else EXIT_OK
    return report, code


def run_oracle(cfg: RunConfig):
    rows = []
    for n in range(2, cfg.max_n + 1):
        for p in cfg.primes:
            r = cross_check_groupoid(pair_groupoid(n), p, seed=cfg.seed, name=f"P{n}")
            row = r.to_json()
            row["trace_criterion"] = "Simple" if n % p else "NotSimple"
            row.pop("note")
            rows.append(row)
    agree = all(r["agree"] and r["theorem"] == r["trace_criterion"] for r in rows)
    report = {"command": "oracle", "seed": cfg.seed, "rows": rows, "all_agree": agree}
    return report, EXIT_OK if agree else EXIT_BREACH


RUNNERS = {"lpa": run_lpa, "groupoid": run_groupoid, "ep": run_ep, "oracle": run_oracle}


def _verdict_line(label, v):
    text = f"{label}: {v['verdict']}"
    if v.get("reason"):
        text += f" ({v['reason']})"
    if "witness" in v:
        text += f" witness={v['witness']}"
    if "certificate" in v:
        text += f" certificate={v['certificate']}"
    return text


def format_text(report: dict) -> str:
    cmd = report["command"]
    lines = []
    if cmd == "lpa":
        lines.append(f"graph {report['input']} over {report['field']}")
        lines.append(_verdict_line("L_K(E)", report["simple"]))
        lines.append(_verdict_line("Lie algebra [L_K(E), L_K(E)]", report["lie"]))
        lines.append(_verdict_line("center", report["center"]))
        lines.append("B-vectors: " + "; ".join("(" + ", ".join(b) + ")" for b in report["b_vectors"]))
    elif cmd == "groupoid":
        lines.append(f"groupoid {report['input']} over {report['field']}: "
                     f"{report['units']} units, {report['arrows']} arrows")
        lines.append(f"effective: {report['effective']['value']}"
                     + (f" witness={report['effective']['witness']}" if report['effective']['witness'] else ""))
        lines.append(f"minimal: {report['minimal']['value']}"
                     + (f" witness={report['minimal']['witness']}" if report['minimal']['witness'] else ""))
        lines.append(f"center dimension: {report['center_dimension']}; "
                     f"commutator dimension: {report['commutator_dimension']}")
        lines.append(_verdict_line("center", report["center"]))
        lines.append(_verdict_line("Lie algebra [A, A]", report["lie"]))
    elif cmd == "ep":
        lines.append(f"action {report['input']} over {report['field']}")
        if not report["hausdorff"]:
            lines.append(f"not Hausdorff: {report['reason']}")
            lines.append(f"witness: {report['witness']}")
        else:
            lines.append("Hausdorff: True")
            lines.append(_verdict_line("L_K(G, E)", report["simple"]))
            lines.append(f"unital: {report['unital']}")
            lines.append(_verdict_line("center", report["center"]))
            lines.append(_verdict_line("Lie algebra", report["lie"]))
    elif cmd == "oracle":
        lines.append(f"theorem vs oracle grid (seed {report['seed']})")
        for r in report["rows"]:
            lines.append(f"  {r['groupoid']:<4} {r['field']:<6} dim={r['lie_dimension']:<3} "
                         f"theorem={r['theorem']:<10} oracle={r['oracle']:<10} agree={r['agree']}")
        lines.append(f"all agree: {report['all_agree']}")
    if report.get("theorems"):
        lines.append("theorems applied:")
        lines.extend(f"  - {t}" for t in report["theorems"])
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieverdict",
        description="Simplicity, center and Lie-simplicity verdicts for Leavitt path algebras, "
                    "Steinberg algebras of finite groupoids and Exel-Pardo algebras.",
        epilog="Graphs must have finitely many vertices. With infinitely many vertices a simple "
               "L_K(E) always has a simple commutator Lie algebra and zero center.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="JSON input file")
            p.add_argument("--field", default="Q", help="'Q' or 'Fp:<p>' (default Q)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    common(sub.add_parser("lpa", help="Leavitt path algebra of a graph"))
    common(sub.add_parser("groupoid", help="Steinberg algebra of a finite groupoid"))
    ep = sub.add_parser("ep", help="Exel-Pardo algebra of a self-similar action")
    common(ep)
    ep.add_argument("--depth", type=int, default=None, help="bound for strongly-fixed path enumeration")
    oracle = sub.add_parser("oracle", help="cross-check the commutator criterion on pair groupoids")
    common(oracle, with_input=False)
    oracle.add_argument("--primes", default="2,3,5")
    oracle.add_argument("--max-n", type=int, default=4)
    return parser


def run(cfg: RunConfig) -> tuple[dict | None, int, str]:
    """Run one subcommand; returns (report, exit code, error message)."""
    try:
        report, code = RUNNERS[cfg.subcommand](cfg)
        return report, code, ""
    except InvariantBreach as exc:
        return None, EXIT_BREACH, f"invariant breach: {exc}"
    except (FileNotFoundError, ValueError, FieldError, GraphError, GroupoidError, ActionError,
            LieAlgebraError, OracleInconclusive) as exc:
        return None, EXIT_PRECONDITION, f"error: {exc}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        input=getattr(args, "input", None),
        field=getattr(args, "field", "Q"),
        format=args.format,
        depth=getattr(args, "depth", None),
        seed=args.seed,
    )
    if args.subcommand == "oracle":
        try:
            cfg.primes = [int(p) for p in args.primes.split(",") if p.strip()]
        except ValueError:
            print(f"error: --primes must be a comma-separated list of integers, got {args.primes!r}", file=sys.stderr)
            return EXIT_PRECONDITION
        cfg.max_n = args.max_n
    report, code, err = run(cfg)
    if report is None:
        print(err, file=sys.stderr)
        return code
    if cfg.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(format_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
