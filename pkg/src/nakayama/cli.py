"""Command-line interface.  JSON on stdout by default; ``--format text`` for tables."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .enumerate import enumerate_admissible
from .families import (
    FAMILIES,
    FamilyCheckFailed,
    TwoAGSpec,
    cluster_tilting_endomorphism_series,
    generate_2AG,
    generate_2AG_sweep,
    generate_dominant_AR_gldim3,
    generate_dominant_AR_lowdim,
    generate_higher_auslander_gldim3,
    generate_higher_auslander_gldim4,
    higher_auslander_gldim4_cyclic,
)
from .filtered import check_duality, epsilon, epsilon_tower
from .harness import SCHEMA, THEOREMS, default_jobs, verify, verify_series
from .homological import profile
from .kupisch import CYCLIC, LINEAR, KupischError, KupischSeries, components, parse
from .reverse import (
    ConstructionInadmissible,
    defect_invariant_reverse,
    enumerate_reverses,
    kupisch_defects,
    weighted_reverse,
)
from .structure import structure_sets

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_help(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").strip("()[]").split(",") if t]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _series(text: str) -> KupischSeries:
    try:
        return parse(text)
    except KupischError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _ranks(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else _ints(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a..b or a list, got {text!r}") from exc


def _series_payload(s: KupischSeries) -> dict[str, Any]:
    out = {"series": s.to_text(), **s.to_dict()}
    if not s.is_connected:
        out["components"] = [c.to_text() for c in components(s)]
    return out


def _render_text(obj: Any, indent: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in _values(v)):
                lines.append(f"{indent}{k}:")
                lines += _render_text(v, indent + "  ")
            else:
                lines.append(f"{indent}{k}: {_flat(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for item in obj:
            if isinstance(item, dict):
                lines += _render_text(item, indent + "- ")
            else:
                lines.append(f"{indent}- {_flat(item)}")
        return lines
    return [f"{indent}{_flat(obj)}"]


def _values(v: Any) -> list:
    return list(v.values()) if isinstance(v, dict) else list(v)


def _flat(v: Any) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_flat(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "(" + ",".join(_flat(x) for x in v) + ")"
    return str(v)


def _emit(args: argparse.Namespace, payload: dict[str, Any]) -> None:
    payload = {"schema": SCHEMA, **payload}
    if args.format == "text":
        print("\n".join(_render_text(payload)))
    else:
        print(json.dumps(payload, indent=None if args.compact else 2))


def cmd_analyze(args: argparse.Namespace) -> int:
    s = args.series
    prof = profile(s)
    if args.flags_only:
        _emit(args, {"series": s.to_text(), "flags": prof.flags()})
        return EXIT_OK
    ss = structure_sets(s)
    _emit(args, {
        **_series_payload(s),
        "rank": s.rank,
        "defect": ss.defect_total,
        "num_relations": ss.num_relations,
        "structure": ss.to_dict(),
        "profile": prof.to_dict(),
    })
    return EXIT_OK


def cmd_epsilon(args: argparse.Namespace) -> int:
    res = epsilon(args.series)
    theta = res.theta
    _emit(args, {
        "input": args.series.to_text(),
        "epsilon": _series_payload(theta),
        "components": [c.to_text() for c in components(theta)],
        "layer_word": list(res.word),
        "vertex_map": {str(k): v for k, v in res.vertex_map.items()},
        "filtered_projective_map": {str(k): v for k, v in res.filtered_projective_map.items()},
    })
    return EXIT_OK


def cmd_eta(args: argparse.Namespace) -> int:
    w = check_duality(args.series)
    _emit(args, {
        "input": args.series.to_text(),
        "eta": _series_payload(w.eta),
        "eta_opposite": _series_payload(w.eta_opposite),
        "epsilon": _series_payload(w.epsilon),
        "duality_holds": w.holds,
    })
    return EXIT_OK if w.holds else EXIT_VIOLATION


def cmd_tower(args: argparse.Namespace) -> int:
    stages = epsilon_tower(args.series, args.max_steps)
    _emit(args, {"input": args.series.to_text(), "tower": [s.to_text() for s in stages]})
    return EXIT_OK


def cmd_reverse(args: argparse.Namespace) -> int:
    theta = args.theta
    if args.weights is None and not args.all:
        lam = defect_invariant_reverse(theta)
        _emit(args, {"theta": theta.to_text(), "weights": list(kupisch_defects(theta.entries)),
                     "reverse": _series_payload(lam)})
        return EXIT_OK
    w = args.weights if args.weights is not None else list(kupisch_defects(theta.entries))
    if args.all:
        found = enumerate_reverses(theta, w, args.limit)
        _emit(args, {"theta": theta.to_text(), "weights": w, "count": len(found),
                     "reverses": [s.to_text() for s in found]})
    else:
        lam = weighted_reverse(theta, w)
        _emit(args, {"theta": theta.to_text(), "weights": w, "reverse": _series_payload(lam)})
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    fam = args.family
    validate = not args.no_validate
    if fam == "2ag":
        _need(args, "theta", "f")
        out = [generate_2AG(TwoAGSpec(args.theta, tuple(args.f), args.placement), validate)]
    elif fam == "2ag-sweep":
        _need(args, "m", "v", "ranks")
        out = generate_2AG_sweep(args.m, args.v, args.ranks, validate)
    elif fam == "ha3":
        _need(args, "ns")
        out = [generate_higher_auslander_gldim3(args.ns, validate)]
    elif fam == "ha4":
        if args.k is not None:
            out = [higher_auslander_gldim4_cyclic(args.k, validate)]
        else:
            _need(args, "ns")
            out = [generate_higher_auslander_gldim4(args.ns, validate)]
    elif fam == "dar3":
        _need(args, "ns")
        out = [generate_dominant_AR_gldim3(args.ns, args.xs, validate)]
    elif fam == "dar-low":
        _need(args, "theta", "mode")
        out = [generate_dominant_AR_lowdim(args.theta, args.mode, args.m or 1, validate)]
    else:
        _need(args, "base", "ns")
        out = [cluster_tilting_endomorphism_series(args.base, args.ns, validate)]
    _emit(args, {"family": fam, "validated": validate, "series": [s.to_text() for s in out]})
    return EXIT_OK


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"--family {args.family} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))


class _Usage(Exception):
    pass


def cmd_enumerate(args: argparse.Namespace) -> int:
    count = 0
    for s in enumerate_admissible(args.rank, args.max, args.kind):
        count += 1
        if args.format == "text":
            print(s.to_text())
        else:
            print(json.dumps({"schema": SCHEMA, **s.to_dict()}))
    if args.count:
        print(json.dumps({"schema": SCHEMA, "count": count}), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.series is not None:
        report = verify_series(args.theorem, args.series)
    else:
        report = verify(args.theorem, args.rank, args.max, args.jobs)
    payload = report.to_dict()
    payload.pop("schema")
    _emit(args, payload)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nakayama", description="Nakayama algebras given by Kupisch series.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--compact", action="store_true", help="single-line JSON")
    # Repeated on each subcommand so the options may follow it.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--compact", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name: str, **kw: Any) -> argparse.ArgumentParser:
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser  # type: ignore[method-assign]

    series_help = "series such as cyclic:2,4,3,3 or linear:2,2,1 or a JSON object"

    a = sub.add_parser("analyze", help="structure sets and homological profile")
    a.add_argument("series", type=_series, help=series_help)
    a.add_argument("--flags-only", action="store_true")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("epsilon", help="the syzygy filtered algebra")
    e.add_argument("series", type=_series, help=series_help)
    e.set_defaults(func=cmd_epsilon)

    h = sub.add_parser("eta", help="the cosyzygy filtered algebra and the duality check")
    h.add_argument("series", type=_series, help=series_help)
    h.set_defaults(func=cmd_eta)

    t = sub.add_parser("tower", help="iterate epsilon")
    t.add_argument("series", type=_series, help=series_help)
    t.add_argument("--max-steps", type=int, default=32)
    t.set_defaults(func=cmd_tower)

    r = sub.add_parser("reverse", help="reverses over a given Theta")
    r.add_argument("--theta", type=_series, required=True)
    r.add_argument("--weights", type=_ints, help="default: the defect vector of Theta")
    r.add_argument("--all", action="store_true", help="every reverse for these weights")
    r.add_argument("--limit", type=int)
    r.set_defaults(func=cmd_reverse)

    g = sub.add_parser("generate", help="closed-form families")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--theta", type=_series)
    g.add_argument("--f", type=_ints, help="2ag: values of f in {1,2}")
    g.add_argument("--placement", type=int, default=0)
    g.add_argument("--m", type=int, help="2ag-sweep: projective length; dar-low: extra weight")
    g.add_argument("--v", type=_ints, help="2ag-sweep: 0/1 marks")
    g.add_argument("--ranks", type=_ranks, help="2ag-sweep: a..b or a list")
    g.add_argument("--ns", type=_ints)
    g.add_argument("--xs", type=_ints)
    g.add_argument("--k", type=int, help="ha4: cyclic case (344)^k")
    g.add_argument("--mode", choices=("domdim1", "domdim2"))
    g.add_argument("--base", choices=("ha3", "ha4"), help="cto: which family")
    g.add_argument("--no-validate", action="store_true")
    g.set_defaults(func=cmd_generate)

    n = sub.add_parser("enumerate", help="stream admissible series as JSON lines")
    n.add_argument("--rank", type=int, required=True)
    n.add_argument("--max", type=int, required=True)
    n.add_argument("--kind", choices=(CYCLIC, LINEAR), default=CYCLIC)
    n.add_argument("--count", action="store_true", help="print the total to stderr")
    n.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="exhaustive theorem checks")
    v.add_argument("--theorem", choices=THEOREMS, required=True)
    v.add_argument("--rank", type=int, default=6)
    v.add_argument("--max", type=int, default=8)
    v.add_argument("--jobs", type=int, default=None, help=f"default from NAKAYAMA_JOBS ({default_jobs()})")
    v.add_argument("--series", type=_series, help="replay a single algebra")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (KupischError, _Usage) as exc:
        print(f"nakayama {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionInadmissible, FamilyCheckFailed) as exc:
        print(f"nakayama {args.command}: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
