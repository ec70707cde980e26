"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a check or scenario failed,
2 usage, file, or construction error. '-' stands for stdin/stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io as algio
from .algebra import (
    derived_series,
    is_filiform,
    is_nilpotent,
    is_solvable,
    leibniz_check,
    lower_central_series,
    nilpotency_index,
    series_dims,
)
from .derivations import derivation_space, max_nil_independent
from .extensions import build_extension_problem, diagonal_branches, eliminate, generate_constraints
from .families import ConstructionError, FAMILY_IDS, FamilySpec, family_catalog, make_family
from .verify import MAX_N, SCENARIOS, run_all, run_scenario


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _load_algebra(path: str):
    try:
        return algio.loads(_read_text(path))
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    except algio.AlgebraFileError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _parse_params(text: str) -> dict:
    params = {}
    if not text:
        return params
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError(f"parameter {chunk!r} is not of the form name=value")
        name, _, value = chunk.partition("=")
        params[name.strip()] = Fraction(value.strip())
    return params


def _cmd_check(args) -> int:
    alg = _load_algebra(args.file)
    report = leibniz_check(alg)
    if report.ok:
        print(f"pass: identity holds on all {alg.dim}^3 basis triples")
        return 0
    print(f"fail: {len(report.failures)} defective triples")
    for i, j, k, defect in report.failures[: args.limit]:
        print(f"  ({alg.labels[i]},{alg.labels[j]},{alg.labels[k]}): defect {[str(c) for c in defect]}")
    if len(report.failures) > args.limit:
        print(f"  ... {len(report.failures) - args.limit} more")
    return 1


def _cmd_series(args) -> int:
    alg = _load_algebra(args.file)
    lcs = series_dims(lower_central_series(alg))
    ds = series_dims(derived_series(alg))
    nilpotent = is_nilpotent(alg)
    print(f"lower central dims: {list(lcs)}")
    print(f"derived dims:       {list(ds)}")
    print(f"nilpotent: {nilpotent}" + (f" (index {nilpotency_index(alg)})" if nilpotent else ""))
    print(f"solvable:  {is_solvable(alg)}")
    print(f"filiform:  {is_filiform(alg)}")
    return 0


def _cmd_derive(args) -> int:
    alg = _load_algebra(args.file)
    space = derivation_space(alg)
    print(f"derivation space dimension: {space.dimension}")
    if args.nil_independent:
        print(f"max nil-independent: {max_nil_independent(space)}")
    if not args.no_basis:
        for name, mat in zip(space.param_names, space.basis):
            print(f"basis derivation {name}:")
            for row in mat.rows:
                print("  [" + ", ".join(str(c) for c in row) + "]")
    return 0


def _catalog_text() -> str:
    lines = []
    for info in family_catalog():
        parity = f", {info.parity} n" if info.parity else ""
        params = f" params: {info.params}" if info.params else ""
        lines.append(f"  {info.family:6s} {info.description} ({info.constraints}{parity}){params}")
    return "\n".join(lines)


def _cmd_family(args) -> int:
    if args.list:
        print("families:")
        print(_catalog_text())
        return 0
    if not args.family or args.n is None:
        print("error: family id and --n are required (or use --list)", file=sys.stderr)
        return 2
    if args.family not in FAMILY_IDS:
        print(f"error: unknown family {args.family!r}; known families:\n{_catalog_text()}",
              file=sys.stderr)
        return 2
    try:
        params = _parse_params(args.params)
        alg = make_family(FamilySpec(args.family, args.n, params))
    except (ValueError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_text(args.out, algio.dumps(alg))
    return 0


def _parse_hypotheses(text: str, problem):
    """name=value pairs on template entries: a<k> is entry (0,k), b<k> is
    entry (1,k), d<i>_<j> is entry (i,j)."""
    hyps = []
    if not text:
        return hyps
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, value = chunk.partition("=")
        name = name.strip()
        val = Fraction(value.strip())
        if name.startswith("a") and name[1:].isdigit():
            i, j = 0, int(name[1:])
        elif name.startswith("b") and name[1:].isdigit():
            i, j = 1, int(name[1:])
        elif name.startswith("d") and "_" in name:
            si, sj = name[1:].split("_", 1)
            i, j = int(si), int(sj)
        else:
            raise ValueError(f"cannot parse hypothesis name {name!r} (use a<k>, b<k>, or d<i>_<j>)")
        hyps.append(problem.template.rows[i][j] - val)
    return hyps


def _outcome_payload(hyp, outcome) -> dict:
    payload = {
        "hypotheses": [f"{h} = 0" for h in hyp],
        "outcome": outcome.kind,
        "substitutions": [{"variable": name, "value": str(value), "from": str(src)}
                          for name, value, src in outcome.assignments],
    }
    if outcome.kind == "contradiction":
        payload["witness"] = f"{outcome.witness} = 0"
    else:
        payload["residual"] = [str(e) for e in outcome.residual]
        payload["free"] = list(outcome.free)
    return payload


def _cmd_extend(args) -> int:
    alg = _load_algebra(args.file)
    try:
        problem = build_extension_problem(alg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.hypotheses:
        try:
            branches = [_parse_hypotheses(args.hypotheses, problem)]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        branches = diagonal_branches(problem)
    if not branches:
        print("every derivation of the algebra is nilpotent: no non-nilpotent extension exists")
        return 0
    payloads = []
    for hyp in branches:
        outcome = eliminate(generate_constraints(problem, hypotheses=hyp))
        payloads.append(_outcome_payload(hyp, outcome))
    if args.format == "machine":
        print(json.dumps(payloads, indent=1, sort_keys=True))
    else:
        for payload in payloads:
            print(f"branch [{'; '.join(payload['hypotheses'])}] -> {payload['outcome']}")
            for step in payload["substitutions"]:
                print(f"  {step['variable']} := {step['value']}   (from {step['from']} = 0)")
            if "witness" in payload:
                print(f"  witness: {payload['witness']}")
            else:
                print(f"  free: {', '.join(payload['free']) or '(none)'}")
                for res in payload["residual"]:
                    print(f"  residual: {res} = 0")
    return 0


def _parse_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _cmd_verify(args) -> int:
    try:
        n_values = _parse_range(args.n)
    except ValueError:
        print(f"error: cannot parse --n {args.n!r} (use N or A..B)", file=sys.stderr)
        return 2
    if args.scenario == "all":
        reports = run_all(n_values, seed=args.seed)
    elif args.scenario in SCENARIOS:
        sc = SCENARIOS[args.scenario]
        admissible = [n for n in n_values if sc.admissible(n)]
        if not admissible:
            print(f"error: no admissible n in {args.n} for {args.scenario} "
                  f"(requires {sc.rule()})", file=sys.stderr)
            return 2
        reports = [run_scenario(args.scenario, n, args.seed) for n in admissible]
    else:
        known = "\n  ".join(f"{s.id}: {s.description}" for s in
                            sorted(SCENARIOS.values(), key=lambda s: s.id))
        print(f"error: unknown scenario {args.scenario!r}; known scenarios:\n  {known}",
              file=sys.stderr)
        return 2
    if args.format == "machine":
        print(json.dumps([r.canonical() for r in reports], indent=1, sort_keys=True))
    else:
        for r in reports:
            print(f"{r.scenario} n={r.n} seed={r.seed}: {r.verdict}  [{r.wall_time:.2f}s]")
            for line in r.details:
                print(f"    {line}")
            for line in r.findings:
                print(f"    finding: {line}")
    return 0 if all(r.verdict == "pass" for r in reports) else 1


def _cmd_conjecture(args) -> int:
    scenario = "conj-i" if args.variant == "A" else "conj-ii"
    try:
        report = run_scenario(scenario, args.n, args.seed, trials=args.trials)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{scenario} n={args.n} trials={args.trials} seed={args.seed}: {report.verdict}")
    for line in report.details:
        print(f"  {line}")
    for line in report.findings:
        print(f"  finding: {line}")
    return 0 if report.verdict == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibnizalg",
        description="Exact-arithmetic toolkit for Leibniz algebras given by structure constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the Leibniz identity on an algebra file")
    p.add_argument("file", help="algebra file ('-' for stdin)")
    p.add_argument("--limit", type=int, default=10, help="max failing triples to print")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("series", help="lower central and derived series, structural flags")
    p.add_argument("file")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("derive", help="derivation space of an algebra")
    p.add_argument("file")
    p.add_argument("--nil-independent", action="store_true", help="also print the nil-independence count")
    p.add_argument("--no-basis", action="store_true", help="suppress the basis matrices")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("family", help="construct a named family member")
    p.add_argument("family", nargs="?", help=f"one of: {', '.join(FAMILY_IDS)}")
    p.add_argument("--n", type=int, help="family index n (algebra dimension n+1 or n+2)")
    p.add_argument("--params", default="", help="comma-separated name=value (exact rationals)")
    p.add_argument("--out", default="-", help="output file ('-' for stdout)")
    p.add_argument("--list", action="store_true", help="list the family catalog")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("extend", help="solve the codimension-one solvable extension problem")
    p.add_argument("file", help="nilradical algebra file")
    p.add_argument("--template", default="generic", choices=("generic",),
                   help="x-action template; 'generic' is the computed derivation space")
    p.add_argument("--hypotheses", default="",
                   help="comma-separated normalizations on the derivation template, "
                        "e.g. a0=1 (entry (0,0)); default: all non-nilpotency branches")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("verify", help="run verification scenarios")
    p.add_argument("scenario", help="scenario id or 'all'")
    p.add_argument("--n", required=True, help="N or A..B")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="sample the tail-elimination conjecture")
    p.add_argument("--variant", choices=("A", "B"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
