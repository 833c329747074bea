"""Command-line front end.

Subcommands wire the library into one workflow: obfuscate a tree, scan
it, evaluate detection loss over technique combinations, report code
metrics, and flag likely obfuscation. stdout carries data, stderr
carries diagnostics. Exit codes: 0 ok, 1 runtime failure, 2 bad input
(obfuscate), 64 usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .harness import (
    NoFilesMatched,
    ParseFailures,
    Project,
    detect_obfuscation,
    emit_external_report,
    evaluate,
    ingest_project,
    scan_project,
    write_variant,
)
from .js import JsError, SourceFile, parse_source
from .metrics import EmptyInput, aggregate_metrics, compute_metrics, render_metrics_table
from .obfuscate import (
    TECHNIQUES,
    InvalidMode,
    ObfuscationConfig,
    TransformParams,
    enumerate_configs,
)
from .scan import ScanReport, RulesetError, load_ruleset

EX_OK = 0
EX_RUNTIME = 1
EX_INPUT = 2
EX_USAGE = 64

MODES = ("singles", "all", "by-count")
_MODE_MAP = {"singles": "singles", "all": "all_combinations", "by-count": "by_count"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the convention here reserves 64
    def error(self, message: str):
        raise UsageError(message)


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _resolve_seed(value: int | None) -> int:
    """Explicit --seed wins; VDL_SEED is the environment fallback."""
    if value is not None:
        return value
    raw = os.environ.get("VDL_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"VDL_SEED must be an integer, got {raw!r}")


def _parse_techniques(specs: list[str] | None) -> frozenset[str]:
    names = [name for spec in specs or [] for name in spec.split(",") if name]
    unknown = sorted(set(names) - set(TECHNIQUES))
    if unknown:
        raise UsageError(f"unknown techniques: {', '.join(unknown)}")
    if not names:
        raise UsageError("at least one --tech is required")
    return frozenset(names)


def _load_paths(paths: list[str]) -> Project:
    """One directory becomes an ingested tree; bare files become a flat project."""
    if len(paths) == 1 and Path(paths[0]).is_dir():
        return ingest_project(paths[0])
    files = []
    programs = []
    for index, raw in enumerate(paths):
        path = Path(raw)
        if path.is_dir():
            raise UsageError("directories cannot be mixed with files")
        content = path.read_text(encoding="utf-8")
        file = SourceFile(path=path.name, content=content, file_id=index)
        files.append(file)
        programs.append(parse_source(content, file_id=index))
    if not files:
        raise NoFilesMatched("no input files")
    return Project(id="cli", root=str(Path.cwd()), files=tuple(files), programs=tuple(programs))


# -- subcommands -------------------------------------------------------------------


def cmd_obfuscate(args: argparse.Namespace) -> int:
    techniques = _parse_techniques(args.tech)
    seed = _resolve_seed(args.seed)
    overrides = {
        "ss_chunk_len": args.chunk,
        "dci_ratio": args.ratio,
        "cff_min_stmts": args.min_stmts,
        "sa_index_shift": args.shift,
    }
    params = TransformParams(**{k: v for k, v in overrides.items() if v is not None})
    config = ObfuscationConfig(techniques=techniques, seed=seed, params=params)
    if "SD" in techniques and "CMP" not in techniques:
        _diag("note: SD implies CMP; output will be compacted")
    try:
        project = _load_paths(args.paths)
        variant = write_variant(project, config, args.out)
    except (JsError, ParseFailures, NoFilesMatched, OSError) as exc:
        _diag(f"error: {exc}")
        return EX_INPUT
    _diag(f"wrote {len(variant.files)} file(s) under {variant.output_root}")
    print(variant.label)
    return EX_OK


def _report_csv(report: ScanReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rule_id", "severity", "file", "line", "message"])
    for f in report.findings:
        writer.writerow([f.rule_id, f.severity.value, f.file, f.span.start_line, f.message])
    return buf.getvalue()


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        ruleset = load_ruleset(args.ruleset) if args.ruleset else None
        project = _load_paths(args.paths)
        report = scan_project(project, ruleset)
    except (JsError, ParseFailures, NoFilesMatched, RulesetError, OSError) as exc:
        _diag(f"error: {exc}")
        return EX_RUNTIME
    tallies = ", ".join(f"{sev}: {n}" for sev, n in report.severity_counts.items() if n)
    _diag(f"{len(report.findings)} finding(s)" + (f" ({tallies})" if tallies else ""))
    if args.format == "csv":
        sys.stdout.write(_report_csv(report))
    else:
        sys.stdout.write(emit_external_report(report, tool="obfuscan"))
    return EX_OK


def _parse_mode(tokens: list[str]) -> tuple[str, int | None]:
    if not tokens or tokens[0] not in MODES:
        raise UsageError(f"--mode must be one of {', '.join(MODES)}")
    mode, rest = tokens[0], tokens[1:]
    if mode == "by-count":
        if len(rest) != 1:
            raise UsageError("--mode by-count needs a single count, e.g. --mode by-count 5")
        try:
            return mode, int(rest[0])
        except ValueError:
            raise UsageError(f"by-count takes an integer, got {rest[0]!r}")
    if rest:
        raise UsageError(f"--mode {mode} takes no extra argument")
    return mode, None


def _discover_projects(root: Path, layout: str) -> list[Project]:
    """Multi-project layout: one project per immediate subdirectory.

    ``auto`` reads the directory as a single project when it has sources
    at its top level, and as a container of projects otherwise.
    """
    if not root.is_dir():
        raise NoFilesMatched(f"not a directory: {root}")
    if layout == "single":
        return [ingest_project(root)]
    if layout == "auto" and any(p.suffix == ".js" for p in root.iterdir() if p.is_file()):
        return [ingest_project(root)]
    projects = []
    for sub in sorted(p for p in root.iterdir() if p.is_dir()):
        try:
            projects.append(ingest_project(sub))
        except NoFilesMatched:
            continue
    if not projects and layout == "auto":
        return [ingest_project(root)]
    if not projects:
        raise NoFilesMatched(f"no project subdirectories with sources under {root}")
    return projects


def cmd_evaluate(args: argparse.Namespace) -> int:
    mode, count = _parse_mode(args.mode)
    seed = _resolve_seed(args.seed)
    try:
        configs = enumerate_configs(mode=_MODE_MAP[mode], seed=seed, count=count)
    except InvalidMode as exc:
        raise UsageError(str(exc))
    try:
        ruleset = load_ruleset(args.ruleset) if args.ruleset else None
        projects = _discover_projects(Path(args.projects_dir), args.layout)
    except (NoFilesMatched, ParseFailures, RulesetError, OSError) as exc:
        _diag(f"error: {exc}")
        return EX_RUNTIME
    _diag(
        f"evaluating {len(projects)} project(s) x {len(configs)} config(s) "
        f"(seed {seed}) -> {args.out}"
    )
    result = evaluate(projects, configs, args.out, ruleset=ruleset, parallelism=args.parallelism)
    summary_path = Path(result.out_dir) / "summary.json"
    sys.stdout.write(summary_path.read_text(encoding="utf-8"))
    if result.variants_succeeded == 0:
        _diag("error: no variant succeeded")
        return EX_RUNTIME
    return EX_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    try:
        project = _load_paths(args.paths)
        per_file = [compute_metrics(f, p) for f, p in zip(project.files, project.programs)]
        table = render_metrics_table(aggregate_metrics(per_file))
    except (JsError, ParseFailures, NoFilesMatched, EmptyInput, OSError) as exc:
        _diag(f"error: {exc}")
        return EX_RUNTIME
    print(table)
    return EX_OK


def cmd_detect(args: argparse.Namespace) -> int:
    try:
        content = Path(args.file).read_text(encoding="utf-8")
        program = parse_source(content)
    except (JsError, OSError) as exc:
        _diag(f"error: {exc}")
        return EX_RUNTIME
    result = detect_obfuscation(program)
    print(f"score: {result.score:.1f}")
    for name, raised in result.flags:
        print(f"{name}: {'yes' if raised else 'no'}")
    return EX_OK


# -- argument wiring ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="obfuscan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_obf = sub.add_parser("obfuscate", help="transform sources under one config")
    p_obf.add_argument("--tech", action="append", metavar="ACRONYM",
                       help="technique acronym, repeatable or comma-separated")
    p_obf.add_argument("--seed", type=int, default=None)
    p_obf.add_argument("--chunk", type=int, default=None, help="split-strings chunk length")
    p_obf.add_argument("--ratio", type=float, default=None, help="dead-code injection ratio")
    p_obf.add_argument("--min-stmts", type=int, default=None, help="flattening threshold")
    p_obf.add_argument("--shift", type=int, default=None, help="string-array index shift")
    p_obf.add_argument("--out", default="out", help="output directory (default: out)")
    p_obf.add_argument("paths", nargs="+", help="source files or one directory")
    p_obf.set_defaults(func=cmd_obfuscate)

    p_scan = sub.add_parser("scan", help="run the rule-based scanner")
    p_scan.add_argument("--ruleset", help="custom ruleset JSON")
    p_scan.add_argument("--format", choices=("json", "csv"), default="json")
    p_scan.add_argument("paths", nargs="+", help="source files or one directory")
    p_scan.set_defaults(func=cmd_scan)

    p_eval = sub.add_parser("evaluate", help="measure detection loss over variants")
    p_eval.add_argument("--mode", nargs="+", default=["singles"],
                        metavar="MODE", help="singles | all | by-count K")
    p_eval.add_argument("--seed", type=int, default=None)
    p_eval.add_argument("--out", default="out", help="output directory (default: out)")
    p_eval.add_argument("--parallelism", type=int, default=1)
    p_eval.add_argument("--ruleset", help="custom ruleset JSON")
    p_eval.add_argument("--layout", choices=("auto", "single", "multi"), default="auto",
                        help="read projects_dir as one project or one per subdirectory")
    p_eval.add_argument("projects_dir", help="directory of projects (or one project)")
    p_eval.set_defaults(func=cmd_evaluate)

    p_met = sub.add_parser("metrics", help="report size and complexity metrics")
    p_met.add_argument("paths", nargs="+", help="source files or one directory")
    p_met.set_defaults(func=cmd_metrics)

    p_det = sub.add_parser("detect", help="flag likely obfuscation in one file")
    p_det.add_argument("file")
    p_det.set_defaults(func=cmd_detect)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _diag(f"usage error: {exc}")
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
