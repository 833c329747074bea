"""End-to-end evaluation: scan baselines, generate variants, compute VDL.

Work fans out over (project x config) items; each item is independent
and owns its output directory, so results only meet again in the final
deterministic merge.  Reports are byte-identical for a fixed seed no
matter the parallelism degree.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..js import parse_source
from ..obfuscate import ObfuscationConfig
from ..scan import ScanReport, scan_files
from ..scan.rules import Rule
from .boxstats import aggregate, render_aggregate_csv, undefined_count
from .projects import Project
from .variants import BASELINE_LABEL, variant_label, write_variant
from .vdl import SEVERITY_FILTERS, VdlRecord, compute_vdl

REPORT_NAME = "vdl_report.json"
SUMMARY_NAME = "summary.json"
CSV_NAMES = {
    "technique": "aggregate_by_technique.csv",
    "plugin_count": "aggregate_by_plugin_count.csv",
    "severity": "aggregate_by_severity.csv",
}


@dataclass(frozen=True)
class VariantFailure:
    project_id: str
    config_label: str
    seed: int
    error: str


@dataclass(frozen=True)
class EvaluationResult:
    records: tuple[VdlRecord, ...]
    failures: tuple[VariantFailure, ...]
    variants_succeeded: int
    undefined_records: int
    out_dir: str


def scan_project(project: Project, ruleset: Sequence[Rule] | None = None) -> ScanReport:
    """Baseline scan over a project's parsed files."""
    parsed = list(zip(project.relative_paths, project.programs))
    return scan_files(parsed, ruleset=ruleset, project_id=project.id, variant_id=BASELINE_LABEL)


def _filter_order(severity_filter: str | None) -> int:
    return SEVERITY_FILTERS.index(severity_filter)


def _record_sort_key(record: VdlRecord):
    return (
        record.project_id,
        record.config_label,
        record.seed,
        _filter_order(record.severity_filter),
    )


def _evaluate_variant(
    project: Project,
    baseline: ScanReport,
    config: ObfuscationConfig,
    out_dir: Path,
    ruleset: Sequence[Rule] | None,
) -> list[VdlRecord]:
    variant = write_variant(project, config, out_dir / project.id)
    root = Path(variant.output_root)
    parsed = []
    for file_id, relpath in enumerate(variant.files):
        text = (root / relpath).read_text(encoding="utf-8")
        parsed.append((relpath, parse_source(text, file_id=file_id)))
    report = scan_files(parsed, ruleset=ruleset, project_id=project.id, variant_id=variant.label)
    return [
        compute_vdl(
            baseline,
            report,
            severity_filter,
            config_label=config.label,
            seed=config.seed,
        )
        for severity_filter in SEVERITY_FILTERS
    ]


def _record_payload(record: VdlRecord) -> dict:
    return {
        "project": record.project_id,
        "config": record.config_label,
        "seed": record.seed,
        "severity_filter": record.severity_filter,
        "baseline": record.baseline_count,
        "matched": record.matched_count,
        "vdl": record.vdl_percent,
    }


def _write_reports(
    out_dir: Path,
    records: tuple[VdlRecord, ...],
    failures: tuple[VariantFailure, ...],
    projects: Sequence[Project],
    configs_attempted: int,
    variants_succeeded: int,
) -> None:
    report = [_record_payload(r) for r in records]
    (out_dir / REPORT_NAME).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")

    overall = [r for r in records if r.severity_filter is None]
    for mode, name in CSV_NAMES.items():
        source = records if mode == "severity" else overall
        csv_text = render_aggregate_csv(aggregate(list(source), mode))
        (out_dir / name).write_text(csv_text, encoding="utf-8")

    summary = {
        "projects": [p.id for p in projects],
        "configs_attempted": configs_attempted,
        "variants_succeeded": variants_succeeded,
        "variants_failed": len(failures),
        "undefined_records": undefined_count(records),
        "failures": [
            {
                "project": f.project_id,
                "config": f.config_label,
                "seed": f.seed,
                "error": f.error,
            }
            for f in failures
        ],
    }
    (out_dir / SUMMARY_NAME).write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")


def evaluate(
    projects: Sequence[Project],
    configs: Sequence[ObfuscationConfig],
    out_dir: str | Path,
    ruleset: Sequence[Rule] | None = None,
    parallelism: int = 1,
) -> EvaluationResult:
    """Run the full pipeline and write report files under ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    baselines = {project.id: scan_project(project, ruleset) for project in projects}
    for project in projects:
        write_variant(project, ObfuscationConfig(techniques=frozenset()), out / project.id)

    # CMP is implied by SD, so distinct config subsets can share one effective
    # label and would race writing the same tree; run each distinct variant
    # once and let label-twins reuse its outcome (their records are identical).
    items = [(project, config) for project in projects for config in configs]
    canonical: dict[tuple[str, str], int] = {}
    plan: list[int] = []
    unique_items: list[tuple[Project, ObfuscationConfig]] = []
    for project, config in items:
        key = (project.id, variant_label(config))
        if key in canonical:
            twin = unique_items[canonical[key]][1]
            if twin.params != config.params:
                raise ValueError(f"conflicting configs share variant label {key[1]!r}")
        else:
            canonical[key] = len(unique_items)
            unique_items.append((project, config))
        plan.append(canonical[key])

    records: list[VdlRecord] = []
    failures: list[VariantFailure] = []

    def run_item(item: tuple[Project, ObfuscationConfig]):
        project, config = item
        try:
            return _evaluate_variant(project, baselines[project.id], config, out, ruleset)
        except Exception as exc:  # per-variant failures never abort the run
            return VariantFailure(project.id, config.label, config.seed, str(exc))

    workers = max(1, parallelism)
    if workers == 1:
        unique_outcomes = [run_item(item) for item in unique_items]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            unique_outcomes = list(pool.map(run_item, unique_items))

    succeeded = 0
    for index in plan:
        outcome = unique_outcomes[index]
        if isinstance(outcome, VariantFailure):
            failures.append(outcome)
        else:
            succeeded += 1
            records.extend(outcome)

    records.sort(key=_record_sort_key)
    failures.sort(key=lambda f: (f.project_id, f.config_label, f.seed))
    merged = tuple(records)
    failed = tuple(failures)
    _write_reports(out, merged, failed, projects, len(items), succeeded)
    return EvaluationResult(
        records=merged,
        failures=failed,
        variants_succeeded=succeeded,
        undefined_records=undefined_count(merged),
        out_dir=str(out),
    )
