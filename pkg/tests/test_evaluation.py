"""End-to-end tests for variant generation and the evaluation pipeline."""

from __future__ import annotations

import json

import pytest

from obfuscan.harness import (
    BASELINE_LABEL,
    CSV_NAMES,
    REPORT_NAME,
    SUMMARY_NAME,
    evaluate,
    generate_variants,
    ingest_project,
    scan_project,
    variant_label,
)
from obfuscan.js import parse_source
from obfuscan.obfuscate import ObfuscationConfig, TransformParams, enumerate_configs

VULNERABLE = (
    'var db = {query: function (s) { print("Q:" + s); return 1; }};\n'
    'var req = {query: {accountId: "acct-7"}};\n'
    "function eval(code) {\n"
    "  return code;\n"
    "}\n"
    "function handler() {\n"
    '  var q = req.query["accountId"];\n'
    "  db.query(q);\n"
    "}\n"
    'eval("payload");\n'
    "handler();\n"
)

CLEAN = (
    "function double(n) {\n"
    "  return n * 2;\n"
    "}\n"
    "print(double(21));\n"
)


def make_project(tmp_path, name="webapp"):
    root = tmp_path / name
    (root / "lib").mkdir(parents=True)
    (root / "app.js").write_text(VULNERABLE, encoding="utf-8")
    (root / "lib" / "util.js").write_text(CLEAN, encoding="utf-8")
    return ingest_project(root)


# -- labels and variant trees -----------------------------------------------------


def test_variant_label_sorts_acronyms():
    config = ObfuscationConfig(techniques=frozenset({"SA", "CFF", "SS"}), seed=7)
    assert variant_label(config) == "CFF+SA+SS_s7"


def test_baseline_label():
    assert variant_label(ObfuscationConfig(techniques=frozenset())) == BASELINE_LABEL


def test_generate_variants_mirrors_tree(tmp_path):
    project = make_project(tmp_path)
    out = tmp_path / "out"
    variants = generate_variants(project, enumerate_configs(mode="singles", seed=1), out)
    assert len(variants) == 8
    for variant in variants:
        for relpath in variant.files:
            target = out / variant.label / relpath
            assert target.is_file()
            parse_source(target.read_text(encoding="utf-8"))  # re-parses cleanly
        manifest = json.loads((out / variant.label / "manifest.json").read_text())
        assert manifest["project"] == project.id
        assert manifest["label"] == variant.label
        assert manifest["files"] == list(project.relative_paths)
        assert manifest["seed"] == 1


def test_variant_file_count_matches_project(tmp_path):
    project = make_project(tmp_path)
    out = tmp_path / "out"
    config = ObfuscationConfig(techniques=frozenset({"SIMP", "DP"}), seed=4)
    (variant,) = generate_variants(project, [config], out)
    written = [p for p in (out / variant.label).rglob("*.js")]
    assert len(written) == len(project.files)


def test_self_defending_variant_written_compact(tmp_path):
    project = make_project(tmp_path)
    out = tmp_path / "out"
    config = ObfuscationConfig(techniques=frozenset({"SD"}), seed=2)
    (variant,) = generate_variants(project, [config], out)
    assert variant.label == "CMP+SD_s2"
    text = (out / variant.label / "app.js").read_text(encoding="utf-8")
    assert text.count("\n") == 1  # one line plus trailing newline


# -- the pipeline ------------------------------------------------------------------


def test_evaluate_singles(tmp_path):
    project = make_project(tmp_path)
    configs = enumerate_configs(mode="singles", seed=1)
    result = evaluate([project], configs, tmp_path / "out")
    assert result.variants_succeeded == 8
    assert result.failures == ()
    # 8 configs x (overall + 4 severities + 2 projections)
    assert len(result.records) == 56
    labels = sorted({r.config_label for r in result.records})
    assert labels == ["CFF", "CMP", "CMP+SD", "DCI", "DP", "SA", "SIMP", "SS"]


def test_evaluate_records_are_sorted(tmp_path):
    project = make_project(tmp_path)
    result = evaluate([project], enumerate_configs(mode="singles", seed=1), tmp_path / "out")
    keys = [
        (r.project_id, r.config_label, r.seed, r.severity_filter or "")
        for r in result.records
    ]
    by_label = [k[1] for k in keys]
    assert by_label == sorted(by_label)
    # per-variant filter order: overall first
    assert result.records[0].severity_filter is None


def test_evaluate_writes_reports(tmp_path):
    project = make_project(tmp_path)
    out = tmp_path / "out"
    result = evaluate([project], enumerate_configs(mode="singles", seed=1), out)
    report = json.loads((out / REPORT_NAME).read_text())
    assert len(report) == len(result.records)
    entry = report[0]
    assert set(entry) == {"project", "config", "seed", "severity_filter", "baseline", "matched", "vdl"}
    summary = json.loads((out / SUMMARY_NAME).read_text())
    assert summary["projects"] == [project.id]
    assert summary["configs_attempted"] == 8
    assert summary["variants_succeeded"] == 8
    assert summary["variants_failed"] == 0
    assert summary["undefined_records"] == result.undefined_records
    for name in CSV_NAMES.values():
        text = (out / name).read_text()
        assert text.startswith("group_by,group_key,n,")


def test_evaluate_baseline_tree_written(tmp_path):
    project = make_project(tmp_path)
    out = tmp_path / "out"
    evaluate([project], enumerate_configs(mode="singles", seed=1), out)
    baseline_dir = out / project.id / BASELINE_LABEL
    assert (baseline_dir / "app.js").is_file()
    assert (baseline_dir / "lib" / "util.js").is_file()


def test_evaluate_deterministic_across_parallelism(tmp_path):
    project = make_project(tmp_path)
    configs = enumerate_configs(mode="singles", seed=1)
    out1 = tmp_path / "serial"
    out8 = tmp_path / "parallel"
    evaluate([project], configs, out1, parallelism=1)
    evaluate([project], configs, out8, parallelism=8)
    names = [REPORT_NAME, SUMMARY_NAME, *CSV_NAMES.values()]
    for name in names:
        assert (out1 / name).read_bytes() == (out8 / name).read_bytes(), name


def test_evaluate_records_failures_and_continues(tmp_path):
    project = make_project(tmp_path)
    good = ObfuscationConfig(techniques=frozenset({"CMP"}), seed=1)
    bad = ObfuscationConfig(
        techniques=frozenset({"SS"}), seed=1, params=TransformParams(ss_chunk_len=0)
    )
    result = evaluate([project], [good, bad], tmp_path / "out")
    assert result.variants_succeeded == 1
    assert len(result.failures) == 1
    failure = result.failures[0]
    assert failure.config_label == "SS"
    assert failure.error
    assert {r.config_label for r in result.records} == {"CMP"}
    summary = json.loads((tmp_path / "out" / SUMMARY_NAME).read_text())
    assert summary["variants_failed"] == 1
    assert summary["failures"][0]["config"] == "SS"


def test_evaluate_label_twins_share_one_variant(tmp_path):
    # SD implies CMP, so {SD} and {CMP, SD} are the same effective variant
    project = make_project(tmp_path)
    configs = [
        ObfuscationConfig(techniques=frozenset({"SD"}), seed=1),
        ObfuscationConfig(techniques=frozenset({"CMP", "SD"}), seed=1),
    ]
    result = evaluate([project], configs, tmp_path / "out", parallelism=4)
    assert result.variants_succeeded == 2
    assert len(result.records) == 14
    assert {r.config_label for r in result.records} == {"CMP+SD"}
    # both attempts appear in the report, backed by a single tree on disk
    trees = {p.name for p in (tmp_path / "out" / project.id).iterdir()}
    assert trees == {BASELINE_LABEL, "CMP+SD_s1"}


def test_evaluate_rejects_conflicting_params_for_one_label(tmp_path):
    project = make_project(tmp_path)
    configs = [
        ObfuscationConfig(techniques=frozenset({"SS"}), seed=1),
        ObfuscationConfig(
            techniques=frozenset({"SS"}), seed=1, params=TransformParams(ss_chunk_len=2)
        ),
    ]
    with pytest.raises(ValueError):
        evaluate([project], configs, tmp_path / "out")


def test_evaluate_clean_project_all_undefined(tmp_path):
    root = tmp_path / "cleanproj"
    root.mkdir()
    (root / "main.js").write_text(CLEAN, encoding="utf-8")
    project = ingest_project(root)
    result = evaluate([project], enumerate_configs(mode="singles", seed=1), tmp_path / "out")
    assert result.undefined_records == len(result.records)
    assert all(r.vdl_percent is None for r in result.records)


def test_evaluate_multiple_projects(tmp_path):
    alpha = make_project(tmp_path, "alpha")
    beta = make_project(tmp_path, "beta")
    configs = [ObfuscationConfig(techniques=frozenset({"CFF"}), seed=1)]
    result = evaluate([alpha, beta], configs, tmp_path / "out")
    assert {r.project_id for r in result.records} == {"alpha", "beta"}
    assert result.variants_succeeded == 2


def test_scan_project_counts(tmp_path):
    project = make_project(tmp_path)
    report = scan_project(project)
    assert report.variant_id == BASELINE_LABEL
    assert report.rule_counts == {"js-eval-usage": 1, "js-sqli-taint": 1}
    assert [f.file for f in report.findings] == ["app.js", "app.js"]


def test_evasion_direction_on_fixture(tmp_path):
    project = make_project(tmp_path)
    result = evaluate([project], enumerate_configs(mode="singles", seed=1), tmp_path / "out")
    overall = {r.config_label: r for r in result.records if r.severity_filter is None}
    # flattening loses the source-order taint flow, layout does not
    assert overall["CFF"].vdl_percent == 50.0
    assert overall["CMP"].vdl_percent == 0.0
    assert overall["SIMP"].vdl_percent == 0.0
    # keyed source reads break under string encoding
    assert overall["SA"].vdl_percent == 50.0
    assert overall["SS"].vdl_percent == 50.0
