"""Tests for boxplot statistics, grouping, and the aggregate CSV."""

from __future__ import annotations

import random

import pytest

from obfuscan.harness import (
    GROUP_MODES,
    UnknownGroupMode,
    VdlRecord,
    aggregate,
    boxplot_stats,
    render_aggregate_csv,
    undefined_count,
)


def record(config="CFF", seed=0, severity_filter=None, vdl=50.0, project="p"):
    baseline = 4
    matched = baseline if vdl is None else round(baseline * (1 - vdl / 100.0))
    return VdlRecord(
        project_id=project,
        config_label=config,
        seed=seed,
        severity_filter=severity_filter,
        baseline_count=0 if vdl is None else baseline,
        matched_count=0 if vdl is None else matched,
        vdl_percent=vdl,
    )


# -- boxplot arithmetic ---------------------------------------------------------


def test_constant_values():
    stats = boxplot_stats("technique", "CFF", [100.0, 100.0, 100.0])
    assert stats.q1 == stats.median == stats.q3 == 100.0
    assert stats.outliers == ()
    assert stats.lower_whisker == stats.upper_whisker == 100.0
    assert stats.n == 3


def test_linear_interpolation_on_symmetric_set():
    stats = boxplot_stats("technique", "X", [0.0, 25.0, 50.0, 75.0, 100.0])
    assert stats.q1 == 25.0
    assert stats.median == 50.0
    assert stats.q3 == 75.0
    assert stats.minimum == 0.0
    assert stats.maximum == 100.0
    assert stats.outliers == ()


def test_low_outlier_below_whisker():
    values = [60.0, 90.0, 92.0, 94.0, 96.0, 98.0, 100.0]
    stats = boxplot_stats("technique", "X", values)
    assert stats.q1 == 91.0
    assert stats.q3 == 97.0
    # fence at q1 - 1.5*6 = 82; 60 falls outside, whisker sits on 90
    assert stats.lower_whisker == 90.0
    assert stats.outliers == (60.0,)
    assert stats.minimum == 60.0


def test_whisker_clamps_to_box_edge():
    # every datum below q1 is an outlier, so the whisker sits at q1
    stats = boxplot_stats("technique", "X", [0.0, 100.0, 100.0, 100.0])
    assert stats.q1 == 75.0
    assert stats.lower_whisker == 75.0
    assert stats.outliers == (0.0,)


def test_interpolated_quartiles_two_values():
    stats = boxplot_stats("technique", "X", [0.0, 100.0])
    assert stats.q1 == 25.0
    assert stats.median == 50.0
    assert stats.q3 == 75.0


def test_boxplot_invariants_on_random_data():
    rng = random.Random(31)
    for _ in range(100):
        values = [rng.uniform(0, 100) for _ in range(rng.randrange(1, 40))]
        s = boxplot_stats("project", "p", values)
        assert s.minimum <= s.lower_whisker <= s.q1 <= s.median <= s.q3 <= s.upper_whisker <= s.maximum
        for v in s.outliers:
            assert v < s.lower_whisker or v > s.upper_whisker
        inside = [v for v in values if v not in s.outliers]
        assert all(s.lower_whisker <= v <= s.upper_whisker for v in inside)
        assert s.n == len(values)


# -- grouping ------------------------------------------------------------------


def test_group_by_technique_uses_full_label():
    records = [record(config="CFF", vdl=10.0), record(config="CFF+SA", vdl=20.0)]
    stats = aggregate(records, "technique")
    assert [s.group_key for s in stats] == ["CFF", "CFF+SA"]


def test_group_by_plugin_count_sorts_numerically():
    ten = "+".join(f"T{i}" for i in range(10))
    records = [
        record(config=ten, vdl=10.0),
        record(config="CFF+SA", vdl=10.0),
        record(config="CFF", vdl=10.0),
        record(config="SS", vdl=5.0),
    ]
    stats = aggregate(records, "plugin_count")
    # numeric order, not lexicographic ("10" after "2")
    assert [s.group_key for s in stats] == ["1", "2", "10"]
    assert stats[0].n == 2


def test_group_by_project_and_severity():
    records = [
        record(project="alpha", vdl=10.0),
        record(project="beta", vdl=20.0),
        record(project="alpha", severity_filter="High", vdl=30.0),
    ]
    by_project = aggregate(records, "project")
    assert [s.group_key for s in by_project] == ["alpha", "beta"]
    by_severity = aggregate(records, "severity")
    assert [s.group_key for s in by_severity] == ["High", "overall"]


def test_partition_every_defined_record_counted_once():
    rng = random.Random(8)
    labels = ["CFF", "CFF+SA", "SA+SS", "CMP"]
    records = []
    for _ in range(60):
        vdl = None if rng.random() < 0.25 else rng.uniform(0, 100)
        records.append(
            record(
                config=rng.choice(labels),
                severity_filter=rng.choice([None, "High", "Error"]),
                project=rng.choice(["p1", "p2"]),
                vdl=vdl,
            )
        )
    defined = sum(1 for r in records if r.defined)
    for mode in GROUP_MODES:
        stats = aggregate(records, mode)
        assert sum(s.n for s in stats) == defined, mode


def test_undefined_excluded_and_counted():
    records = [record(vdl=None), record(vdl=None), record(vdl=80.0)]
    assert undefined_count(records) == 2
    stats = aggregate(records, "technique")
    assert len(stats) == 1
    assert stats[0].n == 1


def test_all_undefined_group_skipped():
    records = [record(config="DP", vdl=None)]
    assert aggregate(records, "technique") == []


def test_unknown_group_mode_rejected():
    with pytest.raises(UnknownGroupMode):
        aggregate([record()], "flavor")


# -- CSV ----------------------------------------------------------------------


def test_csv_golden():
    records = [
        record(config="CFF", vdl=0.0),
        record(config="CFF", vdl=50.0),
        record(config="CFF", vdl=100.0),
        record(config="SA", vdl=25.0),
    ]
    text = render_aggregate_csv(aggregate(records, "technique"))
    expected = (
        "group_by,group_key,n,min,q1,median,q3,max,"
        "lower_whisker,upper_whisker,outliers\n"
        "technique,CFF,3,0.0000,25.0000,50.0000,75.0000,100.0000,"
        "0.0000,100.0000,\n"
        "technique,SA,1,25.0000,25.0000,25.0000,25.0000,25.0000,"
        "25.0000,25.0000,\n"
    )
    assert text == expected


def test_csv_outliers_semicolon_joined():
    values = [60.0, 90.0, 92.0, 94.0, 96.0, 98.0, 100.0, 1.0]
    stats = [boxplot_stats("project", "p", values)]
    text = render_aggregate_csv(stats)
    line = text.splitlines()[1]
    outlier_cell = line.split(",")[-1]
    assert outlier_cell == "1.0000;60.0000"


def test_csv_deterministic():
    records = [record(config="SS", vdl=v) for v in (10.0, 20.0, 30.0)]
    a = render_aggregate_csv(aggregate(records, "technique"))
    b = render_aggregate_csv(aggregate(records, "technique"))
    assert a == b
