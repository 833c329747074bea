"""Boxplot aggregation of VDL records and the aggregate CSV format."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .vdl import VdlRecord

log = logging.getLogger(__name__)

GROUP_MODES = ("technique", "plugin_count", "project", "severity")

CSV_HEADER = (
    "group_by,group_key,n,min,q1,median,q3,max,"
    "lower_whisker,upper_whisker,outliers"
)


class UnknownGroupMode(ValueError):
    pass


@dataclass(frozen=True)
class BoxplotStats:
    group_by: str
    group_key: str
    n: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    lower_whisker: float
    upper_whisker: float
    outliers: tuple[float, ...]


def boxplot_stats(group_by: str, group_key: str, values: Sequence[float]) -> BoxplotStats:
    """Quartiles by linear interpolation; whiskers at the most extreme
    datum within 1.5 IQR of the box, clamped to the box edge when every
    datum on that side lies outside the fence."""
    arr = np.asarray(values, dtype=float)
    q1, median, q3 = (float(q) for q in np.percentile(arr, [25.0, 50.0, 75.0]))
    iqr = q3 - q1
    low_fence = q1 - 1.5 * iqr
    high_fence = q3 + 1.5 * iqr
    in_low = arr[arr >= low_fence]
    in_high = arr[arr <= high_fence]
    lower = float(in_low.min()) if in_low.size and float(in_low.min()) <= q1 else q1
    upper = float(in_high.max()) if in_high.size and float(in_high.max()) >= q3 else q3
    outliers = tuple(float(v) for v in sorted(arr[(arr < lower) | (arr > upper)]))
    return BoxplotStats(
        group_by=group_by,
        group_key=group_key,
        n=int(arr.size),
        minimum=float(arr.min()),
        q1=q1,
        median=median,
        q3=q3,
        maximum=float(arr.max()),
        lower_whisker=lower,
        upper_whisker=upper,
        outliers=outliers,
    )


def _group_key(record: VdlRecord, group_by: str) -> str:
    if group_by == "technique":
        return record.config_label
    if group_by == "plugin_count":
        return str(record.plugin_count)
    if group_by == "project":
        return record.project_id
    if group_by == "severity":
        return record.severity_filter or "overall"
    raise UnknownGroupMode(group_by)


def _sort_key(key: str, group_by: str):
    return int(key) if group_by == "plugin_count" else key


def undefined_count(records: Iterable[VdlRecord]) -> int:
    return sum(1 for r in records if not r.defined)


def aggregate(records: Sequence[VdlRecord], group_by: str) -> list[BoxplotStats]:
    """Group defined records and compute boxplot statistics per group."""
    if group_by not in GROUP_MODES:
        raise UnknownGroupMode(group_by)
    groups: dict[str, list[float]] = {}
    for record in records:
        key = _group_key(record, group_by)
        if record.defined:
            groups.setdefault(key, []).append(record.vdl_percent)
        elif key not in groups:
            groups.setdefault(key, [])
    stats = []
    for key in sorted(groups, key=lambda k: _sort_key(k, group_by)):
        values = groups[key]
        if not values:
            log.info("group %s=%s skipped: no defined records", group_by, key)
            continue
        stats.append(boxplot_stats(group_by, key, values))
    return stats


def _num(value: float) -> str:
    return f"{value:.4f}"


def render_aggregate_csv(stats: Sequence[BoxplotStats]) -> str:
    lines = [CSV_HEADER]
    for s in stats:
        outliers = ";".join(_num(v) for v in s.outliers)
        lines.append(
            ",".join(
                [
                    s.group_by,
                    s.group_key,
                    str(s.n),
                    _num(s.minimum),
                    _num(s.q1),
                    _num(s.median),
                    _num(s.q3),
                    _num(s.maximum),
                    _num(s.lower_whisker),
                    _num(s.upper_whisker),
                    outliers,
                ]
            )
        )
    return "\n".join(lines) + "\n"
