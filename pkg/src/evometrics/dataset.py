"""Long-format metric tables over an ordered release sequence.

A dataset holds (version, package, entity, metric, value) records plus the
declared version ordering. The ordering always comes from a manifest, never
from the labels themselves: release tags sort badly ("10.0" before "9.6").
Slicing one (version, package, metric) combination gives the distribution
the inequality indices consume; evaluating a statistic per version gives
the series the trend test consumes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import inequality
from .errors import AnalysisError, InputError
from .inequality import DEFAULT_EPSILON, InequalityReport
from .trend import DEFAULT_ALPHA, TrendResult, mk_test

CSV_HEADER = ("version", "package", "entity", "metric", "value")

STATISTICS = ("gini", "pietra", "theil", "atkinson", "mean", "median", "raw")


class Record(NamedTuple):
    version: str
    package: str
    entity: str
    metric: str
    value: float


@dataclass(frozen=True)
class MetricsDataset:
    """Immutable record table plus the analysis order of its versions."""

    records: tuple[Record, ...]
    version_order: tuple[str, ...]


@dataclass(frozen=True)
class VersionSeries:
    """One statistic of one (package, metric), evaluated per covered version."""

    package: str
    metric: str
    statistic: str
    points: tuple[tuple[str, float], ...]

    def versions(self) -> list[str]:
        return [v for v, _ in self.points]

    def values(self) -> list[float]:
        return [x for _, x in self.points]


@dataclass(frozen=True)
class PipelineResult:
    """A series, its per-version inequality reports, and its trend verdict.

    ``inequality_per_version`` is None for raw series, which carry no
    per-entity distribution to aggregate. ``gaps`` lists the manifest
    versions that had no matching records.
    """

    series: VersionSeries
    inequality_per_version: tuple[InequalityReport, ...] | None
    trend: TrendResult
    gaps: tuple[str, ...]


def load_manifest(text: str) -> tuple[str, ...]:
    """Parse the version-order manifest: a JSON object {"versions": [...]}.

    The list gives the analysis order; labels must be unique and the list
    nonempty.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed manifest: {exc}") from exc
    if not isinstance(doc, dict) or "versions" not in doc:
        raise InputError('malformed manifest: missing "versions" key')
    versions = doc["versions"]
    if not isinstance(versions, list) or not all(isinstance(v, str) for v in versions):
        raise InputError('malformed manifest: "versions" must be a list of strings')
    if not versions:
        raise InputError("malformed manifest: empty version list")
    seen = set()
    for v in versions:
        if v in seen:
            raise InputError(f"malformed manifest: duplicate version {v!r}")
        seen.add(v)
    return tuple(versions)


def load_csv(text: str, version_order: Sequence[str] | None = None) -> MetricsDataset:
    """Parse a long-format metrics table.

    The header must be exactly ``version,package,entity,metric,value``.
    Fields are split on bare commas with no quoting, so labels containing
    commas are rejected (the row's field count comes out wrong). Every
    version must appear in ``version_order`` when one is given; passing
    None accepts any version and orders them by first appearance, for
    single-version workflows that carry no manifest.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise InputError("line 1: missing header")
    header = tuple(f.strip() for f in lines[0].split(","))
    if header != CSV_HEADER:
        raise InputError(
            f"line 1: expected header {','.join(CSV_HEADER)!r}, got {lines[0].strip()!r}"
        )
    known = set(version_order) if version_order is not None else None
    implied: list[str] = []
    records: list[Record] = []
    seen: set[tuple[str, str, str, str]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        fields = [f.strip() for f in raw.split(",")]
        if len(fields) != 5:
            raise InputError(
                f"line {lineno}: expected 5 comma-separated fields, got {len(fields)}"
            )
        version, package, entity, metric, value_text = fields
        if not (version and package and entity and metric):
            raise InputError(f"line {lineno}: empty label field")
        if known is not None and version not in known:
            raise InputError(f"line {lineno}: unknown version {version!r} (not in manifest)")
        try:
            value = float(value_text)
        except ValueError:
            raise InputError(f"line {lineno}: cannot parse value {value_text!r}") from None
        if not math.isfinite(value):
            raise InputError(f"line {lineno}: non-finite value {value_text!r}")
        key = (version, package, entity, metric)
        if key in seen:
            raise InputError(f"line {lineno}: duplicate record for {key!r}")
        seen.add(key)
        if known is None and version not in implied:
            implied.append(version)
        records.append(Record(version, package, entity, metric, value))
    order = tuple(version_order) if version_order is not None else tuple(implied)
    return MetricsDataset(records=tuple(records), version_order=order)


def slice_distribution(ds: MetricsDataset, version: str, package: str, metric: str) -> np.ndarray:
    """Values of one metric over the entities of one (version, package) slice.

    Entities are sorted by label, so identical inputs give bit-identical
    distributions regardless of record order in the file.
    """
    matches = [
        (r.entity, r.value)
        for r in ds.records
        if r.version == version and r.package == package and r.metric == metric
    ]
    if not matches:
        raise AnalysisError(
            f"empty slice: version={version!r} package={package!r} metric={metric!r}"
        )
    matches.sort(key=lambda pair: pair[0])
    return np.asarray([value for _, value in matches], dtype=float)


def _evaluate(statistic: str, values: np.ndarray, epsilon: float, version: str) -> float:
    try:
        if statistic == "gini":
            return inequality.gini(values)
        if statistic == "pietra":
            return inequality.pietra(values)
        if statistic == "theil":
            return inequality.theil(values)
        if statistic == "atkinson":
            return inequality.atkinson(values, epsilon)
        if statistic == "mean":
            return float(np.mean(values))
        if statistic == "median":
            return float(np.median(values))
        if values.size != 1:
            raise AnalysisError(
                f"raw statistic expects exactly one record per version, found {values.size}"
            )
        return float(values[0])
    except AnalysisError as exc:
        raise AnalysisError(f"version {version!r}: {exc}") from exc


def build_series(
    ds: MetricsDataset,
    package: str,
    metric: str,
    statistic: str,
    epsilon: float = DEFAULT_EPSILON,
    drop_zeros: bool = False,
) -> tuple[VersionSeries, tuple[str, ...]]:
    """One point per covered version, in manifest order.

    Versions without matching records are skipped and returned as gaps
    rather than failing the series: packages appear and disappear across
    releases. Index errors are annotated with the offending version.
    ``drop_zeros`` filters zero-valued measurements out of every slice
    first (a slice left empty by the filter becomes a gap); the default
    keeps them, relying on the indices' zero conventions.
    """
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}")
    points: list[tuple[str, float]] = []
    gaps: list[str] = []
    for version in ds.version_order:
        try:
            values = slice_distribution(ds, version, package, metric)
        except AnalysisError:
            gaps.append(version)
            continue
        if drop_zeros:
            values = values[values > 0]
            if values.size == 0:
                gaps.append(version)
                continue
        points.append((version, _evaluate(statistic, values, epsilon, version)))
    series = VersionSeries(package=package, metric=metric, statistic=statistic, points=tuple(points))
    return series, tuple(gaps)


def run_pipeline(
    ds: MetricsDataset,
    package: str,
    metric: str,
    statistic: str,
    epsilon: float = DEFAULT_EPSILON,
    alpha: float = DEFAULT_ALPHA,
    drop_zeros: bool = False,
) -> PipelineResult:
    """Series construction plus trend detection for one (package, metric).

    Refuses series shorter than 4 points after gap removal; a monotonic
    trend on fewer points is not worth testing.
    """
    series, gaps = build_series(ds, package, metric, statistic, epsilon, drop_zeros)
    if len(series.points) < 4:
        raise AnalysisError(
            f"series too short for trend: {len(series.points)} points (need at least 4)"
        )
    trend = mk_test(series.values(), alpha=alpha)
    reports: tuple[InequalityReport, ...] | None = None
    if statistic != "raw":
        collected = []
        for version, _ in series.points:
            values = slice_distribution(ds, version, package, metric)
            if drop_zeros:
                values = values[values > 0]
            try:
                collected.append(inequality.inequality_report(values, epsilon))
            except AnalysisError as exc:
                raise AnalysisError(f"version {version!r}: {exc}") from exc
        reports = tuple(collected)
    return PipelineResult(series=series, inequality_per_version=reports, trend=trend, gaps=gaps)
