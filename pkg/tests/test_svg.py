"""Structural and determinism tests for the SVG series plots."""

import re
import xml.etree.ElementTree as ET

import pytest

from evometrics import AnalysisError, VersionSeries, mk_test
from evometrics.svgplot import render_svg


def series_of(points, package="pkg", metric="effort", statistic="gini"):
    return VersionSeries(package=package, metric=metric, statistic=statistic, points=tuple(points))


def polyline_points(svg):
    chunks = re.findall(r'<polyline[^>]*points="([^"]*)"', svg)
    assert len(chunks) == 1
    return chunks[0].split()


class TestStructure:
    def test_two_point_series_has_one_polyline_with_two_pairs(self):
        svg = render_svg(series_of([("v1", 0.2), ("v2", 0.4)]))
        assert svg.count("<polyline") == 1
        assert len(polyline_points(svg)) == 2

    def test_well_formed_xml(self):
        svg = render_svg(series_of([("v1", 1.0), ("v2", 2.0), ("v3", 1.5)]))
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")

    def test_version_labels_present_in_order(self):
        svg = render_svg(series_of([("8.1", 1.0), ("9.0", 2.0), ("10.0.p01", 1.5)]))
        positions = [svg.index(f">{label}</text>") for label in ("8.1", "9.0", "10.0.p01")]
        assert positions == sorted(positions)

    def test_single_point_and_constant_series_render(self):
        assert "<polyline" in render_svg(series_of([("v1", 0.0)]))
        svg = render_svg(series_of([("v1", 3.0), ("v2", 3.0)]))
        assert len(polyline_points(svg)) == 2

    def test_label_escaping(self):
        svg = render_svg(series_of([("v<1>", 1.0), ("v&2", 2.0)], package="a<b&c"))
        ET.fromstring(svg)
        assert "a&lt;b&amp;c" in svg

    def test_empty_series_refused(self):
        with pytest.raises(AnalysisError, match="empty series"):
            render_svg(series_of([]))


class TestAnnotations:
    def test_trend_annotation(self):
        trend = mk_test([1.0, 2.0, 3.0, 4.0, 5.0], alpha=0.05)
        svg = render_svg(series_of([(f"v{i}", float(i)) for i in range(1, 6)]), trend)
        assert "trend: upward" in svg
        assert "alpha=0.05" in svg

    def test_gap_annotation_lists_missing_versions(self):
        svg = render_svg(series_of([("v1", 1.0), ("v3", 2.0)]), gaps=("v2",))
        assert "gaps (no data): v2" in svg
        assert len(polyline_points(svg)) == 2  # gap version contributes no vertex

    def test_no_annotations_without_inputs(self):
        svg = render_svg(series_of([("v1", 1.0), ("v2", 2.0)]))
        assert "trend:" not in svg
        assert "gaps" not in svg


class TestDeterminism:
    def test_identical_inputs_identical_bytes(self):
        points = [(f"v{i}", 0.1 * i * i - 0.3 * i) for i in range(1, 9)]
        trend = mk_test([v for _, v in points], alpha=0.01)
        first = render_svg(series_of(points), trend, gaps=("v9",))
        second = render_svg(series_of(points), trend, gaps=("v9",))
        assert first == second
