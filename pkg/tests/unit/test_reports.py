"""Tests for the graph text format and report emission."""

import json
from fractions import Fraction

import pytest

from trivalent_verlinde.core.generator import gamma0
from trivalent_verlinde.exceptions import (
    DegreeError,
    GraphFormatError,
    ReportFormatError,
)
from trivalent_verlinde.reports.emit import SCHEMA, emit
from trivalent_verlinde.reports.models import (
    AsymptoticsReport,
    AsymptoticsRow,
    CountReport,
    FiberReport,
    KummerRow,
    VolumeReport,
)
from trivalent_verlinde.utils.graph_io import load_graph, parse_graph, serialize_graph


def _count_report(level: int, formula: int) -> CountReport:
    return CountReport(
        genus=2,
        level=level,
        graph=None,
        count_enumeration=formula,
        count_contraction=formula,
        count_formula=formula,
        formula_radius=1e-30,
    )


@pytest.mark.unit
class TestGraphFormat:
    """Test parsing and serializing graphs."""

    def test_serialize(self, dumbbell):
        assert serialize_graph(dumbbell) == (
            "g 2\nv 2\ne 0 0 0\ne 1 1 1\ne 2 0 1\nn 0 a1\nn 1 a2\nn 2 c1\n"
        )

    def test_round_trip_keeps_names(self):
        graph = gamma0(4)
        parsed = parse_graph(serialize_graph(graph))
        assert parsed == graph
        assert dict(parsed.edge_names) == dict(graph.edge_names)

    def test_comments_and_blank_lines(self):
        text = "# theta\ng 2\n\nv 2\ne 0 0 1\ne 1 0 1\ne 2 1 0\n"
        graph = parse_graph(text)
        assert graph.edges == ((0, 1), (0, 1), (0, 1))
        assert not graph.edge_names

    @pytest.mark.parametrize(
        "text",
        [
            "v 2\ne 0 0 1\ne 1 0 1\ne 2 0 1\n",
            "g 2\nv 2\ne 0 0 1\ne 0 0 1\ne 1 0 1\n",
            "g 2\nv two\n",
            "g 2\nv 2\ne 0 0 1\ne 1 0 1\ne 3 0 1\n",
            "g 2\nv 2\ne 0 0 1\ne 1 0 1\ne 2 0 1\nn 5 x\n",
            "g 2\nv 2\nx 1\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_graph(text)

    def test_invalid_graph(self):
        with pytest.raises(DegreeError):
            parse_graph("g 2\nv 2\ne 0 0 0\ne 1 0 1\ne 2 0 1\n")
        unchecked = parse_graph("g 2\nv 2\ne 0 0 0\ne 1 0 0\ne 2 1 1\n", validate=False)
        assert unchecked.edge_count == 3

    def test_load(self, tmp_path, dumbbell):
        path = tmp_path / "dumbbell.txt"
        path.write_text(serialize_graph(dumbbell))
        assert load_graph(path) == dumbbell
        with pytest.raises(GraphFormatError):
            load_graph(tmp_path / "missing.txt")


@pytest.mark.unit
class TestEmit:
    """Test JSON and CSV output."""

    def test_json_envelope(self):
        output = emit([_count_report(1, 4)], "json", command="verify")
        assert output.endswith(b"\n")
        data = json.loads(output)
        assert data["schema"] == SCHEMA
        assert data["level_convention"] == "denominator k+2"
        assert data["command"] == "verify"
        assert data["failures"] == []
        assert data["reports"][0]["agreement"] is True
        assert len(data["reports"][0]) == 8

    def test_json_is_stable(self):
        reports = [_count_report(1, 4), _count_report(2, 10)]
        assert emit(reports, "json") == emit(reports, "json")

    def test_csv_single_header(self):
        text = emit([_count_report(1, 4), _count_report(2, 10)], "csv").decode()
        lines = text.splitlines()
        assert lines[0] == ",".join(CountReport.csv_header)
        assert lines[1].startswith("2,1,,4,4,4,")
        assert lines[1].endswith(",true")
        assert len(lines) == 3

    def test_csv_header_per_run(self):
        kummer = KummerRow(2, 1, 1, 4, 4, 0, 4, True)
        text = emit([_count_report(1, 4), kummer], "csv", failures=["boom"]).decode()
        blocks = text.split("\n\n")
        assert len(blocks) == 2
        assert blocks[1].startswith("g,k,theta_rank,kummer_rank,orbit_count,match\n")
        assert text.endswith("# failure: boom\n")

    def test_fractions_serialize(self):
        report = AsymptoticsReport(
            graph="v2",
            genus=2,
            rows=[AsymptoticsRow(2, 10, Fraction(5, 4))],
            trend="constant",
            predicted_limit=1 / 6,
            density_factor=Fraction(1, 2),
        )
        data = json.loads(emit([report], "json"))
        assert data["reports"][0]["density_factor"] == "1/2"
        assert emit([report], "csv").decode().splitlines()[1] == "2,10,5,4"

    def test_volume_keys(self):
        report = VolumeReport(
            graph="v2", genus=2, mean=0.33, stderr=0.001, samples=10, seed=0, zeta_value=0.52
        )
        data = json.loads(emit([report], "json"))["reports"][0]
        assert data["paper_value"] == 0.52
        assert data["consistent"] is True

    def test_fiber_report_hides_partial_invariants(self):
        partial = FiberReport("v2", 2, (1, 1, 0), ["U1", "U1", "SU2"], ["U1", "U1"], 3, "partial")
        exact = FiberReport(
            "v2", 4, (2, 2, 2), ["U1"] * 3, ["Z2"] * 2, 3, "exact", 3, 0, 0, 3, 0
        )
        assert "t" not in partial.to_dict()
        assert exact.to_dict()["h1"] == {"free": 3, "torsion2": 0}

    def test_unknown_format(self):
        with pytest.raises(ReportFormatError):
            emit([], "xml")
