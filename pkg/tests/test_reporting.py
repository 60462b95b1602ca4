"""Renderers, the renderer factory and the result layouts."""

import json
import math

import numpy as np
import pytest

from tra_spectra.models import (
    CheckResult,
    CheckStatus,
    ConvergenceTable,
    PhaseShiftCurve,
    UnitConvention,
)
from tra_spectra.reporting import (
    CsvRenderer,
    JsonRenderer,
    RendererFactory,
    Table,
    TextRenderer,
    convergence_diffs,
    convergence_layout,
    format_number,
    phase_shift_layout,
    round_number,
    table_from_columns,
    verify_layout,
)


@pytest.fixture
def small_table():
    return Table(columns=["n", "value"], rows=[[0, 1.5], [1, float("nan")]], title="Demo", metadata={"k": 2})


@pytest.fixture
def convergence():
    return ConvergenceTable(
        N_list=[10, 20],
        exact=np.array([-2.0, -1.0]),
        numeric={10: np.array([-1.9, -0.8]), 20: np.array([-1.99, -0.95])},
        nu_used={10: -25.0, 20: -45.0},
    )


# ------------------------------------------------------------------------------
# Numbers
# ------------------------------------------------------------------------------

class TestNumbers:

    def test_fifteen_digits(self):
        assert format_number(math.pi) == "3.14159265358979"
        assert format_number(7) == "7"
        assert format_number(None) == ""
        assert format_number(True) == "true"
        assert format_number(float("nan")) == "nan"

    def test_round_matches_format(self):
        assert round_number(math.pi) == float(format_number(math.pi))
        assert round_number(float("inf")) is None


# ------------------------------------------------------------------------------
# Renderers
# ------------------------------------------------------------------------------

class TestRenderers:

    def test_row_length_checked(self):
        with pytest.raises(ValueError):
            Table(columns=["a", "b"], rows=[[1]])

    def test_csv(self, small_table):
        assert CsvRenderer().render(small_table) == "n,value\n0,1.5\n1,nan\n"

    def test_json_nulls(self, small_table):
        document = json.loads(JsonRenderer().render(small_table))
        assert document["title"] == "Demo"
        assert document["rows"][1] == {"n": 1, "value": None}
        assert document["metadata"] == {"k": 2}

    def test_text(self, small_table):
        lines = TextRenderer().render(small_table).splitlines()
        assert lines[0] == "Demo"
        assert lines[2].split() == ["n", "value"]
        assert lines[-1] == "k: 2"

    def test_write_adds_extension(self, small_table, tmp_path):
        path = CsvRenderer().write(small_table, tmp_path / "out" / "table")
        assert path.name == "table.csv"
        assert path.read_text(encoding="utf-8").startswith("n,value\n")

    def test_factory(self):
        assert isinstance(RendererFactory.create(" JSON "), JsonRenderer)
        assert RendererFactory.available_formats() == ["csv", "json", "text"]
        with pytest.raises(ValueError, match="Available formats"):
            RendererFactory.create("xml")

    def test_columns_must_match(self):
        with pytest.raises(ValueError):
            table_from_columns("bad", {"a": [1, 2], "b": [1]})

    def test_numpy_scalars_become_python(self):
        table = table_from_columns("t", {"x": np.array([1.0, 2.0])})
        assert type(table.rows[0][0]) is float


# ------------------------------------------------------------------------------
# Layouts
# ------------------------------------------------------------------------------

class TestLayouts:

    def test_convergence_layout(self, convergence):
        table = convergence_layout(convergence, UnitConvention.HALF_LAMBDA2)
        assert table.columns == ["n", "N=10", "N=20", "exact"]
        assert table.rows[0] == [0, 1.9, 1.99, 2.0]
        assert table.metadata["monotone"]

    def test_dimensionless_keeps_sign(self, convergence):
        table = convergence_layout(convergence, UnitConvention.DIMENSIONLESS)
        assert table.rows[1][-1] == -1.0

    def test_diffs(self, convergence):
        table = convergence_diffs(convergence, UnitConvention.HALF_LAMBDA2)
        assert len(table.rows) == 4
        assert table.column("abs_diff")[0] == pytest.approx(0.1)

    def test_phase_shift_unwrapped_column(self):
        curve = PhaseShiftCurve(eps=np.array([1.0, 2.0]), delta=np.array([0.1, 6.5]), unwrapped=True,
                                delta_principal=np.array([0.1, 0.2]))
        table = phase_shift_layout(curve)
        assert table.columns == ["eps", "E", "delta_rad", "delta_unwrapped"]
        assert table.column("delta_rad") == [0.1, 0.2]

    def test_verify_layout(self):
        records = [
            CheckResult("regime", CheckStatus.PASS, "ok"),
            CheckResult("numerov", CheckStatus.FAIL, "off", {"max_diff": 1.0}),
        ]
        table = verify_layout(records)
        assert table.metadata["passed"] is False
        assert table.metadata["failed"] == ["numerov"]
        assert table.column("status") == ["PASS", "FAIL"]
