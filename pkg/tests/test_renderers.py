# tests/test_renderers.py
# CSV / Markdown / JSON serialization

import orjson
import pytest

from codes.renderers import render, render_rows
from semigroups.errors import UnknownFormatError
from state.semigroup_state import CodeRecord, OutputFormat


@pytest.fixture
def records():
    return [
        CodeRecord(q=8, ell=21, rho_ell=34, n=4124, dim=4103, d1=10, d2=8),
        CodeRecord(q=8, ell=22, rho_ell=35, n=4124, dim=4102, d1=12, d2=10),
    ]


def test_csv(records):
    assert render(records, OutputFormat.CSV) == (
        "rho_ell,n,dim,d1,d2\n"
        "34,4124,4103,10,8\n"
        "35,4124,4102,12,10\n"
    )


def test_markdown(records):
    assert render(records, "markdown") == (
        "| rho_ell | n | n-ell | d(C1) | d(C2) |\n"
        "|---|---|---|---|---|\n"
        "| 34 | 4124 | 4103 | 10 | 8 |\n"
        "| 35 | 4124 | 4102 | 12 | 10 |\n"
    )


def test_json(records):
    text = render(records, OutputFormat.JSON)
    assert text.endswith("]\n")
    assert orjson.loads(text) == [
        {"rho_ell": 34, "n": 4124, "dim": 4103, "d1": 10, "d2": 8},
        {"rho_ell": 35, "n": 4124, "dim": 4102, "d1": 12, "d2": 10},
    ]


@pytest.mark.parametrize("fmt", list(OutputFormat))
def test_output_is_deterministic(records, fmt):
    assert render(records, fmt) == render(list(records), fmt)


def test_empty_tables():
    assert render([], "csv") == "rho_ell,n,dim,d1,d2\n"
    assert render([], "json") == "[]\n"


def test_render_rows_custom_columns():
    text = render_rows(("ell", "nu"), [(1, 2), (2, 2)], "csv")
    assert text == "ell,nu\n1,2\n2,2\n"


def test_unknown_format(records):
    with pytest.raises(UnknownFormatError):
        render(records, "xml")
