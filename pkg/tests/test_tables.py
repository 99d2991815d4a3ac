import csv
import io
import json
import pathlib

import pytest

from hyclif.multivector import AlgebraContext, gp, lcontract, wedge
from hyclif.tables import emit_table, table_cells

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.mark.parametrize("product", ["geometric", "wedge", "lcontract"])
def test_text_tables_match_golden(product):
    expected = (GOLDEN / f"table_{product}_n1.txt").read_bytes()
    assert emit_table(1, product, "text").encode() == expected


def test_csv_golden():
    expected = (GOLDEN / "table_geometric_n1.csv").read_bytes()
    assert emit_table(1, "geometric", "csv").encode() == expected


def test_json_golden():
    expected = (GOLDEN / "table_geometric_n1.json").read_bytes()
    assert emit_table(1, "geometric", "json").encode() == expected


def test_known_cells():
    ctx = AlgebraContext(1)
    labels, cells = table_cells(ctx, "geometric")
    assert labels == ["1", "e1", "t1", "e1^t1"]
    t1_, e1_ = labels.index("t1"), labels.index("e1")
    assert cells[t1_][e1_] == "1 - e1^t1"
    top = labels.index("e1^t1")
    assert cells[top][top] == "1"
    _, wcells = table_cells(ctx, "wedge")
    assert wcells[e1_][e1_] == "0"


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("product,fn", [("geometric", gp), ("wedge", wedge), ("lcontract", lcontract)])
def test_cells_equal_library_products(n, product, fn):
    ctx = AlgebraContext(n)
    labels, cells = table_cells(ctx, product)
    blades = ctx.basis_blades()
    for i, a in enumerate(blades):
        for j, b in enumerate(blades):
            assert cells[i][j] == str(fn(ctx.blade(a), ctx.blade(b)))


def test_csv_parses_back():
    rows = list(csv.reader(io.StringIO(emit_table(1, "geometric", "csv"))))
    assert rows[0] == ["*", "1", "e1", "t1", "e1^t1"]
    assert rows[2][2] == "0"  # e1 * e1


def test_json_schema():
    payload = json.loads(emit_table(2, "wedge", "json"))
    assert payload["dim"] == 2 and payload["product"] == "wedge"
    assert len(payload["blades"]) == 16
    assert len(payload["cells"]) == 16 and all(len(r) == 16 for r in payload["cells"])


def test_guards():
    with pytest.raises(ValueError):
        emit_table(4, "geometric")
    with pytest.raises(ValueError):
        emit_table(1, "bogus")
    with pytest.raises(ValueError):
        emit_table(1, "geometric", "yaml")


def test_determinism():
    assert emit_table(2, "geometric", "text") == emit_table(2, "geometric", "text")
