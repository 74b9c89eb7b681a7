"""Tests for all the functions in solution_tables.py"""

import pytest

from kflip.koszul import solution_tables as stb
from kflip.koszul.koszul import build_koszul
from kflip.repring.repring import build_case


@pytest.fixture(scope="module")
def records_13_4():
    with pytest.warns(UserWarning):
        records = stb.verify_solution_tables(build_case(13, 4))
    return {record.name: record for record in records}


def statuses(records, table, size):
    return {k: records[f"tables.{table}.{k}"].status for k in range(1, size + 1)}


def test_table_sizes():
    assert len(stb.TABLE_ONE) == 26
    assert len(stb.TABLE_TWO) == 13
    assert all(len(row[0]) == 8 for row in stb.TABLE_ONE + stb.TABLE_TWO)
    assert [len(rows) for _, _, rows in stb.GROUPED_TABLE] == [16, 4, 3, 1, 9, 8]


def test_instantiate_row_4():
    p = build_case(13, 4)
    B = build_koszul(p).algebra
    display = stb.instantiate_display(stb.TABLE_ONE[3], p, B)

    assert display.x1 == B.y + 2
    assert display.x2.is_zero()
    assert stb.instantiate_tuple(stb.TABLE_ONE[3], p, B) == display


def test_instantiate_non_integral():
    p = build_case(13, 4)
    B = build_koszul(p).algebra

    assert stb.instantiate_display(stb.TABLE_ONE[2], p, B) is None
    assert stb.instantiate_tuple(stb.TABLE_ONE[2], p, B) is None
    assert stb.instantiate_tuple(stb.TABLE_TWO[12], p, B) is None


def test_table_one_13_4(records_13_4):
    found = statuses(records_13_4, "table1", 26)

    assert {k for k, status in found.items() if status == "skip"} == {3, 11, 13, 15, 21, 25}
    assert {k for k, status in found.items() if status == "erratum"} == {5}
    assert sum(status == "pass" for status in found.values()) == 19
    assert records_13_4["tables.table1.5"].ledger_id == "table1/5"
    assert records_13_4["tables.table1.5.tuple"].status == "pass"


def test_table_two_13_4(records_13_4):
    found = statuses(records_13_4, "table2", 13)

    assert {k for k, status in found.items() if status == "skip"} == {6, 9, 12}
    assert {k for k, status in found.items() if status == "erratum"} == {3, 10}
    assert sum(status == "pass" for status in found.values()) == 8


def test_pass_rate_13_4(records_13_4):
    record = records_13_4["tables.pass_rate"]

    assert record.status == "pass"
    assert record.gating
    assert record.witness == {"checked": 30, "passed": 27, "rate": "9/10", "unexplained": []}


def test_grouped_sections_13_4(records_13_4):
    assert records_13_4["tables.grouped.y*x1.1"].status == "pass"
    assert records_13_4["tables.grouped.y*x1.1"].witness["leading_term"] == "y*x1"
    assert records_13_4["tables.grouped.delta_c*x1[alpha < n].1"].status == "skip"
    assert not any(record.gating for name, record in records_13_4.items() if ".grouped." in name)


def test_pass_rate_without_ledger():
    with pytest.warns(UserWarning):
        records = stb.verify_solution_tables(build_case(13, 4), ledger={})
    record = records[-1]

    assert record.name == "tables.pass_rate"
    assert record.status == "fail"
    assert record.witness["unexplained"] == ["tables.table1.5", "tables.table2.3", "tables.table2.10"]


def test_other_cases_skip():
    records = stb.verify_solution_tables(build_case(14, 4))

    assert len(records) == 1
    assert records[0].status == "skip"
    assert not records[0].gating


def test_summarize_tables(records_13_4):
    df = stb.summarize_tables(list(records_13_4.values()))

    assert df.loc["table1", "pass"] == 19
    assert df.loc["table1", "skip"] == 6
    assert df.loc["table2", "erratum"] == 2
    assert "table1 tuples" in df.index
