"""Tests for all the functions in relations.py"""

import pytest

from kflip.koszul import relations as rl
from kflip.koszul.koszul import build_koszul, standard_kernel_generators
from kflip.repring.repring import build_case
from kflip.utilities import gating_failures


GRID = [(7, 2), (9, 2), (11, 2), (13, 2), (15, 2),
        (11, 4), (13, 4), (15, 4), (10, 4), (12, 4), (14, 4), (16, 4),
        (14, 6), (15, 6), (16, 6)]

TEXTS_13_4 = [
    "y^2 + 2y",
    "delta_c^2 + 8delta_c + 40y",
    "64y",
    "8y*delta_c + 16delta_c + 32y",
    "-8delta_c*u1 + 64u3 - 32u1",
    "y*u3 + 2u3 - u1",
    "y*u1",
    "y*u2",
    "delta_c*u2",
    "u1*u3",
    "u1*u2 - 2v",
]


def test_table_rows():
    assert len(rl.table_rows("OddZero")) == 21
    assert len(rl.table_rows("EvenTwo")) == 22
    assert rl.table_rows("EvenZero")[2][0] == "B/3"
    assert rl.table_rows("OddTwo")[-1] == ("H2/6", "u1*u2 - 2*v")


def test_relations_for_case_13_4():
    with pytest.warns(UserWarning):
        relations = rl.relations_for_case(build_case(13, 4))

    assert [relation.text for relation in relations] == TEXTS_13_4
    assert [relation.source for relation in relations][:4] == ["B/1", "B/2", "H0/1", "H0/2"]
    assert not any(relation.involves("u4") for relation in relations)


def test_relations_keep_u4_below_bound():
    relations = rl.relations_for_case(build_case(11, 4))

    assert len(relations) == 21
    assert any(relation.involves("u4") for relation in relations)


def test_relation_to_dict():
    relation = rl.instantiate("H1/2", "(y+2)*u3 - 2**(n-alpha)*u1", build_case(13, 4))

    assert relation.level == "H1"
    assert relation.to_dict() == {
        "lhs_terms": [
            {"coeff": 1, "monomial": [["y", 1], ["u3", 1]]},
            {"coeff": 2, "monomial": [["u3", 1]]},
            {"coeff": -1, "monomial": [["u1", 1]]},
        ],
        "source": "H1/2",
        "text": "y*u3 + 2u3 - u1",
    }


def test_instantiate_rejects_fractions():
    with pytest.raises(RuntimeError):
        rl.instantiate("H1/4", "(y+2)*u4 - 2**(n-1-alpha)*delta_c*u1", build_case(13, 4))


def test_evaluate_relation():
    p = build_case(13, 4)
    kd = build_koszul(p)
    gens = standard_kernel_generators(p, kd)

    holds, _ = rl.evaluate_relation(rl.instantiate("H1/x", "u1", p), kd, gens)
    assert not holds
    holds, residual = rl.evaluate_relation(rl.instantiate("H2/x", "u1*u2", p), kd, gens)
    assert not holds
    assert residual == "2y*delta_c + 4delta_c + 16y + 32"
    holds, _ = rl.evaluate_relation(rl.instantiate("H0/x", "128*y", p), kd, gens)
    assert holds

    with pytest.raises(RuntimeError):
        rl.evaluate_relation(rl.instantiate("H1/x", "u1*u2", p), kd, gens)


def test_load_ledger():
    ledger = rl.load_ledger()

    assert "relations/EvenTwo/H1/5" in ledger
    assert "table1/5" in ledger
    assert all(set(entry) == {"id", "location", "printed", "computed", "note"} for entry in ledger.values())


def test_verify_relations_on_grid():
    for m, s in GRID:
        records = rl.verify_relations(build_case(m, s))
        assert gating_failures(records) == []
        assert all(record.status in ("pass", "erratum") for record in records)


def test_verify_relations_errata():
    records = {record.name: record for record in rl.verify_relations(build_case(14, 6))}
    assert records["relations.H1/5"].status == "erratum"
    assert records["relations.H1/5"].ledger_id == "relations/EvenTwo/H1/5"

    records = {record.name: record for record in rl.verify_relations(build_case(11, 4))}
    assert records["relations.summary.H1/4"].status == "erratum"
    assert not records["relations.summary.H1/4"].gating
    assert records["relations.H1/4"].status == "pass"


def test_verify_relations_without_ledger():
    records = {record.name: record for record in rl.verify_relations(build_case(14, 6), ledger={})}
    assert records["relations.H1/5"].status == "fail"
