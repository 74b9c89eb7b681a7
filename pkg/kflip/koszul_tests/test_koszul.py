"""Tests for all the functions in koszul.py"""

import pytest

from kflip.koszul import koszul as kz
from kflip.repring.repring import build_case


ODD_FULL = [(7, 2), (9, 2), (13, 4), (15, 4)]

GRID = [(7, 2), (9, 2), (11, 2), (13, 2), (15, 2),
        (11, 4), (13, 4), (15, 4), (10, 4), (12, 4), (14, 4), (16, 4),
        (14, 6), (15, 6), (16, 6)]


def test_build_koszul_13_4():
    kd = kz.build_koszul(build_case(13, 4))
    B = kd.algebra

    assert kd.rank == 4
    assert kd.d1_x1 == 128 * B.y
    assert str(kd.d1_x2) == "8y*delta_c + 16delta_c + 32y"
    assert len(kd.D1) == 4 and len(kd.D1[0]) == 8
    assert len(kd.D2) == 8 and len(kd.D2[0]) == 4
    assert repr(kd) == "KoszulData(OddZero, m=13, s=4)"


def test_koszul_complex_broken():
    p = build_case(13, 4)
    B = kz.build_koszul(p).algebra

    with pytest.raises(RuntimeError):
        kz.KoszulData(p, B, B.one(), B.y)


def test_module_vector():
    B = kz.build_koszul(build_case(13, 4)).algebra
    u = kz.ModuleVector.from_pair(B.y + 2, B.scalar(0))

    assert str(u) == "(y + 2)x1 + (0)x2"
    assert u.x1 == B.y + 2
    assert u.scale(B.y) == kz.ModuleVector.from_pair(B.scalar(0), B.scalar(0))
    assert (u - u).is_zero()
    assert str(kz.ModuleVector.from_coefficient(B.y)) == "(y)x1^x2"

    with pytest.raises(RuntimeError):
        u.coefficient
    with pytest.raises(RuntimeError):
        kz.ModuleVector.from_coefficient(B.y).x1
    with pytest.raises(RuntimeError):
        kz.ModuleVector(B, 1, [0, 0, 0, 0])
    with pytest.raises(RuntimeError):
        u + kz.ModuleVector.from_coefficient(B.y)


def test_homology_h0_13_4():
    kd = kz.build_koszul(build_case(13, 4))
    h0 = kz.homology_h0(kd)

    assert h0.invariant_factors == [8, 64, 128, 0]
    assert h0.describe() == "Z/8 + Z/64 + Z/128 + Z"
    assert h0.order_of(list(kd.algebra.y.coords)) == 64


def test_homology_h2():
    kd = kz.build_koszul(build_case(13, 4))
    B = kd.algebra
    group, basis = kz.homology_h2(kd)

    assert group.describe() == "Z"
    assert len(basis) == 1
    assert basis[0].coefficient == (B.y + 2) * (B.delta_c + 8)

    group, basis = kz.homology_h2(kz.build_koszul(build_case(10, 4)))
    assert group.free_rank == 2
    assert len(basis) == 2


def test_standard_kernel_generators():
    kd = kz.build_koszul(build_case(13, 4))
    B = kd.algebra
    gens = kz.standard_kernel_generators(kd.params, kd)

    assert gens.names == ["u1", "u2", "u3"]
    assert "u4" not in gens
    assert gens["u3"] == kz.ModuleVector.from_pair(B.one(), 2 * B.y)
    assert gens.leading_terms == ["y*x1", "y*delta_c*x2", "x1"]
    assert gens.to_dict()["u1"] == {"leading_term": "y*x1", "x1": "y + 2", "x2": "0"}

    with pytest.raises(RuntimeError):
        gens["u4"]

    gens = kz.standard_kernel_generators(build_case(11, 4))
    assert gens.names == ["u1", "u2", "u3", "u4"]
    assert gens.leading_terms[3] == "delta_c*x1"


def test_module_order_and_labels():
    kd = kz.build_koszul(build_case(13, 4))

    assert kz.module_order(kd) == [3, 2, 1, 0, 7, 6, 5, 4]
    assert [kz.monomial_label(kd, k) for k in kz.module_order(kd)] == [
        "y*delta_c*x1", "delta_c*x1", "y*x1", "x1",
        "y*delta_c*x2", "delta_c*x2", "y*x2", "x2",
    ]
    assert kz.leading_term(kd, [0] * 8) is None
    assert kz.leading_term(kd, [0, 0, 0, 0, 5, 0, 0, 0]) == (4, 5, "x2")


def test_wedge_multiply():
    kd = kz.build_koszul(build_case(13, 4))
    B = kd.algebra
    gens = kz.standard_kernel_generators(kd.params, kd)
    v = (B.y + 2) * (B.delta_c + 8)

    assert kz.wedge_multiply(kd, gens["u1"], gens["u2"]).coefficient == 2 * v
    assert kz.wedge_multiply(kd, gens["u1"], gens["u3"]).is_zero()
    assert kz.wedge_multiply(kd, gens["u2"], gens["u3"]).coefficient == -v

    with pytest.raises(RuntimeError):
        kz.wedge_multiply(kd, kz.ModuleVector.from_pair(B.one(), B.scalar(0)), gens["u1"])


def test_in_image_d2():
    kd = kz.build_koszul(build_case(13, 4))
    B = kd.algebra
    gens = kz.standard_kernel_generators(kd.params, kd)

    assert kz.in_image_d2(kd, gens["u1"].scale(B.y))
    assert not kz.in_image_d2(kd, gens["u1"])
    assert kz.in_image_d2(kd, kd.d2(kz.ModuleVector.from_coefficient(B.delta_c)))


def test_verify_koszul_full():
    for m, s in ODD_FULL:
        records = kz.verify_koszul(build_case(m, s))
        assert [record.name for record in records] == [
            "koszul.complex", "koszul.h0.order_of_y", "koszul.h0.augmentation",
            "koszul.h2.rank", "koszul.h2.generator", "koszul.h1.kernel_membership",
            "koszul.h1.span", "koszul.h1.generator_orders",
        ]
        assert all(record.status == "pass" for record in records)


def test_verify_koszul_on_grid():
    for m, s in GRID:
        records = kz.verify_koszul(build_case(m, s))
        statuses = {record.name: record.status for record in records}

        assert statuses["koszul.h1.span"] == "pass", (m, s)
        assert set(statuses.values()) == {"pass"}, (m, s)
        assert [record.name for record in records if not record.gating] == ["koszul.h1.generator_orders"]
