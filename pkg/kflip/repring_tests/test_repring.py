"""Tests for all the functions in repring.py"""

import pytest

from kflip.exact_core.exact_core import binom
from kflip.intlinalg.intlinalg import determinant
from kflip.repring import repring as rr
from kflip.utilities import ParameterError


GRID = [(7, 2), (9, 2), (11, 2), (13, 2), (15, 2),
        (11, 4), (13, 4), (15, 4), (10, 4), (12, 4), (14, 4), (16, 4),
        (14, 6), (15, 6), (16, 6)]


def test_build_case_13_4():
    p = rr.build_case(13, 4)

    assert (p.n, p.c, p.case, p.sigma) == (6, 2, "OddZero", 1)
    assert p.indices == [3, 4, 5]
    assert p.r == [128, 640, 3072]
    assert p.b0 == 128
    assert p.betas == [1, 0, 0]
    assert p.alpha == 6
    assert not p.has_u4
    assert (p.e, p.beta) == (1, 2)
    assert (p.A, p.C) == (8, 32)
    assert p.t_count == 2
    assert p.to_dict() == {"alpha": 6, "b0": 128, "c": 2, "case": "OddZero", "m": 13, "n": 6, "s": 4}


def test_build_case_other_cases():
    p = rr.build_case(9, 2)
    assert (p.n, p.c, p.case, p.b0, p.alpha) == (4, 2, "OddTwo", 32, 4)
    assert p.indices == [3]

    p = rr.build_case(10, 4)
    assert (p.case, p.c, p.b0, p.alpha, p.bound) == ("EvenZero", 1, 8, 3, 4)
    assert p.has_u4
    assert (p.e, p.beta) == (2, 1)

    p = rr.build_case(11, 4)
    assert (p.b0, p.alpha, p.e) == (8, 3, 4)

    assert rr.build_case(14, 6).case == "EvenTwo"
    assert rr.build_case(14, 4).case == "EvenZero"
    assert rr.build_case(15, 6).case == "OddTwo"


def test_build_case_index_counts():
    for m, s in GRID:
        p = rr.build_case(m, s)
        expected = s - 2 if m % 2 == 0 else s - 1
        assert len(p.indices) == expected
        assert len(p.betas) == expected
        assert sum(b * r for b, r in zip(p.betas, p.r)) == p.b0
        assert 2**p.alpha * p.beta == p.b0


def test_build_case_errors():
    for m, s in [(12, 3), (7, 0), (7, 4), (5, 2), (9, 4), (8, 2), (12, 2)]:
        with pytest.raises(ParameterError):
            rr.build_case(m, s)

    # ParameterError is a RuntimeError
    with pytest.raises(RuntimeError):
        rr.build_case(13, 1)
    with pytest.raises(ParameterError):
        rr.build_case(13.0, 4)


def test_case_params_equality():
    assert rr.build_case(13, 4) == rr.build_case(13, 4)
    assert rr.build_case(13, 4) != rr.build_case(15, 4)
    assert len({rr.build_case(13, 4), rr.build_case(13, 4)}) == 1


def test_build_B_odd():
    B = rr.build_B(rr.build_case(13, 4))

    assert B.rank == 4
    assert B.basis_names == ["1", "y", "delta_c", "y*delta_c"]
    assert B.delta_c * B.delta_c == -8 * B.delta_c - 40 * B.y
    assert str(B.delta_c * B.delta_c) == "-8delta_c - 40y"
    assert B.y * B.y == -2 * B.y
    for k in range(B.rank):
        assert B.one() * B.basis_element(k) == B.basis_element(k)

    with pytest.raises(RuntimeError):
        B.delta_plus


def test_build_B_two_mod_four_sign():
    # s = 2, c = 2: K = 2**3 (1 + binom(3, 2)) = 32
    B = rr.build_B(rr.build_case(9, 2))
    assert B.K == 32
    assert B.delta_c * B.delta_c == -8 * B.delta_c + 32 * B.y


def test_build_B_even():
    p = rr.build_case(10, 4)
    B = rr.build_B(p)

    assert B.rank == 8
    assert B.basis_names == ["1", "y", "delta_c", "delta_plus", "y*delta_c",
                             "y*delta_plus", "delta_c*delta_plus", "y*delta_c*delta_plus"]
    # c = 1: binom(s/2 + c - 1, c - 1) = 1 so the y term vanishes
    assert B.L == 0
    assert B.delta_plus * B.delta_plus == B.delta_c * B.delta_plus + B.delta_c

    B = rr.build_B(rr.build_case(14, 4))
    # c = 3: L = 2**3 (1 - binom(4, 2))
    assert B.L == -40
    assert B.delta_plus * B.delta_plus == B.delta_c * B.delta_plus + 4 * B.delta_c + 40 * B.y


def test_B_axioms_on_grid():
    for m, s in GRID:
        B = rr.build_B(rr.build_case(m, s))
        assert B.check_axioms() == []


def test_mul_matrix():
    B = rr.build_B(rr.build_case(13, 4))
    M = B.mul_matrix(B.y)

    assert M == [[0, 0, 0, 0],
                 [1, -2, 0, 0],
                 [0, 0, 0, 0],
                 [0, 0, 1, -2]]
    assert [row[0] for row in M] == list(B.y.coords)


def test_belement_errors():
    B = rr.build_B(rr.build_case(13, 4))
    other = rr.build_B(rr.build_case(15, 4))

    with pytest.raises(RuntimeError):
        rr.BElement(B, [1, 2])
    with pytest.raises(RuntimeError):
        B.y + other.y
    with pytest.raises(RuntimeError):
        B.y * "y"


def test_belement_str():
    B = rr.build_B(rr.build_case(13, 4))

    assert str(B.scalar(0)) == "0"
    assert str(B.theta) == "y + 1"
    assert str(-B.y + 3) == "-y + 3"
    assert (B.y * B.delta_c).to_dict() == {"y*delta_c": 1}


def test_res_delta():
    B = rr.build_B(rr.build_case(13, 4))
    assert rr.res_delta(rr.build_case(13, 4), B) == 8 * B.y * B.delta_c + 16 * B.delta_c + 32 * B.y
    assert str(rr.res_delta(rr.build_case(13, 4))) == "8y*delta_c + 16delta_c + 32y"

    p = rr.build_case(9, 2)
    B = rr.build_B(p)
    assert rr.res_delta(p, B) == -(2 * B.y * B.delta_c + 4 * B.delta_c + 8 * B.y)

    p = rr.build_case(14, 4)
    B = rr.build_B(p)
    assert rr.res_delta(p, B) == 4 * B.y * B.delta_c + 8 * B.delta_c + 32 * B.y


def test_res_pi_in_RH():
    p = rr.build_case(13, 4)

    assert rr.res_pi_in_RH(p, 1) == {0: (0, 4), 1: (1, 0)}
    assert rr.res_pi_in_RH(p, 2) == {0: (0, -8), 1: (0, 4), 2: (1, 0)}
    assert rr.res_pi_in_RH(p, 3) == {1: (0, -8), 2: (0, 4)}
    assert rr.res_pi_in_RH(p, 5) == {}

    for i in (0, 6):
        with pytest.raises(RuntimeError):
            rr.res_pi_in_RH(p, i)


def test_pi_bar_in_B():
    p = rr.build_case(13, 4)
    B = rr.build_B(p)

    assert rr.pi_bar_in_B(p, 0, B) == 1
    assert rr.pi_bar_in_B(p, 1, B) == -4 * B.y
    assert rr.pi_bar_in_B(p, 2, B) == -24 * B.y

    with pytest.raises(RuntimeError):
        rr.pi_bar_in_B(p, 3, B)


def test_pi_prime_in_B():
    p = rr.build_case(13, 4)
    B = rr.build_B(p)

    assert rr.pi_prime_in_B(p, 3, B) == 128 * B.y
    assert rr.pi_prime_in_B(p, 4, B) == -384 * B.y

    with pytest.raises(RuntimeError):
        rr.pi_prime_in_B(p, 2, B)
    with pytest.raises(RuntimeError):
        rr.pi_prime_in_B(p, 6, B)


def test_pi_prime_first_index_and_generating_function():
    for m, s in GRID:
        p = rr.build_case(m, s)
        B = rr.build_B(p)
        first = p.c + 1
        expected = binom(s // 2 + p.c, first) * 2**(2 * p.c + 1) * B.y

        assert rr.pi_prime_in_B(p, first, B) == expected
        for i in range(1, p.top + 1):
            value = rr.pi_prime_from_generating_function(p, i, B)
            if i <= p.c:
                assert value.is_zero()
            else:
                assert value == rr.pi_prime_in_B(p, i, B)


def test_change_of_generators_13_4():
    p = rr.build_case(13, 4)
    cog = rr.change_of_generators(p)

    assert cog.E == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert cog.a == [1, 5, 24]
    assert cog.p_matrix == [[1, 0, 0], [8, 1, 0], [48, 8, 1]]
    assert [str(x) for x in cog.res_v] == ["128y", "0", "0"]
    assert cog.v_matrix[1] == [-5, 1, 0]
    assert cog.to_dict()["res_v"] == ["128y", "0", "0"]


def test_change_of_generators_on_grid():
    for m, s in GRID:
        p = rr.build_case(m, s)
        B = rr.build_B(p)
        cog = rr.change_of_generators(p, B)

        assert cog.E[0] == p.betas
        assert abs(determinant(cog.E)) == 1
        for i, row in enumerate(cog.p_matrix):
            assert row[i] == 1
            assert all(x == 0 for x in row[i + 1:])
        assert [x for x in cog.res_p] == [r * B.y for r in p.r]
        assert cog.res_v[0] == p.b0 * B.y
        assert all(x.is_zero() for x in cog.res_v[1:])


def test_simplification_identities():
    for m, s in [(13, 4), (9, 2), (10, 4), (14, 6)]:
        B = rr.build_B(rr.build_case(m, s))
        records = rr.simplification_identities(B)
        assert len(records) == 5
        assert all(record.status == "pass" for record in records)


def test_line_bundle_class():
    p = rr.build_case(13, 4)
    B = rr.build_B(p)
    theta = rr.line_bundle_class(p, B)

    assert theta == B.y + 1
    assert theta * theta == 1


def test_verify_repring():
    for m, s in GRID:
        records = rr.verify_repring(rr.build_case(m, s))
        assert [record.status for record in records] == ["pass"] * 8


PARTIAL = [(6, 2), (8, 2), (10, 2), (12, 2), (14, 2), (16, 2)]


def test_build_case_partial():
    p = rr.build_case(8, 2, partial=True)

    assert (p.n, p.c, p.top, p.case) == (4, 2, 2, "EvenTwo")
    assert p.indices == [] and p.r == [] and p.betas == []
    assert (p.b0, p.alpha, p.e, p.beta) == (None, None, None, None)
    assert not p.has_b0 and not p.has_u4
    assert rr.build_case(13, 4, partial=True).has_b0

    # partial only relaxes the empty index range
    for m, s in [(12, 3), (5, 2), (7, 4)]:
        with pytest.raises(ParameterError):
            rr.build_case(m, s, partial=True)


def test_partial_cases_b0_operations():
    p = rr.build_case(8, 2, partial=True)
    B = rr.build_B(p)

    with pytest.raises(ParameterError):
        rr.change_of_generators(p, B)
    with pytest.raises(RuntimeError):
        rr.pi_prime_in_B(p, 2, B)


def test_verify_repring_partial_cases():
    for m, s in PARTIAL:
        p = rr.build_case(m, s, partial=True)
        B = rr.build_B(p)
        for i in range(1, p.top + 1):
            assert rr.pi_prime_from_generating_function(p, i, B).is_zero()

        records = rr.verify_repring(p, B)
        statuses = {record.name: record.status for record in records}
        assert statuses.pop("repring.change_of_generators") == "skip"
        assert set(statuses.values()) == {"pass"}
