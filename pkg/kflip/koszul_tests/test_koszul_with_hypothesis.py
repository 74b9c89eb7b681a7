import hypothesis.strategies as st
from hypothesis import given, settings

from kflip.intlinalg.intlinalg import columns, mat_vec
from kflip.koszul import koszul as kz
from kflip.repring.repring import build_case


COMPLEXES = {case: kz.build_koszul(build_case(*case)) for case in [(13, 4), (11, 4), (9, 2), (10, 4)]}

cases = st.sampled_from(sorted(COMPLEXES))


@st.composite
def cycles(draw, case):
    kd = COMPLEXES[case]
    basis = columns(kd.kernel_d1())
    weights = draw(st.lists(st.integers(-20, 20), min_size=len(basis), max_size=len(basis)))
    coords = [sum(w * col[i] for w, col in zip(weights, basis)) for i in range(2 * kd.rank)]
    return kz.ModuleVector(kd.algebra, 1, coords)


@st.composite
def cycle_pairs(draw):
    case = draw(cases)
    return case, draw(cycles(case)), draw(cycles(case))


@settings(deadline=None)
@given(cycle_pairs())
def test_with_hypothesis_wedge_lands_in_kernel(triple):
    case, a, b = triple
    kd = COMPLEXES[case]
    product = kz.wedge_multiply(kd, a, b)

    assert kd.d2(product).is_zero()
    assert kz.wedge_multiply(kd, b, a) == -product


@settings(deadline=None)
@given(cases, st.data())
def test_with_hypothesis_boundaries_are_cycles(case, data):
    kd = COMPLEXES[case]
    coords = data.draw(st.lists(st.integers(-50, 50), min_size=kd.rank, max_size=kd.rank))
    boundary = kd.d2(kz.ModuleVector(kd.algebra, 2, coords))

    assert kd.d1(boundary).is_zero()
    assert kz.in_image_d2(kd, boundary)


@settings(deadline=None)
@given(cases, st.data())
def test_with_hypothesis_kernel_elements_are_cycles(case, data):
    kd = COMPLEXES[case]
    vector = data.draw(cycles(case))

    assert all(x == 0 for x in mat_vec(kd.D1, vector.coords))
