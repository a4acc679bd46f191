import random

import pytest
from hypothesis import given, settings, strategies as st

from multifiber.dims import vcount
from multifiber.interp import dim_oracle
from multifiber.lattice import (
    DivisorClassX,
    LatticeError,
    canonical_y,
    class_y,
    pair_x,
    pair_y,
    reflect,
    weyl_generators,
)
from multifiber.weyl import is_pre_standard, is_standard, phi_pull, phi_push, standard_form

from conftest import classes


def test_standard_predicates():
    ex1_std = class_y((5, 5, 5), (3,) * 6)
    assert is_pre_standard(ex1_std) and is_standard(ex1_std)
    ex1 = class_y((13, 9, 5), (11, 11, 7, 7, 3, 3))
    assert not is_pre_standard(ex1)
    D = class_y((1, 1), (0, -1))
    assert is_pre_standard(D) and not is_standard(D)
    assert not is_pre_standard(class_y((1, 2), (0, 0)))
    assert is_standard(class_y((2, 1), ()))


def test_standard_form_example():
    out, trace = standard_form(class_y((13, 9, 5), (11, 11, 7, 7, 3, 3)))
    assert out == class_y((5, 5, 5), (3,) * 6)
    assert trace.steps == [class_y((9, 5, 5), (7, 7, 3, 3, 3, 3)), out]
    assert trace.outcome == out and not trace.empty


def test_standard_form_fixed_point():
    D = class_y((5, 5, 5), (3,) * 6)
    out, trace = standard_form(D)
    assert out == D and trace.steps == []


def test_standard_form_empty():
    out, trace = standard_form(class_y((1, 1), (2, 2)))
    assert out is None and trace.empty


def test_standard_form_few_points():
    # a double point on a (3,0) system leaves two sections
    out, _ = standard_form(class_y((3, 0), (2,)))
    assert out.r == 1
    assert dim_oracle(out).dim_affine == dim_oracle(class_y((3, 0), (2,))).dim_affine == 2
    out, _ = standard_form(class_y((2, 2), ()))
    assert out == class_y((2, 2), ())


def _sort(D):
    return class_y(sorted(D.d, reverse=True), sorted(D.m, reverse=True))


@settings(max_examples=300)
@given(st.data())
def test_reduction_trace_invariants(data):
    n = data.draw(st.integers(2, 4))
    r = data.draw(st.integers(2, 7))
    D = data.draw(classes(n, r, lo=0, hi=12))
    out, trace = standard_form(D)
    R = weyl_generators(n, r)[0]
    K = canonical_y(n, r)
    prev = _sort(D)
    for step in trace.steps:
        assert sum(step.d) < sum(prev.d)
        assert step == _sort(reflect(prev, R))
        assert pair_y(step, step) == pair_y(D, D)
        assert pair_y(step, K) == pair_y(D, K)
        prev = step
    if out is None:
        assert min(trace.steps[-1].d) < 0
        # the empty outcome forces vdim <= -1
        assert vcount(D) <= 0
    else:
        assert is_pre_standard(out)
        assert pair_y(out, out) == pair_y(D, D)


def test_phi_push_hyperplane():
    Hx = DivisorClassX(3, 1, (0, 0, 0, 0))
    assert phi_push(Hx) == class_y((1, 1, 1), (2, 0))


def test_phi_push_basis_images():
    n, s = 3, 6
    for i in range(1, s + 1):
        m = [0] * s
        m[i - 1] = -1
        img = phi_push(DivisorClassX(n, 0, m))
        if i <= n:
            d = [0] * n
            d[n - i] = 1
            assert img == class_y(d, (1, 0, 0, 0))
        else:
            mm = [0] * (s - n + 1)
            mm[i - n] = -1
            assert img == class_y((0,) * n, mm)


def test_phi_push_degree_four_octic_example():
    assert phi_push(DivisorClassX(7, 4, (3,) * 9)) == class_y((1,) * 7, (3, 3, 3))
    assert phi_pull(class_y((1,) * 7, (3, 3, 3))) == DivisorClassX(7, 4, (3,) * 9)


def test_phi_bounds():
    with pytest.raises(LatticeError):
        phi_push(DivisorClassX(3, 1, (0, 0, 0)))
    with pytest.raises(LatticeError):
        phi_pull(class_y((1, 1, 1), (1,)))


@settings(max_examples=300)
@given(st.data())
def test_phi_inverse_and_isometry(data):
    n = data.draw(st.integers(2, 6))
    s = data.draw(st.integers(n + 1, n + 5))
    ints = st.integers(-20, 20)
    A = DivisorClassX(n, data.draw(ints), data.draw(st.lists(ints, min_size=s, max_size=s)))
    B = DivisorClassX(n, data.draw(ints), data.draw(st.lists(ints, min_size=s, max_size=s)))
    assert phi_pull(phi_push(A)) == A
    assert pair_y(phi_push(A), phi_push(B)) == pair_x(A, B)
    Y = phi_push(A)
    assert phi_push(phi_pull(Y)) == Y


def test_h0_invariance_small_sample():
    rng = random.Random(11)
    seen = 0
    while seen < 10:
        n, r = rng.randint(2, 3), rng.randint(2, 4)
        D = class_y([rng.randint(0, 4) for _ in range(n)], [rng.randint(0, 4) for _ in range(r)])
        base = dim_oracle(D).dim_affine
        if base == 0:
            continue
        seen += 1
        for R in weyl_generators(n, r):
            assert dim_oracle(reflect(D, R)).dim_affine == base
        assert dim_oracle(standard_form(D)[0]).dim_affine == base
