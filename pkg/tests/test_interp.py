import random
import time

import numpy as np
import pytest
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from multifiber.dims import fcount, vcount
from multifiber.interp import (
    DEFAULT_PRIME,
    InterpConfig,
    build_matrix,
    condition_multiindices,
    dim_oracle,
    monomial_basis_two_points,
    monomial_exponents,
)
from multifiber._modp import rank_mod_p
from multifiber.lattice import class_y

P = DEFAULT_PRIME


def test_multiindex_counts():
    assert len(condition_multiindices(3, (5, 5, 5))) == 10
    assert len(condition_multiindices(1, (0, 0))) == 1
    assert condition_multiindices(0, (3, 3)) == []
    # |alpha| <= 2 on seven coordinates, each alpha_i <= 1
    assert len(condition_multiindices(3, (1,) * 7)) == 29


def test_monomial_order():
    assert monomial_exponents((1, 2)).tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]


def test_matrix_by_hand_one_variable():
    M = build_matrix(class_y((2,), (2,)), [(3,)], InterpConfig(prime=101))
    assert M.tolist() == [[1, 3, 9], [0, 1, 6]]


def test_matrix_by_hand_two_variables():
    M = build_matrix(class_y((1, 1), (2,)), [(2, 5)], InterpConfig(prime=101))
    # columns 1, y, x, xy; rows value, d/dy, d/dx
    assert M.tolist() == [[1, 5, 2, 10], [0, 1, 0, 2], [0, 0, 1, 5]]


def test_matrix_shapes():
    assert dim_oracle(class_y((1,) * 7, (3, 3, 3))).rows == 87
    assert dim_oracle(class_y((1,) * 7, (3, 3, 3))).cols == 128
    rep = dim_oracle(class_y((5, 5, 5), (3,) * 6))
    assert (rep.rows, rep.cols) == (60, 216)


def test_bad_points():
    D = class_y((1, 1), (1, 1))
    with pytest.raises(ValueError):
        build_matrix(D, [(1, 2)])
    with pytest.raises(ValueError):
        build_matrix(D, [(1, 2), (1, 2)])
    with pytest.raises(ValueError):
        build_matrix(D, [(1, 2), (0, 3)])
    with pytest.raises(ValueError):
        build_matrix(D, [(1, 2), (3,)])


def test_config_validation():
    with pytest.raises(ValueError):
        InterpConfig(prime=100)
    with pytest.raises(ValueError):
        InterpConfig(prime=2**31 + 11)
    with pytest.raises(ValueError):
        InterpConfig(trials=0)
    with pytest.raises(ValueError):
        dim_oracle(class_y((6,), (1,)), InterpConfig(prime=11))


def test_rank_against_sympy():
    rng = np.random.default_rng(3)
    for p in (101, 65521, P):
        for shape in [(5, 9), (9, 5), (7, 7), (1, 4), (0, 3)]:
            A = rng.integers(0, p, size=shape, dtype=np.int64)
            if shape[0] > 2:
                A[2] = (A[0] * 3 + A[1]) % p
            ref = DomainMatrix([[GF(p)(int(x)) for x in row] for row in A.tolist()], shape, GF(p)).rank() if shape[0] else 0
            assert rank_mod_p(A, p) == ref


def test_oracle_rank_against_sympy():
    D = class_y((2, 2, 1), (2, 2, 1))
    cfg = InterpConfig(prime=10007)
    rng = np.random.default_rng([0, 0])
    from multifiber.interp import random_points

    M = build_matrix(D, random_points(3, 3, 10007, rng), cfg)
    ref = DomainMatrix([[GF(10007)(int(x)) for x in row] for row in M.tolist()], M.shape, GF(10007)).rank()
    assert rank_mod_p(M, 10007) == ref
    assert dim_oracle(D, cfg).trial_ranks[0] == ref


def test_known_dimensions():
    assert dim_oracle(class_y((5, 5, 5), (3,) * 6)).dim_affine == 156
    rep = dim_oracle(class_y((1,) * 7, (3, 3, 3)))
    assert (rep.dim_affine, rep.rank, rep.dim_proj) == (42, 86, 41)
    # quadric through seven general points of (P^1)^3 is unique
    assert dim_oracle(class_y((1, 1, 1), (1,) * 7)).dim_affine == 1


def test_determinism():
    D = class_y((3, 2, 2), (2, 2, 2, 1))
    a = dim_oracle(D, InterpConfig(seed=4))
    b = dim_oracle(D, InterpConfig(seed=4))
    assert a.as_dict() == b.as_dict()


def test_monotone_in_multiplicity():
    rng = random.Random(8)
    for _ in range(20):
        d = [rng.randint(0, 3) for _ in range(2)]
        m = [rng.randint(0, 4) for _ in range(3)]
        lo = dim_oracle(class_y(d, m)).dim_affine
        m[0] += 1
        assert dim_oracle(class_y(d, m)).dim_affine <= lo


def test_dimension_above_expected():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 3)
        D = class_y([rng.randint(0, 4) for _ in range(n)], [rng.randint(0, 4) for _ in range(rng.randint(0, 4))])
        got = dim_oracle(D).dim_affine
        assert got >= max(vcount(D), 0)


def test_negative_multiplicity_clamped():
    assert dim_oracle(class_y((2, 2), (2, -1))).dim_affine == dim_oracle(class_y((2, 2), (2, 0))).dim_affine


def test_failure_bound():
    rep = dim_oracle(class_y((5, 5, 5), (3,) * 6))
    assert 0 < rep.failure_bound < 1e-6
    assert rep.failure_bound == pytest.approx(rep.rank * 15 / (P - 1))


def test_monomial_basis_examples():
    basis = monomial_basis_two_points(class_y((1, 1), (1, 1)))
    assert sorted(basis) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]
    assert monomial_basis_two_points(class_y((1, 1), (2, 1))) == []
    assert len(monomial_basis_two_points(class_y((2, 3), ()))) == 12
    with pytest.raises(ValueError):
        monomial_basis_two_points(class_y((1,), (0, 0, 0)))


def test_basis_matches_oracle():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 3)
        D = class_y([rng.randint(0, 4) for _ in range(n)], [rng.randint(0, 8) for _ in range(2)])
        assert len(monomial_basis_two_points(D)) == dim_oracle(D).dim_affine == max(fcount(D), 0)


def test_warm_timing():
    D = class_y((1,) * 7, (3, 3, 3))
    dim_oracle(D)
    t0 = time.perf_counter()
    dim_oracle(D)
    assert time.perf_counter() - t0 < 1.0
