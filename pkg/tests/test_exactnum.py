import random

from fractions import Fraction

import pytest

from torcomp.exactnum import (
    ZZ, QQ, GF, Matrix,
    smith_normal_form, invariant_factors,
    rank_and_kernel, kernel_integer, solve_integer, cokernel_decomposition,
)
from torcomp.exactnum.matrix import det_sign_unimodular


def snf_check(m):
    D, U, V = smith_normal_form(m)
    assert U * m * V == D
    assert abs(det_sign_unimodular(U)) == 1
    assert abs(det_sign_unimodular(V)) == 1
    n = min(D.rows, D.cols)
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    diag = [D[i, i] for i in range(n)]
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert all(d >= 0 for d in diag)
    return D


def test_snf_hand_checked_2x2():
    # Row/column reduction by hand: [[2,4],[6,8]] -> gcd 2 pivot, then
    # remaining block determinant 2*|8-12| = 8, so diag(2, 4).
    m = Matrix(ZZ, [[2, 4], [6, 8]])
    D = snf_check(m)
    assert [D[0, 0], D[1, 1]] == [2, 4]


def test_snf_identity_and_zero():
    D = snf_check(Matrix.identity(ZZ, 3))
    assert [D[i, i] for i in range(3)] == [1, 1, 1]
    D = snf_check(Matrix.zeros(ZZ, 2, 3))
    assert D.is_zero()


def test_snf_known_textbook_case():
    m = Matrix(ZZ, [[12, 6, 4], [3, 9, 6], [2, 16, 14]])
    D = snf_check(m)
    assert [D[i, i] for i in range(3)] == [1, 10, 30]


def test_invariant_factors_unimodular_invariance():
    rng = random.Random(7)
    m = Matrix(ZZ, [[2, 0, 0], [0, 6, 0]])
    base = invariant_factors(m)
    for _ in range(10):
        u = _random_unimodular(rng, 2)
        v = _random_unimodular(rng, 3)
        assert invariant_factors(u * m * v) == base


def _random_unimodular(rng, n):
    m = Matrix.identity(ZZ, n)
    a = [list(r) for r in m.entries]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        for k in range(n):
            a[i][k] += c * a[j][k]
    return Matrix(ZZ, a)


def test_rank_kernel_proportional_rows():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    rank, basis = rank_and_kernel(m)
    assert rank == 1
    assert len(basis) == 1
    v = basis[0]
    # Forced up to scale: (-2, 1).
    assert v[0] / v[1] == Fraction(-2)


def test_rank_kernel_identity_f5_and_zero_f3():
    rank, basis = rank_and_kernel(Matrix.identity(GF(5), 4))
    assert rank == 4 and basis == []
    rank, basis = rank_and_kernel(Matrix.zeros(GF(3), 2, 2))
    assert rank == 0 and len(basis) == 2


def test_rank_transpose_equal():
    rng = random.Random(11)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix(QQ, [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        r1, _ = rank_and_kernel(m)
        r2, _ = rank_and_kernel(m.transpose())
        assert r1 == r2


def test_integer_kernel_and_solve():
    m = Matrix(ZZ, [[2, 4, 6], [1, 2, 3]])
    basis = kernel_integer(m)
    assert len(basis) == 2
    for v in basis:
        assert all(x == 0 for x in m.apply_vector(v))
    assert solve_integer(m, [2, 1]) is not None
    assert solve_integer(m, [1, 1]) is None  # would force 2x+4y+6z=1


def test_cokernel_decomposition():
    # Z^2 / <(2,0),(0,0)> = Z/2 + Z
    m = Matrix(ZZ, [[2, 0], [0, 0]])
    free, tors = cokernel_decomposition(m)
    assert (free, tors) == (1, [2])


def test_snf_randomized_reconstruction_suite():
    """Property: U m V == D with unimodular U, V and divisible diagonal."""
    rng = random.Random(2024)
    for _ in range(60):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix(ZZ, [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        snf_check(m)


def test_prime_field_p2():
    f2 = GF(2)
    m = Matrix(f2, [[1, 1], [1, 1]])
    rank, basis = rank_and_kernel(m)
    assert rank == 1 and len(basis) == 1


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)
