from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qtlie.exactlin import (
    Matrix,
    is_zero_vec,
    mat_inverse,
    mat_kernel_basis,
    mat_rank,
    rat,
    rat_str,
)


def naive_rank(m: Matrix) -> int:
    # Independent oracle: plain rational Gaussian elimination, no Bareiss.
    rows = [list(r) for r in m.entries]
    rank = 0
    for c in range(m.cols):
        hit = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if hit is None:
            continue
        rows[rank], rows[hit] = rows[hit], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c] / piv
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
                   for _ in range(rows)])


def test_rat_parsing():
    assert rat("5") == 5
    assert rat("-3/4") == Fraction(-3, 4)
    assert rat(7) == 7
    assert rat_str(Fraction(-3, 4)) == "-3/4"
    assert rat_str(Fraction(10, 2)) == "5"
    with pytest.raises(TypeError):
        rat(0.5)


def test_rank_identity():
    assert mat_rank(Matrix.identity(3)) == 3


def test_rank_zero_matrix():
    assert mat_rank(Matrix.zero(2, 3)) == 0


def test_rank_dependent_rows():
    # row 2 = 2 * row 1
    assert mat_rank(Matrix([[1, 2, 3], [2, 4, 6]])) == 1


def test_kernel_full_rank():
    assert mat_kernel_basis(Matrix.identity(2)) == []


def test_kernel_one_constraint():
    # x - y = 0 has solution space spanned by (1, 1)
    assert mat_kernel_basis(Matrix([[1, -1]])) == [(Fraction(1), Fraction(1))]


def test_kernel_zero_matrix():
    basis = mat_kernel_basis(Matrix.zero(2, 2))
    assert len(basis) == 2
    assert Matrix(basis).entries == Matrix.identity(2).entries


def test_rank_nullity_and_exact_kernel():
    rng = random.Random(20240811)
    for _ in range(60):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        rank = mat_rank(m)
        basis = mat_kernel_basis(m)
        assert rank == naive_rank(m)
        assert rank + len(basis) == m.cols
        for v in basis:
            assert is_zero_vec(m.apply(v))


def test_rank_invariant_under_row_ops():
    rng = random.Random(7)
    for _ in range(25):
        m = random_matrix(rng, 4, 4)
        rank = mat_rank(m)
        perm = list(range(4))
        rng.shuffle(perm)
        scales = [Fraction(rng.choice([1, 2, -1, 3]), rng.choice([1, 2])) for _ in range(4)]
        shuffled = Matrix([[scales[i] * e for e in m.entries[perm[i]]] for i in range(4)])
        assert mat_rank(shuffled) == rank


def test_inverse_round_trip():
    rng = random.Random(99)
    found = 0
    while found < 10:
        m = random_matrix(rng, 3, 3)
        if mat_rank(m) < 3:
            continue
        found += 1
        assert m.mul(mat_inverse(m)) == Matrix.identity(3)
    with pytest.raises(ValueError):
        mat_inverse(Matrix([[1, 2], [2, 4]]))


def test_matrix_apply_and_mul():
    m = Matrix([["1/2", 0], [3, "-1/3"]])
    assert m.apply((rat(2), rat(3))) == (Fraction(1), Fraction(5))
    assert m.mul(Matrix.identity(2)) == m
    assert m.transpose().transpose() == m
