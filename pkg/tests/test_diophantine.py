import itertools
import random

import pytest

from asphere.diophantine import (
    SearchBudgetExceeded,
    column_echelon,
    column_hnf,
    kernel_basis,
    lex_smallest_coset_point,
    min_maxnorm_in_coset,
    smith_normal_form,
    solve_integer_system,
)


def _mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _mat_vec(mat, vec):
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det(minor)
    return total


def _rand_matrix(rng, rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_smith_normal_form_random():
    rng = random.Random(61)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        mat = _rand_matrix(rng, rows, cols)
        d, u, v = smith_normal_form(mat)
        assert _mat_mul(_mat_mul(u, mat), v) == d
        assert abs(_det(u)) == 1
        assert abs(_det(v)) == 1
        diag = [d[i][i] for i in range(min(rows, cols))]
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert d[i][j] == 0
        nonzero = [x for x in diag if x]
        assert all(x > 0 for x in nonzero)
        assert diag[: len(nonzero)] == nonzero  # zeros trail
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0


def test_solve_integer_system_random():
    rng = random.Random(67)
    for _ in range(60):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        mat = _rand_matrix(rng, rows, cols)
        # Solvable instance: target comes from a known integer vector.
        m_true = [rng.randint(-5, 5) for _ in range(cols)]
        target = _mat_vec(mat, m_true)
        m = solve_integer_system(mat, target)
        assert m is not None
        assert _mat_vec(mat, m) == target


def test_solve_integer_system_unsolvable():
    assert solve_integer_system([[2, 0], [0, 2]], [1, 0]) is None
    assert solve_integer_system([[1, 1], [1, 1]], [0, 1]) is None
    assert solve_integer_system([[2]], [3]) is None
    assert solve_integer_system([[3]], [6]) == [2]


def test_kernel_basis_random():
    rng = random.Random(71)
    for _ in range(40):
        rows, cols = rng.randint(1, 3), rng.randint(1, 4)
        mat = _rand_matrix(rng, rows, cols)
        kernel = kernel_basis(mat)
        for vec in kernel:
            assert _mat_vec(mat, vec) == [0] * rows
        # Solutions of a solvable system differ by kernel elements: check
        # the difference of two solve calls is in the span for rank-0 case.
        if not kernel:
            continue
        # Kernel vectors are part of a unimodular matrix, hence primitive.
        assert all(any(vec) for vec in kernel)


def test_kernel_dimension():
    # delta spans the kernel of the ell = 2 simple-root matrix.
    kernel = kernel_basis([[0, 1], [1, 0]])
    assert kernel == []
    kernel = kernel_basis([[1, 1]])
    assert len(kernel) == 1
    assert kernel[0][0] == -kernel[0][1]


def test_column_hnf_lattice_equality():
    rng = random.Random(73)
    for _ in range(40):
        rows = rng.randint(1, 3)
        cols = rng.randint(rows, 4)
        mat = _rand_matrix(rng, rows, cols)
        try:
            hnf = column_hnf(mat)
        except ValueError:
            continue  # not full row rank
        # Lower triangular with positive diagonal.
        for i in range(rows):
            assert hnf[i][i] > 0
            for j in range(i + 1, rows):
                assert hnf[i][j] == 0
        # Each HNF column is an integer combination of matrix columns
        # and vice versa, so the column lattices agree.
        for j in range(rows):
            col = [hnf[i][j] for i in range(rows)]
            assert solve_integer_system(mat, col) is not None
        for j in range(cols):
            col = [mat[i][j] for i in range(rows)]
            assert solve_integer_system(hnf, col) is not None


def test_column_hnf_rejects_rank_deficient():
    with pytest.raises(ValueError):
        column_hnf([[1, 2], [2, 4]])


def test_column_echelon():
    rng = random.Random(79)
    for _ in range(30):
        rows = rng.randint(1, 4)
        count = rng.randint(1, 3)
        vectors = [[rng.randint(-4, 4) for _ in range(rows)] for _ in range(count)]
        cols, pivots = column_echelon(vectors)
        assert pivots == sorted(pivots)
        for col, piv in zip(cols, pivots):
            assert col[piv] > 0
            assert all(col[i] == 0 for i in range(piv))
        # Same lattice: originals are combinations of echelon columns.
        if cols:
            mat = [[c[i] for c in cols] for i in range(rows)]
            for vec in vectors:
                assert solve_integer_system(mat, vec) is not None


def _brute_lex_smallest(base, hnf, hi):
    k = len(base)
    mat = [[hnf[i][j] for j in range(k)] for i in range(k)]
    best = None
    for point in itertools.product(*(range(h + 1) for h in hi)):
        diff = [p - b for p, b in zip(point, base)]
        if solve_integer_system(mat, diff) is not None:
            if best is None or list(point) < best:
                best = list(point)
    return best


def test_lex_smallest_coset_point_brute_force():
    rng = random.Random(83)
    for _ in range(40):
        k = rng.randint(1, 3)
        hnf = [[0] * k for _ in range(k)]
        for i in range(k):
            hnf[i][i] = rng.randint(1, 4)
            for j in range(i):
                hnf[i][j] = rng.randint(-3, 3)
        base = [rng.randint(-6, 6) for _ in range(k)]
        hi = [rng.randint(0, 5) for _ in range(k)]
        assert lex_smallest_coset_point(base, hnf, hi) == _brute_lex_smallest(base, hnf, hi)


def test_lex_smallest_budget():
    hnf = [[1, 0], [0, 1]]
    with pytest.raises(SearchBudgetExceeded):
        lex_smallest_coset_point([0, 0], hnf, [10_000, 10_000], node_budget=10)


def _brute_min_maxnorm(m0, kernel, bound):
    best = None
    for ys in itertools.product(range(-bound, bound + 1), repeat=len(kernel)):
        vec = list(m0)
        for y, col in zip(ys, kernel):
            vec = [a + y * b for a, b in zip(vec, col)]
        key = (max(abs(x) for x in vec), vec)
        if best is None or key < best:
            best = key
    return best[1]


def test_min_maxnorm_in_coset_brute_force():
    rng = random.Random(89)
    for _ in range(30):
        dim = rng.randint(1, 3)
        m0 = [rng.randint(-8, 8) for _ in range(dim)]
        count = rng.randint(0, min(2, dim))
        kernel = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(count)]
        kernel = [v for v in kernel if any(v)]
        got = min_maxnorm_in_coset(m0, kernel, 4)
        want = _brute_min_maxnorm(m0, kernel, 4)
        assert got == want, (m0, kernel)


def test_min_maxnorm_trivial_kernel():
    assert min_maxnorm_in_coset([3, -2], [], 5) == [3, -2]
