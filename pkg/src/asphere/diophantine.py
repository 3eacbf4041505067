"""Integer linear algebra for the shift solver.

Smith normal form with transformation matrices backs the Diophantine
solver; a column Hermite form of the same matrix describes the lattice
of reachable right-hand sides, which the solver walks in lexicographic
order inside a box.  Everything is exact arbitrary-precision integer
arithmetic on small dense matrices.
"""

from __future__ import annotations

__all__ = [
    "smith_normal_form",
    "solve_integer_system",
    "kernel_basis",
    "column_hnf",
    "column_echelon",
    "lex_smallest_coset_point",
    "min_maxnorm_in_coset",
    "SearchBudgetExceeded",
]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a bounded enumeration exceeds its node budget."""


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_vec(mat, vec) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def _mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _diagonalize(mat):
    """Diagonalize by unimodular row/column operations.

    Returns (d, u, v) with u @ mat @ v == d diagonal and nonzero entries
    first; the divisibility chain is not enforced here.
    """
    d = [list(row) for row in mat]
    rows = len(d)
    cols = len(d[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)
    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] and (best is None or abs(d[i][j]) < best):
                    best = abs(d[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        d[t], d[i0] = d[i0], d[t]
        u[t], u[i0] = u[i0], u[t]
        for row in d:
            row[t], row[j0] = row[j0], row[t]
        for row in v:
            row[t], row[j0] = row[j0], row[t]
        clean = True
        for i in range(t + 1, rows):
            if d[i][t]:
                q = d[i][t] // d[t][t]
                d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if d[i][t]:
                    clean = False
        for j in range(t + 1, cols):
            if d[t][j]:
                q = d[t][j] // d[t][t]
                for row in d:
                    row[j] -= q * row[t]
                for row in v:
                    row[j] -= q * row[t]
                if d[t][j]:
                    clean = False
        if clean:
            if d[t][t] < 0:
                d[t] = [-x for x in d[t]]
                u[t] = [-x for x in u[t]]
            t += 1
    return d, u, v


def smith_normal_form(mat):
    """Return (d, u, v) with u @ mat @ v == d in Smith normal form."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    d, u, v = _diagonalize(mat)
    while True:
        bad = next(
            (
                i
                for i in range(min(rows, cols) - 1)
                if d[i][i] and d[i + 1][i + 1] and d[i + 1][i + 1] % d[i][i] != 0
            ),
            None,
        )
        if bad is None:
            return d, u, v
        # Standard fix-up: fold column bad+1 into column bad, then
        # re-diagonalize and compose the transforms.
        for row in d:
            row[bad] += row[bad + 1]
        for row in v:
            row[bad] += row[bad + 1]
        d, u2, v2 = _diagonalize(d)
        u = _mat_mul(u2, u)
        v = _mat_mul(v, v2)


def solve_integer_system(mat, target):
    """Integer m with mat @ m == target, or None if no solution exists."""
    rows = len(mat)
    if rows and len(target) != rows:
        raise ValueError(f"dimension mismatch: {rows} equations, {len(target)} targets")
    cols = len(mat[0]) if rows else 0
    d, u, v = _diagonalize(mat)
    rhs = _mat_vec(u, list(target))
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < min(rows, cols) else 0
        if di:
            if rhs[i] % di != 0:
                return None
            y[i] = rhs[i] // di
        elif rhs[i] != 0:
            return None
    return _mat_vec(v, y)


def kernel_basis(mat):
    """Basis of the integer kernel of mat, as a list of vectors."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    d, _u, v = _diagonalize(mat)
    free = [j for j in range(cols) if j >= min(rows, cols) or d[j][j] == 0]
    return [[v[i][j] for i in range(cols)] for j in free]


def column_hnf(mat):
    """Lower-triangular basis (k x k) of the column lattice of a full
    row-rank k x l matrix, obtained by integer column operations."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    work = [[mat[i][j] for j in range(cols)] for i in range(rows)]
    for r in range(rows):
        if not any(work[r][j] for j in range(r, cols)):
            raise ValueError("matrix does not have full row rank")
        while len([j for j in range(r, cols) if work[r][j]]) > 1:
            live = sorted((j for j in range(r, cols) if work[r][j]), key=lambda j: abs(work[r][j]))
            j0, j1 = live[0], live[1]
            q = work[r][j1] // work[r][j0]
            for i in range(rows):
                work[i][j1] -= q * work[i][j0]
        j = next(j for j in range(r, cols) if work[r][j])
        for i in range(rows):
            work[i][r], work[i][j] = work[i][j], work[i][r]
        if work[r][r] < 0:
            for i in range(rows):
                work[i][r] = -work[i][r]
    return [[work[i][j] for j in range(rows)] for i in range(rows)]


def column_echelon(vectors):
    """Column echelon form of a list of integer vectors.

    Returns (columns, pivot_rows): the columns span the same lattice,
    column j has its first nonzero entry (positive) at pivot_rows[j],
    strictly increasing.
    """
    if not vectors:
        return [], []
    rows = len(vectors[0])
    work = [list(v) for v in vectors]
    cols_out = []
    pivots = []
    for r in range(rows):
        if not any(c[r] for c in work):
            continue
        while len([c for c in work if c[r]]) > 1:
            live = sorted((c for c in work if c[r]), key=lambda c: abs(c[r]))
            c0, c1 = live[0], live[1]
            q = c1[r] // c0[r]
            for i in range(rows):
                c1[i] -= q * c0[i]
        pivot_col = next(c for c in work if c[r])
        work.remove(pivot_col)
        if pivot_col[r] < 0:
            pivot_col = [-x for x in pivot_col]
        cols_out.append(pivot_col)
        pivots.append(r)
        if not work:
            break
    assert not any(any(c) for c in work), "echelon reduction left a nonzero column"
    return cols_out, pivots


def lex_smallest_coset_point(base, hnf, hi, node_budget: int = 10_000_000):
    """Lexicographically smallest t with 0 <= t_i <= hi_i and t - base
    in the lattice spanned by the columns of the lower-triangular matrix
    hnf; None when the box contains no coset point."""
    k = len(base)
    nodes = 0

    def rec(depth: int, xs: list[int]):
        nonlocal nodes
        if depth == k:
            return []
        offset = base[depth] + sum(hnf[depth][j] * xs[j] for j in range(depth))
        step = hnf[depth][depth]
        lo_x = -((offset - 0) // step)  # ceil((0 - offset) / step)
        hi_x = (hi[depth] - offset) // step
        for x in range(lo_x, hi_x + 1):
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded("coset search exceeded node budget")
            tail = rec(depth + 1, xs + [x])
            if tail is not None:
                return [offset + step * x] + tail
        return None

    return rec(0, [])


def min_maxnorm_in_coset(m0, kernel, coeff_bound: int):
    """Vector of minimal max-norm in m0 + (lattice spanned by kernel),
    with lattice coefficients restricted to |y| <= coeff_bound.

    Ties in the norm are broken by lexicographic order of the vector.
    Returns m0 unchanged when the kernel is trivial.
    """
    if not kernel:
        return list(m0)
    cols, pivots = column_echelon(kernel)
    p = len(cols)

    def add_scaled(vec, col, y):
        return [a + y * b for a, b in zip(vec, col)]

    # Seed candidate: round away the pivot coordinates column by column.
    seed = list(m0)
    for j in range(p):
        step = cols[j][pivots[j]]
        y = max(-coeff_bound, min(coeff_bound, -round(seed[pivots[j]] / step)))
        seed = add_scaled(seed, cols[j], y)
    best_vec = seed
    best_norm = max(abs(x) for x in seed)

    def rec(depth: int, current: list[int]):
        nonlocal best_vec, best_norm
        if depth == p:
            norm = max(abs(x) for x in current)
            if norm < best_norm or (norm == best_norm and current < best_vec):
                best_norm = norm
                best_vec = list(current)
            return
        piv = pivots[depth]
        step = cols[depth][piv]
        # Later columns vanish at this pivot row, so coordinate piv is
        # final here: |current[piv] + y*step| <= best_norm.
        lo = max(-((current[piv] + best_norm) // step), -coeff_bound)
        hi = min((best_norm - current[piv]) // step, coeff_bound)
        for y in range(lo, hi + 1):
            rec(depth + 1, add_scaled(current, cols[depth], y))

    rec(0, list(m0))
    return best_vec
