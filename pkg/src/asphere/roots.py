"""Affine root combinatorics of the cyclic quiver.

Roots of the affine system on ell vertices are integer vectors
b = (b_0, ..., b_{ell-1}) in simple-root coordinates; delta is the
all-ones vector and real roots are the vectors of Cartan norm 2.  The
integral subsystem attached to a rational parameter vector consists of
the real roots whose pairing value lands in Z; its positive members,
simple roots and delta-period are computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .kernel import scan_members
from .rationals import denominator

__all__ = [
    "QuiverShape",
    "SubsystemReport",
    "cartan_matrix",
    "delta",
    "root_norm",
    "is_real_root",
    "pairing",
    "weight0_pairing",
    "membership_value",
    "in_integral_subsystem",
    "subsystem_period",
    "positive_members",
    "simple_roots_of_subsystem",
    "parse_root_vector",
    "format_root_vector",
]


def _values(lam) -> tuple[Fraction, ...]:
    """Accept a LambdaParam or a bare sequence of rationals."""
    return tuple(Fraction(v) for v in getattr(lam, "values", lam))


@dataclass(frozen=True)
class QuiverShape:
    """Cyclic quiver on ell vertices with dimension vector n*delta and a
    one-dimensional framing at the extending vertex 0."""

    ell: int
    n: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError("ell must be at least 2")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def v(self) -> tuple[int, ...]:
        return (self.n,) * self.ell

    @property
    def w(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.ell - 1)

    def neighbor_sum(self, i: int) -> int:
        # Each vertex of the cycle sees both neighbours (a double arrow
        # when ell = 2), all carrying dimension n.
        return 2 * self.n


@dataclass(frozen=True)
class SubsystemReport:
    """Simple roots, kind and delta-period of an integral subsystem."""

    simple_roots: tuple[tuple[int, ...], ...]
    kind: str  # "empty" | "finite" | "affine"
    period: int
    positivity_basis: bool


def delta(ell: int) -> tuple[int, ...]:
    return (1,) * ell


@lru_cache(maxsize=None)
def cartan_matrix(ell: int) -> tuple[tuple[int, ...], ...]:
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if ell == 2:
        return ((2, -2), (-2, 2))
    rows = []
    for i in range(ell):
        row = [0] * ell
        row[i] = 2
        row[(i - 1) % ell] = -1
        row[(i + 1) % ell] = -1
        rows.append(tuple(row))
    return tuple(rows)


def root_norm(shape: QuiverShape, b) -> int:
    """b^T C b for the affine Cartan matrix C."""
    b = tuple(b)
    if len(b) != shape.ell:
        raise ValueError(f"expected length {shape.ell}, got {len(b)}")
    cartan = cartan_matrix(shape.ell)
    return sum(bi * sum(cij * bj for cij, bj in zip(row, b)) for bi, row in zip(b, cartan))


def is_real_root(shape: QuiverShape, b) -> bool:
    return root_norm(shape, b) == 2


def pairing(lam, b) -> Fraction:
    values = _values(lam)
    b = tuple(b)
    if len(b) != len(values):
        raise ValueError(f"length mismatch: {len(values)} vs {len(b)}")
    return sum((v * bi for v, bi in zip(values, b)), Fraction(0))


def weight0_pairing(b) -> Fraction:
    """Coefficient b_0, as extracted by the fundamental (co)weight at 0."""
    return Fraction(b[0])


def membership_value(lam, b) -> Fraction:
    return pairing(lam, b) + Fraction(b[0], 2)


def in_integral_subsystem(shape: QuiverShape, lam, b) -> bool:
    """Whether the real root b belongs to the integral subsystem of lam.

    Evaluates the full quiver formula; for the cyclic quiver it agrees
    with membership_value(lam, b) being an integer (n * sum(b) in Z).
    """
    if not is_real_root(shape, b):
        raise ValueError(f"{tuple(b)} is not a real root")
    values = _values(lam)
    total = Fraction(0)
    for i, bi in enumerate(b):
        total += bi * (values[i] + Fraction(shape.w[i] + shape.neighbor_sum(i), 2))
    return total.denominator == 1


def subsystem_period(lam) -> int:
    """Denominator of <lam, delta> + 1/2; membership is periodic in
    translation by this many copies of delta."""
    values = _values(lam)
    return denominator(sum(values, Fraction(1, 2)))


@lru_cache(maxsize=None)
def _finite_roots(ell: int) -> tuple[tuple[tuple[int, ...], bool], ...]:
    """Roots of the finite system on vertices 1..ell-1, positives first.

    Each entry is (vector, is_positive); the vector lives in Z^ell with
    coordinate 0 equal to zero.
    """
    positives = []
    for i in range(1, ell):
        for j in range(i, ell):
            vec = [0] * ell
            for t in range(i, j + 1):
                vec[t] = 1
            positives.append(tuple(vec))
    entries = [(vec, True) for vec in positives]
    entries.extend((tuple(-x for x in vec), False) for vec in positives)
    return tuple(entries)


def positive_members(lam, kmax: int) -> list[tuple[int, ...]]:
    """Positive real roots alpha + k*delta, 0 <= k < kmax, in the
    integral subsystem of lam (alpha over the finite roots).
    """
    values = _values(lam)
    ell = len(values)
    if kmax <= 0:
        return []
    common = lcm(*(v.denominator for v in values))
    nums = [int(v * common) for v in values]
    mod = 2 * common
    finite = _finite_roots(ell)
    a_vals = np.empty(len(finite), dtype=np.int64)
    kmins = np.empty(len(finite), dtype=np.int64)
    for r, (vec, positive) in enumerate(finite):
        a_vals[r] = (2 * sum(p * x for p, x in zip(nums, vec)) + common * vec[0]) % mod
        kmins[r] = 0 if positive else 1
    b_val = (2 * sum(nums) + common) % mod
    out = []
    for r, k in scan_members(a_vals, b_val, mod, kmins, kmax):
        vec = finite[r][0]
        out.append(tuple(x + k for x in vec))
    return out


def _solve_nonneg_combination(simples, target) -> tuple[int, ...] | None:
    """Coefficients c >= 0 in Z with sum(c_i * simples[i]) == target.

    Simple roots are linearly independent, so the rational solution is
    unique when it exists; returns None when the system is inconsistent
    or the solution is not a vector of non-negative integers.
    """
    if not simples:
        return None
    k = len(simples)
    ell = len(target)
    # Columns are the simple roots; Gaussian elimination over Q.
    rows = [[Fraction(simples[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(ell)]
    pivot_row = 0
    pivots = []
    for col in range(k):
        src = next((r for r in range(pivot_row, ell) if rows[r][col] != 0), None)
        if src is None:
            raise ArithmeticError("simple roots are linearly dependent")
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        for r in range(ell):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivots.append(pivot_row)
        pivot_row += 1
    if any(rows[r][-1] != 0 for r in range(pivot_row, ell)):
        return None
    coeffs = [rows[r][-1] for r in pivots]
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


def _reachable(target, members: frozenset, memo: dict) -> bool:
    """Whether target is a sum of one or more positive members."""
    if target in memo:
        return memo[target]
    result = False
    if target in members:
        result = True
    else:
        for beta in members:
            if all(x <= y for x, y in zip(beta, target)):
                rest = tuple(y - x for x, y in zip(beta, target))
                if any(rest) and _reachable(rest, members, memo):
                    result = True
                    break
    memo[target] = result
    return result


def simple_roots_of_subsystem(shape: QuiverShape, lam, window: int | None = None) -> SubsystemReport:
    """Simple roots of the integral subsystem of lam.

    Positive members are enumerated with delta-coefficient below
    ``window`` (default twice the period, enough to see decompositions
    straddling one period); the simple roots are the members that are
    not sums of two or more positive members.
    """
    values = _values(lam)
    if len(values) != shape.ell:
        raise ValueError(f"expected {shape.ell} coordinates, got {len(values)}")
    period = subsystem_period(values)
    kmax = 2 * period if window is None else window
    members = positive_members(values, kmax)
    if not members:
        return SubsystemReport(simple_roots=(), kind="empty", period=period, positivity_basis=True)
    member_set = frozenset(members)
    memo: dict = {}
    simples = []
    for beta in sorted(member_set):
        decomposable = False
        for gamma in member_set:
            if gamma != beta and all(x <= y for x, y in zip(gamma, beta)):
                rest = tuple(y - x for x, y in zip(gamma, beta))
                if any(rest) and _reachable(rest, member_set, memo):
                    decomposable = True
                    break
        if not decomposable:
            simples.append(beta)
    imaginary = tuple(period * x for x in delta(shape.ell))
    kind = "affine" if _solve_nonneg_combination(simples, imaginary) is not None else "finite"
    return SubsystemReport(
        simple_roots=tuple(simples),
        kind=kind,
        period=period,
        positivity_basis=all(all(x >= 0 for x in b) and any(b) for b in simples),
    )


def is_nonneg_combination_of(simples, target) -> bool:
    """Bounded check that target lies in the non-negative span of the
    simple roots; used by the completeness tests."""
    return _solve_nonneg_combination(list(simples), tuple(target)) is not None


def parse_root_vector(text: str) -> tuple[int, ...]:
    """Parse the comma-separated text form "b0,b1,...,b{ell-1}"."""
    parts = [p.strip().replace("−", "-") for p in text.split(",")]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed root vector {text!r}") from None


def format_root_vector(b) -> str:
    return ",".join(str(int(x)) for x in b)
