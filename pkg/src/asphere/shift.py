"""Constructive integral shifts into the certified locus.

Every rational quiver parameter admits an integer shift whose
certificate comes back positive.  The solver targets the box
0 <= <lambda' , beta_i> + b_0(beta_i)/2 <= b_0(beta_i) over the simple
roots beta_i of the integral subsystem (which integer shifts preserve),
picks the lexicographically smallest reachable target, and recovers a
shift by exact Diophantine solving.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .certify import Certificate, certify
from .diophantine import (
    SearchBudgetExceeded,
    column_hnf,
    kernel_basis,
    lex_smallest_coset_point,
    min_maxnorm_in_coset,
    solve_integer_system,
)
from .params import LambdaParam, kappa_of_lambda, lattice_shift
from .roots import membership_value

__all__ = ["ShiftResult", "GuaranteeViolation", "find_aspherical_shift"]


class GuaranteeViolation(RuntimeError):
    """Internal error: the shift search failed even though a certified
    shift is guaranteed to exist.  Indicates an implementation bug."""


@dataclass(frozen=True)
class ShiftResult:
    lambda_prime: LambdaParam
    m: tuple[int, ...]
    certificate: Certificate
    targets: tuple[int, ...]


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise GuaranteeViolation(f"expected an integer membership value, got {q}")
    return q.numerator


def find_aspherical_shift(lam: LambdaParam, n: int, window: int | None = None) -> ShiftResult:
    """Integer vector m with certify(lam + m, n) certified.

    Returns m = 0 when lam is already certified.  Raises
    GuaranteeViolation if no shift is found; that outcome is impossible
    for a correct implementation and must never be silenced.
    """
    cert = certify(lam, n, window=window)
    if cert.verdict == "certified":
        targets = tuple(
            _as_int(membership_value(lam, beta)) for beta in cert.subsystem.simple_roots
        )
        return ShiftResult(lambda_prime=lam, m=(0,) * lam.ell, certificate=cert, targets=targets)

    if cert.subsystem.kind == "empty":
        # Only the kappa condition can fail; translate kappa into
        # [-1, 0) by adjusting the coordinate at the extending vertex.
        kappa = kappa_of_lambda(lam)
        shift0 = -(floor(kappa) + 1)
        m = (shift0,) + (0,) * (lam.ell - 1)
        lam_prime = lattice_shift(lam, m)
        cert_prime = certify(lam_prime, n, window=window)
        if cert_prime.verdict != "certified":
            raise GuaranteeViolation("kappa translation failed to certify an empty subsystem")
        return ShiftResult(lambda_prime=lam_prime, m=m, certificate=cert_prime, targets=())

    simples = list(cert.subsystem.simple_roots)
    matrix = [list(beta) for beta in simples]
    t_cur = [_as_int(membership_value(lam, beta)) for beta in simples]
    hi = [beta[0] for beta in simples]
    try:
        target = lex_smallest_coset_point(t_cur, column_hnf(matrix), hi)
    except SearchBudgetExceeded as exc:
        raise GuaranteeViolation(str(exc)) from exc
    if target is None:
        raise GuaranteeViolation("no reachable target in the simple-root box")
    rhs = [t - c for t, c in zip(target, t_cur)]
    m0 = solve_integer_system(matrix, rhs)
    if m0 is None:
        raise GuaranteeViolation("reachable target was not solvable")
    coeff_bound = cert.subsystem.period * lam.ell
    m = min_maxnorm_in_coset(m0, kernel_basis(matrix), coeff_bound)
    lam_prime = lattice_shift(lam, m)
    cert_prime = certify(lam_prime, n, window=window)
    if cert_prime.verdict != "certified":
        raise GuaranteeViolation("shifted parameter failed certification")
    return ShiftResult(
        lambda_prime=lam_prime,
        m=tuple(m),
        certificate=cert_prime,
        targets=tuple(target),
    )
