"""Decision procedures for total asphericity.

The symmetric-group criterion is a closed-form test on a single rational
parameter.  For G(ell,1,n) with ell >= 2 the certifier checks two
conditions on the quiver coordinates: a bound on the pairing against
every simple root of the integral subsystem, and an arithmetic condition
on kappa = <lambda, delta> - 1/2.  A positive verdict is a guarantee;
a negative verdict only means this sufficient condition failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .params import LambdaParam, kappa_of_lambda
from .rationals import denominator
from .roots import (
    QuiverShape,
    SubsystemReport,
    pairing,
    positive_members,
    simple_roots_of_subsystem,
    subsystem_period,
)

__all__ = [
    "CheckedRoot",
    "Condition1",
    "Condition2",
    "Certificate",
    "SliceDescriptor",
    "is_totally_aspherical_type_A",
    "certify",
    "parabolic_slices",
    "condition1_bruteforce",
]

REASON_INTERVAL = "in_open_interval"
REASON_INTEGER = "integer"
REASON_DENOMINATOR = "denominator_exceeds_n"
TYPEA_REASON_INTERVAL = "in_open_interval"
TYPEA_REASON_DENOMINATOR = "denominator_not_in_range"


@dataclass(frozen=True)
class CheckedRoot:
    root: tuple[int, ...]
    pairing: Fraction
    bound: Fraction


@dataclass(frozen=True)
class Condition1:
    holds: bool
    checked_simple_roots: tuple[CheckedRoot, ...]
    violator: tuple[int, ...] | None


@dataclass(frozen=True)
class Condition2:
    kappa: Fraction
    holds: bool
    reason: str | None


@dataclass(frozen=True)
class SliceDescriptor:
    """Parabolic slice G(ell,1,n0) x S_{n1} x ... x S_{nk}."""

    n0: int
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Certificate:
    verdict: str  # "certified" | "not_certified"
    condition1: Condition1
    condition2: Condition2
    subsystem: SubsystemReport
    parabolic_slices: tuple[SliceDescriptor, ...]


def is_totally_aspherical_type_A(c: Fraction, n: int) -> tuple[bool, str | None]:
    """Total asphericity for the symmetric group S_n.

    True when no parabolic S_m (2 <= m <= n) admits a finite-dimensional
    module surviving the averaging idempotent: either the denominator of
    c falls outside {2, ..., n}, or c lies in the open interval (-1, 0).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    c = Fraction(c)
    if not 2 <= denominator(c) <= n:
        return True, TYPEA_REASON_DENOMINATOR
    if Fraction(-1) < c < Fraction(0):
        return True, TYPEA_REASON_INTERVAL
    return False, None


def _condition2(kappa: Fraction, n: int) -> Condition2:
    if Fraction(-1) < kappa < Fraction(0):
        return Condition2(kappa=kappa, holds=True, reason=REASON_INTERVAL)
    if kappa.denominator == 1:
        return Condition2(kappa=kappa, holds=True, reason=REASON_INTEGER)
    if denominator(kappa) > n:
        return Condition2(kappa=kappa, holds=True, reason=REASON_DENOMINATOR)
    return Condition2(kappa=kappa, holds=False, reason=None)


def _condition1(lam: LambdaParam, report: SubsystemReport) -> Condition1:
    checked = []
    worst = None
    worst_excess = Fraction(0)
    for beta in report.simple_roots:
        value = pairing(lam, beta)
        bound = Fraction(beta[0], 2)
        checked.append(CheckedRoot(root=beta, pairing=value, bound=bound))
        excess = abs(value) - bound
        if excess > 0 and (worst is None or excess > worst_excess):
            worst = beta
            worst_excess = excess
    return Condition1(holds=worst is None, checked_simple_roots=tuple(checked), violator=worst)


def certify(lam: LambdaParam, n: int, window: int | None = None) -> Certificate:
    """Certificate for the quiver parameter lam of G(ell,1,n).

    "certified" guarantees total asphericity of the corresponding
    Cherednik parameter; "not_certified" only reports failure of this
    sufficient condition.
    """
    if lam.ell < 2:
        raise ValueError("ell must be at least 2; use is_totally_aspherical_type_A for ell = 1")
    if n < 1:
        raise ValueError("n must be at least 1")
    shape = QuiverShape(lam.ell, n)
    report = simple_roots_of_subsystem(shape, lam, window=window)
    cond1 = _condition1(lam, report)
    cond2 = _condition2(kappa_of_lambda(lam), n)
    verdict = "certified" if cond1.holds and cond2.holds else "not_certified"
    return Certificate(
        verdict=verdict,
        condition1=cond1,
        condition2=cond2,
        subsystem=report,
        parabolic_slices=parabolic_slices(lam.ell, n),
    )


def _partitions_min2(budget: int):
    """Multisets of integers >= 2 with sum <= budget, as sorted tuples."""

    def rec(remaining: int, smallest: int):
        yield ()
        for part in range(smallest, remaining + 1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    return sorted({tuple(sorted(p)) for p in rec(budget, 2)})


def parabolic_slices(ell: int, n: int) -> tuple[SliceDescriptor, ...]:
    """All parabolic slices G(ell,1,n0) x prod S_{ni} with n0 + sum ni <= n.

    For ell = 1 the wreath factor is itself a symmetric group, so slices
    are rendered as symmetric-group products only.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    slices = set()
    if ell == 1:
        for parts in _partitions_min2(n):
            slices.add(SliceDescriptor(n0=0, parts=parts))
    else:
        for n0 in range(n + 1):
            for parts in _partitions_min2(n - n0):
                slices.add(SliceDescriptor(n0=n0, parts=parts))
    return tuple(sorted(slices, key=lambda s: (-s.n0, s.parts)))


def condition1_bruteforce(lam: LambdaParam, window_mult: int = 4) -> tuple[bool, tuple[int, ...] | None]:
    """Independent check of the pairing bound over explicit members.

    Enumerates every member of the integral subsystem with
    delta-coefficient up to window_mult times the period, their
    negatives, and (when the subsystem is affine) small multiples of the
    subsystem's imaginary root, and tests |<lambda, beta>| <= |b_0|/2
    directly on each.
    """
    ell = lam.ell
    period = subsystem_period(lam)
    members = positive_members(lam, window_mult * period + 1)
    candidates = list(members) + [tuple(-x for x in b) for b in members]
    if members:
        # The subsystem repeats along delta, so it contains multiples of
        # period * delta; include them explicitly.
        for j in range(1, window_mult + 1):
            candidates.append(tuple(j * period for _ in range(ell)))
    for beta in candidates:
        if abs(pairing(lam, beta)) > Fraction(abs(beta[0]), 2):
            return False, beta
    return True, None
