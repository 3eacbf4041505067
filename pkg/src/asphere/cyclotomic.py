"""Exact arithmetic in cyclotomic fields.

Elements of the field Q(zeta_ell) are stored in the power basis
1, zeta, ..., zeta^(phi(ell)-1), reduced modulo the ell-th cyclotomic
polynomial.  Reduction modulo the cyclotomic polynomial (rather than
x^ell - 1) makes the representation canonical, so equality is a plain
coefficient comparison and division is available.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

__all__ = ["Cyclotomic", "cyclotomic_polynomial"]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError("order must be positive")
    # x^n - 1 divided by the product of Phi_d over proper divisors d.
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not any(rem), "cyclotomic division must be exact"
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder in Q[x]; b must be nonzero."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        coeff = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = coeff
        for i, bc in enumerate(b):
            a[shift + i] -= coeff * bc
        _poly_trim(a)
    return quot, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                out[i + j] += ac * bc
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


class Cyclotomic:
    """An element of Q(zeta_ell) in canonical power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        degree = len(cyclotomic_polynomial(order)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > degree:
            coeffs = self._reduce(order, coeffs)
        coeffs.extend([Fraction(0)] * (degree - len(coeffs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @staticmethod
    def _reduce(order: int, coeffs: list[Fraction]) -> list[Fraction]:
        modulus = [Fraction(c) for c in cyclotomic_polynomial(order)]
        _, rem = _poly_divmod(coeffs, modulus)
        return rem

    @classmethod
    def from_rational(cls, order: int, value) -> "Cyclotomic":
        return cls(order, [Fraction(value)])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        """zeta_order ** power, for any integer power."""
        power %= order
        coeffs = [Fraction(0)] * power + [Fraction(1)]
        return cls(order, coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_order(self, other: "Cyclotomic") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            self._check_order(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product = _poly_mul(list(self.coeffs), list(other.coeffs))
        return Cyclotomic(self.order, product)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero:
            raise ZeroDivisionError("cyclotomic division by zero")
        # Extended Euclid against the (irreducible) cyclotomic polynomial.
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = modulus, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        assert r1, "cyclotomic polynomial is irreducible"
        inv = [c / r1[0] for c in s1]
        return Cyclotomic(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.order, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic(order={self.order}, coeffs={list(self.coeffs)})"

    def to_rational(self) -> Fraction | None:
        """The rational value, or None if the element is irrational.

        Rational elements are exactly the constant polynomials in the
        power basis, so this never involves approximation.
        """
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def evaluate(self) -> complex:
        """Double-precision value at zeta = exp(2*pi*i/order); tests only."""
        zeta = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * zeta**k for k, c in enumerate(self.coeffs))
