"""Coordinate systems for a Cherednik parameter of G(ell,1,n).

Three equivalent descriptions are supported: the reflection-class form
(kappa, c_1, ..., c_{ell-1}), the quiver form lambda = (lambda_0, ...,
lambda_{ell-1}), and the hyperplane coordinates h_{H,i}.  Conversions
run in the ell-th cyclotomic field and are exact; results that leave the
rational subfield are returned with an explicit flag instead of being
approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .roots import delta, pairing

__all__ = [
    "CherednikParam",
    "LambdaParam",
    "HyperplaneClass",
    "HCoordinates",
    "LambdaConversion",
    "CherednikConversion",
    "cherednik_to_lambda",
    "lambda_to_cherednik",
    "h_coordinates",
    "lattice_shift",
    "kappa_of_lambda",
]


@dataclass(frozen=True)
class CherednikParam:
    """Reflection-class coordinates: kappa for the symmetric-group class,
    c_j for the cyclic classes j = 1..ell-1."""

    ell: int
    kappa: Fraction
    c: tuple[Fraction, ...]

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be positive")
        if len(self.c) != self.ell - 1:
            raise ValueError(f"expected {self.ell - 1} cyclic parameters, got {len(self.c)}")
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))


@dataclass(frozen=True)
class LambdaParam:
    """Quiver coordinates lambda_0, ..., lambda_{ell-1}."""

    ell: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError("ell must be at least 2")
        if len(self.values) != self.ell:
            raise ValueError(f"expected {self.ell} coordinates, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))


@dataclass(frozen=True)
class HyperplaneClass:
    """h-coordinates of one reflection-hyperplane class; the values sum
    to zero."""

    name: str  # "symmetric" | "coordinate"
    size: int  # order of the pointwise stabilizer
    values: tuple[Cyclotomic, ...]


@dataclass(frozen=True)
class HCoordinates:
    classes: tuple[HyperplaneClass, ...]


@dataclass(frozen=True)
class LambdaConversion:
    """Result of converting (kappa, c) to lambda; ``rational`` is None
    when some coordinate leaves the rational subfield."""

    ell: int
    cyclotomic: tuple[Cyclotomic, ...]
    rational: LambdaParam | None

    @property
    def is_rational(self) -> bool:
        return self.rational is not None


@dataclass(frozen=True)
class CherednikConversion:
    """Result of converting lambda to (kappa, c); kappa is always
    rational, ``rational`` is None when some c_j is irrational."""

    ell: int
    kappa: Fraction
    c_cyclotomic: tuple[Cyclotomic, ...]
    rational: CherednikParam | None

    @property
    def is_rational(self) -> bool:
        return self.rational is not None


def cherednik_to_lambda(p: CherednikParam, as_printed: bool = False) -> LambdaConversion:
    """Exact quiver coordinates of a reflection-class parameter.

    The default convention uses the k-dependent root of unity
    zeta^(j*k) in coordinate k, which makes the map a bijection and
    gives sum(lambda) = kappa + 1/2.  ``as_printed`` switches to the
    k-independent exponent zeta^j in every coordinate k != 0.
    """
    ell = p.ell
    if ell < 2:
        raise ValueError("ell must be at least 2")
    mu = []
    for k in range(ell):
        acc = Cyclotomic.from_rational(ell, 1)
        for j, cj in enumerate(p.c, start=1):
            power = j if as_printed and k != 0 else j * k
            acc = acc + 2 * cj * Cyclotomic.zeta(ell, power)
        mu.append(acc / ell)
    values = [mu[0] + (p.kappa - Fraction(1, 2))] + mu[1:]
    rationals = [v.to_rational() for v in values]
    rational = None
    if all(r is not None for r in rationals):
        rational = LambdaParam(ell, tuple(rationals))
    return LambdaConversion(ell=ell, cyclotomic=tuple(values), rational=rational)


def lambda_to_cherednik(lam: LambdaParam) -> CherednikConversion:
    """Exact inverse of cherednik_to_lambda (default convention).

    kappa = sum(lambda) - 1/2 is always rational; the c_j come out of
    the inverse discrete Fourier transform over the cyclotomic field and
    are reported with a flag when they are not rational.
    """
    ell = lam.ell
    kappa = sum(lam.values, Fraction(-1, 2))
    mu = [Cyclotomic.from_rational(ell, v) for v in lam.values]
    mu[0] = mu[0] - (kappa - Fraction(1, 2))
    cs = []
    for j in range(1, ell):
        acc = Cyclotomic.from_rational(ell, 0)
        for k in range(ell):
            acc = acc + mu[k] * Cyclotomic.zeta(ell, -j * k)
        cs.append(acc / 2)
    c_rat = [c.to_rational() for c in cs]
    rational = None
    if all(r is not None for r in c_rat):
        rational = CherednikParam(ell, kappa, tuple(c_rat))
        roundtrip = cherednik_to_lambda(rational)
        assert roundtrip.rational == lam, "conversion roundtrip failed"
    return CherednikConversion(ell=ell, kappa=kappa, c_cyclotomic=tuple(cs), rational=rational)


def h_coordinates(p: CherednikParam, n: int = 2) -> HCoordinates:
    """Hyperplane coordinates h_{H,i} of a reflection-class parameter.

    For n >= 2 there is a symmetric-group class (stabilizer of order 2,
    eigenvalue -1, parameter kappa); for ell >= 2 a coordinate class
    (stabilizer of order ell, eigenvalues zeta^j, parameters c_j).
    """
    classes = []
    if n >= 2:
        order = max(p.ell, 1)
        # Single reflection with eigenvalue -1 and parameter kappa:
        # h_i = (1/2) * (2*kappa / (-1 - 1)) * (-1)^(-i) = -(kappa/2) * (-1)^i.
        vals = (
            Cyclotomic.from_rational(order, -p.kappa / 2),
            Cyclotomic.from_rational(order, p.kappa / 2),
        )
        classes.append(HyperplaneClass(name="symmetric", size=2, values=vals))
    if p.ell >= 2:
        ell = p.ell
        vals = []
        for i in range(ell):
            acc = Cyclotomic.from_rational(ell, 0)
            for j, cj in enumerate(p.c, start=1):
                lam_s = Cyclotomic.zeta(ell, j)
                acc = acc + (2 * cj) / (lam_s - 1) * Cyclotomic.zeta(ell, -i * j)
            vals.append(acc / ell)
        classes.append(HyperplaneClass(name="coordinate", size=ell, values=tuple(vals)))
    return HCoordinates(classes=tuple(classes))


def lattice_shift(lam: LambdaParam, m) -> LambdaParam:
    """Entrywise lambda + m for an integer vector m."""
    m = tuple(int(x) for x in m)
    if len(m) != lam.ell:
        raise ValueError(f"expected shift of length {lam.ell}, got {len(m)}")
    return LambdaParam(lam.ell, tuple(v + x for v, x in zip(lam.values, m)))


def kappa_of_lambda(lam: LambdaParam) -> Fraction:
    """<lambda, delta> - 1/2; agrees with the kappa of lambda_to_cherednik."""
    return pairing(lam, delta(lam.ell)) - Fraction(1, 2)
