"""Measures on partitions with a Jack deformation parameter.

Implements the fixed-size family M^(n) built from generalized Pochhammer
symbols and hook products, the mixed family with negative-binomial size
randomization (parameter xi), the Plancherel family and its poissonization
(parameter eta), and the Frobenius-coordinate closed forms valid for the
deformation parameters 1/2 and 2.

Prefactors (1-xi)^t and e^(-eta) generally have non-integer exponents, so
measure values are carried as a symbolic prefactor tag plus an exact part
in the extension ring of the ensemble base (xi, respectively 2*eta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .exact import AlgebraicScalar, GaussianRational, as_fraction, quarter_power
from .partitions import Partition


class SingularParameterError(ValueError):
    """(t)_n vanished: the fixed-size measure is undefined for these parameters."""


@dataclass(frozen=True)
class JackParams:
    """Parameters (z, z', theta); t = z*z'/theta is always derived."""

    z: GaussianRational
    zprime: GaussianRational
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "z", GaussianRational.of(self.z))
        object.__setattr__(self, "zprime", GaussianRational.of(self.zprime))
        theta = as_fraction(self.theta)
        if theta <= 0:
            raise ValueError("theta must be positive")
        object.__setattr__(self, "theta", theta)

    @property
    def t(self) -> GaussianRational:
        return self.z * self.zprime / self.theta


class SeriesClass(Enum):
    PRINCIPAL = "principal"
    COMPLEMENTARY = "complementary"
    DEGENERATE = "degenerate"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class Prefactor:
    """Symbolic prefactor: base^exponent ("power") or e^exponent ("exp")."""

    kind: str  # "power" | "exp"
    base: Optional[Fraction]
    exponent: GaussianRational

    def to_complex(self) -> complex:
        e = self.exponent.to_complex()
        if self.kind == "exp":
            return complex(math.e) ** e
        return complex(float(self.base)) ** e

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "base": None if self.base is None else str(self.base),
            "exponent": str(self.exponent),
        }


@dataclass(frozen=True)
class TaggedValue:
    """A measure (or probability) value: prefactor tag times an exact part."""

    prefactor: Prefactor
    value: AlgebraicScalar

    def to_complex(self) -> complex:
        return self.prefactor.to_complex() * self.value.to_complex()

    def to_json_obj(self) -> dict:
        return {
            "prefactor": self.prefactor.to_json_obj(),
            "value": self.value.to_json_obj(),
        }


# ---------------------------------------------------------------------------
# Pochhammer-type products and hook products


def pochhammer(t: GaussianRational, n: int) -> GaussianRational:
    """Rising factorial t(t+1)...(t+n-1); empty product for n = 0."""
    t = GaussianRational.of(t)
    result = GaussianRational(1)
    for k in range(n):
        result = result * (t + k)
    return result


def bracket(a: GaussianRational, n: int) -> GaussianRational:
    """Step-two product: (a+1)(a+3)...(a+n-1) for n even, a(a+2)...(a+n-1) for n odd."""
    a = GaussianRational.of(a)
    result = GaussianRational(1)
    start = 1 if n % 2 == 0 else 0
    for k in range(start, n, 2):
        result = result * (a + k)
    return result


def gen_pochhammer(z: GaussianRational, lam: Partition, theta: Fraction) -> GaussianRational:
    """Box product of (z + (j-1) - (i-1)*theta) over the diagram."""
    z = GaussianRational.of(z)
    theta = as_fraction(theta)
    result = GaussianRational(1)
    for i, j in lam.boxes():
        result = result * (z + (j - 1) - (i - 1) * theta)
    return result


def gen_pochhammer_rows(z: GaussianRational, lam: Partition, theta: Fraction) -> GaussianRational:
    """Row-product form: prod_i (z - (i-1)*theta)_(lambda_i)."""
    z = GaussianRational.of(z)
    theta = as_fraction(theta)
    result = GaussianRational(1)
    for i, part in enumerate(lam.parts, start=1):
        result = result * pochhammer(z - (i - 1) * theta, part)
    return result


def hook_H(lam: Partition, theta: Fraction) -> Fraction:
    """Box product of (arm) + (leg)*theta + 1."""
    theta = as_fraction(theta)
    conj = lam.conjugate().parts
    result = Fraction(1)
    for i, j in lam.boxes():
        result *= (lam.parts[i - 1] - j) + (conj[j - 1] - i) * theta + 1
    return result


def hook_Hprime(lam: Partition, theta: Fraction) -> Fraction:
    """Box product of (arm) + (leg)*theta + theta."""
    theta = as_fraction(theta)
    conj = lam.conjugate().parts
    result = Fraction(1)
    for i, j in lam.boxes():
        result *= (lam.parts[i - 1] - j) + (conj[j - 1] - i) * theta + theta
    return result


def hook_H_gamma(lam: Partition, theta: Fraction) -> float:
    """Floating Gamma-quotient evaluation of the hook product H.

    Each row factor is divided by its empty-row value and each pair factor
    by its equal-rows value, so that H(empty diagram) = 1 holds; without
    this normalization the quotient drifts from the box product (checked
    against the exact form on small diagrams).
    """
    theta = float(theta)
    parts = lam.parts
    l = len(parts)
    log_total = 0.0
    for i in range(1, l + 1):
        log_total += math.lgamma(parts[i - 1] + (l - i) * theta + 1)
        log_total -= math.lgamma((l - i) * theta + 1)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            d = parts[i - 1] - parts[j - 1] + (j - i) * theta
            d0 = (j - i) * theta
            log_total += math.lgamma(d + 1 - theta) - math.lgamma(d + 1)
            log_total -= math.lgamma(d0 + 1 - theta) - math.lgamma(d0 + 1)
    return math.exp(log_total)


def hook_Hprime_gamma(lam: Partition, theta: Fraction) -> float:
    """Floating Gamma-quotient evaluation of the hook product H'."""
    theta = float(theta)
    parts = lam.parts
    l = len(parts)
    log_total = 0.0
    for i in range(1, l + 1):
        log_total += math.lgamma(parts[i - 1] - i * theta + l * theta + theta)
        log_total -= math.lgamma(theta)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            d = parts[i - 1] - parts[j - 1] + (j - i) * theta
            log_total += math.lgamma(d) - math.lgamma(d + theta)
    return math.exp(log_total)


# ---------------------------------------------------------------------------
# Measure families


def z_measure_n(lam: Partition, p: JackParams) -> GaussianRational:
    """Fixed-size measure value on a diagram with n boxes."""
    n = lam.size
    if n < 1:
        raise ValueError("fixed-size measure needs at least one box")
    tn = pochhammer(p.t, n)
    if tn.is_zero():
        raise SingularParameterError(f"(t)_{n} = 0 for t = {p.t}")
    num = gen_pochhammer(p.z, lam, p.theta) * gen_pochhammer(p.zprime, lam, p.theta)
    num = num * math.factorial(n)
    den = tn * hook_H(lam, p.theta) * hook_Hprime(lam, p.theta)
    return num / den


def mixed_z_measure(lam: Partition, p: JackParams, xi: Fraction) -> TaggedValue:
    """Mixed measure: (1-xi)^t * xi^|lam| * (z)(z')/(H H'), prefactor symbolic."""
    xi = as_fraction(xi)
    if not 0 < xi < 1:
        raise ValueError("xi must lie in (0, 1)")
    coeff = (
        gen_pochhammer(p.z, lam, p.theta)
        * gen_pochhammer(p.zprime, lam, p.theta)
        * xi**lam.size
        / (hook_H(lam, p.theta) * hook_Hprime(lam, p.theta))
    )
    return TaggedValue(
        Prefactor("power", 1 - xi, p.t),
        AlgebraicScalar.from_value(coeff, xi),
    )


def plancherel_n(lam: Partition, theta: Fraction) -> Fraction:
    """Plancherel measure on diagrams of fixed size: n! theta^n / (H H')."""
    theta = as_fraction(theta)
    n = lam.size
    return Fraction(math.factorial(n)) * theta**n / (hook_H(lam, theta) * hook_Hprime(lam, theta))


def poisson_plancherel(lam: Partition, theta: Fraction, eta: Fraction) -> TaggedValue:
    """Poissonized Plancherel measure, exact part in the base 2*eta."""
    theta = as_fraction(theta)
    eta = as_fraction(eta)
    if eta <= 0:
        raise ValueError("eta must be positive")
    n = lam.size
    coeff = (theta / 2) ** n / (hook_H(lam, theta) * hook_Hprime(lam, theta))
    value = quarter_power(2 * eta, 4 * n) * AlgebraicScalar.from_value(coeff, 2 * eta)
    return TaggedValue(Prefactor("exp", None, GaussianRational(-eta)), value)


def _frobenius_fraction(P, Q) -> Fraction:
    """prod_(i<j) (P_i-P_j)(Q_i-Q_j) / (prod_(i,j) (P_i+Q_j+1) prod_i P_i! Q_i!)."""
    d = len(P)
    num = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            num *= (P[i] - P[j]) * (Q[i] - Q[j])
    den = Fraction(1)
    for i in range(d):
        for j in range(d):
            den *= P[i] + Q[j] + 1
        den *= math.factorial(P[i]) * math.factorial(Q[i])
    return num / den


def frobenius_plancherel(lam: Partition, eta: Fraction, theta: Fraction) -> TaggedValue:
    """Frobenius-coordinate form of the poissonized Plancherel measure."""
    theta = as_fraction(theta)
    eta = as_fraction(eta)
    if theta == 2:
        coords = lam.double_union().frobenius()
    elif theta == Fraction(1, 2):
        coords = lam.conjugate().double_union().frobenius()
    else:
        raise ValueError("Frobenius form exists only for theta in {1/2, 2}")
    total = sum(coords.P) + sum(coords.Q) + coords.diagonal
    value = quarter_power(2 * eta, 2 * total) * AlgebraicScalar.from_value(
        _frobenius_fraction(coords.P, coords.Q), 2 * eta
    )
    return TaggedValue(Prefactor("exp", None, GaussianRational(-eta)), value)


def frobenius_z_measure(lam: Partition, p: JackParams, xi: Fraction) -> TaggedValue:
    """Frobenius-coordinate form of the mixed measure, theta in {1/2, 2}."""
    xi = as_fraction(xi)
    if p.theta == 2:
        coords = lam.double_union().frobenius()
        top = (p.z + 1, p.zprime + 1)
        bottom = (-p.z, -p.zprime)
    elif p.theta == Fraction(1, 2):
        coords = lam.conjugate().double_union().frobenius()
        top = (-2 * p.z + 1, -2 * p.zprime + 1)
        bottom = (2 * p.z, 2 * p.zprime)
    else:
        raise ValueError("Frobenius form exists only for theta in {1/2, 2}")
    P, Q = coords.P, coords.Q
    d = coords.diagonal
    coeff = GaussianRational(1)
    for i in range(d):
        for j in range(i + 1, d):
            coeff = coeff * ((P[i] - P[j]) * (Q[i] - Q[j]))
    for i in range(d):
        for j in range(d):
            coeff = coeff / (P[i] + Q[j] + 1)
        for a in top:
            coeff = coeff * bracket(a, P[i])
        for a in bottom:
            coeff = coeff * bracket(a, Q[i])
        coeff = coeff / (math.factorial(P[i]) * math.factorial(Q[i]))
    total = sum(P) + sum(Q) + d
    value = quarter_power(xi, 2 * total) * AlgebraicScalar.from_value(coeff, xi)
    return TaggedValue(Prefactor("power", 1 - xi, p.t), value)


def per_degree_mass(p: JackParams, xi: Fraction, n: int) -> Fraction:
    """Exact part of the total mixed-measure mass on diagrams of size n."""
    xi = as_fraction(xi)
    return pochhammer(p.t, n) * xi**n / math.factorial(n)


# ---------------------------------------------------------------------------
# Parameter-series classification


def classify_parameters(p: JackParams) -> SeriesClass:
    """Sort parameters into the positivity regimes; UNCLASSIFIED allows
    identity computations but carries no positivity guarantee."""
    z, zp, theta = p.z, p.zprime, p.theta

    # principal: z non-real, z' the conjugate, z off the lattice Z<=0 + Z>=0*theta
    if z.im != 0 and zp == z.conjugate():
        return SeriesClass.PRINCIPAL

    if z.im == 0 and zp.im == 0:
        zr, zpr = z.re, zp.re
        # complementary: both in one open interval between consecutive
        # points of Z + Z*theta = (1/q)Z for theta = p/q in lowest terms
        q = theta.denominator
        den = Fraction(1, q)
        if zr % den != 0 and zpr % den != 0 and (zr // den) == (zpr // den):
            return SeriesClass.COMPLEMENTARY
        # degenerate clause 1: z = m*theta with z' > (m-1)*theta (or swapped)
        for u, v in ((zr, zpr), (zpr, zr)):
            if u % theta == 0:
                m = u / theta
                if m.denominator == 1 and m >= 1 and v > (m - 1) * theta:
                    return SeriesClass.DEGENERATE
        # degenerate clause 2 (symmetric reading): z = -m with z' < -m + 1
        for u, v in ((zr, zpr), (zpr, zr)):
            if u.denominator == 1 and u <= -1 and v < u + 1:
                return SeriesClass.DEGENERATE
    return SeriesClass.UNCLASSIFIED
