"""The Pfaffian L-ensemble machinery on the half-integer lattice.

The L-matrix is a skew-symmetric 2x2-block matrix indexed by two copies
(x', x'') of each lattice point. Its blocks couple the negative ray to
itself (an epsilon kernel), to the point 1/2, and to the rest of the
positive ray through a weight function h; all blocks among nonnegative
points vanish. Probabilities are Pfaffians of finite submatrices divided
by a closed-form normalizer carried as a symbolic prefactor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exact import AlgebraicScalar, GaussianRational, as_fraction, quarter_power
from .lattice import (
    HalfInt,
    SplitConfig,
    cross_product,
    double,
    embed_theta2,
    embed_theta_half,
    is_confL,
    vandermonde,
)
from .measures import Prefactor, TaggedValue
from .measures import bracket
from .partitions import partitions_up_to

PRIME = "p"
DOUBLEPRIME = "pp"

# Laplace expansion has (n-1)!! terms; above this dimension use
# skew-symmetric elimination with exact division.
EXPANSION_MAX_DIM = 6


class HKind(Enum):
    Z_THETA2 = "z_theta2"
    Z_HALF = "z_half"
    PLANCHEREL = "plancherel"


@dataclass(frozen=True)
class HSpec:
    """Which weight function is in force, plus its parameters.

    The extension base is xi for the z-measure kinds and 2*eta for
    Plancherel; every h-value and Pfaffian entry lives in that ring.
    """

    kind: HKind
    z: Optional[GaussianRational] = None
    zprime: Optional[GaussianRational] = None
    xi: Optional[Fraction] = None
    eta: Optional[Fraction] = None

    @staticmethod
    def z_theta2(z, zprime, xi) -> "HSpec":
        xi = as_fraction(xi)
        if not 0 < xi < 1:
            raise ValueError("xi must lie in (0, 1)")
        return HSpec(HKind.Z_THETA2, GaussianRational.of(z), GaussianRational.of(zprime), xi)

    @staticmethod
    def z_half(z, zprime, xi) -> "HSpec":
        xi = as_fraction(xi)
        if not 0 < xi < 1:
            raise ValueError("xi must lie in (0, 1)")
        return HSpec(HKind.Z_HALF, GaussianRational.of(z), GaussianRational.of(zprime), xi)

    @staticmethod
    def plancherel(eta) -> "HSpec":
        eta = as_fraction(eta)
        if eta <= 0:
            raise ValueError("eta must be positive")
        return HSpec(HKind.PLANCHEREL, eta=eta)

    @property
    def base(self) -> Fraction:
        if self.kind is HKind.PLANCHEREL:
            return 2 * self.eta
        return self.xi

    def normalizer_prefactor(self) -> Prefactor:
        """The prefactor 1/Pf(J+L) carried symbolically by probabilities."""
        if self.kind is HKind.PLANCHEREL:
            return Prefactor("exp", None, GaussianRational(-self.eta))
        if self.kind is HKind.Z_THETA2:
            return Prefactor("power", 1 - self.xi, self.z * self.zprime / 2)
        return Prefactor("power", 1 - self.xi, 2 * self.z * self.zprime)

    def embed(self, lam) -> SplitConfig:
        if self.kind is HKind.Z_HALF:
            return embed_theta_half(lam)
        return embed_theta2(lam)


@lru_cache(maxsize=None)
def h_eval(spec: HSpec, x: HalfInt) -> AlgebraicScalar:
    """The weight h(x): a bracket-product (or reciprocal-factorial)
    coefficient times a quarter power of the ensemble base."""
    n = (abs(x.twice) - 1) // 2
    if spec.kind is HKind.PLANCHEREL:
        coeff = GaussianRational(Fraction(1, math.factorial(n)))
        power = quarter_power(spec.base, abs(x.twice))
    else:
        if spec.kind is HKind.Z_THETA2:
            a, b = ((spec.z + 1, spec.zprime + 1) if x.twice > 0
                    else (-spec.z, -spec.zprime))
        else:
            a, b = ((-2 * spec.z + 1, -2 * spec.zprime + 1) if x.twice > 0
                    else (2 * spec.z, 2 * spec.zprime))
        coeff = bracket(a, n) * bracket(b, n) / math.factorial(n)
        power = quarter_power(spec.xi, abs(x.twice))
    return power * AlgebraicScalar.from_value(coeff, spec.base)


def epsilon(x: HalfInt, y: HalfInt) -> int:
    """Antisymmetric kernel: 1 when x < y with x odd and y even, else 0."""
    if x == y:
        return 0
    if x > y:
        return -epsilon(y, x)
    return 1 if (not x.is_even()) and y.is_even() else 0


def _region(x: HalfInt) -> int:
    # 0: negative ray, 1: the point 1/2, 2: the rest of the positive ray
    if x.twice < 0:
        return 0
    return 1 if x.twice == 1 else 2


def l_entry(spec: HSpec, a, b) -> AlgebraicScalar:
    """Entry of the L-matrix for labeled points a = (x, copy), b = (y, copy)."""
    x, cx = a
    y, cy = b
    rx, ry = _region(x), _region(y)
    zero = AlgebraicScalar.zero(spec.base)
    if rx > 0 and ry > 0:
        return zero
    if rx > 0:
        return -l_entry(spec, b, a)
    if ry == 0:
        # both on the negative ray: epsilon in the (x', y') slot only
        if cx == PRIME and cy == PRIME:
            return AlgebraicScalar.from_value(epsilon(x, y), spec.base)
        return zero
    if ry == 1:
        if cx == PRIME and cy == PRIME:
            return AlgebraicScalar.from_value(epsilon(x, y), spec.base)
        if cx == DOUBLEPRIME and cy == DOUBLEPRIME:
            return h_eval(spec, x) * h_eval(spec, y) / (x - y)
        return zero
    # x negative, y >= 3/2
    if cx == DOUBLEPRIME and cy == PRIME:
        return h_eval(spec, x) * h_eval(spec, y) / (x - y)
    if cx == DOUBLEPRIME and cy == DOUBLEPRIME:
        return h_eval(spec, x) * h_eval(spec, y - 1) / ((x - y) + 1)
    return zero


class SkewMatrix:
    """Dense skew-symmetric matrix over one extension ring, with labels."""

    def __init__(self, labels, base: Fraction, upper_fn):
        self.labels = list(labels)
        self.base = base
        n = len(self.labels)
        zero = AlgebraicScalar.zero(base)
        rows = [[zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = upper_fn(i, j)
                rows[i][j] = v
                rows[j][i] = -v
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def l_submatrix(spec: HSpec, points) -> SkewMatrix:
    """L(X|X) for the given points, labels ordered (x1', x1'', x2', ...)."""
    if isinstance(points, SplitConfig):
        points = points.points
    pts = sorted(points)
    labels = []
    for x in pts:
        labels.append((x, PRIME))
        labels.append((x, DOUBLEPRIME))
    return SkewMatrix(
        labels, spec.base, lambda i, j: l_entry(spec, labels[i], labels[j])
    )


# ---------------------------------------------------------------------------
# Exact Pfaffians


def pfaffian_expansion(rows, base: Fraction) -> AlgebraicScalar:
    """Laplace-type expansion along the first row (exponential cost)."""
    n = len(rows)
    if n % 2 != 0:
        raise ValueError("Pfaffian requires even dimension")
    if n == 0:
        return AlgebraicScalar.one(base)
    total = AlgebraicScalar.zero(base)
    for j in range(1, n):
        a = rows[0][j]
        if a.is_zero():
            continue
        keep = [k for k in range(1, n) if k != j]
        minor = [[rows[r][c] for c in keep] for r in keep]
        term = a * pfaffian_expansion(minor, base)
        total = total + term if j % 2 == 1 else total - term
    return total


def pfaffian_elimination(rows, base: Fraction) -> AlgebraicScalar:
    """Skew-symmetric elimination with exact division (O(n^3) ring ops)."""
    n = len(rows)
    if n % 2 != 0:
        raise ValueError("Pfaffian requires even dimension")
    m = [list(r) for r in rows]
    pf = AlgebraicScalar.one(base)
    for k in range(0, n, 2):
        piv = next((j for j in range(k + 1, n) if not m[k][j].is_zero()), None)
        if piv is None:
            return AlgebraicScalar.zero(base)
        if piv != k + 1:
            m[piv], m[k + 1] = m[k + 1], m[piv]
            for row in m:
                row[piv], row[k + 1] = row[k + 1], row[piv]
            pf = -pf
        b = m[k][k + 1]
        pf = pf * b
        inv_b = b.inv()
        for i in range(k + 2, n):
            for j in range(i + 1, n):
                upd = (m[k][i] * m[k + 1][j] - m[k + 1][i] * m[k][j]) * inv_b
                m[i][j] = m[i][j] - upd
                m[j][i] = -m[i][j]
    return pf


def pfaffian(matrix: SkewMatrix) -> AlgebraicScalar:
    if matrix.dim <= EXPANSION_MAX_DIM:
        return pfaffian_expansion(matrix.rows, matrix.base)
    return pfaffian_elimination(matrix.rows, matrix.base)


# ---------------------------------------------------------------------------
# Closed form, probabilities, partial sums


def pf_closed_form(spec: HSpec, config: SplitConfig) -> AlgebraicScalar:
    """Product formula for Pf L(X|X): V(X~_-) V(X~_+) / prod(X~_+; X~_-)
    times the weight product over the doubled configuration; zero off Conf^L."""
    if not is_confL(config):
        return AlgebraicScalar.zero(spec.base)
    doubled = double(config)
    rational = (
        vandermonde(doubled.minus)
        * vandermonde(doubled.plus)
        / cross_product(doubled.plus, doubled.minus)
    )
    result = AlgebraicScalar.from_value(rational, spec.base)
    for x in doubled.minus + doubled.plus:
        result = result * h_eval(spec, x)
    return result


def prob_L(spec: HSpec, config: SplitConfig) -> TaggedValue:
    """Pf L(X|X) times the symbolic normalizer 1/Pf(J+L)."""
    return TaggedValue(
        spec.normalizer_prefactor(), pfaffian(l_submatrix(spec, config))
    )


def pf_J_plus_L_partial(spec: HSpec, max_size: int) -> AlgebraicScalar:
    """Partial sum of the Pf(J+L) expansion over the embedding image of
    diagrams with at most max_size boxes; exhaustive per degree because
    the Pfaffian vanishes off the image."""
    if max_size > 14:
        raise ValueError("partial-sum size capped at 14")
    total = AlgebraicScalar.zero(spec.base)
    for lam in partitions_up_to(max_size):
        total = total + pfaffian(l_submatrix(spec, spec.embed(lam)))
    return total
