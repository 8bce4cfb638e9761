"""Exact scalar arithmetic over the rationals extended by a real fourth root.

Every quantity attached to one ensemble (weight values, Pfaffian entries,
measure values) lives in the ring Q(i)[s]/(s^4 - c) for a single positive
rational base c (xi for the z-measure ensembles, 2*eta for Plancherel).
When c happens to be a perfect square or a perfect fourth power the
extension collapses and elements are reduced to the smaller field, so the
ring is always a field and exact division is available.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class BaseMismatchError(ValueError):
    """Raised when combining scalars over different extension bases."""


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational")


def exact_sqrt(f: Fraction):
    """Rational square root of f, or None if f is not a perfect square."""
    if f < 0:
        return None
    pn = math.isqrt(f.numerator)
    pd = math.isqrt(f.denominator)
    if pn * pn == f.numerator and pd * pd == f.denominator:
        return Fraction(pn, pd)
    return None


_GAUSS_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?P<im>[+-]\s*\d+(?:/\d+)?\s*i|[+-]?\s*\d+(?:/\d+)?\s*i)?\s*$"
)


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @staticmethod
    def of(v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, complex):
            raise TypeError("floating complex values are not exact")
        return GaussianRational(as_fraction(v))

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse strings like "4", "-1/3", "1+1i", "1/2-3/4i"."""
        m = _GAUSS_RE.match(text)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"cannot parse Gaussian rational {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_part = Fraction(0)
        if m.group("im"):
            s = m.group("im").replace(" ", "").rstrip("i")
            if s in ("", "+"):
                s = "1"
            elif s == "-":
                s = "-1"
            im_part = Fraction(s)
        return GaussianRational(re_part, im_part)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    # -- field arithmetic ------------------------------------------------

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        o = GaussianRational.of(other)
        if self.im == 0 and o.im == 0:
            return GaussianRational(self.re * o.re)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.of(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __eq__(self, other):
        try:
            o = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)


@lru_cache(maxsize=None)
def _base_profile(base: Fraction):
    """Degree of Q(c^(1/4)) over Q and the collapse data for the base.

    Returns (deg, fold) where fold is the rational value of s (deg 1)
    or of s^2 (deg 2), and None for deg 4.
    """
    r = exact_sqrt(base)
    if r is None:
        return 4, None
    r4 = exact_sqrt(r)
    if r4 is not None:
        return 1, r4
    return 2, r


def _reduce_coeffs(coeffs, base: Fraction):
    deg, fold = _base_profile(base)
    a0, a1, a2, a3 = coeffs
    if deg == 1:
        # s = fold
        a0 = a0 + a1 * fold + a2 * fold * fold + a3 * fold * fold * fold
        return (a0, GR_ZERO, GR_ZERO, GR_ZERO)
    if deg == 2:
        # s^2 = fold
        return (a0 + a2 * fold, a1 + a3 * fold, GR_ZERO, GR_ZERO)
    return (a0, a1, a2, a3)


@dataclass(frozen=True)
class AlgebraicScalar:
    """Element a0 + a1*s + a2*s^2 + a3*s^3 of Q(i)[s]/(s^4 - base).

    The generator s stands for the real positive fourth root of the base.
    Values are immutable and reduced on construction; equality is exact
    coefficient-wise comparison.
    """

    coeffs: tuple
    base: Fraction

    def __post_init__(self):
        base = as_fraction(self.base)
        if base <= 0:
            raise ValueError("extension base must be a positive rational")
        coeffs = tuple(GaussianRational.of(c) for c in self.coeffs)
        if len(coeffs) != 4:
            raise ValueError("expected exactly 4 coefficients")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coeffs", _reduce_coeffs(coeffs, base))

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_value(v, base) -> "AlgebraicScalar":
        """Constant element (no s component) from a rational or Gaussian rational."""
        return AlgebraicScalar((GaussianRational.of(v), GR_ZERO, GR_ZERO, GR_ZERO), base)

    @staticmethod
    def zero(base) -> "AlgebraicScalar":
        return AlgebraicScalar.from_value(0, base)

    @staticmethod
    def one(base) -> "AlgebraicScalar":
        return AlgebraicScalar.from_value(1, base)

    # -- ring/field arithmetic --------------------------------------------

    def _coerce(self, other) -> "AlgebraicScalar":
        if isinstance(other, AlgebraicScalar):
            if other.base != self.base:
                raise BaseMismatchError(
                    f"bases differ: {self.base} vs {other.base}"
                )
            return other
        return AlgebraicScalar.from_value(other, self.base)

    def __add__(self, other):
        o = self._coerce(other)
        return AlgebraicScalar(
            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.base
        )

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(tuple(-a for a in self.coeffs), self.base)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        raw = [GR_ZERO] * 7
        for i in range(4):
            if a[i].is_zero():
                continue
            for j in range(4):
                if b[j].is_zero():
                    continue
                raw[i + j] = raw[i + j] + a[i] * b[j]
        c = self.base
        folded = tuple(raw[k] + raw[k + 4] * c for k in range(3)) + (raw[3],)
        return AlgebraicScalar(folded, self.base)

    __rmul__ = __mul__

    def inv(self) -> "AlgebraicScalar":
        """Multiplicative inverse; the reduced ring is always a field."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        deg, fold = _base_profile(self.base)
        a = self.coeffs
        if deg == 1:
            return AlgebraicScalar.from_value(GR_ONE / a[0], self.base)
        if deg == 2:
            # (a0 + a1 s)^(-1) = (a0 - a1 s) / (a0^2 - a1^2 * s^2)
            n = a[0] * a[0] - a[1] * a[1] * fold
            return AlgebraicScalar((a[0] / n, -a[1] / n, GR_ZERO, GR_ZERO), self.base)
        return self._inv_deg4()

    def _inv_deg4(self) -> "AlgebraicScalar":
        # Solve M x = e0 where M is multiplication by self in the s-basis.
        cols = []
        elem = AlgebraicScalar.one(self.base)
        s = AlgebraicScalar((GR_ZERO, GR_ONE, GR_ZERO, GR_ZERO), self.base)
        for _ in range(4):
            cols.append((self * elem).coeffs)
            elem = elem * s
        m = [[cols[j][i] for j in range(4)] for i in range(4)]
        rhs = [GR_ONE, GR_ZERO, GR_ZERO, GR_ZERO]
        x = _solve_gaussian(m, rhs)
        return AlgebraicScalar(tuple(x), self.base)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- reporting ---------------------------------------------------------

    def to_complex(self) -> complex:
        s = float(self.base) ** 0.25
        total = 0j
        for k, a in enumerate(self.coeffs):
            total += a.to_complex() * s**k
        return total

    def to_json_obj(self) -> dict:
        return {
            "coeffs": [[str(a.re), str(a.im)] for a in self.coeffs],
            "base": str(self.base),
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "AlgebraicScalar":
        coeffs = tuple(
            GaussianRational(Fraction(p), Fraction(q)) for p, q in obj["coeffs"]
        )
        return AlgebraicScalar(coeffs, Fraction(obj["base"]))


def _solve_gaussian(m, rhs):
    """Solve a small linear system over GaussianRational in place."""
    n = len(m)
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular multiplication matrix")
        m[col], m[piv] = m[piv], m[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv_p = GR_ONE / m[col][col]
        m[col] = [v * inv_p for v in m[col]]
        rhs[col] = rhs[col] * inv_p
        for r in range(n):
            if r == col or m[r][col].is_zero():
                continue
            f = m[r][col]
            m[r] = [v - f * w for v, w in zip(m[r], m[col])]
            rhs[r] = rhs[r] - f * rhs[col]
    return rhs


def quarter_power(c, k: int) -> AlgebraicScalar:
    """c^(k/4) as an element of Q(i)[s]/(s^4 - c); k may be negative."""
    c = as_fraction(c)
    if c <= 0:
        raise ValueError("base of a quarter power must be positive")
    q, r = divmod(k, 4)
    coeffs = [GR_ZERO] * 4
    coeffs[r] = GaussianRational(c**q)
    return AlgebraicScalar(tuple(coeffs), c)
