"""Half-integer lattice points, embeddings of diagrams, doubling, Conf^L.

Points live on Z + 1/2 and are stored as twice their value (an odd
integer). A diagram embeds into a finite configuration through the
Frobenius coordinates of its adjacent doubling; the doubled configuration
and the Conf^L predicate govern which configurations carry nonzero
Pfaffian weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .partitions import FrobeniusCoords, Partition


@dataclass(frozen=True, order=True)
class HalfInt:
    """The half-integer twice/2; twice must be odd."""

    twice: int

    def __post_init__(self):
        if self.twice % 2 == 0:
            raise ValueError("HalfInt stores twice the value, which must be odd")

    @staticmethod
    def make(twice: int) -> "HalfInt":
        return HalfInt(twice)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __str__(self):
        return f"{self.twice}/2"

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return Fraction(self.twice - other.twice, 2)
        return HalfInt(self.twice - 2 * other)

    def __add__(self, other: int) -> "HalfInt":
        return HalfInt(self.twice + 2 * other)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def is_even(self) -> bool:
        """1/2 and -1/2 are even; parity alternates outward along each ray."""
        return ((abs(self.twice) - 1) // 2) % 2 == 0


HALF = HalfInt(1)


def parity(x: HalfInt) -> str:
    return "even" if x.is_even() else "odd"


def _check_sorted_distinct(points: Sequence[HalfInt], what: str):
    for a, b in zip(points, points[1:]):
        if a.twice >= b.twice:
            raise ValueError(f"{what} must be strictly increasing")


@dataclass(frozen=True)
class SplitConfig:
    """Finite configuration split into negative and positive points."""

    minus: tuple
    plus: tuple

    def __post_init__(self):
        minus = tuple(self.minus)
        plus = tuple(self.plus)
        _check_sorted_distinct(minus, "minus points")
        _check_sorted_distinct(plus, "plus points")
        if any(x.twice >= 0 for x in minus):
            raise ValueError("minus points must be negative")
        if any(x.twice <= 0 for x in plus):
            raise ValueError("plus points must be positive")
        object.__setattr__(self, "minus", minus)
        object.__setattr__(self, "plus", plus)

    @property
    def points(self) -> tuple:
        return self.minus + self.plus

    def __len__(self):
        return len(self.minus) + len(self.plus)

    def to_json_obj(self) -> dict:
        return {
            "minus": [x.twice for x in self.minus],
            "plus": [x.twice for x in self.plus],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "SplitConfig":
        return SplitConfig(
            tuple(HalfInt(t) for t in obj["minus"]),
            tuple(HalfInt(t) for t in obj["plus"]),
        )


EMPTY_CONFIG = SplitConfig((), ())


@dataclass(frozen=True)
class DoubledConfig:
    """Image of a configuration under the doubling map; plus side may
    contain coincidences (they make the Pfaffian weight vanish)."""

    minus: tuple
    plus: tuple


def double(config: SplitConfig) -> DoubledConfig:
    """Each plus point x > 1/2 contributes the pair (x-1, x); the point 1/2
    contributes itself; the minus side is unchanged."""
    plus = []
    for x in config.plus:
        if x == HALF:
            plus.append(x)
        else:
            plus.append(x - 1)
            plus.append(x)
    plus.sort()
    return DoubledConfig(config.minus, tuple(plus))


def is_confL(config: SplitConfig) -> bool:
    """Nonvanishing-weight test: doubled plus points distinct, the two
    sides balanced, and the minus side parity-alternating (the i-th
    smallest minus point is odd for odd i)."""
    doubled = double(config)
    if len(set(doubled.plus)) != len(doubled.plus):
        return False
    if len(doubled.minus) != len(doubled.plus):
        return False
    for i, x in enumerate(doubled.minus, start=1):
        if x.is_even() != (i % 2 == 0):
            return False
    return True


# ---------------------------------------------------------------------------
# Embeddings


def _embed_from_coords(coords: FrobeniusCoords) -> SplitConfig:
    P, Q = coords.P, coords.Q
    d = coords.diagonal
    minus = tuple(sorted(HalfInt(-2 * q - 1) for q in Q))
    if d % 2 == 0:
        plus = [HalfInt(2 * P[i] + 1) for i in range(d - 2, -1, -2)]
    else:
        # odd diagonal: P_D = 0 supplies the point 1/2 on the plus side
        plus = [HALF] + [HalfInt(2 * P[i] + 1) for i in range(d - 3, -1, -2)]
    return SplitConfig(minus, tuple(sorted(plus)))


def embed_theta2(lam: Partition) -> SplitConfig:
    """Configuration built from the Frobenius coordinates of the doubled diagram."""
    return _embed_from_coords(lam.double_union().frobenius())


def embed_theta_half(lam: Partition) -> SplitConfig:
    """Same construction applied to the conjugate diagram's doubling."""
    return _embed_from_coords(lam.conjugate().double_union().frobenius())


def inverse_embed(config: SplitConfig, mode: str) -> Optional[Partition]:
    """The unique diagram mapping to this configuration, or None.

    mode is "theta2" or "theta_half".
    """
    if mode not in ("theta2", "theta_half"):
        raise ValueError(f"unknown embedding mode {mode!r}")
    if not is_confL(config):
        return None
    doubled = double(config)
    # all doubled plus points are P_i + 1/2, all minus points are -Q_i - 1/2
    P = tuple((x.twice - 1) // 2 for x in reversed(doubled.plus))
    Q = tuple((-x.twice - 1) // 2 for x in config.minus)
    try:
        mu = FrobeniusCoords(P, Q).to_partition()
    except ValueError:
        return None
    parts = mu.parts
    if len(parts) % 2 != 0 or any(
        parts[i] != parts[i + 1] for i in range(0, len(parts), 2)
    ):
        return None
    lam = Partition(parts[::2])
    if mode == "theta_half":
        lam = lam.conjugate()
        check = embed_theta_half(lam)
    else:
        check = embed_theta2(lam)
    return lam if check == config else None


# ---------------------------------------------------------------------------
# Product helpers


def vandermonde(points: Sequence[HalfInt]) -> Fraction:
    """prod_(i<j) (x_i - x_j) over the sequence in its stored order."""
    result = Fraction(1)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            result *= points[i] - points[j]
    return result


def cross_product(a: Iterable[HalfInt], b: Iterable[HalfInt]) -> Fraction:
    """prod over all pairs of (a_i - b_j)."""
    b = list(b)
    result = Fraction(1)
    for x in a:
        for y in b:
            result *= x - y
    return result
