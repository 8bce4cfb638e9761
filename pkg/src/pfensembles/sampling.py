"""Exact inverse-CDF sampling of random partitions.

Fixed-size sampling enumerates the diagrams of that size and inverts the
exact CDF; mixed-measure sampling first draws the size from the
per-degree masses (truncated, with the exact tail mass reported) and
then samples the conditional fixed-size measure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .measures import (
    JackParams,
    SeriesClass,
    classify_parameters,
    per_degree_mass,
    plancherel_n,
    z_measure_n,
)
from .partitions import Partition, partitions_of

RNG_ALGORITHM = "python-random-mersenne-twister"

# 53-bit draws compared against exact cumulative fractions
_DENOM = 1 << 53


class NonPositiveMeasureError(ValueError):
    """Sampling requested outside the positivity parameter ranges."""


def _draw_index(cdf: List[Fraction], rng: random.Random) -> int:
    u = Fraction(rng.getrandbits(53), _DENOM)
    lo, hi = 0, len(cdf) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if u < cdf[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _cdf(weights: List[Fraction]) -> List[Fraction]:
    total = sum(weights)
    acc = Fraction(0)
    cdf = []
    for w in weights:
        acc += w
        cdf.append(acc / total)
    return cdf


@dataclass
class FixedSizeSampler:
    """Samples diagrams of one fixed size from an exact distribution."""

    table: List[Tuple[Partition, Fraction]]
    _cdf: List[Fraction] = field(init=False)

    def __post_init__(self):
        if any(p < 0 for _, p in self.table):
            raise NonPositiveMeasureError("negative probability in the table")
        self._cdf = _cdf([p for _, p in self.table])

    def sample(self, rng: random.Random) -> Partition:
        return self.table[_draw_index(self._cdf, rng)][0]


def plancherel_table(n: int, theta: Fraction) -> List[Tuple[Partition, Fraction]]:
    return [(lam, plancherel_n(lam, theta)) for lam in partitions_of(n)]


def z_measure_table(n: int, params: JackParams) -> List[Tuple[Partition, Fraction]]:
    cls = classify_parameters(params)
    if cls is SeriesClass.UNCLASSIFIED:
        raise NonPositiveMeasureError(
            "parameters are outside the known positivity series"
        )
    table = []
    for lam in partitions_of(n):
        v = z_measure_n(lam, params)
        if v.im != 0:
            raise NonPositiveMeasureError("non-real measure value encountered")
        table.append((lam, v.re))
    return table


@dataclass
class MixedSampler:
    """Size-then-shape sampler for a mixed measure, truncated at max_size.

    truncated_mass is the exact xi-part of the retained mass; the full
    retained probability is (1-xi)^t * truncated_mass and the tail is its
    complement.
    """

    size_weights: List[Fraction]  # unnormalized per-degree masses, n = 0..N
    shape_samplers: List[FixedSizeSampler]
    truncated_mass: Fraction
    t_real: Fraction
    xi: Fraction

    def sample(self, rng: random.Random) -> Partition:
        n = _draw_index(_cdf(self.size_weights), rng)
        if n == 0:
            return Partition(())
        return self.shape_samplers[n].sample(rng)

    def tail_mass_float(self) -> float:
        return 1.0 - float(1 - self.xi) ** float(self.t_real) * float(
            self.truncated_mass
        )


def mixed_z_sampler(params: JackParams, xi: Fraction, max_size: int) -> MixedSampler:
    cls = classify_parameters(params)
    if cls is SeriesClass.UNCLASSIFIED:
        raise NonPositiveMeasureError(
            "parameters are outside the known positivity series"
        )
    t = params.t
    if t.im != 0:
        raise NonPositiveMeasureError("t = zz'/theta must be real for sampling")
    weights = []
    for n in range(max_size + 1):
        w = per_degree_mass(params, xi, n)
        if w.im != 0 or w.re < 0:
            raise NonPositiveMeasureError("non-positive per-degree mass")
        weights.append(w.re)
    samplers = [None] + [
        FixedSizeSampler(z_measure_table(n, params)) for n in range(1, max_size + 1)
    ]
    return MixedSampler(weights, samplers, sum(weights), t.re, xi)


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)
