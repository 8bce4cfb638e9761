"""Exact inverse-CDF samplers: determinism, correctness of frequencies."""

from fractions import Fraction

import pytest

from pfensembles.exact import GaussianRational
from pfensembles.measures import JackParams
from pfensembles.partitions import Partition
from pfensembles.sampling import (
    FixedSizeSampler,
    NonPositiveMeasureError,
    make_rng,
    mixed_z_sampler,
    plancherel_table,
    z_measure_table,
)

GR = GaussianRational


def test_determinism():
    sampler = FixedSizeSampler(plancherel_table(3, Fraction(2)))
    a = [sampler.sample(make_rng(42)) for _ in range(1)]
    run1 = [sampler.sample(r) for r in [make_rng(42)] for _ in range(5)]
    rng1, rng2 = make_rng(7), make_rng(7)
    seq1 = [sampler.sample(rng1) for _ in range(20)]
    seq2 = [sampler.sample(rng2) for _ in range(20)]
    assert seq1 == seq2
    assert a and run1  # draws succeed


def test_plancherel_frequencies():
    # P((2)) = 2/3 under the size-2 Plancherel family at theta=2
    sampler = FixedSizeSampler(plancherel_table(2, Fraction(2)))
    rng = make_rng(123)
    n = 20000
    hits = sum(1 for _ in range(n) if sampler.sample(rng) == Partition.of(2))
    freq = hits / n
    assert abs(freq - 2 / 3) < 0.02  # ~6 sigma for n=20000


def test_z_measure_table_values():
    p = JackParams(GR.of(4), GR.of(3), Fraction(2))
    table = dict(z_measure_table(2, p))
    assert table[Partition.of(2)] == Fraction(20, 21)
    assert table[Partition.of(1, 1)] == Fraction(1, 21)


def test_z_measure_table_rejects_unclassified():
    p = JackParams(GR.of(4), GR.of(Fraction(3, 2)), Fraction(2))
    with pytest.raises(NonPositiveMeasureError):
        z_measure_table(2, p)


def test_mixed_sampler():
    p = JackParams(GR.of(4), GR.of(3), Fraction(2))
    xi = Fraction(1, 16)
    sampler = mixed_z_sampler(p, xi, max_size=8)
    rng = make_rng(99)
    samples = [sampler.sample(rng) for _ in range(200)]
    assert all(s.size <= 8 for s in samples)
    # truncated mass is the partial binomial series of (1-xi)^(-t)
    from pfensembles.measures import per_degree_mass

    assert sampler.truncated_mass == sum(per_degree_mass(p, xi, n).re for n in range(9))
    tail = sampler.tail_mass_float()
    assert 0 <= tail < 1e-6  # xi = 1/16 decays fast


def test_mixed_sampler_determinism():
    p = JackParams(GR.of(4), GR.of(3), Fraction(2))
    sampler = mixed_z_sampler(p, Fraction(1, 16), max_size=6)
    seq1 = [sampler.sample(make_rng(5)) for _ in range(1)]
    rng1, rng2 = make_rng(5), make_rng(5)
    assert [sampler.sample(rng1) for _ in range(30)] == [
        sampler.sample(rng2) for _ in range(30)
    ]
    assert seq1
