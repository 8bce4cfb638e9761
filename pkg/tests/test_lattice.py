"""Half-integer lattice, embeddings, doubling, the admissibility predicate."""

import random
from fractions import Fraction

import pytest

from pfensembles.lattice import (
    HALF,
    HalfInt,
    SplitConfig,
    cross_product,
    double,
    embed_theta2,
    embed_theta_half,
    inverse_embed,
    is_confL,
    parity,
    vandermonde,
)
from pfensembles.partitions import EMPTY, Partition, partitions_up_to


def cfg(minus, plus):
    return SplitConfig(
        tuple(HalfInt(t) for t in minus), tuple(HalfInt(t) for t in plus)
    )


def test_halfint_validation():
    with pytest.raises(ValueError):
        HalfInt(2)
    assert HalfInt(3).value == Fraction(3, 2)
    assert HalfInt(3) - HalfInt(1) == Fraction(1)
    assert HalfInt(3) - 1 == HalfInt(1)
    assert -HalfInt(3) == HalfInt(-3)
    assert abs(HalfInt(-5)) == HalfInt(5)


def test_parity_examples():
    assert parity(HalfInt(1)) == "even"
    assert parity(HalfInt(-1)) == "even"
    assert parity(HalfInt(-3)) == "odd"
    assert parity(HalfInt(5)) == "even"
    assert parity(HalfInt(3)) == "odd"


def test_parity_alternates_outward():
    for t in range(1, 30, 2):
        assert HalfInt(t).is_even() != HalfInt(t + 2).is_even()
        assert HalfInt(t).is_even() == HalfInt(-t).is_even()


def test_split_config_validation():
    with pytest.raises(ValueError):
        cfg([-1, -3], [])  # not increasing
    with pytest.raises(ValueError):
        cfg([1], [])  # positive on the minus side
    with pytest.raises(ValueError):
        cfg([], [-1])


def test_embed_theta2_examples():
    assert embed_theta2(EMPTY) == cfg([], [])
    assert embed_theta2(Partition.of(1)) == cfg([-3], [1])
    assert embed_theta2(Partition.of(2)) == cfg([-3, -1], [3])


def test_embed_theta_half_examples():
    assert embed_theta_half(EMPTY) == cfg([], [])
    assert embed_theta_half(Partition.of(1)) == embed_theta2(Partition.of(1))
    assert embed_theta_half(Partition.of(2)) == cfg([-7], [1])
    assert embed_theta_half(Partition.of(2)) == embed_theta2(Partition.of(1, 1))


def test_double_examples():
    assert double(cfg([], [3])).plus == (HalfInt(1), HalfInt(3))
    assert double(cfg([], [1])).plus == (HalfInt(1),)
    assert double(cfg([], [1, 5])).plus == (HalfInt(1), HalfInt(3), HalfInt(5))
    assert double(cfg([-3], [3])).minus == (HalfInt(-3),)


def test_is_confL_examples():
    assert is_confL(cfg([], []))
    assert is_confL(cfg([-3], [1]))
    assert not is_confL(cfg([-1], [1]))  # -1/2 is even but slot 1 needs odd
    assert not is_confL(cfg([-1], []))  # unbalanced
    assert not is_confL(cfg([], [1, 3]))  # doubled plus points collide at 1/2


def test_embedding_image_is_confL_and_injective():
    seen = {}
    for lam in partitions_up_to(10):
        config = embed_theta2(lam)
        assert is_confL(config)
        key = config.to_json_obj()
        key = (tuple(key["minus"]), tuple(key["plus"]))
        assert key not in seen
        seen[key] = lam


def test_inverse_embed_roundtrip():
    for mode, embed in (("theta2", embed_theta2), ("theta_half", embed_theta_half)):
        for lam in partitions_up_to(10):
            assert inverse_embed(embed(lam), mode) == lam


def test_inverse_embed_none_cases():
    assert inverse_embed(cfg([-1], []), "theta2") is None
    assert inverse_embed(cfg([-1], [1]), "theta2") is None
    assert inverse_embed(cfg([], []), "theta2") == EMPTY
    assert inverse_embed(cfg([-3], [1]), "theta2") == Partition.of(1)
    with pytest.raises(ValueError):
        inverse_embed(cfg([], []), "bogus")


def test_doubled_plus_bridge():
    # plus part of the doubled embedded configuration is exactly {P_i + 1/2}
    for lam in partitions_up_to(10):
        coords = lam.double_union().frobenius()
        doubled = double(embed_theta2(lam))
        assert sorted(x.twice for x in doubled.plus) == sorted(
            2 * p + 1 for p in coords.P
        )
        assert sorted(-x.twice for x in doubled.minus) == sorted(
            2 * q + 1 for q in coords.Q
        )


def test_doubled_sum_identity():
    # sum over doubled points of (|x| - 1/2) recovers sum P + sum Q
    for lam in partitions_up_to(10):
        coords = lam.double_union().frobenius()
        doubled = double(embed_theta2(lam))
        total = sum(x.value - Fraction(1, 2) for x in doubled.plus) + sum(
            -x.value - Fraction(1, 2) for x in doubled.minus
        )
        assert total == sum(coords.P) + sum(coords.Q)
        # and the doubled configuration is balanced with 2|lambda| boxes
        assert len(doubled.minus) == len(doubled.plus)
        assert sum(coords.P) + sum(coords.Q) + coords.diagonal == 2 * lam.size


def test_confL_fails_on_unbalanced_random():
    rng = random.Random(11)
    for _ in range(200):
        minus = sorted(rng.sample(range(-15, 0, 2), rng.randint(0, 5)))
        plus = sorted(rng.sample(range(1, 16, 2), rng.randint(0, 5)))
        config = cfg(minus, plus)
        doubled = double(config)
        if len(doubled.minus) != len(doubled.plus):
            assert not is_confL(config)


def test_vandermonde_and_cross_examples():
    assert vandermonde((HalfInt(7),)) == 1
    assert vandermonde((HalfInt(-3), HalfInt(-1))) == -1
    assert cross_product(
        (HalfInt(1), HalfInt(3)), (HalfInt(-3), HalfInt(-1))
    ) == 12


def test_config_json_roundtrip():
    config = cfg([-7, -3], [1, 5])
    assert SplitConfig.from_json_obj(config.to_json_obj()) == config
