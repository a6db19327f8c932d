"""Operator channel and minimum-distance decoder."""

import json

import pytest

from cacodes.algebra import GF, Polynomial
from cacodes.channel import ChannelConfig, decode_min_distance, simulate, transmit
from cacodes.errors import EmptyCode, TooManyErasures
from cacodes.families import CAFamily, code_from_family, uniform_gcd_family
from cacodes.subspaces import GrassmannianCode, Subspace, subspace_distance

F2 = GF(2)


def coprime_pair_code():
    # kernels of X^2+X+1 and X^2+1 at n = 4; coprime, so D = 4
    fam = CAFamily([Polynomial(F2, (1, 1, 1)), Polynomial(F2, (1, 0, 1))])
    return code_from_family(fam)


def coprime_triple_code():
    fam = CAFamily(list(uniform_gcd_family(3, Polynomial(F2, (1,)))))
    return code_from_family(fam)


# -- config -------------------------------------------------------------------


def test_config_defaults():
    cfg = ChannelConfig()
    assert (cfg.erasures, cfg.error_dims, cfg.seed) == (0, 0, 0)


def test_config_rejects_negative():
    with pytest.raises(ValueError):
        ChannelConfig(erasures=-1)
    with pytest.raises(ValueError):
        ChannelConfig(error_dims=-2)


# -- transmit -----------------------------------------------------------------


def test_identity_channel_returns_sent():
    code = coprime_pair_code()
    cfg = ChannelConfig(erasures=0, error_dims=0, seed=7)
    for trial in range(5):
        for V in code:
            assert transmit(V, cfg, trial) == V


def test_full_erasure_gives_zero_space():
    V = coprime_pair_code()[0]
    out = transmit(V, ChannelConfig(erasures=V.dim, seed=1), trial=0)
    assert out.is_zero()


def test_single_erasure_is_hyperplane_of_sent():
    code = coprime_pair_code()
    cfg = ChannelConfig(erasures=1, seed=3)
    for trial in range(20):
        for V in code:
            U = transmit(V, cfg, trial)
            assert U.dim == V.dim - 1
            assert U <= V
            assert subspace_distance(U, V) == 1


def test_injection_adds_independent_dims():
    code = coprime_pair_code()
    cfg = ChannelConfig(error_dims=1, seed=11)
    for trial in range(20):
        for V in code:
            U = transmit(V, cfg, trial)
            assert U.dim == V.dim + 1
            assert V <= U
            assert subspace_distance(U, V) == 1


def test_injection_capped_by_ambient_space():
    V = Subspace(F2, 2, [(1, 0), (0, 1)])
    out = transmit(V, ChannelConfig(error_dims=5, seed=2), trial=0)
    assert out == V


def test_combined_erasure_and_injection_distance():
    V = coprime_pair_code()[0]
    cfg = ChannelConfig(erasures=1, error_dims=1, seed=9)
    for trial in range(20):
        U = transmit(V, cfg, trial)
        assert U.dim == V.dim
        # one dim lost plus one alien dim, unless the injection landed in V
        assert subspace_distance(U, V) in (0, 2)


def test_transmit_deterministic_per_trial():
    V = coprime_pair_code()[1]
    cfg = ChannelConfig(erasures=1, error_dims=1, seed=42)
    again = ChannelConfig(erasures=1, error_dims=1, seed=42)
    outs = [transmit(V, cfg, t) for t in range(10)]
    assert outs == [transmit(V, again, t) for t in range(10)]
    assert len(set(outs)) > 1  # trials draw from distinct streams


def test_transmit_rejects_excess_erasures():
    V = coprime_pair_code()[0]
    with pytest.raises(TooManyErasures):
        transmit(V, ChannelConfig(erasures=3), trial=0)


# -- decoder ------------------------------------------------------------------


def test_decode_exact_codeword():
    code = coprime_pair_code()
    for i, V in enumerate(code):
        res = decode_min_distance(code, V, sent_index=i)
        assert res.decoded_index == i
        assert not res.ambiguous
        assert res.tied == (i,)
        assert res.min_distance_found == 0
        assert res.distance_to_sent == 0
        assert res.success


def test_decode_without_sent_index():
    code = coprime_pair_code()
    res = decode_min_distance(code, code[0])
    assert res.decoded_index == 0
    assert res.sent_index is None and res.distance_to_sent is None
    assert not res.success  # undisclosed sent codeword never counts as success


def test_decode_within_unique_radius():
    code = coprime_pair_code()  # D = 4, corrects distance <= 1
    cfg = ChannelConfig(erasures=1, seed=5)
    for trial in range(30):
        for i, V in enumerate(code):
            res = decode_min_distance(code, transmit(V, cfg, trial), sent_index=i)
            assert res.success and res.distance_to_sent == 1


def test_decode_reports_tie():
    code = coprime_pair_code()
    # one basis vector from each kernel: equidistant from both codewords
    U = Subspace(F2, 4, [(1, 0, 1, 1), (0, 1, 0, 1)])
    assert {subspace_distance(U, c) for c in code} == {2}
    res = decode_min_distance(code, U, sent_index=0)
    assert res.ambiguous
    assert res.decoded_index is None
    assert res.tied == (0, 1)
    assert res.min_distance_found == 2
    assert not res.success


def test_decode_empty_code():
    empty = GrassmannianCode(F2, 4, [])
    with pytest.raises(EmptyCode):
        decode_min_distance(empty, Subspace(F2, 4, [(1, 0, 0, 0)]))


# -- simulate -----------------------------------------------------------------


def test_simulate_identity_channel():
    code = coprime_pair_code()
    stats = simulate(code, ChannelConfig(seed=1), trials=50)
    assert stats["successes"] == 50
    assert stats["success_rate"] == 1.0
    assert stats["ambiguities"] == 0 and stats["failures"] == 0
    assert stats["distance_histogram"] == {"0": 50}
    assert stats["mean_distance_to_sent"] == 0.0
    assert stats["code"]["min_distance"] == 4


def test_simulate_single_erasure_always_corrects():
    code = coprime_triple_code()  # D = 6, corrects distance <= 2
    stats = simulate(code, ChannelConfig(erasures=1, seed=8), trials=60)
    assert stats["success_rate"] == 1.0
    assert stats["distance_histogram"] == {"1": 60}


def test_simulate_deterministic_bytes():
    code = coprime_pair_code()
    cfg = ChannelConfig(erasures=1, error_dims=1, seed=123)
    a = simulate(code, cfg, trials=40)
    b = simulate(code, cfg, trials=40)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_simulate_counts_are_consistent():
    code = coprime_pair_code()
    stats = simulate(code, ChannelConfig(erasures=2, error_dims=2, seed=4), trials=80)
    assert stats["successes"] + stats["ambiguities"] + stats["failures"] == 80
    assert sum(stats["distance_histogram"].values()) == 80
    total = sum(int(d) * c for d, c in stats["distance_histogram"].items())
    assert stats["mean_distance_to_sent"] == total / 80


def test_simulate_rejects_bad_arguments():
    code = coprime_pair_code()
    with pytest.raises(ValueError):
        simulate(code, ChannelConfig(), trials=0)
    with pytest.raises(EmptyCode):
        simulate(GrassmannianCode(F2, 4, []), ChannelConfig(), trials=1)
