"""Operator-channel simulation: erasures, error dimensions, min-distance decoding.

The channel model is the standard noncoherent one for subspace codes.  A
sent codeword V suffers rho dimension erasures (it is replaced by a random
(dim V - rho)-dimensional subspace W of V) and gains e error dimensions
(random ambient vectors outside the current span are adjoined), so the
receiver sees U = W + E and must guess V from U alone.

The decoder picks the codeword closest to U in the subspace metric.  Ties
are never broken silently: an ambiguous trial reports every tied index, and
the statistics count it as a failure.  Whenever 2 d(U, V) < D(code) the
metric guarantees unique decoding, which the simulator asserts per trial.

Determinism: each trial draws from ``random.Random(f"{seed}:{trial}")``, so
results are bit-identical for a fixed seed regardless of trial order or
parallel scheduling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import EmptyCode, TooManyErasures
from .linalg import MatrixGF
from .subspaces import GrassmannianCode, Subspace, subspace_distance

_MAX_REDRAWS = 256  # per needed vector; failure means a broken RNG, not bad luck


@dataclass(frozen=True)
class ChannelConfig:
    """Channel parameters: dimension erasures, injected error dims, RNG seed."""

    erasures: int = 0
    error_dims: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.erasures < 0 or self.error_dims < 0:
            raise ValueError("erasures and error_dims must be >= 0")


@dataclass(frozen=True)
class TrialResult:
    """Outcome of decoding one received subspace.

    ``decoded_index`` is the unique argmin codeword, or None when
    ``ambiguous`` (then ``tied`` lists every index at the minimum).
    ``sent_index`` and ``distance_to_sent`` are filled only when the caller
    disclosed the sent codeword (the decoder itself never needs it).
    """

    received: Subspace
    decoded_index: int | None
    ambiguous: bool
    tied: tuple[int, ...]
    min_distance_found: int
    sent_index: int | None = None
    distance_to_sent: int | None = None

    @property
    def success(self) -> bool:
        return (
            not self.ambiguous
            and self.sent_index is not None
            and self.decoded_index == self.sent_index
        )


def _random_vector_of(sub: Subspace, rng: random.Random) -> tuple[int, ...]:
    # uniform over the subspace: random coefficients against the RREF basis
    gf = sub.field
    vec = [0] * sub.ambient_n
    for row in sub.basis.rows:
        c = rng.randrange(gf.q)
        if c:
            for j, r in enumerate(row):
                if r:
                    vec[j] = gf.add(vec[j], gf.mul(c, r))
    return tuple(vec)


def _random_ambient_vector(field, n: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randrange(field.q) for _ in range(n))


def _extend_independent(field, n, rows, draw, count) -> list:
    """Append ``count`` vectors from ``draw()``, each independent of ``rows``."""
    current = list(rows)
    have = MatrixGF(field, current, ncols=n).rank()
    for _ in range(count):
        for _attempt in range(_MAX_REDRAWS):
            v = draw()
            trial_rank = MatrixGF(field, current + [v], ncols=n).rank()
            if trial_rank > have:
                current.append(v)
                have = trial_rank
                break
        else:
            raise RuntimeError(
                "exceeded redraw budget while sampling an independent vector"
            )
    return current


def transmit(V: Subspace, cfg: ChannelConfig, trial: int) -> Subspace:
    """One channel use: U = W + E for a random W <= V with rho fewer dims.

    Error vectors are drawn uniformly from the ambient space, rejecting any
    that fall inside the span built so far, so each injected dimension is
    effective (when the ambient space is not already exhausted).
    Deterministic given (cfg.seed, trial).
    """
    if cfg.erasures > V.dim:
        raise TooManyErasures(
            f"cannot erase {cfg.erasures} dimensions from a {V.dim}-dimensional subspace"
        )
    rng = random.Random(f"{cfg.seed}:{trial}")
    keep = V.dim - cfg.erasures
    rows = _extend_independent(
        V.field, V.ambient_n, [], lambda: _random_vector_of(V, rng), keep
    )
    inject = min(cfg.error_dims, V.ambient_n - keep)
    rows = _extend_independent(
        V.field,
        V.ambient_n,
        rows,
        lambda: _random_ambient_vector(V.field, V.ambient_n, rng),
        inject,
    )
    return Subspace(V.field, V.ambient_n, rows)


def decode_min_distance(
    code: GrassmannianCode, U: Subspace, sent_index: int | None = None
) -> TrialResult:
    """Nearest-codeword decoding in the subspace metric, ties reported as such."""
    if len(code) == 0:
        raise EmptyCode("cannot decode against an empty code")
    distances = [subspace_distance(c, U) for c in code.codewords]
    dmin = min(distances)
    tied = tuple(i for i, d in enumerate(distances) if d == dmin)
    ambiguous = len(tied) > 1
    return TrialResult(
        received=U,
        decoded_index=None if ambiguous else tied[0],
        ambiguous=ambiguous,
        tied=tied,
        min_distance_found=dmin,
        sent_index=sent_index,
        distance_to_sent=None if sent_index is None else distances[sent_index],
    )


def simulate(code: GrassmannianCode, cfg: ChannelConfig, trials: int) -> dict:
    """Run seeded channel trials and aggregate decoder statistics.

    Per trial: pick a sent codeword uniformly, transmit, decode, compare.
    Returns a JSON-ready dict (sorted serialization is byte-stable): success
    and ambiguity rates, mean distance to the sent codeword, and the
    histogram of those distances.  Every trial with 2 d(U, sent) < D must
    decode correctly; the guarantee is asserted here, not just sampled.
    """
    if len(code) == 0:
        raise EmptyCode("cannot simulate an empty code")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    big_d = code.min_distance() if len(code) >= 2 else None
    successes = ambiguities = 0
    dist_sum = 0
    histogram: dict[int, int] = {}
    for trial in range(trials):
        # a separate stream from transmit's, so the sent pick does not
        # correlate with the channel's coefficient draws
        sent = random.Random(f"{cfg.seed}:{trial}:sent").randrange(len(code))
        received = transmit(code[sent], cfg, trial)
        result = decode_min_distance(code, received, sent_index=sent)
        d_sent = result.distance_to_sent
        assert d_sent is not None
        dist_sum += d_sent
        histogram[d_sent] = histogram.get(d_sent, 0) + 1
        if big_d is not None and 2 * d_sent < big_d:
            assert result.success, "unique-decoding guarantee violated"
        if result.ambiguous:
            ambiguities += 1
        elif result.decoded_index == sent:
            successes += 1
    return {
        "config": {
            "erasures": cfg.erasures,
            "error_dims": cfg.error_dims,
            "seed": cfg.seed,
            "trials": trials,
        },
        "code": {
            "size": len(code),
            "n": code.ambient_n,
            "q": code.field.spec,
            "constant_dim": code.constant_dim,
            "min_distance": big_d,
        },
        "successes": successes,
        "ambiguities": ambiguities,
        "failures": trials - successes - ambiguities,
        "success_rate": successes / trials,
        "ambiguity_rate": ambiguities / trials,
        "mean_distance_to_sent": dist_sum / trials,
        "distance_histogram": {str(d): c for d, c in sorted(histogram.items())},
    }
