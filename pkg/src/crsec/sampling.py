"""Fading and interference sampling, conditioned on an idle-detected band.

The simulator never draws the sensing outcome itself: every trial is
conditioned on the band being detected idle, and residual primary activity
enters through the Bayes posterior of a miss detection.  Channel powers are
drawn directly as exponential variates (mean sigma^2) instead of squaring
complex Rayleigh gains; the distributions are identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .params import ParameterError, ValidatedParams

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# Trials are partitioned into fixed-size blocks; block index = stream id.
# The partition depends only on the trial index, never on worker count, so
# any parallel split of the blocks reproduces the same draws.
BLOCK_TRIALS = 8192


def derive_seed(seed: int, index: int) -> int:
    """Mix (seed, index) into a fresh 64-bit seed (SplitMix64 finalizer)."""
    z = (int(seed) + (int(index) + 1) * _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass
class RandomStream:
    """Counter-based random stream backed by Philox.

    The draw sequence is a pure function of (seed, stream_id); distinct
    stream ids key statistically independent generators.
    """

    seed: int
    stream_id: int = 0
    _gen: np.random.Generator | None = field(
        init=False, repr=False, compare=False, default=None
    )

    def __post_init__(self):
        for name in ("seed", "stream_id"):
            value = getattr(self, name)
            if not isinstance(value, int) or not 0 <= value < 2**64:
                raise ParameterError(f"{name} must be a 64-bit unsigned integer, got {value!r}")

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            key = np.array([self.seed, self.stream_id], dtype=np.uint64)
            self._gen = np.random.Generator(np.random.Philox(key=key))
        return self._gen


@dataclass(frozen=True)
class TrialRealization:
    """One Monte Carlo draw: every channel power plus the interference flag."""

    x_sd: float
    x_se: float
    x_pd: float
    x_pe: float
    x_si: tuple[float, ...]
    x_id: tuple[float, ...]
    x_pi: tuple[float, ...]
    x_ie: tuple[float, ...]
    alpha: int  # 1 iff the primary is actually transmitting (miss detection)


@dataclass(frozen=True)
class TrialBlock:
    """Struct-of-arrays batch of realizations; row t is one trial.

    Direct-path fields have shape (count,), relay fields (count, n_relays),
    alpha is float64 in {0.0, 1.0} so it can enter SINR arithmetic directly.
    """

    x_sd: np.ndarray
    x_se: np.ndarray
    x_pd: np.ndarray
    x_pe: np.ndarray
    x_si: np.ndarray
    x_id: np.ndarray
    x_pi: np.ndarray
    x_ie: np.ndarray
    alpha: np.ndarray

    def __len__(self) -> int:
        return self.x_sd.shape[0]


def sample_channel_power(variance: float, rng: RandomStream) -> float:
    """One Rayleigh-fading channel power: exponential with mean `variance`."""
    return float(rng.generator.exponential(variance))


def posterior_busy_given_detected_idle(p0: float, pd: float, pf: float) -> float:
    """Probability the primary is transmitting although the band was detected idle."""
    p_detected_idle = p0 * (1.0 - pf) + (1.0 - p0) * (1.0 - pd)
    if p_detected_idle <= 0.0:
        raise ParameterError(
            f"detected-idle event has zero probability (p0={p0}, pd={pd}, pf={pf})"
        )
    return (1.0 - p0) * (1.0 - pd) / p_detected_idle


def sample_interference_state(params: ValidatedParams, rng: RandomStream) -> int:
    """Draw the interference indicator for one trial (1 = primary active)."""
    q = posterior_busy_given_detected_idle(params.p0, params.pd, params.pf)
    return int(rng.generator.random() < q)


def sample_block(params: ValidatedParams, rng: RandomStream, count: int = BLOCK_TRIALS) -> TrialBlock:
    """Draw `count` independent trials from one stream.

    Field order is fixed (direct paths, relay paths, alpha) so a trial's
    draws are reproducible from the stream alone.
    """
    g = rng.generator
    lv = params.link
    n = params.n_relays
    q = posterior_busy_given_detected_idle(params.p0, params.pd, params.pf)
    return TrialBlock(
        x_sd=g.exponential(lv.sigma2_sd, count),
        x_se=g.exponential(lv.sigma2_se, count),
        x_pd=g.exponential(lv.sigma2_pd, count),
        x_pe=g.exponential(lv.sigma2_pe, count),
        x_si=g.exponential(lv.sigma2_si, (count, n)),
        x_id=g.exponential(lv.sigma2_id, (count, n)),
        x_pi=g.exponential(lv.sigma2_pi, (count, n)),
        x_ie=g.exponential(lv.sigma2_ie, (count, n)),
        alpha=(g.random(count) < q).astype(np.float64),
    )


def realization_at(block: TrialBlock, row: int) -> TrialRealization:
    """Extract one trial from a block as a scalar realization."""
    return TrialRealization(
        x_sd=float(block.x_sd[row]),
        x_se=float(block.x_se[row]),
        x_pd=float(block.x_pd[row]),
        x_pe=float(block.x_pe[row]),
        x_si=tuple(float(v) for v in block.x_si[row]),
        x_id=tuple(float(v) for v in block.x_id[row]),
        x_pi=tuple(float(v) for v in block.x_pi[row]),
        x_ie=tuple(float(v) for v in block.x_ie[row]),
        alpha=int(block.alpha[row]),
    )


def sample_trial(params: ValidatedParams, rng: RandomStream) -> TrialRealization:
    """Draw one trial; identical layout to row 0 of a single-trial block."""
    return realization_at(sample_block(params, rng, count=1), 0)
