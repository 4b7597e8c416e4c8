"""Monte Carlo secrecy-outage estimation with closed-form validation oracles.

Trials are partitioned into fixed-size blocks keyed by (seed, block index),
so the outage count is a pure function of (seed, trials, params) no matter
how the blocks are split across workers.  Merging is an order-independent
integer sum.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from statistics import NormalDist

from .params import ParameterError, SystemParams, ValidatedParams, validate
from .relaying import relaying_outcomes
from .sampling import BLOCK_TRIALS, RandomStream, derive_seed, sample_block
from .secrecy import direct_outcomes

SCHEMES = ("direct", "opportunistic")


@dataclass(frozen=True)
class OutageEstimate:
    """Outage probability point estimate with a 95% Wilson interval."""

    outages: int
    trials: int
    estimate: float
    ci_low: float
    ci_high: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.outages <= self.trials:
            raise ParameterError(f"outages must lie in [0, trials], got {self.outages}/{self.trials}")
        if self.estimate != self.outages / self.trials:
            raise ParameterError("estimate must equal outages/trials exactly")
        if not 0.0 <= self.ci_low <= self.estimate <= self.ci_high <= 1.0:
            raise ParameterError("confidence interval must satisfy 0 <= low <= estimate <= high <= 1")
        if not 0 <= self.seed < 2**64:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")

    @property
    def half_width(self) -> float:
        return (self.ci_high - self.ci_low) / 2.0


@dataclass(frozen=True)
class SweepRow:
    scheme: str
    n_relays: int
    secrecy_rate: float
    gamma_s_db: float
    estimate: OutageEstimate


@dataclass(frozen=True)
class SweepTable:
    """Rows ordered by (scheme, n_relays, secrecy_rate, gamma_s_db)."""

    rows: tuple[SweepRow, ...]

    def __post_init__(self):
        keys = [(r.scheme, r.n_relays, r.secrecy_rate, r.gamma_s_db) for r in self.rows]
        if keys != sorted(keys):
            raise ParameterError("sweep rows must be sorted by (scheme, n_relays, secrecy_rate, gamma_s_db)")


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials!r}")
    if not 0 <= successes <= trials:
        raise ParameterError(f"successes must lie in [0, trials], got {successes!r}")
    if not 0.0 < confidence < 1.0:
        raise ParameterError(f"confidence must lie in (0, 1), got {confidence!r}")
    z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
    p_hat = successes / trials
    denom = 1.0 + z * z / trials
    center = (p_hat + z * z / (2.0 * trials)) / denom
    margin = (z / denom) * math.sqrt(p_hat * (1.0 - p_hat) / trials + z * z / (4.0 * trials * trials))
    # at the extremes the exact bound is the point estimate itself; pin it so
    # sqrt rounding cannot push the interval off the estimate
    low = 0.0 if successes == 0 else max(0.0, center - margin)
    high = 1.0 if successes == trials else min(1.0, center + margin)
    return low, high


def direct_outage_closed_form(gamma_s: float, sigma2_sd: float, sigma2_se: float, r_s: float) -> float:
    """Exact outage probability of direct transmission, perfect sensing, no interference.

    With c = 2**r_s and exponential channel powers the outage event
    {x_sd < c*x_se + (c-1)/gamma_s} integrates to
    1 - exp(-(c-1)/(gamma_s*sigma2_sd)) * sigma2_sd/(sigma2_sd + c*sigma2_se).
    """
    if not gamma_s > 0.0:
        raise ParameterError(f"gamma_s must be strictly positive, got {gamma_s!r}")
    for name, value in (("sigma2_sd", sigma2_sd), ("sigma2_se", sigma2_se)):
        if not value > 0.0:
            raise ParameterError(f"{name} must be strictly positive, got {value!r}")
    if not r_s > 0.0:
        raise ParameterError(f"r_s must be strictly positive, got {r_s!r}")
    c = 2.0 ** r_s
    return 1.0 - math.exp(-(c - 1.0) / (gamma_s * sigma2_sd)) * sigma2_sd / (sigma2_sd + c * sigma2_se)


def direct_outage_floor(sigma2_sd: float, sigma2_se: float, r_s: float) -> float:
    """High-SNR limit of the closed form: the secrecy outage floor."""
    c = 2.0 ** r_s
    return c * sigma2_se / (sigma2_sd + c * sigma2_se)


def _count_block(scheme: str, params: ValidatedParams, seed: int, block_index: int, n_valid: int) -> int:
    # Always draw a full block so a trial's randomness depends only on
    # (seed, trial index), then keep the first n_valid rows.
    block = sample_block(params, RandomStream(seed, block_index))
    if scheme == "direct":
        _, _, outage = direct_outcomes(block, params)
    else:
        _, _, outage = relaying_outcomes(block, params)
    return int(outage[:n_valid].sum())


def _count_block_range(task) -> int:
    scheme, params, seed, lo_block, hi_block, trials = task
    total = 0
    for k in range(lo_block, hi_block):
        n_valid = min(trials, (k + 1) * BLOCK_TRIALS) - k * BLOCK_TRIALS
        total += _count_block(scheme, params, seed, k, n_valid)
    return total


def _block_ranges(n_blocks: int, parts: int):
    parts = max(1, min(parts, n_blocks))
    base, extra = divmod(n_blocks, parts)
    lo = 0
    for i in range(parts):
        hi = lo + base + (1 if i < extra else 0)
        yield lo, hi
        lo = hi


def estimate_outage(
    scheme: str,
    params: SystemParams | ValidatedParams,
    trials: int,
    seed: int,
    workers: int = 1,
) -> OutageEstimate:
    """Estimate the secrecy outage probability of one scheme at one operating point.

    The result is bit-identical for any worker count: blocks are derived
    from (seed, block index) and their outage counts are summed.
    """
    if scheme not in SCHEMES:
        raise ParameterError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    params = validate(params)
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials!r}")
    if scheme == "opportunistic" and params.n_relays < 1:
        raise ParameterError("opportunistic scheme needs n_relays >= 1")
    if not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise ParameterError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers!r}")

    n_blocks = -(-trials // BLOCK_TRIALS)
    tasks = [
        (scheme, params, seed, lo, hi, trials)
        # a few chunks per worker smooths load imbalance without affecting the sum
        for lo, hi in _block_ranges(n_blocks, parts=workers * 4 if workers > 1 else 1)
    ]
    if workers == 1 or len(tasks) == 1:
        outages = sum(_count_block_range(task) for task in tasks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outages = sum(pool.map(_count_block_range, tasks))

    ci_low, ci_high = wilson_interval(outages, trials, 0.95)
    return OutageEstimate(
        outages=outages,
        trials=trials,
        estimate=outages / trials,
        ci_low=ci_low,
        ci_high=ci_high,
        seed=seed,
    )


def sweep(
    schemes,
    params: SystemParams | ValidatedParams,
    snr_grid_db,
    relay_counts=(),
    trials: int = 10**6,
    seed: int = 0,
    *,
    secrecy_rates=None,
    workers: int = 1,
) -> SweepTable:
    """Estimate every (scheme, relay count, secrecy rate, SNR) combination.

    Row r runs with the derived seed derive_seed(seed, r), so rows are
    mutually independent and the table is reproducible as a whole.
    """
    scheme_set = sorted(set(schemes))
    if not scheme_set:
        raise ParameterError("schemes must not be empty")
    for scheme in scheme_set:
        if scheme not in SCHEMES:
            raise ParameterError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")

    grid = [float(v) for v in snr_grid_db]
    if not grid:
        raise ParameterError("snr_grid_db must not be empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ParameterError("snr_grid_db must be strictly increasing")

    counts = sorted(int(n) for n in relay_counts)
    if any(n < 1 for n in counts):
        raise ParameterError("relay_counts must contain positive integers")
    if len(set(counts)) != len(counts):
        raise ParameterError("relay_counts must not contain duplicates")
    if "opportunistic" in scheme_set and not counts:
        raise ParameterError("relay_counts must not be empty when the opportunistic scheme is swept")

    base = validate(params).params
    rates = sorted(float(r) for r in (secrecy_rates if secrecy_rates is not None else [base.secrecy_rate]))
    if not rates:
        raise ParameterError("secrecy_rates must not be empty")
    if len(set(rates)) != len(rates):
        raise ParameterError("secrecy_rates must not contain duplicates")

    rows = []
    row_index = 0
    for scheme in scheme_set:
        for n in [0] if scheme == "direct" else counts:
            for rate in rates:
                for snr_db in grid:
                    row_params = validate(
                        replace(base, gamma_s_db=snr_db, n_relays=n, secrecy_rate=rate)
                    )
                    estimate = estimate_outage(
                        scheme, row_params, trials, derive_seed(seed, row_index), workers=workers
                    )
                    rows.append(SweepRow(scheme, n, rate, snr_db, estimate))
                    row_index += 1
    return SweepTable(tuple(rows))
