"""Instantaneous capacities and the outage verdict for direct transmission.

Secrecy is modeled information-theoretically: the confidential rate is
sustained iff the legitimate capacity exceeds the eavesdropper capacity by
at least the secrecy rate.  With the codeword rate pinned to the legitimate
capacity, "wiretap capacity above the redundancy rate" and "capacity gap
below the secrecy rate" are the same event, so only the gap test appears.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ParameterError, ValidatedParams
from .sampling import TrialBlock, TrialRealization


@dataclass(frozen=True)
class SchemeOutcome:
    """Per-trial capacities (bit/s/Hz) and the secrecy outage verdict."""

    capacity_d: float
    capacity_e: float
    outage: bool


def capacity_from_sinr(sinr: float) -> float:
    """Shannon capacity log2(1 + SINR) at unit bandwidth."""
    if not sinr >= 0.0:
        raise ParameterError(f"SINR must be non-negative, got {sinr!r}")
    # numpy's log2 rather than math.log2: the vectorized block kernels use
    # the ufunc, and the two libraries can disagree by one ulp, which would
    # break the bit-for-bit agreement between the scalar and block routes
    return float(np.log2(1.0 + sinr))


def direct_sinr(x: float, x_p: float, alpha: float, gamma_s: float, gamma_p: float) -> float:
    """Single-hop SINR: desired power over primary interference plus unit noise."""
    return x * gamma_s / (alpha * x_p * gamma_p + 1.0)


def direct_trial(realization: TrialRealization, params: ValidatedParams) -> SchemeOutcome:
    """Evaluate one direct-transmission trial against the secrecy rate."""
    a = float(realization.alpha)
    gs, gp = params.gamma_s_lin, params.gamma_p_lin
    capacity_d = capacity_from_sinr(direct_sinr(realization.x_sd, realization.x_pd, a, gs, gp))
    capacity_e = capacity_from_sinr(direct_sinr(realization.x_se, realization.x_pe, a, gs, gp))
    return SchemeOutcome(
        capacity_d=capacity_d,
        capacity_e=capacity_e,
        outage=capacity_d - capacity_e < params.secrecy_rate,
    )


def direct_outcomes(block: TrialBlock, params: ValidatedParams):
    """Vectorized direct_trial over a block: (capacity_d, capacity_e, outage).

    Expressions mirror the scalar path term for term so both routes agree
    bit-for-bit on the same realization.
    """
    gs, gp = params.gamma_s_lin, params.gamma_p_lin
    a = block.alpha
    sinr_d = block.x_sd * gs / (a * block.x_pd * gp + 1.0)
    sinr_e = block.x_se * gs / (a * block.x_pe * gp + 1.0)
    capacity_d = np.log2(1.0 + sinr_d)
    capacity_e = np.log2(1.0 + sinr_e)
    return capacity_d, capacity_e, capacity_d - capacity_e < params.secrecy_rate
