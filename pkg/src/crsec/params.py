"""Scenario parameters and validation for the secrecy outage simulator.

Conventions: SNRs enter in dB at the configuration surface and are converted
to linear scale exactly once, at validation time.  Every fading link is
Rayleigh, so a channel power is exponential with mean equal to the link's
sigma^2.  All types here are immutable after validation and safe to share
across concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields


class ParameterError(ValueError):
    """A scenario parameter violates its documented range."""


def db_to_linear(x_db: float) -> float:
    """Convert a dB value to linear scale: 10**(x/10)."""
    x = float(x_db)
    if not math.isfinite(x):
        raise ParameterError(f"dB value must be finite, got {x_db!r}")
    return 10.0 ** (x / 10.0)


@dataclass(frozen=True)
class LinkBudget:
    """Mean channel powers (Rayleigh variances), one value per link class.

    Relay-class values are shared by all relays.  A relay-class value left
    as None defaults to its direct-path analogue: si/id -> sd, pi -> pd,
    ie -> se.
    """

    sigma2_sd: float
    sigma2_se: float
    sigma2_pd: float
    sigma2_pe: float
    sigma2_si: float | None = None
    sigma2_id: float | None = None
    sigma2_pi: float | None = None
    sigma2_ie: float | None = None

    def __post_init__(self):
        analogues = {
            "sigma2_si": self.sigma2_sd,
            "sigma2_id": self.sigma2_sd,
            "sigma2_pi": self.sigma2_pd,
            "sigma2_ie": self.sigma2_se,
        }
        for name in (f.name for f in fields(self)):
            value = getattr(self, name)
            if value is None:
                value = analogues[name]
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class SystemParams:
    """Full scenario description for one simulated operating point."""

    p0: float                    # probability the licensed band is idle
    gamma_s_db: float            # cognitive transmit SNR, dB
    gamma_p_db: float            # primary transmit SNR, dB
    link_variances: LinkBudget
    secrecy_rate: float          # target confidential rate, bit/s/Hz
    n_relays: int = 0            # 0 = direct transmission only
    # IEEE 802.22 bounds the detector at Pd > 0.9, Pf < 0.1; the boundary
    # values are the defaults and both are overridable.
    pd: float = 0.9
    pf: float = 0.1


@dataclass(frozen=True)
class ValidatedParams:
    """A SystemParams that passed validate(), plus precomputed linear SNRs."""

    params: SystemParams
    gamma_s_lin: float
    gamma_p_lin: float

    @property
    def p0(self) -> float:
        return self.params.p0

    @property
    def pd(self) -> float:
        return self.params.pd

    @property
    def pf(self) -> float:
        return self.params.pf

    @property
    def n_relays(self) -> int:
        return self.params.n_relays

    @property
    def secrecy_rate(self) -> float:
        return self.params.secrecy_rate

    @property
    def link(self) -> LinkBudget:
        return self.params.link_variances


def _require_probability(name: str, value) -> None:
    ok = isinstance(value, (int, float)) and math.isfinite(value) and 0.0 <= value <= 1.0
    if not ok:
        raise ParameterError(f"{name} must be a probability in [0, 1], got {value!r}")


def validate(params: SystemParams | ValidatedParams) -> ValidatedParams:
    """Check every scenario invariant and attach linear-scale SNRs.

    Idempotent: an already-validated object is returned unchanged.  Each
    violated invariant raises a ParameterError naming the offending field.
    """
    if isinstance(params, ValidatedParams):
        return params

    for name in ("p0", "pd", "pf"):
        _require_probability(name, getattr(params, name))
    if params.pd < params.pf:
        raise ParameterError(
            f"pd must be >= pf (got pd={params.pd}, pf={params.pf}); a detector "
            "below the false-alarm line is miscalibrated"
        )

    for name in ("gamma_s_db", "gamma_p_db"):
        value = getattr(params, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value)):
            raise ParameterError(f"{name} must be a finite dB value, got {value!r}")

    for field in fields(LinkBudget):
        value = getattr(params.link_variances, field.name)
        if not (isinstance(value, float) and math.isfinite(value) and value > 0.0):
            raise ParameterError(f"{field.name} must be strictly positive, got {value!r}")

    if not isinstance(params.n_relays, int) or params.n_relays < 0:
        raise ParameterError(f"n_relays must be a non-negative integer, got {params.n_relays!r}")

    rate = params.secrecy_rate
    if not (isinstance(rate, (int, float)) and math.isfinite(rate) and rate > 0.0):
        raise ParameterError(f"secrecy_rate must be strictly positive, got {rate!r}")

    p_detected_idle = params.p0 * (1.0 - params.pf) + (1.0 - params.p0) * (1.0 - params.pd)
    if p_detected_idle <= 0.0:
        raise ParameterError(
            "p0/pd/pf give the detected-idle event zero probability "
            f"(p0={params.p0}, pd={params.pd}, pf={params.pf}); nothing to condition on"
        )

    return ValidatedParams(
        params=params,
        gamma_s_lin=db_to_linear(params.gamma_s_db),
        gamma_p_lin=db_to_linear(params.gamma_p_db),
    )
