"""Opportunistic amplify-and-forward relaying with selection combining.

The destination picks the relay with the highest end-to-end SINR at the
destination only; eavesdropper channel state is never consulted.  Both the
destination and the eavesdropper then combine their direct and relayed
copies by selection diversity.  Because the source occupies only the first
half slot, both capacities carry a 1/2 pre-log factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ParameterError, ValidatedParams
from .sampling import TrialBlock, TrialRealization
from .secrecy import SchemeOutcome, capacity_from_sinr, direct_sinr


@dataclass(frozen=True)
class RelayCandidate:
    """End-to-end SINRs a single relay offers at the destination and eavesdropper."""

    index: int
    sinr_d: float
    sinr_e: float


def relay_sinr(
    x_first_hop: float,
    x_second_hop: float,
    x_p_relay: float,
    x_p_receiver: float,
    alpha: float,
    gamma_s: float,
    gamma_p: float,
) -> float:
    """End-to-end SINR of one amplify-and-forward route.

    The amplification factor is absorbed into this form; with alpha = 0 it
    collapses to the harmonic-mean rule gamma_s*x1*x2/(x1+x2).  Defined as 0
    when both hop powers vanish (0/0 route).
    """
    num = x_first_hop * x_second_hop * gamma_s
    den = x_second_hop * (x_p_relay * alpha * gamma_p + 1.0) + x_first_hop * (
        x_p_receiver * alpha * gamma_p + 1.0
    )
    if den <= 0.0:  # only reachable when x1 = x2 = 0
        return 0.0
    return num / den


def select_best_relay(candidates: list[RelayCandidate]) -> RelayCandidate:
    """Argmax of sinr_d; ties go to the lowest index, sinr_e is never read."""
    if not candidates:
        raise ParameterError("relay selection needs at least one candidate")
    best = candidates[0]
    for cand in candidates[1:]:
        if cand.sinr_d > best.sinr_d:
            best = cand
    return best


def sdc_combine(sinr_a: float, sinr_b: float) -> float:
    """Selection diversity combining keeps the stronger branch."""
    return sinr_a if sinr_a >= sinr_b else sinr_b


def relaying_trial(realization: TrialRealization, params: ValidatedParams) -> SchemeOutcome:
    """Evaluate one opportunistic-relaying trial against the secrecy rate.

    The eavesdropper overhears the same selected relay; it never gets a
    private selection.
    """
    n = params.n_relays
    if n < 1:
        raise ParameterError("opportunistic relaying needs n_relays >= 1; use direct_trial")
    a = float(realization.alpha)
    gs, gp = params.gamma_s_lin, params.gamma_p_lin

    candidates = [
        RelayCandidate(
            index=i,
            sinr_d=relay_sinr(
                realization.x_si[i], realization.x_id[i],
                realization.x_pi[i], realization.x_pd, a, gs, gp,
            ),
            sinr_e=relay_sinr(
                realization.x_si[i], realization.x_ie[i],
                realization.x_pi[i], realization.x_pe, a, gs, gp,
            ),
        )
        for i in range(n)
    ]
    best = select_best_relay(candidates)

    combined_d = sdc_combine(direct_sinr(realization.x_sd, realization.x_pd, a, gs, gp), best.sinr_d)
    combined_e = sdc_combine(direct_sinr(realization.x_se, realization.x_pe, a, gs, gp), best.sinr_e)
    capacity_d = 0.5 * capacity_from_sinr(combined_d)
    capacity_e = 0.5 * capacity_from_sinr(combined_e)
    return SchemeOutcome(
        capacity_d=capacity_d,
        capacity_e=capacity_e,
        outage=capacity_d - capacity_e < params.secrecy_rate,
    )


def relaying_outcomes(block: TrialBlock, params: ValidatedParams):
    """Vectorized relaying_trial over a block: (capacity_d, capacity_e, outage).

    Expressions mirror the scalar path term for term so both routes agree
    bit-for-bit on the same realization.
    """
    n = params.n_relays
    if n < 1:
        raise ParameterError("opportunistic relaying needs n_relays >= 1; use direct_outcomes")
    gs, gp = params.gamma_s_lin, params.gamma_p_lin
    a = block.alpha
    a_col = a[:, None]

    interf_relay = block.x_pi * a_col * gp + 1.0
    num_d = block.x_si * block.x_id * gs
    den_d = block.x_id * interf_relay + block.x_si * (block.x_pd * a * gp + 1.0)[:, None]
    sinr_d = np.divide(num_d, den_d, out=np.zeros_like(num_d), where=den_d > 0.0)

    num_e = block.x_si * block.x_ie * gs
    den_e = block.x_ie * interf_relay + block.x_si * (block.x_pe * a * gp + 1.0)[:, None]
    sinr_e = np.divide(num_e, den_e, out=np.zeros_like(num_e), where=den_e > 0.0)

    best = np.argmax(sinr_d, axis=1)  # ties resolve to the lowest index
    rows = np.arange(len(block))
    combined_d = np.maximum(block.x_sd * gs / (a * block.x_pd * gp + 1.0), sinr_d[rows, best])
    combined_e = np.maximum(block.x_se * gs / (a * block.x_pe * gp + 1.0), sinr_e[rows, best])

    capacity_d = 0.5 * np.log2(1.0 + combined_d)
    capacity_e = 0.5 * np.log2(1.0 + combined_e)
    return capacity_d, capacity_e, capacity_d - capacity_e < params.secrecy_rate
