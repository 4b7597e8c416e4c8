"""Monte Carlo secrecy-outage estimation for sensing-based cognitive radio.

The package simulates a secondary link that transmits only when spectrum
sensing declares the primary band idle.  Missed detections leave primary
interference on the air, and every channel fades independently (Rayleigh,
so channel powers are exponential).  Supported schemes:

* ``direct`` — source talks straight to the destination;
* ``opportunistic`` — amplify-and-forward through the best of N relays,
  chosen on the legitimate link's SINR.

Estimates come with Wilson confidence intervals, runs are reproducible
bit-for-bit across any worker count, and a closed form for the direct
scheme under perfect sensing anchors the whole pipeline.
"""

from .estimator import (
    SCHEMES,
    OutageEstimate,
    SweepRow,
    SweepTable,
    direct_outage_closed_form,
    direct_outage_floor,
    estimate_outage,
    sweep,
    wilson_interval,
)
from .params import (
    LinkBudget,
    ParameterError,
    SystemParams,
    ValidatedParams,
    db_to_linear,
    validate,
)
from .relaying import RelayCandidate, relay_sinr, relaying_trial, sdc_combine, select_best_relay
from .sampling import (
    BLOCK_TRIALS,
    RandomStream,
    TrialBlock,
    TrialRealization,
    derive_seed,
    posterior_busy_given_detected_idle,
    sample_block,
    sample_channel_power,
    sample_interference_state,
    sample_trial,
)
from .secrecy import SchemeOutcome, capacity_from_sinr, direct_sinr, direct_trial
from .svgplot import PlotDataError, emit_plot
from .tableio import CSV_HEADER, TableFormatError, read_csv, write_csv

__version__ = "0.1.0"

__all__ = [
    "BLOCK_TRIALS",
    "CSV_HEADER",
    "LinkBudget",
    "OutageEstimate",
    "ParameterError",
    "PlotDataError",
    "RandomStream",
    "RelayCandidate",
    "SCHEMES",
    "SchemeOutcome",
    "SweepRow",
    "SweepTable",
    "SystemParams",
    "TableFormatError",
    "TrialBlock",
    "TrialRealization",
    "ValidatedParams",
    "capacity_from_sinr",
    "db_to_linear",
    "derive_seed",
    "direct_outage_closed_form",
    "direct_outage_floor",
    "direct_sinr",
    "direct_trial",
    "emit_plot",
    "estimate_outage",
    "posterior_busy_given_detected_idle",
    "read_csv",
    "relay_sinr",
    "relaying_trial",
    "sample_block",
    "sample_channel_power",
    "sample_interference_state",
    "sample_trial",
    "sdc_combine",
    "select_best_relay",
    "sweep",
    "validate",
    "wilson_interval",
    "write_csv",
]
