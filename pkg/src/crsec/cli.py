"""Command-line front end: config loading, sweep runs, plotting, oracle lookup.

Exit codes: 0 success, 2 configuration or validation error, 3 I/O error.
Worker count comes from the CRSEC_WORKERS environment variable and
defaults to all available cores.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, replace

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .estimator import SCHEMES, SweepTable, direct_outage_closed_form, sweep
from .params import LinkBudget, ParameterError, SystemParams, db_to_linear, validate
from .svgplot import PlotDataError, emit_plot
from .tableio import TableFormatError, write_csv

WORKERS_ENV_VAR = "CRSEC_WORKERS"


class ConfigError(ValueError):
    """Raised when an experiment configuration file is unusable."""


@dataclass(frozen=True)
class ExperimentSpec:
    """A fully resolved sweep request, ready to hand to the estimator."""

    params: SystemParams
    schemes: tuple[str, ...]
    snr_grid_db: tuple[float, ...]
    relay_counts: tuple[int, ...]
    secrecy_rates: tuple[float, ...]
    trials: int
    seed: int
    output_path: str

    def __post_init__(self):
        if not self.schemes:
            raise ConfigError("schemes must not be empty")
        for scheme in self.schemes:
            if scheme not in SCHEMES:
                raise ConfigError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
        if not self.snr_grid_db:
            raise ConfigError("snr_grid_db must not be empty")
        if any(b <= a for a, b in zip(self.snr_grid_db, self.snr_grid_db[1:])):
            raise ConfigError("snr_grid_db must be strictly increasing")
        if not self.secrecy_rates:
            raise ConfigError("secrecy_rates must not be empty")
        if "opportunistic" in self.schemes and not self.relay_counts:
            raise ConfigError("relay_counts is required when schemes includes 'opportunistic'")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not self.output_path:
            raise ConfigError("output_path must not be empty")


def _reject_unknown(section: str, table: dict, known: set[str]) -> None:
    unknown = sorted(set(table) - known)
    if unknown:
        listed = ", ".join(f"{section}.{key}" for key in unknown)
        raise ConfigError(f"unknown key(s): {listed}")


def _get(section: str, table: dict, key: str):
    if key not in table:
        raise ConfigError(f"missing required key {section}.{key}")
    return table[key]


def _number(section: str, key: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
    return float(value)


def _integer(section: str, key: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{section}.{key} must be an integer, got {value!r}")
    return value


def _number_list(section: str, key: str, value) -> tuple[float, ...]:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{section}.{key} must be a non-empty list of numbers")
    return tuple(_number(section, key, v) for v in value)


def _integer_list(section: str, key: str, value) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{section}.{key} must be a non-empty list of integers")
    return tuple(_integer(section, key, v) for v in value)


def _string_list(section: str, key: str, value) -> tuple[str, ...]:
    if not isinstance(value, list) or not value or not all(isinstance(v, str) for v in value):
        raise ConfigError(f"{section}.{key} must be a non-empty list of strings")
    return tuple(value)


_PARAMS_KEYS = {
    "p0", "pd", "pf", "gamma_p_db",
    "sigma2_sd", "sigma2_se", "sigma2_pd", "sigma2_pe",
    "sigma2_si", "sigma2_id", "sigma2_pi", "sigma2_ie",
}
_SWEEP_KEYS = {
    "schemes", "snr_grid_db", "secrecy_rates", "relay_counts",
    "trials", "seed", "output_path",
}


def load_config(path: str | os.PathLike) -> ExperimentSpec:
    """Parse a TOML experiment file; unknown keys are errors, not warnings."""
    with open(path, "rb") as fh:
        try:
            doc = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"invalid TOML in {path}: {exc}") from None

    _reject_unknown("top level", doc, {"params", "sweep"})
    for section in ("params", "sweep"):
        if section not in doc:
            raise ConfigError(f"missing required section [{section}]")
        if not isinstance(doc[section], dict):
            raise ConfigError(f"[{section}] must be a table")
    p, s = doc["params"], doc["sweep"]
    _reject_unknown("params", p, _PARAMS_KEYS)
    _reject_unknown("sweep", s, _SWEEP_KEYS)

    sigma2_sd = _number("params", "sigma2_sd", _get("params", p, "sigma2_sd"))
    sigma2_se = _number("params", "sigma2_se", _get("params", p, "sigma2_se"))
    sigma2_pd = _number("params", "sigma2_pd", _get("params", p, "sigma2_pd"))
    link = LinkBudget(
        sigma2_sd=sigma2_sd,
        sigma2_se=sigma2_se,
        sigma2_pd=sigma2_pd,
        sigma2_pe=_number("params", "sigma2_pe", _get("params", p, "sigma2_pe")),
        # relay-class variances default to their direct-path analogues
        sigma2_si=_number("params", "sigma2_si", p["sigma2_si"]) if "sigma2_si" in p else sigma2_sd,
        sigma2_id=_number("params", "sigma2_id", p["sigma2_id"]) if "sigma2_id" in p else sigma2_sd,
        sigma2_pi=_number("params", "sigma2_pi", p["sigma2_pi"]) if "sigma2_pi" in p else sigma2_pd,
        sigma2_ie=_number("params", "sigma2_ie", p["sigma2_ie"]) if "sigma2_ie" in p else sigma2_se,
    )

    schemes = _string_list("sweep", "schemes", _get("sweep", s, "schemes"))
    snr_grid_db = _number_list("sweep", "snr_grid_db", _get("sweep", s, "snr_grid_db"))
    secrecy_rates = _number_list("sweep", "secrecy_rates", _get("sweep", s, "secrecy_rates"))
    relay_counts = _integer_list("sweep", "relay_counts", s["relay_counts"]) if "relay_counts" in s else ()
    output_path = _get("sweep", s, "output_path")
    if not isinstance(output_path, str):
        raise ConfigError(f"sweep.output_path must be a string, got {output_path!r}")

    params = SystemParams(
        p0=_number("params", "p0", _get("params", p, "p0")),
        gamma_s_db=float(snr_grid_db[0]),
        gamma_p_db=_number("params", "gamma_p_db", _get("params", p, "gamma_p_db")),
        link_variances=link,
        secrecy_rate=float(min(secrecy_rates)),
        n_relays=max(relay_counts) if relay_counts else 0,
        pd=_number("params", "pd", p["pd"]) if "pd" in p else 0.9,
        pf=_number("params", "pf", p["pf"]) if "pf" in p else 0.1,
    )
    validate(params)

    return ExperimentSpec(
        params=params,
        schemes=schemes,
        snr_grid_db=snr_grid_db,
        relay_counts=relay_counts,
        secrecy_rates=secrecy_rates,
        trials=_integer("sweep", "trials", s["trials"]) if "trials" in s else 10**6,
        seed=_integer("sweep", "seed", s["seed"]) if "seed" in s else 0,
        output_path=output_path,
    )


def resolve_workers() -> int:
    """Worker count from CRSEC_WORKERS, defaulting to all available cores."""
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV_VAR} must be a positive integer, got {raw!r}") from None
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV_VAR} must be a positive integer, got {raw!r}")
    return workers


def _echo_spec(spec: ExperimentSpec, workers: int, stream) -> None:
    p = spec.params
    v = p.link_variances
    print(f"schemes        = {', '.join(spec.schemes)}", file=stream)
    print(f"snr_grid_db    = {', '.join(format(x, 'g') for x in spec.snr_grid_db)}", file=stream)
    if spec.relay_counts:
        print(f"relay_counts   = {', '.join(str(n) for n in spec.relay_counts)}", file=stream)
    print(f"secrecy_rates  = {', '.join(format(r, 'g') for r in spec.secrecy_rates)}", file=stream)
    print(f"trials         = {spec.trials}", file=stream)
    print(f"seed           = {spec.seed}", file=stream)
    print(f"workers        = {workers}", file=stream)
    print(f"output_path    = {spec.output_path}", file=stream)
    print(f"p0, pd, pf     = {p.p0:g}, {p.pd:g}, {p.pf:g}", file=stream)
    print(f"gamma_p_db     = {p.gamma_p_db:g}", file=stream)
    print(
        "sigma2         = "
        f"sd:{v.sigma2_sd:g} se:{v.sigma2_se:g} pd:{v.sigma2_pd:g} pe:{v.sigma2_pe:g} "
        f"si:{v.sigma2_si:g} id:{v.sigma2_id:g} pi:{v.sigma2_pi:g} ie:{v.sigma2_ie:g}",
        file=stream,
    )


def run_experiment(spec: ExperimentSpec, workers: int | None = None) -> SweepTable:
    """Run the sweep described by spec and write its CSV to spec.output_path."""
    if workers is None:
        workers = resolve_workers()
    table = sweep(
        spec.schemes,
        spec.params,
        spec.snr_grid_db,
        spec.relay_counts,
        spec.trials,
        spec.seed,
        secrecy_rates=spec.secrecy_rates,
        workers=workers,
    )
    parent = os.path.dirname(os.path.abspath(spec.output_path))
    os.makedirs(parent, exist_ok=True)
    write_csv(table, spec.output_path)
    return table


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crsec",
        description="Secrecy outage Monte Carlo for sensing-based cognitive radio links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a sweep from a TOML experiment file")
    run_p.add_argument("--config", required=True, help="path to the experiment TOML")
    run_p.add_argument("--trials", type=int, default=None, help="override sweep.trials")
    run_p.add_argument("--seed", type=int, default=None, help="override sweep.seed")
    run_p.add_argument("--output", default=None, help="override sweep.output_path")

    plot_p = sub.add_parser("plot", help="render a sweep CSV to an SVG plot")
    plot_p.add_argument("--input", required=True, help="sweep CSV to read")
    plot_p.add_argument("--output", required=True, help="SVG file to write")

    oracle_p = sub.add_parser(
        "oracle", help="closed-form direct-link outage (perfect sensing, no interference)"
    )
    oracle_p.add_argument("--gamma-s-db", type=float, required=True, help="transmit SNR in dB")
    oracle_p.add_argument("--rs", type=float, required=True, help="secrecy rate in bit/s/Hz")
    oracle_p.add_argument("--sigma-sd", type=float, required=True, help="main-link mean channel power")
    oracle_p.add_argument("--sigma-se", type=float, required=True, help="eavesdropper-link mean channel power")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            spec = load_config(args.config)
            if args.trials is not None:
                spec = replace(spec, trials=args.trials)
            if args.seed is not None:
                spec = replace(spec, seed=args.seed)
            if args.output is not None:
                spec = replace(spec, output_path=args.output)
            workers = resolve_workers()
            _echo_spec(spec, workers, sys.stderr)
            run_experiment(spec, workers)
        elif args.command == "plot":
            emit_plot(args.input, args.output)
        else:
            value = direct_outage_closed_form(
                db_to_linear(args.gamma_s_db), args.sigma_sd, args.sigma_se, args.rs
            )
            print(format(value, ".17g"))
    except (ConfigError, ParameterError, TableFormatError, PlotDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
