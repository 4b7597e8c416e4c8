#!/usr/bin/env python3
"""Compare direct transmission with opportunistic relaying over relay counts.

Writes results/fig5.csv and results/fig5.svg relative to the current
directory unless the preset's output path is overridden.
"""

import argparse
from dataclasses import replace
from pathlib import Path

from crsec.cli import load_config, resolve_workers, run_experiment
from crsec.svgplot import emit_plot


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=None, help="override preset trial count")
    parser.add_argument("--seed", type=int, default=None, help="override preset seed")
    args = parser.parse_args()

    preset = Path(__file__).resolve().parents[1] / "configs" / "fig5.toml"
    spec = load_config(preset)
    if args.trials is not None:
        spec = replace(spec, trials=args.trials)
    if args.seed is not None:
        spec = replace(spec, seed=args.seed)

    workers = resolve_workers()
    table = run_experiment(spec, workers)
    svg_path = Path(spec.output_path).with_suffix(".svg")
    emit_plot(spec.output_path, svg_path)
    print(f"{len(table.rows)} rows -> {spec.output_path}, plot -> {svg_path}")


if __name__ == "__main__":
    main()
