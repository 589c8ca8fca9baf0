#!/usr/bin/env python
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from fracnabla import reproduce_table1
from fracnabla.formats import write_rows
from fracnabla.fractional import exact_frac_deriv_power_log, frac_extended_nabla, power_log_function
from fracnabla.grid import UniformGrid, sample


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Write the CSV data behind the exact-vs-discrete comparison figure."
    )
    parser.add_argument("--output-dir", type=Path, default=Path("figure_data"))
    parser.add_argument("--mu", type=float, default=1.5)
    parser.add_argument("--alpha", type=float, default=0.3)
    parser.add_argument("--beta", type=float, default=0.1)
    parser.add_argument("--h-exp", type=int, default=4, help="Grid of the curve plot (default: 4).")
    parser.add_argument("--points", type=int, default=1001, help="Dense abscissa size.")
    return parser.parse_args()


def _curve(args: argparse.Namespace, output: Path) -> None:
    grid = UniformGrid.from_exponent(args.h_exp)
    g = sample(power_log_function(args.mu), grid)
    xs = np.linspace(0.0, 1.0, args.points)
    approx = frac_extended_nabla(g, args.alpha, xs)
    exact = exact_frac_deriv_power_log(args.mu, args.alpha, xs)
    write_rows(output, ("x", "exact", "extended"), zip(xs.tolist(), exact.tolist(), approx.tolist()))


def main() -> None:
    args = parse_args()
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    args.output_dir.mkdir(parents=True, exist_ok=True)

    curve_path = args.output_dir / "curve.csv"
    _curve(args, curve_path)
    logging.info("Curve data written to %s", curve_path.resolve())

    rows = reproduce_table1(mu=args.mu, alpha=args.alpha, beta=args.beta)
    errors_path = args.output_dir / "errors.csv"
    write_rows(errors_path, ("h", "error"), ((row.h, row.error) for row in rows))
    logging.info("Error data written to %s", errors_path.resolve())


if __name__ == "__main__":
    main()
