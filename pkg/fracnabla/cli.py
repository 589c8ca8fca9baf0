#!/usr/bin/env python
"""Command-line front end: ``fracnabla {weights,table1,table2,frac-deriv,audit}``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from typing import Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from fracnabla import api
from fracnabla.formats import open_output, read_gridfn_csv, render_markdown, write_rows
from fracnabla.fractional import (
    exact_frac_deriv_power,
    exact_frac_deriv_power_log,
    frac_extended_nabla,
    frac_nabla,
    power_function,
    power_log_function,
)
from fracnabla.grid import UniformGrid, sample
from fracnabla.pipelines import CSV_HEADER, SUITES
from fracnabla.pipelines.tables import TABLE1_DEFAULTS, TABLE2_DEFAULTS
from fracnabla.specfn import gl_weights
from fracnabla.types import (
    CsvParseError,
    DomainError,
    FracNablaError,
    PreconditionError,
    RhsDomainError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2
EXIT_IO = 3

Subcommand = Literal["weights", "table1", "table2", "frac-deriv", "audit"]


class RunConfig(BaseModel):
    """Validated arguments of one CLI invocation."""

    model_config = ConfigDict(extra="forbid")

    subcommand: Subcommand
    alpha: float = Field(default=0.5, gt=0.0, lt=1.0)
    betas: list[float] = Field(default_factory=lambda: [0.1])
    mu: Optional[float] = None
    h_exponents: list[int] = Field(default_factory=lambda: [6])
    n: int = Field(default=10, ge=0)
    output_path: str = "-"
    output_format: Literal["csv", "md"] = "csv"
    newton_tol: Optional[float] = Field(default=None, gt=0.0)
    seed: Optional[int] = None
    scheme: Optional[Literal["explicit", "implicit"]] = None
    function: Literal["power", "power-log", "csv"] = "power"
    input_path: Optional[str] = None
    mode: Literal["nabla-alpha", "extended-alpha"] = "nabla-alpha"
    refine: int = Field(default=1, ge=1)
    suite: Optional[str] = None

    @field_validator("betas")
    @classmethod
    def _check_betas(cls, value: list[float]) -> list[float]:
        if not value:
            raise ValueError("at least one --beta is required")
        for beta in value:
            if not 0.0 < beta < 1.0:
                raise ValueError(f"beta must lie in (0, 1), got {beta}")
        return value

    @field_validator("h_exponents")
    @classmethod
    def _check_exponents(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("at least one --h-exp is required")
        if any(m < 1 for m in value):
            raise ValueError(f"grid exponents must be >= 1, got {value}")
        return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracnabla",
        description="Fractional nabla operators on uniform grids: weights, convergence tables, audits.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default="-", help="Output path; '-' writes to stdout (default).")

    p = sub.add_parser("weights", help="Write Gruenwald-Letnikov weights j,w_j.")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--n", type=int, default=10, help="Largest index j (default: 10).")
    common(p)

    p = sub.add_parser("table1", help="Hoelderian errors of nabla_h^alpha (t^mu ln t).")
    p.add_argument("--mu", type=float, default=TABLE1_DEFAULTS["mu"])
    p.add_argument("--alpha", type=float, default=TABLE1_DEFAULTS["alpha"])
    p.add_argument("--beta", type=float, default=TABLE1_DEFAULTS["beta"])
    p.add_argument("--h-exp", type=int, action="append", dest="h_exp", help="h = 2^-m; repeatable.")
    p.add_argument("--format", choices=["csv", "md"], default="csv")
    common(p)

    p = sub.add_parser("table2", help="Hoelderian errors of the benchmark FODE solution.")
    p.add_argument("--alpha", type=float, default=TABLE2_DEFAULTS["alpha"])
    p.add_argument("--beta", type=float, action="append", help="Repeatable (default: 0.1 0.01).")
    p.add_argument("--h-exp", type=int, action="append", dest="h_exp", help="h = 2^-m; repeatable.")
    p.add_argument("--scheme", choices=["explicit", "implicit"], default=None)
    p.add_argument("--newton-tol", type=float, default=None)
    p.add_argument("--format", choices=["csv", "md"], default="csv")
    common(p)

    p = sub.add_parser("frac-deriv", help="Apply nabla_h^alpha or A_h^alpha to a sampled function.")
    p.add_argument("--function", choices=["power", "power-log", "csv"], default="power")
    p.add_argument("--input", default=None, help="t,value CSV for --function csv.")
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--h-exp", type=int, action="append", dest="h_exp")
    p.add_argument("--mode", choices=["nabla-alpha", "extended-alpha"], default="nabla-alpha")
    p.add_argument(
        "--refine", type=int, default=1, help="Evaluation points per step in extended mode."
    )
    common(p)

    p = sub.add_parser("audit", help="Run a built-in audit suite; exit 1 if any case fails.")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=None)
    common(p)
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {"subcommand": args.subcommand, "output_path": args.out}
    if args.subcommand == "weights":
        values.update(alpha=args.alpha, n=args.n)
    elif args.subcommand == "table1":
        values.update(
            mu=args.mu,
            alpha=args.alpha,
            betas=[args.beta],
            h_exponents=args.h_exp or list(TABLE1_DEFAULTS["h_exponents"]),
            output_format=args.format,
        )
    elif args.subcommand == "table2":
        values.update(
            alpha=args.alpha,
            betas=args.beta if args.beta is not None else list(TABLE2_DEFAULTS["betas"]),
            h_exponents=args.h_exp or list(TABLE2_DEFAULTS["h_exponents"]),
            scheme=args.scheme,
            newton_tol=args.newton_tol,
            output_format=args.format,
        )
    elif args.subcommand == "frac-deriv":
        values.update(
            function=args.function,
            input_path=args.input,
            mu=args.mu,
            alpha=args.alpha,
            h_exponents=args.h_exp or [6],
            mode=args.mode,
            refine=args.refine,
        )
    else:
        values.update(suite=args.suite, seed=args.seed)
    return RunConfig(**values)


def _write_table(config: RunConfig, rows) -> None:
    if config.output_format == "md":
        with open_output(config.output_path) as handle:
            handle.write(render_markdown(rows))
    else:
        write_rows(config.output_path, CSV_HEADER, (row.csv_row() for row in rows))


def cmd_weights(config: RunConfig) -> int:
    weights = gl_weights(config.alpha, config.n)
    write_rows(config.output_path, ("j", "w_j"), enumerate(weights.w.tolist()))
    return EXIT_OK


def cmd_table1(config: RunConfig) -> int:
    rows = api.reproduce_table1(
        mu=config.mu if config.mu is not None else TABLE1_DEFAULTS["mu"],
        alpha=config.alpha,
        beta=config.betas[0],
        h_exponents=config.h_exponents,
    )
    _write_table(config, rows)
    return EXIT_OK


def cmd_table2(config: RunConfig) -> int:
    solver = api.get_settings().solver
    if config.newton_tol is not None:
        solver = replace(solver, newton_tol=config.newton_tol)
    rows = api.reproduce_table2(
        alpha=config.alpha,
        betas=config.betas,
        h_exponents=config.h_exponents,
        scheme=config.scheme,
        solver=solver,
    )
    _write_table(config, rows)
    return EXIT_OK


def cmd_frac_deriv(config: RunConfig) -> int:
    alpha = config.alpha
    exact = None
    if config.function == "csv":
        if config.input_path is None:
            raise DomainError("--function csv needs --input")
        g = read_gridfn_csv(config.input_path)
    else:
        mu = config.mu if config.mu is not None else 1.5
        grid = UniformGrid.from_exponent(config.h_exponents[0])
        if config.function == "power":
            g = sample(power_function(mu), grid)

            def exact(x):
                return exact_frac_deriv_power(mu, alpha, x)
        else:
            g = sample(power_log_function(mu), grid)

            def exact(x):
                return exact_frac_deriv_power_log(mu, alpha, x)

    if config.mode == "nabla-alpha":
        points = g.nodes
        approx = frac_nabla(g, alpha).values
    else:
        points = g.grid.refine(config.refine).nodes
        points = points[points <= 1.0]
        approx = np.asarray(frac_extended_nabla(g, alpha, points))

    if exact is None:
        write_rows(config.output_path, ("t", "approx"), zip(points.tolist(), approx.tolist()))
    else:
        reference = np.asarray(exact(points))
        errors = np.abs(approx - reference)
        write_rows(
            config.output_path,
            ("t", "approx", "exact", "pointwise_error"),
            zip(points.tolist(), approx.tolist(), reference.tolist(), errors.tolist()),
        )
    return EXIT_OK


def cmd_audit(config: RunConfig) -> int:
    result = api.audit(config.suite, seed=config.seed)
    write_rows(config.output_path, result.header, result.rows)
    if not result.passed:
        logger.error(f"audit {result.name}: {result.failures} of {len(result.rows)} cases failed")
        return EXIT_NUMERIC
    return EXIT_OK


COMMANDS = {
    "weights": cmd_weights,
    "table1": cmd_table1,
    "table2": cmd_table2,
    "frac-deriv": cmd_frac_deriv,
    "audit": cmd_audit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    if args.verbose:
        logging.getLogger("fracnabla").setLevel(logging.DEBUG)

    try:
        config = to_config(args)
    except ValidationError as exc:
        print(f"fracnabla: invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[config.subcommand](config)
    except CsvParseError as exc:
        print(f"fracnabla: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"fracnabla: cannot access {exc.filename or config.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    except RhsDomainError as exc:
        logger.error(f"{config.subcommand} failed: {exc}")
        print(f"fracnabla: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DomainError, PreconditionError) as exc:
        print(f"fracnabla: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FracNablaError as exc:
        logger.error(f"{config.subcommand} failed: {exc}")
        print(f"fracnabla: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
