from __future__ import annotations

import csv
import io
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO, Union

import numpy as np

from fracnabla.grid import GridFn, UniformGrid
from fracnabla.types import CsvParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
STDOUT = "-"


def format_float(value: float) -> str:
    """17 significant digits, lossless for binary64."""
    return format(float(value), ".17g")


@contextmanager
def open_output(path: PathLike) -> Iterator[TextIO]:
    """Yield a text handle for ``path``; ``"-"`` means stdout."""
    if str(path) == STDOUT:
        yield sys.stdout
        sys.stdout.flush()
        return
    target = Path(path)
    logger.debug(f"Opening output file: {target}")
    with target.open("w", encoding="utf-8", newline="") as handle:
        yield handle


def write_rows(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    """Write a CSV table; floats use :func:`format_float`, everything else ``str``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    count = 0
    for row in rows:
        writer.writerow(
            [format_float(cell) if isinstance(cell, (float, np.floating)) else str(cell) for cell in row]
        )
        count += 1
    with open_output(path) as handle:
        handle.write(buffer.getvalue())
    logger.info(f"Wrote {count} rows to {path}")


def write_gridfn_csv(g: GridFn, path: PathLike) -> None:
    write_rows(path, ("t", "value"), zip(g.nodes.tolist(), g.values.real.tolist()))


def read_gridfn_csv(path: PathLike) -> GridFn:
    """Read a ``t,value`` CSV laid out on a uniform grid starting at t = 0."""
    source = Path(path)
    logger.info(f"Reading grid function from {source}")
    with source.open("r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [cell.strip() for cell in header] != ["t", "value"]:
            raise CsvParseError(f"expected header 't,value', got {header!r}", line=1)
        ts: list[float] = []
        vs: list[float] = []
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise CsvParseError(f"expected 2 columns, got {len(row)}", line=line)
            try:
                ts.append(float(row[0]))
                vs.append(float(row[1]))
            except ValueError as exc:
                raise CsvParseError(f"not a number: {exc}", line=line) from exc

    if len(ts) < 2:
        raise CsvParseError("need at least two nodes", line=len(ts) + 1)
    grid = UniformGrid(ts[1]) if 0.0 < ts[1] < 1.0 else None
    if grid is None or len(ts) != grid.n + 1:
        raise CsvParseError(
            f"nodes do not form a uniform grid on [0, 1] with h={ts[1]!r}", line=3
        )
    for k, t in enumerate(ts):
        if abs(t - grid.nodes[k]) > 1e-12:
            # +2: header line and 1-based numbering
            raise CsvParseError(f"node {k} is {t!r}, expected {grid.nodes[k]!r}", line=k + 2)
    return GridFn(grid, np.asarray(vs, dtype=float))
