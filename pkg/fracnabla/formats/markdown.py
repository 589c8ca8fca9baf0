from __future__ import annotations

from typing import Iterable, Protocol


class _Row(Protocol):
    h: float
    beta: float
    error: float
    exponent: int | None


def format_step(h: float, exponent: int | None) -> str:
    return f"2^-{exponent}" if exponent is not None else format(h, ".17g")


def render_markdown(rows: Iterable[_Row]) -> str:
    """Render convergence rows as a markdown table, one error column per beta."""
    rows = list(rows)
    betas: list[float] = []
    steps: list[tuple[float, int | None]] = []
    cells: dict[tuple[float, float], float] = {}
    for row in rows:
        if row.beta not in betas:
            betas.append(row.beta)
        if (row.h, row.exponent) not in steps:
            steps.append((row.h, row.exponent))
        cells[(row.h, row.beta)] = row.error

    if len(betas) == 1:
        headers = ["h", "Error"]
    else:
        headers = ["h"] + [f"Errors for beta={beta:g}" for beta in betas]
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("---" for _ in headers) + "|",
    ]
    for h, exponent in steps:
        values = [
            f"{cells[(h, beta)]:.7f}" if (h, beta) in cells else "" for beta in betas
        ]
        lines.append("| " + " | ".join([format_step(h, exponent), *values]) + " |")
    return "\n".join(lines) + "\n"
