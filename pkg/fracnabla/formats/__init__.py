"""CSV and markdown codecs."""

from .gridcsv import format_float, open_output, read_gridfn_csv, write_gridfn_csv, write_rows
from .markdown import format_step, render_markdown

__all__ = [
    "format_float",
    "open_output",
    "read_gridfn_csv",
    "write_gridfn_csv",
    "write_rows",
    "format_step",
    "render_markdown",
]
