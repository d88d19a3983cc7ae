"""
Utility functions for the superalgebra toolkit.

This package contains the expression parser, output formats, settings,
timing helpers and the document comparison tool.
"""

from .tools import count_and_sort, get_statistics, timing_summary, Stopwatch
from .settings import DEFAULT_SEED, DEFAULT_TRIALS, DEFAULT_SAMPLES, MAX_ORACLE_DIM, default_seed
from .formats import FORMATS, render_table, render_rows, render_mapping, to_json, write_report
from .expr import parse_expr, format_expr, eval_expr, evaluate
from .compare_tables import load_document, compare_entries

__all__ = [
    # Tools
    "count_and_sort",
    "get_statistics",
    "timing_summary",
    "Stopwatch",
    # Settings
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DEFAULT_SAMPLES",
    "MAX_ORACLE_DIM",
    "default_seed",
    # Formats
    "FORMATS",
    "render_table",
    "render_rows",
    "render_mapping",
    "to_json",
    "write_report",
    # Expressions
    "parse_expr",
    "format_expr",
    "eval_expr",
    "evaluate",
    # Compare documents
    "load_document",
    "compare_entries",
]
