"""Command-line interface, expression grammar and report models."""

from .commands import cli, resolve_field, run_command
from .expressions import (
    ELEMENT,
    UNIVARIATE,
    VECTOR,
    Mode,
    ParseMode,
    parse_element,
    parse_field_polynomial,
    parse_homogeneous,
    parse_poly,
    parse_rows,
    parse_univariate,
    parse_vector,
    parse_vectors,
)
from .reports import ErrorReport, GlobalValue, PlaceRow, Report, ValueModel, render_table

__all__ = [
    "ELEMENT",
    "UNIVARIATE",
    "VECTOR",
    "ErrorReport",
    "GlobalValue",
    "Mode",
    "ParseMode",
    "PlaceRow",
    "Report",
    "ValueModel",
    "cli",
    "parse_element",
    "parse_field_polynomial",
    "parse_homogeneous",
    "parse_poly",
    "parse_rows",
    "parse_univariate",
    "parse_vector",
    "parse_vectors",
    "render_table",
    "resolve_field",
    "run_command",
]
