"""Parsers for complex literals and evaluation grids on the command line."""

import re
from typing import Dict, List

import numpy as np
import typer

AXES = ("z", "s", "w")

_LITERAL = re.compile(r"^[0-9eE.+\-ij]+$")


def parse_complex(text: str) -> complex:
    """Parse a complex literal such as "2", "-0.5i", "1.5-0.25i" or "1e-3+2i".

    Raises:
        typer.BadParameter: For anything else, including embedded spaces
    """
    raw = str(text).strip()
    if not raw or not _LITERAL.match(raw):
        raise typer.BadParameter(f"not a complex literal: {text!r}")
    try:
        return complex(raw.replace("i", "j"))
    except ValueError as e:
        raise typer.BadParameter(f"not a complex literal: {text!r}") from e


def format_complex(value: complex) -> str:
    """Inverse of parse_complex with full double precision."""
    value = complex(value)
    return f"{value.real:.17g}{value.imag:+.17g}i"


def parse_grid(text: str) -> Dict[str, List[complex]]:
    """Parse "z=a:b:n,s=a:b:n,w=a:b:n" into evenly spaced complex values per axis.

    An empty string gives three empty axes. n = 1 keeps only the start point.

    Raises:
        typer.BadParameter: If an axis is missing, repeated or malformed
    """
    if not text.strip():
        return {axis: [] for axis in AXES}
    grid: Dict[str, List[complex]] = {}
    for part in text.split(","):
        name, sep, body = part.strip().partition("=")
        fields = body.split(":")
        if not sep or name not in AXES or len(fields) != 3:
            raise typer.BadParameter(f"malformed grid axis {part!r}; expected name=start:stop:count")
        if name in grid:
            raise typer.BadParameter(f"grid axis {name} given twice")
        try:
            count = int(fields[2])
        except ValueError as e:
            raise typer.BadParameter(f"grid count must be an integer, got {fields[2]!r}") from e
        if count < 0:
            raise typer.BadParameter(f"grid count must be nonnegative, got {count}")
        start, stop = parse_complex(fields[0]), parse_complex(fields[1])
        grid[name] = [complex(v) for v in np.linspace(start, stop, count)]
    missing = [axis for axis in AXES if axis not in grid]
    if missing:
        raise typer.BadParameter(f"grid is missing axis {', '.join(missing)}")
    return grid
