"""Knot Floer homology from grid diagrams."""

from ._core import (
    Grid,
    HfkError,
    alexander,
    cyclic_move,
    minimize,
    parse_braid,
    parse_machine_report,
    run,
    stabilize,
)

__all__ = [
    "Grid",
    "HfkError",
    "alexander",
    "cyclic_move",
    "minimize",
    "parse_braid",
    "parse_machine_report",
    "run",
    "stabilize",
]
