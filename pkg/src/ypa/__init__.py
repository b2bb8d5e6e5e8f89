"""Exact planar algebra of the Young graph with the Plancherel harmonic function."""

from .surd import Surd, sqrt_fraction, squarefree_split
from .young import LoopPath, dim, parse_diagram, parse_loop, profile, transpose
from .plancherel import PLANCHEREL, boolean_cumulant, f_pl, moment, p_down, p_up

__all__ = [
    "Surd",
    "sqrt_fraction",
    "squarefree_split",
    "LoopPath",
    "dim",
    "parse_diagram",
    "parse_loop",
    "profile",
    "transpose",
    "PLANCHEREL",
    "boolean_cumulant",
    "f_pl",
    "moment",
    "p_down",
    "p_up",
]
