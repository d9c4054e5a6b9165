"""conjforge: automated conjecturing over a database of small connected
graphs — exact invariants, sharp rational linear bounds, and the
touch-sort / Theo / Dalmatian-static filter pipeline."""

from .engine import Conjecture, GenerationConfig, HeuristicFlags, generate
from .fitter import LOWER, UPPER, BoundingFunction, FitResult, fit
from .graph import Graph, evaluate_boolean, is_connected, parse_edge_list
from .invariants import brute_force_oracle, compute, forcing_closure
from .repository import GraphStore
from .table import FeatureTable, Hypothesis, build_table, read_csv, select_rows, write_csv

__all__ = [
    "Conjecture",
    "GenerationConfig",
    "HeuristicFlags",
    "generate",
    "BoundingFunction",
    "FitResult",
    "fit",
    "UPPER",
    "LOWER",
    "Graph",
    "parse_edge_list",
    "evaluate_boolean",
    "is_connected",
    "compute",
    "brute_force_oracle",
    "forcing_closure",
    "GraphStore",
    "FeatureTable",
    "Hypothesis",
    "build_table",
    "select_rows",
    "read_csv",
    "write_csv",
]

__version__ = "0.1.0"
