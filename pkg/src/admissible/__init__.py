"""Admissible path and cycle length progressions in graphs.

Constructive certificates for k paths (or cycles) whose lengths form an
arithmetic progression with common difference 1 or 2, exhaustive oracles to
check them against, and campaign tooling for desk-scale verification.
"""

from .extractor import (
    CycleCertificate,
    ExtractionFailure,
    HypothesisError,
    PathCertificate,
    combine_fact1,
    find_admissible_cycles,
    find_admissible_paths,
    validate,
)
from .graph_core import Graph, OrientedPath
from .graph_io import from_graph6, read_edgelist, to_graph6
from .oracle import cycle_length_spectrum, is_admissible, max_admissible_run, path_length_spectrum
from .rooted import RootedGraph

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "OrientedPath",
    "RootedGraph",
    "PathCertificate",
    "CycleCertificate",
    "HypothesisError",
    "ExtractionFailure",
    "combine_fact1",
    "find_admissible_paths",
    "find_admissible_cycles",
    "validate",
    "from_graph6",
    "to_graph6",
    "read_edgelist",
    "is_admissible",
    "path_length_spectrum",
    "cycle_length_spectrum",
    "max_admissible_run",
]
