"""Approximate graphs by nested split graphs and compute their indices fast."""
from .anneal import AnnealConfig, AnnealResult, Schedule, anneal
from .errors import (
    Disconnected,
    DisconnectedResult,
    EmptyGraph,
    EmptyInput,
    InvalidSequence,
    NoEdges,
    NoNeighbors,
    NSGError,
    ParseError,
    SelfLoop,
    SizeMismatch,
)
from .fast import all_indices
from .graph import SimpleGraph
from .graphio import parse_edge_list
from .oracle import oracle_indices
from .sequences import (
    CompactCreationSequence,
    CreationSequence,
    compact_from_full,
    full_from_compact,
    normalize,
    quotient_matrix,
    realize,
)

__version__ = "0.1.0"
