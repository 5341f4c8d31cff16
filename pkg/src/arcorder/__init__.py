"""Circular and interval vertex orderings, arc models and graph powers."""

from .arcs import (
    ArcModel,
    ClockArc,
    arcs_intersect,
    build_model,
    containment_witness,
    covered,
    extract_ordering,
    intersection_graph,
    is_proper,
    parse_model,
    serialize_model,
)
from .graph import (
    INF,
    DistanceMatrix,
    Graph,
    GraphFormatError,
    all_pairs_distances,
    diameter,
    enumerate_graphs,
    parse_graph,
    power,
    random_graph,
    serialize_graph,
)
from .oracles import CapExceeded, RecognitionOutcome, cross_audit, find_arc_model, find_circular_ordering
from .ordering import (
    Ordering,
    Reading,
    Violation,
    between,
    check_circular,
    check_interval,
    check_proper_circular,
    check_proper_interval,
    reverse,
)

__version__ = "0.1.0"
