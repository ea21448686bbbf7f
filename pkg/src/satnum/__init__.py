"""satnum: saturation numbers (smallest maximal matchings) for small graphs.

Exact branch-and-bound solvers, generators and closed forms for structured
families (paths, cycles, wheels, coronas, links, chains, cactus chains), and
an audit harness that sweeps every closed form against the exact solver.
"""

from .errors import (
    DomainError,
    FamilyError,
    GraphError,
    ParseError,
    ResourceLimitError,
    SatnumError,
    UnsupportedParameterError,
)
from .families import FamilySpec, build, build_family, erdos_renyi, parse_family, render
from .graph import (
    Graph,
    Matching,
    chain,
    corona,
    delete_edge,
    disjoint_union,
    from_edgelist_text,
    is_independent,
    is_matching,
    is_maximal_matching,
    is_perfect_matching,
    link,
    matching_defect,
    new_graph,
    read_edgelist,
    to_edgelist_text,
    uncovered,
    write_edgelist,
)
from .solver import (
    DEFAULT_CAPS,
    SaturationResult,
    SolverCaps,
    bounds,
    independence_number,
    matching_number,
    saturation_bruteforce,
    saturation_exact,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAPS",
    "DomainError",
    "FamilyError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "Matching",
    "ParseError",
    "ResourceLimitError",
    "SatnumError",
    "SaturationResult",
    "SolverCaps",
    "UnsupportedParameterError",
    "bounds",
    "build",
    "build_family",
    "chain",
    "corona",
    "delete_edge",
    "disjoint_union",
    "erdos_renyi",
    "from_edgelist_text",
    "independence_number",
    "is_independent",
    "is_matching",
    "is_maximal_matching",
    "is_perfect_matching",
    "link",
    "matching_defect",
    "matching_number",
    "new_graph",
    "parse_family",
    "read_edgelist",
    "render",
    "saturation_bruteforce",
    "saturation_exact",
    "to_edgelist_text",
    "uncovered",
    "write_edgelist",
]
