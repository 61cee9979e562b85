"""Complexity of the torus action on matrix Schubert varieties' affine factors Y_w."""

from .perm_core import (
    Permutation,
    adjacent_transposition,
    coxeter_length,
    dots,
    from_one_line,
    identity,
    inverse,
    longest_element,
    multiply,
    noninversions,
    parse_permutation,
    rank_fn,
)
from .diagrams import (
    CellSet,
    DiagramBundle,
    bundle,
    connected_components,
    dominant_piece,
    essential_set,
    is_french_young,
    l_diagram,
    l_prime_diagram,
    opposite_rothe,
    southwest_closure,
)
from .graph_cone import (
    BipartiteGraph,
    component_count,
    cone_dim_by_formula,
    cone_dim_by_rank,
    graph_of,
    weight_generators,
)
from .complexity import ComplexityReport, analyze, complexity, dim_msv, dim_y

__version__ = "0.1.0"
