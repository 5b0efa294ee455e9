"""Edge-set graphs: construction, edge-degree calculus, connected edge domination."""

from .errors import DomainError, EsgError, InvalidOrderError, IsomorphismUndecided, ParseError, ResourceLimitError
from .graph import (
    Graph,
    are_isomorphic,
    count_hamiltonian_cycles,
    edges_adjacent,
    enumerate_connected_graphs,
    from_family,
    is_connected,
    is_eulerian,
    line_graph,
    make_complete,
    make_cycle,
    make_path,
    make_star,
)
from .subsets import SubsetIndex, edge_neighborhood, index_to_mask, mask_to_index, subset_neighborhood, subsets_adjacent
from .esg import (
    DegreeProfile,
    EdgeSetGraph,
    SetGraph,
    build_edge_set_graph,
    build_set_graph,
    compare_degree_sums,
    degree_profile,
    is_complete_esg,
    min_degree_witness,
    set_graph_degree,
    subset_degree,
)
from .edgedeg import edge_degree_at_vertex, edge_degree_of_vertex, general_edge_degree, total_edge_degree
from .domination import (
    CedReport,
    ced_report,
    is_ced,
    is_edge_dominating,
    max_degree_vertex_count,
    verify_ced_superset_property,
)

__version__ = "0.1.0"
