"""DCell and BCDC data-center topologies: generation, structure cuts, and
exhaustive connectivity certification."""

from .graph import (
    Graph,
    build_graph,
    components,
    delete_vertices,
    is_connected,
    line_graph,
    min_vertex_cut,
)
from .shapes import (
    STRUCTURE,
    SUBSTRUCTURE,
    CutMember,
    ShapeSpec,
    StructureCut,
    enumerate_shape_copies,
    is_shape,
)
from .dcell import build_dcell, outside_neighbor, t_size
from .bcdc import (
    build_bcdc,
    build_bcdc_via_line_graph,
    build_crossed_cube,
    dim_neighbor,
    neighborhood_decomposition,
    pair_related,
)
from .cuts import (
    PredictedValue,
    VerificationReport,
    clique_cut_dcell,
    cycle_cut_bcdc,
    k11_cut_bcdc,
    path_cut_bcdc,
    predicted_kappa,
    star_cut_bcdc,
    star_cut_dcell,
    structure_cut_for,
    substructure_cycle_cut_bcdc,
    verify_cut,
)
from .search import (
    SearchBudget,
    certify_min,
    exists_cut_of_size,
    g_extra_connectivity,
    min_structure_cut,
)

__all__ = [
    "Graph",
    "build_graph",
    "components",
    "delete_vertices",
    "is_connected",
    "line_graph",
    "min_vertex_cut",
    "STRUCTURE",
    "SUBSTRUCTURE",
    "CutMember",
    "ShapeSpec",
    "StructureCut",
    "enumerate_shape_copies",
    "is_shape",
    "build_dcell",
    "outside_neighbor",
    "t_size",
    "build_bcdc",
    "build_bcdc_via_line_graph",
    "build_crossed_cube",
    "dim_neighbor",
    "neighborhood_decomposition",
    "pair_related",
    "PredictedValue",
    "VerificationReport",
    "clique_cut_dcell",
    "cycle_cut_bcdc",
    "k11_cut_bcdc",
    "path_cut_bcdc",
    "predicted_kappa",
    "star_cut_bcdc",
    "star_cut_dcell",
    "structure_cut_for",
    "substructure_cycle_cut_bcdc",
    "verify_cut",
    "SearchBudget",
    "certify_min",
    "exists_cut_of_size",
    "g_extra_connectivity",
    "min_structure_cut",
]
