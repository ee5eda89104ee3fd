"""Irreducible triangulations of once-punctured surfaces.

Builds the complete basis of irreducible triangulations of S - D from the
irreducible triangulations of the closed surface S by corner splitting,
pylonic-vertex detection, and vertex/face/cable removal, with canonical
labeling for isomorphism identity and an independent brute-force
enumeration oracle for the closed inputs.
"""

from .surface import (InvalidTriangulation, SurfaceClass, Triangulation,
                      boundary_cycles, build, classify, validate, vertex_link)
from .homotopy import (AGREEMENT, LITERAL, AgreementModeError, CableSubgraph,
                       CycleVerdict, EdgeClass, cable_subgraph, cables,
                       classify_edges, is_irreducible, is_null_homotopic,
                       is_pylonic, pylonic_vertices, three_cycles)
from .transform import (NotShrinkable, close_hole, corners, is_contractible,
                        remove_cable, remove_face, remove_vertex, shrink_edge,
                        split_corner, split_truncated_corner)
from .canon import (IncidenceGraph, are_isomorphic, canonical_form,
                    canonical_key, dedupe, incidence_graph)
from .generation import enumerate_closed, irreducible_filter
from .pipeline import (IncompleteExpansion, SplitLevel, StageReport,
                       expand, make_level, punctured_basis)

__all__ = [
    "AGREEMENT", "LITERAL", "AgreementModeError", "CableSubgraph",
    "CycleVerdict", "EdgeClass", "IncidenceGraph", "IncompleteExpansion",
    "InvalidTriangulation", "NotShrinkable", "SplitLevel", "StageReport",
    "SurfaceClass", "Triangulation", "are_isomorphic", "boundary_cycles",
    "build", "cable_subgraph", "cables", "canonical_form", "canonical_key",
    "classify", "classify_edges", "close_hole", "corners", "dedupe",
    "enumerate_closed", "expand", "incidence_graph", "irreducible_filter",
    "is_contractible", "is_irreducible", "is_null_homotopic", "is_pylonic",
    "make_level", "punctured_basis", "pylonic_vertices", "remove_cable",
    "remove_face", "remove_vertex", "shrink_edge", "split_corner",
    "split_truncated_corner", "three_cycles", "validate", "vertex_link",
]
