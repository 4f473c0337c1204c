"""Polygonal maps on the torus and Klein bottle with two vertex types."""

from .facetypes import (
    FaceSequence,
    MapType,
    canonical_face_sequence,
    candidate_type_tables,
    map_type,
    parse_face_sequence,
    parse_type,
    solve_zero_curvature,
)
from .map_core import (
    Map,
    build_map,
    classify_surface,
    curvature,
    euler_characteristic,
    face_sequence,
    link,
    orientable,
    read_map,
    relabel,
    stack_all_faces,
    stack_face,
    write_map,
)

__version__ = "0.1.0"
