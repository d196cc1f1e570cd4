"""Flip graphs of Miura-ori mountain-valley assignments."""

from .coloring import GridColoring, coloring_to_mv, mv_to_coloring
from .flipgraph import FlipGraph, build_ofg, degree_distribution
from .heights import diameter_formula, ofg_distance, r3_distance
from .miura import M, V, Face, MiuraSpec, MVAssignment, enumerate_valid, flip_face, is_flippable

__all__ = [
    "M", "V", "Face", "MiuraSpec", "MVAssignment", "enumerate_valid", "flip_face", "is_flippable",
    "GridColoring", "mv_to_coloring", "coloring_to_mv",
    "FlipGraph", "build_ofg", "degree_distribution",
    "ofg_distance", "r3_distance", "diameter_formula",
]
