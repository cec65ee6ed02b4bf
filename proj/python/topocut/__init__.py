"""Exact solvers and verifiers for discrete cutting and coloring theorems.

Thin convenience layer over the C++ extension module. Coordinates are exact
rationals passed as strings ("3", "-7/2"); plain ints and fractions.Fraction
values are accepted and converted.
"""

from fractions import Fraction

from ._topocut import (
    TopocutError,
    build_disk_triangulation,
    check_dolnikov,
    colorability_defect,
    enumerate_all_cuts,
    find_complementary_edge,
    find_cut,
    gen_necklace,
    gen_points,
    hulls_disjoint,
    hypergraph_is_m_colorable,
    is_affinely_independent,
    is_general_position,
    kneser_chromatic_number,
    kneser_edge_count,
    kneser_explicit_coloring,
    kneser_vertices,
    moment_curve_point,
    necklace_min_cuts,
    necklace_split,
    necklace_split_brute_force,
    necklace_verify_split,
    orientation,
    perturb,
    tucker_exhaustive,
    validate_complex,
    verify_cut,
    verify_dolnikov_exhaustive,
    verify_rainbow,
    rainbow_partition,
    hyperplane_through,
)

__all__ = [
    "TopocutError",
    "build_disk_triangulation",
    "check_dolnikov",
    "colorability_defect",
    "enumerate_all_cuts",
    "find_complementary_edge",
    "find_cut",
    "gen_necklace",
    "gen_points",
    "hulls_disjoint",
    "hyperplane_through",
    "hypergraph_is_m_colorable",
    "is_affinely_independent",
    "is_general_position",
    "kneser_chromatic_number",
    "kneser_edge_count",
    "kneser_explicit_coloring",
    "kneser_vertices",
    "moment_curve_point",
    "necklace_min_cuts",
    "necklace_split",
    "necklace_split_brute_force",
    "necklace_verify_split",
    "orientation",
    "perturb",
    "rainbow_partition",
    "rat",
    "tucker_exhaustive",
    "validate_complex",
    "verify_cut",
    "verify_dolnikov_exhaustive",
    "verify_rainbow",
]


def rat(value):
    """Canonical rational string for ints, strings, and Fractions."""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def point(*coords):
    """A point as a list of rational strings."""
    return [rat(c) for c in coords]
