"""Similarity measures for type-1, interval type-2 and zSlices-based general type-2 fuzzy sets."""
from .axioms import AxiomReport, AxiomResult, check_overlapping, check_reflexivity, check_symmetry, check_transitivity, verify_measure
from .gt2 import sim_zslices, zlevel_union, zslices_breakdown
from .it2 import (
    BUSTINCE,
    GORZALCZANY,
    JACCARD,
    ZENG_LI,
    Interval,
    Measure,
    TNorm,
    sim_bustince,
    sim_gorzalczany,
    sim_jaccard,
    sim_zeng_li,
)
from .mf import DomainGrid, PiecewiseLinear, Sampled, Trapezoid, Triangle, discretize, eval_mf, mf_leq
from .sets import (
    GT2Set,
    IT2Set,
    T1Set,
    VerticalSlice,
    ZSlice,
    fou_at,
    from_vertical_slices,
    promote_it2,
    promote_t1,
    slice_gt2,
    vertical_slice,
    zlevels,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomResult",
    "check_overlapping",
    "check_reflexivity",
    "check_symmetry",
    "check_transitivity",
    "verify_measure",
    "sim_zslices",
    "zlevel_union",
    "zslices_breakdown",
    "BUSTINCE",
    "GORZALCZANY",
    "JACCARD",
    "ZENG_LI",
    "Interval",
    "Measure",
    "TNorm",
    "sim_bustince",
    "sim_gorzalczany",
    "sim_jaccard",
    "sim_zeng_li",
    "DomainGrid",
    "PiecewiseLinear",
    "Sampled",
    "Trapezoid",
    "Triangle",
    "discretize",
    "eval_mf",
    "mf_leq",
    "GT2Set",
    "IT2Set",
    "T1Set",
    "VerticalSlice",
    "ZSlice",
    "fou_at",
    "from_vertical_slices",
    "promote_it2",
    "promote_t1",
    "slice_gt2",
    "vertical_slice",
    "zlevels",
]
