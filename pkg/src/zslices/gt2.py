"""Similarity of zSlices-based general type-2 sets.

Each aligned pair of zSlices is compared with an interval type-2 measure and
the per-slice results are averaged with the zLevels as weights. Sets with
different zLevels are aligned on the union of their levels; a set lacking a
level contributes the FOU of its next native level up.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .it2 import JACCARD, Interval, Measure, SimilarityValue, endpoints
from .mf import DomainGrid
from .sets import AnySet, GT2Set, as_gt2, ceiling_index


def zlevel_union(a: GT2Set, b: GT2Set) -> tuple[float, ...]:
    return tuple(sorted(set(a.levels) | set(b.levels)))


@dataclass(frozen=True)
class LevelResult:
    z: float
    value: SimilarityValue


def _aligned(fs: GT2Set, grid: DomainGrid, union: Sequence[float]):
    lower, upper = fs.sample(grid)
    rows = [ceiling_index(fs.levels, z) for z in union]
    return lower[rows], upper[rows]


def zslices_breakdown(
    a: AnySet, b: AnySet, measure: Measure = JACCARD, grid: DomainGrid | None = None
) -> list[LevelResult]:
    """The interval measure at every level of the zLevel union, lowest first."""
    if grid is None:
        raise ValueError("a domain grid is required")
    a, b = as_gt2(a), as_gt2(b)
    union = zlevel_union(a, b)
    la, ua = _aligned(a, grid, union)
    lb, ub = _aligned(b, grid, union)
    kernel = measure.kernel()
    return [LevelResult(z, kernel(la[i], ua[i], lb[i], ub[i])) for i, z in enumerate(union)]


def weighted_mean(results: Sequence[LevelResult]) -> SimilarityValue:
    """zLevel-weighted mean, endpoint-wise for interval values."""
    if len(results) == 1:
        return results[0].value
    weights = np.array([r.z for r in results])
    ends = np.array([endpoints(r.value) for r in results])
    total = weights.sum()
    # clamp to the per-level range so float rounding cannot leave it
    lo = float(np.clip((weights * ends[:, 0]).sum() / total, ends[:, 0].min(), ends[:, 0].max()))
    if not isinstance(results[0].value, Interval):
        return lo
    hi = float(np.clip((weights * ends[:, 1]).sum() / total, ends[:, 1].min(), ends[:, 1].max()))
    return Interval(lo, hi)


def sim_zslices(
    a: AnySet, b: AnySet, measure: Measure = JACCARD, grid: DomainGrid | None = None
) -> SimilarityValue:
    return weighted_mean(zslices_breakdown(a, b, measure, grid))
