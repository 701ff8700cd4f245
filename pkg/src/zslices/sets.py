"""Type-1, interval type-2 and zSlices-based general type-2 fuzzy sets."""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .mf import GRADE_TOL, Blend, DomainGrid, MembershipFunction, Sampled, probe_points

# Four evenly spaced zLevels, the usual choice for the triangular secondary.
DEFAULT_LEVELS = (0.25, 0.5, 0.75, 1.0)
SECONDARY_KINDS = ("triangular",)


@dataclass(frozen=True)
class T1Set:
    mf: MembershipFunction


@dataclass(frozen=True)
class IT2Set:
    """Footprint of uncertainty bounded by ``lower`` and ``upper``."""

    lower: MembershipFunction
    upper: MembershipFunction

    def __post_init__(self) -> None:
        pts = probe_points(self.lower, self.upper)
        gap = self.lower.evaluate(pts) - self.upper.evaluate(pts)
        if np.any(gap > GRADE_TOL):
            x = float(pts[int(np.argmax(gap))])
            raise ValueError(f"lower membership exceeds upper membership at x={x}")

    def sample(self, grid: DomainGrid) -> tuple[np.ndarray, np.ndarray]:
        pts = grid.points
        return self.lower.evaluate(pts), self.upper.evaluate(pts)


@dataclass(frozen=True)
class ZSlice:
    z: float
    fou: IT2Set

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", float(self.z))
        if not 0.0 < self.z <= 1.0:
            raise ValueError(f"zLevel must lie in (0, 1], got {self.z}")


@dataclass(frozen=True)
class VerticalSlice:
    """Membership intervals of a GT2 set at one domain value, one per zLevel."""

    x: float
    pairs: tuple[tuple[float, tuple[float, float]], ...]

    def __post_init__(self) -> None:
        pairs = tuple((float(z), (float(lo), float(hi))) for z, (lo, hi) in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        zs = [z for z, _ in pairs]
        if any(z1 >= z2 for z1, z2 in zip(zs, zs[1:])):
            raise ValueError(f"zLevels at x={self.x} must be strictly increasing")
        for z, (lo, hi) in pairs:
            if not (0.0 <= lo <= 1.0 and 0.0 <= hi <= 1.0 and lo - hi <= GRADE_TOL):
                raise ValueError(f"interval [{lo}, {hi}] at x={self.x}, z={z} is not inside [0, 1]")
        for (z1, (lo1, hi1)), (z2, (lo2, hi2)) in zip(pairs, pairs[1:]):
            if lo1 - lo2 > GRADE_TOL or hi2 - hi1 > GRADE_TOL:
                raise ValueError(
                    f"interval at z={z2} is not nested in the interval at z={z1} (x={self.x})"
                )

    @property
    def zlevels(self) -> tuple[float, ...]:
        return tuple(z for z, _ in self.pairs)


@dataclass(frozen=True)
class GT2Set:
    """zSlices representation: slices strictly increasing in z with nested FOUs."""

    slices: tuple[ZSlice, ...]

    def __post_init__(self) -> None:
        slices = tuple(self.slices)
        object.__setattr__(self, "slices", slices)
        if not slices:
            raise ValueError("a GT2 set needs at least one zSlice")
        zs = [s.z for s in slices]
        if any(z1 >= z2 for z1, z2 in zip(zs, zs[1:])):
            raise ValueError(f"zLevels must be strictly increasing, got {zs}")
        if len(slices) > 1:
            pts = probe_points(*(f for s in slices for f in (s.fou.lower, s.fou.upper)))
            for outer, inner in zip(slices, slices[1:]):
                if np.any(outer.fou.lower.evaluate(pts) - inner.fou.lower.evaluate(pts) > GRADE_TOL) or np.any(
                    inner.fou.upper.evaluate(pts) - outer.fou.upper.evaluate(pts) > GRADE_TOL
                ):
                    raise ValueError(f"FOU at z={inner.z} is not contained in the FOU at z={outer.z}")

    @cached_property
    def levels(self) -> tuple[float, ...]:
        return tuple(s.z for s in self.slices)

    def sample(self, grid: DomainGrid) -> tuple[np.ndarray, np.ndarray]:
        """Lower and upper grades as ``(k, n)`` arrays, one row per native zLevel."""
        cache = self.__dict__.setdefault("_samples", {})
        if grid not in cache:
            pts = grid.points
            lower = np.array([s.fou.lower.evaluate(pts) for s in self.slices])
            upper = np.array([s.fou.upper.evaluate(pts) for s in self.slices])
            lower.flags.writeable = False
            upper.flags.writeable = False
            cache[grid] = (lower, upper)
        return cache[grid]


AnySet = Union[T1Set, IT2Set, GT2Set]


def _trusted(cls, **fields):
    # skip __post_init__ for values that are valid by construction
    obj = object.__new__(cls)
    for k, v in fields.items():
        object.__setattr__(obj, k, v)
    return obj


def _centre_slice(principal: IT2Set, z: float) -> IT2Set:
    # (1 - z) * edge + z * centre, with centre the midpoint of the FOU column;
    # at z == 1 both bounds evaluate to the same 0.5 * lower + 0.5 * upper
    lower = Blend(principal.lower, principal.upper, 0.5 * z)
    upper = Blend(principal.upper, principal.lower, 0.5 * z)
    return _trusted(IT2Set, lower=lower, upper=upper)


def slice_gt2(
    principal: IT2Set, levels: Sequence[float] = DEFAULT_LEVELS, secondary: str = "triangular"
) -> GT2Set:
    """zSlices of the GT2 set whose secondary grade is a triangle over each FOU column.

    The triangle spans ``[lower(x), upper(x)]`` with apex 1 at the centre, so
    its superlevel set at ``z`` is the interval pulled a fraction ``z`` of the
    way in from each edge.
    """
    if secondary not in SECONDARY_KINDS:
        raise ValueError(f"unknown secondary membership kind {secondary!r}; known: {SECONDARY_KINDS}")
    levels = [float(z) for z in levels]
    if not levels:
        raise ValueError("at least one zLevel is required")
    for z in levels:
        if not 0.0 < z <= 1.0:
            raise ValueError(f"zLevel must lie in (0, 1], got {z}")
    if any(z1 >= z2 for z1, z2 in zip(levels, levels[1:])):
        raise ValueError(f"zLevels must be strictly increasing, got {levels}")
    slices = tuple(_trusted(ZSlice, z=z, fou=_centre_slice(principal, z)) for z in levels)
    return _trusted(GT2Set, slices=slices)


def promote_t1(fs: T1Set) -> GT2Set:
    return GT2Set((ZSlice(1.0, IT2Set(fs.mf, fs.mf)),))


def promote_it2(fs: IT2Set) -> GT2Set:
    return GT2Set((ZSlice(1.0, fs),))


def as_gt2(fs: AnySet) -> GT2Set:
    if isinstance(fs, GT2Set):
        return fs
    if isinstance(fs, IT2Set):
        return promote_it2(fs)
    if isinstance(fs, T1Set):
        return promote_t1(fs)
    raise TypeError(f"not a fuzzy set: {type(fs).__name__}")


def zlevels(fs: GT2Set) -> tuple[float, ...]:
    return fs.levels


def ceiling_index(levels: Sequence[float], z: float) -> int:
    """Index of the smallest level >= z, clamped to the top level."""
    if z <= 0.0:
        raise ValueError(f"zLevel must be positive, got {z}")
    return min(bisect.bisect_left(levels, z), len(levels) - 1)


def fou_at(fs: GT2Set, z: float) -> IT2Set:
    """FOU of ``fs`` at any zLevel, resampled with the ceiling rule.

    A native slice's FOU holds over the whole band of z values down to the
    next lower native level.
    """
    return fs.slices[ceiling_index(fs.levels, z)].fou


def vertical_slice(fs: GT2Set, x: float) -> VerticalSlice:
    pt = np.array([float(x)])
    pairs = tuple(
        (s.z, (float(s.fou.lower.evaluate(pt)[0]), float(s.fou.upper.evaluate(pt)[0])))
        for s in fs.slices
    )
    return VerticalSlice(float(x), pairs)


def from_vertical_slices(columns: Sequence[VerticalSlice]) -> GT2Set:
    """Build a sampled GT2 set from columns that all share one zLevel list."""
    columns = sorted(columns, key=lambda c: c.x)
    if not columns:
        raise ValueError("at least one vertical slice is required")
    levels = columns[0].zlevels
    for col in columns[1:]:
        if col.zlevels != levels:
            raise ValueError(f"column at x={col.x} has zLevels {col.zlevels}, expected {levels}")
    xs = [c.x for c in columns]
    slices = []
    for i, z in enumerate(levels):
        lower = Sampled(xs, [c.pairs[i][1][0] for c in columns])
        upper = Sampled(xs, [c.pairs[i][1][1] for c in columns])
        slices.append(ZSlice(z, IT2Set(lower, upper)))
    return GT2Set(tuple(slices))
