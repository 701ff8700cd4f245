"""Similarity measures between interval type-2 fuzzy sets.

Every measure works on grades sampled at the points of a shared
:class:`~zslices.mf.DomainGrid`. The ``*_grades`` kernels take the sampled
lower/upper arrays directly; the ``sim_*`` functions sample the sets first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .mf import DomainGrid
from .sets import IT2Set


class TNorm(enum.Enum):
    MINIMUM = "minimum"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    def __call__(self, a: float, b: float) -> float:
        if self is TNorm.MINIMUM:
            return min(a, b)
        if self is TNorm.PRODUCT:
            return a * b
        return max(0.0, a + b - 1.0)


@dataclass(frozen=True, order=True)
class Interval:
    """Interval-valued similarity ``[lo, hi]`` inside [0, 1]."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise ValueError(f"similarity interval must satisfy 0 <= lo <= hi <= 1, got ({self.lo}, {self.hi})")

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self) -> str:
        return f"({self.lo:.3f}, {self.hi:.3f})"


SimilarityValue = Union[float, Interval]


def endpoints(value: SimilarityValue) -> tuple[float, float]:
    """``(lo, hi)`` of a similarity; a scalar is a degenerate interval."""
    if isinstance(value, Interval):
        return value.lo, value.hi
    return float(value), float(value)


def zeng_li_grades(la, ua, lb, ub) -> float:
    n = la.shape[-1]
    total = np.abs(la - lb).sum() + np.abs(ua - ub).sum()
    return float(1.0 - total / (2 * n))


def jaccard_grades(la, ua, lb, ub) -> float:
    num = np.minimum(ua, ub).sum() + np.minimum(la, lb).sum()
    den = np.maximum(ua, ub).sum() + np.maximum(la, lb).sum()
    # both sets empty on the grid
    if den == 0.0:
        return 1.0
    return float(num / den)


def _ratio_or_zero(num: float, den: float) -> float:
    return float(num / den) if den > 0.0 else 0.0


def gorzalczany_components(la, ua, lb, ub) -> tuple[float, float]:
    """The lower-function and upper-function compatibility ratios."""
    s1 = _ratio_or_zero(np.minimum(la, lb).max(), la.max())
    s2 = _ratio_or_zero(np.minimum(ua, ub).max(), ua.max())
    return s1, s2


def gorzalczany_grades(la, ua, lb, ub) -> Interval:
    s1, s2 = gorzalczany_components(la, ua, lb, ub)
    return Interval(min(s1, s2), max(s1, s2))


def gorzalczany_degenerate(la, ua) -> bool:
    """True when a ratio had a zero denominator and was set to 0."""
    return bool(la.max() <= 0.0 or ua.max() <= 0.0)


def _inclusion(la, ua, lb, ub) -> tuple[float, float]:
    # 1 - (a - b) instead of 1 - a + b keeps identical grades at exactly 1.
    dl = 1.0 - (la - lb)
    du = 1.0 - (ua - ub)
    low = float(np.minimum(1.0, np.minimum(dl, du)).min())
    high = float(np.minimum(1.0, np.maximum(dl, du)).min())
    return low, high


def bustince_grades(la, ua, lb, ub, tnorm: TNorm = TNorm.MINIMUM) -> Interval:
    low_ab, high_ab = _inclusion(la, ua, lb, ub)
    low_ba, high_ba = _inclusion(lb, ub, la, ua)
    return Interval(tnorm(low_ab, low_ba), tnorm(high_ab, high_ba))


def sim_zeng_li(a: IT2Set, b: IT2Set, grid: DomainGrid) -> float:
    return zeng_li_grades(*a.sample(grid), *b.sample(grid))


def sim_jaccard(a: IT2Set, b: IT2Set, grid: DomainGrid) -> float:
    return jaccard_grades(*a.sample(grid), *b.sample(grid))


def sim_gorzalczany(a: IT2Set, b: IT2Set, grid: DomainGrid) -> Interval:
    return gorzalczany_grades(*a.sample(grid), *b.sample(grid))


def sim_bustince(a: IT2Set, b: IT2Set, grid: DomainGrid, t: TNorm = TNorm.MINIMUM) -> Interval:
    return bustince_grades(*a.sample(grid), *b.sample(grid), tnorm=t)


class MeasureKind(enum.Enum):
    ZENG_LI = "zeng-li"
    JACCARD = "jaccard"
    GORZALCZANY = "gorzalczany"
    BUSTINCE = "bustince"


@dataclass(frozen=True)
class Measure:
    """An interval type-2 similarity measure, with its t-norm for Bustince."""

    kind: MeasureKind
    tnorm: TNorm = TNorm.MINIMUM

    @classmethod
    def parse(cls, name: str, tnorm: str | TNorm = TNorm.MINIMUM) -> Measure:
        try:
            kind = MeasureKind(name)
        except ValueError:
            known = ", ".join(k.value for k in MeasureKind)
            raise ValueError(f"unknown measure {name!r}; expected one of {known}") from None
        return cls(kind, TNorm(tnorm))

    @property
    def name(self) -> str:
        if self.kind is MeasureKind.BUSTINCE:
            return f"bustince({self.tnorm.value})"
        return self.kind.value

    @property
    def interval_valued(self) -> bool:
        return self.kind in (MeasureKind.GORZALCZANY, MeasureKind.BUSTINCE)

    def kernel(self) -> Callable[..., SimilarityValue]:
        if self.kind is MeasureKind.ZENG_LI:
            return zeng_li_grades
        if self.kind is MeasureKind.JACCARD:
            return jaccard_grades
        if self.kind is MeasureKind.GORZALCZANY:
            return gorzalczany_grades
        tnorm = self.tnorm
        return lambda la, ua, lb, ub: bustince_grades(la, ua, lb, ub, tnorm)

    def __call__(self, a: IT2Set, b: IT2Set, grid: DomainGrid) -> SimilarityValue:
        return self.kernel()(*a.sample(grid), *b.sample(grid))

    def __str__(self) -> str:
        return self.name


ZENG_LI = Measure(MeasureKind.ZENG_LI)
JACCARD = Measure(MeasureKind.JACCARD)
GORZALCZANY = Measure(MeasureKind.GORZALCZANY)
BUSTINCE = Measure(MeasureKind.BUSTINCE)
ALL_MEASURES = (ZENG_LI, JACCARD, GORZALCZANY, BUSTINCE)
