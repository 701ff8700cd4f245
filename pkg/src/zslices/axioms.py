"""Randomised checks of the four similarity axioms.

Random sets have trapezoidal principal FOUs (lower trapezoid nested under the
upper one). By default they are turned into GT2 sets with a triangular
secondary sliced at four zLevels; ``levels=None`` keeps them as interval
type-2 sets promoted to a single slice.

Set ordering for transitivity is pointwise grade dominance of both bounding
functions at every zLevel. Interval results are compared endpoint-wise, and
an interval counts as zero only when both endpoints are zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .gt2 import sim_zslices, zlevel_union
from .it2 import Measure, MeasureKind, SimilarityValue, endpoints
from .mf import DomainGrid, Trapezoid
from .sets import DEFAULT_LEVELS, GT2Set, IT2Set, ceiling_index, promote_it2, slice_gt2

AXIOMS = ("reflexivity", "symmetry", "transitivity", "overlapping")

# Which axioms each interval measure is known to satisfy.
EXPECTED_PROPERTIES = {
    MeasureKind.ZENG_LI: {"reflexivity": True, "symmetry": True, "transitivity": True, "overlapping": False},
    MeasureKind.JACCARD: {"reflexivity": True, "symmetry": True, "transitivity": True, "overlapping": True},
    MeasureKind.GORZALCZANY: {"reflexivity": False, "symmetry": False, "transitivity": True, "overlapping": True},
    MeasureKind.BUSTINCE: {"reflexivity": True, "symmetry": True, "transitivity": True, "overlapping": False},
}

CHECK_GRID = DomainGrid(0.0, 10.0, 100)
TOL = 1e-12


@dataclass(frozen=True)
class Witness:
    sets: tuple[GT2Set, ...]
    values: tuple[SimilarityValue, ...]
    reason: str


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    holds: bool
    trials: int
    witness: Witness | None = None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "violated"


@dataclass(frozen=True)
class AxiomReport:
    measure: Measure
    results: tuple[AxiomResult, ...]
    trials: int
    levels: tuple[float, ...] | None = None

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def expected(self) -> dict[str, bool]:
        return EXPECTED_PROPERTIES[self.measure.kind]

    def mismatches(self) -> list[str]:
        exp = self.expected()
        return [r.axiom for r in self.results if r.holds != exp[r.axiom]]


@dataclass
class RandomSets:
    """Draws random trapezoidal FOUs inside ``grid`` and lifts them to GT2 sets."""

    rng: np.random.Generator
    grid: DomainGrid = CHECK_GRID
    levels: Sequence[float] | None = DEFAULT_LEVELS
    margin: float = 1.0

    def principal(self, lo: float | None = None, hi: float | None = None) -> IT2Set:
        rng = self.rng
        lo = self.grid.x_min if lo is None else lo
        hi = self.grid.x_max if hi is None else hi
        w = rng.uniform(0.3, 1.0)  # half plateau
        r = rng.uniform(0.3, 1.2)  # ramp width
        half = w + r
        span = hi - lo - 2 * half
        pad = min(self.margin, max(span, 0.0) / 2)
        centre = rng.uniform(lo + half + pad, hi - half - pad)
        h_up = rng.uniform(0.7, 1.0)
        h_low = h_up * rng.uniform(0.3, 0.9)
        upper = Trapezoid(centre - half, centre - w, centre + w, centre + half, h_up)
        # later start and no steeper ramps keep the lower trapezoid under the upper one
        s1 = rng.uniform(0.0, 0.25 * min(r, w))
        s2 = s1 + rng.uniform(0.0, 0.25 * w)
        lower = Trapezoid(upper.a + s1, upper.b + s2, upper.c - s2, upper.d - s1, h_low)
        return IT2Set(lower, upper)

    def lift(self, principal: IT2Set) -> GT2Set:
        if self.levels is None:
            return promote_it2(principal)
        return slice_gt2(principal, self.levels)


def _shift(fou: IT2Set, dx: float) -> IT2Set:
    return IT2Set(fou.lower.shifted(dx), fou.upper.shifted(dx))


def _scale(fou: IT2Set, f: float) -> IT2Set:
    return IT2Set(fou.lower.scaled(f), fou.upper.scaled(f))


def _is_one(v: SimilarityValue) -> bool:
    lo, hi = endpoints(v)
    return abs(lo - 1.0) <= TOL and abs(hi - 1.0) <= TOL


def _is_zero(v: SimilarityValue) -> bool:
    return endpoints(v)[1] == 0.0


def _sim(measure: Measure, grid: DomainGrid) -> Callable[[GT2Set, GT2Set], SimilarityValue]:
    return lambda a, b: sim_zslices(a, b, measure, grid)


def check_reflexivity(
    measure: Measure, trials: int = 100, seed: int = 0, levels=DEFAULT_LEVELS, grid: DomainGrid = CHECK_GRID
) -> AxiomResult:
    """s(A, A) = 1, and s(A, A') < 1 for a translated copy A'.

    The translation is at least one grid step but smaller than half the lower
    plateau, so the grade maxima of A and A' coincide while their grid grades
    differ.
    """
    _require_trials(trials)
    rng = np.random.default_rng([seed, 0])
    gen = RandomSets(rng, grid, levels)
    sim = _sim(measure, grid)
    for _ in range(trials):
        fou = gen.principal()
        a = gen.lift(fou)
        same = sim(a, a)
        if not _is_one(same):
            return AxiomResult("reflexivity", False, trials, Witness((a, a), (same,), "s(A, A) != 1"))
        plateau = fou.lower.c - fou.lower.b
        step = 1.01 * grid.spacing
        dx = rng.uniform(step, max(step, 0.5 * plateau)) * rng.choice([-1.0, 1.0])
        b = gen.lift(_shift(fou, dx))
        other = sim(a, b)
        if _is_one(other):
            return AxiomResult("reflexivity", False, trials, Witness((a, b), (other,), "s(A, B) = 1 with A != B"))
    return AxiomResult("reflexivity", True, trials)


def check_symmetry(
    measure: Measure, trials: int = 100, seed: int = 0, levels=DEFAULT_LEVELS, grid: DomainGrid = CHECK_GRID
) -> AxiomResult:
    _require_trials(trials)
    gen = RandomSets(np.random.default_rng([seed, 1]), grid, levels)
    sim = _sim(measure, grid)
    for _ in range(trials):
        a, b = gen.lift(gen.principal()), gen.lift(gen.principal())
        ab, ba = sim(a, b), sim(b, a)
        if any(abs(x - y) > TOL for x, y in zip(endpoints(ab), endpoints(ba))):
            return AxiomResult("symmetry", False, trials, Witness((a, b), (ab, ba), "s(A, B) != s(B, A)"))
    return AxiomResult("symmetry", True, trials)


def check_transitivity(
    measure: Measure, trials: int = 100, seed: int = 0, levels=DEFAULT_LEVELS, grid: DomainGrid = CHECK_GRID
) -> AxiomResult:
    """s(A, B) >= s(A, C) for A <= B <= C built by scaling one FOU's grades."""
    _require_trials(trials)
    rng = np.random.default_rng([seed, 2])
    gen = RandomSets(rng, grid, levels)
    sim = _sim(measure, grid)
    for _ in range(trials):
        fou = gen.principal()
        f_a, f_b = np.sort(rng.uniform(0.2, 1.0, size=2))
        a, b, c = gen.lift(_scale(fou, f_a)), gen.lift(_scale(fou, f_b)), gen.lift(fou)
        ab, ac = sim(a, b), sim(a, c)
        if any(x < y - TOL for x, y in zip(endpoints(ab), endpoints(ac))):
            return AxiomResult(
                "transitivity", False, trials, Witness((a, b, c), (ab, ac), "A <= B <= C but s(A, B) < s(A, C)")
            )
    return AxiomResult("transitivity", True, trials)


def overlaps(a: GT2Set, b: GT2Set, grid: DomainGrid) -> bool:
    """Whether the widest aligned upper functions share a positive grid point."""
    z = zlevel_union(a, b)[0]
    ua = a.sample(grid)[1][ceiling_index(a.levels, z)]
    ub = b.sample(grid)[1][ceiling_index(b.levels, z)]
    return bool(np.any((ua > 0) & (ub > 0)))


def check_overlapping(
    measure: Measure, trials: int = 100, seed: int = 0, levels=DEFAULT_LEVELS, grid: DomainGrid = CHECK_GRID
) -> AxiomResult:
    """s > 0 for overlapping pairs and s = 0 for disjoint ones.

    Even trials place the sets in opposite halves of the domain, odd trials
    put their centres close together.
    """
    _require_trials(trials)
    rng = np.random.default_rng([seed, 3])
    gen = RandomSets(rng, grid, levels, margin=0.0)
    sim = _sim(measure, grid)
    mid = 0.5 * (grid.x_min + grid.x_max)
    for i in range(trials):
        if i % 2 == 0:
            fa, fb = gen.principal(hi=mid), gen.principal(lo=mid)
        else:
            fa = gen.principal()
            fb = gen.principal()
            dx = 0.5 * (fa.upper.a + fa.upper.d) - 0.5 * (fb.upper.a + fb.upper.d)
            fb = _shift(fb, dx + rng.uniform(-0.5, 0.5))
        a, b = gen.lift(fa), gen.lift(fb)
        value = sim(a, b)
        if overlaps(a, b, grid):
            if _is_zero(value):
                return AxiomResult("overlapping", False, trials, Witness((a, b), (value,), "overlapping sets give 0"))
        elif not _is_zero(value):
            return AxiomResult("overlapping", False, trials, Witness((a, b), (value,), "disjoint sets give a positive value"))
    return AxiomResult("overlapping", True, trials)


CHECKERS = {
    "reflexivity": check_reflexivity,
    "symmetry": check_symmetry,
    "transitivity": check_transitivity,
    "overlapping": check_overlapping,
}


def verify_measure(
    measure: Measure, trials: int = 100, seed: int = 0, levels=DEFAULT_LEVELS, grid: DomainGrid = CHECK_GRID
) -> AxiomReport:
    results = tuple(CHECKERS[ax](measure, trials, seed, levels, grid) for ax in AXIOMS)
    return AxiomReport(measure, results, trials, None if levels is None else tuple(levels))


def _require_trials(trials: int) -> None:
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
