"""Membership functions and the uniform domain grid they are sampled on."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Slack allowed when comparing grades that went through float arithmetic.
GRADE_TOL = 1e-12


@dataclass(frozen=True)
class DomainGrid:
    """``n`` equally spaced points from ``x_min`` to ``x_max``, both inclusive."""

    x_min: float
    x_max: float
    n: int = 100

    def __post_init__(self) -> None:
        if not self.x_min < self.x_max:
            raise ValueError(f"grid needs x_min < x_max, got {self.x_min} >= {self.x_max}")
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 points, got n={self.n}")

    @cached_property
    def points(self) -> np.ndarray:
        pts = np.linspace(self.x_min, self.x_max, self.n)
        pts.flags.writeable = False
        return pts

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n - 1)


class MembershipFunction:
    """Base class; subclasses are immutable and vectorised over ``x``."""

    def __call__(self, x):
        return self.evaluate(np.asarray(x, dtype=float))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """Abscissae where the function may change slope or jump."""
        raise NotImplementedError

    @property
    def height(self) -> float:
        raise NotImplementedError


def _check_grade(name: str, g: float) -> None:
    if not 0.0 <= g <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {g}")


def _trapezoid(x: np.ndarray, a: float, b: float, c: float, d: float, h: float) -> np.ndarray:
    # (x - a) / (b - a) is exactly 1 at x == b, so plateau grades stay exact;
    # near-vertical ramps overflow to inf and are clipped
    with np.errstate(over="ignore"):
        rise = (x - a) / (b - a) if b > a else np.where(x >= a, 1.0, 0.0)
        fall = (d - x) / (d - c) if d > c else np.where(x <= d, 1.0, 0.0)
    return h * np.clip(np.minimum(rise, fall), 0.0, 1.0)


@dataclass(frozen=True)
class Trapezoid(MembershipFunction):
    a: float
    b: float
    c: float
    d: float
    height: float = 1.0

    def __post_init__(self) -> None:
        if not self.a <= self.b <= self.c <= self.d:
            raise ValueError(f"trapezoid needs a <= b <= c <= d, got {(self.a, self.b, self.c, self.d)}")
        if not 0.0 < self.height <= 1.0:
            raise ValueError(f"height must lie in (0, 1], got {self.height}")

    def evaluate(self, x):
        return _trapezoid(np.atleast_1d(x), self.a, self.b, self.c, self.d, self.height)

    @property
    def breakpoints(self):
        return tuple(sorted({self.a, self.b, self.c, self.d}))

    def shifted(self, dx: float) -> Trapezoid:
        return Trapezoid(self.a + dx, self.b + dx, self.c + dx, self.d + dx, self.height)

    def scaled(self, factor: float) -> Trapezoid:
        return Trapezoid(self.a, self.b, self.c, self.d, self.height * factor)


@dataclass(frozen=True)
class Triangle(MembershipFunction):
    a: float
    b: float
    c: float
    height: float = 1.0

    def __post_init__(self) -> None:
        if not self.a <= self.b <= self.c:
            raise ValueError(f"triangle needs a <= b <= c, got {(self.a, self.b, self.c)}")
        if not 0.0 < self.height <= 1.0:
            raise ValueError(f"height must lie in (0, 1], got {self.height}")

    def evaluate(self, x):
        x = np.atleast_1d(x)
        return _trapezoid(x, self.a, self.b, self.b, self.c, self.height)

    @property
    def breakpoints(self):
        return tuple(sorted({self.a, self.b, self.c}))

    def shifted(self, dx: float) -> Triangle:
        return Triangle(self.a + dx, self.b + dx, self.c + dx, self.height)

    def scaled(self, factor: float) -> Triangle:
        return Triangle(self.a, self.b, self.c, self.height * factor)


@dataclass(frozen=True)
class PiecewiseLinear(MembershipFunction):
    """Linear interpolation through ``(x, grade)`` vertices; zero outside them."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        verts = tuple((float(x), float(g)) for x, g in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("piecewise-linear function needs at least one vertex")
        for i, (_, g) in enumerate(verts):
            _check_grade(f"vertex {i} grade", g)
        xs = [x for x, _ in verts]
        if any(x1 >= x2 for x1, x2 in zip(xs, xs[1:])):
            raise ValueError("vertex x-coordinates must be strictly increasing")

    @cached_property
    def _xs(self) -> np.ndarray:
        return np.array([x for x, _ in self.vertices])

    @cached_property
    def _gs(self) -> np.ndarray:
        return np.array([g for _, g in self.vertices])

    def evaluate(self, x):
        return np.interp(np.atleast_1d(x), self._xs, self._gs, left=0.0, right=0.0)

    @property
    def breakpoints(self):
        return tuple(self._xs.tolist())

    @property
    def height(self):
        return float(self._gs.max())


class Sampled(PiecewiseLinear):
    """Grades recorded at sample points, linearly interpolated in between."""

    def __init__(self, xs, grades):
        xs = tuple(float(x) for x in xs)
        grades = tuple(float(g) for g in grades)
        if len(xs) != len(grades):
            raise ValueError(f"{len(xs)} sample points but {len(grades)} grades")
        super().__init__(tuple(zip(xs, grades)))

    @classmethod
    def on_grid(cls, grid: DomainGrid, grades) -> Sampled:
        grades = list(grades)
        if len(grades) != grid.n:
            raise ValueError(f"grid has {grid.n} points but {len(grades)} grades were given")
        return cls(grid.points.tolist(), grades)

    @property
    def xs(self) -> tuple[float, ...]:
        return tuple(x for x, _ in self.vertices)

    @property
    def grades(self) -> tuple[float, ...]:
        return tuple(g for _, g in self.vertices)

    def __repr__(self) -> str:
        return f"Sampled(xs={self.xs!r}, grades={self.grades!r})"


@dataclass(frozen=True)
class Blend(MembershipFunction):
    """Pointwise ``(1 - weight) * first + weight * second``.

    zSlice bounds are blends of the principal FOU's lower and upper functions.
    """

    first: MembershipFunction
    second: MembershipFunction
    weight: float

    def evaluate(self, x):
        w = self.weight
        return (1.0 - w) * self.first.evaluate(x) + w * self.second.evaluate(x)

    @cached_property
    def breakpoints(self):
        return tuple(sorted(set(self.first.breakpoints) | set(self.second.breakpoints)))

    @property
    def height(self):
        pts = probe_points(self, self)
        return float(self.evaluate(pts).max())


def probe_points(*mfs: MembershipFunction) -> np.ndarray:
    """Breakpoints of all ``mfs`` plus the midpoints between them.

    Each function is linear between consecutive breakpoints, so a pointwise
    comparison that holds at these points holds everywhere except possibly in
    the one-sided limits at a jump.
    """
    bps = sorted(set().union(*(mf.breakpoints for mf in mfs)))
    pts = np.array(bps, dtype=float)
    if len(pts) > 1:
        pts = np.concatenate([pts, 0.5 * (pts[:-1] + pts[1:])])
    return pts


def eval_mf(mf: MembershipFunction, x: float) -> float:
    return float(mf.evaluate(np.atleast_1d(np.asarray(x, dtype=float)))[0])


def discretize(mf: MembershipFunction, grid: DomainGrid) -> np.ndarray:
    return mf.evaluate(grid.points)


def mf_leq(a: MembershipFunction, b: MembershipFunction, grid: DomainGrid) -> bool:
    """Pointwise grade dominance of ``a`` by ``b`` at every grid point."""
    return bool(np.all(discretize(a, grid) <= discretize(b, grid)))
