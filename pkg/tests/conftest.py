import json
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from zslices.mf import DomainGrid, Sampled, Trapezoid
from zslices.sets import IT2Set

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parents[1] / "src" / "zslices" / "data"

SMALL_GRID = DomainGrid(0.0, 1.0, 12)


@st.composite
def it2_grades(draw, n=SMALL_GRID.n):
    """Random (lower, upper) grade lists with lower <= upper pointwise."""
    grade = st.floats(0.0, 1.0, allow_nan=False)
    pairs = draw(st.lists(st.tuples(grade, grade), min_size=n, max_size=n))
    lower = [min(p) for p in pairs]
    upper = [max(p) for p in pairs]
    return lower, upper


@st.composite
def it2_sets(draw, grid=SMALL_GRID):
    lower, upper = draw(it2_grades(grid.n))
    return IT2Set(Sampled.on_grid(grid, lower), Sampled.on_grid(grid, upper))


def random_it2(rng, grid):
    """Random sampled IT2 set on ``grid``, with some all-zero stretches."""
    a = rng.uniform(0, 1, grid.n)
    b = rng.uniform(0, 1, grid.n)
    mask = rng.uniform(size=grid.n) < 0.3
    a[mask] = 0.0
    b[mask] = 0.0
    return IT2Set(Sampled.on_grid(grid, np.minimum(a, b)), Sampled.on_grid(grid, np.maximum(a, b)))


def trapezoid_fou(a, b, c, d, h_up=1.0, h_low=0.6, inset=0.25):
    upper = Trapezoid(a, b, c, d, h_up)
    lower = Trapezoid(a + inset, b + inset, c - inset, d - inset, h_low)
    return IT2Set(lower, upper)


@pytest.fixture
def write_doc(tmp_path):
    def _write(doc, name=None):
        path = tmp_path / f"{name or doc['name']}.json"
        path.write_text(json.dumps(doc))
        return path

    return _write
