import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import SMALL_GRID, random_it2, trapezoid_fou
from zslices.appendix import GRID as APPENDIX_GRID, REFERENCE_LEVELS, load_fixture
from zslices.gt2 import LevelResult, sim_zslices, weighted_mean, zlevel_union, zslices_breakdown
from zslices.it2 import ALL_MEASURES, BUSTINCE, GORZALCZANY, JACCARD, ZENG_LI, Interval, Measure, TNorm, endpoints
from zslices.mf import DomainGrid
from zslices.sets import GT2Set, ZSlice, fou_at, promote_it2, slice_gt2

GRID = DomainGrid(0.0, 10.0, 100)

MEASURES_ALL_TNORMS = [ZENG_LI, JACCARD, GORZALCZANY] + [Measure(BUSTINCE.kind, t) for t in TNorm]

ORACLES = {
    "zeng-li": oracles.zeng_li,
    "jaccard": oracles.jaccard,
    "gorzalczany": oracles.gorzalczany,
}


def oracle_for(measure):
    if measure.kind.value == "bustince":
        return lambda *g: oracles.bustince(*g, measure.tnorm.value)
    return ORACLES[measure.kind.value]


def as_dict(fs, grid):
    lower, upper = fs.sample(grid)
    return {z: (lower[i].tolist(), upper[i].tolist()) for i, z in enumerate(fs.levels)}


def random_levels(rng):
    k = rng.integers(1, 5)
    return sorted(set(np.round(rng.uniform(0.05, 1.0, size=k), 2).tolist()))


def test_zlevel_union_example():
    a = slice_gt2(trapezoid_fou(1, 3, 5, 7), (0.25, 0.5, 0.75, 1.0))
    b = slice_gt2(trapezoid_fou(2, 4, 6, 8), (0.33, 0.66, 1.0))
    assert zlevel_union(a, b) == (0.25, 0.33, 0.5, 0.66, 0.75, 1.0)
    assert zlevel_union(b, a) == zlevel_union(a, b)
    assert zlevel_union(a, a) == a.levels


def test_appendix_breakdown():
    b, c = load_fixture("B").fuzzy_set, load_fixture("C").fuzzy_set
    rows = zslices_breakdown(b, c, JACCARD, APPENDIX_GRID)
    assert tuple(r.z for r in rows) == REFERENCE_LEVELS
    got = [r.value for r in rows]
    assert got == pytest.approx([1.0, 0.887, 0.944, 0.943, 0.889, 1.0], abs=1e-3)
    assert weighted_mean(rows) == pytest.approx(0.947, abs=1e-3)


def test_appendix_matches_oracle():
    b, c = load_fixture("B").fuzzy_set, load_fixture("C").fuzzy_set
    want, per_level = oracles.zslices(as_dict(b, APPENDIX_GRID), as_dict(c, APPENDIX_GRID), oracles.jaccard)
    rows = zslices_breakdown(b, c, JACCARD, APPENDIX_GRID)
    assert [r.value for r in rows] == pytest.approx(per_level, abs=1e-12)
    assert sim_zslices(b, c, JACCARD, APPENDIX_GRID) == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("measure", MEASURES_ALL_TNORMS, ids=str)
def test_multi_level_oracle_equivalence(measure):
    rng = np.random.default_rng(5)
    for _ in range(30):
        a = slice_gt2(random_it2(rng, SMALL_GRID), random_levels(rng))
        b = slice_gt2(random_it2(rng, SMALL_GRID), random_levels(rng))
        want, _ = oracles.zslices(as_dict(a, SMALL_GRID), as_dict(b, SMALL_GRID), oracle_for(measure))
        want = want if isinstance(want, tuple) else (want, want)
        got = endpoints(sim_zslices(a, b, measure, SMALL_GRID))
        assert got == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("measure", ALL_MEASURES, ids=str)
def test_single_level_reduction_is_exact(measure):
    rng = np.random.default_rng(17)
    for _ in range(20):
        a, b = random_it2(rng, SMALL_GRID), random_it2(rng, SMALL_GRID)
        assert sim_zslices(promote_it2(a), promote_it2(b), measure, SMALL_GRID) == measure(a, b, SMALL_GRID)
        # plain IT2 inputs are promoted automatically
        assert sim_zslices(a, b, measure, SMALL_GRID) == measure(a, b, SMALL_GRID)


def test_single_slice_at_any_level_reduces():
    a, b = trapezoid_fou(1, 3, 5, 7), trapezoid_fou(2, 4, 6, 8)
    ga = GT2Set((ZSlice(0.4, a),))
    gb = GT2Set((ZSlice(0.4, b),))
    assert sim_zslices(ga, gb, JACCARD, GRID) == JACCARD(a, b, GRID)


def test_grid_is_required():
    fou = trapezoid_fou(1, 3, 5, 7)
    with pytest.raises(ValueError, match="grid"):
        sim_zslices(fou, fou, JACCARD)


def test_missing_levels_use_next_level_up():
    a = slice_gt2(trapezoid_fou(1, 3, 5, 7), (0.5, 1.0))
    b = slice_gt2(trapezoid_fou(2, 4, 6, 8), (0.25, 1.0))
    rows = zslices_breakdown(a, b, JACCARD, GRID)
    assert [r.z for r in rows] == [0.25, 0.5, 1.0]
    # at z = 0.25, A contributes its 0.5 slice; at z = 0.5, B contributes its top slice
    assert rows[0].value == JACCARD(fou_at(a, 0.5), fou_at(b, 0.25), GRID)
    assert rows[1].value == JACCARD(fou_at(a, 0.5), fou_at(b, 1.0), GRID)


def test_duplicating_a_level_is_invisible():
    plain = slice_gt2(trapezoid_fou(1, 3, 5, 7), (0.5, 1.0))
    other = slice_gt2(trapezoid_fou(2, 4, 6, 8), (0.5, 1.0))
    # an extra level whose FOU equals the next level up adds a copy of that row
    top = fou_at(plain, 1.0)
    padded = GT2Set((ZSlice(0.5, fou_at(plain, 0.5)), ZSlice(0.75, top), ZSlice(1.0, top)))
    rows_x = {r.z: r.value for r in zslices_breakdown(plain, other, JACCARD, GRID)}
    rows_y = {r.z: r.value for r in zslices_breakdown(padded, other, JACCARD, GRID)}
    assert set(rows_y) == {0.5, 0.75, 1.0}
    assert all(rows_y[z] == v for z, v in rows_x.items())
    assert rows_y[0.75] == rows_x[1.0]


level_values = st.lists(
    st.tuples(st.floats(0.01, 1.0), st.floats(0.0, 1.0), st.floats(0.0, 1.0)), min_size=1, max_size=8
)


@given(level_values)
def test_weighted_mean_stays_in_range(rows):
    scalars = [LevelResult(z, v) for z, v, _ in rows]
    mean = weighted_mean(scalars)
    values = [v for _, v, _ in rows]
    assert min(values) <= mean <= max(values)

    intervals = [LevelResult(z, Interval(min(p, q), max(p, q))) for z, p, q in rows]
    lo, hi = weighted_mean(intervals)
    assert min(r.value.lo for r in intervals) <= lo <= max(r.value.lo for r in intervals)
    assert min(r.value.hi for r in intervals) <= hi <= max(r.value.hi for r in intervals)


def test_weighted_mean_of_equal_values_is_that_value():
    rows = [LevelResult(z, 0.3) for z in (0.1, 0.2, 0.7)]
    assert weighted_mean(rows) == pytest.approx(0.3, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_bounds_and_symmetry_multi_level(seed):
    rng = np.random.default_rng(seed)
    a = slice_gt2(random_it2(rng, SMALL_GRID), random_levels(rng))
    b = slice_gt2(random_it2(rng, SMALL_GRID), random_levels(rng))
    for m in MEASURES_ALL_TNORMS:
        lo, hi = endpoints(sim_zslices(a, b, m, SMALL_GRID))
        assert 0.0 <= lo <= hi <= 1.0
        if m.kind.value != "gorzalczany":
            assert sim_zslices(a, b, m, SMALL_GRID) == sim_zslices(b, a, m, SMALL_GRID)
            assert endpoints(sim_zslices(a, a, m, SMALL_GRID)) == (1.0, 1.0)
