"""Acceptance criteria, one test each, each printing a PASS/FAIL line."""
import time

import numpy as np
import pytest

import oracles
from conftest import random_it2, trapezoid_fou
from zslices import appendix, cli
from zslices.axioms import CHECK_GRID, check_overlapping, overlaps, verify_measure
from zslices.gt2 import sim_zslices, zlevel_union
from zslices.it2 import (
    ALL_MEASURES,
    BUSTINCE,
    ZENG_LI,
    Interval,
    TNorm,
    endpoints,
    sim_bustince,
    sim_gorzalczany,
    sim_jaccard,
    sim_zeng_li,
)
from zslices.mf import DomainGrid, Trapezoid
from zslices.sets import DEFAULT_LEVELS, IT2Set, promote_it2, slice_gt2


@pytest.fixture
def report(capsys):
    def _report(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        assert ok, detail

    return _report


def test_c1_appendix_golden(report):
    start = time.perf_counter()
    rep = appendix.reproduce()
    elapsed = time.perf_counter() - start
    problems = rep.mismatches()
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f} s")
    values = ", ".join(f"{v:.4f}" for v in rep.values)
    report("1 appendix worked example", not problems, "; ".join(problems) or f"[{values}] -> {rep.aggregate:.4f}")


def test_c2_zlevel_union(report):
    b = slice_gt2(trapezoid_fou(1, 3, 5, 7), (0.25, 0.5, 0.75, 1.0))
    c = slice_gt2(trapezoid_fou(2, 4, 6, 8), (0.33, 0.66, 1.0))
    union = zlevel_union(b, c)
    report("2 zLevel union", union == (0.25, 0.33, 0.5, 0.66, 0.75, 1.0), str(union))


def test_c3_single_level_reduction(report):
    rng = np.random.default_rng(2024)
    bad = []
    for i in range(100):
        a, b = random_it2(rng, CHECK_GRID), random_it2(rng, CHECK_GRID)
        pa, pb = promote_it2(a), promote_it2(b)
        for m in ALL_MEASURES:
            if sim_zslices(pa, pb, m, CHECK_GRID) != m(a, b, CHECK_GRID):
                bad.append(f"pair {i} {m.name}")
    report("3 single-slice reduction is bit-exact", not bad, ", ".join(bad[:5]) or "100 pairs x 4 measures")


def test_c4_axiom_pattern_on_it2_sets(report, capsys):
    status = cli.main(["verify", "--measure", "all", "--trials", "1000", "--seed", "0", "--it2"])
    capsys.readouterr()
    problems = [] if status == cli.EXIT_OK else [f"verify exited {status}"]

    # constructed unequal pair with matching lower and upper maxima
    grid = CHECK_GRID
    a = IT2Set(Trapezoid(2, 3, 4, 5, 0.6), Trapezoid(1, 3, 4, 6, 1.0))
    b = IT2Set(Trapezoid(2.5, 3.5, 4, 4.5, 0.6), Trapezoid(2, 3.2, 4.2, 5, 1.0))
    if a.sample(grid)[1].tolist() == b.sample(grid)[1].tolist():
        problems.append("constructed pair is not distinct on the grid")
    if sim_gorzalczany(a, b, grid) != Interval(1.0, 1.0):
        problems.append(f"gorzalczany gave {sim_gorzalczany(a, b, grid)}")

    # disjoint-set witnesses with positive values
    for m in (ZENG_LI, BUSTINCE):
        res = check_overlapping(m, trials=1000, seed=0, levels=None)
        if res.holds or res.witness is None:
            problems.append(f"{m.name}: no overlapping witness")
            continue
        x, y = res.witness.sets
        if overlaps(x, y, grid) or endpoints(res.witness.values[0])[1] <= 0:
            problems.append(f"{m.name}: witness is not a disjoint pair with a positive value")
    report("4 property pattern on interval sets (1000 trials)", not problems, "; ".join(problems))


def test_c5_axiom_pattern_on_four_level_sets(report):
    start = time.perf_counter()
    problems = []
    for m in ALL_MEASURES:
        rep = verify_measure(m, trials=500, seed=0, levels=DEFAULT_LEVELS)
        if rep.mismatches():
            problems.append(f"{m.name}: {rep.mismatches()}")
    elapsed = time.perf_counter() - start
    if elapsed >= 10.0:
        problems.append(f"took {elapsed:.2f} s")
    report("5 property pattern on 4-level sets (500 trials)", not problems, "; ".join(problems) or f"{elapsed:.2f} s")


def test_c6_oracle_equivalence(report):
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        a, b = random_it2(rng, CHECK_GRID), random_it2(rng, CHECK_GRID)
        g = [x.tolist() for x in (*a.sample(CHECK_GRID), *b.sample(CHECK_GRID))]
        pairs = [
            ((sim_zeng_li(a, b, CHECK_GRID),) * 2, (oracles.zeng_li(*g),) * 2),
            ((sim_jaccard(a, b, CHECK_GRID),) * 2, (oracles.jaccard(*g),) * 2),
            (tuple(sim_gorzalczany(a, b, CHECK_GRID)), oracles.gorzalczany(*g)),
        ]
        for t in TNorm:
            pairs.append((tuple(sim_bustince(a, b, CHECK_GRID, t)), oracles.bustince(*g, t.value)))
        for got, want in pairs:
            worst = max(worst, *(abs(x - y) for x, y in zip(got, want)))
    report("6 oracle equivalence (200 pairs)", worst <= 1e-12, f"max deviation {worst:.2e}")


def test_c7_bustince_constancy(report):
    a = trapezoid_fou(0, 1, 2, 3, h_up=0.9, h_low=0.6)
    near = trapezoid_fou(4, 5, 6, 7, h_up=0.9, h_low=0.6)
    far = trapezoid_fou(6.5, 7.5, 8.5, 9.5, h_up=0.9, h_low=0.6)
    v_near, v_far = sim_bustince(a, near, CHECK_GRID), sim_bustince(a, far, CHECK_GRID)
    ok = v_near == v_far and v_near.hi > 0
    report("7 bustince constant on disjoint pairs", ok, f"{v_near} vs {v_far}")


def test_c8_offset_trends(report):
    offsets = [0.0, 0.5, 1.5, 3.0, 6.0]
    sets = [trapezoid_fou(o, o + 1, o + 2, o + 3) for o in offsets]
    grid = DomainGrid(0.0, 10.0, 101)
    jac = [sim_jaccard(sets[0], s, grid) for s in sets]
    zl = [sim_zeng_li(sets[0], s, grid) for s in sets]
    disjoint = [not overlaps(promote_it2(sets[0]), promote_it2(s), grid) for s in sets]
    problems = []
    if any(x < y for x, y in zip(jac, jac[1:])):
        problems.append(f"jaccard not non-increasing: {jac}")
    if not any(disjoint):
        problems.append("no disjoint pair constructed")
    for d, j, z in zip(disjoint, jac, zl):
        if d and (j != 0.0 or z <= 0.0):
            problems.append(f"disjoint pair gave jaccard {j}, zeng-li {z}")
    detail = "; ".join(problems) or "jaccard " + ", ".join(f"{x:.3f}" for x in jac)
    report("8 offset trends", not problems, detail)
