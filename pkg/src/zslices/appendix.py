"""Worked example: two zSlices models of one GT2 set with 4 and 3 zLevels.

Both models are stored as gt2-sampled documents over x = 1..4 and compared
with the Jaccard measure on exactly those four points.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .documents import LoadedSet, parse_document
from .gt2 import weighted_mean, zslices_breakdown
from .it2 import JACCARD
from .mf import DomainGrid

# Published per-level similarities, aggregate and weight total, 3 decimals.
REFERENCE_LEVELS = (0.25, 0.33, 0.5, 0.66, 0.75, 1.0)
REFERENCE_VALUES = (1.0, 0.887, 0.944, 0.943, 0.889, 1.0)
REFERENCE_AGGREGATE = 0.947
REFERENCE_WEIGHT_TOTAL = 3.49
TOLERANCE = 0.001

GRID = DomainGrid(1.0, 4.0, 4)


def load_fixture(name: str) -> LoadedSet:
    text = resources.files("zslices").joinpath("data", f"appendix_{name}.json").read_text()
    return parse_document(text)


@dataclass(frozen=True)
class AppendixReport:
    levels: tuple[float, ...]
    values: tuple[float, ...]
    aggregate: float
    weight_total: float

    def mismatches(self) -> list[str]:
        out = []
        if self.levels != REFERENCE_LEVELS:
            out.append(f"zLevel union {self.levels} != {REFERENCE_LEVELS}")
        for z, got, want in zip(self.levels, self.values, REFERENCE_VALUES):
            if abs(got - want) > TOLERANCE:
                out.append(f"z={z}: {got:.6f} differs from {want} by more than {TOLERANCE}")
        if abs(self.aggregate - REFERENCE_AGGREGATE) > TOLERANCE:
            out.append(f"aggregate {self.aggregate:.6f} differs from {REFERENCE_AGGREGATE}")
        if abs(self.weight_total - REFERENCE_WEIGHT_TOTAL) > TOLERANCE:
            out.append(f"weight total {self.weight_total:.6f} differs from {REFERENCE_WEIGHT_TOTAL}")
        return out


def reproduce() -> AppendixReport:
    b = load_fixture("B").fuzzy_set
    c = load_fixture("C").fuzzy_set
    rows = zslices_breakdown(b, c, JACCARD, GRID)
    return AppendixReport(
        levels=tuple(r.z for r in rows),
        values=tuple(float(r.value) for r in rows),
        aggregate=float(weighted_mean(rows)),
        weight_total=float(sum(r.z for r in rows)),
    )
