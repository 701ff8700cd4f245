"""JSON set documents.

A document names one fuzzy set and tags how it is built::

    {"name": "A", "kind": "t1", "mf": {"shape": "triangle", "a": 0, "b": 1, "c": 2}}
    {"name": "A", "kind": "it2", "lower": MF, "upper": MF}
    {"name": "A", "kind": "gt2-sliced", "principal": {"lower": MF, "upper": MF},
     "secondary": "triangular", "levels": [0.25, 0.5, 0.75, 1.0]}
    {"name": "A", "kind": "gt2-sampled", "x": [1, 2, 3],
     "slices": [{"z": 0.5, "lower": [...], "upper": [...]}, ...]}

where ``MF`` is one of::

    {"shape": "trapezoid", "a": .., "b": .., "c": .., "d": .., "height": 1.0}
    {"shape": "triangle", "a": .., "b": .., "c": .., "height": 1.0}
    {"shape": "piecewise-linear", "points": [[x, grade], ...]}
    {"shape": "sampled", "x": [...], "grades": [...]}

Unknown fields, out-of-range grades and non-nested slices are rejected.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Literal, NamedTuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, TypeAdapter, ValidationError, model_validator

from . import mf as mfs
from .sets import GT2Set, IT2Set, T1Set, VerticalSlice, from_vertical_slices, slice_gt2

Grade = Annotated[float, Field(ge=0.0, le=1.0)]
Height = Annotated[float, Field(gt=0.0, le=1.0)]
ZLevel = Annotated[float, Field(gt=0.0, le=1.0)]


class DocumentError(ValueError):
    pass


_STRICT = ConfigDict(extra="forbid", strict=True, allow_inf_nan=False)


class _Doc(BaseModel):
    model_config = _STRICT

    _built: object = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _construct(self):
        self._built = self._build()
        return self

    def _build(self):
        raise NotImplementedError

    def build(self):
        return self._built


class TrapezoidDoc(_Doc):
    shape: Literal["trapezoid"]
    a: float
    b: float
    c: float
    d: float
    height: Height = 1.0

    def _build(self):
        return mfs.Trapezoid(self.a, self.b, self.c, self.d, self.height)


class TriangleDoc(_Doc):
    shape: Literal["triangle"]
    a: float
    b: float
    c: float
    height: Height = 1.0

    def _build(self):
        return mfs.Triangle(self.a, self.b, self.c, self.height)


class PiecewiseLinearDoc(_Doc):
    shape: Literal["piecewise-linear"]
    points: list[tuple[float, Grade]] = Field(min_length=1)

    def _build(self):
        return mfs.PiecewiseLinear(tuple(self.points))


class SampledDoc(_Doc):
    shape: Literal["sampled"]
    x: list[float] = Field(min_length=1)
    grades: list[Grade] = Field(min_length=1)

    def _build(self):
        return mfs.Sampled(self.x, self.grades)


MFDoc = Annotated[
    Union[TrapezoidDoc, TriangleDoc, PiecewiseLinearDoc, SampledDoc], Field(discriminator="shape")
]


class FOUDoc(_Doc):
    lower: MFDoc
    upper: MFDoc

    def _build(self):
        return IT2Set(self.lower.build(), self.upper.build())


class T1Doc(_Doc):
    name: str = Field(min_length=1)
    kind: Literal["t1"]
    mf: MFDoc

    def _build(self):
        return T1Set(self.mf.build())


class IT2Doc(_Doc):
    name: str = Field(min_length=1)
    kind: Literal["it2"]
    lower: MFDoc
    upper: MFDoc

    def _build(self):
        return IT2Set(self.lower.build(), self.upper.build())


class GT2SlicedDoc(_Doc):
    name: str = Field(min_length=1)
    kind: Literal["gt2-sliced"]
    principal: FOUDoc
    secondary: Literal["triangular"] = "triangular"
    levels: list[ZLevel] = Field(min_length=1)

    def _build(self):
        return slice_gt2(self.principal.build(), self.levels, self.secondary)


class SliceDoc(BaseModel):
    model_config = _STRICT

    z: ZLevel
    lower: list[Grade]
    upper: list[Grade]


class GT2SampledDoc(_Doc):
    name: str = Field(min_length=1)
    kind: Literal["gt2-sampled"]
    x: list[float] = Field(min_length=1)
    slices: list[SliceDoc] = Field(min_length=1)

    def _build(self):
        n = len(self.x)
        for i, s in enumerate(self.slices):
            for side in ("lower", "upper"):
                if len(getattr(s, side)) != n:
                    raise ValueError(f"slices.{i}.{side} has {len(getattr(s, side))} grades for {n} x values")
        columns = [
            VerticalSlice(x, tuple((s.z, (s.lower[j], s.upper[j])) for s in self.slices))
            for j, x in enumerate(self.x)
        ]
        return from_vertical_slices(columns)


SetDocument = Annotated[
    Union[T1Doc, IT2Doc, GT2SlicedDoc, GT2SampledDoc], Field(discriminator="kind")
]
_adapter = TypeAdapter(SetDocument)


def json_schema() -> dict:
    return _adapter.json_schema()


def _describe(err: ValidationError) -> str:
    lines = []
    for e in err.errors():
        loc = ".".join(str(p) for p in e["loc"]) or "<document>"
        lines.append(f"{loc}: {e['msg']}")
    return "; ".join(lines)


class LoadedSet(NamedTuple):
    name: str
    fuzzy_set: T1Set | IT2Set | GT2Set
    # sample points of a gt2-sampled document
    sample_points: tuple[float, ...] | None = None


def parse_document(data: str | bytes | dict) -> LoadedSet:
    """Validate a document given as JSON text or as already-decoded JSON."""
    if not isinstance(data, (str, bytes)):
        data = json.dumps(data)
    try:
        doc = _adapter.validate_json(data)
    except ValidationError as err:
        raise DocumentError(_describe(err)) from None
    points = tuple(sorted(doc.x)) if isinstance(doc, GT2SampledDoc) else None
    return LoadedSet(doc.name, doc.build(), points)


def load_document(path: str | Path) -> LoadedSet:
    path = Path(path)
    try:
        data = path.read_text()
    except OSError as err:
        raise DocumentError(f"{path}: {err.strerror}") from None
    try:
        return parse_document(data)
    except DocumentError as err:
        raise DocumentError(f"{path}: {err}") from None
