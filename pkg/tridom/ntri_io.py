"""Reading and writing ``.ntri`` instances, corpus manifests and user-supplied sets.

An input file is either one ``.ntri`` JSON object or a manifest with one object per line;
``read_instances`` accepts both. Manifest lines may carry a ``meta`` object describing how
the instance was generated.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import jsonschema
from pydantic import BaseModel, ConfigDict, ValidationError

from .errors import FormatError
from .graph_core import NearTriangulation, RawEmbedding, relabel, validate

logger = logging.getLogger(__name__)


class NtriFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    outer: list[int]
    rotation: dict[int, list[int]]
    coords: dict[int, tuple[float, float]] | None = None
    labels: dict[int, str] | None = None


class ManifestLine(NtriFile):
    meta: dict[str, Any] = {}


@dataclass
class CorpusItem:
    graph: NearTriangulation
    meta: dict[str, Any] = field(default_factory=dict)
    coords: dict[int, tuple[float, float]] | None = None


SET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "definitions": {
        "pairs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        }
    },
    "oneOf": [
        {"$ref": "#/definitions/pairs"},
        {
            "type": "object",
            "properties": {"mode": {"enum": ["paired", "semipaired"]}, "pairs": {"$ref": "#/definitions/pairs"}},
            "required": ["pairs"],
            "additionalProperties": False,
        },
    ],
}


def _compact(g: NearTriangulation) -> tuple[NearTriangulation, dict[int, int]]:
    mapping = {v: i for i, v in enumerate(g.vertices)}
    if all(v == i for v, i in mapping.items()):
        return g, mapping
    named = {v: g.labels.get(v, str(v)) for v in g.vertices}
    renamed = relabel(g, mapping)
    compact = NearTriangulation(rotation=renamed.rotation, outer=renamed.outer, labels={mapping[v]: s for v, s in named.items()})
    return compact, mapping


def to_ntri(g: NearTriangulation, coords=None, meta: dict[str, Any] | None = None) -> NtriFile:
    """The file model of ``g``; ids are compacted to ``0..n-1`` when surgery left gaps."""
    g, mapping = _compact(g)
    if coords:
        coords = {mapping[v]: tuple(xy) for v, xy in coords.items() if v in mapping}
    fields = dict(
        n=g.n,
        outer=list(g.outer),
        rotation={v: list(nbrs) for v, nbrs in g.rotation.items()},
        coords=coords,
        labels=dict(g.labels) or None,
    )
    return ManifestLine(**fields, meta=meta) if meta is not None else NtriFile(**fields)


def from_ntri(model: NtriFile) -> NearTriangulation:
    raw = RawEmbedding(
        rotation={v: tuple(nbrs) for v, nbrs in model.rotation.items()},
        outer=tuple(model.outer),
        n=model.n,
        labels=model.labels,
    )
    return validate(raw)


def dump_ntri(g: NearTriangulation, coords=None, meta: dict[str, Any] | None = None, indent: int | None = None) -> str:
    return to_ntri(g, coords, meta).model_dump_json(exclude_none=True, indent=indent)


def _model(obj: Any, where: str) -> NtriFile:
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected a JSON object", where=where)
    try:
        return (ManifestLine if "meta" in obj else NtriFile).model_validate(obj)
    except ValidationError as exc:
        raise FormatError(f"{where}: {exc.error_count()} schema errors", where=where, errors=json.loads(exc.json())) from exc


def _item(model: NtriFile) -> CorpusItem:
    meta = model.meta if isinstance(model, ManifestLine) else {}
    return CorpusItem(graph=from_ntri(model), meta=dict(meta), coords=model.coords)


def parse_ntri(text: str) -> NearTriangulation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    return from_ntri(_model(obj, "instance"))


def parse_instances(text: str) -> list[CorpusItem]:
    """Instances from a single object or from JSON lines."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = None
    if obj is not None:
        return [_item(_model(obj, "instance"))]

    items = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {number}: not JSON: {exc.msg}", line=number) from exc
        items.append(_item(_model(obj, f"line {number}")))
    logger.debug("read %d manifest lines", len(items))
    return items


def read_instances(path: str | Path) -> list[CorpusItem]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}", path=str(path)) from exc
    return parse_instances(text)


def write_ntri(path: str | Path, g: NearTriangulation, coords=None) -> None:
    Path(path).write_text(dump_ntri(g, coords, indent=2) + "\n")


def write_manifest(path: str | Path, items: list[CorpusItem]) -> None:
    lines = [dump_ntri(item.graph, item.coords, meta=item.meta) for item in items]
    Path(path).write_text("".join(line + "\n" for line in lines))


def parse_set(text: str) -> tuple[str | None, list[tuple[int, int]]]:
    """A user-supplied set: ``(mode or None, pairs)``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"--set is not JSON: {exc.msg}") from exc
    try:
        jsonschema.validate(obj, SET_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise FormatError(f"--set does not match the schema: {exc.message}", path=list(exc.absolute_path)) from exc
    if isinstance(obj, dict):
        return obj.get("mode"), [tuple(p) for p in obj["pairs"]]
    return None, [tuple(p) for p in obj]
