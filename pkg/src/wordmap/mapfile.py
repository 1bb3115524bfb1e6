"""The word-map document: assembly, canonical JSON serialization, parsing.

This file format is the contract between the pipeline and the browser
viewer, so serialization is canonical and bit-stable:

* one JSON object ``{"meta": {...}, "points": [...]}``, UTF-8, compact
  separators, one trailing newline;
* meta keys in the order: schema_version, source_a_name, source_b_name,
  dim, perplexity, generated_at;
* point keys in the order: word, x, y, set, count_a, count_b;
* points sorted by word (code-point order);
* reals rendered as the shortest decimal that parses back to the same
  float.

Schema version 1.  ``set`` is "a", "b", or "both"; a point's count in the
other source is zero exactly when the word is unique to one source.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .diff import DiffResult, SetLabel
from .errors import ConsistencyError, MapValidationError
from .tsne import TsneResult

SCHEMA_VERSION = 1

_META_KEYS = ("schema_version", "source_a_name", "source_b_name", "dim", "perplexity", "generated_at")
_POINT_KEYS = ("word", "x", "y", "set", "count_a", "count_b")
_SET_VALUES = {label.value for label in SetLabel}


@dataclass(frozen=True)
class MapPoint:
    word: str
    x: float
    y: float
    set_label: SetLabel
    count_a: int
    count_b: int


@dataclass(frozen=True)
class MapMeta:
    source_a_name: str
    source_b_name: str
    dim: int
    perplexity: float
    generated_at: str
    schema_version: int = SCHEMA_VERSION


@dataclass(frozen=True)
class WordMap:
    """A validated, word-sorted map document."""

    meta: MapMeta
    points: tuple[MapPoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        ordered = tuple(sorted(self.points, key=lambda pt: pt.word))
        object.__setattr__(self, "points", ordered)
        _validate(self)

    def set_sizes(self) -> dict[str, int]:
        sizes = {label.value: 0 for label in SetLabel}
        for pt in self.points:
            sizes[pt.set_label.value] += 1
        return sizes


def _validate(word_map: WordMap) -> None:
    meta = word_map.meta
    if meta.schema_version != SCHEMA_VERSION:
        raise MapValidationError(
            "meta.schema_version", f"unsupported version {meta.schema_version!r}"
        )
    if not isinstance(meta.source_a_name, str) or not isinstance(meta.source_b_name, str):
        raise MapValidationError("meta", "source names must be strings")
    if not isinstance(meta.dim, int) or isinstance(meta.dim, bool) or meta.dim < 1:
        raise MapValidationError("meta.dim", "must be a positive integer")
    if not isinstance(meta.perplexity, (int, float)) or isinstance(meta.perplexity, bool) \
            or not math.isfinite(meta.perplexity) or meta.perplexity <= 0:
        raise MapValidationError("meta.perplexity", "must be a finite positive number")
    if not isinstance(meta.generated_at, str) or not meta.generated_at:
        raise MapValidationError("meta.generated_at", "must be a non-empty string")

    seen: set[str] = set()
    for i, pt in enumerate(word_map.points):
        path = f"points[{i}]"
        if not isinstance(pt.word, str) or not pt.word:
            raise MapValidationError(f"{path}.word", "must be a non-empty string")
        if pt.word in seen:
            raise MapValidationError(f"{path}.word", f"duplicate word {pt.word!r}")
        seen.add(pt.word)
        for key in ("x", "y"):
            value = getattr(pt, key)
            if not isinstance(value, (int, float)) or isinstance(value, bool) \
                    or not math.isfinite(value):
                raise MapValidationError(f"{path}.{key}", "must be a finite number")
        if not isinstance(pt.set_label, SetLabel):
            raise MapValidationError(f"{path}.set", f"must be one of {sorted(_SET_VALUES)}")
        for key in ("count_a", "count_b"):
            value = getattr(pt, key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise MapValidationError(f"{path}.{key}", "must be a non-negative integer")
        if pt.set_label is SetLabel.A_ONLY and pt.count_b != 0:
            raise MapValidationError(f"{path}.count_b", 'must be 0 when set is "a"')
        if pt.set_label is SetLabel.B_ONLY and pt.count_a != 0:
            raise MapValidationError(f"{path}.count_a", 'must be 0 when set is "b"')
        if pt.set_label is SetLabel.BOTH and (pt.count_a < 1 or pt.count_b < 1):
            raise MapValidationError(f"{path}", 'counts must be >= 1 when set is "both"')


def build_map(
    d: DiffResult,
    coords: TsneResult | np.ndarray,
    word_order: list[str],
    meta: MapMeta,
) -> WordMap:
    """Pair each word with its coordinate row and its diff label/counts.

    `word_order[i]` corresponds to coordinate row i.  Every word must
    appear in exactly one diff set, exactly once; mismatched lengths raise
    ConsistencyError.
    """
    xy = coords.coords if isinstance(coords, TsneResult) else np.asarray(coords, dtype=np.float64)
    if xy.ndim != 2 or (len(word_order) and xy.shape[1] != 2):
        raise ConsistencyError("coordinates must be an n x 2 matrix")
    if len(word_order) != xy.shape[0]:
        raise ConsistencyError(
            f"{len(word_order)} words but {xy.shape[0]} coordinate rows"
        )
    if len(set(word_order)) != len(word_order):
        raise ConsistencyError("word_order contains duplicates")
    points = []
    for i, word in enumerate(word_order):
        label = d.label_of(word)  # raises ConsistencyError for unknown words
        count_a, count_b = d.counts_of(word)
        points.append(
            MapPoint(
                word=word,
                x=float(xy[i, 0]),
                y=float(xy[i, 1]),
                set_label=label,
                count_a=count_a,
                count_b=count_b,
            )
        )
    return WordMap(meta=meta, points=tuple(points))


def serialize_map(word_map: WordMap) -> bytes:
    """Canonical JSON bytes of the map (see module docstring)."""
    _validate(word_map)
    meta = word_map.meta
    doc = {
        "meta": {
            "schema_version": meta.schema_version,
            "source_a_name": meta.source_a_name,
            "source_b_name": meta.source_b_name,
            "dim": meta.dim,
            "perplexity": float(meta.perplexity),
            "generated_at": meta.generated_at,
        },
        "points": [
            {
                "word": pt.word,
                "x": pt.x,
                "y": pt.y,
                "set": pt.set_label.value,
                "count_a": pt.count_a,
                "count_b": pt.count_b,
            }
            for pt in word_map.points
        ],
    }
    return (
        json.dumps(doc, ensure_ascii=False, separators=(",", ":"), allow_nan=False) + "\n"
    ).encode("utf-8")


def _require(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise MapValidationError(path, message)


def parse_map(data: bytes) -> WordMap:
    """Parse and validate map JSON; errors name the offending JSON path."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise MapValidationError("$", f"not valid UTF-8: {exc.reason}") from exc
    except json.JSONDecodeError as exc:
        raise MapValidationError("$", f"not valid JSON: {exc.msg} (line {exc.lineno})") from exc

    _require(isinstance(doc, dict), "$", "top level must be an object")
    _require(set(doc) == {"meta", "points"}, "$", 'expected exactly the keys "meta" and "points"')
    meta_doc = doc["meta"]
    _require(isinstance(meta_doc, dict), "meta", "must be an object")
    # Version gate first, so future-format files fail with the right message.
    _require("schema_version" in meta_doc, "meta.schema_version", "missing")
    version = meta_doc["schema_version"]
    _require(
        isinstance(version, int) and not isinstance(version, bool) and version == SCHEMA_VERSION,
        "meta.schema_version",
        f"unsupported version {version!r} (this reader supports {SCHEMA_VERSION})",
    )
    _require(
        set(meta_doc) == set(_META_KEYS),
        "meta",
        f"expected exactly the keys {list(_META_KEYS)}",
    )
    _require(isinstance(meta_doc["source_a_name"], str), "meta.source_a_name", "must be a string")
    _require(isinstance(meta_doc["source_b_name"], str), "meta.source_b_name", "must be a string")
    perplexity = meta_doc["perplexity"]
    _require(
        isinstance(perplexity, (int, float)) and not isinstance(perplexity, bool),
        "meta.perplexity",
        "must be a number",
    )

    points_doc = doc["points"]
    _require(isinstance(points_doc, list), "points", "must be an array")
    points = []
    seen_words: set[str] = set()
    for i, pt in enumerate(points_doc):
        path = f"points[{i}]"
        _require(isinstance(pt, dict), path, "must be an object")
        _require(
            set(pt) == set(_POINT_KEYS), path, f"expected exactly the keys {list(_POINT_KEYS)}"
        )
        word = pt["word"]
        _require(isinstance(word, str) and bool(word), f"{path}.word", "must be a non-empty string")
        _require(word not in seen_words, f"{path}.word", f"duplicate word {word!r}")
        seen_words.add(word)
        _require(
            isinstance(pt["set"], str) and pt["set"] in _SET_VALUES,
            f"{path}.set",
            f"must be one of {sorted(_SET_VALUES)}",
        )
        for key in ("x", "y"):
            _require(
                isinstance(pt[key], (int, float))
                and not isinstance(pt[key], bool)
                and math.isfinite(pt[key]),
                f"{path}.{key}",
                "must be a finite number",
            )
        for key in ("count_a", "count_b"):
            _require(
                isinstance(pt[key], int) and not isinstance(pt[key], bool) and pt[key] >= 0,
                f"{path}.{key}",
                "must be a non-negative integer",
            )
        label = SetLabel(pt["set"])
        _require(
            not (label is SetLabel.A_ONLY and pt["count_b"] != 0),
            f"{path}.count_b",
            'must be 0 when set is "a"',
        )
        _require(
            not (label is SetLabel.B_ONLY and pt["count_a"] != 0),
            f"{path}.count_a",
            'must be 0 when set is "b"',
        )
        _require(
            not (label is SetLabel.BOTH and (pt["count_a"] < 1 or pt["count_b"] < 1)),
            path,
            'counts must be >= 1 when set is "both"',
        )
        points.append(
            MapPoint(
                word=word,
                x=float(pt["x"]),
                y=float(pt["y"]),
                set_label=label,
                count_a=pt["count_a"],
                count_b=pt["count_b"],
            )
        )
    meta = MapMeta(
        schema_version=version,
        source_a_name=meta_doc["source_a_name"],
        source_b_name=meta_doc["source_b_name"],
        dim=meta_doc["dim"],
        perplexity=float(perplexity),
        generated_at=meta_doc["generated_at"],
    )
    return WordMap(meta=meta, points=tuple(points))
