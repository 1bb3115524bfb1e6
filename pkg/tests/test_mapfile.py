"""Map assembly, canonical serialization, and schema validation tests."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from wordmap import (
    ConsistencyError,
    DiffResult,
    MapMeta,
    MapPoint,
    MapValidationError,
    SetLabel,
    WordMap,
    build_map,
    parse_map,
    serialize_map,
)

DATA = Path(__file__).parent / "data"


def meta(**overrides) -> MapMeta:
    base = dict(
        source_a_name="alpha.txt",
        source_b_name="beta.txt",
        dim=300,
        perplexity=30.0,
        generated_at="2015-08-28T12:00:00Z",
    )
    base.update(overrides)
    return MapMeta(**base)


def three_point_map() -> WordMap:
    return WordMap(
        meta=meta(),
        points=(
            MapPoint("north", 1.5, -2.25, SetLabel.A_ONLY, 3, 0),
            MapPoint("south", -0.5, 0.75, SetLabel.B_ONLY, 0, 2),
            MapPoint("equator", 0.125, 4.0, SetLabel.BOTH, 5, 7),
        ),
    )


def random_map(seed: int, size: int) -> WordMap:
    rng = np.random.default_rng(seed)
    points = []
    for i in range(size):
        label = SetLabel(["a", "b", "both"][int(rng.integers(3))])
        count_a = int(rng.integers(1, 40)) if label is not SetLabel.B_ONLY else 0
        count_b = int(rng.integers(1, 40)) if label is not SetLabel.A_ONLY else 0
        points.append(
            MapPoint(
                word=f"word{i:04d}",
                x=float(rng.normal() * 100),
                y=float(rng.normal() * 100),
                set_label=label,
                count_a=count_a,
                count_b=count_b,
            )
        )
    return WordMap(meta=meta(), points=tuple(points))


class TestBuildMap:
    def test_one_point_per_set(self):
        d = DiffResult(only_a={"north": 3}, only_b={"south": 2}, both={"equator": (5, 7)})
        coords = np.array([[1.5, -2.25], [-0.5, 0.75], [0.125, 4.0]])
        result = build_map(d, coords, ["north", "south", "equator"], meta())
        by_word = {pt.word: pt for pt in result.points}
        assert by_word["north"].set_label is SetLabel.A_ONLY
        assert (by_word["north"].count_a, by_word["north"].count_b) == (3, 0)
        assert by_word["south"].set_label is SetLabel.B_ONLY
        assert (by_word["south"].count_a, by_word["south"].count_b) == (0, 2)
        assert by_word["equator"].set_label is SetLabel.BOTH
        assert (by_word["equator"].count_a, by_word["equator"].count_b) == (5, 7)
        assert by_word["north"].x == 1.5 and by_word["north"].y == -2.25

    def test_empty_inputs(self):
        d = DiffResult(only_a={}, only_b={}, both={})
        result = build_map(d, np.zeros((0, 2)), [], meta())
        assert result.points == ()

    def test_fifty_words_cross_checked_against_diff(self):
        rng = np.random.default_rng(8)
        words = [f"w{i:02d}" for i in range(50)]
        d = DiffResult(
            only_a={w: i + 1 for i, w in enumerate(words[:20])},
            only_b={w: i + 2 for i, w in enumerate(words[20:35])},
            both={w: (i + 1, i + 3) for i, w in enumerate(words[35:])},
        )
        order = list(words)
        rng.shuffle(order)
        coords = rng.normal(size=(50, 2))
        result = build_map(d, coords, order, meta())
        assert len(result.points) == 50
        for pt in result.points:
            assert pt.set_label is d.label_of(pt.word)
            assert (pt.count_a, pt.count_b) == d.counts_of(pt.word)
            row = order.index(pt.word)
            assert (pt.x, pt.y) == (coords[row, 0], coords[row, 1])

    def test_length_mismatch_rejected(self):
        d = DiffResult(only_a={"x": 1}, only_b={}, both={})
        with pytest.raises(ConsistencyError):
            build_map(d, np.zeros((2, 2)), ["x"], meta())

    def test_unknown_word_rejected(self):
        d = DiffResult(only_a={"x": 1}, only_b={}, both={})
        with pytest.raises(ConsistencyError):
            build_map(d, np.zeros((1, 2)), ["ghost"], meta())

    def test_duplicate_word_rejected(self):
        d = DiffResult(only_a={"x": 1}, only_b={}, both={})
        with pytest.raises(ConsistencyError):
            build_map(d, np.zeros((2, 2)), ["x", "x"], meta())

    def test_points_sorted_by_word(self):
        d = DiffResult(only_a={"zz": 1, "aa": 2, "mm": 3}, only_b={}, both={})
        result = build_map(d, np.zeros((3, 2)), ["zz", "aa", "mm"], meta())
        assert [pt.word for pt in result.points] == ["aa", "mm", "zz"]


class TestSerializeMap:
    def test_empty_map_matches_golden_file(self):
        payload = serialize_map(WordMap(meta=meta()))
        assert payload == (DATA / "golden_empty_map.json").read_bytes()

    def test_three_point_map_matches_golden_file(self):
        payload = serialize_map(three_point_map())
        assert payload == (DATA / "golden_three_point_map.json").read_bytes()

    @pytest.mark.parametrize("seed,size", [(0, 0), (1, 1), (2, 17), (3, 80)])
    def test_roundtrip(self, seed, size):
        original = random_map(seed, size)
        assert parse_map(serialize_map(original)) == original

    def test_canonical_idempotency(self):
        payload = serialize_map(random_map(9, 23))
        assert serialize_map(parse_map(payload)) == payload

    def test_non_finite_coordinate_refused(self):
        with pytest.raises(MapValidationError, match="points\\[0\\].x"):
            WordMap(
                meta=meta(),
                points=(MapPoint("w", float("nan"), 0.0, SetLabel.A_ONLY, 1, 0),),
            )

    def test_partition_counts_survive_serialization(self):
        original = random_map(4, 60)
        again = parse_map(serialize_map(original))
        assert again.set_sizes() == original.set_sizes()

    def test_unicode_words_survive(self):
        word_map = WordMap(
            meta=meta(), points=(MapPoint("Häuser", 0.0, 1.0, SetLabel.A_ONLY, 1, 0),)
        )
        parsed = parse_map(serialize_map(word_map))
        assert parsed.points[0].word == "Häuser"


class TestMapInvariants:
    def test_a_only_point_with_b_count_rejected(self):
        with pytest.raises(MapValidationError, match="count_b"):
            WordMap(meta=meta(), points=(MapPoint("w", 0.0, 0.0, SetLabel.A_ONLY, 1, 2),))

    def test_both_point_needs_positive_counts(self):
        with pytest.raises(MapValidationError):
            WordMap(meta=meta(), points=(MapPoint("w", 0.0, 0.0, SetLabel.BOTH, 1, 0),))

    def test_duplicate_words_rejected(self):
        with pytest.raises(MapValidationError, match="duplicate"):
            WordMap(
                meta=meta(),
                points=(
                    MapPoint("w", 0.0, 0.0, SetLabel.A_ONLY, 1, 0),
                    MapPoint("w", 1.0, 1.0, SetLabel.B_ONLY, 0, 1),
                ),
            )

    def test_negative_count_rejected(self):
        with pytest.raises(MapValidationError):
            WordMap(meta=meta(), points=(MapPoint("w", 0.0, 0.0, SetLabel.A_ONLY, -1, 0),))


class TestParseMap:
    def parse_golden(self) -> WordMap:
        return parse_map((DATA / "golden_three_point_map.json").read_bytes())

    def test_golden_three_point(self):
        word_map = self.parse_golden()
        assert [pt.word for pt in word_map.points] == ["equator", "north", "south"]
        assert word_map.set_sizes() == {"a": 1, "b": 1, "both": 1}
        assert word_map.meta.dim == 300

    def test_not_json(self):
        with pytest.raises(MapValidationError, match="\\$"):
            parse_map(b"not json at all")

    def test_not_utf8(self):
        with pytest.raises(MapValidationError, match="UTF-8"):
            parse_map(b"\xff\xfe{}")

    def test_top_level_keys_enforced(self):
        with pytest.raises(MapValidationError, match="\\$"):
            parse_map(b'{"meta": {}}')

    def test_unsupported_schema_version(self):
        payload = serialize_map(three_point_map()).decode().replace(
            '"schema_version":1', '"schema_version":2'
        )
        with pytest.raises(MapValidationError, match="meta.schema_version"):
            parse_map(payload.encode())

    def test_bad_set_value_names_path(self):
        payload = serialize_map(three_point_map()).decode().replace('"set":"b"', '"set":"c"')
        with pytest.raises(MapValidationError, match="points\\[2\\].set"):
            parse_map(payload.encode())

    def test_non_finite_coordinate_names_path(self):
        payload = serialize_map(three_point_map()).decode().replace('"x":1.5', '"x":"wide"')
        with pytest.raises(MapValidationError, match="points\\[1\\].x"):
            parse_map(payload.encode())

    def test_missing_point_key_names_path(self):
        payload = serialize_map(three_point_map()).decode().replace(',"count_b":7', "", 1)
        # Removing one key from the first (sorted) point leaves the others intact.
        with pytest.raises(MapValidationError, match="points\\[0\\]"):
            parse_map(payload.encode())

    def test_extra_meta_key_rejected(self):
        payload = serialize_map(three_point_map()).decode().replace(
            '"dim":300', '"dim":300,"extra":true'
        )
        with pytest.raises(MapValidationError, match="meta"):
            parse_map(payload.encode())

    def test_fractional_counts_rejected(self):
        payload = serialize_map(three_point_map()).decode().replace('"count_a":3', '"count_a":3.5')
        with pytest.raises(MapValidationError, match="count_a"):
            parse_map(payload.encode())

    def test_integer_coordinates_accepted(self):
        payload = serialize_map(three_point_map()).decode().replace('"x":1.5', '"x":2')
        parsed = parse_map(payload.encode())
        by_word = {pt.word: pt for pt in parsed.points}
        assert by_word["north"].x == 2.0 and isinstance(by_word["north"].x, float)
