"""Vocabulary partition and model-restriction tests."""

from __future__ import annotations

import numpy as np
import pytest

from wordmap import ConsistencyError, DiffResult, SetLabel, TokenCounts, diff, restrict_to_model
from conftest import make_random_model


def counts(**kwargs) -> TokenCounts:
    return TokenCounts(dict(kwargs), total_tokens=sum(kwargs.values()))


def random_counts(rng, size: int) -> TokenCounts:
    words = rng.choice(400, size=size, replace=False)
    return TokenCounts(
        {f"word{w:03d}": int(rng.integers(1, 9)) for w in words}, total_tokens=size * 3
    )


class TestDiff:
    def test_basic_partition(self):
        result = diff(counts(x=1, y=2), counts(y=3, z=1))
        assert result.only_a == {"x": 1}
        assert result.only_b == {"z": 1}
        assert result.both == {"y": (2, 3)}

    def test_identical_sources(self):
        a = counts(p=1, q=2, r=3)
        result = diff(a, a)
        assert result.only_a == {} and result.only_b == {}
        assert result.both == {"p": (1, 1), "q": (2, 2), "r": (3, 3)}

    def test_empty_inputs(self):
        result = diff(counts(), counts())
        assert result.only_a == {} and result.only_b == {} and result.both == {}

    @pytest.mark.parametrize("seed", range(5))
    def test_random_vocabularies_match_membership_oracle(self, seed):
        rng = np.random.default_rng(seed)
        a = random_counts(rng, 200)
        b = random_counts(rng, 200)
        result = diff(a, b)
        for word in set(a.counts) | set(b.counts):
            in_a, in_b = word in a.counts, word in b.counts
            if in_a and in_b:
                assert result.both[word] == (a.counts[word], b.counts[word])
                assert word not in result.only_a and word not in result.only_b
            elif in_a:
                assert result.only_a[word] == a.counts[word]
                assert word not in result.both and word not in result.only_b
            else:
                assert result.only_b[word] == b.counts[word]
                assert word not in result.both and word not in result.only_a

    def test_partition_is_disjoint_and_covers_union(self):
        rng = np.random.default_rng(42)
        a, b = random_counts(rng, 150), random_counts(rng, 150)
        result = diff(a, b)
        only_a, only_b, both = set(result.only_a), set(result.only_b), set(result.both)
        assert only_a.isdisjoint(only_b) and only_a.isdisjoint(both) and only_b.isdisjoint(both)
        assert only_a | only_b | both == set(a.counts) | set(b.counts)
        assert len(only_a) + len(only_b) + len(both) == len(set(a.counts) | set(b.counts))

    def test_swap_symmetry(self):
        rng = np.random.default_rng(7)
        a, b = random_counts(rng, 100), random_counts(rng, 100)
        forward, backward = diff(a, b), diff(b, a)
        assert forward.only_a == backward.only_b
        assert forward.only_b == backward.only_a
        assert forward.both == {w: (ca, cb) for w, (cb, ca) in backward.both.items()}

    def test_label_of(self):
        result = diff(counts(x=1), counts(z=1))
        assert result.label_of("x") is SetLabel.A_ONLY
        assert result.label_of("z") is SetLabel.B_ONLY
        with pytest.raises(ConsistencyError):
            result.label_of("missing")


class TestRestrictToModel:
    def test_full_coverage_is_identity(self):
        model = make_random_model(seed=0, vocab_size=10, dim=4)
        w = model.words
        d = DiffResult(only_a={w[0]: 1}, only_b={w[1]: 2}, both={w[2]: (1, 1)})
        kept, dropped = restrict_to_model(d, model)
        assert kept == d
        assert dropped == []

    def test_no_coverage_drops_everything(self):
        model = make_random_model(seed=0, vocab_size=3, dim=4)
        d = DiffResult(only_a={"xa": 1}, only_b={"xb": 2}, both={"xc": (1, 1)})
        kept, dropped = restrict_to_model(d, model)
        assert kept.only_a == {} and kept.only_b == {} and kept.both == {}
        assert dropped == [
            ("xa", SetLabel.A_ONLY),
            ("xb", SetLabel.B_ONLY),
            ("xc", SetLabel.BOTH),
        ]

    def test_partial_coverage_matches_set_difference(self):
        model = make_random_model(seed=1, vocab_size=12, dim=4)
        rng = np.random.default_rng(5)
        inside = list(model.words)
        outside = [f"gone{i}" for i in range(8)]
        pool = inside + outside
        rng.shuffle(pool)
        d = DiffResult(
            only_a={w: 1 for w in pool[:7]},
            only_b={w: 2 for w in pool[7:13]},
            both={w: (1, 2) for w in pool[13:]},
        )
        kept, dropped = restrict_to_model(d, model)
        expected_dropped = sorted(w for w in d.words() if w not in model)
        assert [w for w, _ in dropped] == expected_dropped
        assert kept.words() == d.words() - set(expected_dropped)

    def test_survivors_keep_labels_and_counts(self):
        model = make_random_model(seed=2, vocab_size=6, dim=3)
        w = model.words
        d = DiffResult(
            only_a={w[0]: 4, "missing1": 1},
            only_b={w[1]: 5},
            both={w[2]: (6, 7), "missing2": (1, 1)},
        )
        kept, dropped = restrict_to_model(d, model)
        assert kept.only_a == {w[0]: 4}
        assert kept.only_b == {w[1]: 5}
        assert kept.both == {w[2]: (6, 7)}
        assert [w for w, _ in dropped] == ["missing1", "missing2"]
        assert dict(dropped) == {"missing1": SetLabel.A_ONLY, "missing2": SetLabel.BOTH}
