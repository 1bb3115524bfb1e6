"""Three-set partition of two vocabularies: A-only, B-only, and shared."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ConsistencyError
from .tokenization import TokenCounts


class SetLabel(enum.Enum):
    """Which comparison set a word belongs to; values match the map schema."""

    A_ONLY = "a"
    B_ONLY = "b"
    BOTH = "both"


@dataclass(frozen=True)
class DiffResult:
    """The vocabulary partition with per-source occurrence counts.

    The three key sets are pairwise disjoint; only_a + both covers source
    A's vocabulary and only_b + both covers source B's.
    """

    only_a: dict[str, int]
    only_b: dict[str, int]
    both: dict[str, tuple[int, int]]

    def words(self) -> set[str]:
        return set(self.only_a) | set(self.only_b) | set(self.both)

    def label_of(self, word: str) -> SetLabel:
        """The set containing `word`; raises ConsistencyError if absent."""
        if word in self.only_a:
            return SetLabel.A_ONLY
        if word in self.only_b:
            return SetLabel.B_ONLY
        if word in self.both:
            return SetLabel.BOTH
        raise ConsistencyError(f"word {word!r} is in no comparison set")

    def counts_of(self, word: str) -> tuple[int, int]:
        """Occurrence counts (in A, in B) for `word`."""
        if word in self.only_a:
            return self.only_a[word], 0
        if word in self.only_b:
            return 0, self.only_b[word]
        if word in self.both:
            return self.both[word]
        raise ConsistencyError(f"word {word!r} is in no comparison set")


def diff(a: TokenCounts, b: TokenCounts) -> DiffResult:
    """Partition the two vocabularies into A-only, B-only, and intersection."""
    only_a = {w: c for w, c in a.counts.items() if w not in b.counts}
    only_b = {w: c for w, c in b.counts.items() if w not in a.counts}
    both = {w: (c, b.counts[w]) for w, c in a.counts.items() if w in b.counts}
    return DiffResult(only_a, only_b, both)


def restrict_to_model(
    d: DiffResult, model
) -> tuple[DiffResult, list[tuple[str, SetLabel]]]:
    """Drop words the embedding model cannot map.

    Returns the restricted partition plus the dropped words with their
    former labels, sorted by word.  Surviving words keep their labels and
    counts unchanged.
    """
    dropped = [
        (word, d.label_of(word)) for word in sorted(d.words()) if word not in model
    ]
    kept = DiffResult(
        only_a={w: c for w, c in d.only_a.items() if w in model},
        only_b={w: c for w, c in d.only_b.items() if w in model},
        both={w: c for w, c in d.both.items() if w in model},
    )
    return kept, dropped
