"""Rule-based tokenization, occurrence counting, and frequent-word filtering.

Tokenization splits on whitespace, then peels leading and trailing
punctuation off each chunk as separate one-character tokens.  Everything
between the first and last alphanumeric character stays together, which
keeps contractions ("isn't") and hyphenated compounds ("state-of-the-art")
whole.  No alphanumeric character of the input is ever lost.

Counting is case-sensitive (proper nouns stay distinct from their
lowercase homographs) while the frequent-word stoplist matches
case-insensitively, so "The" is still filtered.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

from .errors import FormatError

# Tokens longer than this cannot be embedding vocabulary; dropping them
# guards the counters against URLs and similar runs.
MAX_TOKEN_LENGTH = 100

_DEFAULT_STOPLIST_RESOURCE = "stopwords_en_3000.txt"


def tokenize(text: str) -> list[str]:
    """Split text into word and punctuation tokens, preserving order."""
    tokens: list[str] = []
    for chunk in text.split():
        first = None
        last = None
        for i, ch in enumerate(chunk):
            if ch.isalnum():
                if first is None:
                    first = i
                last = i
        if first is None:
            tokens.extend(chunk)
            continue
        tokens.extend(chunk[:first])
        tokens.append(chunk[first : last + 1])
        tokens.extend(chunk[last + 1 :])
    return tokens


@dataclass(frozen=True)
class Stoplist:
    """A set of lowercase words to ignore; membership lowercases the query."""

    words: frozenset[str] = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words


@dataclass(frozen=True)
class TokenCounts:
    """Occurrence counts of the tokens that survived filtering.

    `total_tokens` is the pre-filter token count, so the counts always sum
    to at most `total_tokens`.
    """

    counts: dict[str, int]
    total_tokens: int

    def vocabulary(self) -> set[str]:
        return set(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


def count_and_filter(
    tokens: list[str], stoplist: Stoplist | None = None, drop_non_alpha: bool = True
) -> TokenCounts:
    """Count token occurrences, dropping stoplisted and non-word tokens.

    With `drop_non_alpha` set, tokens without a single alphabetic character
    (punctuation, plain numbers) are excluded from the counts.
    """
    stoplist = stoplist or Stoplist()
    counts: Counter[str] = Counter()
    for token in tokens:
        if len(token) > MAX_TOKEN_LENGTH:
            continue
        if drop_non_alpha and not any(ch.isalpha() for ch in token):
            continue
        if token in stoplist:
            continue
        counts[token] += 1
    return TokenCounts(dict(counts), total_tokens=len(tokens))


def load_stoplist(data: bytes) -> Stoplist:
    """Parse a newline-delimited word list.

    Blank lines and lines starting with '#' are ignored; words are
    lowercased.  Non-UTF-8 input raises FormatError.
    """
    try:
        content = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError("stoplist is not valid UTF-8", offset=exc.start) from exc
    words = set()
    for line in content.split("\n"):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return Stoplist(frozenset(words))


def default_stoplist() -> Stoplist:
    """The bundled list of the 3000 most common English words."""
    data = resources.files(__package__).joinpath("data", _DEFAULT_STOPLIST_RESOURCE).read_bytes()
    return load_stoplist(data)
