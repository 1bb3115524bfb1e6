"""Word-vector table: word2vec file parsing plus similarity and analogy queries.

The binary layout is the de-facto word2vec one: an ASCII header line
``"<vocab_size> <dim>\\n"`` followed, per word, by the UTF-8 word bytes, a
single space, and ``dim`` little-endian IEEE-754 32-bit floats.  A newline
between entries is optional on read; the serializer always writes one.

Vectors are kept bit-exact as float32.  A parallel unit-normalized float64
table backs all similarity queries; zero vectors stay addressable via
``lookup`` but never appear as query candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateVectorError,
    DuplicateWordError,
    FormatError,
    MissingWordError,
    TruncationError,
)

_FLOAT32 = np.dtype("<f4")

# Characters that would collide with structural bytes of the two file formats.
_FORBIDDEN_IN_WORDS = (" ", "\n", "\r")


@dataclass(frozen=True)
class SimilarityHit:
    """One ranked query result: a word and its cosine similarity in [-1, 1]."""

    word: str
    score: float


class EmbeddingModel:
    """Immutable word -> vector table with cosine-based query operations.

    Construction validates the invariants once; afterwards the model is
    safe for concurrent reads.
    """

    def __init__(self, words: list[str], vectors: np.ndarray):
        vectors = np.asarray(vectors, dtype=_FLOAT32)
        if vectors.ndim != 2:
            raise ValueError("vectors must be a 2-D array")
        if len(words) != vectors.shape[0]:
            raise ValueError(
                f"{len(words)} words but {vectors.shape[0]} vector rows"
            )
        if vectors.shape[1] < 1:
            raise ValueError("vector dimensionality must be positive")
        if not np.all(np.isfinite(vectors)):
            raise ValueError("vectors must be finite")
        index: dict[str, int] = {}
        for i, word in enumerate(words):
            if not word:
                raise ValueError("empty word")
            if any(ch in word for ch in _FORBIDDEN_IN_WORDS):
                raise ValueError(f"word contains a reserved character: {word!r}")
            if word in index:
                raise DuplicateWordError(word)
            index[word] = i
        self._words = list(words)
        self._index = index
        self._vectors = vectors
        self._vectors.setflags(write=False)

        # Query-time table: unit rows in float64.  Zero-norm rows are kept
        # as zeros and masked out of candidate sets (cosine is undefined).
        dense = vectors.astype(np.float64)
        norms = np.sqrt(np.einsum("ij,ij->i", dense, dense))
        self._nonzero = norms > 0.0
        safe = np.where(self._nonzero, norms, 1.0)
        self._unit = dense / safe[:, None]
        self._unit.setflags(write=False)
        self._word_array = np.array(self._words, dtype=object) if words else np.empty(0, dtype=object)

    @property
    def vocab_size(self) -> int:
        return len(self._words)

    @property
    def dim(self) -> int:
        return self._vectors.shape[1]

    @property
    def words(self) -> list[str]:
        return list(self._words)

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingModel):
            return NotImplemented
        return (
            self._words == other._words
            and self._vectors.shape == other._vectors.shape
            and bool(np.all(self._vectors.view(np.uint32) == other._vectors.view(np.uint32)))
        )

    def __repr__(self) -> str:
        return f"EmbeddingModel(vocab_size={self.vocab_size}, dim={self.dim})"

    def lookup(self, word: str) -> np.ndarray | None:
        """Return the stored float32 vector for `word`, or None if absent."""
        i = self._index.get(word)
        if i is None:
            return None
        return self._vectors[i]

    def items(self):
        """Iterate (word, vector) pairs in file order."""
        for i, word in enumerate(self._words):
            yield word, self._vectors[i]

    def unit_vector(self, word: str) -> np.ndarray:
        """Unit-normalized float64 vector for `word`.

        Raises MissingWordError for unknown words and DegenerateVectorError
        for zero vectors.
        """
        i = self._index.get(word)
        if i is None:
            raise MissingWordError(word)
        if not self._nonzero[i]:
            raise DegenerateVectorError(f"word {word!r} has a zero vector")
        return self._unit[i]

    def nearest(self, word: str, k: int) -> list[SimilarityHit]:
        """The k words most cosine-similar to `word`, excluding `word` itself.

        Ordering: score strictly descending, ties broken by ascending word.
        Fewer than k hits are returned when the vocabulary is exhausted.
        """
        return self.analogy([word], [], k)

    def analogy(self, positive: list[str], negative: list[str], k: int) -> list[SimilarityHit]:
        """Rank words by cosine to sum(unit(positive)) - sum(unit(negative)).

        All input words are excluded from the candidates, as are zero
        vectors.  Returns at most k hits, fewest when the vocabulary is
        exhausted; raises MissingWordError for unknown inputs.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        if not positive and not negative:
            raise ValueError("at least one input word is required")
        query = np.zeros(self.dim, dtype=np.float64)
        exclude: set[int] = set()
        for word in positive:
            query = query + self.unit_vector(word)
            exclude.add(self._index[word])
        for word in negative:
            query = query - self.unit_vector(word)
            exclude.add(self._index[word])
        norm = math.sqrt(float(np.dot(query, query)))
        if norm == 0.0:
            raise DegenerateVectorError("query vector has zero norm")
        query /= norm

        scores = np.clip(self._unit @ query, -1.0, 1.0)
        eligible = self._nonzero.copy()
        for i in exclude:
            eligible[i] = False
        idx = np.flatnonzero(eligible)
        if idx.size == 0:
            return []
        # Primary key: descending score; secondary: ascending word.
        order = np.lexsort((self._word_array[idx], -scores[idx]))
        top = idx[order[:k]]
        return [SimilarityHit(self._words[i], float(scores[i])) for i in top]


def _pow2_rescale(x: np.ndarray) -> np.ndarray:
    """Scale x by an exact power of two so its largest magnitude is ~1.

    Power-of-two scaling is exact in IEEE arithmetic, so this changes no
    directions while keeping subsequent dot products inside the double
    range for arbitrarily tiny or huge inputs.
    """
    exponent = math.frexp(float(np.max(np.abs(x))))[1]
    return x * math.ldexp(1.0, -max(-1023, min(1024, exponent)))


def cosine(u, v) -> float:
    """Cosine similarity dot(u, v) / (|u| |v|), clamped to [-1, 1].

    The formula is evaluated symmetrically, so cosine(u, v) == cosine(v, u)
    bitwise and cosine(u, u) == 1.0 exactly.  Zero-norm input raises
    DegenerateVectorError.
    """
    a = np.asarray(u, dtype=np.float64)
    b = np.asarray(v, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("inputs must be 1-D vectors of equal dimension")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("inputs must be finite")
    if not (np.any(a) and np.any(b)):
        raise DegenerateVectorError("cosine is undefined for zero-norm vectors")
    a = _pow2_rescale(a)
    b = _pow2_rescale(b)
    nu = float(np.dot(a, a))
    nv = float(np.dot(b, b))
    if nu == 0.0 or nv == 0.0:
        raise DegenerateVectorError("cosine is undefined for zero-norm vectors")
    # sqrt(nu * nv) keeps the denominator symmetric in u, v; for u == v it
    # equals nu exactly (IEEE sqrt of a product x*x returns x), which pins
    # cosine(u, u) at exactly 1.0.
    value = float(np.dot(a, b)) / math.sqrt(nu * nv)
    return min(1.0, max(-1.0, value))


def _parse_header(data: bytes) -> tuple[int, int, int]:
    """Parse the ASCII header line; returns (vocab_size, dim, body_offset)."""
    end = data.find(b"\n")
    if end < 0:
        raise FormatError("missing header line terminator", offset=0)
    header = data[:end]
    try:
        text = header.decode("ascii")
    except UnicodeDecodeError as exc:
        raise FormatError("header is not ASCII", offset=0) from exc
    if text != text.strip(" "):
        raise FormatError("leading/trailing whitespace in header", offset=0)
    fields = [f for f in text.split(" ") if f]
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise FormatError(f"malformed header {text!r}: expected two integers", offset=0)
    vocab_size, dim = int(fields[0]), int(fields[1])
    if dim < 1:
        raise FormatError("vector dimensionality must be positive", offset=0)
    return vocab_size, dim, end + 1


def parse_model(data: bytes, *, text: bool = False) -> EmbeddingModel:
    """Parse a word2vec-format byte stream into an EmbeddingModel.

    `text=False` reads the binary layout described in the module docstring;
    `text=True` reads the plain-text variant (one ``word v1 ... vdim`` line
    per entry).  Raises FormatError / TruncationError / DuplicateWordError.
    """
    if text:
        return _parse_text(data)

    vocab_size, dim, pos = _parse_header(data)
    vector_bytes = dim * 4
    words: list[str] = []
    seen: set[str] = set()
    vectors = np.empty((vocab_size, dim), dtype=_FLOAT32)
    for i in range(vocab_size):
        # Entries may or may not be newline-separated; swallow separators.
        while pos < len(data) and data[pos : pos + 1] == b"\n":
            pos += 1
        word_start = pos
        sep = data.find(b" ", pos)
        if sep < 0:
            raise TruncationError(
                f"stream ended inside word {i} of {vocab_size}", word_index=i, offset=pos
            )
        raw_word = data[word_start:sep]
        if not raw_word:
            raise FormatError(f"empty word at entry {i}", offset=word_start)
        if b"\n" in raw_word or b"\r" in raw_word:
            raise FormatError(f"line break inside word at entry {i}", offset=word_start)
        try:
            word = raw_word.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"word at entry {i} is not valid UTF-8", offset=word_start) from exc
        if word in seen:
            raise DuplicateWordError(word, offset=word_start)
        pos = sep + 1
        if pos + vector_bytes > len(data):
            raise TruncationError(
                f"stream ended inside vector for word {i} ({word!r})",
                word_index=i,
                offset=pos,
            )
        row = np.frombuffer(data, dtype=_FLOAT32, count=dim, offset=pos)
        if not np.all(np.isfinite(row)):
            raise FormatError(f"non-finite component in vector for {word!r}", offset=pos)
        vectors[i] = row
        pos += vector_bytes
        seen.add(word)
        words.append(word)
    while pos < len(data) and data[pos : pos + 1] == b"\n":
        pos += 1
    if pos != len(data):
        raise FormatError("trailing data after declared entries", offset=pos)
    return EmbeddingModel(words, vectors)


def _parse_text(data: bytes) -> EmbeddingModel:
    try:
        content = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError("text model is not valid UTF-8", offset=exc.start) from exc
    lines = content.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("missing header line terminator", offset=0)
    vocab_size, dim, _ = _parse_header((lines[0] + "\n").encode("ascii", "replace"))
    if len(lines) - 1 < vocab_size:
        raise TruncationError(
            f"declared {vocab_size} entries but found only {len(lines) - 1} lines",
            word_index=len(lines) - 1,
        )
    if len(lines) - 1 > vocab_size:
        raise FormatError("trailing data after declared entries")
    words: list[str] = []
    seen: set[str] = set()
    vectors = np.empty((vocab_size, dim), dtype=_FLOAT32)
    for i, line in enumerate(lines[1:]):
        fields = line.split(" ")
        if len(fields) != dim + 1:
            raise FormatError(
                f"entry {i}: expected {dim + 1} space-separated fields, got {len(fields)}"
            )
        word = fields[0]
        if not word:
            raise FormatError(f"empty word at entry {i}")
        if "\r" in word:
            raise FormatError(f"line break inside word at entry {i}")
        if word in seen:
            raise DuplicateWordError(word)
        try:
            row = np.array([float(f) for f in fields[1:]], dtype=_FLOAT32)
        except ValueError as exc:
            raise FormatError(f"entry {i} ({word!r}): non-numeric component") from exc
        if not np.all(np.isfinite(row)):
            raise FormatError(f"non-finite component in vector for {word!r}")
        vectors[i] = row
        seen.add(word)
        words.append(word)
    return EmbeddingModel(words, vectors)


def serialize_model(model: EmbeddingModel, *, text: bool = False) -> bytes:
    """Serialize a model back to word2vec format.

    Binary entries always end with a newline; parse_model accepts either
    convention, so parse(serialize(m)) == m holds bit-exactly, and
    serialize(parse(b)) == b for streams written by this function.
    """
    header = f"{model.vocab_size} {model.dim}\n".encode("ascii")
    if not text:
        chunks = [header]
        for word, vec in model.items():
            chunks.append(word.encode("utf-8") + b" " + vec.tobytes() + b"\n")
        return b"".join(chunks)
    lines = [header.decode("ascii")]
    for word, vec in model.items():
        # str() of a float32 scalar is the shortest decimal that parses back
        # to the same float32, so the text form roundtrips too.
        lines.append(word + " " + " ".join(str(c) for c in vec) + "\n")
    return "".join(lines).encode("utf-8")


def load_model(path: str | Path, *, text: bool = False) -> EmbeddingModel:
    """Read and parse a model file from disk."""
    return parse_model(Path(path).read_bytes(), text=text)


def save_model(model: EmbeddingModel, path: str | Path, *, text: bool = False) -> None:
    """Serialize a model to disk."""
    Path(path).write_bytes(serialize_model(model, text=text))
