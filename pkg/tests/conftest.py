"""Shared fixtures: synthetic models and pipeline input files."""

from __future__ import annotations

import numpy as np
import pytest

from wordmap import EmbeddingModel

WORD_POOL = (
    "alder birch cedar dogwood elm fir ginkgo hawthorn juniper katsura "
    "larch maple ninebark oak pine quince rowan spruce tamarack willow "
    "yew aspen beech chestnut hazel hemlock hickory holly linden magnolia "
    "mulberry olive poplar redwood sassafras sequoia sycamore walnut"
).split()


def make_random_model(seed: int, vocab_size: int, dim: int) -> EmbeddingModel:
    """A reproducible model with distinct words and Gaussian float32 rows."""
    rng = np.random.default_rng(seed)
    words = [f"w{idx:03d}" for idx in range(vocab_size)]
    vectors = rng.normal(size=(vocab_size, dim)).astype(np.float32)
    return EmbeddingModel(words, vectors)


@pytest.fixture
def two_word_model_bytes() -> bytes:
    """The hand-laid binary fixture: header, then ('a', e1), ('b', e2)."""
    import struct

    payload = b"2 3\n"
    payload += b"a " + struct.pack("<3f", 1.0, 0.0, 0.0) + b"\n"
    payload += b"b " + struct.pack("<3f", 0.0, 1.0, 0.0) + b"\n"
    return payload


def make_analogy_model(fillers: int = 6, dim: int = 12) -> EmbeddingModel:
    """A model where vec(royal_f) == vec(royal_m) - vec(adult_m) + vec(adult_f).

    All four carrier words are unit-norm combinations of distinct basis
    axes, so the identity holds exactly: royal_m = (e1+e3)/sqrt2,
    adult_m = (e1+e4)/sqrt2, adult_f = (e2+e4)/sqrt2 gives
    royal_f = (e2+e3)/sqrt2.  Filler words live on the remaining axes.
    """
    assert dim >= 4 + fillers
    s = np.float32(1.0) / np.sqrt(np.float32(2.0))
    rows = {
        "king": (0, 2),
        "man": (0, 3),
        "woman": (1, 3),
        "queen": (1, 2),
    }
    words = list(rows)
    vectors = np.zeros((4 + fillers, dim), dtype=np.float32)
    for i, axes in enumerate(rows.values()):
        for axis in axes:
            vectors[i, axis] = s
    rng = np.random.default_rng(7)
    for f in range(fillers):
        words.append(f"filler{f}")
        vectors[4 + f, 4 + f] = 1.0
        # Mild noise on unused axes keeps fillers off the carrier plane.
        vectors[4 + f, 4:] += rng.normal(scale=0.05, size=dim - 4).astype(np.float32)
    return EmbeddingModel(words, vectors)


@pytest.fixture
def analogy_model() -> EmbeddingModel:
    return make_analogy_model()


@pytest.fixture
def pipeline_files(tmp_path):
    """The bundled pipeline fixtures plus a scratch output path.

    Source A keeps {alder, birch, cedar, dogwood, elm, fir} plus the
    shared {maple, oak, pine}; source B keeps {ginkgo, hawthorn, juniper,
    larch} plus the shared three.  "zzunknown" appears in both texts but
    not in the 20-word model; stoplisted fillers pad the token counts.
    """
    from pathlib import Path

    from wordmap import load_model

    data = Path(__file__).parent / "data"
    return {
        "a": data / "source_a.txt",
        "b": data / "source_b.txt",
        "model": data / "fixture_model.bin",
        "model_obj": load_model(data / "fixture_model.bin"),
        "out": tmp_path / "map.json",
    }
