"""End-to-end orchestration: texts + model -> word map document."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from .diff import DiffResult, diff, restrict_to_model
from .embeddings import EmbeddingModel
from .errors import ConfigError
from .mapfile import MapMeta, WordMap, build_map
from .tokenization import Stoplist, count_and_filter, tokenize
from .tsne import TsneConfig, TsneResult, run_tsne

# t-SNE needs a handful of points to be meaningful at all.
MIN_POINTS = 4


@dataclass
class PipelineReport:
    """Stage-by-stage summary of one pipeline run."""

    tokens_a: int
    tokens_b: int
    vocab_a: int
    vocab_b: int
    only_a: int
    only_b: int
    both: int
    dropped: int
    points: int
    final_kl: float | None


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _project(
    d: DiffResult, model: EmbeddingModel, config: TsneConfig
) -> tuple[list[str], TsneResult | None]:
    """Sort the surviving vocabulary and run t-SNE over its vectors."""
    word_order = sorted(d.words())
    n = len(word_order)
    if n == 0:
        return [], None
    if n < MIN_POINTS:
        raise ConfigError(
            f"only {n} words survived filtering and model lookup; "
            f"need at least {MIN_POINTS} to build a map"
        )
    vectors = np.stack([model.lookup(w) for w in word_order]).astype(np.float64)
    return word_order, run_tsne(vectors, config)


def _assemble(
    d: DiffResult,
    model: EmbeddingModel,
    config: TsneConfig,
    meta: MapMeta,
) -> tuple[WordMap, TsneResult | None]:
    word_order, result = _project(d, model, config)
    coords = result if result is not None else np.zeros((0, 2))
    return build_map(d, coords, word_order, meta), result


def build_compare_map(
    text_a: str,
    text_b: str,
    model: EmbeddingModel,
    stoplist: Stoplist,
    config: TsneConfig = TsneConfig(),
    source_a_name: str = "A",
    source_b_name: str = "B",
    generated_at: str | None = None,
    drop_non_alpha: bool = True,
) -> tuple[WordMap, PipelineReport, TsneResult | None]:
    """Compare two sources: tokenize, filter, diff, project, assemble."""
    counts_a = count_and_filter(tokenize(text_a), stoplist, drop_non_alpha)
    counts_b = count_and_filter(tokenize(text_b), stoplist, drop_non_alpha)
    full = diff(counts_a, counts_b)
    kept, dropped = restrict_to_model(full, model)
    meta = MapMeta(
        source_a_name=source_a_name,
        source_b_name=source_b_name,
        dim=model.dim,
        perplexity=config.perplexity,
        generated_at=generated_at or utc_now_iso(),
    )
    word_map, result = _assemble(kept, model, config, meta)
    report = PipelineReport(
        tokens_a=counts_a.total_tokens,
        tokens_b=counts_b.total_tokens,
        vocab_a=len(counts_a),
        vocab_b=len(counts_b),
        only_a=len(kept.only_a),
        only_b=len(kept.only_b),
        both=len(kept.both),
        dropped=len(dropped),
        points=len(word_map.points),
        final_kl=result.final_kl if result else None,
    )
    return word_map, report, result


def build_single_map(
    text: str,
    model: EmbeddingModel,
    stoplist: Stoplist,
    config: TsneConfig = TsneConfig(),
    source_name: str = "A",
    generated_at: str | None = None,
    drop_non_alpha: bool = True,
) -> tuple[WordMap, PipelineReport, TsneResult | None]:
    """Map a single source; every point carries the "a" label."""
    counts = count_and_filter(tokenize(text), stoplist, drop_non_alpha)
    full = DiffResult(only_a=dict(counts.counts), only_b={}, both={})
    kept, dropped = restrict_to_model(full, model)
    meta = MapMeta(
        source_a_name=source_name,
        source_b_name="",
        dim=model.dim,
        perplexity=config.perplexity,
        generated_at=generated_at or utc_now_iso(),
    )
    word_map, result = _assemble(kept, model, config, meta)
    report = PipelineReport(
        tokens_a=counts.total_tokens,
        tokens_b=0,
        vocab_a=len(counts),
        vocab_b=0,
        only_a=len(kept.only_a),
        only_b=0,
        both=0,
        dropped=len(dropped),
        points=len(word_map.points),
        final_kl=result.final_kl if result else None,
    )
    return word_map, report, result
