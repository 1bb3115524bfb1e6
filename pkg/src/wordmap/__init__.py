"""wordmap: compare text sources as an explorable 2D word map.

The pipeline: tokenize and count two sources, drop the most frequent
English words, partition the vocabularies into A-only / B-only / shared,
look the survivors up in a pretrained word-vector model, project the
vectors to 2D with the in-house t-SNE, and export a JSON map for the
browser viewer.
"""

from .diff import DiffResult, SetLabel, diff, restrict_to_model
from .embeddings import (
    EmbeddingModel,
    SimilarityHit,
    cosine,
    load_model,
    parse_model,
    save_model,
    serialize_model,
)
from .errors import (
    ConfigError,
    ConsistencyError,
    DegenerateVectorError,
    DivergenceError,
    DuplicateWordError,
    FormatError,
    MapValidationError,
    MissingWordError,
    TruncationError,
    WordmapError,
)
from .mapfile import MapMeta, MapPoint, WordMap, build_map, parse_map, serialize_map
from .pipeline import PipelineReport, build_compare_map, build_single_map
from .tokenization import (
    Stoplist,
    TokenCounts,
    count_and_filter,
    default_stoplist,
    load_stoplist,
    tokenize,
)
from .tsne import (
    AffinityMatrix,
    TsneConfig,
    TsneResult,
    calibrate_affinities,
    gradient,
    kl_divergence,
    low_dim_affinities,
    pairwise_squared_distances,
    run_tsne,
)

__version__ = "0.1.0"

__all__ = [
    "AffinityMatrix",
    "ConfigError",
    "ConsistencyError",
    "DegenerateVectorError",
    "DiffResult",
    "DivergenceError",
    "DuplicateWordError",
    "EmbeddingModel",
    "FormatError",
    "MapMeta",
    "MapPoint",
    "MapValidationError",
    "MissingWordError",
    "PipelineReport",
    "SetLabel",
    "SimilarityHit",
    "Stoplist",
    "TokenCounts",
    "TruncationError",
    "TsneConfig",
    "TsneResult",
    "WordMap",
    "WordmapError",
    "build_compare_map",
    "build_map",
    "build_single_map",
    "calibrate_affinities",
    "cosine",
    "count_and_filter",
    "default_stoplist",
    "diff",
    "gradient",
    "kl_divergence",
    "load_model",
    "load_stoplist",
    "low_dim_affinities",
    "pairwise_squared_distances",
    "parse_map",
    "parse_model",
    "restrict_to_model",
    "run_tsne",
    "save_model",
    "serialize_map",
    "serialize_model",
    "tokenize",
]
