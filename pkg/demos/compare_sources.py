"""The full pipeline: two texts -> diffed vocabulary -> 2D word map.

Run:  python demos/compare_sources.py
Writes demo_map.json next to this script; open it in the viewer under
frontend/ to explore the map interactively.
"""

from pathlib import Path

from wordmap import (
    build_compare_map,
    count_and_filter,
    default_stoplist,
    diff,
    load_model,
    serialize_map,
    tokenize,
    TsneConfig,
)

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

text_a = (DATA / "source_a.txt").read_text(encoding="utf-8")
text_b = (DATA / "source_b.txt").read_text(encoding="utf-8")
model = load_model(DATA / "fixture_model.bin")
stoplist = default_stoplist()

# Stage by stage, for a look inside: tokenize, count, filter, diff.
tokens_a = tokenize(text_a)
counts_a = count_and_filter(tokens_a, stoplist)
counts_b = count_and_filter(tokenize(text_b), stoplist)
print(f"source A: {counts_a.total_tokens} tokens -> {len(counts_a)} distinct words kept")
print(f"source B: {counts_b.total_tokens} tokens -> {len(counts_b)} distinct words kept")

d = diff(counts_a, counts_b)
print(f"unique to A: {sorted(d.only_a)}")
print(f"unique to B: {sorted(d.only_b)}")
print(f"in both:     {sorted(d.both)}")
print()

# The one-call version of the same pipeline, plus the t-SNE projection.
config = TsneConfig(perplexity=5.0, n_iter=300, early_exaggeration_iters=100, seed=7)
word_map, report, result = build_compare_map(
    text_a,
    text_b,
    model,
    stoplist,
    config=config,
    source_a_name="source_a.txt",
    source_b_name="source_b.txt",
)
print(f"map: {report.points} points ({report.only_a} A-only, "
      f"{report.only_b} B-only, {report.both} shared), "
      f"{report.dropped} word(s) not in the model")
print(f"final KL divergence: {report.final_kl:.4f}")

out = Path(__file__).with_name("demo_map.json")
out.write_bytes(serialize_map(word_map))
print(f"wrote {out}")
