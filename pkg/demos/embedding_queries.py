"""Word-vector basics: build a tiny model, save it, query it.

Run:  python demos/embedding_queries.py
"""

import numpy as np

from wordmap import EmbeddingModel, cosine, load_model, save_model

# A toy vocabulary on 6 axes.  Word meanings are encoded by which axes a
# vector occupies, so related words share directions.
s = 1.0 / np.sqrt(2.0)
words = ["king", "man", "woman", "queen", "apple", "pear"]
vectors = np.array(
    [
        [s, 0, s, 0, 0, 0],  # king  = male + royal
        [1, 0, 0, 0, 0, 0],  # man   = male
        [0, 1, 0, 0, 0, 0],  # woman = female
        [0, s, s, 0, 0, 0],  # queen = female + royal
        [0, 0, 0, 0.9, 0.2, 0],  # apple: fruit-ish axes
        [0, 0, 0, 0.8, 0.3, 0.1],  # pear: close to apple
    ],
    dtype=np.float32,
)
model = EmbeddingModel(words, vectors)

print(f"model: {model.vocab_size} words, {model.dim} dimensions")
print()

# Cosine similarity reads directions, not magnitudes.
print("cosine(apple, pear) =", round(cosine(model.lookup("apple"), model.lookup("pear")), 4))
print("cosine(apple, king) =", round(cosine(model.lookup("apple"), model.lookup("king")), 4))
print()

# The classic word arithmetic: king - man + woman.
print("king - man + woman ≈ ?")
for hit in model.analogy(["king", "woman"], ["man"], k=2):
    print(f"  {hit.word:8s} {hit.score:+.4f}")
print()

print("nearest neighbours of 'apple':")
for hit in model.nearest("apple", k=3):
    print(f"  {hit.word:8s} {hit.score:+.4f}")
print()

# The on-disk format survives a roundtrip bit-exactly.
save_model(model, "/tmp/demo_vectors.bin")
again = load_model("/tmp/demo_vectors.bin")
print("saved and reloaded:", "identical" if again == model else "DIFFERENT")
