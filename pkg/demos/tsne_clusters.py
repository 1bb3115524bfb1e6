"""Dimensionality reduction demo: 3 high-dimensional clusters -> 2D.

Run:  python demos/tsne_clusters.py
Writes tsne_clusters.png next to this script.
"""

from pathlib import Path

import numpy as np

from wordmap import TsneConfig, run_tsne

rng = np.random.default_rng(0)

# Three Gaussian clusters in 50 dimensions, far apart.
dim, per_cluster = 50, 40
centers = np.zeros((3, dim))
centers[1, 0] = 40.0
centers[2, 1] = 40.0
x = np.vstack([rng.normal(size=(per_cluster, dim)) + c for c in centers])
labels = np.repeat([0, 1, 2], per_cluster)

config = TsneConfig(perplexity=20.0, n_iter=600, early_exaggeration_iters=150, seed=1)
result = run_tsne(x, config)

print(f"projected {x.shape[0]} points from {dim}D to 2D")
print(f"KL at start: {result.kl_history[0]:.4f}")
print(f"KL after early exaggeration: {result.kl_history[config.early_exaggeration_iters]:.4f}")
print(f"final KL: {result.final_kl:.4f}")

# How well did the layout keep the clusters together?  Check whether each
# point's nearest 2D neighbour wears the same label.
coords = result.coords
d = ((coords[:, None, :] - coords[None, :, :]) ** 2).sum(-1)
np.fill_diagonal(d, np.inf)
agreement = (labels[d.argmin(axis=1)] == labels).mean()
print(f"1-NN cluster agreement in 2D: {agreement:.1%}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(__file__).with_name("tsne_clusters.png")
    fig, ax = plt.subplots(figsize=(6, 6))
    for label, colour in zip(range(3), ("#0072b2", "#e69f00", "#009e73")):
        mask = labels == label
        ax.scatter(coords[mask, 0], coords[mask, 1], s=12, c=colour, label=f"cluster {label}")
    ax.legend()
    ax.set_title("t-SNE layout of three 50-D clusters")
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")
except ImportError:
    print("matplotlib not installed; skipping the plot")
