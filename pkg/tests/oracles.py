"""Independent reference implementations used as test oracles.

Everything here is deliberately written the slow, obvious way (explicit
loops, per-pair arithmetic) and stays independent of the library code
paths it checks.
"""

from __future__ import annotations

import math

import numpy as np


def naive_squared_distances(x: np.ndarray) -> np.ndarray:
    """Double-loop ||x_i - x_j||^2."""
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[0]
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            diff = x[i] - x[j]
            out[i, j] = float(np.dot(diff, diff))
    return out


def conditional_from_sigma(distances_row: np.ndarray, i: int, sigma: float) -> np.ndarray:
    """Gaussian conditional p_{j|i} over j != i, from first principles."""
    n = len(distances_row)
    p = np.zeros(n)
    for j in range(n):
        if j != i:
            p[j] = math.exp(-distances_row[j] / (2.0 * sigma * sigma))
    return p / p.sum()


def perplexity_of(distribution: np.ndarray) -> float:
    """2 ** Shannon entropy (bits) of a distribution; zeros contribute 0."""
    h = 0.0
    for value in distribution:
        if value > 0.0:
            h -= value * math.log2(value)
    return 2.0**h


def naive_student_t_q(y: np.ndarray) -> np.ndarray:
    """Per-pair Student-t joint probabilities without any clamping."""
    n = y.shape[0]
    t = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                diff = y[i] - y[j]
                t[i, j] = 1.0 / (1.0 + float(np.dot(diff, diff)))
    return t / t.sum()


def naive_kl(p: np.ndarray, q: np.ndarray) -> float:
    """Per-pair KL divergence sum, skipping p == 0 terms."""
    total = 0.0
    n = p.shape[0]
    for i in range(n):
        for j in range(n):
            if i != j and p[i, j] > 0.0:
                total += p[i, j] * math.log(p[i, j] / q[i, j])
    return total


def finite_difference_gradient(objective, y: np.ndarray, step: float = 1e-5) -> np.ndarray:
    """Central finite differences of a scalar objective over a layout."""
    grad = np.zeros_like(y)
    for i in range(y.shape[0]):
        for k in range(y.shape[1]):
            plus = y.copy()
            plus[i, k] += step
            minus = y.copy()
            minus[i, k] -= step
            grad[i, k] = (objective(plus) - objective(minus)) / (2.0 * step)
    return grad


def brute_force_ranking(
    words: list[str],
    vectors: dict[str, np.ndarray],
    query: np.ndarray,
    exclude: set[str],
) -> list[tuple[str, float]]:
    """Cosine of every non-excluded word against the query, ranked.

    Score descending, ties broken by ascending word; zero vectors skipped.
    """
    qn = math.sqrt(float(np.dot(query, query)))
    scored = []
    for word in words:
        if word in exclude:
            continue
        v = np.asarray(vectors[word], dtype=np.float64)
        vn = math.sqrt(float(np.dot(v, v)))
        if vn == 0.0:
            continue
        score = float(np.dot(query, v)) / (qn * vn)
        scored.append((word, min(1.0, max(-1.0, score))))
    return sorted(scored, key=lambda pair: (-pair[1], pair[0]))


def recount_tokens(
    tokens: list[str], stop_words: set[str], drop_non_alpha: bool, max_len: int = 100
) -> dict[str, int]:
    """Single-pass token recount applying the documented filter rules."""
    counts: dict[str, int] = {}
    for token in tokens:
        if len(token) > max_len:
            continue
        if drop_non_alpha and not any(ch.isalpha() for ch in token):
            continue
        if token.lower() in stop_words:
            continue
        counts[token] = counts.get(token, 0) + 1
    return counts
