"""Exact O(n^2) t-SNE: project high-dimensional vectors to 2D.

High-dimensional neighbor structure is captured as a symmetric joint
probability matrix built from per-point Gaussian kernels whose bandwidths
are calibrated by binary search so that every conditional distribution has
a caller-chosen perplexity (2 to the Shannon entropy).  The low-dimensional
layout models the same pairs with a Student t kernel (one degree of
freedom), and gradient descent with momentum minimizes the KL divergence
between the two distributions.

The optimizer follows the widely used reference schedule: early
exaggeration of the input affinities, a momentum switch partway through,
per-parameter gain adaptation (a gain grows by 0.2 when a component's
gradient flips against its accumulated update and shrinks by x0.8
otherwise, floored at 0.01), and a small seeded Gaussian initialization.
All defaults are plain `TsneConfig` fields and can be overridden; none of
them is load-bearing for correctness, only for layout quality.

Everything here is deterministic: a fixed seed reproduces the exact same
coordinates on the same platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConfigError, DivergenceError

# Student-t tail mass below this floor is clamped before logs/divisions.
Q_FLOOR = 1e-12
# Conditional Gaussian mass below this is treated as exactly zero.
CONDITIONAL_FLOOR = 1e-12
# Bandwidth search: hard iteration cap and the guaranteed tolerance on
# |log2(realized perplexity) - log2(target)|.  The search keeps bisecting
# down to _BISECT_BREAK_TOL to leave headroom under the public guarantee.
MAX_BISECT_ITERS = 50
LOG2_PERPLEXITY_TOL = 1e-5
_BISECT_BREAK_TOL = 1e-7

# Per-parameter gain schedule (the reference implementation's values).
_GAIN_INCREMENT = 0.2
_GAIN_DECAY = 0.8
_MIN_GAIN = 0.01

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class TsneConfig:
    """Optimizer hyperparameters; defaults follow the reference schedule."""

    out_dims: int = 2
    perplexity: float = 30.0
    learning_rate: float = 200.0
    n_iter: int = 1000
    early_exaggeration_factor: float = 12.0
    early_exaggeration_iters: int = 250
    momentum_initial: float = 0.5
    momentum_final: float = 0.8
    momentum_switch_iter: int = 250
    seed: int = 0
    init_std: float = 1e-4

    def validate(self) -> None:
        if self.out_dims < 1:
            raise ConfigError("out_dims must be >= 1")
        if not self.perplexity > 1.0:
            raise ConfigError("perplexity must be > 1")
        if not self.learning_rate > 0.0:
            raise ConfigError("learning_rate must be > 0")
        if self.n_iter < 1:
            raise ConfigError("n_iter must be >= 1")
        if self.early_exaggeration_factor < 1.0:
            raise ConfigError("early_exaggeration_factor must be >= 1")
        if not 0 <= self.early_exaggeration_iters <= self.n_iter:
            raise ConfigError(
                "early_exaggeration_iters must be in [0, n_iter] "
                f"(got {self.early_exaggeration_iters} with n_iter={self.n_iter})"
            )
        for name in ("momentum_initial", "momentum_final"):
            m = getattr(self, name)
            if not 0.0 <= m < 1.0:
                raise ConfigError(f"{name} must be in [0, 1)")
        if self.init_std <= 0.0:
            raise ConfigError("init_std must be > 0")


@dataclass
class AffinityMatrix:
    """Joint input-space probabilities plus calibration diagnostics.

    `p` is symmetric with zero diagonal and sums to 1.  `conditional_p`
    holds the row-stochastic conditionals `p` was symmetrized from,
    `betas` the per-point Gaussian precisions (1 / (2 sigma_i^2)), and
    `converged` whether each point's bandwidth search met the perplexity
    tolerance (failure is flagged, not fatal: the last bandwidth is used).
    """

    p: np.ndarray
    conditional_p: np.ndarray
    betas: np.ndarray
    converged: np.ndarray

    @property
    def sigmas(self) -> np.ndarray:
        return np.sqrt(1.0 / (2.0 * self.betas))


@dataclass
class TsneResult:
    """Final layout, the KL trace, and the last KL value."""

    coords: np.ndarray
    kl_history: np.ndarray
    final_kl: float


def pairwise_squared_distances(x: np.ndarray) -> np.ndarray:
    """All squared Euclidean distances ||x_i - x_j||^2 as an n x n matrix.

    The result is exactly symmetric with an exactly zero diagonal.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 2:
        raise ValueError("input must be an n x d matrix with n >= 2")
    if not np.all(np.isfinite(x)):
        raise ValueError("input contains non-finite values")
    sq = np.einsum("ij,ij->i", x, x)
    d = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    # The expansion can leave tiny negatives and asymmetries; repair both.
    d = 0.5 * (d + d.T)
    np.maximum(d, 0.0, out=d)
    np.fill_diagonal(d, 0.0)
    return d


def _entropy_nats(shifted_d: np.ndarray, beta: float) -> tuple[float, np.ndarray, float]:
    """Entropy of p_j ~ exp(-shifted_d * beta) plus the unnormalized kernel."""
    e = np.exp(-shifted_d * beta)
    s = float(e.sum())
    h = math.log(s) + beta * float(shifted_d @ e) / s
    return h, e, s


def calibrate_affinities(distances: np.ndarray, perplexity: float) -> AffinityMatrix:
    """Fit per-point Gaussian bandwidths and symmetrize into joint affinities.

    For each point the precision beta_i is bisected until the conditional
    distribution over the other points has entropy log2(perplexity) bits,
    within LOG2_PERPLEXITY_TOL.  Conditionals are floored (entries below
    CONDITIONAL_FLOOR become exact zeros, rows renormalized) and then
    symmetrized: p_ij = (p_j|i + p_i|j) / (2n).
    """
    d = np.asarray(distances, dtype=np.float64)
    n = d.shape[0]
    if d.ndim != 2 or d.shape[1] != n or n < 2:
        raise ValueError("distances must be a square n x n matrix with n >= 2")
    if not np.all(np.isfinite(d)):
        raise ValueError("distances contain non-finite values")
    if not 1.0 < perplexity < n:
        raise ConfigError(f"perplexity must be in (1, n); got {perplexity} for n={n}")

    target_nats = math.log(perplexity)
    conditional = np.zeros((n, n), dtype=np.float64)
    betas = np.ones(n, dtype=np.float64)
    converged = np.zeros(n, dtype=bool)
    others = np.arange(n)

    for i in range(n):
        idx = np.concatenate((others[:i], others[i + 1 :]))
        row = d[i, idx]
        shifted = row - row.min()

        beta, lo, hi = 1.0, 0.0, math.inf
        h, e, s = _entropy_nats(shifted, beta)
        for _ in range(MAX_BISECT_ITERS - 1):
            err_log2 = (h - target_nats) / _LN2
            if abs(err_log2) <= _BISECT_BREAK_TOL:
                break
            if h > target_nats:
                # Too flat: sharpen the kernel.
                lo = beta
                beta = beta * 2.0 if hi == math.inf else 0.5 * (beta + hi)
            else:
                hi = beta
                beta = beta * 0.5 if lo == 0.0 else 0.5 * (beta + lo)
            h, e, s = _entropy_nats(shifted, beta)

        p = e / s
        p[p < CONDITIONAL_FLOOR] = 0.0
        p /= p.sum()
        conditional[i, idx] = p
        betas[i] = beta
        converged[i] = abs((h - target_nats) / _LN2) <= LOG2_PERPLEXITY_TOL

    joint = (conditional + conditional.T) / (2.0 * n)
    return AffinityMatrix(p=joint, conditional_p=conditional, betas=betas, converged=converged)


def low_dim_affinities(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Student-t joint probabilities of a layout, plus the raw kernel.

    Returns (q, numerators) where numerators_ij = 1 / (1 + ||y_i - y_j||^2)
    with a zero diagonal, and q is numerators normalized over all ordered
    pairs and floored at Q_FLOOR off-diagonal.
    """
    numerators = 1.0 / (1.0 + pairwise_squared_distances(y))
    np.fill_diagonal(numerators, 0.0)
    q = numerators / numerators.sum()
    np.maximum(q, Q_FLOOR, out=q)
    np.fill_diagonal(q, 0.0)
    return q, numerators


def kl_divergence(p: np.ndarray, q: np.ndarray) -> float:
    """KL(p || q) summed over all pairs; p_ij == 0 terms contribute zero."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    mask = p > 0.0
    return float(np.sum(p[mask] * np.log(p[mask] / q[mask])))


def gradient(
    p: np.ndarray, q: np.ndarray, numerators: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """KL gradient w.r.t. the layout: 4 sum_j (p-q)_ij t_ij (y_i - y_j)."""
    w = (p - q) * numerators
    row_sums = w.sum(axis=1)
    return 4.0 * (row_sums[:, None] * y - w @ y)


def run_tsne(
    x: np.ndarray,
    config: TsneConfig = TsneConfig(),
    progress: Callable[[int, float], None] | None = None,
) -> TsneResult:
    """Project the rows of x to `config.out_dims` dimensions.

    The KL divergence against the (unexaggerated) input affinities is
    recorded every iteration, plus once for the final layout, so
    kl_history[0] is the KL of the random initialization and
    kl_history[-1] == final_kl.  `progress`, when given, is called with
    (iteration, kl) each iteration.

    Raises ConfigError for invalid setups (n < 4, perplexity >= n) and
    DivergenceError if the layout stops being finite mid-run.
    """
    config.validate()
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] < 1:
        raise ConfigError("input must be an n x d matrix with d >= 1")
    n = x.shape[0]
    if n < 4:
        raise ConfigError(f"need at least 4 points, got {n}")
    if not config.perplexity < n:
        raise ConfigError(
            f"perplexity must be smaller than the number of points "
            f"({config.perplexity} >= {n}); lower the perplexity"
        )
    if not np.all(np.isfinite(x)):
        raise ConfigError("input contains non-finite values")

    affinities = calibrate_affinities(pairwise_squared_distances(x), config.perplexity)
    p = affinities.p

    rng = np.random.default_rng(config.seed)
    y = rng.normal(0.0, config.init_std, size=(n, config.out_dims))
    update = np.zeros_like(y)
    gains = np.ones_like(y)
    kl_history = np.empty(config.n_iter + 1, dtype=np.float64)

    # Divergence is detected explicitly below; keep the intermediate
    # overflow chatter quiet so the error surfaces as one clean exception.
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for it in range(config.n_iter):
            q, numerators = low_dim_affinities(y)
            kl = kl_divergence(p, q)
            kl_history[it] = kl
            if progress is not None:
                progress(it, kl)

            p_eff = (
                p * config.early_exaggeration_factor
                if it < config.early_exaggeration_iters
                else p
            )
            momentum = (
                config.momentum_initial
                if it < config.momentum_switch_iter
                else config.momentum_final
            )
            grad = gradient(p_eff, q, numerators, y)
            flipped = update * grad < 0.0
            gains = np.where(flipped, gains + _GAIN_INCREMENT, gains * _GAIN_DECAY)
            np.maximum(gains, _MIN_GAIN, out=gains)
            update = momentum * update - config.learning_rate * gains * grad
            y = y + update
            y = y - y.mean(axis=0)
            if not np.all(np.isfinite(y)):
                raise DivergenceError(iteration=it)

        q, _ = low_dim_affinities(y)
        kl_history[-1] = kl_divergence(p, q)
    return TsneResult(coords=y, kl_history=kl_history, final_kl=float(kl_history[-1]))
