"""Shapley-value attribution via weighted least squares.

The value function v(S) is the model prediction with every feature
outside S replaced, at all timesteps, by its background mean. Kernel
weights follow

    pi(s) = (F - 1) / (C(F, s) * s * (F - s)),   0 < s < F,

and the empty/full coalitions enter as exact constraints: the intercept
is pinned to v(empty) and the attributions sum to v(full) - v(empty)
(efficiency), enforced by eliminating one unknown. With every proper
non-empty coalition enumerated (feasible for F <= 12) the solve
recovers exact Shapley values; above that, coalitions are sampled from
the kernel distribution.
"""

from __future__ import annotations

from math import comb, factorial

import numpy as np

from ..data.dataset import SequenceDataset
from ..exceptions import ConfigurationError, SolverError
from .base import BaseAttributor
from .scores import FeatureScores

EXACT_LIMIT = 12


def shapley_kernel(n_features: int, size) -> np.ndarray:
    """pi(|S|) for proper non-empty coalition sizes."""
    size = np.asarray(size, dtype=np.int64)
    if np.any((size <= 0) | (size >= n_features)):
        raise ConfigurationError("kernel weight defined only for 0 < |S| < F")
    weights = np.empty(size.shape, dtype=np.float64)
    for idx, s in np.ndenumerate(size):
        weights[idx] = (n_features - 1) / (comb(n_features, int(s)) * int(s) * (n_features - int(s)))
    return weights


def coalition_values(model, sample: np.ndarray, background: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """v(S) for a batch of coalition masks (M, F) against one sample."""
    sample = np.asarray(sample, dtype=np.float64)
    background = np.asarray(background, dtype=np.float64).reshape(-1)
    masked = np.where(masks[:, np.newaxis, :], sample[np.newaxis], background[np.newaxis, np.newaxis, :])
    values = np.empty(masks.shape[0])
    chunk = 2048
    for start in range(0, masks.shape[0], chunk):
        values[start : start + chunk] = model.predict(masked[start : start + chunk])
    return values


def _all_masks(n_features: int) -> np.ndarray:
    """Every subset of {0..F-1} as a (2^F, F) boolean table, index = bitmask."""
    codes = np.arange(2**n_features, dtype=np.uint32)
    return (codes[:, np.newaxis] >> np.arange(n_features)) & 1 == 1


def exact_shapley(model, sample, background_mean) -> np.ndarray:
    """Exact Shapley values by full enumeration; refuses above F = 12."""
    sample = np.asarray(sample, dtype=np.float64)
    n_features = sample.shape[-1]
    if n_features > EXACT_LIMIT:
        raise ConfigurationError(
            f"exact enumeration over 2^F coalitions refused for F={n_features} > {EXACT_LIMIT}"
        )
    masks = _all_masks(n_features)
    values = coalition_values(model, sample, background_mean, masks)

    sizes = masks.sum(axis=1)
    # Marginal-contribution weight |S|! (F - |S| - 1)! / F! by subset size.
    fact = np.array([factorial(k) for k in range(n_features + 1)], dtype=np.float64)
    weight_by_size = fact[:n_features] * fact[n_features - 1 :: -1][:n_features] / fact[n_features]

    phi = np.zeros(n_features)
    for f in range(n_features):
        bit = 1 << f
        without = np.flatnonzero(~masks[:, f])
        phi[f] = np.sum(weight_by_size[sizes[without]] * (values[without | bit] - values[without]))
    return phi


def _sample_masks(n_features: int, n_coalitions: int, rng: np.random.Generator) -> np.ndarray:
    sizes = np.arange(1, n_features)
    probs = (n_features - 1) / (sizes * (n_features - sizes))
    probs = probs / probs.sum()
    drawn = rng.choice(sizes, size=n_coalitions, p=probs)
    masks = np.zeros((n_coalitions, n_features), dtype=bool)
    for m, s in enumerate(drawn):
        masks[m, rng.permutation(n_features)[:s]] = True
    return masks


def kernel_shap(
    model,
    sample,
    background_mean,
    n_coalitions: int = 2048,
    seed: int = 0,
) -> np.ndarray:
    """Shapley values for one sample.

    Enumerates all proper coalitions when F <= 12 (kernel weights in
    the regression); otherwise samples ``n_coalitions`` masks from the
    kernel distribution (uniform regression weights, since the sampling
    density already carries the kernel).
    """
    sample = np.asarray(sample, dtype=np.float64)
    n_features = sample.shape[-1]
    if n_features == 1:
        # Single feature: efficiency pins the only attribution.
        full = coalition_values(model, sample, background_mean, np.ones((1, 1), dtype=bool))
        empty = coalition_values(model, sample, background_mean, np.zeros((1, 1), dtype=bool))
        return np.array([full[0] - empty[0]])

    if n_features <= EXACT_LIMIT:
        masks = _all_masks(n_features)[1:-1]  # drop empty and full
        weights = shapley_kernel(n_features, masks.sum(axis=1))
    else:
        if n_coalitions < 2 * n_features:
            raise ConfigurationError(
                f"n_coalitions must be >= 2F = {2 * n_features}, got {n_coalitions}"
            )
        masks = _sample_masks(n_features, n_coalitions, np.random.default_rng(seed))
        weights = np.ones(masks.shape[0])

    edge = np.array([[False] * n_features, [True] * n_features])
    v_empty, v_full = coalition_values(model, sample, background_mean, edge)
    values = coalition_values(model, sample, background_mean, masks)
    delta = v_full - v_empty

    # Efficiency as a hard constraint: substitute the last attribution
    # out of the system before the weighted solve.
    z = masks.astype(np.float64)
    design = z[:, :-1] - z[:, -1:]
    response = values - v_empty - z[:, -1] * delta
    sqrt_w = np.sqrt(weights)[:, np.newaxis]
    solution, _, rank, _ = np.linalg.lstsq(design * sqrt_w, response * sqrt_w[:, 0], rcond=None)
    if rank < n_features - 1:
        raise SolverError(
            f"coalition design is rank deficient ({rank} < {n_features - 1}); "
            "increase n_coalitions"
        )
    phi = np.empty(n_features)
    phi[:-1] = solution
    phi[-1] = delta - solution.sum()
    return phi


def shap_feature_scores(
    model,
    dataset: SequenceDataset,
    n_coalitions: int = 2048,
    seed: int = 0,
) -> FeatureScores:
    """Global scores: mean |shapley value| per feature over all samples.

    The background is the dataset's per-feature mean over samples and
    timesteps.
    """
    background = dataset.X.mean(axis=(0, 1))
    per_sample = np.empty((dataset.n_samples, dataset.n_features))
    for i in range(dataset.n_samples):
        per_sample[i] = kernel_shap(
            model, dataset.X[i], background, n_coalitions=n_coalitions, seed=seed + i
        )
    magnitude = np.abs(per_sample)
    return FeatureScores.build(
        magnitude.mean(axis=0),
        "kernel_shap",
        sigma=magnitude.std(axis=0),
        epsilon=0.0,
        feature_names=dataset.feature_names,
    )


class KernelShapAttributor(BaseAttributor):
    def __init__(self, n_coalitions: int = 2048, seed: int = 0):
        self.n_coalitions = n_coalitions
        self.seed = seed

    @property
    def tag(self) -> str:
        return "kernel_shap"

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        return shap_feature_scores(
            model, dataset, n_coalitions=self.n_coalitions, seed=self.seed
        )
