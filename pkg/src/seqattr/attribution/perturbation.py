"""Perturbation baselines: ablation and cross-sample shuffling.

Both score a feature by how much test MAE degrades when that feature is
disturbed, without retraining. Shuffling swaps a feature's whole
sequence between samples, so within-sequence temporal structure stays
intact and only the feature-target pairing is destroyed.
"""

from __future__ import annotations

import numpy as np

from ..data.dataset import SequenceDataset
from ..exceptions import ConfigurationError, DataError
from .base import BaseAttributor
from .scores import FeatureScores


def ablation_importance(model, dataset: SequenceDataset) -> FeatureScores:
    """MAE increase when feature f is zeroed at every timestep.

    Zero is the per-subject mean once subject-wise normalization has
    run, so this is mean-ablation in the normalized space.
    """
    base_mae = float(np.mean(np.abs(model.predict(dataset.X) - dataset.y)))
    deltas = np.empty(dataset.n_features)
    for f in range(dataset.n_features):
        ablated = np.array(dataset.X)
        ablated[:, :, f] = 0.0
        mae = float(np.mean(np.abs(model.predict(ablated) - dataset.y)))
        deltas[f] = mae - base_mae
    return FeatureScores.build(
        deltas, "ablation", epsilon=0.0, feature_names=dataset.feature_names
    )


def shuffle_delta(
    model,
    dataset: SequenceDataset,
    feature: int,
    perm: np.ndarray,
    base_mae: float | None = None,
) -> float:
    """MAE change when one feature's sequences are permuted across samples."""
    if base_mae is None:
        base_mae = float(np.mean(np.abs(model.predict(dataset.X) - dataset.y)))
    shuffled = np.array(dataset.X)
    shuffled[:, :, feature] = dataset.X[perm, :, feature]
    mae = float(np.mean(np.abs(model.predict(shuffled) - dataset.y)))
    return mae - base_mae


def shuffle_importance(
    model,
    dataset: SequenceDataset,
    repeats: int = 10,
    seed: int = 0,
) -> FeatureScores:
    """Mean MAE change over seeded cross-sample permutations.

    One permutation is drawn per repeat and applied to every feature in
    turn, which keeps the scores equivariant under feature reordering.
    """
    if repeats < 1:
        raise ConfigurationError("repeats must be >= 1")
    if dataset.n_samples < 2:
        raise DataError("shuffling needs >= 2 samples; permutation is vacuous")
    rng = np.random.default_rng(seed)
    base_mae = float(np.mean(np.abs(model.predict(dataset.X) - dataset.y)))
    deltas = np.empty((repeats, dataset.n_features))
    for r in range(repeats):
        perm = rng.permutation(dataset.n_samples)
        for f in range(dataset.n_features):
            deltas[r, f] = shuffle_delta(model, dataset, f, perm, base_mae)
    return FeatureScores.build(
        deltas.mean(axis=0),
        "shuffle",
        sigma=deltas.std(axis=0),
        epsilon=0.0,
        feature_names=dataset.feature_names,
    )


class AblationAttributor(BaseAttributor):
    @property
    def tag(self) -> str:
        return "ablation"

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        return ablation_importance(model, dataset)


class ShuffleAttributor(BaseAttributor):
    def __init__(self, repeats: int = 10, seed: int = 0):
        self.repeats = repeats
        self.seed = seed

    @property
    def tag(self) -> str:
        return "shuffle"

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        return shuffle_importance(model, dataset, self.repeats, self.seed)
