"""Random-ranking null control."""

from __future__ import annotations

import numpy as np

from ..data.dataset import SequenceDataset
from ..exceptions import ConfigurationError
from .base import BaseAttributor
from .scores import FeatureScores


def random_scores(n_features: int, seed: int = 0, feature_names=None) -> FeatureScores:
    """Seeded uniform scores; the induced ranking is uniform over permutations."""
    if n_features < 1:
        raise ConfigurationError("n_features must be >= 1")
    values = np.random.default_rng(seed).uniform(size=n_features)
    return FeatureScores.build(
        values, "random", epsilon=0.0, feature_names=feature_names
    )


class RandomAttributor(BaseAttributor):
    def __init__(self, seed: int = 0):
        self.seed = seed

    @property
    def tag(self) -> str:
        return "random"

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        return random_scores(dataset.n_features, self.seed, dataset.feature_names)
