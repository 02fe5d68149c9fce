"""Common attributor interface.

Attribution methods are small estimator-style objects: construction
takes only configuration (so ``get_params``/``clone`` work and configs
hash deterministically), ``fit(model, dataset)`` computes scores into
``scores_``. Stochastic methods expose a ``seed`` parameter the
evaluation pipeline re-derives per fold and repeat.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator

from ..data.dataset import SequenceDataset
from ..exceptions import ConfigurationError
from .scores import FeatureScores


@dataclass(frozen=True)
class AttributionConfig:
    """Shared knobs for building attributors from run configs."""

    epsilon: float = 1e-8
    ig_steps: int = 50
    shap_coalitions: int = 2048
    shuffle_repeats: int = 10
    random_baseline_draws: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.ig_steps < 1:
            raise ConfigurationError("ig_steps must be >= 1")
        if self.shuffle_repeats < 1:
            raise ConfigurationError("shuffle_repeats must be >= 1")
        if self.random_baseline_draws < 1:
            raise ConfigurationError("random_baseline_draws must be >= 1")
        if self.epsilon < 0:
            raise ConfigurationError("epsilon must be >= 0")


def check_model_dataset(model, dataset: SequenceDataset) -> None:
    model_f = getattr(model, "n_features_in_", None)
    if model_f is not None and model_f != dataset.n_features:
        raise ConfigurationError(
            f"model expects {model_f} features, dataset has {dataset.n_features}"
        )
    if dataset.n_samples == 0:
        raise ConfigurationError("dataset is empty")


class BaseAttributor(BaseEstimator):
    """Base class: subclasses implement ``_compute(model, dataset)``."""

    @property
    def tag(self) -> str:
        raise NotImplementedError

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        raise NotImplementedError

    def feature_scores(self, model, dataset: SequenceDataset) -> FeatureScores:
        check_model_dataset(model, dataset)
        return self._compute(model, dataset)

    def fit(self, model, dataset: SequenceDataset):
        self.scores_ = self.feature_scores(model, dataset)
        return self

    def _dataset_mae(self, model, X: np.ndarray, y: np.ndarray) -> float:
        return float(np.mean(np.abs(model.predict(X) - y)))
