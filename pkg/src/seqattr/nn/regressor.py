"""Scikit-learn style estimator around the LSTM network.

``SequenceRegressor`` follows the fit/predict/get_params contract so it
composes with pipelines, cloning and config hashing. ``X`` is a 3-d
array of sequences (N, T, F); an optional ``subjects`` fit argument
drives the chronological validation split for early stopping.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.exceptions import NotFittedError

from ..validation import check_sequences, check_targets
from .backward import prediction_input_gradients
from .forward import forward_batch, predict_batch
from .train import TrainConfig, predict_mae, train_network
from .weights import LstmWeights

#: Activation tap points exposed for attribution.
TAPS = ("input", "lstm", "penultimate")


class SequenceRegressor(BaseEstimator, RegressorMixin):
    """Single-layer LSTM + dense head regressor for fixed-length sequences.

    Parameters mirror :class:`~seqattr.nn.train.TrainConfig` plus the
    architecture dims. After ``fit`` the learned parameters live in
    ``weights_`` and the validation curve in ``val_history_``.
    """

    def __init__(
        self,
        hidden_dim: int = 32,
        penult_dim: int = 16,
        learning_rate: float = 1e-3,
        batch_size: int = 460,
        max_epochs: int = 60,
        patience: int = 8,
        smooth_l1_beta: float = 1.0,
        weight_decay: float = 0.01,
        adam_beta1: float = 0.9,
        adam_beta2: float = 0.999,
        adam_eps: float = 1e-8,
        val_fraction: float = 0.2,
        seed: int = 0,
    ):
        self.hidden_dim = hidden_dim
        self.penult_dim = penult_dim
        self.learning_rate = learning_rate
        self.batch_size = batch_size
        self.max_epochs = max_epochs
        self.patience = patience
        self.smooth_l1_beta = smooth_l1_beta
        self.weight_decay = weight_decay
        self.adam_beta1 = adam_beta1
        self.adam_beta2 = adam_beta2
        self.adam_eps = adam_eps
        self.val_fraction = val_fraction
        self.seed = seed

    def _train_config(self) -> TrainConfig:
        return TrainConfig(
            learning_rate=self.learning_rate,
            batch_size=self.batch_size,
            max_epochs=self.max_epochs,
            patience=self.patience,
            smooth_l1_beta=self.smooth_l1_beta,
            weight_decay=self.weight_decay,
            adam_beta1=self.adam_beta1,
            adam_beta2=self.adam_beta2,
            adam_eps=self.adam_eps,
            val_fraction=self.val_fraction,
            seed=self.seed,
        )

    def fit(self, X, y, subjects=None):
        X = check_sequences(X)
        y = check_targets(y, X.shape[0])
        if subjects is None:
            # Without subject ids the whole batch counts as one subject;
            # the chronological split still applies.
            subjects = np.zeros(X.shape[0], dtype=int)
        result = train_network(
            X, y, subjects,
            hidden_dim=self.hidden_dim,
            penult_dim=self.penult_dim,
            config=self._train_config(),
        )
        self.weights_ = result.weights
        self.val_history_ = result.val_history
        self.best_epoch_ = result.best_epoch
        self.epochs_run_ = result.epochs_run
        self.n_features_in_ = X.shape[2]
        return self

    @classmethod
    def from_weights(cls, weights: LstmWeights, **params) -> "SequenceRegressor":
        """Wrap pre-trained weights in a fit-less estimator."""
        est = cls(hidden_dim=weights.hidden_dim, penult_dim=weights.penult_dim, **params)
        est.weights_ = weights
        est.n_features_in_ = weights.input_dim
        return est

    def _check_fitted(self) -> LstmWeights:
        if not hasattr(self, "weights_"):
            raise NotFittedError("SequenceRegressor is not fitted yet")
        return self.weights_

    def predict(self, X) -> np.ndarray:
        weights = self._check_fitted()
        return predict_batch(weights, check_sequences(X, weights.input_dim))

    def mae(self, X, y) -> float:
        weights = self._check_fitted()
        return predict_mae(weights, check_sequences(X, weights.input_dim), y)

    def activations(self, X, tap: str) -> np.ndarray:
        """Captured activations at a tap point.

        input -> (N, T, F) raw input, lstm -> (N, T, H) hidden states,
        penultimate -> (N, P) post-tanh dense activations.
        """
        weights = self._check_fitted()
        X = check_sequences(X, weights.input_dim)
        if tap == "input":
            return X
        hidden, penult, _, _ = forward_batch(weights, X)
        if tap == "lstm":
            return hidden
        if tap == "penultimate":
            return penult
        raise ValueError(f"unknown tap {tap!r}; expected one of {TAPS}")

    def input_gradients(self, X) -> np.ndarray:
        """d(prediction)/d(input) per sample, shape (N, T, F)."""
        weights = self._check_fitted()
        return prediction_input_gradients(weights, check_sequences(X, weights.input_dim))
