"""Mini-batch training with early stopping on validation MAE.

The validation split is chronological: the last ``val_fraction`` of each
subject's windows, in the order they appear, is held out. Overlapping
windows make a random split leaky, a chronological one is not.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ConfigurationError, DataError
from .backward import loss_and_gradients
from .forward import predict_batch
from .optim import AdamWState, adamw_step
from .weights import LstmWeights, init_weights

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters of one training run."""

    learning_rate: float = 1e-3
    batch_size: int = 460
    max_epochs: int = 60
    patience: int = 8
    smooth_l1_beta: float = 1.0
    weight_decay: float = 0.01
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    val_fraction: float = 0.2
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ConfigurationError("learning_rate must be > 0")
        if self.batch_size < 1:
            raise ConfigurationError("batch_size must be >= 1")
        if self.patience < 1:
            raise ConfigurationError("patience must be >= 1")
        if self.smooth_l1_beta <= 0:
            raise ConfigurationError("smooth_l1_beta must be > 0")
        if not 0.0 < self.val_fraction < 1.0:
            raise ConfigurationError("val_fraction must lie in (0, 1)")


@dataclass
class TrainResult:
    weights: LstmWeights
    val_history: list[float] = field(default_factory=list)
    best_epoch: int = 0
    epochs_run: int = 0


def chronological_val_split(subjects: np.ndarray, val_fraction: float) -> tuple[np.ndarray, np.ndarray]:
    """Per-subject chronological split; returns (train_idx, val_idx).

    The last ceil(val_fraction * n_s) windows of each subject go to
    validation, preserving input order everywhere.
    """
    subjects = np.asarray(subjects)
    train_idx: list[int] = []
    val_idx: list[int] = []
    for subject in sorted(set(subjects.tolist())):
        idx = np.flatnonzero(subjects == subject)
        n_val = int(np.ceil(val_fraction * idx.size))
        n_val = min(max(n_val, 1), idx.size - 1) if idx.size > 1 else 0
        if n_val == 0:
            train_idx.extend(idx.tolist())
        else:
            train_idx.extend(idx[:-n_val].tolist())
            val_idx.extend(idx[-n_val:].tolist())
    return np.array(sorted(train_idx), dtype=int), np.array(sorted(val_idx), dtype=int)


def predict_mae(weights: LstmWeights, X, y) -> float:
    """Mean absolute error of the network over a batch."""
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    if y.size == 0:
        raise DataError("empty dataset")
    pred = predict_batch(weights, X)
    return float(np.mean(np.abs(pred - y)))


def train_network(
    X,
    y,
    subjects,
    *,
    hidden_dim: int,
    penult_dim: int,
    config: TrainConfig,
) -> TrainResult:
    """Train a fresh network; returns the snapshot with the best validation MAE.

    Deterministic given ``config.seed``: initialization and batch
    shuffling are the only random elements and both draw from one
    seeded generator.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    subjects = np.asarray(subjects)
    if X.ndim != 3:
        raise ConfigurationError(f"X must be (N, T, F), got ndim={X.ndim}")
    if X.shape[0] != y.size or X.shape[0] != subjects.size:
        raise DataError("X, y and subjects disagree on sample count")

    train_idx, val_idx = chronological_val_split(subjects, config.val_fraction)
    if train_idx.size == 0:
        raise DataError("training split is empty")
    if val_idx.size == 0:
        raise DataError(
            "validation split is empty; early stopping needs at least one "
            "subject with two or more windows"
        )
    X_train, y_train = X[train_idx], y[train_idx]
    X_val, y_val = X[val_idx], y[val_idx]

    rng = np.random.default_rng(config.seed)
    init_seed = int(rng.integers(0, 2**63 - 1))
    weights = init_weights(X.shape[2], hidden_dim, penult_dim, init_seed)
    state = AdamWState.zeros(weights)

    best_weights = weights.copy()
    best_mae = np.inf
    best_epoch = 0
    bad_epochs = 0
    history: list[float] = []

    n_train = X_train.shape[0]
    for epoch in range(1, config.max_epochs + 1):
        order = rng.permutation(n_train)
        for start in range(0, n_train, config.batch_size):
            batch = order[start : start + config.batch_size]
            _, grads = loss_and_gradients(
                weights, X_train[batch], y_train[batch], config.smooth_l1_beta
            )
            weights, state = adamw_step(
                weights, grads, state,
                learning_rate=config.learning_rate,
                beta1=config.adam_beta1,
                beta2=config.adam_beta2,
                eps=config.adam_eps,
                weight_decay=config.weight_decay,
            )
        val_mae = predict_mae(weights, X_val, y_val)
        history.append(val_mae)
        if val_mae < best_mae:
            best_mae = val_mae
            best_weights = weights.copy()
            best_epoch = epoch
            bad_epochs = 0
        else:
            bad_epochs += 1
            if bad_epochs >= config.patience:
                logger.debug("early stop at epoch %d (best %d)", epoch, best_epoch)
                break

    return TrainResult(
        weights=best_weights,
        val_history=history,
        best_epoch=best_epoch,
        epochs_run=len(history),
    )
