"""Activation-based feature attribution with inverse-weighted aggregation.

The method needs forward passes only. Three steps:

1. Capture activations at a tap point (raw input, LSTM hidden states,
   or the penultimate dense layer).
2. Map activations back onto input features. Hidden activations are
   distributed over features in proportion to each unit's absolute
   input-weight mass, so total activation mass is conserved.
3. Aggregate per feature over all timesteps and samples with the
   inverse-weighted rule s_f = mu_f / (sigma_f + epsilon), which favors
   features that are consistently active: high mean, low spread.

Scores come out of step 3 in a deterministic ranking (descending score,
ties by ascending feature index).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..data.dataset import SequenceDataset
from ..exceptions import ConfigurationError, DataError
from ..nn.weights import LstmWeights
from .base import BaseAttributor, check_model_dataset
from .scores import FeatureScores, rank_features

logger = logging.getLogger(__name__)

TAPS = ("input", "lstm", "penultimate")


@dataclass(frozen=True)
class ActivationTrace:
    """Captured activations of one sample at one tap point.

    values is (T, F) for the input tap, (T, H) for the lstm tap and
    (P,) for the penultimate tap.
    """

    tap: str
    values: np.ndarray
    sample_index: int


def capture_activations(model, dataset: SequenceDataset, tap: str) -> list[ActivationTrace]:
    """One trace per sample at the requested tap point."""
    if tap not in TAPS:
        raise ConfigurationError(f"unknown tap {tap!r}; expected one of {TAPS}")
    check_model_dataset(model, dataset)
    values = model.activations(dataset.X, tap)
    return [ActivationTrace(tap=tap, values=values[i], sample_index=i)
            for i in range(dataset.n_samples)]


def feature_projection(weights: LstmWeights) -> tuple[np.ndarray, np.ndarray]:
    """Row-stochastic map from hidden units to input features.

    omega[h, f] is unit h's absolute input-weight mass on feature f,
    summed over all four gates and normalized over features. Units with
    no input weights at all get a uniform row (and are reported in the
    second return value so callers can flag them).
    """
    h = weights.hidden_dim
    f = weights.input_dim
    mass = np.abs(weights.w_ih).reshape(4, h, f).sum(axis=0)  # (H, F)
    totals = mass.sum(axis=1)
    dead = totals == 0.0
    omega = np.empty_like(mass)
    omega[~dead] = mass[~dead] / totals[~dead, None]
    omega[dead] = 1.0 / f
    return omega, dead


def penult_projection(weights: LstmWeights) -> tuple[np.ndarray, np.ndarray]:
    """Row-stochastic map from penultimate units to hidden units."""
    mass = np.abs(weights.w_pen)  # (P, H)
    totals = mass.sum(axis=1)
    dead = totals == 0.0
    omega = np.empty_like(mass)
    omega[~dead] = mass[~dead] / totals[~dead, None]
    omega[dead] = 1.0 / weights.hidden_dim
    return omega, dead


def map_to_features(trace: ActivationTrace, weights: LstmWeights) -> np.ndarray:
    """Project one trace into feature space.

    input -> |x| as-is (T, F); lstm -> |h| routed through the
    input-weight mass (T, F); penultimate -> |z| routed through both
    projections (1, F). Each row of the result preserves the absolute
    activation mass of the corresponding row of the trace.
    """
    if trace.tap == "input":
        return np.abs(trace.values)
    omega, dead = feature_projection(weights)
    if dead.any():
        logger.warning(
            "hidden unit(s) %s have all-zero input weights; using uniform feature mass",
            np.flatnonzero(dead).tolist(),
        )
    if trace.tap == "lstm":
        return np.abs(trace.values) @ omega
    if trace.tap == "penultimate":
        omega_pen, dead_pen = penult_projection(weights)
        if dead_pen.any():
            logger.warning(
                "penultimate unit(s) %s have all-zero weights; using uniform hidden mass",
                np.flatnonzero(dead_pen).tolist(),
            )
        return np.abs(trace.values).reshape(1, -1) @ omega_pen @ omega
    raise ConfigurationError(f"unknown tap {trace.tap!r}; expected one of {TAPS}")


def inv_aggregate(
    feature_activations: np.ndarray,
    epsilon: float,
    *,
    method_tag: str = "inv",
    feature_names=None,
) -> FeatureScores:
    """Inverse-weighted aggregation over stacked feature activations.

    ``feature_activations`` holds one row per (sample, timestep) pair.
    mu_f and sigma_f are the mean and population standard deviation of
    column f; the score is mu_f / (sigma_f + epsilon).
    """
    stack = np.asarray(feature_activations, dtype=np.float64)
    if stack.ndim != 2 or stack.shape[0] == 0:
        raise DataError("feature activations must be a non-empty (rows, F) stack")
    if epsilon < 0:
        raise ConfigurationError("epsilon must be >= 0")
    mu = stack.mean(axis=0)
    sigma = stack.std(axis=0)
    denom = sigma + epsilon
    # epsilon = 0 is allowed for scale-invariance checks; a feature with
    # zero mean and zero spread scores zero rather than 0/0.
    with np.errstate(divide="ignore", invalid="ignore"):
        scores = np.where(denom > 0.0, mu / denom, 0.0)
    return FeatureScores(
        scores=scores,
        mu=mu,
        sigma=sigma,
        epsilon=epsilon,
        ranking=rank_features(scores),
        method_tag=method_tag,
        feature_names=None if feature_names is None else tuple(feature_names),
    )


def deepactif(
    model,
    dataset: SequenceDataset,
    tap: str = "lstm",
    epsilon: float = 1e-8,
) -> FeatureScores:
    """Capture, map and aggregate: the full forward-only pipeline.

    For the input and lstm taps the aggregation runs over all T*N
    mapped rows; the penultimate tap has no time axis, so statistics
    run over the N mapped vectors.
    """
    traces = capture_activations(model, dataset, tap)
    weights = model.weights_
    mapped = [map_to_features(trace, weights) for trace in traces]
    stack = np.concatenate(mapped, axis=0)
    return inv_aggregate(
        stack,
        epsilon,
        method_tag=f"deepactif_{tap}",
        feature_names=dataset.feature_names,
    )


class DeepActif(BaseAttributor):
    """Estimator wrapper for the forward-only attribution pipeline."""

    def __init__(self, tap: str = "lstm", epsilon: float = 1e-8):
        self.tap = tap
        self.epsilon = epsilon

    @property
    def tag(self) -> str:
        return f"deepactif_{self.tap}"

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        return deepactif(model, dataset, self.tap, self.epsilon)
