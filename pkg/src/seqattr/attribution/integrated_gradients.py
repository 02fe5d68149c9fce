"""Path-integral attribution from a baseline to the input.

Attribution of sample x against baseline b:

    (x - b) * integral_0^1 grad f(b + alpha (x - b)) d(alpha)

approximated with the trapezoidal rule over ``steps`` equal intervals
(steps + 1 gradient evaluations). The trapezoid is exact whenever the
gradient is linear along the path, so a linear model needs steps = 1.
"""

from __future__ import annotations

import numpy as np

from ..data.dataset import SequenceDataset
from ..exceptions import ConfigurationError
from .base import BaseAttributor
from .scores import FeatureScores

BASELINE_KINDS = ("zero", "mean", "random")


def integrated_gradients(model, sample, baseline, steps: int = 50) -> np.ndarray:
    """Trapezoidal path integral for one sample; returns a (T, F) map."""
    sample = np.asarray(sample, dtype=np.float64)
    baseline = np.asarray(baseline, dtype=np.float64)
    if baseline.shape != sample.shape:
        raise ConfigurationError(
            f"baseline shape {baseline.shape} must match sample shape {sample.shape}"
        )
    if steps < 1:
        raise ConfigurationError("steps must be >= 1")
    diff = sample - baseline
    alphas = np.linspace(0.0, 1.0, steps + 1)
    path = baseline[np.newaxis] + alphas[:, np.newaxis, np.newaxis] * diff[np.newaxis]
    grads = model.input_gradients(path)  # (steps + 1, T, F)
    trapezoid = np.ones(steps + 1)
    trapezoid[0] = trapezoid[-1] = 0.5
    avg_grad = np.tensordot(trapezoid, grads, axes=1) / steps
    return diff * avg_grad


def _batched_average_gradients(model, X: np.ndarray, baseline: np.ndarray, steps: int) -> np.ndarray:
    """Trapezoid-averaged path gradients for every sample at once, (N, T, F)."""
    diff = X - baseline[np.newaxis]
    accum = np.zeros_like(X)
    for j, alpha in enumerate(np.linspace(0.0, 1.0, steps + 1)):
        weight = 0.5 if j in (0, steps) else 1.0
        grads = model.input_gradients(baseline[np.newaxis] + alpha * diff)
        accum += weight * grads
    return accum / steps


def make_baseline(kind: str, dataset: SequenceDataset, rng: np.random.Generator | None = None) -> np.ndarray:
    """A (T, F) baseline shared by all samples of the dataset."""
    if kind == "zero":
        return np.zeros((dataset.seq_len, dataset.n_features))
    if kind == "mean":
        per_feature = dataset.X.mean(axis=(0, 1))
        return np.tile(per_feature, (dataset.seq_len, 1))
    if kind == "random":
        if rng is None:
            raise ConfigurationError("random baseline needs a generator")
        return rng.normal(size=(dataset.seq_len, dataset.n_features))
    raise ConfigurationError(f"unknown baseline {kind!r}; expected one of {BASELINE_KINDS}")


def ig_feature_scores(
    model,
    dataset: SequenceDataset,
    baseline_kind: str = "zero",
    steps: int = 50,
    seed: int = 0,
    random_baseline_draws: int = 5,
) -> FeatureScores:
    """Global per-feature scores: mean |attribution| over samples and time.

    The random baseline averages attributions over several seeded
    standard-normal baselines before pooling.
    """
    if baseline_kind == "random":
        rng = np.random.default_rng(seed)
        attr = np.zeros_like(dataset.X)
        for _ in range(random_baseline_draws):
            baseline = make_baseline("random", dataset, rng)
            diff = dataset.X - baseline[np.newaxis]
            attr += diff * _batched_average_gradients(model, dataset.X, baseline, steps)
        attr /= random_baseline_draws
    else:
        baseline = make_baseline(baseline_kind, dataset)
        diff = dataset.X - baseline[np.newaxis]
        attr = diff * _batched_average_gradients(model, dataset.X, baseline, steps)

    magnitude = np.abs(attr).reshape(-1, dataset.n_features)
    return FeatureScores.build(
        magnitude.mean(axis=0),
        f"ig_{baseline_kind}",
        sigma=magnitude.std(axis=0),
        epsilon=0.0,
        feature_names=dataset.feature_names,
    )


class IntegratedGradientsAttributor(BaseAttributor):
    def __init__(
        self,
        baseline: str = "zero",
        steps: int = 50,
        seed: int = 0,
        random_baseline_draws: int = 5,
    ):
        self.baseline = baseline
        self.steps = steps
        self.seed = seed
        self.random_baseline_draws = random_baseline_draws

    @property
    def tag(self) -> str:
        return f"ig_{self.baseline}"

    def _compute(self, model, dataset: SequenceDataset) -> FeatureScores:
        return ig_feature_scores(
            model,
            dataset,
            baseline_kind=self.baseline,
            steps=self.steps,
            seed=self.seed,
            random_baseline_draws=self.random_baseline_draws,
        )
