"""Per-feature importance scores with provenance and a deterministic ranking."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..exceptions import ConfigurationError


def rank_features(scores: np.ndarray) -> np.ndarray:
    """Indices sorted by descending score; ties broken by ascending index."""
    scores = np.asarray(scores, dtype=np.float64)
    # Stable sort on the negated scores keeps equal-score features in
    # index order, which is the tie rule.
    return np.argsort(-scores, kind="stable")


@dataclass(frozen=True)
class FeatureScores:
    """Importance values per feature.

    ``mu``/``sigma`` record how the score was aggregated (mean and
    spread of the underlying per-sample quantity); methods with a single
    deterministic pass store sigma = 0.
    """

    scores: np.ndarray
    mu: np.ndarray
    sigma: np.ndarray
    epsilon: float
    ranking: np.ndarray
    method_tag: str
    feature_names: tuple[str, ...] | None = None

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=np.float64).reshape(-1)
        f = scores.shape[0]
        mu = np.asarray(self.mu, dtype=np.float64).reshape(-1)
        sigma = np.asarray(self.sigma, dtype=np.float64).reshape(-1)
        ranking = np.asarray(self.ranking, dtype=np.intp).reshape(-1)
        if mu.shape != (f,) or sigma.shape != (f,) or ranking.shape != (f,):
            raise ConfigurationError("scores, mu, sigma and ranking must all have length F")
        if np.any(sigma < 0):
            raise ConfigurationError("sigma must be non-negative")
        if not np.array_equal(np.sort(ranking), np.arange(f)):
            raise ConfigurationError("ranking is not a permutation of feature indices")
        ranked = scores[ranking]
        if np.any(ranked[:-1] < ranked[1:]):
            raise ConfigurationError("ranking is not sorted by descending score")
        if self.feature_names is not None and len(self.feature_names) != f:
            raise ConfigurationError("feature_names length must equal F")
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "ranking", ranking)
        object.__setattr__(self, "epsilon", float(self.epsilon))

    @classmethod
    def build(
        cls,
        scores,
        method_tag: str,
        *,
        mu=None,
        sigma=None,
        epsilon: float = 0.0,
        feature_names=None,
    ) -> "FeatureScores":
        """Construct with the canonical ranking; mu defaults to the scores."""
        scores = np.asarray(scores, dtype=np.float64).reshape(-1)
        mu = scores.copy() if mu is None else mu
        sigma = np.zeros_like(scores) if sigma is None else sigma
        return cls(
            scores=scores,
            mu=mu,
            sigma=sigma,
            epsilon=epsilon,
            ranking=rank_features(scores),
            method_tag=method_tag,
            feature_names=None if feature_names is None else tuple(feature_names),
        )

    @property
    def n_features(self) -> int:
        return self.scores.shape[0]

    def top_names(self, count: int) -> list[str]:
        names = self.feature_names or tuple(str(i) for i in range(self.n_features))
        return [names[i] for i in self.ranking[:count]]

    def to_dict(self) -> dict:
        names = self.feature_names or tuple(str(i) for i in range(self.n_features))
        return {
            "method_tag": self.method_tag,
            "epsilon": self.epsilon,
            "features": [
                {
                    "name": names[f],
                    "mu": float(self.mu[f]),
                    "sigma": float(self.sigma[f]),
                    "score": float(self.scores[f]),
                }
                for f in range(self.n_features)
            ],
            "ranking": [int(i) for i in self.ranking],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, raw: dict) -> "FeatureScores":
        feats = raw["features"]
        return cls(
            scores=np.array([f["score"] for f in feats]),
            mu=np.array([f["mu"] for f in feats]),
            sigma=np.array([f["sigma"] for f in feats]),
            epsilon=float(raw["epsilon"]),
            ranking=np.array(raw["ranking"], dtype=np.intp),
            method_tag=str(raw["method_tag"]),
            feature_names=tuple(f["name"] for f in feats),
        )

    @classmethod
    def from_json_file(cls, path) -> "FeatureScores":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
