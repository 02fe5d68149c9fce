"""Synthetic gaze-like data with planted feature relevance.

Each feature is an AR(1) process (coefficient 0.9, unit stationary
variance), temporally smooth like a gaze trace. The per-row target is a
weighted sum of trailing window means of the relevant features plus
Gaussian noise, so a window of ``seq_len`` rows carries exactly

    y = sum_f weight_f * mean_t(x[t, f]) + noise

over its own rows. Irrelevant features never enter the target.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..exceptions import ConfigurationError
from .dataset import SequenceDataset
from .records import RecordFrame
from .windowing import window

AR_COEFF = 0.9


@dataclass(frozen=True)
class SynthConfig:
    n_subjects: int = 8
    windows_per_subject: int = 40
    seq_len: int = 30
    n_features: int = 15
    relevant: tuple[int, ...] = (0, 5, 11)
    weights: tuple[float, ...] = (1.5, -2.0, 1.0)
    noise_std: float = 0.1
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "relevant", tuple(int(i) for i in self.relevant))
        object.__setattr__(self, "weights", tuple(float(v) for v in self.weights))
        if min((self.n_subjects, self.windows_per_subject, self.seq_len, self.n_features)) < 1:
            raise ConfigurationError("all synthetic dimensions must be >= 1")
        if any(i < 0 or i >= self.n_features for i in self.relevant):
            raise ConfigurationError(
                f"relevant features {self.relevant} out of range for F={self.n_features}"
            )
        if len(set(self.relevant)) != len(self.relevant):
            raise ConfigurationError("relevant feature indices must be distinct")
        if len(self.weights) != len(self.relevant):
            raise ConfigurationError("one weight per relevant feature required")
        if self.noise_std < 0:
            raise ConfigurationError("noise_std must be >= 0")

    @classmethod
    def from_json(cls, path) -> "SynthConfig":
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(**raw)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n_subjects": self.n_subjects,
                "windows_per_subject": self.windows_per_subject,
                "seq_len": self.seq_len,
                "n_features": self.n_features,
                "relevant": list(self.relevant),
                "weights": list(self.weights),
                "noise_std": self.noise_std,
                "seed": self.seed,
            },
            indent=2,
            sort_keys=True,
        )


def synth_records(config: SynthConfig) -> tuple[RecordFrame, tuple[int, ...]]:
    """Generate row-level records; deterministic given ``config.seed``."""
    rng = np.random.default_rng(config.seed)
    rows_per_subject = config.windows_per_subject * config.seq_len
    innovation = np.sqrt(1.0 - AR_COEFF**2)

    subjects: list[str] = []
    all_feats: list[np.ndarray] = []
    all_targets: list[np.ndarray] = []
    all_times: list[np.ndarray] = []
    weight_vec = np.asarray(config.weights, dtype=np.float64)
    relevant = list(config.relevant)

    for s in range(config.n_subjects):
        feats = np.empty((rows_per_subject, config.n_features))
        feats[0] = rng.normal(size=config.n_features)
        shocks = rng.normal(size=(rows_per_subject - 1, config.n_features))
        for t in range(1, rows_per_subject):
            feats[t] = AR_COEFF * feats[t - 1] + innovation * shocks[t - 1]

        targets = np.empty(rows_per_subject)
        noise = rng.normal(scale=config.noise_std, size=rows_per_subject) if config.noise_std > 0 \
            else np.zeros(rows_per_subject)
        for r in range(rows_per_subject):
            lo = max(0, r - config.seq_len + 1)
            trailing_mean = feats[lo : r + 1, relevant].mean(axis=0)
            targets[r] = float(trailing_mean @ weight_vec) + noise[r]

        subject = f"s{s:03d}"
        subjects.extend([subject] * rows_per_subject)
        all_feats.append(feats)
        all_targets.append(targets)
        all_times.append(np.arange(rows_per_subject, dtype=np.float64))

    names = tuple(f"f{j:02d}" for j in range(config.n_features))
    frame = RecordFrame(
        subjects=np.array(subjects, dtype=object),
        timestamps=np.concatenate(all_times),
        targets=np.concatenate(all_targets),
        features=np.concatenate(all_feats, axis=0),
        feature_names=names,
    )
    return frame, config.relevant


def synth_generate(config: SynthConfig) -> tuple[SequenceDataset, tuple[int, ...]]:
    """Windowed synthetic dataset (non-overlapping windows) plus ground truth."""
    frame, relevant = synth_records(config)
    dataset = window(frame, config.seq_len, stride=config.seq_len)
    return dataset, relevant
