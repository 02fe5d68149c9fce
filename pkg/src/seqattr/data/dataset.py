"""Windowed sequence dataset: N sequences of shape (T, F) with scalar targets."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ConfigurationError, DataError


@dataclass(frozen=True)
class SequenceDataset:
    """Immutable container of fixed-length windows.

    X is (N, T, F) float64, y (N,) float64, subjects (N,) strings.
    ``norm_stats`` carries the per-subject normalization provenance when
    the windows were built from normalized records.
    """

    X: np.ndarray
    y: np.ndarray
    subjects: np.ndarray
    feature_names: tuple[str, ...]
    norm_stats: "NormStats | None" = field(default=None, repr=False)

    def __post_init__(self):
        if self.X.ndim != 3:
            raise DataError(f"X must be (N, T, F), got ndim={self.X.ndim}")
        n = self.X.shape[0]
        if self.y.shape != (n,) or self.subjects.shape != (n,):
            raise DataError("X, y and subjects disagree on sample count")
        if self.X.shape[2] != len(self.feature_names):
            raise DataError(
                f"{self.X.shape[2]} feature columns but {len(self.feature_names)} names"
            )

    @property
    def n_samples(self) -> int:
        return self.X.shape[0]

    @property
    def seq_len(self) -> int:
        return self.X.shape[1]

    @property
    def n_features(self) -> int:
        return self.X.shape[2]

    def subject_ids(self) -> list[str]:
        return sorted(set(self.subjects.tolist()))

    def select(self, mask_or_idx) -> "SequenceDataset":
        """Row subset, preserving order."""
        return SequenceDataset(
            X=self.X[mask_or_idx],
            y=self.y[mask_or_idx],
            subjects=self.subjects[mask_or_idx],
            feature_names=self.feature_names,
            norm_stats=self.norm_stats,
        )

    def subset_features(self, feature_set) -> "SequenceDataset":
        """New dataset keeping only the given feature columns.

        Columns are emitted in their original relative order regardless
        of the order indices are supplied in.
        """
        idx = sorted(set(int(i) for i in feature_set))
        if not idx:
            raise ConfigurationError("feature subset must be non-empty")
        if idx[0] < 0 or idx[-1] >= self.n_features:
            raise ConfigurationError(
                f"feature indices {idx} out of range for F={self.n_features}"
            )
        return SequenceDataset(
            X=np.ascontiguousarray(self.X[:, :, idx]),
            y=self.y,
            subjects=self.subjects,
            feature_names=tuple(self.feature_names[i] for i in idx),
            norm_stats=None,
        )

    def fingerprint(self) -> str:
        """Content hash over shapes, names, subjects and raw values."""
        digest = hashlib.sha256()
        digest.update(repr(self.X.shape).encode())
        digest.update("\x1f".join(self.feature_names).encode())
        digest.update("\x1f".join(self.subjects.tolist()).encode())
        digest.update(np.ascontiguousarray(self.X, dtype=np.float64).tobytes())
        digest.update(np.ascontiguousarray(self.y, dtype=np.float64).tobytes())
        return digest.hexdigest()
