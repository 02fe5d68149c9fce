"""Row-level representation of a multivariate time series with targets.

A :class:`RecordFrame` holds per-row data before windowing: one subject
id, timestamp, target and F feature values per row, with row order
preserved within each subject.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import DataError


@dataclass(frozen=True)
class RecordFrame:
    subjects: np.ndarray  # (R,) str
    timestamps: np.ndarray  # (R,) float
    targets: np.ndarray  # (R,) float
    features: np.ndarray  # (R, F) float
    feature_names: tuple[str, ...]

    def __post_init__(self):
        r = self.subjects.shape[0]
        if not (self.timestamps.shape == (r,) and self.targets.shape == (r,)):
            raise DataError("records: column lengths disagree")
        if self.features.shape != (r, len(self.feature_names)):
            raise DataError("records: feature matrix does not match feature names")

    @property
    def n_rows(self) -> int:
        return self.subjects.shape[0]

    @property
    def n_features(self) -> int:
        return len(self.feature_names)

    def subject_ids(self) -> list[str]:
        """Distinct subjects in sorted order."""
        return sorted(set(self.subjects.tolist()))

    def rows_for(self, subject: str) -> np.ndarray:
        """Row indices of one subject, in stored (chronological) order."""
        return np.flatnonzero(self.subjects == subject)
