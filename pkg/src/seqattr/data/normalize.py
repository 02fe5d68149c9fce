"""Subject-wise z-scoring.

Statistics are fit on each subject's full trace, so nothing leaks
across subjects. Features that are constant within a subject (std
below 1e-12) are shifted to zero and flagged rather than divided.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import DataError
from .records import RecordFrame

logger = logging.getLogger(__name__)

_STD_FLOOR = 1e-12


@dataclass(frozen=True)
class NormStats:
    """Per-subject per-feature mean/std used for normalization.

    ``constant`` marks (subject, feature) pairs whose std fell below the
    floor; those columns were shifted to zero instead of scaled.
    """

    subjects: tuple[str, ...]
    mean: np.ndarray  # (S, F)
    std: np.ndarray  # (S, F), population (ddof=0)
    constant: np.ndarray  # (S, F) bool

    def for_subject(self, subject: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        s = self.subjects.index(subject)
        return self.mean[s], self.std[s], self.constant[s]


def subject_normalize(frame: RecordFrame) -> tuple[RecordFrame, NormStats]:
    """Z-score every feature within every subject (population std).

    Returns the normalized records plus the fitted stats. Each subject
    needs at least two rows; a single row has no scale.
    """
    subjects = frame.subject_ids()
    n_features = frame.n_features
    mean = np.empty((len(subjects), n_features))
    std = np.empty((len(subjects), n_features))
    constant = np.zeros((len(subjects), n_features), dtype=bool)
    normalized = np.array(frame.features, dtype=np.float64)

    for s, subject in enumerate(subjects):
        rows = frame.rows_for(subject)
        if rows.size < 2:
            raise DataError(f"subject {subject!r} has {rows.size} row(s); need >= 2 to normalize")
        values = frame.features[rows]
        mean[s] = values.mean(axis=0)
        std[s] = values.std(axis=0)
        constant[s] = std[s] < _STD_FLOOR
        scale = np.where(constant[s], 1.0, std[s])
        normalized[rows] = (values - mean[s]) / scale
        if constant[s].any():
            flagged = [frame.feature_names[j] for j in np.flatnonzero(constant[s])]
            logger.warning("subject %s: constant feature(s) %s shifted to 0", subject, flagged)

    stats = NormStats(subjects=tuple(subjects), mean=mean, std=std, constant=constant)
    out = RecordFrame(
        subjects=frame.subjects,
        timestamps=frame.timestamps,
        targets=frame.targets,
        features=normalized,
        feature_names=frame.feature_names,
    )
    return out, stats
