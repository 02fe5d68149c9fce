"""Fixed-length sliding windows, never crossing subject boundaries."""

from __future__ import annotations

import logging

import numpy as np

from ..validation import check_count
from .dataset import SequenceDataset
from .normalize import NormStats
from .records import RecordFrame

logger = logging.getLogger(__name__)


def window(
    frame: RecordFrame,
    seq_len: int,
    stride: int,
    norm_stats: NormStats | None = None,
) -> SequenceDataset:
    """Cut each subject's trace into windows of ``seq_len`` rows.

    A window's target is the target at its final row. Subjects shorter
    than ``seq_len`` contribute nothing and are logged.
    """
    seq_len = check_count(seq_len, "seq_len")
    stride = check_count(stride, "stride")

    xs: list[np.ndarray] = []
    ys: list[float] = []
    subs: list[str] = []
    for subject in frame.subject_ids():
        rows = frame.rows_for(subject)
        if rows.size < seq_len:
            logger.warning(
                "subject %s has %d row(s) < window length %d; skipped",
                subject, rows.size, seq_len,
            )
            continue
        values = frame.features[rows]
        targets = frame.targets[rows]
        for start in range(0, rows.size - seq_len + 1, stride):
            end = start + seq_len
            xs.append(values[start:end])
            ys.append(float(targets[end - 1]))
            subs.append(subject)

    n = len(xs)
    return SequenceDataset(
        X=np.array(xs, dtype=np.float64).reshape(n, seq_len, frame.n_features),
        y=np.array(ys, dtype=np.float64),
        subjects=np.array(subs, dtype=object),
        feature_names=frame.feature_names,
        norm_stats=norm_stats,
    )
