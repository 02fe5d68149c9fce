"""Leave-one-subject-out cross-validation splits."""

from __future__ import annotations

import numpy as np

from ..exceptions import DataError
from .dataset import SequenceDataset


def loocv_splits(dataset: SequenceDataset):
    """One (train, test) fold per subject, ordered by subject id.

    The test fold holds exactly the held-out subject's windows; train
    and test partition the dataset in every fold.
    """
    subjects = dataset.subject_ids()
    if len(subjects) < 2:
        raise DataError(f"leave-one-subject-out needs >= 2 subjects, got {len(subjects)}")
    for held_out in subjects:
        test_mask = dataset.subjects == held_out
        yield held_out, dataset.select(~test_mask), dataset.select(test_mask)
