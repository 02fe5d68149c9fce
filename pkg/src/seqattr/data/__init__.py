"""Dataset ingestion, normalization, windowing, splits and synthesis."""

from .dataset import SequenceDataset
from .records import RecordFrame
from .csvio import CsvSchema, export_records_csv, load_csv
from .normalize import NormStats, subject_normalize
from .windowing import window
from .splits import loocv_splits
from .synthetic import SynthConfig, synth_generate, synth_records

__all__ = [
    "CsvSchema",
    "NormStats",
    "RecordFrame",
    "SequenceDataset",
    "SynthConfig",
    "export_records_csv",
    "load_csv",
    "loocv_splits",
    "subject_normalize",
    "synth_generate",
    "synth_records",
    "window",
]
