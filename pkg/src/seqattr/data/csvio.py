"""CSV ingestion and export.

Expected header: ``subject_id,timestamp,target,<feature names...>``,
UTF-8, rows sorted by (subject_id, timestamp). Every data cell must be
a finite number; anything else is rejected with the offending row
number (1-based, counting the header as row 1).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..exceptions import ParseError, SchemaError
from .records import RecordFrame


@dataclass(frozen=True)
class CsvSchema:
    subject_column: str = "subject_id"
    timestamp_column: str = "timestamp"
    target_column: str = "target"


def _parse_cell(text: str, column: str, row_number: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(
            f"row {row_number}: cannot parse {column}={text!r} as a number"
        ) from None
    if not math.isfinite(value):
        raise ParseError(f"row {row_number}: non-finite value {text!r} in {column}")
    return value


def load_csv(path, schema: CsvSchema = CsvSchema()) -> RecordFrame:
    """Parse a dataset CSV into a :class:`RecordFrame`.

    Row order is preserved per subject; feature columns are every
    header entry that is not one of the schema columns.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        header = [name.strip() for name in header]
        for required in (schema.subject_column, schema.timestamp_column, schema.target_column):
            if required not in header:
                raise SchemaError(f"{path}: missing required column {required!r}")
        reserved = {schema.subject_column, schema.timestamp_column, schema.target_column}
        feature_names = tuple(name for name in header if name not in reserved)
        if not feature_names:
            raise SchemaError(f"{path}: no feature columns found")
        col = {name: header.index(name) for name in header}

        subjects: list[str] = []
        timestamps: list[float] = []
        targets: list[float] = []
        features: list[list[float]] = []
        for row_number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"row {row_number}: expected {len(header)} cells, got {len(row)}"
                )
            subjects.append(row[col[schema.subject_column]].strip())
            timestamps.append(
                _parse_cell(row[col[schema.timestamp_column]], schema.timestamp_column, row_number)
            )
            targets.append(
                _parse_cell(row[col[schema.target_column]], schema.target_column, row_number)
            )
            features.append(
                [_parse_cell(row[col[name]], name, row_number) for name in feature_names]
            )

    return RecordFrame(
        subjects=np.array(subjects, dtype=object),
        timestamps=np.array(timestamps, dtype=np.float64),
        targets=np.array(targets, dtype=np.float64),
        features=np.array(features, dtype=np.float64).reshape(len(subjects), len(feature_names)),
        feature_names=feature_names,
    )


def export_records_csv(frame: RecordFrame, path, schema: CsvSchema = CsvSchema()) -> None:
    """Write records back out in the ingestion schema (stable formatting)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            [schema.subject_column, schema.timestamp_column, schema.target_column,
             *frame.feature_names]
        )
        for r in range(frame.n_rows):
            writer.writerow(
                [
                    frame.subjects[r],
                    repr(float(frame.timestamps[r])),
                    repr(float(frame.targets[r])),
                    *[repr(float(v)) for v in frame.features[r]],
                ]
            )
