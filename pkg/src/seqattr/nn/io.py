"""Weight-file serialization.

Binary ``.npz`` documents: format version, dims (F, H, P), the gate
order tag and the raw float64 tensors in row-major order. Round-trips
are bit-exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..exceptions import ConfigurationError
from .weights import GATE_ORDER, LstmWeights

FORMAT_VERSION = 1


def save_weights(weights: LstmWeights, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savez(
        path,
        format_version=np.int64(FORMAT_VERSION),
        gate_order=np.bytes_(GATE_ORDER.encode()),
        dims=np.array([weights.input_dim, weights.hidden_dim, weights.penult_dim], dtype=np.int64),
        w_ih=weights.w_ih,
        w_hh=weights.w_hh,
        b_gates=weights.b_gates,
        w_pen=weights.w_pen,
        b_pen=weights.b_pen,
        w_out=weights.w_out,
        b_out=np.float64(weights.b_out),
    )


def load_weights(path) -> LstmWeights:
    with np.load(Path(path)) as data:
        version = int(data["format_version"])
        if version != FORMAT_VERSION:
            raise ConfigurationError(f"unsupported weight-file version {version}")
        gate_order = bytes(data["gate_order"].item()).decode()
        if gate_order != GATE_ORDER:
            raise ConfigurationError(f"unsupported gate order {gate_order!r}")
        weights = LstmWeights(
            w_ih=data["w_ih"],
            w_hh=data["w_hh"],
            b_gates=data["b_gates"],
            w_pen=data["w_pen"],
            b_pen=data["b_pen"],
            w_out=data["w_out"],
            b_out=float(data["b_out"]),
        )
        dims = tuple(int(v) for v in data["dims"])
    if dims != (weights.input_dim, weights.hidden_dim, weights.penult_dim):
        raise ConfigurationError(f"weight-file dims {dims} disagree with tensor shapes")
    return weights
