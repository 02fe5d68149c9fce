"""Parameter container for the LSTM regressor.

Gate blocks in ``w_ih``/``w_hh``/``b_gates`` are stacked in the fixed
order (input, forget, cell-candidate, output); serialized weight files
carry the tag "ifgo" so the convention travels with the data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigurationError, NumericError

GATE_ORDER = "ifgo"

#: (field name, shape template) for every trainable tensor, in a fixed order.
PARAM_FIELDS = (
    ("w_ih", ("4H", "F")),
    ("w_hh", ("4H", "H")),
    ("b_gates", ("4H",)),
    ("w_pen", ("P", "H")),
    ("b_pen", ("P",)),
    ("w_out", ("P",)),
    ("b_out", ()),
)


@dataclass(frozen=True)
class LstmWeights:
    """Weights of one LSTM layer, a tanh dense layer, and a linear output.

    Shapes (F input features, H hidden units, P penultimate units):
    w_ih (4H, F), w_hh (4H, H), b_gates (4H,), w_pen (P, H), b_pen (P,),
    w_out (P,), b_out scalar.
    """

    w_ih: np.ndarray
    w_hh: np.ndarray
    b_gates: np.ndarray
    w_pen: np.ndarray
    b_pen: np.ndarray
    w_out: np.ndarray
    b_out: float

    def __post_init__(self):
        four_h, f = np.shape(self.w_ih)
        if four_h % 4 != 0:
            raise ConfigurationError(f"w_ih first dim must be 4*H, got {four_h}")
        h = four_h // 4
        p = np.shape(self.w_pen)[0]
        expected = {
            "w_ih": (4 * h, f),
            "w_hh": (4 * h, h),
            "b_gates": (4 * h,),
            "w_pen": (p, h),
            "b_pen": (p,),
            "w_out": (p,),
        }
        for name, shape in expected.items():
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            if arr.shape != shape:
                raise ConfigurationError(
                    f"{name} has shape {arr.shape}, expected {shape} for F={f}, H={h}, P={p}"
                )
            if not np.all(np.isfinite(arr)):
                raise NumericError(f"{name} contains NaN or Inf")
            object.__setattr__(self, name, arr)
        b_out = float(self.b_out)
        if not np.isfinite(b_out):
            raise NumericError("b_out is not finite")
        object.__setattr__(self, "b_out", b_out)

    @property
    def input_dim(self) -> int:
        return self.w_ih.shape[1]

    @property
    def hidden_dim(self) -> int:
        return self.w_hh.shape[1]

    @property
    def penult_dim(self) -> int:
        return self.w_pen.shape[0]

    def gate_rows(self, gate: str) -> np.ndarray:
        """Rows of ``w_ih`` belonging to one gate ('i', 'f', 'g' or 'o')."""
        idx = GATE_ORDER.index(gate)
        h = self.hidden_dim
        return self.w_ih[idx * h : (idx + 1) * h]

    def copy(self) -> "LstmWeights":
        return LstmWeights(
            w_ih=self.w_ih.copy(),
            w_hh=self.w_hh.copy(),
            b_gates=self.b_gates.copy(),
            w_pen=self.w_pen.copy(),
            b_pen=self.b_pen.copy(),
            w_out=self.w_out.copy(),
            b_out=self.b_out,
        )


@dataclass(frozen=True)
class GradientBundle:
    """Gradients mirroring :class:`LstmWeights`, plus optional input gradients."""

    w_ih: np.ndarray
    w_hh: np.ndarray
    b_gates: np.ndarray
    w_pen: np.ndarray
    b_pen: np.ndarray
    w_out: np.ndarray
    b_out: float
    x_grad: np.ndarray | None = None

    def check_against(self, weights: LstmWeights) -> None:
        for name, _ in PARAM_FIELDS:
            got = np.shape(getattr(self, name))
            want = np.shape(getattr(weights, name))
            if got != want:
                raise ConfigurationError(f"gradient {name} has shape {got}, weights have {want}")


def param_arrays(bundle) -> dict[str, np.ndarray]:
    """The trainable tensors of a weights or gradient bundle, by field name."""
    return {name: np.asarray(getattr(bundle, name), dtype=np.float64) for name, _ in PARAM_FIELDS}


def init_weights(input_dim: int, hidden_dim: int, penult_dim: int, seed: int) -> LstmWeights:
    """Seeded uniform fan-in initialization: U(-1/sqrt(fan_in), +1/sqrt(fan_in))."""
    if min(input_dim, hidden_dim, penult_dim) < 1:
        raise ConfigurationError(
            f"dimensions must be >= 1, got F={input_dim}, H={hidden_dim}, P={penult_dim}"
        )
    rng = np.random.default_rng(seed)
    k_lstm = 1.0 / np.sqrt(hidden_dim)
    k_out = 1.0 / np.sqrt(penult_dim)
    u = rng.uniform
    return LstmWeights(
        w_ih=u(-k_lstm, k_lstm, size=(4 * hidden_dim, input_dim)),
        w_hh=u(-k_lstm, k_lstm, size=(4 * hidden_dim, hidden_dim)),
        b_gates=u(-k_lstm, k_lstm, size=4 * hidden_dim),
        w_pen=u(-k_lstm, k_lstm, size=(penult_dim, hidden_dim)),
        b_pen=u(-k_lstm, k_lstm, size=penult_dim),
        w_out=u(-k_out, k_out, size=penult_dim),
        b_out=float(u(-k_out, k_out)),
    )


def zeros_like_weights(weights: LstmWeights) -> GradientBundle:
    return GradientBundle(
        w_ih=np.zeros_like(weights.w_ih),
        w_hh=np.zeros_like(weights.w_hh),
        b_gates=np.zeros_like(weights.b_gates),
        w_pen=np.zeros_like(weights.w_pen),
        b_pen=np.zeros_like(weights.b_pen),
        w_out=np.zeros_like(weights.w_out),
        b_out=0.0,
    )
