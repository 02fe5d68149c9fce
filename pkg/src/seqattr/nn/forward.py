"""Forward pass of the LSTM regressor, with caches for reverse mode.

Recurrence, with gate order (i, f, g, o) and h_0 = c_0 = 0:

    z_t = W_ih x_t + W_hh h_{t-1} + b
    i, f, o = sigmoid(z_i), sigmoid(z_f), sigmoid(z_o);  g = tanh(z_g)
    c_t = f * c_{t-1} + i * g
    h_t = o * tanh(c_t)

Head: penult = tanh(W_pen h_T + b_pen), prediction = w_out . penult + b_out.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigurationError
from ..validation import check_sequences
from .weights import LstmWeights


def sigmoid(z: np.ndarray) -> np.ndarray:
    # Split by sign to avoid overflow in exp for large |z|.
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class ForwardCache:
    """Intermediates needed by backpropagation through time.

    All arrays are batched: x (N, T, F), gates i/f/g/o and c/tanh_c/h
    (N, T, H), penult_pre and penult (N, P), prediction (N,).
    """

    x: np.ndarray
    gate_i: np.ndarray
    gate_f: np.ndarray
    gate_g: np.ndarray
    gate_o: np.ndarray
    c: np.ndarray
    tanh_c: np.ndarray
    h: np.ndarray
    penult_pre: np.ndarray
    penult: np.ndarray
    prediction: np.ndarray


def forward_batch(
    weights: LstmWeights, X, *, with_cache: bool = False
) -> tuple[np.ndarray, np.ndarray, np.ndarray, ForwardCache | None]:
    """Run the network on a batch of sequences.

    Parameters
    ----------
    weights : LstmWeights
    X : array-like (N, T, F)
    with_cache : keep gate activations for a subsequent backward pass.

    Returns
    -------
    (hidden, penult, prediction, cache) where hidden is (N, T, H),
    penult (N, P), prediction (N,); cache is None unless requested.
    """
    X = check_sequences(X, weights.input_dim)
    n, seq_len, _ = X.shape
    hd = weights.hidden_dim

    h_t = np.zeros((n, hd))
    c_t = np.zeros((n, hd))
    hidden = np.empty((n, seq_len, hd))
    if with_cache:
        gi = np.empty((n, seq_len, hd))
        gf = np.empty((n, seq_len, hd))
        gg = np.empty((n, seq_len, hd))
        go = np.empty((n, seq_len, hd))
        cs = np.empty((n, seq_len, hd))
        tc = np.empty((n, seq_len, hd))

    w_ih_t = weights.w_ih.T
    w_hh_t = weights.w_hh.T
    for t in range(seq_len):
        z = X[:, t] @ w_ih_t + h_t @ w_hh_t + weights.b_gates
        i = sigmoid(z[:, :hd])
        f = sigmoid(z[:, hd : 2 * hd])
        g = np.tanh(z[:, 2 * hd : 3 * hd])
        o = sigmoid(z[:, 3 * hd :])
        c_t = f * c_t + i * g
        tanh_c = np.tanh(c_t)
        h_t = o * tanh_c
        hidden[:, t] = h_t
        if with_cache:
            gi[:, t] = i
            gf[:, t] = f
            gg[:, t] = g
            go[:, t] = o
            cs[:, t] = c_t
            tc[:, t] = tanh_c

    penult_pre = h_t @ weights.w_pen.T + weights.b_pen
    penult = np.tanh(penult_pre)
    prediction = penult @ weights.w_out + weights.b_out

    cache = None
    if with_cache:
        cache = ForwardCache(
            x=X, gate_i=gi, gate_f=gf, gate_g=gg, gate_o=go,
            c=cs, tanh_c=tc, h=hidden,
            penult_pre=penult_pre, penult=penult, prediction=prediction,
        )
    return hidden, penult, prediction, cache


def lstm_forward(weights: LstmWeights, x) -> tuple[np.ndarray, np.ndarray, float]:
    """Single-sequence forward pass.

    Returns (hidden (T, H), penult (P,), prediction scalar).
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2:
        raise ConfigurationError(f"expected a (T, F) sequence, got ndim={x.ndim}")
    hidden, penult, prediction, _ = forward_batch(weights, x[np.newaxis])
    return hidden[0], penult[0], float(prediction[0])


def predict_batch(weights: LstmWeights, X) -> np.ndarray:
    """Predictions only, shape (N,)."""
    return forward_batch(weights, X)[2]


def smooth_l1(pred, target, beta: float = 1.0):
    """Smooth L1 loss: 0.5*d^2/beta for |d| < beta, |d| - 0.5*beta otherwise.

    Continuous at |d| = beta (both branches give 0.5*beta). Works
    elementwise on arrays; scalars in, scalar out.
    """
    if beta <= 0:
        raise ConfigurationError(f"beta must be > 0, got {beta!r}")
    d = np.asarray(pred, dtype=np.float64) - np.asarray(target, dtype=np.float64)
    ad = np.abs(d)
    out = np.where(ad < beta, 0.5 * d * d / beta, ad - 0.5 * beta)
    return float(out) if out.ndim == 0 else out


def smooth_l1_grad(pred, target, beta: float = 1.0):
    """d(smooth_l1)/d(pred): d/beta inside the quadratic zone, sign(d) outside."""
    if beta <= 0:
        raise ConfigurationError(f"beta must be > 0, got {beta!r}")
    d = np.asarray(pred, dtype=np.float64) - np.asarray(target, dtype=np.float64)
    return np.where(np.abs(d) < beta, d / beta, np.sign(d))
