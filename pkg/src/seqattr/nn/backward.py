"""Reverse-mode gradients (backpropagation through time).

``backward`` differentiates an arbitrary linear functional of the batch
predictions (seeded by d(objective)/d(prediction) per sample), which
covers both training losses and per-sample prediction gradients for
path-integral attribution. A module-level invocation counter lets
callers assert that purely forward attribution never touches this code.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import DataError, NumericError
from .forward import ForwardCache, forward_batch, smooth_l1, smooth_l1_grad
from .weights import GradientBundle, LstmWeights

_backward_calls = 0


def backward_count() -> int:
    """Number of backward-pass invocations since the last reset."""
    return _backward_calls


def reset_backward_count() -> None:
    global _backward_calls
    _backward_calls = 0


def backward(
    weights: LstmWeights,
    cache: ForwardCache,
    d_prediction: np.ndarray,
    *,
    with_input_grad: bool = False,
) -> GradientBundle:
    """Exact reverse-mode gradients through head and LSTM recurrence.

    Parameters
    ----------
    weights : LstmWeights
    cache : ForwardCache from ``forward_batch(..., with_cache=True)``.
    d_prediction : (N,) seed gradient of the objective w.r.t. each
        prediction. Parameter gradients are summed over the batch, so a
        mean objective should fold 1/N into the seed.
    with_input_grad : also return d(objective)/dx of shape (N, T, F).
    """
    global _backward_calls
    _backward_calls += 1

    n, seq_len, hd = cache.h.shape
    dy = np.asarray(d_prediction, dtype=np.float64).reshape(n)

    # Head: prediction = w_out . tanh(W_pen h_T + b_pen) + b_out
    d_penult = dy[:, None] * weights.w_out
    d_w_out = cache.penult.T @ dy
    d_b_out = float(dy.sum())
    d_pre = d_penult * (1.0 - cache.penult**2)
    d_w_pen = d_pre.T @ cache.h[:, -1]
    d_b_pen = d_pre.sum(axis=0)
    dh_next = d_pre @ weights.w_pen

    d_w_ih = np.zeros_like(weights.w_ih)
    d_w_hh = np.zeros_like(weights.w_hh)
    d_b = np.zeros_like(weights.b_gates)
    dx = np.zeros_like(cache.x) if with_input_grad else None
    dc_next = np.zeros((n, hd))

    for t in range(seq_len - 1, -1, -1):
        i = cache.gate_i[:, t]
        f = cache.gate_f[:, t]
        g = cache.gate_g[:, t]
        o = cache.gate_o[:, t]
        tanh_c = cache.tanh_c[:, t]
        c_prev = cache.c[:, t - 1] if t > 0 else np.zeros((n, hd))
        h_prev = cache.h[:, t - 1] if t > 0 else np.zeros((n, hd))

        dh = dh_next
        dc = dc_next + dh * o * (1.0 - tanh_c**2)

        dz_i = dc * g * i * (1.0 - i)
        dz_f = dc * c_prev * f * (1.0 - f)
        dz_g = dc * i * (1.0 - g**2)
        dz_o = dh * tanh_c * o * (1.0 - o)
        dz = np.concatenate([dz_i, dz_f, dz_g, dz_o], axis=1)

        d_w_ih += dz.T @ cache.x[:, t]
        d_w_hh += dz.T @ h_prev
        d_b += dz.sum(axis=0)
        if with_input_grad:
            dx[:, t] = dz @ weights.w_ih

        dh_next = dz @ weights.w_hh
        dc_next = dc * f

    grads = GradientBundle(
        w_ih=d_w_ih, w_hh=d_w_hh, b_gates=d_b,
        w_pen=d_w_pen, b_pen=d_b_pen, w_out=d_w_out, b_out=d_b_out,
        x_grad=dx,
    )
    for name in ("w_ih", "w_hh", "b_gates", "w_pen", "b_pen", "w_out"):
        if not np.all(np.isfinite(getattr(grads, name))):
            raise NumericError(f"non-finite gradient in {name}")
    if not np.isfinite(grads.b_out):
        raise NumericError("non-finite gradient in b_out")
    if with_input_grad and not np.all(np.isfinite(dx)):
        raise NumericError("non-finite gradient in x_grad")
    return grads


def loss_and_gradients(
    weights: LstmWeights, X, y, beta: float = 1.0, *, with_input_grad: bool = False
) -> tuple[float, GradientBundle]:
    """Mean smooth-L1 loss over a batch and its parameter gradients."""
    X = np.asarray(X, dtype=np.float64)
    if X.shape[0] == 0:
        raise DataError("empty batch")
    _, _, pred, cache = forward_batch(weights, X, with_cache=True)
    y = np.asarray(y, dtype=np.float64).reshape(pred.shape)
    loss = float(np.mean(smooth_l1(pred, y, beta)))
    d_pred = smooth_l1_grad(pred, y, beta) / pred.shape[0]
    grads = backward(weights, cache, d_pred, with_input_grad=with_input_grad)
    return loss, grads


def prediction_input_gradients(weights: LstmWeights, X) -> np.ndarray:
    """d(prediction)/dx for each sample independently, shape (N, T, F)."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 2:
        X = X[np.newaxis]
    _, _, _, cache = forward_batch(weights, X, with_cache=True)
    grads = backward(weights, cache, np.ones(X.shape[0]), with_input_grad=True)
    return grads.x_grad
