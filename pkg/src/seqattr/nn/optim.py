"""AdamW with decoupled weight decay.

Per step, with bias-corrected moments m_hat and v_hat:

    p <- p - lr * m_hat / (sqrt(v_hat) + eps) - lr * weight_decay * p

The decay term multiplies the parameter directly and never enters the
moment estimates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigurationError, NumericError
from .weights import GradientBundle, LstmWeights, PARAM_FIELDS, param_arrays


@dataclass
class AdamWState:
    """First/second moment estimates per parameter tensor, plus step count."""

    m: dict[str, np.ndarray]
    v: dict[str, np.ndarray]
    step: int = 0

    @classmethod
    def zeros(cls, weights: LstmWeights) -> "AdamWState":
        params = param_arrays(weights)
        return cls(
            m={k: np.zeros_like(a) for k, a in params.items()},
            v={k: np.zeros_like(a) for k, a in params.items()},
        )


def adamw_step(
    weights: LstmWeights,
    grads: GradientBundle,
    state: AdamWState,
    *,
    learning_rate: float,
    beta1: float = 0.9,
    beta2: float = 0.999,
    eps: float = 1e-8,
    weight_decay: float = 0.01,
) -> tuple[LstmWeights, AdamWState]:
    """One optimizer step; returns a fresh weights struct and state."""
    if learning_rate <= 0:
        raise ConfigurationError(f"learning_rate must be > 0, got {learning_rate!r}")
    if not (0 <= beta1 < 1 and 0 <= beta2 < 1):
        raise ConfigurationError("beta1 and beta2 must lie in [0, 1)")
    grads.check_against(weights)

    t = state.step + 1
    bc1 = 1.0 - beta1**t
    bc2 = 1.0 - beta2**t
    params = param_arrays(weights)
    grad_vals = param_arrays(grads)

    new_params: dict[str, np.ndarray] = {}
    new_m: dict[str, np.ndarray] = {}
    new_v: dict[str, np.ndarray] = {}
    for name, _ in PARAM_FIELDS:
        g = grad_vals[name]
        m = beta1 * state.m[name] + (1.0 - beta1) * g
        v = beta2 * state.v[name] + (1.0 - beta2) * g * g
        update = (m / bc1) / (np.sqrt(v / bc2) + eps)
        p = params[name] - learning_rate * update - learning_rate * weight_decay * params[name]
        if not np.all(np.isfinite(p)):
            raise NumericError(f"non-finite parameter {name} after optimizer step")
        new_params[name] = p
        new_m[name] = m
        new_v[name] = v

    new_weights = LstmWeights(
        w_ih=new_params["w_ih"],
        w_hh=new_params["w_hh"],
        b_gates=new_params["b_gates"],
        w_pen=new_params["w_pen"],
        b_pen=new_params["b_pen"],
        w_out=new_params["w_out"],
        b_out=float(new_params["b_out"]),
    )
    return new_weights, AdamWState(m=new_m, v=new_v, step=t)
