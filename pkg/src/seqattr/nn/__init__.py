"""Minimal sequence-regression network: one LSTM layer plus a dense head.

Everything is plain numpy in float64. Forward passes expose activation
taps for attribution; reverse-mode gradients cover both parameters and
inputs so the same machinery serves training and path-integral
attribution.
"""

from .weights import GradientBundle, LstmWeights, init_weights
from .forward import ForwardCache, forward_batch, lstm_forward, smooth_l1
from .backward import backward, backward_count, loss_and_gradients, reset_backward_count
from .optim import AdamWState, adamw_step
from .train import TrainConfig, TrainResult, predict_mae, train_network
from .regressor import SequenceRegressor
from .io import load_weights, save_weights

__all__ = [
    "AdamWState",
    "ForwardCache",
    "GradientBundle",
    "LstmWeights",
    "SequenceRegressor",
    "TrainConfig",
    "TrainResult",
    "adamw_step",
    "backward",
    "backward_count",
    "forward_batch",
    "init_weights",
    "load_weights",
    "loss_and_gradients",
    "lstm_forward",
    "predict_mae",
    "reset_backward_count",
    "save_weights",
    "smooth_l1",
    "train_network",
]
