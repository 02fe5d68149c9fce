"""seqattr: feature attribution for LSTM sequence regressors.

Activation-based feature scoring with an inverse-weighted aggregation
rule, gradient/perturbation/Shapley baselines, and a retrain-based
top-k fidelity benchmark with statistical testing and profiling.
"""

__version__ = "0.1.0"
