"""Attribution methods behind one common interface."""

from .base import AttributionConfig, BaseAttributor
from .deepactif import (
    ActivationTrace,
    DeepActif,
    capture_activations,
    deepactif,
    feature_projection,
    inv_aggregate,
    map_to_features,
)
from .integrated_gradients import (
    IntegratedGradientsAttributor,
    ig_feature_scores,
    integrated_gradients,
    make_baseline,
)
from .kernel_shap import (
    KernelShapAttributor,
    exact_shapley,
    kernel_shap,
    shap_feature_scores,
    shapley_kernel,
)
from .perturbation import (
    AblationAttributor,
    ShuffleAttributor,
    ablation_importance,
    shuffle_importance,
)
from .random_control import RandomAttributor, random_scores
from .registry import METHOD_TAGS, build_attributor, method_family
from .scores import FeatureScores, rank_features

__all__ = [
    "ActivationTrace",
    "AttributionConfig",
    "AblationAttributor",
    "BaseAttributor",
    "DeepActif",
    "FeatureScores",
    "IntegratedGradientsAttributor",
    "KernelShapAttributor",
    "METHOD_TAGS",
    "RandomAttributor",
    "ShuffleAttributor",
    "ablation_importance",
    "build_attributor",
    "capture_activations",
    "deepactif",
    "exact_shapley",
    "feature_projection",
    "ig_feature_scores",
    "integrated_gradients",
    "inv_aggregate",
    "kernel_shap",
    "make_baseline",
    "map_to_features",
    "method_family",
    "random_scores",
    "rank_features",
    "shap_feature_scores",
    "shapley_kernel",
    "shuffle_importance",
]
