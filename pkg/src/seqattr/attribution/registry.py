"""Method-tag registry: tag -> attributor, family and variant metadata."""

from __future__ import annotations

from ..exceptions import ConfigurationError
from .base import AttributionConfig, BaseAttributor
from .deepactif import DeepActif
from .integrated_gradients import IntegratedGradientsAttributor
from .kernel_shap import KernelShapAttributor
from .perturbation import AblationAttributor, ShuffleAttributor
from .random_control import RandomAttributor

#: tag -> (family, variant); variant "-" for single-variant families.
METHOD_TAGS = {
    "deepactif_input": ("deepactif", "input"),
    "deepactif_lstm": ("deepactif", "lstm"),
    "deepactif_penultimate": ("deepactif", "penultimate"),
    "ablation": ("ablation", "-"),
    "shuffle": ("shuffle", "-"),
    "ig_zero": ("ig", "zero"),
    "ig_mean": ("ig", "mean"),
    "ig_random": ("ig", "random"),
    "kernel_shap": ("shap", "-"),
    "random": ("random", "-"),
}


def method_family(tag: str) -> tuple[str, str]:
    try:
        return METHOD_TAGS[tag]
    except KeyError:
        raise ConfigurationError(
            f"unknown method tag {tag!r}; valid tags: {', '.join(sorted(METHOD_TAGS))}"
        ) from None


def build_attributor(tag: str, config: AttributionConfig = AttributionConfig()) -> BaseAttributor:
    family, variant = method_family(tag)
    if family == "deepactif":
        return DeepActif(tap=variant, epsilon=config.epsilon)
    if family == "ablation":
        return AblationAttributor()
    if family == "shuffle":
        return ShuffleAttributor(repeats=config.shuffle_repeats, seed=config.seed)
    if family == "ig":
        return IntegratedGradientsAttributor(
            baseline=variant,
            steps=config.ig_steps,
            seed=config.seed,
            random_baseline_draws=config.random_baseline_draws,
        )
    if family == "shap":
        return KernelShapAttributor(n_coalitions=config.shap_coalitions, seed=config.seed)
    if family == "random":
        return RandomAttributor(seed=config.seed)
    raise ConfigurationError(f"no builder for family {family!r}")
