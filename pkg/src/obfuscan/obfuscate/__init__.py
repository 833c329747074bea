"""Obfuscation configs and semantics-preserving transforms."""

from __future__ import annotations

from .config import (
    TECHNIQUE_NAMES,
    TECHNIQUES,
    InvalidMode,
    ObfuscationConfig,
    TransformParams,
    enumerate_configs,
)
from .transforms import (
    APPLY_ORDER,
    TransformError,
    apply,
    make_opaque_predicate,
    tf_compact,
    tf_dead_code,
    tf_debug_protection,
    tf_flatten,
    tf_self_defending,
    tf_simplify,
    tf_split_strings,
    tf_string_array,
)

__all__ = [
    "APPLY_ORDER",
    "TECHNIQUES",
    "TECHNIQUE_NAMES",
    "InvalidMode",
    "ObfuscationConfig",
    "TransformError",
    "TransformParams",
    "apply",
    "enumerate_configs",
    "make_opaque_predicate",
    "tf_compact",
    "tf_dead_code",
    "tf_debug_protection",
    "tf_flatten",
    "tf_self_defending",
    "tf_simplify",
    "tf_split_strings",
    "tf_string_array",
]
