"""Inflectional loci of scrolls over curves, computed exactly."""

from ._core import (
    DEFAULT_SEED,
    classify,
    cross_validate,
    curve_wronskian,
    determinant_divisor,
    double_point_check,
    inflectional_class,
    inflectional_degree,
    is_inflected,
    rank_profile,
    rank_scan,
    segre_term,
    wronskian,
)

__all__ = [
    "DEFAULT_SEED",
    "classify",
    "cross_validate",
    "curve_wronskian",
    "determinant_divisor",
    "double_point_check",
    "inflectional_class",
    "inflectional_degree",
    "is_inflected",
    "rank_profile",
    "rank_scan",
    "segre_term",
    "wronskian",
]
