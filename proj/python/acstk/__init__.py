"""Exact computations for almost complex structures on spheres."""

from ._core import (
    InvariantViolation,
    __version__,
    assoc_compare,
    bernoulli,
    cd_multiply,
    classify,
    l_polynomial,
    lemma,
    newton_polynomial,
    nijenhuis,
    probe_alternative,
    s_coefficient,
    series,
    sphere_point,
    verify_j,
)

__all__ = [
    "InvariantViolation",
    "assoc_compare",
    "bernoulli",
    "cd_multiply",
    "classify",
    "l_polynomial",
    "lemma",
    "newton_polynomial",
    "nijenhuis",
    "probe_alternative",
    "s_coefficient",
    "series",
    "sphere_point",
    "verify_j",
]
