"""Exact cohomology of finite-dimensional Hopf bimodules."""

from ._core import (
    Algebra,
    InputError,
    ResourceError,
    algebra_from_json,
    cohomology,
    cup_table,
    cyclic_group_algebra,
    load_algebra,
    taft_algebra,
    verify,
)


def dims(algebra, theory="b", max_degree=2, **kwargs):
    """Per-degree cohomology dimensions."""
    return cohomology(algebra, theory, max_degree, **kwargs)["dims"]


__all__ = [
    "Algebra",
    "InputError",
    "ResourceError",
    "algebra_from_json",
    "cohomology",
    "cup_table",
    "cyclic_group_algebra",
    "dims",
    "load_algebra",
    "taft_algebra",
    "verify",
]
