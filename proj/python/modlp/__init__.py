"""Modular disjunctive logic programs under stable-model semantics."""

try:
    from ._modlp import (
        Module,
        ModlpError,
        equivalent,
        equivalent_in_context,
        qbf_encode,
        qbf_eval,
    )
except ImportError:  # extension built out-of-tree (plain CMake builds)
    from _modlp import (
        Module,
        ModlpError,
        equivalent,
        equivalent_in_context,
        qbf_encode,
        qbf_eval,
    )

__all__ = [
    "Module",
    "ModlpError",
    "equivalent",
    "equivalent_in_context",
    "qbf_encode",
    "qbf_eval",
]
