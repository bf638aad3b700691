"""Frobenius normal forms of symmetric Toeplitz and Hankel matrices via
the components of their weighted graphs."""

from .core import (
    DenseMatrix,
    FNFError,
    HankelSpec,
    ToeplitzSpec,
    detect_structure,
    direct_sum,
    hankel_to_dense,
    to_dense,
    toeplitz_to_dense,
    validate_hankel_spec,
    validate_toeplitz_spec,
)
from .decompose import (
    Decomposition,
    apply_permutation,
    components,
    compress_hankel,
    compress_toeplitz,
    frobenius_normal_form,
    normalized_labeling,
)
from .graph import Component, WeightedGraph, adjacency_matrix, build_graph, build_hankel_graph, build_toeplitz_graph

__version__ = "0.1.0"

__all__ = [
    "Component",
    "Decomposition",
    "DenseMatrix",
    "FNFError",
    "HankelSpec",
    "ToeplitzSpec",
    "WeightedGraph",
    "adjacency_matrix",
    "apply_permutation",
    "build_graph",
    "build_hankel_graph",
    "build_toeplitz_graph",
    "components",
    "compress_hankel",
    "compress_toeplitz",
    "detect_structure",
    "direct_sum",
    "frobenius_normal_form",
    "hankel_to_dense",
    "normalized_labeling",
    "to_dense",
    "toeplitz_to_dense",
    "validate_hankel_spec",
    "validate_toeplitz_spec",
]
