"""Euclidean Clifford algebra kernel.

Multivectors over an n-dimensional real space are dense arrays of 2^n
coefficients indexed by blade bitmask.  The package provides the exterior
product, the euclidean scalar product for arbitrary SPD Gram matrices,
both contracted products, the Clifford product with a precomputed
blade-pair table, a brute-force tensor oracle, and an expression CLI
(``eucliff``).
"""

from ._backend import BACKEND
from .blades import (
    DEFAULT_TOLERANCE,
    MAX_DIM,
    Multivector,
    add,
    blade_name,
    canonical_reorder,
    conjugate,
    format_multivector,
    format_number,
    grade_involution,
    grade_of_mask,
    grades_array,
    isclose,
    k_part,
    pseudoscalar,
    reversion,
    scale,
    sorted_masks,
)
from .clifford import (
    TABLE_MAX_DIM,
    CayleyTable,
    build_cayley_table,
    cayley_table_for,
    clear_caches,
    geometric_product,
    geometric_product_direct,
    geometric_product_orthonormal,
    geometric_product_table,
    left_contraction,
    right_contraction,
    scalar_part_product,
    vector_left_contract,
)
from .errors import AlgebraError, DimensionMismatch, MetricError
from .exterior import blade_wedge_sign, outermorphism, wedge, wedge_all
from .metric import (
    Basis,
    EuclideanMetric,
    b_metric,
    basis_from_json,
    basis_to_json,
    cholesky_lower,
    expand_in_basis,
    identity_metric,
    metric_from_gram,
    metric_from_json,
    metric_to_json,
    reciprocal_basis,
    scalar_product,
    scalar_product_via_frame,
    standard_basis,
)
from .tensors import (
    DenseTensor,
    antisymmetrize,
    generalized_permutation_symbol,
    is_antisymmetric,
    multivector_to_tensor,
    multivector_to_tensors,
    permutation_symbol,
    qa_wedge,
    tensor_isclose,
    tensor_product,
    tensor_to_multivector,
    wedge_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BACKEND",
    "Basis",
    "CayleyTable",
    "DEFAULT_TOLERANCE",
    "DenseTensor",
    "DimensionMismatch",
    "EuclideanMetric",
    "MAX_DIM",
    "MetricError",
    "Multivector",
    "TABLE_MAX_DIM",
    "add",
    "antisymmetrize",
    "b_metric",
    "basis_from_json",
    "basis_to_json",
    "blade_name",
    "blade_wedge_sign",
    "build_cayley_table",
    "canonical_reorder",
    "cayley_table_for",
    "clear_caches",
    "cholesky_lower",
    "conjugate",
    "expand_in_basis",
    "format_multivector",
    "format_number",
    "generalized_permutation_symbol",
    "geometric_product",
    "geometric_product_direct",
    "geometric_product_orthonormal",
    "geometric_product_table",
    "grade_involution",
    "grade_of_mask",
    "grades_array",
    "identity_metric",
    "is_antisymmetric",
    "isclose",
    "k_part",
    "left_contraction",
    "metric_from_gram",
    "metric_from_json",
    "metric_to_json",
    "multivector_to_tensor",
    "multivector_to_tensors",
    "outermorphism",
    "permutation_symbol",
    "pseudoscalar",
    "qa_wedge",
    "reciprocal_basis",
    "reversion",
    "right_contraction",
    "scalar_part_product",
    "scalar_product",
    "scalar_product_via_frame",
    "scale",
    "sorted_masks",
    "standard_basis",
    "tensor_isclose",
    "tensor_product",
    "tensor_to_multivector",
    "vector_left_contract",
    "wedge",
    "wedge_all",
    "wedge_oracle",
]
