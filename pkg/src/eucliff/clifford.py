"""Contractions and the Clifford (geometric) product for euclidean metrics.

The product is defined axiomatically: scalars multiply by scaling, a
vector acts as contraction plus wedge, and longer blades follow by
associativity.  Three evaluation paths implement this:

- a precomputed blade-pair table (default up to ``TABLE_MAX_DIM``),
- a direct per-pair recursion with memoized blade columns,
- a closed-form fast path for the identity metric.

All three produce bitwise-identical coefficients for the same inputs;
the recursion and the table share one column construction, and the fast
path adds exactly the nonzero entries an identity-metric column holds.
However the product is evaluated, a grade-1 left operand is dispatched to
its defining decomposition, contraction plus wedge, so that identity is
exact by construction.
"""

from __future__ import annotations

import threading

import numpy as np

from . import _backend
from ._kernels import lcontract_column, rcontract_column
from .blades import Multivector, grades_array, reversion
from .errors import AlgebraError, DimensionMismatch
from .exterior import wedge
from .metric import EuclideanMetric

#: Largest dimension for which a dense blade-pair table is built
#: ((2^8)^3 doubles is 134 MB; one dimension higher would be 8x that).
TABLE_MAX_DIM = 8

_REGISTRY_LOCK = threading.Lock()
_TABLE_REGISTRY: dict[str, "CayleyTable"] = {}
_GP_MEMOS: dict[str, dict] = {}
_LCONTRACT_MEMOS: dict[str, dict] = {}
_RCONTRACT_MEMOS: dict[str, dict] = {}


def clear_caches() -> None:
    """Drop all memoized tables and blade columns (frees memory; safe at
    any time, the caches refill on demand)."""
    with _REGISTRY_LOCK:
        _TABLE_REGISTRY.clear()
        _GP_MEMOS.clear()
        _LCONTRACT_MEMOS.clear()
        _RCONTRACT_MEMOS.clear()


def _memo_for(registry: dict[str, dict], metric: EuclideanMetric) -> dict:
    memo = registry.get(metric.metric_id)
    if memo is None:
        # setdefault keeps a single dict per key even under races
        memo = registry.setdefault(metric.metric_id, {})
    return memo


def _check_product_args(x: Multivector, y: Multivector, metric: EuclideanMetric) -> None:
    x._require_same_dim(y)
    if x.dim != metric.dim:
        raise DimensionMismatch(x.dim, metric.dim)


class CayleyTable:
    """Dense blade-pair product table for one (dim, metric) pair.

    ``table[a, b]`` holds the full coefficient expansion of the product of
    canonical blades a and b.  Rebuilding from the same gram matrix
    reproduces the table bit for bit.
    """

    __slots__ = ("_dim", "_metric_id", "_table")

    def __init__(self, dim: int, metric_id: str, table: np.ndarray):
        table.flags.writeable = False
        self._dim = dim
        self._metric_id = metric_id
        self._table = table

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def metric_id(self) -> str:
        return self._metric_id

    @property
    def table(self) -> np.ndarray:
        """Read-only (2^dim, 2^dim, 2^dim) coefficient tensor."""
        return self._table

    def entry(self, a: int, b: int) -> Multivector:
        """Product of canonical blades a and b as a multivector."""
        size = 1 << self._dim
        if not (0 <= a < size and 0 <= b < size):
            raise AlgebraError(f"blade masks must lie in [0, {size}), got {a}, {b}")
        return Multivector(self._dim, self._table[a, b])

    def __repr__(self):
        return f"CayleyTable(dim={self._dim}, id={self._metric_id[:12]})"


def build_cayley_table(dim: int, metric: EuclideanMetric) -> CayleyTable:
    """Build the dense blade-pair table from scratch (no registry)."""
    if dim != metric.dim:
        raise DimensionMismatch(dim, metric.dim)
    if dim > TABLE_MAX_DIM:
        raise AlgebraError(
            f"dense product table is capped at dimension {TABLE_MAX_DIM}, got {dim}"
        )
    return CayleyTable(dim, metric.metric_id, _backend.build_table(metric.gram))


def cayley_table_for(metric: EuclideanMetric) -> CayleyTable:
    """Registry lookup: build on first use, then share; readers never see
    a partially built table."""
    table = _TABLE_REGISTRY.get(metric.metric_id)
    if table is None:
        with _REGISTRY_LOCK:
            table = _TABLE_REGISTRY.get(metric.metric_id)
            if table is None:
                table = build_cayley_table(metric.dim, metric)
                _TABLE_REGISTRY[metric.metric_id] = table
    return table


# -- contractions --------------------------------------------------------


def vector_left_contract(v: Multivector, blade: int, metric: EuclideanMetric) -> Multivector:
    """Left contraction of a grade-1 multivector into one canonical blade,
    by the alternating-sign slot formula (independent of the general
    recursion; used to cross-check it)."""
    if v.dim != metric.dim:
        raise DimensionMismatch(v.dim, metric.dim)
    if not v.is_homogeneous(1):
        raise AlgebraError("first argument must be homogeneous of grade 1")
    if not 0 <= blade < (1 << v.dim):
        raise AlgebraError(f"blade mask {blade} out of range for dimension {v.dim}")
    components = v.vector_components()
    out = np.zeros(1 << v.dim)
    sign = 1.0
    for j in range(blade.bit_length()):
        if blade >> j & 1:
            out[blade ^ (1 << j)] += sign * float(components @ metric.gram[:, j])
            sign = -sign
    return Multivector._wrap(v.dim, out)


def left_contraction(x: Multivector, y: Multivector, metric: EuclideanMetric) -> Multivector:
    """Left contracted product: x reaches into y.  Annihilates whenever the
    left grade exceeds the right."""
    _check_product_args(x, y, metric)
    memo = _memo_for(_LCONTRACT_MEMOS, metric)
    grades = grades_array(x.dim)
    out = np.zeros(1 << x.dim)
    for a in range(1 << x.dim):
        xa = x.coeffs[a]
        if xa == 0.0:
            continue
        for b in range(1 << x.dim):
            if grades[b] < grades[a]:
                continue
            yb = y.coeffs[b]
            if yb == 0.0:
                continue
            out += (xa * yb) * lcontract_column(a, b, metric.gram, memo)
    return Multivector._wrap(x.dim, out)


def right_contraction(x: Multivector, y: Multivector, metric: EuclideanMetric) -> Multivector:
    """Right contracted product: y reaches into x from the right.
    Annihilates whenever the right grade exceeds the left."""
    _check_product_args(x, y, metric)
    memo = _memo_for(_RCONTRACT_MEMOS, metric)
    grades = grades_array(x.dim)
    out = np.zeros(1 << x.dim)
    for a in range(1 << x.dim):
        xa = x.coeffs[a]
        if xa == 0.0:
            continue
        for b in range(1 << x.dim):
            if grades[b] > grades[a]:
                continue
            yb = y.coeffs[b]
            if yb == 0.0:
                continue
            out += (xa * yb) * rcontract_column(a, b, metric.gram, memo)
    return Multivector._wrap(x.dim, out)


# -- the Clifford product ------------------------------------------------


def geometric_product_table(x: Multivector, y: Multivector, metric: EuclideanMetric) -> Multivector:
    """Product through the (possibly registry-cached) blade-pair table."""
    _check_product_args(x, y, metric)
    table = cayley_table_for(metric)
    out = np.zeros(1 << x.dim)
    _backend.gp_table_into(x.coeffs, y.coeffs, table.table, out)
    return Multivector._wrap(x.dim, out)


def geometric_product_direct(x: Multivector, y: Multivector, metric: EuclideanMetric) -> Multivector:
    """Product by the per-pair blade recursion, no table.  Bitwise equal to
    the table path; works at any dimension."""
    _check_product_args(x, y, metric)
    memo = _memo_for(_GP_MEMOS, metric)
    out = np.zeros(1 << x.dim)
    for a in range(1 << x.dim):
        xa = x.coeffs[a]
        if xa == 0.0:
            continue
        for b in range(1 << x.dim):
            yb = y.coeffs[b]
            if yb == 0.0:
                continue
            out += (xa * yb) * _backend.blade_column(a, b, metric.gram, memo)
    return Multivector._wrap(x.dim, out)


def geometric_product_orthonormal(x: Multivector, y: Multivector) -> Multivector:
    """Identity-metric fast path: blade pairs collapse onto the XOR mask
    with the reorder sign."""
    x._require_same_dim(y)
    out = np.zeros(1 << x.dim)
    _backend.gp_orthonormal_into(x.coeffs, y.coeffs, out)
    return Multivector._wrap(x.dim, out)


def geometric_product(x: Multivector, y: Multivector, metric: EuclideanMetric) -> Multivector:
    """Clifford product of two multivectors under a euclidean metric.

    A grade-1 left operand is evaluated by its defining decomposition
    (contraction plus wedge); otherwise the identity metric takes the
    closed-form path, dimensions up to ``TABLE_MAX_DIM`` use the table,
    and larger dimensions fall back to the direct recursion.
    """
    _check_product_args(x, y, metric)
    if x.is_homogeneous(1):
        return left_contraction(x, y, metric) + wedge(x, y)
    if metric.is_identity:
        return geometric_product_orthonormal(x, y)
    if x.dim <= TABLE_MAX_DIM:
        return geometric_product_table(x, y, metric)
    return geometric_product_direct(x, y, metric)


def scalar_part_product(x: Multivector, y: Multivector, metric: EuclideanMetric) -> float:
    """Scalar part of rev(x) times y; agrees with the metric module's
    scalar product."""
    _check_product_args(x, y, metric)
    return geometric_product(reversion(x), y, metric).scalar_part()
