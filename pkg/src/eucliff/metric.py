"""Euclidean metrics: Gram matrices, scalar products, bases and reciprocals.

A metric is a symmetric positive-definite Gram matrix over the standard
coordinate basis.  Scalar products of blades are Gram-submatrix
determinants, extended grade-orthogonally to full multivectors; an
independent orthonormal-frame path (Cholesky change of coordinates plus a
plain component sum) is provided as a cross-check.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import numbers

import numpy as np

from .blades import MAX_DIM, Multivector, k_part
from .errors import DimensionMismatch, MetricError
from .exterior import outermorphism, wedge_all

#: Absolute entrywise tolerance for Gram-matrix symmetry.
SYMMETRY_TOLERANCE = 1e-12

#: A Cholesky pivot at or below this value rejects the matrix.
PIVOT_TOLERANCE = 1e-12

#: Residual tolerance for basis/dual-form duality.
DUALITY_TOLERANCE = 1e-10

# (dim, grade) -> int array (m, grade) of ascending bit positions per blade.
_POSITIONS_CACHE: dict[tuple[int, int], np.ndarray] = {}

# Determinant batches switch from closed forms to LU at this grade.
_CLOSED_FORM_MAX = 4


def _as_square_matrix(data, what: str) -> np.ndarray:
    arr = np.array(data, dtype=np.float64, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise MetricError(f"{what} must be a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if not 1 <= n <= MAX_DIM:
        raise MetricError(f"{what} size must be in [1, {MAX_DIM}], got {n}")
    if not np.all(np.isfinite(arr)):
        raise MetricError(f"{what} entries must be finite")
    return arr


def cholesky_lower(gram: np.ndarray, pivot_tol: float = PIVOT_TOLERANCE) -> np.ndarray:
    """Lower-triangular Cholesky factor of an SPD matrix.

    Hand-rolled so a failure names the offending pivot: a pivot at or
    below ``pivot_tol`` raises MetricError carrying its index.
    """
    n = gram.shape[0]
    factor = np.zeros((n, n))
    for k in range(n):
        pivot = float(gram[k, k] - np.dot(factor[k, :k], factor[k, :k]))
        if pivot <= pivot_tol:
            raise MetricError(
                f"matrix is not positive definite: Cholesky pivot {k} is {pivot:.6g}"
            )
        factor[k, k] = math.sqrt(pivot)
        if k + 1 < n:
            factor[k + 1 :, k] = (
                gram[k + 1 :, k] - factor[k + 1 :, :k] @ factor[k, :k]
            ) / factor[k, k]
    return factor


def blade_positions(dim: int, k: int) -> np.ndarray:
    """(m, k) array: for each grade-k blade in ascending mask order, the
    ascending 0-based bit positions of its factors."""
    key = (dim, k)
    arr = _POSITIONS_CACHE.get(key)
    if arr is None:
        combos = list(itertools.combinations(range(dim), k))
        arr = np.array(combos, dtype=np.int64).reshape(len(combos), k)
        arr.flags.writeable = False
        _POSITIONS_CACHE[key] = arr
    return arr


def blade_masks_of_grade(dim: int, k: int) -> np.ndarray:
    """Masks of all grade-k blades in ascending order."""
    positions = blade_positions(dim, k)
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    return ((1 << positions).sum(axis=1)).astype(np.int64)


def _det_stack(a: np.ndarray) -> np.ndarray:
    """Determinants over the last two axes; closed forms through 4x4,
    LU with partial pivoting beyond."""
    k = a.shape[-1]
    if k == 0:
        return np.ones(a.shape[:-2])
    if k == 1:
        return a[..., 0, 0].copy()
    if k == 2:
        return a[..., 0, 0] * a[..., 1, 1] - a[..., 0, 1] * a[..., 1, 0]
    if k == 3:
        return (
            a[..., 0, 0] * (a[..., 1, 1] * a[..., 2, 2] - a[..., 1, 2] * a[..., 2, 1])
            - a[..., 0, 1] * (a[..., 1, 0] * a[..., 2, 2] - a[..., 1, 2] * a[..., 2, 0])
            + a[..., 0, 2] * (a[..., 1, 0] * a[..., 2, 1] - a[..., 1, 1] * a[..., 2, 0])
        )
    if k == _CLOSED_FORM_MAX:
        total = None
        cols = np.arange(k)
        for j in range(k):
            minor = _det_stack(a[..., 1:, :][..., :, cols != j])
            term = a[..., 0, j] * minor
            if j & 1:
                term = -term
            total = term if total is None else total + term
        return total
    return np.linalg.det(a)


class EuclideanMetric:
    """Validated SPD Gram matrix with its cached inverse and Cholesky factor.

    Immutable; every derived array is computed at construction (or cached
    idempotently), so instances are safe to share across threads.
    """

    __slots__ = ("_dim", "_gram", "_inverse", "_factor", "_metric_id", "_det_blocks")

    def __init__(self, gram):
        arr = _as_square_matrix(gram, "gram matrix")
        if float(np.max(np.abs(arr - arr.T))) > SYMMETRY_TOLERANCE:
            raise MetricError(
                f"gram matrix is not symmetric within {SYMMETRY_TOLERANCE:g}"
            )
        self._factor = cholesky_lower(arr)
        self._factor.flags.writeable = False
        self._inverse = np.linalg.inv(arr)
        self._inverse.flags.writeable = False
        arr.flags.writeable = False
        self._gram = arr
        self._dim = arr.shape[0]
        digest = hashlib.sha256()
        digest.update(repr(self._dim).encode())
        digest.update(arr.tobytes())
        self._metric_id = digest.hexdigest()
        self._det_blocks: dict[int, np.ndarray] = {}

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def gram(self) -> np.ndarray:
        return self._gram

    @property
    def inverse_gram(self) -> np.ndarray:
        return self._inverse

    @property
    def factor(self) -> np.ndarray:
        """Lower-triangular Cholesky factor L with gram = L Lᵀ."""
        return self._factor

    @property
    def metric_id(self) -> str:
        """Content hash of (dim, gram); equal gram matrices share it."""
        return self._metric_id

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self._gram, np.eye(self._dim)))

    def vector_product(self, v, w) -> float:
        """Bilinear form on coordinate vectors."""
        v = np.asarray(v, dtype=np.float64).reshape(-1)
        w = np.asarray(w, dtype=np.float64).reshape(-1)
        if v.size != self._dim or w.size != self._dim:
            raise MetricError(f"expected length-{self._dim} coordinate vectors")
        return float(v @ self._gram @ w)

    def _grade_det_block(self, k: int) -> np.ndarray:
        """(m, m) matrix of Gram-submatrix determinants between all pairs
        of grade-k blades, in ascending mask order on both axes."""
        block = self._det_blocks.get(k)
        if block is None:
            positions = blade_positions(self._dim, k)
            m = positions.shape[0]
            block = np.empty((m, m))
            # chunk the row axis: the gathered (rows, m, k, k) stack for
            # large n and mid grades would not fit in memory otherwise
            chunk = max(1, (1 << 22) // max(1, m * k * k))
            for start in range(0, m, chunk):
                rows = positions[start : start + chunk]
                gathered = self._gram[rows[:, None, :, None], positions[None, :, None, :]]
                block[start : start + chunk] = _det_stack(gathered)
            block.flags.writeable = False
            self._det_blocks[k] = block
        return block

    def __repr__(self):
        return f"EuclideanMetric(dim={self._dim}, id={self._metric_id[:12]})"


def metric_from_gram(gram) -> EuclideanMetric:
    """Validated metric from a Gram matrix (symmetry, then positive
    definiteness via Cholesky)."""
    return EuclideanMetric(gram)


def identity_metric(dim: int) -> EuclideanMetric:
    if not isinstance(dim, numbers.Integral) or not 1 <= dim <= MAX_DIM:
        raise MetricError(f"dimension must be an integer in [1, {MAX_DIM}], got {dim!r}")
    return EuclideanMetric(np.eye(int(dim)))


class Basis:
    """Ordered basis: column k of ``vectors`` is the k-th basis vector;
    ``dual_forms`` rows are the dual covectors (the matrix inverse)."""

    __slots__ = ("_dim", "_vectors", "_dual")

    def __init__(self, vectors):
        arr = _as_square_matrix(vectors, "basis matrix")
        try:
            dual = np.linalg.inv(arr)
        except np.linalg.LinAlgError:
            raise MetricError("basis matrix is singular") from None
        residual = float(np.max(np.abs(dual @ arr - np.eye(arr.shape[0]))))
        if not np.all(np.isfinite(dual)) or residual > DUALITY_TOLERANCE:
            raise MetricError(
                f"basis matrix is too ill-conditioned: duality residual {residual:.3g}"
            )
        dual.flags.writeable = False
        self._vectors = arr
        self._dual = dual
        self._dim = arr.shape[0]

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def vectors(self) -> np.ndarray:
        return self._vectors

    @property
    def dual_forms(self) -> np.ndarray:
        return self._dual

    def _check_index(self, k: int) -> int:
        if not 1 <= k <= self._dim:
            raise MetricError(f"basis index must be in [1, {self._dim}], got {k}")
        return k - 1

    def column(self, k: int) -> np.ndarray:
        """Coordinates of the k-th (1-based) basis vector."""
        return self._vectors[:, self._check_index(k)].copy()

    def vector(self, k: int) -> Multivector:
        """The k-th (1-based) basis vector as a grade-1 multivector."""
        return Multivector.from_vector(self._dim, self._vectors[:, self._check_index(k)])

    def __repr__(self):
        return f"Basis(dim={self._dim})"


def standard_basis(dim: int) -> Basis:
    if not isinstance(dim, numbers.Integral) or not 1 <= dim <= MAX_DIM:
        raise MetricError(f"dimension must be an integer in [1, {MAX_DIM}], got {dim!r}")
    return Basis(np.eye(int(dim)))


def b_metric(basis: Basis) -> EuclideanMetric:
    """Metric under which the given basis is orthonormal: the sum of
    squares of the dual forms."""
    return EuclideanMetric(basis.dual_forms.T @ basis.dual_forms)


def scalar_product(x: Multivector, y: Multivector, metric: EuclideanMetric) -> float:
    """Euclidean scalar product: grades pair off separately, and each pair
    of blades contributes its coefficient product times the determinant of
    the Gram submatrix of their factors."""
    x._require_same_dim(y)
    if x.dim != metric.dim:
        raise DimensionMismatch(x.dim, metric.dim)
    total = 0.0
    for k in range(x.dim + 1):
        masks = blade_masks_of_grade(x.dim, k)
        xk = x.coeffs[masks]
        if not np.any(xk):
            continue
        yk = y.coeffs[masks]
        if not np.any(yk):
            continue
        total += float(xk @ metric._grade_det_block(k) @ yk)
    return total


def scalar_product_via_frame(x: Multivector, y: Multivector, metric: EuclideanMetric) -> float:
    """Cross-check path: rotate both operands into the orthonormal frame
    given by the Cholesky factor, then sum matching components."""
    x._require_same_dim(y)
    if x.dim != metric.dim:
        raise DimensionMismatch(x.dim, metric.dim)
    xf = outermorphism(metric.factor, x)
    yf = outermorphism(metric.factor, y)
    return float(xf.coeffs @ yf.coeffs)


def reciprocal_basis(basis: Basis, metric: EuclideanMetric) -> Basis:
    """Unique basis pairing to Kronecker deltas with the given one under
    the metric; computed through the inverse of the basis Gram matrix."""
    if basis.dim != metric.dim:
        raise DimensionMismatch(basis.dim, metric.dim)
    basis_gram = basis.vectors.T @ metric.gram @ basis.vectors
    return Basis(basis.vectors @ np.linalg.inv(basis_gram))


def expand_in_basis(
    x: Multivector,
    basis: Basis,
    metric: EuclideanMetric,
    variant: str = "contravariant",
) -> Multivector:
    """Reconstruct x from its scalar products against basis blades.

    ``contravariant``: components against reciprocal-basis blades attach to
    direct-basis blades; ``covariant`` mirrors the roles.  Either way the
    result equals x (to tolerance).  The defining sum runs over all index
    tuples with a 1/k! weight; by antisymmetry this collapses to the
    ascending-combination sum computed here.
    """
    if basis.dim != x.dim or metric.dim != x.dim:
        raise DimensionMismatch(x.dim, basis.dim if basis.dim != x.dim else metric.dim)
    if variant not in ("contravariant", "covariant"):
        raise MetricError(f"unknown expansion variant {variant!r}")
    recip = reciprocal_basis(basis, metric)
    direct_vectors = [basis.vector(k) for k in range(1, x.dim + 1)]
    recip_vectors = [recip.vector(k) for k in range(1, x.dim + 1)]
    out = scalar_product(x, Multivector.scalar(x.dim, 1.0), metric) * Multivector.scalar(
        x.dim, 1.0
    )
    for k in range(1, x.dim + 1):
        for combo in itertools.combinations(range(x.dim), k):
            direct_blade = wedge_all(direct_vectors[j] for j in combo)
            recip_blade = wedge_all(recip_vectors[j] for j in combo)
            if variant == "contravariant":
                out = out + scalar_product(x, recip_blade, metric) * direct_blade
            else:
                out = out + scalar_product(x, direct_blade, metric) * recip_blade
    return out


# -- JSON forms (shared with the CLI) -----------------------------------


def metric_from_json(data, expect_dim: int | None = None) -> EuclideanMetric:
    """Metric from a parsed JSON value: the string "identity" (dimension
    taken from ``expect_dim``) or an object {"dim": n, "gram": [[...]]}."""
    if data == "identity":
        if expect_dim is None:
            raise MetricError('metric "identity" needs a dimension from context')
        return identity_metric(expect_dim)
    if not isinstance(data, dict):
        raise MetricError('metric JSON must be an object or the string "identity"')
    if "dim" not in data or "gram" not in data:
        raise MetricError('metric JSON object needs "dim" and "gram" keys')
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise MetricError('metric "dim" must be an integer')
    metric = metric_from_gram(data["gram"])
    if metric.dim != dim:
        raise MetricError(f'metric "dim" is {dim} but the gram matrix is {metric.dim}x{metric.dim}')
    if expect_dim is not None and metric.dim != expect_dim:
        raise MetricError(f"metric dimension {metric.dim} does not match context dimension {expect_dim}")
    return metric


def metric_to_json(metric: EuclideanMetric) -> dict:
    return {"dim": metric.dim, "gram": metric.gram.tolist()}


def basis_from_json(data, expect_dim: int | None = None) -> Basis:
    """Basis from a parsed JSON object {"dim": n, "vectors": [[...]]},
    where each inner list is one basis vector in coordinates."""
    if not isinstance(data, dict) or "dim" not in data or "vectors" not in data:
        raise MetricError('basis JSON must be an object with "dim" and "vectors" keys')
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise MetricError('basis "dim" must be an integer')
    vectors = np.array(data["vectors"], dtype=np.float64)
    if vectors.ndim != 2 or vectors.shape[0] != vectors.shape[1]:
        raise MetricError('basis "vectors" must be a square list of vectors')
    basis = Basis(vectors.T)
    if basis.dim != dim:
        raise MetricError(f'basis "dim" is {dim} but {basis.dim} vectors were given')
    if expect_dim is not None and basis.dim != expect_dim:
        raise MetricError(f"basis dimension {basis.dim} does not match context dimension {expect_dim}")
    return basis


def basis_to_json(basis: Basis) -> dict:
    return {"dim": basis.dim, "vectors": basis.vectors.T.tolist()}
