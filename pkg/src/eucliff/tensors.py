"""Brute-force dense tensors: the independent oracle for the wedge product.

Everything here works on raw rank-k component arrays and full k!-term
permutation sums, with no blade bookkeeping, so it is exponentially slower
than the bitmask kernels but directly mirrors the defining formulas.  Use
for cross-checks at small dimension and rank, not production work.

Two wedge conventions coexist and must not be mixed silently:

- ``wedge_oracle``: (p+q)!/(p!q!) times the antisymmetrized tensor
  product.  Matches the multivector wedge, under which a p-blade expands
  into components with a 1/p! weight.
- ``qa_wedge``: the bare antisymmetrized tensor product, the natural
  product on the quotient algebra.  Exposed for the convention-factor
  tests; feeding it into the 1/p! expansion breaks round-trips.
"""

from __future__ import annotations

import itertools
import math
import numbers

import numpy as np

from .blades import MAX_DIM, Multivector, k_part
from .errors import AlgebraError, DimensionMismatch

#: Relative tolerance used when validating antisymmetry of inputs.
ANTISYMMETRY_TOLERANCE = 1e-10


def _perm_parity(perm) -> int:
    """+1 or -1: parity of a permutation of 0..k-1 given as a tuple."""
    inversions = 0
    for r, value in enumerate(perm):
        for later in perm[r + 1 :]:
            if later < value:
                inversions += 1
    return -1 if inversions & 1 else 1


def permutation_symbol(indices) -> int:
    """Permutation symbol of order k on a tuple of 1-based indices: the
    parity of a permutation of (1, ..., k), else 0."""
    indices = tuple(int(i) for i in indices)
    if sorted(indices) != list(range(1, len(indices) + 1)):
        return 0
    return _perm_parity(tuple(i - 1 for i in indices))


def generalized_permutation_symbol(upper, lower) -> int:
    """Determinant of the Kronecker-delta matrix [delta(upper_r, lower_s)],
    expanded by permutations; tuples must have equal length."""
    upper = tuple(int(i) for i in upper)
    lower = tuple(int(i) for i in lower)
    if len(upper) != len(lower):
        raise AlgebraError("index tuples must have equal length")
    if any(i < 1 for i in upper + lower):
        raise AlgebraError("indices are 1-based and must be positive")
    total = 0
    for perm in itertools.permutations(range(len(upper))):
        if all(upper[r] == lower[perm[r]] for r in range(len(upper))):
            total += _perm_parity(perm)
    return total


class DenseTensor:
    """Immutable rank-k tensor over an n-dimensional space: n^k components
    in row-major order, public indices 1-based."""

    __slots__ = ("_dim", "_array")
    __hash__ = None

    def __init__(self, dim: int, rank: int, coeffs=None):
        if not isinstance(dim, numbers.Integral) or not 1 <= dim <= MAX_DIM:
            raise AlgebraError(f"dimension must be an integer in [1, {MAX_DIM}], got {dim!r}")
        if not isinstance(rank, numbers.Integral) or rank < 0:
            raise AlgebraError(f"rank must be a nonnegative integer, got {rank!r}")
        shape = (int(dim),) * int(rank)
        if coeffs is None:
            arr = np.zeros(shape)
        else:
            arr = np.array(coeffs, dtype=np.float64, copy=True).reshape(shape)
            if not np.all(np.isfinite(arr)):
                raise AlgebraError("tensor components must be finite")
        arr.flags.writeable = False
        self._dim = int(dim)
        self._array = arr

    @classmethod
    def _wrap(cls, dim: int, arr: np.ndarray) -> "DenseTensor":
        t = object.__new__(cls)
        t._dim = dim
        # rank-0 arithmetic can collapse to an array scalar, which has no flags
        arr = np.asarray(arr)
        arr.flags.writeable = False
        t._array = arr
        return t

    @classmethod
    def scalar(cls, dim: int, value: float) -> "DenseTensor":
        return cls(dim, 0, np.asarray(float(value)))

    @classmethod
    def vector(cls, dim: int, components) -> "DenseTensor":
        return cls(dim, 1, components)

    @classmethod
    def basis_vector(cls, dim: int, index: int) -> "DenseTensor":
        """The 1-based basis vector as a rank-1 tensor."""
        t = cls(dim, 1)
        arr = t._array.copy()
        if not 1 <= index <= dim:
            raise AlgebraError(f"vector index {index!r} out of range [1, {dim}]")
        arr[index - 1] = 1.0
        return cls._wrap(t._dim, arr)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def rank(self) -> int:
        return self._array.ndim

    @property
    def array(self) -> np.ndarray:
        """Read-only shaped component array."""
        return self._array

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only flat view, row-major, length dim^rank."""
        return self._array.reshape(-1)

    def get(self, *indices) -> float:
        """Component at a tuple of 1-based indices."""
        if len(indices) != self.rank:
            raise AlgebraError(f"expected {self.rank} indices, got {len(indices)}")
        for i in indices:
            if not 1 <= i <= self._dim:
                raise AlgebraError(f"index {i!r} out of range [1, {self._dim}]")
        return float(self._array[tuple(i - 1 for i in indices)])

    def _require_same_dim(self, other: "DenseTensor") -> None:
        if self._dim != other._dim:
            raise DimensionMismatch(self._dim, other._dim)

    def __add__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        self._require_same_dim(other)
        if self.rank != other.rank:
            raise AlgebraError(f"rank mismatch: {self.rank} != {other.rank}")
        return DenseTensor._wrap(self._dim, self._array + other._array)

    def __sub__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        self._require_same_dim(other)
        if self.rank != other.rank:
            raise AlgebraError(f"rank mismatch: {self.rank} != {other.rank}")
        return DenseTensor._wrap(self._dim, self._array - other._array)

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return DenseTensor._wrap(self._dim, self._array * float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return DenseTensor._wrap(self._dim, -self._array)

    def __eq__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return (
            self._dim == other._dim
            and self.rank == other.rank
            and bool(np.array_equal(self._array, other._array))
        )

    def __repr__(self):
        return f"DenseTensor(dim={self._dim}, rank={self.rank})"


def tensor_isclose(t: DenseTensor, u: DenseTensor, tol: float = ANTISYMMETRY_TOLERANCE) -> bool:
    """Approximate equality with the max-abs relative scaling used for
    multivectors."""
    t._require_same_dim(u)
    if t.rank != u.rank:
        return False
    scale = 1.0 + max(float(np.max(np.abs(t.array), initial=0.0)),
                      float(np.max(np.abs(u.array), initial=0.0)))
    diff = float(np.max(np.abs(t.array - u.array), initial=0.0))
    return diff <= tol * scale


def tensor_product(t: DenseTensor, u: DenseTensor) -> DenseTensor:
    """Tensor product: rank adds, component at (I, J) = t(I) * u(J)."""
    t._require_same_dim(u)
    return DenseTensor._wrap(t.dim, np.multiply.outer(t.array, u.array))


def antisymmetrize(t: DenseTensor) -> DenseTensor:
    """Average of all axis permutations weighted by parity; identity below
    rank 2, idempotent projector in general."""
    if t.rank <= 1:
        return t
    acc = np.zeros_like(t.array)
    for perm in itertools.permutations(range(t.rank)):
        if _perm_parity(perm) > 0:
            acc += np.transpose(t.array, perm)
        else:
            acc -= np.transpose(t.array, perm)
    return DenseTensor._wrap(t.dim, acc / math.factorial(t.rank))


def is_antisymmetric(t: DenseTensor, tol: float = ANTISYMMETRY_TOLERANCE) -> bool:
    return tensor_isclose(antisymmetrize(t), t, tol)


def _require_antisymmetric(t: DenseTensor, role: str) -> None:
    if not is_antisymmetric(t):
        raise AlgebraError(f"{role} operand is not antisymmetric")


def qa_wedge(t: DenseTensor, u: DenseTensor) -> DenseTensor:
    """Quotient-algebra wedge: plain antisymmetrized tensor product."""
    t._require_same_dim(u)
    _require_antisymmetric(t, "left")
    _require_antisymmetric(u, "right")
    return antisymmetrize(tensor_product(t, u))


def wedge_oracle(t: DenseTensor, u: DenseTensor) -> DenseTensor:
    """Wedge in the multivector convention: the quotient-algebra wedge
    scaled by the exact integer (p+q)!/(p!q!)."""
    return math.comb(t.rank + u.rank, t.rank) * qa_wedge(t, u)


def multivector_to_tensor(x: Multivector, k: int) -> DenseTensor:
    """Fully antisymmetric components of a grade-k multivector under the
    1/k! expansion convention: ascending-index components equal the blade
    coefficients, the rest follow by parity."""
    if not isinstance(k, numbers.Integral) or not 0 <= k <= x.dim:
        raise AlgebraError(f"grade {k!r} out of range [0, {x.dim}]")
    if not x.is_homogeneous(k):
        raise AlgebraError(f"multivector is not homogeneous of grade {k}")
    if k == 0:
        return DenseTensor.scalar(x.dim, x.scalar_part())
    arr = np.zeros((x.dim,) * int(k))
    for mask in range(1 << x.dim):
        c = float(x.coeffs[mask])
        if c == 0.0:
            continue
        positions = tuple(i for i in range(x.dim) if mask >> i & 1)
        for perm in itertools.permutations(range(k)):
            arr[tuple(positions[p] for p in perm)] = _perm_parity(perm) * c
    return DenseTensor._wrap(x.dim, arr)


def tensor_to_multivector(t: DenseTensor) -> Multivector:
    """Grade-(rank) multivector whose blade coefficients are the ascending
    components of an antisymmetric tensor."""
    _require_antisymmetric(t, "input")
    if t.rank == 0:
        return Multivector.scalar(t.dim, float(t.array))
    if t.rank > t.dim:
        # antisymmetry at rank > dim forces zero
        return Multivector.zero(t.dim)
    out = np.zeros(1 << t.dim)
    for positions in itertools.combinations(range(t.dim), t.rank):
        mask = 0
        for i in positions:
            mask |= 1 << i
        out[mask] = t.array[positions]
    return Multivector._wrap(t.dim, out)


def multivector_to_tensors(x: Multivector) -> list[DenseTensor]:
    """Per-grade antisymmetric components of an arbitrary multivector."""
    return [multivector_to_tensor(k_part(x, k), k) for k in range(x.dim + 1)]
