"""Graded multivectors over a bitmask blade basis, with the involutions.

A multivector over an n-dimensional real space is stored as a dense array
of 2^n coefficients.  Index ``mask`` holds the coefficient of the canonical
basis blade whose factors are the basis vectors named by the set bits of
``mask`` (bit i set means the (i+1)-th basis vector is present), wedged in
ascending index order.  Everything in this module is metric-free.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import AlgebraError, DimensionMismatch

#: Hard cap on the ambient dimension (2^12 = 4096 coefficients).
MAX_DIM = 12

#: Default relative tolerance for :func:`isclose`.
DEFAULT_TOLERANCE = 1e-10

# Per-dimension cache: grade (popcount) of every mask, as an int8 array.
_GRADE_CACHE: dict[int, np.ndarray] = {}


def _check_dim(dim: int) -> int:
    if not isinstance(dim, numbers.Integral) or not 1 <= dim <= MAX_DIM:
        raise AlgebraError(f"dimension must be an integer in [1, {MAX_DIM}], got {dim!r}")
    return int(dim)


def grades_array(dim: int) -> np.ndarray:
    """Grade (number of set bits) of every mask below 2^dim, as int8."""
    arr = _GRADE_CACHE.get(dim)
    if arr is None:
        masks = np.arange(1 << dim, dtype=np.uint32)
        arr = np.zeros(1 << dim, dtype=np.int8)
        for i in range(dim):
            arr += ((masks >> i) & 1).astype(np.int8)
        arr.flags.writeable = False
        _GRADE_CACHE[dim] = arr
    return arr


def grade_of_mask(mask: int) -> int:
    """Number of basis vectors in the blade named by ``mask``."""
    return int(mask).bit_count()


def blade_name(mask: int) -> str:
    """Canonical name of a basis blade: ``"1"`` for the scalar, else ``"e"``
    followed by the ascending 1-based vector indices, e.g. ``"e12"``."""
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


def canonical_reorder(indices, dim: int) -> tuple[int, int]:
    """Sort a list of 1-based vector indices into the canonical blade.

    Returns ``(mask, sign)`` where ``sign`` is the parity of the sorting
    permutation, or ``(0, 0)`` if any index repeats (a repeated vector
    annihilates the blade).

    >>> canonical_reorder([2, 1], 3)
    (3, -1)
    """
    dim = _check_dim(dim)
    mask = 0
    sign = 1
    for raw in indices:
        if not isinstance(raw, numbers.Integral) or not 1 <= raw <= dim:
            raise AlgebraError(f"vector index {raw!r} out of range [1, {dim}]")
        bit = 1 << (int(raw) - 1)
        if mask & bit:
            return 0, 0
        # crossings: already-placed vectors with a larger index
        if (mask >> int(raw)).bit_count() & 1:
            sign = -sign
        mask |= bit
    return mask, sign


class Multivector:
    """Immutable dense multivector: 2^dim real coefficients indexed by blade mask.

    Supports the metric-free operators directly: ``+``, ``-``, scalar ``*``,
    ``^`` (exterior product) and ``~`` (reversion).  Metric-dependent
    products live in :mod:`eucliff.metric` and :mod:`eucliff.clifford`.
    """

    __slots__ = ("_dim", "_coeffs")
    __hash__ = None

    def __init__(self, dim: int, coeffs=None):
        self._dim = _check_dim(dim)
        size = 1 << self._dim
        if coeffs is None:
            arr = np.zeros(size)
        else:
            arr = np.array(coeffs, dtype=np.float64, copy=True).reshape(-1)
            if arr.size != size:
                raise AlgebraError(
                    f"expected {size} coefficients for dimension {self._dim}, got {arr.size}"
                )
            if not np.all(np.isfinite(arr)):
                raise AlgebraError("multivector coefficients must be finite")
        arr.flags.writeable = False
        self._coeffs = arr

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array of length 2^dim."""
        return self._coeffs

    @classmethod
    def _wrap(cls, dim: int, arr: np.ndarray) -> "Multivector":
        """Adopt ``arr`` without copying.  Internal: callers hand over ownership."""
        mv = object.__new__(cls)
        mv._dim = dim
        arr.flags.writeable = False
        mv._coeffs = arr
        return mv

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim)

    @classmethod
    def scalar(cls, dim: int, value: float) -> "Multivector":
        mv = cls(dim)
        arr = mv._coeffs.copy()
        arr[0] = value
        return cls._wrap(mv._dim, arr)

    @classmethod
    def basis_vector(cls, dim: int, index: int) -> "Multivector":
        """The 1-based basis vector ``e_index``."""
        mask, _ = canonical_reorder([index], dim)
        return cls.from_blade(dim, mask)

    @classmethod
    def from_blade(cls, dim: int, mask: int, coefficient: float = 1.0) -> "Multivector":
        """Multivector with a single coefficient at the blade ``mask``."""
        mv = cls(dim)
        if not 0 <= mask < (1 << mv._dim):
            raise AlgebraError(f"blade mask {mask} out of range for dimension {mv._dim}")
        arr = mv._coeffs.copy()
        arr[mask] = coefficient
        return cls._wrap(mv._dim, arr)

    @classmethod
    def from_indices(cls, dim: int, indices, coefficient: float = 1.0) -> "Multivector":
        """Blade built from 1-based vector indices in any order; the sign of
        the sorting permutation is absorbed into the coefficient."""
        mask, sign = canonical_reorder(indices, dim)
        if sign == 0:
            return cls(dim)
        return cls.from_blade(dim, mask, sign * coefficient)

    @classmethod
    def from_vector(cls, dim: int, components) -> "Multivector":
        """Grade-1 multivector from a length-``dim`` coordinate array."""
        comps = np.asarray(components, dtype=np.float64).reshape(-1)
        if comps.size != dim:
            raise AlgebraError(f"expected {dim} vector components, got {comps.size}")
        mv = cls(dim)
        arr = mv._coeffs.copy()
        arr[1 << np.arange(dim)] = comps
        return cls._wrap(mv._dim, arr)

    # -- structure -------------------------------------------------------

    def vector_components(self) -> np.ndarray:
        """The grade-1 coefficients as a length-``dim`` coordinate array."""
        return self._coeffs[1 << np.arange(self._dim)].copy()

    def scalar_part(self) -> float:
        return float(self._coeffs[0])

    def grades(self) -> list[int]:
        """Sorted list of grades with at least one nonzero coefficient."""
        g = grades_array(self._dim)
        return sorted({int(k) for k in g[self._coeffs != 0.0]})

    def is_homogeneous(self, k: int) -> bool:
        """True when every nonzero coefficient sits at grade ``k``."""
        g = grades_array(self._dim)
        return bool(np.all(self._coeffs[g != k] == 0.0))

    def _require_same_dim(self, other: "Multivector") -> None:
        if self._dim != other._dim:
            raise DimensionMismatch(self._dim, other._dim)

    # -- operators -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._require_same_dim(other)
            return Multivector._wrap(self._dim, self._coeffs + other._coeffs)
        if isinstance(other, numbers.Real):
            arr = self._coeffs.copy()
            arr[0] += other
            return Multivector._wrap(self._dim, arr)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Multivector):
            self._require_same_dim(other)
            return Multivector._wrap(self._dim, self._coeffs - other._coeffs)
        if isinstance(other, numbers.Real):
            return self + (-float(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            return (-self) + float(other)
        return NotImplemented

    def __neg__(self):
        return Multivector._wrap(self._dim, -self._coeffs)

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector._wrap(self._dim, self._coeffs * float(other))
        if isinstance(other, Multivector):
            raise TypeError(
                "'*' between multivectors is ambiguous; use "
                "eucliff.clifford.geometric_product(x, y, metric)"
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return self * (1.0 / float(other))
        return NotImplemented

    def __xor__(self, other):
        from .exterior import wedge

        if isinstance(other, numbers.Real):
            other = Multivector.scalar(self._dim, float(other))
        return wedge(self, other)

    def __rxor__(self, other):
        from .exterior import wedge

        if isinstance(other, numbers.Real):
            return wedge(Multivector.scalar(self._dim, float(other)), self)
        return NotImplemented

    def __invert__(self):
        return reversion(self)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._dim == other._dim and bool(np.array_equal(self._coeffs, other._coeffs))

    def __repr__(self):
        return f"Multivector(dim={self._dim}, {format_multivector(self)!r})"

    def __str__(self):
        return format_multivector(self)


# -- the grade operators -------------------------------------------------


def k_part(x: Multivector, k: int) -> Multivector:
    """Keep exactly the grade-``k`` coefficients of ``x``, zeroing the rest."""
    if not isinstance(k, numbers.Integral) or not 0 <= k <= x.dim:
        raise AlgebraError(f"grade {k!r} out of range [0, {x.dim}]")
    keep = grades_array(x.dim) == k
    return Multivector._wrap(x.dim, np.where(keep, x.coeffs, 0.0))


def grade_involution(x: Multivector) -> Multivector:
    """Flip the sign of every odd-grade part (the main automorphism)."""
    odd = (grades_array(x.dim) & 1).astype(bool)
    return Multivector._wrap(x.dim, np.where(odd, -x.coeffs, x.coeffs))


def reversion(x: Multivector) -> Multivector:
    """Reverse the factor order of every blade: grade k picks up (-1)^(k(k-1)/2)."""
    g = grades_array(x.dim).astype(np.int64)
    flip = ((g * (g - 1)) // 2 & 1).astype(bool)
    return Multivector._wrap(x.dim, np.where(flip, -x.coeffs, x.coeffs))


def conjugate(x: Multivector) -> Multivector:
    """Composition of grade involution and reversion (order-independent)."""
    return reversion(grade_involution(x))


def add(x: Multivector, y: Multivector) -> Multivector:
    """Componentwise sum; dims must match."""
    return x + y


def scale(alpha: float, x: Multivector) -> Multivector:
    """Scalar multiple of a multivector."""
    return x * alpha


def pseudoscalar(dim: int) -> Multivector:
    """Unit coefficient at the top-grade canonical blade."""
    dim = _check_dim(dim)
    return Multivector.from_blade(dim, (1 << dim) - 1)


def isclose(x: Multivector, y: Multivector, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Approximate equality: max-abs coefficient difference bounded by
    ``tol * (1 + max-abs coefficient of both)``."""
    if x.dim != y.dim:
        raise DimensionMismatch(x.dim, y.dim)
    scale_ref = 1.0 + max(float(np.max(np.abs(x.coeffs))), float(np.max(np.abs(y.coeffs))))
    return float(np.max(np.abs(x.coeffs - y.coeffs))) <= tol * scale_ref


# -- canonical text rendering -------------------------------------------


def format_number(value: float) -> str:
    """Render a coefficient: integral values without a decimal point, other
    values with the shortest digit string that round-trips exactly."""
    value = float(value)
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def sorted_masks(dim: int):
    """All blade masks of a dimension ordered by (grade, mask)."""
    g = grades_array(dim)
    masks = np.arange(1 << dim)
    return masks[np.lexsort((masks, g))]


def format_multivector(x: Multivector) -> str:
    """Canonical text form: terms sorted by (grade, mask), unit coefficients
    elided on blades, e.g. ``"1 - 2 e1 + 3 e12"``.  The zero multivector
    renders as ``"0"``."""
    parts: list[str] = []
    for mask in sorted_masks(x.dim):
        c = float(x.coeffs[mask])
        if c == 0.0:
            continue
        mag = abs(c)
        if mask == 0:
            body = format_number(mag)
        elif mag == 1.0:
            body = blade_name(int(mask))
        else:
            body = f"{format_number(mag)} {blade_name(int(mask))}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
