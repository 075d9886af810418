"""Pure numpy product kernels and the shared blade-recursion columns.

This is the fallback backend; a compiled twin lives in ``_speedups``.  Both
backends promise bitwise-identical outputs, so the order of floating-point
operations is pinned everywhere:

- products accumulate per coefficient pair in ascending (a, b) mask order,
  each contribution computed as ``(x[a] * y[b]) * factor``;
- blade-product columns are built by peeling the lowest vector of the left
  blade, applying the metric passes in ascending column order (a pass per
  basis vector, then the wedge pass, then the contraction corrections in
  ascending removed-vector order).

Terms whose factor is exactly zero may be skipped freely: accumulators
start at +0.0 and no step can produce -0.0, so adding a signed zero never
changes any bit.  Do not reorder any other arithmetic.
"""

from __future__ import annotations

import numpy as np

from .blades import grades_array

BACKEND_NAME = "numpy"

# Sign/index caches are small (the full sign matrix is capped below 2^10)
# and filled idempotently, so racing writers publish identical arrays.
_SIGN_MATRIX_MAX_DIM = 10

_BITS_CACHE: dict[int, np.ndarray] = {}
_SIGN_MATRIX_CACHE: dict[int, np.ndarray] = {}
_LOW_PARITY_CACHE: dict[tuple[int, int], np.ndarray] = {}
_HIGH_PARITY_CACHE: dict[tuple[int, int], np.ndarray] = {}
_WITH_BIT_CACHE: dict[tuple[int, int], np.ndarray] = {}
_WITHOUT_BIT_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def bits_matrix(dim: int) -> np.ndarray:
    """(2^dim, dim) matrix of mask bits: entry [m, j] = bit j of mask m."""
    arr = _BITS_CACHE.get(dim)
    if arr is None:
        masks = np.arange(1 << dim, dtype=np.int64)
        arr = _freeze(((masks[:, None] >> np.arange(dim)) & 1).astype(np.int8))
        _BITS_CACHE[dim] = arr
    return arr


def _reorder_parity_vector(a: int, dim: int) -> np.ndarray:
    # entry j: parity of the a-bits strictly above j
    return np.array([(a >> (j + 1)).bit_count() & 1 for j in range(dim)], dtype=np.int8)


def reorder_sign(a: int, b: int) -> float:
    """Sign of sorting the concatenated factors of blades a then b into
    ascending order: (-1)^(crossings), ignoring shared bits."""
    parity = 0
    for j in range(b.bit_length()):
        if b >> j & 1:
            parity ^= (a >> (j + 1)).bit_count() & 1
    return -1.0 if parity else 1.0


def sign_matrix(dim: int) -> np.ndarray:
    """(2^dim, 2^dim) matrix of reorder signs, cached for small dims."""
    arr = _SIGN_MATRIX_CACHE.get(dim)
    if arr is None:
        bits = bits_matrix(dim)
        masks = np.arange(1 << dim, dtype=np.int64)
        grade = grades_array(dim)
        above = np.empty((1 << dim, dim), dtype=np.int8)
        for j in range(dim):
            above[:, j] = grade[masks >> (j + 1)] & 1
        parity = (above.astype(np.int16) @ bits.T.astype(np.int16)) & 1
        arr = _freeze(1.0 - 2.0 * parity)
        _SIGN_MATRIX_CACHE[dim] = arr
    return arr


def sign_row(a: int, dim: int) -> np.ndarray:
    """Row of reorder signs against every right-hand mask."""
    if dim <= _SIGN_MATRIX_MAX_DIM:
        return sign_matrix(dim)[a]
    parity = (bits_matrix(dim) @ _reorder_parity_vector(a, dim)) & 1
    return 1.0 - 2.0 * parity


def low_parity_signs(dim: int, j: int) -> np.ndarray:
    """Per-mask sign (-1)^(number of set bits strictly below bit j)."""
    key = (dim, j)
    arr = _LOW_PARITY_CACHE.get(key)
    if arr is None:
        masks = np.arange(1 << dim, dtype=np.int64)
        parity = grades_array(dim)[masks & ((1 << j) - 1)] & 1
        arr = _freeze(1.0 - 2.0 * parity)
        _LOW_PARITY_CACHE[key] = arr
    return arr


def high_parity_signs(dim: int, j: int) -> np.ndarray:
    """Per-mask sign (-1)^(number of set bits strictly above bit j)."""
    key = (dim, j)
    arr = _HIGH_PARITY_CACHE.get(key)
    if arr is None:
        masks = np.arange(1 << dim, dtype=np.int64)
        parity = grades_array(dim)[masks >> (j + 1)] & 1
        arr = _freeze(1.0 - 2.0 * parity)
        _HIGH_PARITY_CACHE[key] = arr
    return arr


def masks_with_bit(dim: int, j: int) -> np.ndarray:
    key = (dim, j)
    arr = _WITH_BIT_CACHE.get(key)
    if arr is None:
        masks = np.arange(1 << dim, dtype=np.int64)
        arr = _freeze(masks[(masks >> j & 1) == 1])
        _WITH_BIT_CACHE[key] = arr
    return arr


def masks_without_bit(dim: int, j: int) -> np.ndarray:
    key = (dim, j)
    arr = _WITHOUT_BIT_CACHE.get(key)
    if arr is None:
        masks = np.arange(1 << dim, dtype=np.int64)
        arr = _freeze(masks[(masks >> j & 1) == 0])
        _WITHOUT_BIT_CACHE[key] = arr
    return arr


def _dim_of(x: np.ndarray) -> int:
    return int(x.shape[-1]).bit_length() - 1


# -- products on coefficient arrays -------------------------------------


def wedge_into(x: np.ndarray, y: np.ndarray, out: np.ndarray) -> None:
    """Accumulate the exterior product of two coefficient arrays into out."""
    dim = _dim_of(x)
    all_b = np.arange(1 << dim, dtype=np.int64)
    for a in range(1 << dim):
        xa = x[a]
        if xa == 0.0:
            continue
        if a == 0:
            out += xa * y
            continue
        bs = all_b[(all_b & a) == 0]
        out[a | bs] += (xa * y[bs]) * sign_row(a, dim)[bs]


def gp_orthonormal_into(x: np.ndarray, y: np.ndarray, out: np.ndarray) -> None:
    """Accumulate the identity-metric Clifford product: every blade pair
    lands on mask a XOR b with the reorder sign."""
    dim = _dim_of(x)
    all_b = np.arange(1 << dim, dtype=np.int64)
    for a in range(1 << dim):
        xa = x[a]
        if xa == 0.0:
            continue
        if a == 0:
            out += xa * y
            continue
        out[a ^ all_b] += (xa * y) * sign_row(a, dim)


def gp_table_into(x: np.ndarray, y: np.ndarray, table: np.ndarray, out: np.ndarray) -> None:
    """Accumulate the Clifford product through a prebuilt blade-pair table."""
    size = x.shape[-1]
    for a in range(size):
        xa = x[a]
        if xa == 0.0:
            continue
        rows = table[a]
        for b in range(size):
            yb = y[b]
            if yb == 0.0:
                continue
            out += (xa * yb) * rows[b]


# -- blade-product recursion --------------------------------------------
#
# The expansion of a left-multiplication by the blade with mask a, acting on
# anything whose expansion over canonical blades is known, follows from
# peeling the lowest vector e_i of a (a = e_i ^ rest):
#
#     e_a Z = e_i (e_rest Z) - (e_i . e_rest-contraction) Z
#
# where the correction expands the vector-blade contraction of e_i into
# rest.  Applying one vector on the left decomposes into a contraction pass
# per basis vector plus one wedge pass.  All passes act on the last axis so
# the same code serves one column (1-D) or a whole table slice (2-D).


def _apply_vector_gp(i: int, gram: np.ndarray, z: np.ndarray, out: np.ndarray) -> None:
    """Accumulate the left Clifford action of basis vector e_i on expansion z."""
    dim = gram.shape[0]
    for j in range(dim):
        g = float(gram[i, j])
        if g == 0.0:
            continue
        src = masks_with_bit(dim, j)
        out[..., src ^ (1 << j)] += (low_parity_signs(dim, j)[src] * g) * z[..., src]
    src = masks_without_bit(dim, i)
    out[..., src | (1 << i)] += low_parity_signs(dim, i)[src] * z[..., src]


def _apply_vector_lcontract(i: int, gram: np.ndarray, z: np.ndarray, out: np.ndarray) -> None:
    """Accumulate the left contraction by basis vector e_i on expansion z."""
    dim = gram.shape[0]
    for j in range(dim):
        g = float(gram[i, j])
        if g == 0.0:
            continue
        src = masks_with_bit(dim, j)
        out[..., src ^ (1 << j)] += (low_parity_signs(dim, j)[src] * g) * z[..., src]


def _apply_vector_rcontract(j: int, gram: np.ndarray, z: np.ndarray, out: np.ndarray) -> None:
    """Accumulate the right contraction by basis vector e_j on expansion z."""
    dim = gram.shape[0]
    for jr in range(dim):
        g = float(gram[j, jr])
        if g == 0.0:
            continue
        src = masks_with_bit(dim, jr)
        out[..., src ^ (1 << jr)] += (high_parity_signs(dim, jr)[src] * g) * z[..., src]


def _peeling_terms(a: int, gram: np.ndarray):
    """Lowest vector i of blade a, the remaining mask, and the contraction
    correction as (coefficient, submask) pairs in ascending removed-bit order."""
    i = (a & -a).bit_length() - 1
    rest = a ^ (1 << i)
    corrections = []
    for j in range(rest.bit_length()):
        if rest >> j & 1:
            g = float(gram[i, j])
            if g == 0.0:
                continue
            sgn = -1.0 if ((rest & ((1 << j) - 1)).bit_count() & 1) else 1.0
            corrections.append((sgn * g, rest ^ (1 << j)))
    return i, rest, corrections


def blade_column(a: int, b: int, gram: np.ndarray, memo: dict) -> np.ndarray:
    """Expansion of the Clifford product of canonical blades a * b.

    ``memo`` caches columns keyed by (a, b); it must always belong to a
    single gram matrix.  Returned columns are read-only and, for the same
    gram, bitwise identical to the matching ``build_table`` entries.
    """
    col = memo.get((a, b))
    if col is not None:
        return col
    dim = gram.shape[0]
    col = np.zeros(1 << dim)
    if a == 0:
        col[b] = 1.0
    else:
        i, rest, corrections = _peeling_terms(a, gram)
        _apply_vector_gp(i, gram, blade_column(rest, b, gram, memo), col)
        for coeff, sub in corrections:
            col -= coeff * blade_column(sub, b, gram, memo)
    memo[(a, b)] = _freeze(col)
    return col


def build_table(gram: np.ndarray) -> np.ndarray:
    """Dense blade-pair product table: entry [a, b, :] is the expansion of
    the Clifford product of canonical blades a * b."""
    dim = gram.shape[0]
    size = 1 << dim
    table = np.zeros((size, size, size))
    table[0] = np.eye(size)
    for a in range(1, size):
        i, rest, corrections = _peeling_terms(a, gram)
        _apply_vector_gp(i, gram, table[rest], table[a])
        for coeff, sub in corrections:
            table[a] -= coeff * table[sub]
    return table


def lcontract_column(a: int, b: int, gram: np.ndarray, memo: dict) -> np.ndarray:
    """Expansion of the left contraction of canonical blades: a into b.

    Peels the lowest vector of a, using that contracting by a wedge of
    vectors contracts by the tail first, then the head.
    """
    col = memo.get((a, b))
    if col is not None:
        return col
    dim = gram.shape[0]
    col = np.zeros(1 << dim)
    if a == 0:
        col[b] = 1.0
    else:
        i = (a & -a).bit_length() - 1
        _apply_vector_lcontract(i, gram, lcontract_column(a ^ (1 << i), b, gram, memo), col)
    memo[(a, b)] = _freeze(col)
    return col


def rcontract_column(a: int, b: int, gram: np.ndarray, memo: dict) -> np.ndarray:
    """Expansion of the right contraction of canonical blades: a by b.

    Peels the highest vector of b: contracting on the right by a wedge of
    vectors contracts by the head first, then the tail.
    """
    col = memo.get((a, b))
    if col is not None:
        return col
    dim = gram.shape[0]
    col = np.zeros(1 << dim)
    if b == 0:
        col[a] = 1.0
    else:
        j = b.bit_length() - 1
        _apply_vector_rcontract(j, gram, rcontract_column(a, b ^ (1 << j), gram, memo), col)
    memo[(a, b)] = _freeze(col)
    return col
