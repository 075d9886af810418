"""Exterior (wedge) product of multivectors.

The product extends the blade rule bilinearly: two blades with a shared
basis vector multiply to zero, disjoint blades join into the union mask
with the sign of sorting their concatenated factors.  Coefficients follow
the convention under which a p-blade expands over tensor components with a
1/p! weight; the tensor-level antisymmetrization oracle in
:mod:`eucliff.tensors` validates the blade rule against that definition.
"""

from __future__ import annotations

import numpy as np

from . import _backend
from ._kernels import reorder_sign
from .blades import Multivector
from .errors import AlgebraError


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Exterior product of two multivectors of equal dimension."""
    x._require_same_dim(y)
    out = np.zeros(1 << x.dim)
    _backend.wedge_into(x.coeffs, y.coeffs, out)
    return Multivector._wrap(x.dim, out)


def wedge_all(factors) -> Multivector:
    """Left-to-right wedge of a nonempty sequence of multivectors."""
    factors = list(factors)
    if not factors:
        raise AlgebraError("wedge_all needs at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = wedge(acc, f)
    return acc


def blade_wedge_sign(a: int, b: int) -> float:
    """Sign of the blade-level wedge rule: 0.0 when masks overlap, else the
    crossing sign of merging the factors of a before those of b."""
    if a < 0 or b < 0:
        raise AlgebraError("blade masks must be nonnegative")
    if a & b:
        return 0.0
    return reorder_sign(a, b)


def outermorphism(matrix, x: Multivector) -> Multivector:
    """Extend a linear vector map to all of x by wedge-multiplicativity.

    ``matrix`` row i holds the image coordinates of the i-th basis vector;
    blades map to the wedge of their factor images, scalars are fixed.
    Cost grows as 4^dim on dense input: this is a cross-check tool, not a
    production kernel.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.shape != (x.dim, x.dim):
        raise AlgebraError(f"expected a {x.dim}x{x.dim} matrix, got shape {m.shape}")
    vectors = [Multivector.from_vector(x.dim, m[i]) for i in range(x.dim)]
    images: dict[int, Multivector] = {0: Multivector.scalar(x.dim, 1.0)}

    def image(mask: int) -> Multivector:
        img = images.get(mask)
        if img is None:
            low = mask & -mask
            img = wedge(vectors[low.bit_length() - 1], image(mask ^ low))
            images[mask] = img
        return img

    out = np.zeros(1 << x.dim)
    for mask in range(1 << x.dim):
        c = x.coeffs[mask]
        if c != 0.0:
            out += c * image(mask).coeffs
    return Multivector._wrap(x.dim, out)
