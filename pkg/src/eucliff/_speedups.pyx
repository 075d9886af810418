# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: a typed twin of ``_kernels``.

Every function reproduces the pure backend bit for bit.  The pinned
floating-point order is documented in ``_kernels``; when editing either
backend, change both or the backend-parity tests will fail.  Terms with an
exactly zero factor may be skipped (accumulators never hold -0.0, so a
signed-zero add cannot change bits); nothing else may be reordered.
"""

import numpy as np

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define EUCLIFF_POPCOUNT(x) __builtin_popcountll((unsigned long long)(x))
    #define EUCLIFF_CTZ(x) __builtin_ctzll((unsigned long long)(x))
    #else
    static int EUCLIFF_POPCOUNT(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static int EUCLIFF_CTZ(unsigned long long x)
    { int c = 0; while (!(x & 1)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int EUCLIFF_POPCOUNT(unsigned long long x) nogil
    int EUCLIFF_CTZ(unsigned long long x) nogil

BACKEND_NAME = "compiled"


# Buffer for one row of reorder signs.  4096 entries covers the dimension
# cap of 12 enforced by the multivector constructor.
DEF _SIGN_ROW_CAP = 4096


cdef inline void _fill_sign_row(Py_ssize_t a, Py_ssize_t size, double* signs) nogil:
    # signs[b] is the crossing parity of sorting the factors of blade a in
    # front of blade b.  Extend b by its lowest set bit: each entry flips
    # the sign of the entry with that bit cleared, so a row costs O(size).
    cdef Py_ssize_t b, j
    signs[0] = 1.0
    for b in range(1, size):
        j = EUCLIFF_CTZ(b)
        if EUCLIFF_POPCOUNT(a >> (j + 1)) & 1:
            signs[b] = -signs[b & (b - 1)]
        else:
            signs[b] = signs[b & (b - 1)]


def wedge_into(const double[::1] x, const double[::1] y, double[::1] out):
    cdef Py_ssize_t size = x.shape[0]
    cdef Py_ssize_t a, b
    cdef double xa, yb
    cdef double signs[_SIGN_ROW_CAP]
    with nogil:
        for a in range(size):
            xa = x[a]
            if xa == 0.0:
                continue
            _fill_sign_row(a, size, signs)
            for b in range(size):
                if a & b:
                    continue
                yb = y[b]
                if yb == 0.0:
                    continue
                out[a | b] += (xa * yb) * signs[b]


def gp_orthonormal_into(const double[::1] x, const double[::1] y, double[::1] out):
    cdef Py_ssize_t size = x.shape[0]
    cdef Py_ssize_t a, b
    cdef double xa, yb
    cdef double signs[_SIGN_ROW_CAP]
    with nogil:
        for a in range(size):
            xa = x[a]
            if xa == 0.0:
                continue
            _fill_sign_row(a, size, signs)
            for b in range(size):
                yb = y[b]
                if yb == 0.0:
                    continue
                out[a ^ b] += (xa * yb) * signs[b]


def gp_table_into(const double[::1] x, const double[::1] y,
                  const double[:, :, ::1] table, double[::1] out):
    cdef Py_ssize_t size = x.shape[0]
    cdef Py_ssize_t a, b, c
    cdef double xa, yb, p, t
    with nogil:
        for a in range(size):
            xa = x[a]
            if xa == 0.0:
                continue
            for b in range(size):
                yb = y[b]
                if yb == 0.0:
                    continue
                p = xa * yb
                for c in range(size):
                    t = table[a, b, c]
                    if t != 0.0:
                        out[c] += p * t


cdef void _apply_vector_gp(Py_ssize_t i, const double[:, ::1] gram,
                           const double[::1] z, double[::1] out) nogil:
    # contraction pass per basis vector in ascending order, then the wedge
    # pass; identical op order to _kernels._apply_vector_gp
    cdef Py_ssize_t dim = gram.shape[0]
    cdef Py_ssize_t size = z.shape[0]
    cdef Py_ssize_t j, c, jb, ib
    cdef double g, zv, s
    for j in range(dim):
        g = gram[i, j]
        if g == 0.0:
            continue
        jb = 1 << j
        for c in range(size):
            if c & jb:
                zv = z[c]
                if zv != 0.0:
                    s = -1.0 if EUCLIFF_POPCOUNT(c & (jb - 1)) & 1 else 1.0
                    out[c ^ jb] += (s * g) * zv
    ib = 1 << i
    for c in range(size):
        if not c & ib:
            zv = z[c]
            if zv != 0.0:
                s = -1.0 if EUCLIFF_POPCOUNT(c & (ib - 1)) & 1 else 1.0
                out[c | ib] += s * zv


def build_table(const double[:, ::1] gram):
    cdef Py_ssize_t dim = gram.shape[0]
    cdef Py_ssize_t size = 1 << dim
    table_np = np.zeros((size, size, size))
    cdef double[:, :, ::1] table = table_np
    cdef Py_ssize_t a, b, c, i, j, rest, sub, jb
    cdef double g, coeff, s
    with nogil:
        for b in range(size):
            table[0, b, b] = 1.0
        for a in range(1, size):
            i = EUCLIFF_CTZ(a)
            rest = a ^ (1 << i)
            for b in range(size):
                _apply_vector_gp(i, gram, table[rest, b], table[a, b])
            for j in range(dim):
                jb = 1 << j
                if not rest & jb:
                    continue
                g = gram[i, j]
                if g == 0.0:
                    continue
                s = -1.0 if EUCLIFF_POPCOUNT(rest & (jb - 1)) & 1 else 1.0
                coeff = s * g
                sub = rest ^ jb
                for b in range(size):
                    for c in range(size):
                        table[a, b, c] -= coeff * table[sub, b, c]
    return table_np


def blade_column(Py_ssize_t a, Py_ssize_t b, gram, dict memo):
    """Expansion column of the blade product a * b, memoized per gram."""
    col = memo.get((a, b))
    if col is not None:
        return col
    cdef const double[:, ::1] gv = gram
    cdef Py_ssize_t dim = gv.shape[0]
    cdef Py_ssize_t size = 1 << dim
    col_np = np.zeros(size)
    cdef double[::1] cv = col_np
    cdef const double[::1] zv, sv
    cdef Py_ssize_t i, j, rest, jb, c
    cdef double g, coeff, s
    if a == 0:
        cv[b] = 1.0
    else:
        i = EUCLIFF_CTZ(a)
        rest = a ^ (1 << i)
        zv = blade_column(rest, b, gram, memo)
        _apply_vector_gp(i, gv, zv, cv)
        for j in range(dim):
            jb = 1 << j
            if not rest & jb:
                continue
            g = gv[i, j]
            if g == 0.0:
                continue
            s = -1.0 if EUCLIFF_POPCOUNT(rest & (jb - 1)) & 1 else 1.0
            coeff = s * g
            sv = blade_column(rest ^ jb, b, gram, memo)
            for c in range(size):
                cv[c] -= coeff * sv[c]
    # release the buffer before freezing: numpy rejects flag changes on
    # arrays with exported views
    cv = None
    col_np.flags.writeable = False
    memo[(a, b)] = col_np
    return col_np
