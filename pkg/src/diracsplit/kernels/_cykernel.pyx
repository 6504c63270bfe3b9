# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled float kernels for small dense complex matrices.

Mirrors ``pykernel`` operation for operation: the same accumulation
order in products, componentwise real division in the exponential
series (never complex division), and hypot-based magnitudes, so the
two implementations agree on finite inputs.
"""

from libc.math cimport hypot

IMPLEMENTATION = "cython"

_EXP_MAX_TERMS = 64

# matrices here are at most 8x8 flat
DEF _CAP = 64


cdef inline void _load(tuple src, double complex* dst, Py_ssize_t count):
    cdef Py_ssize_t i
    for i in range(count):
        dst[i] = src[i]


cdef inline tuple _dump(const double complex* src, Py_ssize_t count):
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(count):
        out.append(complex(src[i].real, src[i].imag))
    return tuple(out)


cdef inline void _mul_raw(Py_ssize_t n, const double complex* a,
                          const double complex* b, double complex* out):
    cdef Py_ssize_t i, j, k, row
    cdef double complex acc
    for i in range(n):
        row = i * n
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = acc + a[row + k] * b[k * n + j]
            out[row + j] = acc


cdef inline double _max_abs_raw(const double complex* a, Py_ssize_t count):
    cdef double m = 0.0
    cdef double v
    cdef Py_ssize_t i
    for i in range(count):
        v = hypot(a[i].real, a[i].imag)
        if v > m:
            m = v
    return m


def mul(n, a, b):
    """Matrix product of two flat n*n tuples."""
    cdef Py_ssize_t cn = n
    if cn * cn > _CAP:
        raise ValueError("matrix too large for compiled kernel")
    cdef double complex am[_CAP]
    cdef double complex bm[_CAP]
    cdef double complex om[_CAP]
    _load(a, am, cn * cn)
    _load(b, bm, cn * cn)
    _mul_raw(cn, am, bm, om)
    return _dump(om, cn * cn)


def mul_vec(n, a, v):
    """Matrix-vector product."""
    cdef Py_ssize_t cn = n
    if cn * cn > _CAP:
        raise ValueError("matrix too large for compiled kernel")
    cdef double complex am[_CAP]
    cdef double complex vm[8]
    cdef double complex om[8]
    cdef Py_ssize_t i, k, row
    cdef double complex acc
    _load(a, am, cn * cn)
    _load(v, vm, cn)
    for i in range(cn):
        row = i * cn
        acc = 0
        for k in range(cn):
            acc = acc + am[row + k] * vm[k]
        om[i] = acc
    return _dump(om, cn)


def max_abs(a):
    """Largest entry magnitude."""
    cdef double m = 0.0
    cdef double v
    cdef double complex z
    for item in a:
        z = item
        v = hypot(z.real, z.imag)
        if v > m:
            m = v
    return m


def max_abs_diff(a, b):
    """Largest entrywise difference magnitude."""
    cdef double m = 0.0
    cdef double v
    cdef double complex x, y, d
    for xi, yi in zip(a, b):
        x = xi
        y = yi
        d = x - y
        v = hypot(d.real, d.imag)
        if v > m:
            m = v
    return m


def expm(n, a, tol):
    """Exponential by scaling-and-squaring over the Taylor series.

    Same control flow as the pure kernel: halve until the crude norm
    bound drops below 0.5, sum terms until one falls below ``tol``
    (dividing real and imaginary parts separately), square back up.
    """
    cdef Py_ssize_t cn = n
    if cn * cn > _CAP:
        raise ValueError("matrix too large for compiled kernel")
    cdef double complex am[_CAP]
    cdef double complex bm[_CAP]
    cdef double complex result[_CAP]
    cdef double complex term[_CAP]
    cdef double complex scratch[_CAP]
    cdef Py_ssize_t count = cn * cn
    cdef Py_ssize_t i, j
    cdef double ctol = tol

    _load(a, am, count)

    cdef double nrm = _max_abs_raw(am, count) * cn
    cdef int s = 0
    while nrm > 0.5:
        nrm *= 0.5
        s += 1
    cdef double scale = 0.5 ** s
    for i in range(count):
        bm[i] = am[i] * scale

    for i in range(cn):
        for j in range(cn):
            result[i * cn + j] = 1 if i == j else 0
    for i in range(count):
        term[i] = result[i]

    cdef int k = 1
    cdef double kd
    while True:
        _mul_raw(cn, term, bm, scratch)
        kd = k
        for i in range(count):
            term[i].real = scratch[i].real / kd
            term[i].imag = scratch[i].imag / kd
        for i in range(count):
            result[i] = result[i] + term[i]
        if _max_abs_raw(term, count) <= ctol:
            break
        k += 1
        if k > _EXP_MAX_TERMS:
            raise ValueError("exponential series did not converge")

    for i in range(s):
        _mul_raw(cn, result, result, scratch)
        for j in range(count):
            result[j] = scratch[j]
    return _dump(result, count)
