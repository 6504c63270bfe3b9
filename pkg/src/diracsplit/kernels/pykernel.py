"""Pure-Python float kernels for small dense complex matrices.

Matrices are flat row-major tuples of ``complex`` of length n*n with
n in {2, 4}.  The compiled kernel in ``_cykernel`` implements the same
operations with the same evaluation order, so the two backends agree
bit for bit on multiplication and to rounding on the exponential.
"""

from __future__ import annotations

IMPLEMENTATION = "pure-python"

_EXP_MAX_TERMS = 64


def mul(n: int, a: tuple, b: tuple) -> tuple:
    """Matrix product of two flat n*n tuples."""
    out = []
    for i in range(n):
        row = i * n
        for j in range(n):
            acc = 0j
            for k in range(n):
                acc = acc + a[row + k] * b[k * n + j]
            out.append(acc)
    return tuple(out)


def mul_vec(n: int, a: tuple, v: tuple) -> tuple:
    """Matrix-vector product."""
    out = []
    for i in range(n):
        row = i * n
        acc = 0j
        for k in range(n):
            acc = acc + a[row + k] * v[k]
        out.append(acc)
    return tuple(out)


def max_abs(a: tuple) -> float:
    """Largest entry magnitude."""
    m = 0.0
    for z in a:
        v = abs(z)
        if v > m:
            m = v
    return m


def max_abs_diff(a: tuple, b: tuple) -> float:
    """Largest entrywise difference magnitude."""
    m = 0.0
    for x, y in zip(a, b):
        v = abs(x - y)
        if v > m:
            m = v
    return m


def expm(n: int, a: tuple, tol: float) -> tuple:
    """Exponential by scaling-and-squaring over the Taylor series.

    The input is halved until its crude norm bound drops below 0.5, the
    series is summed until the running term falls below ``tol``, and the
    result is squared back up.  Raises ValueError if the series fails to
    converge within a fixed term budget.
    """
    nrm = max_abs(a) * n
    s = 0
    while nrm > 0.5:
        nrm *= 0.5
        s += 1
    scale = 0.5**s
    b = tuple(z * scale for z in a)

    ident = tuple(1 + 0j if i == j else 0j for i in range(n) for j in range(n))
    result = ident
    term = ident
    k = 1
    while True:
        term = mul(n, term, b)
        term = tuple(complex(z.real / k, z.imag / k) for z in term)
        result = tuple(r + t for r, t in zip(result, term))
        if max_abs(term) <= tol:
            break
        k += 1
        if k > _EXP_MAX_TERMS:
            raise ValueError("exponential series did not converge")
    for _ in range(s):
        result = mul(n, result, result)
    return result
