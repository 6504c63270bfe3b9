"""Small dense complex matrices over the exact and float backends.

A :class:`Matrix` is an immutable n-by-n array (n is 2 or 4 throughout
the package) stored as a flat row-major tuple.  Exact matrices hold
:class:`~diracsplit.scalars.GaussianRational` entries and never round;
float matrices hold Python ``complex`` and route their hot operations
through the selected kernel implementation.

Binary operations require both operands on the same backend; promotion
is one way, exact to float, via :meth:`Matrix.to_float`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import kernels
from .errors import BackendMismatch, ExpDiverged, ExpRequiresFloat
from .scalars import (
    EXACT,
    FLOAT,
    GaussianRational,
    coerce_scalar,
    scalar_abs,
    scalar_is_zero,
)

_EXP_SERIES_TOL = 1e-18


class Matrix:
    __slots__ = ("n", "backend", "entries")

    def __init__(self, n: int, backend: str, entries: tuple):
        if len(entries) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(entries)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "backend", backend)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def exact(cls, rows: Sequence[Sequence]) -> "Matrix":
        """Exact matrix from nested rows of ints, Fractions or GaussianRationals."""
        n = len(rows)
        flat = tuple(coerce_scalar(x, EXACT) for row in rows for x in row)
        return cls(n, EXACT, flat)

    @classmethod
    def floats(cls, rows: Sequence[Sequence]) -> "Matrix":
        """Float matrix from nested rows of numbers."""
        n = len(rows)
        flat = tuple(coerce_scalar(x, FLOAT) for row in rows for x in row)
        return cls(n, FLOAT, flat)

    @classmethod
    def identity(cls, n: int, backend: str = EXACT) -> "Matrix":
        one = GaussianRational(1) if backend == EXACT else 1 + 0j
        zero = GaussianRational(0) if backend == EXACT else 0j
        flat = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(n, backend, flat)

    @classmethod
    def zero(cls, n: int, backend: str = EXACT) -> "Matrix":
        zero = GaussianRational(0) if backend == EXACT else 0j
        return cls(n, backend, (zero,) * (n * n))

    @classmethod
    def diag(cls, values: Iterable, backend: str = EXACT) -> "Matrix":
        vals = [coerce_scalar(v, backend) for v in values]
        n = len(vals)
        zero = GaussianRational(0) if backend == EXACT else 0j
        flat = tuple(vals[i] if i == j else zero for i in range(n) for j in range(n))
        return cls(n, backend, flat)

    # -- structure -----------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.n + j]

    def rows(self) -> list:
        n = self.n
        return [list(self.entries[i * n : (i + 1) * n]) for i in range(n)]

    def _check_peer(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if self.backend != other.backend:
            raise BackendMismatch(
                f"{self.backend} matrix combined with {other.backend} matrix"
            )
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        self._check_peer(other)
        flat = tuple(a + b for a, b in zip(self.entries, other.entries))
        return Matrix(self.n, self.backend, flat)

    def __sub__(self, other):
        self._check_peer(other)
        flat = tuple(a - b for a, b in zip(self.entries, other.entries))
        return Matrix(self.n, self.backend, flat)

    def __neg__(self):
        return Matrix(self.n, self.backend, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = coerce_scalar(c, self.backend)
        return Matrix(self.n, self.backend, tuple(c * a for a in self.entries))

    def __matmul__(self, other):
        self._check_peer(other)
        n = self.n
        if self.backend == FLOAT:
            return Matrix(n, FLOAT, kernels.mul(n, self.entries, other.entries))
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            for j in range(n):
                acc = GaussianRational(0)
                for k in range(n):
                    acc = acc + a[i * n + k] * b[k * n + j]
                out.append(acc)
        return Matrix(n, EXACT, tuple(out))

    def apply(self, vec: tuple) -> tuple:
        """Matrix-vector product on a component tuple."""
        n = self.n
        if len(vec) != n:
            raise ValueError(f"vector length {len(vec)} does not match n={n}")
        if self.backend == FLOAT:
            return kernels.mul_vec(n, self.entries, tuple(vec))
        a = self.entries
        out = []
        for i in range(n):
            acc = GaussianRational(0)
            for k in range(n):
                acc = acc + a[i * n + k] * vec[k]
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        n = self.n
        flat = tuple(self.entries[j * n + i] for i in range(n) for j in range(n))
        return Matrix(n, self.backend, flat)

    def conj(self) -> "Matrix":
        flat = tuple(a.conjugate() for a in self.entries)
        return Matrix(self.n, self.backend, flat)

    def adjoint(self) -> "Matrix":
        return self.conj().transpose()

    def trace(self):
        n = self.n
        acc = GaussianRational(0) if self.backend == EXACT else 0j
        for i in range(n):
            acc = acc + self.entries[i * n + i]
        return acc

    # -- predicates and conversions ---------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(scalar_is_zero(a) for a in self.entries)

    def max_abs(self) -> float:
        if self.backend == FLOAT:
            return kernels.max_abs(self.entries)
        return max(scalar_abs(a) for a in self.entries)

    def to_float(self) -> "Matrix":
        """Explicit promotion to the float backend."""
        if self.backend == FLOAT:
            return self
        return Matrix(self.n, FLOAT, tuple(a.to_complex() for a in self.entries))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.n == other.n
            and self.backend == other.backend
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.backend, self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(x) for x in row) for row in self.rows()
        )
        return f"Matrix<{self.n},{self.backend}>[{body}]"


# -- module-level operations -----------------------------------------------


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b + b @ a


def mat_exp(a: Matrix, tol: float = _EXP_SERIES_TOL) -> Matrix:
    """Matrix exponential; float backend only."""
    if a.backend != FLOAT:
        raise ExpRequiresFloat("mat_exp needs a float matrix; promote first")
    try:
        flat = kernels.expm(a.n, a.entries, tol)
    except ValueError as exc:
        raise ExpDiverged(str(exc)) from None
    return Matrix(a.n, FLOAT, flat)


def max_abs_diff(a: Matrix, b: Matrix) -> float:
    a._check_peer(b)
    if a.backend == FLOAT:
        return kernels.max_abs_diff(a.entries, b.entries)
    return (a - b).max_abs()


def approx_eq(a: Matrix, b: Matrix, tol: float) -> bool:
    """Entrywise comparison within ``tol``; float backend only."""
    if a.backend != FLOAT or b.backend != FLOAT:
        raise BackendMismatch("approx_eq compares float matrices only")
    return max_abs_diff(a, b) <= tol

def exact_eq(a: Matrix, b: Matrix) -> bool:
    """Entrywise exact equality; exact backend only."""
    if a.backend != EXACT or b.backend != EXACT:
        raise BackendMismatch("exact_eq compares exact matrices only")
    return a.entries == b.entries
