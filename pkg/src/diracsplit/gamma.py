"""Gamma-matrix representations.

Three bases are pinned as exact matrices:

* ``spinor``   -- the chiral basis in which the four component equations
  of the massive bispinor system take their canonical form; gamma5 is
  diagonal and the upper/lower component pairs are the eta/xi spinors.
* ``standard`` -- gamma0 diagonal (rest-frame energy eigenbasis).
* ``majorana`` -- all four gamma matrices purely imaginary, so the
  charge-conjugation matrix is real.

All three satisfy the anticommutation relation with metric
diag(1, -1, -1, -1) and gamma5 = -i gamma0 gamma1 gamma2 gamma3; the
pairwise intertwiners are pinned integer (or Gaussian-integer) matrices
W with W Wdag = norm2 * Id, so similarity transforms stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IntertwinerInvalid
from .matrices import Matrix
from .scalars import EXACT, GaussianRational, I

REP_NAMES = ("spinor", "standard", "majorana")

#: signs of the metric diag(1, -1, -1, -1)
METRIC_SIGNS = (1, -1, -1, -1)

#: index pairs (mu, nu) with mu <= nu, the order used by clifford_residual
INDEX_PAIRS = tuple((mu, nu) for mu in range(4) for nu in range(mu, 4))

# 2x2 building blocks
PAULI = (
    Matrix.exact([[0, 1], [1, 0]]),
    Matrix.exact([[0, -I], [I, 0]]),
    Matrix.exact([[1, 0], [0, -1]]),
)
ID2 = Matrix.identity(2)


@dataclass(frozen=True)
class GammaRep:
    """A pinned gamma-matrix basis (all entries exact)."""

    name: str
    gammas: tuple  # (gamma0, gamma1, gamma2, gamma3)
    gamma5: Matrix

    def gamma(self, mu: int) -> Matrix:
        return self.gammas[mu]

    def gamma_lower(self, mu: int) -> Matrix:
        g = self.gammas[mu]
        return g if METRIC_SIGNS[mu] == 1 else -g


def _block4(a, b, c, d) -> Matrix:
    """Assemble a 4x4 exact matrix from 2x2 blocks [[a, b], [c, d]]."""
    rows = []
    for i in range(2):
        rows.append(list(a.rows()[i]) + list(b.rows()[i]))
    for i in range(2):
        rows.append(list(c.rows()[i]) + list(d.rows()[i]))
    return Matrix.exact(rows)


_Z2 = Matrix.zero(2)

_SPINOR = GammaRep(
    name="spinor",
    gammas=(
        _block4(_Z2, ID2, ID2, _Z2),
        _block4(_Z2, -PAULI[0], PAULI[0], _Z2),
        _block4(_Z2, -PAULI[1], PAULI[1], _Z2),
        _block4(_Z2, -PAULI[2], PAULI[2], _Z2),
    ),
    gamma5=Matrix.diag([-1, -1, 1, 1]),
)

_STANDARD = GammaRep(
    name="standard",
    gammas=(
        _block4(ID2, _Z2, _Z2, -ID2),
        _block4(_Z2, -PAULI[0], PAULI[0], _Z2),
        _block4(_Z2, -PAULI[1], PAULI[1], _Z2),
        _block4(_Z2, -PAULI[2], PAULI[2], _Z2),
    ),
    gamma5=_block4(_Z2, ID2, ID2, _Z2),
)

_MAJORANA = GammaRep(
    name="majorana",
    gammas=(
        _block4(_Z2, PAULI[1], PAULI[1], _Z2),
        _block4(PAULI[2].scale(-I), _Z2, _Z2, PAULI[2].scale(-I)),
        _block4(_Z2, PAULI[1], -PAULI[1], _Z2),
        _block4(PAULI[0].scale(I), _Z2, _Z2, PAULI[0].scale(I)),
    ),
    gamma5=_block4(PAULI[1], _Z2, _Z2, -PAULI[1]),
)

_REPS = {rep.name: rep for rep in (_SPINOR, _STANDARD, _MAJORANA)}


def build_rep(name: str) -> GammaRep:
    """Return the pinned representation with the given name."""
    try:
        return _REPS[name]
    except KeyError:
        raise ValueError(
            f"unknown representation {name!r}; expected one of {REP_NAMES}"
        ) from None


def clifford_residual(rep: GammaRep) -> list:
    """The ten independent anticommutator residuals.

    Entry k is {gamma^mu, gamma^nu} - 2 g^{mu nu} Id for the k-th pair in
    INDEX_PAIRS; every entry is exactly zero for a valid representation.
    """
    out = []
    ident = Matrix.identity(4)
    for mu, nu in INDEX_PAIRS:
        anti = rep.gammas[mu] @ rep.gammas[nu] + rep.gammas[nu] @ rep.gammas[mu]
        if mu == nu:
            anti = anti - ident.scale(2 * METRIC_SIGNS[mu])
        out.append(anti)
    return out


def gamma5_residuals(rep: GammaRep) -> list:
    """Residuals of the gamma5 relations.

    Returns six matrices: gamma5 + i g0 g1 g2 g3, gamma5^2 - Id, and the
    four anticommutators {gamma5, gamma^mu}.
    """
    g0, g1, g2, g3 = rep.gammas
    product = g0 @ g1 @ g2 @ g3
    out = [rep.gamma5 + product.scale(I)]
    out.append(rep.gamma5 @ rep.gamma5 - Matrix.identity(4))
    for mu in range(4):
        out.append(rep.gamma5 @ rep.gammas[mu] + rep.gammas[mu] @ rep.gamma5)
    return out


@lru_cache(maxsize=None)
def sigma(rep: GammaRep, mu: int, nu: int) -> Matrix:
    """Spin generator (i/2)[gamma_mu, gamma_nu] with lowered indices."""
    a = rep.gamma_lower(mu)
    b = rep.gamma_lower(nu)
    return (a @ b - b @ a).scale(GaussianRational(0, Fraction(1, 2)))


# -- intertwiners ------------------------------------------------------------

# W matrices with W Wdag = norm2 * Id; U = W / sqrt(norm2) is unitary and
# satisfies U gamma_from U^-1 = gamma_to entry by entry.
_W_SPINOR_TO_STANDARD = _block4(ID2, ID2, -ID2, ID2)
_W_STANDARD_TO_MAJORANA = _block4(ID2, PAULI[1], PAULI[1], -ID2)


def _intertwiner_table() -> dict:
    w1 = _W_SPINOR_TO_STANDARD
    w2 = _W_STANDARD_TO_MAJORANA
    w21 = w2 @ w1
    ident = Matrix.identity(4)
    return {
        ("spinor", "spinor"): (ident, 1),
        ("standard", "standard"): (ident, 1),
        ("majorana", "majorana"): (ident, 1),
        ("spinor", "standard"): (w1, 2),
        ("standard", "spinor"): (w1.adjoint(), 2),
        ("standard", "majorana"): (w2, 2),
        ("majorana", "standard"): (w2.adjoint(), 2),
        ("spinor", "majorana"): (w21, 4),
        ("majorana", "spinor"): (w21.adjoint(), 4),
    }


_INTERTWINERS = _intertwiner_table()


def intertwiner_pair(rep_from: GammaRep, rep_to: GammaRep):
    """Exact intertwiner data (W, norm2) for a pair of representations.

    W gamma_from Wdag = norm2 * gamma_to and Wdag W = norm2 * Id, both
    verified exactly here; U = W / sqrt(norm2) is the unitary change of
    basis.  Raises IntertwinerInvalid if the pinned W fails either check.
    """
    try:
        w, norm2 = _INTERTWINERS[(rep_from.name, rep_to.name)]
    except KeyError:
        raise ValueError(
            f"no intertwiner for pair ({rep_from.name!r}, {rep_to.name!r})"
        ) from None
    wd = w.adjoint()
    if not (wd @ w - Matrix.identity(4).scale(norm2)).is_zero:
        raise IntertwinerInvalid(f"W not proportional-unitary for {rep_to.name}")
    mats_from = rep_from.gammas + (rep_from.gamma5,)
    mats_to = rep_to.gammas + (rep_to.gamma5,)
    for a, b in zip(mats_from, mats_to):
        if not (w @ a @ wd - b.scale(norm2)).is_zero:
            raise IntertwinerInvalid(
                f"similarity check failed for {rep_from.name} -> {rep_to.name}"
            )
    return w, norm2


def intertwiner(rep_from: GammaRep, rep_to: GammaRep) -> Matrix:
    """Unitary change of basis U with U gamma_from U^-1 = gamma_to.

    Exact when norm2 is a perfect square, float otherwise.
    """
    w, norm2 = intertwiner_pair(rep_from, rep_to)
    root = {1: 1, 4: 2}.get(norm2)
    if root is not None:
        return w.scale(Fraction(1, root))
    return w.to_float().scale(1.0 / norm2**0.5)


def _conjugation_valid(rep: GammaRep, m: Matrix) -> bool:
    if not (m @ m.conj() - Matrix.identity(4)).is_zero:
        return False
    for g in rep.gammas:
        if not (m @ g.conj() + g @ m).is_zero:
            return False
    return True


@lru_cache(maxsize=None)
def conjugation_matrix(rep: GammaRep) -> Matrix:
    """The matrix M of charge conjugation C psi = M conj(psi).

    M must anticommute conjugated gammas onto gammas, M conj(gamma^mu)
    = -gamma^mu M, and satisfy M conj(M) = Id so C is an involution.
    In bases where gamma2 is the only imaginary gamma this is the usual
    i gamma2; in general (e.g. when every gamma is imaginary and the
    role of i gamma2 degenerates to a phase times the identity) it is
    the exact transport U M_spinor conj(U)^-1 of the spinor-basis
    matrix.  Both properties are verified exactly at build time.
    """
    m = rep.gammas[2].scale(GaussianRational(0, 1))
    if _conjugation_valid(rep, m):
        return m
    sp = build_rep("spinor")
    m_sp = sp.gammas[2].scale(GaussianRational(0, 1))
    w, norm2 = intertwiner_pair(sp, rep)
    m = (w @ m_sp @ w.transpose()).scale(Fraction(1, norm2))
    if not _conjugation_valid(rep, m):
        raise IntertwinerInvalid(
            f"no valid conjugation matrix for rep {rep.name}"
        )
    return m


def conjugate_by_intertwiner(rep_from: GammaRep, rep_to: GammaRep, m: Matrix) -> Matrix:
    """Transport a matrix between bases: U m U^-1, exact for exact input."""
    w, norm2 = intertwiner_pair(rep_from, rep_to)
    if m.backend == EXACT:
        return (w @ m @ w.adjoint()).scale(Fraction(1, norm2))
    wf = w.to_float()
    return (wf @ m @ wf.adjoint()).scale(1.0 / norm2)
