"""Representation layer: Clifford algebra, gamma5, sigma, intertwiners,
charge-conjugation matrices."""

import pytest

from diracsplit.errors import IntertwinerInvalid
from diracsplit.gamma import (
    METRIC_SIGNS,
    REP_NAMES,
    build_rep,
    clifford_residual,
    conjugate_by_intertwiner,
    conjugation_matrix,
    gamma5_residuals,
    intertwiner,
    intertwiner_pair,
    sigma,
)
from diracsplit.matrices import Matrix, max_abs_diff
from diracsplit.scalars import EXACT, GaussianRational


def test_rep_names_pinned():
    assert REP_NAMES == ("spinor", "standard", "majorana")


def test_unknown_rep_rejected():
    with pytest.raises(ValueError):
        build_rep("dirac-pauli")


def test_clifford_residuals_exactly_zero(rep):
    for resid in clifford_residual(rep):
        assert resid.is_zero


def test_gamma5_relations_exactly_zero(rep):
    for resid in gamma5_residuals(rep):
        assert resid.is_zero


def test_spinor_gamma5_diagonal(spinor):
    assert (spinor.gamma5 - Matrix.diag((-1, -1, 1, 1))).is_zero


def test_standard_gamma0_diagonal():
    std = build_rep("standard")
    assert (std.gammas[0] - Matrix.diag((1, 1, -1, -1))).is_zero


def test_majorana_gammas_purely_imaginary():
    maj = build_rep("majorana")
    for g in maj.gammas:
        for entry in g.entries:
            assert entry.re == 0


def test_gamma_lower_signs(rep):
    for mu in range(4):
        want = rep.gammas[mu] if METRIC_SIGNS[mu] == 1 else -rep.gammas[mu]
        assert (rep.gamma_lower(mu) - want).is_zero


def test_sigma_antisymmetric(rep):
    for mu in range(4):
        for nu in range(4):
            assert (sigma(rep, mu, nu) + sigma(rep, nu, mu)).is_zero


def test_sigma03_diagonal_golden(spinor):
    """In the spinor basis sigma_03 = diag(-i, i, i, -i)."""
    i = GaussianRational(0, 1)
    want = Matrix.diag((-i, i, i, -i))
    assert (sigma(spinor, 0, 3) - want).is_zero


def test_sigma12_diagonal_golden(spinor):
    assert (sigma(spinor, 1, 2) - Matrix.diag((1, -1, 1, -1))).is_zero


@pytest.mark.parametrize("a", REP_NAMES)
@pytest.mark.parametrize("b", REP_NAMES)
def test_intertwiner_pairs(a, b):
    if a == b:
        return
    ra, rb = build_rep(a), build_rep(b)
    w, norm2 = intertwiner_pair(ra, rb)
    assert (w.adjoint() @ w - Matrix.identity(4).scale(norm2)).is_zero
    for g_from, g_to in zip(ra.gammas, rb.gammas):
        assert (w @ g_from @ w.adjoint() - g_to.scale(norm2)).is_zero


def test_intertwiner_unitary_float():
    sp, std = build_rep("spinor"), build_rep("standard")
    u = intertwiner(sp, std)
    uf = u.to_float()
    assert max_abs_diff(uf @ uf.adjoint(), Matrix.identity(4).to_float()) < 1e-15


def test_conjugate_by_intertwiner_roundtrip():
    sp, maj = build_rep("spinor"), build_rep("majorana")
    moved = conjugate_by_intertwiner(sp, maj, sp.gammas[1])
    assert (moved - maj.gammas[1]).is_zero


def test_conjugation_matrix_defining_relations(rep):
    """M conj(gamma) = -gamma M and M conj(M) = Id, exactly."""
    m = conjugation_matrix(rep)
    assert (m @ m.conj() - Matrix.identity(4)).is_zero
    for g in rep.gammas:
        assert (m @ g.conj() + g @ m).is_zero


def test_conjugation_matrix_spinor_is_i_gamma2(spinor):
    want = spinor.gammas[2].scale(GaussianRational(0, 1))
    assert (conjugation_matrix(spinor) - want).is_zero


def test_conjugation_matrix_majorana_is_phase():
    """All gammas imaginary: conjugation degenerates to i times identity."""
    maj = build_rep("majorana")
    m = conjugation_matrix(maj)
    want = Matrix.identity(4).scale(GaussianRational(0, 1))
    assert (m - want).is_zero


def test_dirac_block_structure_spinor(spinor):
    """gamma^mu p_mu in the spinor basis is the componentwise block form.

    Off-diagonal 2x2 blocks carry p0 +- sigma.p; the four matrix rows
    are exactly the four component equations of the coupled system.
    """
    from diracsplit.fields import FourMomentum, dirac_matrix

    p = FourMomentum.exact((5, 3, 2, 1), 1)
    got = dirac_matrix(spinor, p, 1)
    qp = GaussianRational(3, 2)   # q1 + i q2
    qm = GaussianRational(3, -2)  # q1 - i q2
    want = Matrix.exact([
        [0, 0, 6, qm],
        [0, 0, qp, 4],
        [4, -qm, 0, 0],
        [-qp, 6, 0, 0],
    ])
    assert (got - want).is_zero


def test_intertwiner_identity_pair(spinor):
    w, norm2 = intertwiner_pair(spinor, spinor)
    assert norm2 == 1
    assert (w - Matrix.identity(4)).is_zero


def test_intertwiner_unknown_pair(spinor):
    from diracsplit.gamma import GammaRep

    fake = GammaRep(name="bogus", gammas=spinor.gammas, gamma5=spinor.gamma5)
    with pytest.raises(ValueError):
        intertwiner_pair(spinor, fake)


def test_intertwiner_invalid_is_exported():
    assert issubclass(IntertwinerInvalid, Exception)
