"""Chiral projectors and the rank-3 projector family.

Q+- = (1 +- gamma5)/2 select the two-component chiral halves of a
bispinor.  The four rank-3 projectors

    P1 = (3 - gamma5 - gamma0 gamma3 + i gamma1 gamma2) / 4
    P2 = (3 - gamma5 + gamma0 gamma3 - i gamma1 gamma2) / 4
    P3 = (3 + gamma5 + gamma0 gamma3 + i gamma1 gamma2) / 4
    P4 = (3 + gamma5 - gamma0 gamma3 - i gamma1 gamma2) / 4

commute pairwise, sum to 3*Id, and each leaves a three-dimensional
subspace invariant; in the spinor basis they are diagonal with a single
zero.  The unitary V = i gamma2 gamma3 swaps P1 and P2 while commuting
with gamma0 and gamma1.  All of this is verified exactly at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ProjectorAlgebraViolation
from .gamma import GammaRep
from .matrices import Matrix, commutator
from .reports import ResidualReport, entry_from_matrix
from .scalars import HALF, I

_QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class ProjectorSet:
    """The projector family for one gamma representation (exact entries)."""

    rep: GammaRep
    q_plus: Matrix
    q_minus: Matrix
    p: tuple  # (P1, P2, P3, P4)
    v: Matrix

    def projector(self, k: int) -> Matrix:
        """P_k for k in 1..4."""
        return self.p[k - 1]


@lru_cache(maxsize=None)
def build_projectors(rep: GammaRep) -> ProjectorSet:
    """Construct and exactly validate the projector family.

    Construction is pure and the result immutable, so repeat calls for
    the same representation share one validated instance.
    """
    ident = Matrix.identity(4)
    g5 = rep.gamma5
    q_plus = (ident + g5).scale(HALF)
    q_minus = (ident - g5).scale(HALF)

    g0g3 = rep.gammas[0] @ rep.gammas[3]
    ig1g2 = (rep.gammas[1] @ rep.gammas[2]).scale(I)
    three = ident.scale(3)
    p1 = (three - g5 - g0g3 + ig1g2).scale(_QUARTER)
    p2 = (three - g5 + g0g3 - ig1g2).scale(_QUARTER)
    p3 = (three + g5 + g0g3 + ig1g2).scale(_QUARTER)
    p4 = (three + g5 - g0g3 - ig1g2).scale(_QUARTER)
    ps = (p1, p2, p3, p4)

    v = (rep.gammas[2] @ rep.gammas[3]).scale(I)

    _validate(rep, q_plus, q_minus, ps, v)
    return ProjectorSet(rep=rep, q_plus=q_plus, q_minus=q_minus, p=ps, v=v)


def _validate(rep, q_plus, q_minus, ps, v):
    ident = Matrix.identity(4)

    def demand(m: Matrix, what: str):
        if not m.is_zero:
            raise ProjectorAlgebraViolation(f"{what} (rep {rep.name})")

    demand(q_plus @ q_plus - q_plus, "Q+ not idempotent")
    demand(q_minus @ q_minus - q_minus, "Q- not idempotent")
    demand(q_plus + q_minus - ident, "Q+ + Q- != 1")
    demand(q_plus @ q_minus, "Q+ Q- != 0")

    total = Matrix.zero(4)
    for k, p in enumerate(ps, start=1):
        demand(p @ p - p, f"P{k} not idempotent")
        if p.trace() != 3:
            raise ProjectorAlgebraViolation(f"P{k} trace != 3 (rep {rep.name})")
        total = total + p
    demand(total - ident.scale(3), "sum of P_k != 3")
    for a in range(4):
        for b in range(a + 1, 4):
            demand(commutator(ps[a], ps[b]), f"[P{a + 1}, P{b + 1}] != 0")

    demand(v @ v.adjoint() - ident, "V not unitary")


def corson_complement(projectors: ProjectorSet, k: int) -> Matrix:
    """The rank-1 complement 1 - P_k."""
    return Matrix.identity(4) - projectors.projector(k)


def v_swap_check(projectors: ProjectorSet) -> ResidualReport:
    """Residuals of the V-swap relations.

    V P1 V^-1 = P2, V P2 V^-1 = P1, [V, gamma0] = [V, gamma1] = 0, and
    unitarity of V.  All five vanish exactly for a valid family.
    """
    rep = projectors.rep
    v = projectors.v
    vinv = v.adjoint()  # unitary
    ident = Matrix.identity(4)
    p1, p2 = projectors.p[0], projectors.p[1]
    entries = (
        entry_from_matrix("v-swap.p1-to-p2", "V", v @ p1 @ vinv - p2),
        entry_from_matrix("v-swap.p2-to-p1", "V", v @ p2 @ vinv - p1),
        entry_from_matrix("v-swap.commute-gamma0", "V", commutator(v, rep.gammas[0])),
        entry_from_matrix("v-swap.commute-gamma1", "V", commutator(v, rep.gammas[1])),
        entry_from_matrix("v-swap.unitary", "V", v @ v.adjoint() - ident),
    )
    return ResidualReport(entries)
