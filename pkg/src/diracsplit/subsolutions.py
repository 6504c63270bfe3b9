"""The two-system decomposition of a massive Dirac solution.

For a solution Psi = (xi1, xi2, eta1, eta2) of the bispinor system and
m != 0, four quantities are defined term-wise from the eta pair:

    m xi(1)^1 = (p0 + p3) eta1      m xi(2)^1 = (p1 - i p2) eta2
    m xi(1)^2 = (p1 + i p2) eta1    m xi(2)^2 = (p0 - p3) eta2

with xi(1)^a + xi(2)^a = xi^a.  The two constituent fields

    Psi_(1) = (xi(1)^1, xi(1)^2, eta1, eta2)
    Psi_(2) = (xi(2)^1, xi(2)^2, eta1, eta2)

each satisfy a closed three-line system, equivalent four-line forms, and
the projector forms (gamma.p - m) P_k Psi_(k) = 0, which are basis
independent.  Residual functions below evaluate every one of these
systems; for exact inputs on an exact mass shell all residuals vanish
identically.

The Weyl (massless chiral) and Majorana (charge-conjugation-invariant)
subsolution checks live here as well, since they share the component
conventions of the spinor basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotASolution,
    NotMajorana,
    SplitRequiresMass,
    SplitRequiresSpinorRep,
    WeylRequiresMassless,
)
from .fields import (
    PlaneWaveField,
    PlaneWaveTerm,
    charge_conjugate,
    conjugate,
    dirac_op,
    dirac_residual,
    lower_half,
    momentum_op,
    upper_half,
)
from .gamma import PAULI, GammaRep, build_rep, intertwiner_pair
from .matrices import Matrix
from .projectors import ProjectorSet, build_projectors
from .reports import ResidualEntry, ResidualReport, entry_from_value
from .scalars import EXACT, FLOAT, GaussianRational, scalar_abs, scalar_is_zero

_DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class SplitResult:
    psi: PlaneWaveField
    psi1: PlaneWaveField
    psi2: PlaneWaveField
    xi1_pair: PlaneWaveField
    xi2_pair: PlaneWaveField
    mass: object
    rep: GammaRep


def _term_q(term: PlaneWaveTerm) -> tuple:
    """Momentum-operator eigenvalues (q^0..q^3) on one term."""
    s = term.freq_sign
    return tuple(c * s for c in term.momentum.p)


def _q_complex(q1, q2, backend: str, conj: bool = False):
    """q1 + i q2 (or q1 - i q2) as a backend scalar."""
    if backend == EXACT:
        return GaussianRational(q1, -q2 if conj else q2)
    return complex(q1, -q2 if conj else q2)


def split(psi: PlaneWaveField, mass, *, tol: float = _DEFAULT_TOL,
          require_solution: bool = True) -> SplitResult:
    """Decompose a Dirac solution into its two constituent fields.

    The xi(i) components are computed term-wise by applying the defining
    momentum operators to the eta components and dividing by the mass.
    The recombination invariants (xi(1)+xi(2) = xi componentwise and
    P1 Psi_(1) + P2 Psi_(2) = Psi) are verified before returning.

    ``require_solution=False`` skips the Dirac-solution precondition and
    the recombination checks; it exists so negative controls can push
    off-shell inputs through the same code path.
    """
    if scalar_is_zero(mass):
        raise SplitRequiresMass("the defining relations divide by m")
    if psi.ncomp != 4:
        raise SplitRequiresSpinorRep("split needs a bispinor field")
    if psi.rep is None or psi.rep.name != "spinor":
        raise SplitRequiresSpinorRep(
            "component formulas are pinned to the spinor basis; "
            "transport the field with the intertwiner first"
        )
    if require_solution:
        res = dirac_residual(psi, mass)
        if psi.backend == EXACT:
            if not res.is_zero:
                raise NotASolution("nonzero Dirac residual in exact backend")
        elif res.max_abs() > tol:
            raise NotASolution(f"Dirac residual {res.max_abs():.3e} > {tol}")

    t1, t2, x1, x2 = [], [], [], []
    for term in psi.terms:
        q0, q1, q2, q3 = _term_q(term)
        eta1, eta2 = term.amplitude[2], term.amplitude[3]
        xi11 = (q0 + q3) * eta1 / mass
        xi12 = _q_complex(q1, q2, term.backend) * eta1 / mass
        xi21 = _q_complex(q1, q2, term.backend, conj=True) * eta2 / mass
        xi22 = (q0 - q3) * eta2 / mass
        t1.append(PlaneWaveTerm((xi11, xi12, eta1, eta2), term.momentum, term.freq_sign))
        t2.append(PlaneWaveTerm((xi21, xi22, eta1, eta2), term.momentum, term.freq_sign))
        x1.append(PlaneWaveTerm((xi11, xi12), term.momentum, term.freq_sign))
        x2.append(PlaneWaveTerm((xi21, xi22), term.momentum, term.freq_sign))

    rep = psi.rep
    result = SplitResult(
        psi=psi,
        psi1=PlaneWaveField(t1, rep=rep, ncomp=4, backend=psi.backend),
        psi2=PlaneWaveField(t2, rep=rep, ncomp=4, backend=psi.backend),
        xi1_pair=PlaneWaveField(x1, rep=rep, ncomp=2, backend=psi.backend),
        xi2_pair=PlaneWaveField(x2, rep=rep, ncomp=2, backend=psi.backend),
        mass=mass,
        rep=rep,
    )
    if require_solution:
        rec = recombination_residuals(result)
        if psi.backend == EXACT:
            if not rec.all_exact_zero():
                raise NotASolution("recombination invariants broken in exact backend")
        elif not rec.all_within(tol):
            raise NotASolution(
                f"recombination residual {rec.max_residual():.3e} > {tol}"
            )
    return result


# -- residual evaluation -------------------------------------------------------


def _scalar_entry(label: str, equation: str, backend: str, values) -> ResidualEntry:
    """Entry from a list of per-term scalar residuals."""
    if backend == EXACT and all(scalar_is_zero(v) for v in values):
        return ResidualEntry(label, equation, backend, None, True)
    mag = max((scalar_abs(v) for v in values), default=0.0)
    return entry_from_value(label, equation, backend, mag)


def recombination_residuals(sr: SplitResult) -> ResidualReport:
    """Residuals of the defining recombinations.

    xi(1)^a + xi(2)^a - xi^a componentwise, and the projector
    recombination P1 Psi_(1) + P2 Psi_(2) - Psi.
    """
    backend = sr.psi.backend
    diff = sr.xi1_pair + sr.xi2_pair - upper_half(sr.psi)
    comp0 = [t.amplitude[0] for t in diff.terms]
    comp1 = [t.amplitude[1] for t in diff.terms]

    ps = _projectors_for(sr.rep, backend)
    recomb = sr.psi1.apply(ps[0]) + sr.psi2.apply(ps[1]) - sr.psi
    entries = (
        _scalar_entry("recombine.xi1", "def3", backend, comp0),
        _scalar_entry("recombine.xi2", "def4", backend, comp1),
        _field_entry("recombine.psi", "psi", recomb),
    )
    return ResidualReport(entries)


def _field_entry(label: str, equation: str, f: PlaneWaveField) -> ResidualEntry:
    if f.backend == EXACT and f.is_zero:
        return ResidualEntry(label, equation, f.backend, None, True)
    return entry_from_value(label, equation, f.backend, f.max_abs())


_PROJ_CACHE: dict = {}


def _projectors_for(rep: GammaRep, backend: str) -> tuple:
    """(P1, P2, P3, P4) in the requested backend."""
    key = (rep.name, backend)
    if key not in _PROJ_CACHE:
        ps = build_projectors(rep)
        mats = ps.p if backend == EXACT else tuple(m.to_float() for m in ps.p)
        _PROJ_CACHE[key] = mats
    return _PROJ_CACHE[key]


def identity_residuals(sr: SplitResult) -> ResidualReport:
    """The two scalar identities and their basis-independent form.

    (p1 + i p2) xi(1)^1 = (p0 + p3) xi(1)^2
    (p0 - p3) xi(2)^1 = (p1 - i p2) xi(2)^2
    (1 - P_i) gamma.p P_i Psi_(i) = 0   (i = 1, 2)
    """
    backend = sr.psi.backend
    id1, id2 = [], []
    for term in sr.xi1_pair.terms:
        q0, q1, q2, q3 = _term_q(term)
        a, b = term.amplitude
        id1.append(_q_complex(q1, q2, backend) * a - (q0 + q3) * b)
    for term in sr.xi2_pair.terms:
        q0, q1, q2, q3 = _term_q(term)
        a, b = term.amplitude
        id2.append((q0 - q3) * a - _q_complex(q1, q2, backend, conj=True) * b)

    ps = _projectors_for(sr.rep, backend)
    ident = Matrix.identity(4, backend)
    entries = [
        _scalar_entry("identity.id1", "id1", backend, id1),
        _scalar_entry("identity.id2", "id2", backend, id2),
    ]
    for i, psi_i in ((1, sr.psi1), (2, sr.psi2)):
        p = ps[i - 1]
        resid = dirac_op(psi_i.apply(p)).apply(ident - p)
        entries.append(
            _field_entry(f"identity.repfree.P{i}", "identities", resid)
        )
    return ResidualReport(tuple(entries))


def constituent_residuals(sr: SplitResult) -> ResidualReport:
    """Residuals of the constituent systems in all four formulations.

    Three-line systems, four-line systems, the projector forms
    (gamma.p - m) P_k Psi_(k), and the projected form
    P_i gamma.p P_i Psi_(i) - m P_i Psi_(i).
    """
    backend = sr.psi.backend
    m = sr.mass
    lines1: dict = {1: [], 2: [], 3: [], 4: []}
    lines2: dict = {1: [], 2: [], 3: [], 4: []}
    for term in sr.psi1.terms:
        q0, q1, q2, q3 = _term_q(term)
        xi1, xi2, eta1, _ = term.amplitude
        qp = _q_complex(q1, q2, backend)
        qm = _q_complex(q1, q2, backend, conj=True)
        lines1[1].append((q0 + q3) * eta1 - m * xi1)
        lines1[2].append(qp * eta1 - m * xi2)
        lines1[3].append((q0 - q3) * xi1 - qm * xi2 - m * eta1)
        lines1[4].append((q0 + q3) * xi2 - qp * xi1)
    for term in sr.psi2.terms:
        q0, q1, q2, q3 = _term_q(term)
        xi1, xi2, _, eta2 = term.amplitude
        qp = _q_complex(q1, q2, backend)
        qm = _q_complex(q1, q2, backend, conj=True)
        lines2[1].append(qm * eta2 - m * xi1)
        lines2[2].append((q0 - q3) * eta2 - m * xi2)
        lines2[3].append((q0 - q3) * xi1 - qm * xi2)
        lines2[4].append(-qp * xi1 + (q0 + q3) * xi2 - m * eta2)

    entries = [
        _scalar_entry("constituent1.line1", "constituent1", backend, lines1[1]),
        _scalar_entry("constituent1.line2", "constituent1", backend, lines1[2]),
        _scalar_entry("constituent1.line3", "constituent1", backend, lines1[3]),
        _scalar_entry("constituent2.line1", "constituent2", backend, lines2[1]),
        _scalar_entry("constituent2.line2", "constituent2", backend, lines2[2]),
        _scalar_entry("constituent2.line4", "constituent2", backend, lines2[4]),
        _scalar_entry("constituent1-4.line4", "constituent1/4", backend, lines1[4]),
        _scalar_entry("constituent2-4.line3", "constituent2/4", backend, lines2[3]),
    ]

    ps = _projectors_for(sr.rep, backend)
    for i, psi_i in ((1, sr.psi1), (2, sr.psi2)):
        p = ps[i - 1]
        projected = psi_i.apply(p)
        entries.append(
            _field_entry(
                f"constituent{i}-P.dirac", f"constituent{i}/P",
                dirac_residual(projected, m),
            )
        )
        # P_i gamma.p P_i Psi_(i) = m P_i Psi_(i)
        resid = dirac_op(projected).apply(p) - projected.scale(m)
        entries.append(
            _field_entry(f"constituents3.P{i}", "constituents/3", resid)
        )
    return ResidualReport(tuple(entries))


def transported_constituent_residuals(sr: SplitResult, rep_to: GammaRep) -> ResidualReport:
    """Basis-independent constituent checks in another representation.

    Fields are transported with the pinned integer intertwiner W (an
    overall scale, so exact zeros stay exact) and the projector forms
    are re-evaluated against rep_to's own gamma matrices and projectors.
    """
    w, _ = intertwiner_pair(sr.rep, rep_to)
    backend = sr.psi.backend
    if backend == FLOAT:
        w = w.to_float()
    ps = _projectors_for(rep_to, backend)
    ident = Matrix.identity(4, backend)
    entries = []
    for i, psi_i in ((1, sr.psi1), (2, sr.psi2)):
        moved = PlaneWaveField(
            psi_i.apply(w).terms, rep=rep_to, ncomp=4, backend=backend
        )
        p = ps[i - 1]
        projected = moved.apply(p)
        entries.append(
            _field_entry(
                f"transport.{rep_to.name}.constituent{i}-P", f"constituent{i}/P",
                dirac_residual(projected, sr.mass),
            )
        )
        resid3 = dirac_op(projected).apply(p) - projected.scale(sr.mass)
        entries.append(
            _field_entry(
                f"transport.{rep_to.name}.constituents3.P{i}", "constituents/3", resid3
            )
        )
        resid_id = dirac_op(projected).apply(ident - p)
        entries.append(
            _field_entry(
                f"transport.{rep_to.name}.identities.P{i}", "identities", resid_id
            )
        )
    return ResidualReport(tuple(entries))


# -- Weyl ----------------------------------------------------------------------


def _pauli(backend: str, k: int) -> Matrix:
    m = PAULI[k]
    return m if backend == EXACT else m.to_float()


def sigma_momentum_op(f: PlaneWaveField, sign: int) -> PlaneWaveField:
    """(p^0 + sign * sigma.p) acting on a 2-component field."""
    if f.ncomp != 2:
        raise ValueError("sigma.p acts on 2-component fields")
    acc = momentum_op(f, 0)
    for k in (1, 2, 3):
        piece = momentum_op(f, k).apply(_pauli(f.backend, k - 1))
        acc = acc + piece if sign > 0 else acc - piece
    return acc


def _to_spinor_basis(f: PlaneWaveField) -> PlaneWaveField:
    """Rotate a bispinor field into the spinor basis with the exact W.

    The transport is W-scaled (norm 2 or 4), not unitary; residual
    magnitudes pick up that bounded factor, exact zeros are unaffected.
    """
    if f.rep is None or f.rep.name == "spinor":
        return f
    w, _ = intertwiner_pair(f.rep, build_rep("spinor"))
    if f.backend == FLOAT:
        w = w.to_float()
    return PlaneWaveField(
        f.apply(w).terms, rep=build_rep("spinor"), ncomp=4, backend=f.backend
    )


def weyl_residuals(f: PlaneWaveField, *, check_mass: bool = True) -> ResidualReport:
    """Residuals of the massless chiral equations.

    The two-component forms (p0 + sigma.p) eta = 0, (p0 - sigma.p) xi = 0
    evaluated on the chiral halves (in the spinor basis), plus the
    bispinor forms gamma.p Q-+ f = 0.

    ``check_mass=False`` lets a massive field through as a negative
    control; the residuals are then expected to be large.
    """
    if check_mass:
        for t in f.terms:
            if not scalar_is_zero(t.momentum.mass):
                raise WeylRequiresMassless("field carries a massive term")
    qset = build_projectors(f.rep) if f.rep is not None else None
    if qset is None:
        raise ValueError("field carries no representation")
    q_minus, q_plus = qset.q_minus, qset.q_plus
    if f.backend == FLOAT:
        q_minus, q_plus = q_minus.to_float(), q_plus.to_float()

    fs = _to_spinor_basis(f)
    eta = lower_half(fs)
    xi = upper_half(fs)
    entries = (
        _field_entry("weyl.eta", "Weyl1", sigma_momentum_op(eta, +1)),
        _field_entry("weyl.xi", "Weyl2", sigma_momentum_op(xi, -1)),
        _field_entry("weyl.bispinor.Qminus", "DiracNeutrino", dirac_op(f.apply(q_minus))),
        _field_entry("weyl.bispinor.Qplus", "DiracNeutrino", dirac_op(f.apply(q_plus))),
    )
    return ResidualReport(entries)


# -- Majorana --------------------------------------------------------------------


def majorana_build(psi: PlaneWaveField) -> PlaneWaveField:
    """Self-conjugate combination Psi + C Psi."""
    return psi + charge_conjugate(psi)


def majorana_residuals(f: PlaneWaveField, mass, *, tol: float = _DEFAULT_TOL) -> ResidualReport:
    """Residuals of the self-conjugacy condition and the Majorana system.

    Verifies f = C f, then in the spinor basis the coupled equations
    (p0 + sigma.p) eta = -i m sigma2 eta*, (p0 - sigma.p) xi = +i m
    sigma2 xi*, and the component relations xi = -i sigma2 eta*,
    eta = +i sigma2 xi*.  Raises "not-majorana" when self-conjugacy
    fails; the component checks require the spinor basis.
    """
    selfconj = f - charge_conjugate(f)
    if f.backend == EXACT:
        if not selfconj.is_zero:
            raise NotMajorana("field is not invariant under charge conjugation")
    elif selfconj.max_abs() > tol:
        raise NotMajorana(
            f"charge-conjugation residual {selfconj.max_abs():.3e} > {tol}"
        )
    if f.rep is None or f.rep.name != "spinor":
        raise SplitRequiresSpinorRep(
            "Majorana component checks are pinned to the spinor basis"
        )
    backend = f.backend
    s2 = _pauli(backend, 1)
    i_m = GaussianRational(0, mass) if backend == EXACT else complex(0, mass)
    i_one = GaussianRational(0, 1) if backend == EXACT else 1j

    eta = lower_half(f)
    xi = upper_half(f)
    r1 = sigma_momentum_op(eta, +1) + conjugate(eta).apply(s2).scale(i_m)
    r2 = sigma_momentum_op(xi, -1) - conjugate(xi).apply(s2).scale(i_m)
    rxi = xi + conjugate(eta).apply(s2).scale(i_one)
    reta = eta - conjugate(xi).apply(s2).scale(i_one)
    entries = (
        _field_entry("majorana.selfconj", "MAJORANA", selfconj),
        _field_entry("majorana.eq1", "Majorana1", r1),
        _field_entry("majorana.eq2", "Majorana2", r2),
        _field_entry("majorana.xi-consistency", "MAJORANA", rxi),
        _field_entry("majorana.eta-consistency", "MAJORANA", reta),
    )
    return ResidualReport(entries)
