"""Property checks shared by the ``selftest`` command.

Each check returns a :class:`Check`. Sample sizes are smaller than in the
test suite so that ``selftest`` finishes in a few seconds.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dirac, entanglement, lorentz, qed_amplitude, qed_reduction, spin_dynamics


@dataclass(frozen=True)
class Check:
    name: str
    paper_ref: str
    passed: bool
    deviation: float
    tolerance: float

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "paper_ref": self.paper_ref,
            "pass": self.passed,
            "deviation": self.deviation,
            "tolerance": self.tolerance,
        }


def make_check(name: str, ref: str, deviation: float, tolerance: float) -> Check:
    return Check(name, ref, bool(deviation <= tolerance), float(deviation), float(tolerance))


def random_on_shell(rng: np.random.Generator, mass: float = 1.0, pmax: float = 10.0) -> np.ndarray:
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    return dirac.on_shell(mass, direction * rng.uniform(0.0, pmax * mass))


def random_xi(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def random_elastic(rng: np.random.Generator, mass: float = 1.0, e: float = 0.3) -> qed_amplitude.ScatteringKinematics:
    """Random spins, momentum and angle in the CM frame, then a random Lorentz transform.

    The transform is applied to the momenta only; spin labels are random
    two-spinors in the final frame.
    """
    pmag = rng.uniform(0.01, 3.0) * mass
    angle = rng.uniform(0.2, np.pi - 0.2)
    q_axis = rng.normal(size=3)
    plane = rng.normal(size=3)
    k = qed_amplitude.elastic_kinematics(
        pmag, angle, mass=mass, e=e, q_axis=q_axis, plane_axis=plane,
    )
    t = lorentz.random_transform(rng, max_rapidity=1.5)
    k = k.transformed(t.vector_rep)
    return k.with_spins(random_xi(rng), random_xi(rng), random_xi(rng), random_xi(rng))


def check_clifford() -> Check:
    dev = max(
        float(np.max(np.abs(dirac.anticommutator(dirac.GAMMA[m], dirac.GAMMA[n]) - 2 * dirac.METRIC[m, n] * dirac.I4)))
        for m in range(4) for n in range(4)
    )
    return make_check("clifford algebra", "Dirac equation gamma matrices", dev, 1e-14)


def check_metric(rng, n: int = 100) -> Check:
    dev = max(lorentz.metric_deviation(lorentz.random_transform(rng)) for _ in range(n))
    return make_check("metric preservation", "Lorentz transform p' = Lp", dev, 1e-12)


def check_dirac_covariance(rng, n_spinors: int = 200, n_transforms: int = 20) -> Check:
    worst = 0.0
    spinors = [dirac.u_spinor(random_on_shell(rng), random_xi(rng)) for _ in range(n_spinors)]
    for u in spinors:
        worst = max(worst, dirac.dirac_residual(u) / np.sqrt(u.norm2()))
    for _ in range(n_transforms):
        t = lorentz.random_transform(rng)
        for u in spinors[:20]:
            v = lorentz.transform_spinor(t, u)
            worst = max(worst, dirac.dirac_residual(v) / np.sqrt(v.norm2()))
    return make_check("Dirac covariance", "Dirac equation covariance", worst, 1e-9)


def check_intertwining(rng, n: int = 100) -> Check:
    dev = max(lorentz.intertwining_deviation(lorentz.random_transform(rng)) for _ in range(n))
    return make_check("intertwining S^-1 gamma S = Lambda gamma", "spinor representation", dev, 1e-10)


def check_boost_concordance(n: int = 20) -> Check:
    worst = 0.0
    rest = np.array([1.0, 0.0, 0.0, 0.0])
    for eta in np.linspace(0.0, 3.0, n):
        t = lorentz.boost("x", eta)
        for xi in ("up", "down"):
            got = lorentz.transform_spinor(t, dirac.u_spinor(rest, xi)).components
            want = dirac.u_spinor(t.vector_rep @ rest, xi).components
            worst = max(worst, float(np.max(np.abs(got - want))))
    return make_check("boosted rest spinor = direct construction", "boosted spinor along x", worst, 1e-10)


def check_antisymmetry(rng, n: int = 200) -> tuple[Check, Check, Check]:
    anti = ward = frame = 0.0
    for _ in range(n):
        k = random_elastic(rng)
        a = qed_amplitude.tree_amplitude(k)
        b = qed_amplitude.tree_amplitude(k.swap_outgoing())
        anti = max(anti, abs(a.value + b.value) / max(abs(a.value), 1e-300))
        u1, u2, u1o, u2o = k.spinors()
        for j, q in (
            (qed_amplitude.current(u1o, u1), u1o.momentum - u1.momentum),
            (qed_amplitude.current(u2o, u2), u2o.momentum - u2.momentum),
        ):
            ward = max(ward, abs(qed_amplitude.contract(q, j)) / np.linalg.norm(j))
        t = lorentz.random_transform(rng, max_rapidity=2.0)
        moved = [lorentz.transform_spinor(t, u) for u in (u1, u2, u1o, u2o)]
        a2 = qed_amplitude.tree_amplitude_from_spinors(*moved, e=k.e)
        frame = max(frame, abs(abs(a2.value) - abs(a.value)) / abs(a.value))
    return (
        make_check("exchange antisymmetry", "two-diagram amplitude, fermion statistics", anti, 1e-10),
        make_check("Ward identity q.j = 0", "vertex currents", ward, 1e-9),
        make_check("frame independence of |M|", "two-diagram amplitude", frame, 1e-8),
    )


def check_gordon() -> Check:
    p = lambda d: dirac.on_shell(1.0, [d, 0.3 * d, -0.2 * d])
    pp = lambda d: dirac.on_shell(1.0, [-0.4 * d, 0.8 * d, 0.5 * d])
    hi = qed_amplitude.gordon_check(p(0.1), pp(0.1), "up", "down")
    lo = qed_amplitude.gordon_check(p(0.05), pp(0.05), "up", "down")
    ratio = hi / lo
    return make_check("Gordon form convergence ratio", "low-momentum spatial current", abs(ratio - 4.0), 0.5)


def check_extraction(e: float) -> tuple[Check, Check]:
    d1 = qed_reduction.kernel_deviation(qed_reduction.extract_spin_potential_at(0.02, e=e), 1.0, e)
    d2 = qed_reduction.kernel_deviation(qed_reduction.extract_spin_potential_at(0.01, e=e), 1.0, e)
    return (
        make_check("dipole kernel from amplitude, delta=0.02", "dipole-dipole interaction matrix", d1, 0.05),
        make_check("dipole kernel from amplitude, delta=0.01", "dipole-dipole interaction matrix", d2, 0.025),
    )


def check_curl_form() -> tuple[Check, Check]:
    r = [0.0, 0.0, 1.0]
    d1 = qed_reduction.curl_form_check(r, 1e-3)
    d2 = qed_reduction.curl_form_check(r, 5e-4)
    order = np.log2(d1 / d2)
    return (
        make_check("curl form = tensor form", "dipole-dipole Hamiltonian", d1, 1e-5),
        make_check("curl form convergence order 2", "dipole-dipole Hamiltonian", abs(order - 2.0), 0.3),
    )


def check_exchange_spectrum(J: float) -> Check:
    vals = np.sort(np.linalg.eigvalsh(qed_reduction.exchange_potential(J)))
    want = np.sort([J, J, J, -3 * J])
    return make_check("exchange potential spectrum {J,J,J,-3J}", "effective Born potential", float(np.max(np.abs(vals - want)) / abs(J)), 1e-12)


def check_evolution(J: float, n: int = 100) -> tuple[Check, Check]:
    start = spin_dynamics.product_state("down", "up")
    worst = periodic = 0.0
    for phase in np.linspace(0.0, 2 * np.pi, n):
        t = phase / (2 * J)
        c = spin_dynamics.evolve(start, J, t).spin_amplitudes()
        want = np.zeros(4, dtype=complex)
        want[spin_dynamics.IDX_DU] = np.cos(phase)
        want[spin_dynamics.IDX_UD] = -1j * np.sin(phase)
        worst = max(worst, float(np.max(np.abs(c - want))))
        c2 = spin_dynamics.evolve(start, J, t + np.pi / J).spin_amplitudes()
        periodic = max(periodic, float(np.max(np.abs(c2 - c))))
    return (
        make_check("evolution (cos 2Jt, -i sin 2Jt)", "entangling evolution", worst, 1e-12),
        make_check("evolution period pi/J", "entangling evolution", periodic, 1e-10),
    )


def check_epr(J: float) -> tuple[Check, Check]:
    start = spin_dynamics.product_state("down", "up")
    evolved = spin_dynamics.evolve(start, J, np.pi / 4 / (2 * J))
    target = spin_dynamics.epr_state()
    comp = float(np.max(np.abs(evolved.amplitudes - target.amplitudes)))
    rep = entanglement.analyze(target)
    spread = float(np.max(np.abs(rep.schmidt_spectrum - [0.5, 0.5, 0.0, 0.0])))
    return (
        make_check("evolution at 2Jt = pi/4 gives EPR state", "spinor EPR state", comp, 1e-12),
        make_check("EPR entropy 1 bit, spectrum (1/2, 1/2)", "spinor EPR state", max(abs(rep.entropy_bits - 1.0), spread), 1e-10),
    )


def check_invariance() -> tuple[Check, Check]:
    rows = entanglement.invariance_scan(spin_dynamics.epr_state(), entanglement.default_grid())
    worst = max(r.max_deviation for r in rows)
    moving = lorentz.boost("y", 0.7).vector_rep @ np.array([1.0, 0.0, 0.0, 0.0])
    iso = max(
        entanglement.spin_subspace_isometry_deviation(t, p, 1.0)
        for t in entanglement.default_grid()
        for p in (np.array([1.0, 0.0, 0.0, 0.0]), moving)
    )
    return (
        make_check("entanglement invariant over boost/rotation grid", "entanglement in a moving frame", worst, 1e-9),
        make_check("S^dagger S proportional to identity on spin subspace", "entanglement in a moving frame", iso, 1e-10),
    )


def check_coupling() -> Check:
    # -alpha / (4 m^2 r^3) at alpha = 1/137.035999, m = r = 1
    expected = -0.25 / 137.035999
    got = spin_dynamics.coupling_J(1.0, 1.0, 1 / 137.035999).J
    return make_check("coupling constant J", "coupling constant J", abs(got - expected), 1e-8)


def run_all(seed: int = 0, alpha: float = spin_dynamics.FINE_STRUCTURE) -> list[Check]:
    rng = np.random.default_rng(seed)
    e = float(np.sqrt(4 * np.pi * alpha))
    J = spin_dynamics.coupling_J(1.0, 1.0, alpha).J
    out = [
        check_clifford(),
        check_metric(rng),
        check_dirac_covariance(rng),
        check_intertwining(rng),
        check_boost_concordance(),
        *check_antisymmetry(rng),
        check_gordon(),
        *check_extraction(e),
        *check_curl_form(),
        check_exchange_spectrum(J),
        *check_evolution(J),
        *check_epr(J),
        *check_invariance(),
        check_coupling(),
    ]
    return out
