"""
Entangling two spins by exchange
================================

Start from |down, up> at rest and evolve under J sigma1.sigma2. The spin is
handed back and forth; a maximally entangled state appears at 2Jt = pi/4.
"""
import numpy as np

from spinor_epr import analyze, coupling_J, epr_state, evolve
from spinor_epr import spin_dynamics as sd

c = coupling_J(r=1.0, m=1.0)
print("J = %.10e  (alpha / 4 m^2 r^3 with a minus sign)" % c.J)
print("first maximally entangled time t* = %.6f" % c.max_entanglement_time)

start = sd.product_state("down", "up")
for phase in np.linspace(0, np.pi, 9):
    state = evolve(start, c.J, phase / (2 * c.J))
    amps = state.spin_amplitudes()
    print("2Jt = %.4f  |du| = %.4f  |ud| = %.4f  entropy = %.4f bits"
          % (phase, abs(amps[sd.IDX_DU]), abs(amps[sd.IDX_UD]), analyze(state).entropy_bits))

# J < 0 here, so 2Jt = pi/4 is reached at t = -t*; at +t* the state is the
# equally entangled (|du> + i|ud>)/sqrt(2)
psi = evolve(start, c.J, np.pi / (8 * c.J))
print("\nat 2Jt = pi/4: matches the spinor EPR state to %.1e" % np.max(np.abs(psi.amplitudes - epr_state().amplitudes)))
print("spin amplitudes:", np.round(psi.spin_amplitudes(), 6))
