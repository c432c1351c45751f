"""
Tree-level scattering of two identical charged fermions
=======================================================

Evaluate the direct and exchange diagrams for centre-of-momentum elastic
kinematics, and look at the limits that matter for the spin dynamics.
"""
import numpy as np

from spinor_epr import qed_amplitude as qa

k = qa.elastic_kinematics(pmag=0.3, angle=1.0, spins_in=("up", "down"), spins_out=("up", "down"))
amp = qa.tree_amplitude(k)
print("direct   iM =", np.round(amp.direct_term, 8))
print("exchange iM =", np.round(amp.exchange_term, 8))
print("total    iM =", np.round(amp.value, 8))

# swapping the outgoing particles flips the sign
swapped = qa.tree_amplitude(k.swap_outgoing()).value
print("total after swap =", np.round(swapped, 8))

# at low momentum the no-flip direct diagram is the Coulomb kernel (2m)^2 e^2 / q^2
for delta in (0.1, 0.03, 0.01):
    k = qa.elastic_kinematics(delta, np.pi / 2)
    q = k.momentum_transfer[1:]
    born = (1j * qa.direct_amplitude(k)).real
    print("|p|/m = %.2f   born/(4 e^2/q^2) = %.6f" % (delta, born / (4 * k.e**2 / (q @ q))))

# spin flips are suppressed like (|p|/m)^2
for delta in (0.04, 0.02, 0.01):
    flip = qa.direct_amplitude(qa.elastic_kinematics(delta, 1.0, ("up", "down"), ("down", "up")))
    keep = qa.direct_amplitude(qa.elastic_kinematics(delta, 1.0, ("up", "down"), ("up", "down")))
    print("|p|/m = %.2f   |flip/keep| = %.3e" % (delta, abs(flip / keep)))

# forward scattering sits on the photon pole
try:
    qa.tree_amplitude(qa.elastic_kinematics(0.3, 0.0))
except qa.SingularKinematics as exc:
    print("angle 0:", exc)
