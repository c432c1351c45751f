"""
From the amplitude to the dipole-dipole potential
=================================================

Divide out the spinor normalization, remove the Coulomb part and keep the
spin-spin terms; the result approaches the magnetic dipole kernel. The
position-space dipole interaction is also compared with its curl form.
"""
import numpy as np

from spinor_epr import qed_reduction as qr

e = 1.0
for delta in (0.04, 0.02, 0.01, 0.005):
    kernel = qr.extract_spin_potential_at(delta, e=e)
    print("|p|/m = %.3f   deviation from dipole kernel: %.2e" % (delta, qr.kernel_deviation(kernel, 1.0, e)))

kernel = qr.extract_spin_potential_at(0.01, e=e)
print("\nextracted spin-spin kernel, q along z (basis uu, ud, du, dd):")
print(np.round(kernel.matrix.real, 5))
print("analytic:")
print(np.round(qr.dipole_momentum_kernel(kernel.q, 1.0, e).real, 5))

print("\n4 pi r^3 H_dipole at r = z (m = e = 1):")
print(np.round(4 * np.pi * qr.dipole_position_hamiltonian([0, 0, 1.0], 1.0, 1.0).real, 6))
for step in (4e-3, 2e-3, 1e-3):
    print("curl form, step %.0e: deviation %.2e" % (step, qr.curl_form_check([0, 0, 1.0], step)))

# at fixed separation only the flip-flop part drives spin exchange
J = -0.01
print("\nexchange potential eigenvalues:", np.round(np.linalg.eigvalsh(qr.exchange_potential(J)), 6))
