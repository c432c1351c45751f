"""
On-shell spinors and their Lorentz transformation
=================================================

Build u(p, xi) in the chiral basis, check the Dirac equation, then boost a
rest-frame spinor and compare with the spinor built directly at the new
momentum.
"""
import numpy as np

from spinor_epr import dirac, lorentz

# a particle at rest: u = sqrt(m) (xi, xi)
u_rest = dirac.u_spinor(dirac.on_shell(1.0), "up")
print("rest spinor:", u_rest.components.real)

# boost along x with beta = 0.6, so E = 1.25 and p = 0.75
t = lorentz.boost_from_beta("x", 0.6)
p = t.vector_rep @ u_rest.momentum
print("boosted momentum:", np.round(p, 12))

moved = lorentz.transform_spinor(t, u_rest)
direct = dirac.u_spinor(p, "up")
print("S u_rest:        ", np.round(moved.components.real, 6))
print("u(Lambda p, up): ", np.round(direct.components.real, 6))
print("max difference:   %.1e" % np.max(np.abs(moved.components - direct.components)))

# normalization follows the energy, the Dirac equation still holds
print("u^dagger u = %.6f (2E = %.6f)" % (moved.norm2(), 2 * p[0]))
print("Dirac residual: %.1e" % dirac.dirac_residual(moved))

# the spinor map is not unitary for boosts but intertwines the gamma matrices
s = t.spinor_rep
print("|S^dagger S - 1| = %.3f" % np.max(np.abs(s.conj().T @ s - np.eye(4))))
print("intertwining deviation: %.1e" % lorentz.intertwining_deviation(t))

# a full turn flips the sign of every spinor
print("S(2 pi) = -1:", np.allclose(lorentz.rotation("z", 2 * np.pi).spinor_rep, -np.eye(4)))
