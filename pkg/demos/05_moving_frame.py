"""
The entanglement seen from a moving frame
=========================================

Boost and rotate the spinor EPR state and recompute its Schmidt spectrum.
Nothing changes, because on each particle's spin subspace the spinor map is
a multiple of a unitary. A map that ignores chirality breaks this, which is
what the negative-control rows show.
"""
import numpy as np

from spinor_epr import entanglement as ent
from spinor_epr import epr_state, lorentz

psi = epr_state()
moved = lorentz.transform_two_particle(lorentz.boost("x", 1.5), psi)
rep = ent.analyze(moved)
print("boost x, eta = 1.5: norm ratio %.4f (cosh^2 = %.4f)" % (moved.normalization / psi.normalization, np.cosh(1.5) ** 2))
print("  Schmidt spectrum", np.round(rep.schmidt_spectrum, 12), " entropy %.12f" % rep.entropy_bits)

rows = ent.invariance_scan(psi, ent.default_grid(), include_negative_control=True)
physical = [r for r in rows if not r.negative_control]
print("\n%d physical transforms, worst deviation %.1e" % (len(physical), max(r.max_deviation for r in physical)))
for r in rows:
    if r.negative_control:
        print("negative control (%s): entropy %.4f bits" % (r.transform["label"], r.entropy_bits))
