#!/usr/bin/env python3
# Riemannian-submersion invariants from a single point's bracket table.
#
# With an orthonormal frame split vertical/horizontal, the second
# fundamental form, mean curvature and fibration curvature are plain
# contractions of the structure constants.

import numpy as np

from ncgcurv.submersion import (
    canned_frame,
    jacobi_residual,
    submersion_invariants,
)

for label, frame in [
    ("heisenberg", canned_frame("heisenberg")),
    ("round hopf fibration", canned_frame("hopf", lam=1.0)),
    ("berger sphere lam=2", canned_frame("hopf", lam=2.0)),
    ("warped torus f=2 f'=1", canned_frame("warped_torus", f=2.0, fprime=1.0)),
]:
    inv = submersion_invariants(frame)
    print(f"== {label}  (dim {frame.dim_total}, fiber {frame.dim_fiber})")
    print("   S_pi:", inv.S_pi.ravel().tolist())
    print("   k:   ", inv.k.tolist())
    print("   Omega[i][j][a] nonzero:",
          {(i, j, a): float(inv.Omega[i, j, a])
           for i in range(frame.dim_horizontal)
           for j in range(frame.dim_horizontal)
           for a in range(frame.dim_fiber)
           if abs(inv.Omega[i, j, a]) > 0})
    print("   jacobi residual: %.1e" % jacobi_residual(frame))
    print()

# The Berger family: scaling the vertical frame vector by lam scales the
# fibration curvature linearly while the fibres stay totally geodesic.
print("berger family: lam -> Omega(f1, f2; e)")
for lam in (0.5, 1.0, 2.0, 4.0):
    inv = submersion_invariants(canned_frame("hopf", lam=lam))
    print(f"  lam = {lam:>3}:  Omega = {inv.Omega[0, 1, 0]:+.1f}   |S_pi| = "
          f"{np.max(np.abs(inv.S_pi)):.1f}")
