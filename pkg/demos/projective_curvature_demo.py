#!/usr/bin/env python3
# Curvature of connections on projective modules, two ways.
#
# The direct route squares the product operator and subtracts the lifted
# square; the closed formula assembles P[Dt,P][Dt,P]P + A^2 + dA.  The two
# agree to rounding, and different universal lifts of the same represented
# connection move the answer only inside the junk span.

import numpy as np

from ncgcurv import ProjectiveModule, SpectralTriple, curvature_report, junk_coset_residual
from ncgcurv.forms import junk_space
from ncgcurv.generate import junk_lift_pair, random_connection, random_module, random_triple, rng_for
from ncgcurv.glinalg import frobenius_norm

# The fixture everyone computes by hand first: p = diag(q, 1-q) over the
# two-point triple.  Its curvature is -P with spectral norm 1.
gamma = np.diag([1.0, -1.0])
q = np.diag([1.0, 0.0])
dirac = np.array([[0.0, 1.0], [1.0, 0.0]])
st = SpectralTriple(gamma, (np.eye(2), q), dirac)
p = np.zeros((2, 2, 2), dtype=complex)
p[0, 0] = [0, 1]
p[1, 1] = [1, -1]
module = ProjectiveModule(st, p, np.array([1.0, -1.0]))
report = curvature_report(module)
print("two-point module curvature diagonal:", np.real(np.diag(report.R)).round(12))
print("spectral norm:", report.norm, " route residual: %.2e" % report.route_residual)

# A random junk-rich scenario: amplified 2x2 algebra, random module and
# Hermitian connection.
rng = rng_for(2718)
st = random_triple(rng, n=4, kind="amp2")
module = random_module(rng, st)
a = random_connection(rng, module, hermitian=True)
junk = junk_space(st)
report = curvature_report(module, a, junk=junk)
print("\nrandom scenario: m =", module.m, " junk dim =", junk.dim)
print("route residual:    %.2e" % report.route_residual)
print("symmetry residual: %.2e" % report.symmetry_residual)
print("|R| =", report.norm)

# Two universal lifts of the same represented connection.
a1, a2 = junk_lift_pair(rng, module)
r1 = curvature_report(module, a1, junk=junk)
r2 = curvature_report(module, a2, junk=junk)
print("\nlifts differ by       %.3f" % frobenius_norm(r1.R - r2.R))
print("coset residual:       %.2e" % junk_coset_residual(r1.R, r2.R, module, junk=junk))
print("canonical reps agree: %.2e" % frobenius_norm(r1.junk_canonical - r2.junk_canonical))
