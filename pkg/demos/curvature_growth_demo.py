#!/usr/bin/env python3
# Finite-rank growth proxy for curvature norms.
#
# Over a fixed triple, the curvature norm of random Hermitian connections
# on random modules grows with the number of generators; there is no
# uniform bound across the family.  This is a reported trend, not an
# asserted law: the classical unbounded-growth example lives over an
# infinite-dimensional base and is out of reach at desk scale.

import numpy as np

from ncgcurv import curvature_report
from ncgcurv.generate import random_connection, random_module, random_triple, rng_for

rng = rng_for(60221023)
st = random_triple(rng, n=4, kind="amp2")

print("generators m | median |R| | max |R|   (5 seeded draws per m)")
for m in range(1, 9):
    norms = []
    for _ in range(5):
        module = random_module(rng, st, m=m, allow_free=False)
        a = random_connection(rng, module, hermitian=True)
        norms.append(curvature_report(module, a).norm)
    print(f"{m:12d} | {np.median(norms):10.3f} | {max(norms):8.3f}")
