"""
Divisor-class enumeration and the two effectivity engines
=========================================================

Everything downstream rests on two independent decision procedures for
"is this class effective": peeling off negative curves until Riemann-Roch
takes over, and dynamic programming over the monoid generated by the
low-square classes.  They are built from different principles and must
agree class by class.
"""

import itertools

from k3picard import (classes_with, effective_oracle, elliptic_pencils,
                      is_effective, nonconnected_decompositions, pair)
from k3picard.registry import REGISTRY

m = REGISTRY["L_VI"]

# All (-2)-classes of degree two: the single fixed curve of this lattice.
print("roots of degree 2:", classes_with(m, 2, -2))

# Degree-4 isotropic classes: (1,0) is a pencil, (1,2) is effective but
# sits on the wrong side of the root, so it is not nef and not a pencil.
print("degree-4 pencils:", elliptic_pencils(m, 4))
print("(1,2) effective:", is_effective(m, (1, 2)),
      " yet pencils of degree 8:", elliptic_pencils(m, 8))

# Cross-check the two engines over a small box.
cache = None
checked = disagreements = 0
for v in itertools.product(range(-6, 7), repeat=2):
    if abs(pair(m, v, m.H)) > 20:
        continue
    checked += 1
    want, cache = effective_oracle(m, v, cache)
    if want != is_effective(m, v):
        disagreements += 1
print("box classes checked: %d, disagreements: %d" % (checked, disagreements))

# The polarization is 1-connected: no effective splitting H = A1 + A2
# with A1.A2 <= 0 exists.  The class below does split.
dec, cache = nonconnected_decompositions(m, m.H, cache=cache)
print("splittings of H:", dec)
d = (1, 2)
dec, cache = nonconnected_decompositions(m, d, cache=cache)
print("splittings of (1,2):", dec)
