"""
Special hyperplane members with contracted rational curves
==========================================================

When the polarization sits on a wall (a (-2)-class pairs to zero with it)
the embedding contracts a chain of rational curves and the general-member
classification does not apply.  The engine still pins down h0 of the
twice-twisted normal bundle of the distinguished curve itself, through
exact restriction intervals sharpened by the scroll of its degree-3
pencil.
"""

from k3picard import (classes_with, classify_model, h0_restricted, pair,
                      tie_break_class)
from k3picard.registry import REGISTRY

for name in ("L_JK7", "L_JK8", "L_JK9", "L_JK10"):
    m = REGISTRY[name]
    b = tie_break_class(m)
    pos = {v for v in classes_with(m, 0, -2) if pair(m, b, v) > 0}
    # the irreducible contracted curves are the walls that do not split
    # into two effective walls
    chain = [w for w in sorted(pos)
             if not any(tuple(x - y for x, y in zip(w, u)) in pos
                        for u in pos if u != w)]
    rep = classify_model(m)
    print("%s: contracted chain of length %d, h0(N_C(-2)) = %d"
          % (name, len(chain), rep.h0_curve_twist2))

# On L_JK7 the value 2 comes from restricting the elliptic pencil to the
# curve: O_C(E) is a degree-3 pencil there, and both exact-sequence routes
# agree with the scroll count.
m = REGISTRY["L_JK7"]
est = h0_restricted(m, (1, 0, 0, 0), m.H)
print("L_JK7: h0(O_C(E)) =", est.value)
