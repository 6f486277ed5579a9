"""
Section ladders and scroll types of the trigonal family
=======================================================

A polarized K3 lattice with a degree-3 elliptic pencil E cuts out trigonal
hyperplane curves.  The dimensions h0(H - jE) step down a ladder, the
ladder differences give the type of the 3-dimensional scroll swept out by
the pencil, and a generic hyperplane slice of that scroll is the familiar
2-dimensional scroll of the trigonal curve.
"""

from k3picard import (cohomology_dims, elliptic_pencils,
                      generic_hyperplane_scroll, scroll_type)
from k3picard.lattice import vscale, vsub
from k3picard.registry import REGISTRY

for g in range(5, 11):
    m = REGISTRY["L_T%d" % g]
    e = elliptic_pencils(m, 3)[0]

    # walk down the ladder until the sections die out
    ladder = []
    j = 0
    while True:
        h = cohomology_dims(m, vsub(m.H, vscale(j, e))).h0
        ladder.append(h)
        if h == 0:
            break
        j += 1

    t = scroll_type(m, e)
    hyper = generic_hyperplane_scroll(t)
    print("genus %2d: ladder %-18s scroll %-12s hyperplane %s"
          % (g, ladder, t, hyper))

# The genus-7 lattice L_I carries three extra (-2)-curves on top of the
# pencil; they flatten the ladder tail and unbalance the scroll.
m = REGISTRY["L_I"]
e = elliptic_pencils(m, 3)[0]
t = scroll_type(m, e)
print("L_I     : scroll %s hyperplane %s" % (t, generic_hyperplane_scroll(t)))
