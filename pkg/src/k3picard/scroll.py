"""Scroll invariants of the pencil structure on a polarized model.

A degree-3 or degree-4 elliptic pencil E sweeps the embedded surface with
curves whose spans trace a rational normal scroll.  Its type (e_1 >= e_2 >=
... >= e_n), n = E.H, is determined by the h^0 ladder of H - jE.  The scroll
of a generic hyperplane section is one dimension smaller: balanced when the
type has no zero entry, and obtained by dropping a zero entry when the scroll
is a cone.  Section counts on a two-row scroll then give exact h^0 values on
trigonal curves.
"""

from dataclasses import dataclass

from .lattice import pair, vsub, vscale
from . import cohomology, enumeration


def scroll_type(m, e_pencil):
    """Scroll type of the pencil E, from the h^0 ladder of H - jE."""
    e_pencil = tuple(e_pencil)
    n = pair(m, e_pencil, m.H)
    if n not in (3, 4):
        raise ValueError("pencil degree must be 3 or 4, got %d" % n)
    if pair(m, e_pencil, e_pencil) != 0 or not cohomology.is_nef(m, e_pencil):
        raise ValueError("scroll_type needs a nef isotropic pencil class")
    ladder = []
    j = 0
    while True:
        h = cohomology._h0(m, vsub(m.H, vscale(j, e_pencil)))
        ladder.append(h)
        if h == 0:
            break
        j += 1
    d = [ladder[i] - ladder[i + 1] for i in range(len(ladder) - 1)]
    g = pair(m, m.H, m.H) // 2 + 1
    if sum(d) != g + 1:
        raise AssertionError("h^0 ladder does not sum to g + 1")
    if any(d[i] < d[i + 1] for i in range(len(d) - 1)) or any(x > n for x in d):
        raise AssertionError("h^0 ladder steps are not a scroll profile")
    e = tuple(sum(1 for x in d if x >= i) - 1 for i in range(1, n + 1))
    if sum(e) != g + 1 - n:
        raise AssertionError("scroll type does not sum to g + 1 - n")
    return e


def generic_hyperplane_scroll(t):
    """Scroll type cut out on a generic hyperplane section of the scroll.

    Balanced for a smooth scroll; a cone (trailing zero) loses one zero
    entry instead.
    """
    t = tuple(t)
    if len(t) < 2 or any(x < 0 for x in t) or list(t) != sorted(t, reverse=True):
        raise ValueError("not a scroll type: %r" % (t,))
    if t[-1] == 0:
        return t[:-1]
    s, k = sum(t), len(t) - 1
    q, r = divmod(s, k)
    return (q + 1,) * r + (q,) * (k - r)


def hyperplane_extrapolated(t):
    """True when the hyperplane rule runs outside its validated envelope."""
    t = tuple(t)
    return sum(t) > 8 or len(t) > 4


def section_h0_from_scroll(f, j):
    """h^0 of (canonical - j * gonality) on a trigonal curve on the two-row
    scroll (f1, f2); j = 0 returns the genus."""
    if len(f) != 2:
        raise ValueError("need a two-row scroll type")
    if j < 0:
        raise ValueError("negative twist")
    f1, f2 = f
    return max(f1 - j + 1, 0) + max(f2 - j + 1, 0)


@dataclass(frozen=True)
class TetragonalBs:
    b1: object
    b2: object
    b2_positive: bool


def tetragonal_b_invariants(m):
    """Discriminant splitting (b1, b2) of the degree-4 pencil fibration.

    Only defined for genus 7, 8, 9 models of Clifford index 2 all of whose
    Clifford divisors are pencils.  At genus 9 the lattice does not pin the
    splitting down; only b2 > 0 is reported.
    """
    from .classify import clifford_index
    g = pair(m, m.H, m.H) // 2 + 1
    if g not in (7, 8, 9):
        raise ValueError("b-invariants live in genus 7, 8, 9")
    verdict = clifford_index(m)
    if verdict.value != 2 or set(verdict.shapes) != {"pencil4"}:
        raise ValueError("b-invariants need Clifford index 2 realised "
                         "only by pencils")
    if g == 8:
        return TetragonalBs(2, 1, True)
    if g == 9:
        return TetragonalBs(None, None, True)
    pens = enumeration.elliptic_pencils(m, 4)
    for i in range(len(pens)):
        for j in range(i + 1, len(pens)):
            if pair(m, pens[i], pens[j]) != 2:
                continue
            for k in range(j + 1, len(pens)):
                if pair(m, pens[i], pens[k]) != 2 or \
                        pair(m, pens[j], pens[k]) != 2:
                    continue
                total = tuple(a + b + c for a, b, c in
                              zip(pens[i], pens[j], pens[k]))
                if total == m.H:
                    return TetragonalBs(2, 0, False)
    return TetragonalBs(1, 1, True)
