"""Even lattices of signature (1, rho-1) with a distinguished polarization.

A Model is the computational stand-in for a polarized K3 surface: an integer
Gram matrix, labels for the basis, and the coordinates of the polarization H.
The sectional genus is g = H^2/2 + 1 and Riemann-Roch on the surface reads
chi(D) = 2 + D^2/2.  Everything in this package is exact integer or rational
arithmetic; no floating point is allowed anywhere.

Validation comes in two strengths.  Structural validity (shape, symmetry,
evenness, nondegeneracy, signature, H^2 > 0) is what the cohomology engine
needs.  Full validity additionally demands H^2 >= 8 (genus at least 5, the
range the classifiers are certified for) and that H is ample for the generic
surface with this Picard lattice, i.e. no (-2)-class is orthogonal to H.
Models carrying a nef-but-not-ample class in the H slot set quasi_polarized
and are deliberately not fully valid; see cohomology.tie_break_class for how
the engine still orders their effective cone.
"""

from dataclasses import dataclass, field
from fractions import Fraction


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(k, a):
    return tuple(k * x for x in a)


def gram_times(gram, v):
    return tuple(sum(row[i] * v[i] for i in range(len(v))) for row in gram)


@dataclass(frozen=True)
class Model:
    gram: tuple
    H: tuple
    basis_labels: tuple = ()
    name: str = ""
    quasi_polarized: bool = False

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "H", tuple(int(x) for x in self.H))
        labels = tuple(self.basis_labels)
        if not labels:
            labels = tuple("e%d" % (i + 1) for i in range(len(gram)))
        object.__setattr__(self, "basis_labels", labels)

    @property
    def rank(self):
        return len(self.gram)

    @property
    def zero(self):
        return (0,) * self.rank


def pair(m, d1, d2):
    """Intersection product d1 . d2 in the lattice of m."""
    if len(d1) != m.rank or len(d2) != m.rank:
        raise ValueError("dimension mismatch: rank %d, got %d and %d"
                         % (m.rank, len(d1), len(d2)))
    gd2 = gram_times(m.gram, d2)
    return sum(x * y for x, y in zip(d1, gd2))


def chi_rr(m, d):
    """Euler characteristic chi(D) = 2 + D^2/2."""
    sq = pair(m, d, d)
    if sq % 2:
        raise ValueError("odd self-intersection %d; lattice is not even" % sq)
    return 2 + sq // 2


def genus_of(m):
    """Sectional genus g with H^2 = 2(g-1)."""
    sq = pair(m, m.H, m.H)
    if sq % 2:
        raise ValueError("odd H^2")
    return sq // 2 + 1


def inertia(gram):
    """Signature (n_plus, n_minus, n_zero) of a symmetric integer matrix.

    Symmetric congruence elimination over the rationals; fully exact.  A zero
    diagonal entry is repaired by adding a row and column that pair with it,
    which is always possible unless the remaining block is identically zero.
    """
    n = len(gram)
    a = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    plus = minus = zero = 0
    for i in range(n):
        if a[i][i] == 0:
            piv = None
            for k in range(i + 1, n):
                if a[k][k] != 0:
                    piv = k
                    break
            if piv is not None:
                a[i], a[piv] = a[piv], a[i]
                for r in range(n):
                    a[r][i], a[r][piv] = a[r][piv], a[r][i]
            else:
                off = None
                for k in range(i + 1, n):
                    if a[i][k] != 0:
                        off = k
                        break
                if off is None:
                    zero += 1
                    continue
                for j in range(n):
                    a[i][j] += a[off][j]
                for r in range(n):
                    a[r][i] += a[r][off]
        d = a[i][i]
        if d > 0:
            plus += 1
        else:
            minus += 1
        for r in range(i + 1, n):
            if a[r][i] == 0:
                continue
            f = a[r][i] / d
            for j in range(n):
                a[r][j] -= f * a[i][j]
            for c in range(n):
                a[c][r] -= f * a[c][i]
    return plus, minus, zero


_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def validate_model(m):
    """All violated invariants of m, as a list of short codes; [] when valid.

    The ampleness check (no (-2)-class orthogonal to H) delegates to the
    enumeration kernel.  Quasi-polarized models are expected to trip it.
    """
    out = []
    n = m.rank
    if any(len(row) != n for row in m.gram):
        out.append("gram-not-square")
        return out
    if any(m.gram[i][j] != m.gram[j][i] for i in range(n) for j in range(i)):
        out.append("gram-not-symmetric")
    if any(m.gram[i][i] % 2 for i in range(n)):
        out.append("gram-not-even")
    if len(m.H) != n:
        out.append("polarization-length")
        return out
    if len(set(m.basis_labels)) != n or any(
            not lab or lab[0].isdigit() or set(lab) - _IDENT_OK
            for lab in m.basis_labels):
        out.append("basis-labels")
    if "gram-not-symmetric" not in out:
        plus, minus, zero = inertia(m.gram)
        if zero:
            out.append("gram-degenerate")
        elif (plus, minus) != (1, n - 1):
            out.append("gram-signature")
    if out:
        return out
    hh = pair(m, m.H, m.H)
    if hh <= 0:
        out.append("polarization-square")
        return out
    if hh < 8:
        out.append("polarization-degree-small")
    from . import enumeration
    if enumeration.classes_with(m, 0, -2):
        out.append("polarization-on-wall")
    return out


def is_structural(m):
    """True when the cohomology engine can run on m (chamber data aside)."""
    bad = {"gram-not-square", "gram-not-symmetric", "gram-not-even",
           "gram-degenerate", "gram-signature", "polarization-length",
           "polarization-square", "basis-labels"}
    return not bad.intersection(validate_model(m))


def is_valid(m):
    return not validate_model(m)
