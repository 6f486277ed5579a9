"""Line bundle cohomology on a polarized K3 Picard lattice.

h^0 is computed by peeling fixed components: an irreducible (-2)-class that
pairs negatively with D is a fixed component of |D|, so it can be subtracted
without changing sections.  The loop terminates at 0, at a class of
nonpositive degree (not effective), at a class of square < -2 with no
negatively pairing irreducible root (not effective), or at a nef class where
h^0 = chi for positive square and h^0 = k + 1 for a k-fold elliptic pencil.
h^2 is Serre duality, h^1 the Euler identity.

Irreducibility of roots is decided by induction on degree: a reducible
effective root contains an irreducible (-2)-component of strictly smaller
degree pairing negatively with it, and conversely such a component certifies
reducibility.  For quasi-polarized models the polarization pairs to zero
with some roots, so plain degree cannot order the induction; degrees become
lexicographic pairs (D.H, D.B) against a tie-break class B chosen to pair
nonzero with every wall root and positively with the wall roots that are
basis vectors (those are the curves the model declares effective).
"""

from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .lattice import pair, gram_times, vadd, vsub, vneg, vscale, chi_rr
from . import enumeration

CohomologyDims = namedtuple("CohomologyDims", "h0 h1 h2")

_states = {}


def _state(m):
    st = _states.get(m)
    if st is None:
        b = tie_break_class(m)
        st = {
            "B": b,
            "GB": gram_times(m.gram, b) if b is not None else None,
            "GH": gram_times(m.gram, m.H),
            "irr": [],        # (lexdeg, v, gv), sorted
            "irr_set": set(),
            "irr_hmax": -1,
            "h0": {},
            "eff": {},
        }
        _states[m] = st
    return st


def tie_break_class(m):
    """Chamber tie-break for quasi-polarized models, None when H is ample.

    Deterministic: the first vector in the radius-then-lex order that pairs
    nonzero with every root orthogonal to H, positively so for the basis
    vectors among them.
    """
    walls = enumeration.classes_with(m, 0, -2)
    if not walls:
        return None
    gwalls = [gram_times(m.gram, w) for w in walls]
    basis = []
    for i in range(m.rank):
        e = tuple(1 if j == i else 0 for j in range(m.rank))
        if e in walls:
            basis.append(gram_times(m.gram, e))
    for radius in range(1, 8):
        for v in product(range(-radius, radius + 1), repeat=m.rank):
            if max(abs(x) for x in v) != radius:
                continue
            if any(sum(a * b for a, b in zip(gw, v)) == 0 for gw in gwalls):
                continue
            if any(sum(a * b for a, b in zip(ge, v)) <= 0 for ge in basis):
                continue
            return v
    raise ArithmeticError("no tie-break class found; wall set is degenerate")


def _lexdeg(st, v):
    h = sum(a * b for a, b in zip(st["GH"], v))
    if st["B"] is None:
        return (h, 0)
    return (h, sum(a * b for a, b in zip(st["GB"], v)))


def _extend_irr(m, st, hdeg):
    """Grow the irreducible root table through H-degree hdeg."""
    while st["irr_hmax"] < hdeg:
        d = st["irr_hmax"] + 1
        cands = list(enumeration.classes_with(m, d, -2))
        if d == 0:
            cands = [v for v in cands
                     if sum(a * b for a, b in zip(st["GB"], v)) > 0]
        cands.sort(key=lambda v: (_lexdeg(st, v), v))
        for v in cands:
            ld = _lexdeg(st, v)
            gv = gram_times(m.gram, v)
            reducible = False
            for ld2, w, gw in st["irr"]:
                if ld2 >= ld:
                    break
                if sum(a * b for a, b in zip(gw, v)) < 0:
                    reducible = True
                    break
            if not reducible:
                st["irr"].append((ld, v, gv))
                st["irr_set"].add(v)
        st["irr"].sort()
        st["irr_hmax"] = d


def _first_negative_root(m, st, v, hdeg):
    _extend_irr(m, st, hdeg)
    for ld, w, gw in st["irr"]:
        if ld[0] > hdeg:
            break
        if sum(a * b for a, b in zip(gw, v)) < 0:
            return w
    return None


def is_effective(m, d_class):
    """Effectivity by Riemann-Roch shortcut plus fixed-component peeling."""
    d_class = tuple(d_class)
    st = _state(m)
    memo = st["eff"]
    chain = []
    cur = d_class
    while True:
        if cur in memo:
            res = memo[cur]
            break
        if cur == m.zero:
            res = True
            break
        ld = _lexdeg(st, cur)
        if ld <= (0, 0):
            res = False
            break
        if pair(m, cur, cur) >= -2:
            res = True
            break
        root = _first_negative_root(m, st, cur, ld[0])
        if root is None:
            res = False
            break
        chain.append(cur)
        cur = vsub(cur, root)
    memo[cur] = res
    for v in chain:
        memo[v] = res
    return res


def _h0(m, d_class):
    st = _state(m)
    memo = st["h0"]
    chain = []
    cur = tuple(d_class)
    while True:
        if cur in memo:
            res = memo[cur]
            break
        if cur == m.zero:
            res = 1
            break
        ld = _lexdeg(st, cur)
        if ld <= (0, 0):
            res = 0
            break
        root = _first_negative_root(m, st, cur, ld[0])
        if root is not None:
            chain.append(cur)
            cur = vsub(cur, root)
            continue
        sq = pair(m, cur, cur)
        if sq < -2:
            res = 0
        elif sq == -2:
            # a root unpaired with every irreducible root, itself included,
            # cannot exist: it would pair -2 with itself
            raise AssertionError("peeling reached an impossible terminal root")
        elif sq == 0:
            res = gcd(*[abs(x) for x in cur]) + 1
        else:
            res = 2 + sq // 2
        break
    memo[cur] = res
    for v in chain:
        memo[v] = res
    return res


def cohomology_dims(m, d_class):
    """(h^0, h^1, h^2) of O(D); Serre for h^2, Euler identity for h^1."""
    d_class = tuple(d_class)
    h0 = _h0(m, d_class)
    h2 = _h0(m, vneg(d_class))
    h1 = h0 + h2 - chi_rr(m, d_class)
    if h1 < 0:
        raise AssertionError("negative h1; peeling engine is inconsistent")
    return CohomologyDims(h0, h1, h2)


def fixed_decomposition(m, d_class):
    """Split an effective D as (moving part, list of peeled fixed roots)."""
    d_class = tuple(d_class)
    if not is_effective(m, d_class):
        raise ValueError("class is not effective")
    st = _state(m)
    fixed = []
    cur = d_class
    while cur != m.zero:
        ld = _lexdeg(st, cur)
        root = _first_negative_root(m, st, cur, ld[0])
        if root is None:
            break
        fixed.append(root)
        cur = vsub(cur, root)
    return cur, fixed


def is_nef(m, d_class):
    """Nonnegative against every irreducible class; needs D effective or 0."""
    d_class = tuple(d_class)
    if d_class == m.zero:
        return True
    if not is_effective(m, d_class):
        raise ValueError("is_nef is only defined for effective classes")
    st = _state(m)
    hdeg = pair(m, d_class, m.H)
    _extend_irr(m, st, hdeg)
    for ld, w, gw in st["irr"]:
        if ld[0] > hdeg:
            break
        if sum(a * b for a, b in zip(gw, d_class)) < 0:
            return False
    return True


def is_base_point_free(m, d_class):
    """Free of base points; needs D effective and nef.

    For positive square the only obstruction is an elliptic pencil meeting D
    once; a nef isotropic class is a multiple of a free pencil. """
    d_class = tuple(d_class)
    if d_class == m.zero:
        return True
    if not is_nef(m, d_class):
        raise ValueError("is_base_point_free needs a nef class")
    if pair(m, d_class, d_class) == 0:
        return True
    return not enumeration.elliptic_pencils(m, 1, wrt=d_class)


def very_ample_obstruction(m, d_class):
    """None, or (code, witness) explaining why O(D) is not very ample."""
    d_class = tuple(d_class)
    if pair(m, d_class, d_class) < 8:
        raise ValueError("very-ampleness test requires D^2 >= 8")
    if not is_effective(m, d_class):
        raise ValueError("very-ampleness test requires an effective class")
    st = _state(m)
    hdeg = pair(m, d_class, m.H)
    _extend_irr(m, st, hdeg)
    for ld, w, gw in st["irr"]:
        if ld[0] > hdeg:
            break
        if sum(a * b for a, b in zip(gw, d_class)) < 0:
            return ("negative-root", w)
    contracted = enumeration.classes_with(m, 0, -2, wrt=d_class)
    if contracted:
        return ("contracted-root", contracted[0])
    for deg in (1, 2):
        pens = enumeration.elliptic_pencils(m, deg, wrt=d_class)
        if pens:
            return ("small-pencil", pens[0])
    if all(x % 2 == 0 for x in d_class):
        half = tuple(x // 2 for x in d_class)
        if pair(m, half, half) == 2:
            return ("double-genus2", half)
    return None


def is_very_ample(m, d_class):
    return very_ample_obstruction(m, d_class) is None


@dataclass(frozen=True)
class RestrictionEstimate:
    lower: int
    upper: int

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def value(self):
        return self.lower if self.exact else None


def _contracted_roots(m, st, c_class):
    out = []
    for v in enumeration.classes_with(m, 0, -2, wrt=c_class):
        if _lexdeg(st, v) <= (0, 0):
            continue
        _extend_irr(m, st, _lexdeg(st, v)[0])
        if v in st["irr_set"]:
            out.append(v)
    out.sort(key=lambda v: (_lexdeg(st, v), v))
    return out


def _reduce_mod_contracted(m, contracted, d_class):
    gcons = [gram_times(m.gram, v) for v in contracted]
    cur = tuple(d_class)
    for _ in range(100000):
        hit = None
        for v, gv in zip(contracted, gcons):
            if sum(a * b for a, b in zip(gv, cur)) < 0:
                hit = v
                break
        if hit is None:
            return cur
        cur = vsub(cur, hit)
    raise AssertionError("contracted-root reduction failed to terminate")


def _in_root_span(m, contracted, v):
    """Exact membership of v in the integer span of the contracted roots."""
    if not contracted:
        return all(x == 0 for x in v)
    k = len(contracted)
    g0 = [[Fraction(pair(m, contracted[i], contracted[j])) for j in range(k)]
          for i in range(k)]
    rhs = [Fraction(pair(m, contracted[i], v)) for i in range(k)]
    mat = [g0[i][:] + [rhs[i]] for i in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if mat[r][col] != 0), None)
        if piv is None:
            return False
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [x / pv for x in mat[col]]
        for r in range(k):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    xs = [mat[i][k] for i in range(k)]
    if any(x.denominator != 1 for x in xs):
        return False
    acc = (0,) * m.rank
    for x, w in zip(xs, contracted):
        acc = vadd(acc, vscale(int(x), w))
    return acc == tuple(v)


def _sequence_interval(m, contracted, d_class, c_class):
    dr = _reduce_mod_contracted(m, contracted, d_class)
    lo = _h0(m, dr) - _h0(m, vsub(dr, c_class))
    if lo < 0:
        raise AssertionError("restriction interval lower bound negative")
    up = lo + cohomology_dims(m, vsub(dr, c_class)).h1
    return dr, lo, up


def h0_restricted(m, d_class, c_class):
    """Bounds for h^0 of O(D) restricted to a curve in |C|.

    Three estimates are intersected: the restriction sequence for D, the
    restriction sequence for C - D pushed through Riemann-Roch on the curve,
    and, when the curve is trigonal and O_C(D) is a multiple of the gonality
    pencil modulo contracted roots, the exact scroll section count.
    """
    c_class = tuple(c_class)
    csq = pair(m, c_class, c_class)
    if csq < 8 or not is_effective(m, c_class):
        raise ValueError("restriction curve must be effective with C^2 >= 8")
    g = csq // 2 + 1
    st = _state(m)
    contracted = _contracted_roots(m, st, c_class)
    dr, lo, up = _sequence_interval(m, contracted, d_class, c_class)
    _, lo2, up2 = _sequence_interval(m, contracted, vsub(c_class, dr), c_class)
    shift = pair(m, dr, c_class) + 1 - g
    lower = max(lo, lo2 + shift, 0)
    upper = min(up, up2 + shift)
    if lower > upper:
        raise AssertionError("restriction intervals are inconsistent")
    if c_class == m.H:
        vals = []
        for e in enumeration.elliptic_pencils(m, 3):
            from .scroll import scroll_type, generic_hyperplane_scroll, \
                section_h0_from_scroll
            t2 = generic_hyperplane_scroll(scroll_type(m, e))
            dc = pair(m, dr, c_class)
            if dc % 3 == 0 and dc >= 0:
                j = dc // 3
                if _in_root_span(m, contracted, vsub(dr, vscale(j, e))):
                    vals.append(section_h0_from_scroll(t2, j) + 3 * j + 1 - g)
            rest = 2 * g - 2 - dc
            if rest % 3 == 0 and rest >= 0:
                j = rest // 3
                target = vsub(c_class, vscale(j, e))
                if _in_root_span(m, contracted, vsub(dr, target)):
                    vals.append(section_h0_from_scroll(t2, j))
        if vals:
            if len(set(vals)) != 1:
                raise AssertionError("scroll tightening routes disagree")
            v = vals[0]
            if not lower <= v <= upper:
                raise AssertionError("scroll tightening leaves the interval")
            lower = upper = v
    return RestrictionEstimate(lower, upper)
