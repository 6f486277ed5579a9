"""Exact finite enumeration of divisor classes and the effectivity oracle.

The workhorse is classes_with(m, degree, square): all lattice vectors with a
prescribed degree against a fixed positive class W and a prescribed
self-intersection.  By the Hodge index theorem the solution set lies on a
compact quadric slice, so it is finite; we enumerate it with an exact
Fincke-Pohst descent over the negative definite complement of W, using
Fraction arithmetic for the LDL data and isqrt bounds for the integer
coordinate ranges.  Leaves are accepted only on exact budget zero, so the
output is provably complete, not merely heuristic.

The effectivity oracle is an independent check on the cohomology engine:
every class with positive degree and square >= -2 is effective by
Riemann-Roch, and on a surface with ample H every effective class is a finite
sum of such generators.  Layering sums by total degree gives a dynamic
programme whose membership question never consults the peeling engine, which
is exactly what makes the cross-test in the suite meaningful.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .lattice import Model, pair, gram_times, vadd, vsub, vscale


def _extgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _unimodular_clear(c):
    """Unimodular column operations sending the form x -> x.c to (g, 0, .., 0).

    Returns (g, cols) where cols is a list of n column vectors with
    cols[0].c = g and cols[i].c = 0 for i >= 1.
    """
    n = len(c)
    cols = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    cc = list(c)
    for i in range(1, n):
        a, b = cc[0], cc[i]
        if b == 0:
            continue
        g, x, y = _extgcd(a, b)
        c0, ci = cols[0], cols[i]
        cols[0] = tuple(x * p + y * q for p, q in zip(c0, ci))
        cols[i] = tuple(-(b // g) * p + (a // g) * q for p, q in zip(c0, ci))
        cc[0], cc[i] = g, 0
    return cc[0], cols


def _size_reduce(cols, gram):
    """Lagrange-style size reduction of kernel columns; output set unchanged.

    Works with the negative of the restricted form, which is positive
    definite on the kernel of the degree functional.
    """
    cols = list(cols)
    k = len(cols)

    def ip(u, v):
        return -pair_raw(gram, u, v)

    changed = True
    rounds = 0
    while changed and rounds < 32:
        changed = False
        rounds += 1
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                den = ip(cols[j], cols[j])
                if den <= 0:
                    continue
                num = ip(cols[i], cols[j])
                # nearest integer to num/den
                t = (2 * num + den) // (2 * den) if num >= 0 else -((-2 * num + den) // (2 * den))
                if t:
                    cols[i] = vsub(cols[i], vscale(t, cols[j]))
                    changed = True
    return cols


def pair_raw(gram, a, b):
    gb = gram_times(gram, b)
    return sum(x * y for x, y in zip(a, gb))


def _ldl(a):
    """LDL^T factorisation of a positive definite Fraction matrix."""
    n = len(a)
    l = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        s = a[j][j] - sum(l[j][k] * l[j][k] * d[k] for k in range(j))
        if s <= 0:
            raise ArithmeticError("form not positive definite on the kernel")
        d[j] = s
        l[j][j] = Fraction(1)
        for i in range(j + 1, n):
            t = a[i][j] - sum(l[i][k] * l[j][k] * d[k] for k in range(j))
            l[i][j] = t / d[j]
    return l, d


def _int_range(center, radius2):
    """All integers z with (z - center)^2 <= radius2, both Fractions."""
    if radius2 < 0:
        return range(0, 0)
    # isqrt bound on the scaled square root, then adjust at the boundary
    num, den = radius2.numerator, radius2.denominator
    r_floor_num = isqrt(num * den)
    lo_num = center * den - r_floor_num
    hi_num = center * den + r_floor_num
    lo = -((-lo_num) // den) if lo_num < 0 else (lo_num + den - 1) // den
    hi = hi_num // den if hi_num >= 0 else -((-hi_num + den - 1) // den)
    while (Fraction(lo - 1) - center) ** 2 <= radius2:
        lo -= 1
    while (Fraction(lo) - center) ** 2 > radius2 and lo <= hi:
        lo += 1
    while (Fraction(hi + 1) - center) ** 2 <= radius2:
        hi += 1
    while (Fraction(hi) - center) ** 2 > radius2 and hi >= lo:
        hi -= 1
    return range(lo, hi + 1)


def _enum_quadric(a_mat, b_vec, c0):
    """Integer z with z^T A z - 2 b^T z + c0 == 0, A positive definite."""
    n = len(a_mat)
    a = [[Fraction(a_mat[i][j]) for j in range(n)] for i in range(n)]
    b = [Fraction(x) for x in b_vec]
    # centre m solves A m = b
    mat = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col] != 0)
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [x / pv for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    center = [mat[i][n] for i in range(n)]
    radius = sum(center[i] * b[i] for i in range(n)) - c0
    if radius < 0:
        return []
    l, d = _ldl(a)
    out = []
    ys = [Fraction(0)] * n

    def descend(i, budget):
        if i < 0:
            if budget == 0:
                out.append(tuple(int(ys[j]) for j in range(n)))
            return
        t = sum(l[j][i] * (ys[j] - center[j]) for j in range(i + 1, n))
        c = center[i] - t
        for z in _int_range(c, budget / d[i]):
            ys[i] = Fraction(z)
            used = d[i] * (Fraction(z) - c) ** 2
            descend(i - 1, budget - used)

    descend(n - 1, radius)
    return out


def classes_with(m, degree, square, wrt=None, size_reduce=True):
    """All classes D with D.W == degree and D^2 == square, sorted lex.

    W defaults to the polarization.  W must have positive square so that the
    Hodge index theorem makes the answer finite.
    """
    w = tuple(wrt) if wrt is not None else m.H
    if pair(m, w, w) <= 0:
        raise ValueError("reference class must have positive square")
    c = gram_times(m.gram, w)
    g, cols = _unimodular_clear(c)
    if degree % g:
        return ()
    p = vscale(degree // g, cols[0])
    kern = cols[1:]
    if not kern:
        return (p,) if pair_raw(m.gram, p, p) == square else ()
    if size_reduce:
        kern = _size_reduce(kern, m.gram)
    k = len(kern)
    s = [[pair_raw(m.gram, kern[i], kern[j]) for j in range(k)] for i in range(k)]
    a_mat = [[-s[i][j] for j in range(k)] for i in range(k)]
    b_vec = [pair_raw(m.gram, kern[i], p) for i in range(k)]
    c0 = square - pair_raw(m.gram, p, p)
    sols = _enum_quadric(a_mat, b_vec, c0)
    found = []
    for z in sols:
        v = p
        for zi, kv in zip(z, kern):
            if zi:
                v = vadd(v, vscale(zi, kv))
        found.append(v)
    found.sort()
    return tuple(found)


def elliptic_pencils(m, degree, wrt=None):
    """Primitive effective nef classes E with E^2 = 0 and E.W = degree."""
    from . import cohomology
    out = []
    for v in classes_with(m, degree, 0, wrt=wrt):
        if gcd(*[abs(x) for x in v]) != 1:
            continue
        if not cohomology.is_effective(m, v):
            continue
        if cohomology.is_nef(m, v):
            out.append(v)
    return tuple(out)


# ---------------------------------------------------------------------------
# effectivity oracle

@dataclass(frozen=True)
class MonoidCache:
    """Layered monoid of effective classes, immutable; extend copies.

    layers[d] is the frozenset of effective classes of degree exactly d,
    gens[d] the Riemann-Roch generators (square >= -2) of degree d.
    """
    model: Model
    layers: tuple = ()
    gens: tuple = ()


def _rr_generators(m, d):
    hh = pair(m, m.H, m.H)
    top = (d * d) // hh
    out = set()
    for sq in range(-2, top + 1, 2):
        out.update(classes_with(m, d, sq))
    return frozenset(out)


def _extend_cache(cache, d):
    m = cache.model
    layers = list(cache.layers)
    gens = list(cache.gens)
    if not layers:
        layers.append(frozenset([m.zero]))
        gens.append(frozenset())
    while len(layers) <= d:
        k = len(layers)
        gk = _rr_generators(m, k)
        gens.append(gk)
        new = set(gk)
        # any sum of >= 2 generators has a part of degree <= k/2
        for a in range(1, k // 2 + 1):
            ga = gens[a]
            prev = layers[k - a]
            if not ga or not prev:
                continue
            for gvec in ga:
                for mvec in prev:
                    new.add(tuple(x + y for x, y in zip(gvec, mvec)))
        layers.append(frozenset(new))
    return MonoidCache(m, tuple(layers), tuple(gens))


def effective_oracle(m, d_class, cache=None):
    """Monoid membership test for effectivity; returns (answer, cache).

    Only defined over an ample polarization: a wall class would make the
    degree layers infinite.
    """
    if cache is None or cache.model != m:
        if classes_with(m, 0, -2):
            raise ValueError("oracle needs an ample polarization "
                             "(a (-2)-class pairs to zero with H)")
        cache = MonoidCache(m)
    d_class = tuple(d_class)
    deg = pair(m, d_class, m.H)
    if deg < 0:
        return False, cache
    if deg == 0:
        return d_class == m.zero, cache
    cache = _extend_cache(cache, deg)
    return d_class in cache.layers[deg], cache


def irreducible_classes(m, max_degree, cache=None):
    """Classes of square >= -2 and degree in (0, max_degree] admitting no
    decomposition into two nonzero effective summands.  Sorted by (degree,
    coordinates).  Monotone in max_degree by construction."""
    if cache is None:
        _, cache = effective_oracle(m, m.zero)
    cache = _extend_cache(cache, max_degree)
    out = []
    for d in range(1, max_degree + 1):
        for v in sorted(cache.gens[d]):
            red = False
            for a in range(1, d):
                for avec in cache.layers[a]:
                    rest = vsub(v, avec)
                    if rest in cache.layers[d - a]:
                        red = True
                        break
                if red:
                    break
            if not red:
                out.append(v)
    out.sort(key=lambda v: (pair(m, v, m.H), v))
    return tuple(out), cache


def nonconnected_decompositions(m, d_class, max_parts_degree=None, cache=None):
    """Unordered pairs (A1, A2) of nonzero effective classes with
    A1 + A2 = D and A1.A2 <= 0, i.e. witnesses that D is not 1-connected."""
    d_class = tuple(d_class)
    ok, cache = effective_oracle(m, d_class, cache)
    if not ok:
        raise ValueError("class is not effective")
    deg = pair(m, d_class, m.H)
    bound = deg - 1 if max_parts_degree is None else min(max_parts_degree, deg - 1)
    seen = set()
    out = []
    for a in range(1, bound + 1):
        for avec in cache.layers[a]:
            rest = vsub(d_class, avec)
            if rest not in cache.layers[deg - a]:
                continue
            key = (min(avec, rest), max(avec, rest))
            if key in seen:
                continue
            seen.add(key)
            if pair(m, avec, rest) <= 0:
                out.append(key)
    out.sort()
    return tuple(out), cache
