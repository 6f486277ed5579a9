"""Tiny linear-combination grammar for divisor classes.

expr  := term (('+' | '-') term)*
term  := [integer] label | integer

Labels are the model's basis labels; "H" always resolves to the polarization
even when it is not itself a basis vector.  A bare integer term is only
allowed to be 0.  Whitespace is ignored.
"""

import re

from .lattice import vadd, vscale

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([+-])|(\S))")


class ClassExprError(ValueError):
    pass


def _tokens(s):
    pos = 0
    out = []
    while pos < len(s):
        mt = _TOKEN.match(s, pos)
        if mt is None:
            break
        num, name, sign, junk = mt.groups()
        if junk is not None:
            raise ClassExprError("unexpected character %r in %r" % (junk, s))
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("sign", sign))
        pos = mt.end()
    return out


def parse_class_expr(m, s, extra=None):
    """Coordinates of the class described by s in the basis of m.

    extra maps additional names to coordinate vectors (for classes named in
    a model file); basis labels take precedence over it.
    """
    toks = _tokens(s)
    if not toks:
        raise ClassExprError("empty class expression")
    table = {lab: tuple(1 if j == i else 0 for j in range(m.rank))
             for i, lab in enumerate(m.basis_labels)}
    for lab, vec in (extra or {}).items():
        table.setdefault(lab, tuple(vec))
    table.setdefault("H", m.H)
    vec = (0,) * m.rank
    i = 0
    sign = 1
    first = True
    while i < len(toks):
        kind, val = toks[i]
        if kind == "sign":
            if not first and i > 0 and toks[i - 1][0] == "sign":
                raise ClassExprError("two consecutive signs in %r" % s)
            sign = -1 if val == "-" else 1
            i += 1
            if i >= len(toks):
                raise ClassExprError("dangling sign in %r" % s)
            kind, val = toks[i]
        elif not first:
            raise ClassExprError("missing '+' or '-' before %r" % (val,))
        coeff = 1
        if kind == "int":
            coeff = val
            i += 1
            if i < len(toks) and toks[i][0] == "name":
                kind, val = toks[i]
            else:
                if coeff != 0:
                    raise ClassExprError(
                        "bare integer %d is only allowed to be 0" % coeff)
                first = False
                sign = 1
                continue
        if kind != "name":
            raise ClassExprError("expected a label in %r" % s)
        if val not in table:
            raise ClassExprError("unknown label %r; basis is %s"
                                 % (val, ", ".join(m.basis_labels)))
        vec = vadd(vec, vscale(sign * coeff, table[val]))
        i += 1
        sign = 1
        first = False
    return vec


def render_class_expr(m, d_class):
    """Canonical expression for a class; parse_class_expr round-trips it."""
    parts = []
    for c, lab in zip(d_class, m.basis_labels):
        if c == 0:
            continue
        mag = abs(c)
        body = lab if mag == 1 else "%d%s" % (mag, lab)
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    head = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    return head + "".join(sg + body for sg, body in parts[1:])
