"""Reading and writing model files.

A model file is a JSON object with keys

    name                        optional string
    rank                        integer
    gram                        rank x rank array of even-diagonal integers
    basis_labels                optional array of identifier strings
    H                           coordinate array, or an expression string
                                over the basis labels
    polarization_not_very_ample optional boolean, marks quasi-polarized data
    classes                     optional map label -> coordinate array
    expected                    optional free-form object, carried through

All numbers must be exact integers; floats are rejected.
"""

import json

from .lattice import Model


class ModelFileError(ValueError):
    pass


def _int_list(xs, what):
    out = []
    for x in xs:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ModelFileError("%s must be exact integers, got %r" % (what, x))
        out.append(x)
    return tuple(out)


def model_from_dict(data, name=""):
    if not isinstance(data, dict):
        raise ModelFileError("model file must hold a JSON object")
    try:
        gram_raw = data["gram"]
    except KeyError:
        raise ModelFileError("missing 'gram'")
    if not isinstance(gram_raw, list) or not gram_raw:
        raise ModelFileError("'gram' must be a nonempty array of rows")
    gram = tuple(_int_list(row, "gram entries") for row in gram_raw)
    rank = data.get("rank", len(gram))
    if rank != len(gram) or any(len(row) != rank for row in gram):
        raise ModelFileError("'rank' disagrees with the gram matrix shape")
    labels = tuple(data.get("basis_labels", ()))
    if labels and len(labels) != rank:
        raise ModelFileError("%d basis labels for rank %d" % (len(labels), rank))
    quasi = bool(data.get("polarization_not_very_ample", False))
    h_raw = data.get("H")
    if h_raw is None:
        raise ModelFileError("missing 'H'")
    if isinstance(h_raw, str):
        probe = Model(gram=gram, H=(0,) * rank, basis_labels=labels,
                      name=name, quasi_polarized=quasi)
        from .expr import parse_class_expr, ClassExprError
        try:
            h = parse_class_expr(probe, h_raw)
        except ClassExprError as exc:
            raise ModelFileError("bad 'H' expression: %s" % exc)
    else:
        h = _int_list(h_raw, "'H' coordinates")
        if len(h) != rank:
            raise ModelFileError("'H' has length %d, rank is %d"
                                 % (len(h), rank))
    return Model(gram=gram, H=h, basis_labels=labels,
                 name=data.get("name", name), quasi_polarized=quasi)


def load_model_file(path):
    """(Model, sidecar dict with 'classes' and 'expected')."""
    with open(path) as fh:
        try:
            data = json.load(fh, parse_float=_reject_float)
        except json.JSONDecodeError as exc:
            raise ModelFileError("not valid JSON: %s" % exc)
    m = model_from_dict(data)
    side = {}
    classes = data.get("classes", {})
    if classes:
        side["classes"] = {lab: _int_list(v, "class coordinates")
                           for lab, v in classes.items()}
    if "expected" in data:
        side["expected"] = data["expected"]
    return m, side


def _reject_float(s):
    raise ModelFileError("non-integer number %r in model file" % s)


def model_to_dict(m):
    out = {
        "name": m.name,
        "rank": m.rank,
        "gram": [list(row) for row in m.gram],
        "basis_labels": list(m.basis_labels),
        "H": list(m.H),
    }
    if m.quasi_polarized:
        out["polarization_not_very_ample"] = True
    return out


def dump_model_file(m, path):
    with open(path, "w") as fh:
        json.dump(model_to_dict(m), fh, indent=2, sort_keys=True)
        fh.write("\n")
