"""Command line interface.

Subcommands:

  classify <model|name>... [--format human|machine]
  verify <model|name> [--max-degree N] [--format human|machine]
  h0 <model|name> --class "<expr>" [--format human|machine]
  registry list [--format human|machine]

A model argument is either a registry name (see `registry list`) or a path
to a JSON model file.  Exit status: 0 on success, 1 on a usage error, 2 on
an invalid or unreadable model, 3 on a failed verification check or an
internal consistency assertion.
"""

import argparse
import dataclasses
import json
import os
import sys

from . import registry
from .classify import InvalidModelError, classify_model
from .cohomology import RestrictionEstimate, cohomology_dims
from .expr import ClassExprError, parse_class_expr, render_class_expr
from .lattice import chi_rr, genus_of, validate_model
from .modelio import ModelFileError, load_model_file


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _resolve(ref):
    if ref in registry.REGISTRY:
        return registry.get(ref), {}
    if os.path.exists(ref):
        return load_model_file(ref)
    raise ModelFileError("no registry model or model file named %r" % ref)


def _report_dict(rep):
    doc = dataclasses.asdict(rep)
    if isinstance(rep.h0_curve_twist2, RestrictionEstimate):
        doc["h0_curve_twist2"] = {"lower": rep.h0_curve_twist2.lower,
                                  "upper": rep.h0_curve_twist2.upper}
    return doc


def _print_report(m, rep):
    head = "%s: genus %d" % (rep.name, rep.genus)
    if rep.special_member:
        head += ", quasi-polarized (distinguished member)"
    print(head)
    if rep.clifford_value is not None:
        wit = ("witness %s" % render_class_expr(m, rep.clifford_witness)
               if rep.clifford_witness is not None else "no witness class")
        dm = ", gonality-jumping pencil" if rep.donagi_morrison else ""
        print("  clifford: %s, %s%s" % (rep.clifford_value, wit, dm))
    if rep.h0_surface_twist2 is not None:
        print("  surface twist -2: h0 = %d, case %s"
              % (rep.h0_surface_twist2, rep.case_label))
    curve = rep.h0_curve_twist2
    if isinstance(curve, RestrictionEstimate):
        print("  curve twist -2: h0 in [%d, %d]" % (curve.lower, curve.upper))
    else:
        kind = "special member" if rep.special_member else "general member"
        print("  curve twist -2: h0 = %d (%s)" % (curve, kind))
    if rep.comparison is not None:
        print("  comparison: %s" % rep.comparison)
    if rep.extrapolated:
        print("  note: scroll invariants extrapolated beyond verified range")
    print("  assumptions: %s" % ", ".join(rep.assumptions))
    print("  citations: %s" % ", ".join(rep.citations))


def _cmd_classify(args):
    pairs = []
    for ref in args.model:
        m, _ = _resolve(ref)
        pairs.append((m, classify_model(m, name=m.name or ref)))
    if args.format == "machine":
        doc = {"reports": [_report_dict(r) for _, r in pairs]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for m, r in pairs:
            _print_report(m, r)
    return 0


def _cmd_verify(args):
    m, _ = _resolve(args.model)
    bad = validate_model(m)
    if bad and bad != ["polarization-on-wall"]:
        raise InvalidModelError("model fails validation: %s" % ", ".join(bad))
    checks = registry.verify_model(m, max_degree=args.max_degree)
    ok = all(c[1] for c in checks)
    if args.format == "machine":
        doc = {"model": m.name or args.model, "ok": ok,
               "checks": [{"check": n, "ok": o, "detail": d}
                          for n, o, d in checks]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("%s: %d checks" % (m.name or args.model, len(checks)))
        for n, o, d in checks:
            print("  [%s] %s: %s" % ("ok" if o else "FAIL", n, d))
    return 0 if ok else 3


def _cmd_h0(args):
    m, sidecar = _resolve(args.model)
    d = parse_class_expr(m, args.cls, extra=sidecar.get("classes", {}))
    dims = cohomology_dims(m, d)
    if args.format == "machine":
        doc = {"model": m.name or args.model, "class": args.cls,
               "coords": list(d), "h0": dims.h0, "h1": dims.h1,
               "h2": dims.h2, "chi": chi_rr(m, d)}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("%s on %s: h0 = %d, h1 = %d, h2 = %d (chi = %d)"
              % (render_class_expr(m, d), m.name or args.model,
                 dims.h0, dims.h1, dims.h2, chi_rr(m, d)))
    return 0


def _cmd_registry_list(args):
    rows = []
    for name in registry.names():
        m = registry.get(name)
        rows.append({"name": name, "rank": m.rank, "genus": genus_of(m),
                     "quasi_polarized": m.quasi_polarized})
    if args.format == "machine":
        print(json.dumps({"models": rows}, indent=2, sort_keys=True))
    else:
        for r in rows:
            mark = "  (quasi-polarized)" if r["quasi_polarized"] else ""
            print("%-22s rank %d  genus %2d%s"
                  % (r["name"], r["rank"], r["genus"], mark))
    return 0


def build_parser():
    p = _Parser(prog="k3picard",
                description="exact cohomology and classification on "
                            "polarized K3 Picard lattices")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classification report per model")
    c.add_argument("model", nargs="+")
    c.add_argument("--format", choices=("human", "machine"), default="human")
    c.set_defaults(func=_cmd_classify)

    v = sub.add_parser("verify", help="run cross-checks on one model")
    v.add_argument("model")
    v.add_argument("--max-degree", type=int, default=20, dest="max_degree")
    v.add_argument("--format", choices=("human", "machine"), default="human")
    v.set_defaults(func=_cmd_verify)

    h = sub.add_parser("h0", help="cohomology of one divisor class")
    h.add_argument("model")
    h.add_argument("--class", dest="cls", required=True,
                   metavar="EXPR", help="divisor class, e.g. \"H-2E\"")
    h.add_argument("--format", choices=("human", "machine"), default="human")
    h.set_defaults(func=_cmd_h0)

    r = sub.add_parser("registry", help="built-in model registry")
    rsub = r.add_subparsers(dest="registry_command", required=True)
    rl = rsub.add_parser("list", help="list registry models")
    rl.add_argument("--format", choices=("human", "machine"), default="human")
    rl.set_defaults(func=_cmd_registry_list)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except ClassExprError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    except (InvalidModelError, ModelFileError, ValueError) as exc:
        print("invalid model: %s" % exc, file=sys.stderr)
        return 2
    except AssertionError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
