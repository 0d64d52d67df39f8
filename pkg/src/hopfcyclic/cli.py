"""Batch front end: check fixtures, build complexes, compute tables, pair.

Every command prints an aligned text report to stdout and can also write
a machine-readable JSON report via --output.  Exit code 0 means every
requested check or assertion passed; 1 means a check failed; 2 means the
input could not be parsed or validated.
"""

import argparse
import json
import sys

from .fields import QQ, field_by_name
from .hopf import (AlgebraData, HopfAlgebraData, ModuleAlgebra,
                   ModuleCoalgebra, ComoduleAlgebra, ComoduleCoalgebra,
                   ModComodule, EquivariantPairing, ModularPair,
                   check_structure, modular_pair_module, trivial_modcomodule)
from .cyclic import (check_axioms, cyc_algebra, cyc_coalgebra, cover_algebra,
                     cover_coalgebra, hopf_cyclic_complex,
                     hopf_cocyclic_comodule_algebra,
                     hopf_cyclic_comodule_coalgebra)
from .homology import (mixed_of_cyclic, transpose_module, cohomology_table,
                       compare_models, CHAIN)
from .pairings import (alpha, beta, xi, star, invariant_traces,
                       cyclic_cocycles, cm_char_map, cup_with_trace,
                       crossed_cup_with_trace, crossed_cocup_with_invariant,
                       coefficient_complex, diag_tensor_epi_check,
                       AgreementFailure)
from . import fixtures as fx
from . import io as hio

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# ---------------------------------------------------------------------------
# shipped fixture library


def fixture_library(field=QQ):
    """The shipped fixtures, as an ordered list of (file name, object)."""
    h2 = fx.group_algebra(field, 2)
    h3 = fx.group_algebra(field, 3)
    items = [
        ("trivial-hopf.json", fx.trivial_hopf(field)),
        ("hopf-kz2.json", h2),
        ("hopf-kz3.json", h3),
        ("hopf-sweedler.json", fx.sweedler_hopf(field)),
        ("module-algebra-dual-numbers.json", fx.dual_numbers_module_algebra(h2)),
        ("module-coalgebra-kz2-regular.json", fx.regular_module_coalgebra(h2)),
        ("comodule-algebra-kz2.json", fx.regular_comodule_algebra(h2)),
        ("comodule-coalgebra-functions-kz2.json",
         fx.function_comodule_coalgebra(h2)),
        ("modcomodule-trivial-kz2.json", trivial_modcomodule(h2)),
        ("modcomodule-modular-pair-kz2.json",
         modular_pair_module(h2, ModularPair({1: field.one},
                                             {0: field.one, 1: field.one}))),
        ("pairing-action-kz2.json",
         fx.action_pairing(fx.regular_module_coalgebra(h2),
                           fx.dual_numbers_module_algebra(h2))),
    ]
    return items


# ---------------------------------------------------------------------------
# report plumbing


def _emit(report, output):
    if output:
        with open(output, "w") as fh:
            fh.write(json.dumps(report, sort_keys=True, indent=2, default=str)
                     + "\n")


def _dims_row(mod):
    return {str(n): mod.spaces[n] for n in sorted(mod.spaces)}


def _print_dims(label, mod):
    degs = sorted(mod.spaces)
    print("%-28s %s" % (label, "  ".join("%d:%d" % (n, mod.spaces[n])
                                         for n in degs)))


# ---------------------------------------------------------------------------
# commands


def cmd_check(args):
    paths = list(args.files)
    objs = []
    if args.fixtures or not paths:
        objs = [("fixture:" + name, obj)
                for name, obj in fixture_library(args.field_obj)]
    details, ok = [], True
    for path in paths:
        try:
            objs.append((path, hio.parse_input(path, validate=False)))
        except hio.ParseError as e:
            print("%-44s PARSE ERROR: %s" % (path, e))
            return EXIT_USAGE, {"ok": False, "error": str(e)}
    for name, obj in objs:
        if isinstance(obj, hio.TraceVector):
            report = []
        else:
            report = check_structure(obj)
        status = "ok" if not report else "; ".join(report)
        ok = ok and not report
        details.append({"input": name, "kind": type(obj).__name__,
                        "failures": report})
        print("%-44s %s" % (name, status))
    return (EXIT_OK if ok else EXIT_FAIL), {"ok": ok, "checks": details}


def _load(path):
    return hio.parse_input(path)


def _build_modules(obj, m, N, buffer):
    """All complexes the input naturally supports, as (label, module)."""
    out = []
    if isinstance(obj, HopfAlgebraData):
        out.append(("Cyc(algebra)", cyc_algebra(obj.algebra, N)))
        out.append(("Cyc(coalgebra)", cyc_coalgebra(obj.coalgebra, N)))
        return out
    if isinstance(obj, AlgebraData):
        return [("Cyc(algebra)", cyc_algebra(obj, N))]
    if m is None:
        raise SystemExit("this input kind needs --coefficients MODFILE")
    if isinstance(obj, (ModuleAlgebra, ModuleCoalgebra)):
        build = (cover_algebra if isinstance(obj, ModuleAlgebra)
                 else cover_coalgebra)
        out.append(("T (cover)", build(obj, m, N)))
        out.append(("C (Hopf-cyclic)",
                    hopf_cyclic_complex(obj, m, N, buffer=buffer)))
        return out
    if isinstance(obj, ComoduleAlgebra):
        return [("C(B,M) colinear", hopf_cocyclic_comodule_algebra(obj, m, N))]
    if isinstance(obj, ComoduleCoalgebra):
        return [("C(Z,M) colinear", hopf_cyclic_comodule_coalgebra(obj, m, N))]
    raise SystemExit("cannot build complexes from kind %r" % type(obj).__name__)


def cmd_build(args):
    obj = _load(args.file)
    m = _load(args.coefficients) if args.coefficients else None
    if m is not None and not isinstance(m, ModComodule):
        raise SystemExit("--coefficients must be a modcomodule file")
    mods = _build_modules(obj, m, args.degree, args.buffer)
    details, ok = [], True
    for label, mod in mods:
        report = check_axioms(mod)
        _print_dims(label, mod)
        status = "axioms ok" if not report else "; ".join(report)
        print("%-28s %s" % ("", status))
        ok = ok and not report
        details.append({"module": label, "dims": _dims_row(mod),
                        "failures": report})
    return (EXIT_OK if ok else EXIT_FAIL), {"ok": ok, "modules": details}


def _main_module(obj, m, N, buffer):
    """The single module whose cohomology the input asks for."""
    if isinstance(obj, HopfAlgebraData):
        return cyc_algebra(obj.algebra, N)
    if isinstance(obj, AlgebraData):
        return cyc_algebra(obj, N)
    if isinstance(obj, (ModuleAlgebra, ModuleCoalgebra)):
        if m is None:
            raise SystemExit("this input kind needs --coefficients MODFILE")
        return hopf_cyclic_complex(obj, m, N, buffer=buffer)
    if isinstance(obj, ComoduleAlgebra):
        if m is None:
            raise SystemExit("this input kind needs --coefficients MODFILE")
        return hopf_cocyclic_comodule_algebra(obj, m, N)
    if isinstance(obj, ComoduleCoalgebra):
        if m is None:
            raise SystemExit("this input kind needs --coefficients MODFILE")
        return hopf_cyclic_comodule_coalgebra(obj, m, N)
    raise SystemExit("cannot compute cohomology of kind %r"
                     % type(obj).__name__)


def cmd_cohomology(args):
    obj = _load(args.file)
    m = _load(args.coefficients) if args.coefficients else None
    mod = _main_module(obj, m, args.degree, args.buffer)
    if args.model == "both":
        res = compare_models(mod)
        print(res["bicomplex"].text())
        print()
        print(res["mixed"].text())
        verdict = "agree" if res["agree"] else "DISAGREE"
        print("\nmodels %s in the stable range (n <= %d)"
              % (verdict, res["stable_range"]))
        rep = {"ok": res["agree"],
               "bicomplex": res["bicomplex"].as_dict(),
               "mixed": res["mixed"].as_dict()}
        return (EXIT_OK if res["agree"] else EXIT_FAIL), rep
    table = cohomology_table(mod, args.model)
    print(table.text())
    return EXIT_OK, {"ok": True, "table": table.as_dict()}


def cmd_compare(args):
    obj = _load(args.file)
    m = _load(args.coefficients) if args.coefficients else None
    mod = _main_module(obj, m, args.degree, args.buffer)
    if args.corrupt_b:
        # negative-control hook: damage one B entry, then re-check the
        # mixed-complex identities, which must name the failure
        mixed = mixed_of_cyclic(mod if mod.orientation != CHAIN
                                else transpose_module(mod))
        f = mixed.field
        # pick an interior degree: boundary-degree damage can fall outside
        # every checkable identity square
        degs = [n for n in sorted(mixed.B) if mixed.B[n].rows]
        deg = degs[1] if len(degs) > 1 else degs[0]
        mat = mixed.B[deg]
        mat.entries[(0, 0)] = f.add(mat.entries.get((0, 0), f.zero), f.one)
        bad = mixed.violations()
        for line in bad:
            print("corrupted B detected: %s" % line)
        ok = bool(bad)
        return (EXIT_FAIL if ok else EXIT_OK), {"ok": False, "failures": bad}
    res = compare_models(mod)
    print(res["bicomplex"].text())
    print()
    print(res["mixed"].text())
    verdict = "agree" if res["agree"] else "DISAGREE"
    print("\nmodels %s in the stable range (n <= %d)"
          % (verdict, res["stable_range"]))
    rep = {"ok": res["agree"], "bicomplex": res["bicomplex"].as_dict(),
           "mixed": res["mixed"].as_dict()}
    return (EXIT_OK if res["agree"] else EXIT_FAIL), rep


def _class_rep(cls):
    return {str(k): {str(i): str(v) for i, v in sorted(comp.items())}
            for k, comp in sorted(cls.components.items()) if comp}


def cmd_char_map(args):
    pairing = _load(args.file)
    if not isinstance(pairing, EquivariantPairing):
        raise SystemExit("char-map needs a pairing file")
    if args.coefficients:
        m = _load(args.coefficients)
    else:
        m = modular_pair_module(pairing.hopf,
                                fx.trivial_modular_pair(pairing.hopf))
    p = args.degree
    N = max(2, p) + 1
    am = alpha(pairing, m, N, buffer=args.buffer)
    y = am.target.meta["y"]
    traces = invariant_traces(y)
    if not traces:
        print("no invariant trace exists for this fixture")
        return EXIT_FAIL, {"ok": False, "error": "no invariant trace"}
    trace = traces[0]
    x = am.target.meta["x"]
    classes = cyclic_cocycles(x, p)
    print("invariant traces: %d (using the first)" % len(traces))
    print("degree-%d Hopf-cyclic cocycles: %d" % (p, len(classes)))
    details = []
    for i, cls in enumerate(classes):
        try:
            out = cm_char_map(trace, pairing, cls, alpha_mor=am,
                              buffer=args.buffer)
        except AgreementFailure as e:
            print("cocycle %d: AGREEMENT FAILURE: %s" % (i, e))
            return EXIT_FAIL, {"ok": False, "error": str(e)}
        rep = _class_rep(out)
        print("cocycle %d -> class on Cyc(A): %s" % (i, rep or "0"))
        details.append(rep)
    print("both computation routes agreed on every representative")
    return EXIT_OK, {"ok": True, "degree": p, "classes": details}


def _scenario_modules(field):
    h = fx.group_algebra(field, 2)
    m = modular_pair_module(h, fx.trivial_modular_pair(h))
    return h, m


def cmd_pair(args):
    field = args.field_obj
    h, m = _scenario_modules(field)
    details = {}
    if args.via == "trace-cup":
        pairing = fx.action_pairing(fx.regular_module_coalgebra(h),
                                    fx.dual_numbers_module_algebra(h))
        p = min(args.degree, 2)
        am = alpha(pairing, m, p + 1, buffer=args.buffer)
        trace = invariant_traces(am.target.meta["y"])[0]
        classes = cyclic_cocycles(am.target.meta["x"], p)
        for i, cls in enumerate(classes):
            via_cup = cup_with_trace(cls, trace, am)
            via_gamma = cm_char_map(trace, pairing, cls, alpha_mor=am,
                                    buffer=args.buffer)
            same = via_cup == via_gamma
            print("class %d: cup == char-map: %s" % (i, same))
            if not same:
                return EXIT_FAIL, {"ok": False}
            details["class %d" % i] = _class_rep(via_cup)
    elif args.via == "crossed":
        ma = fx.dual_numbers_module_algebra(h)
        ca = fx.regular_comodule_algebra(h)
        bm = beta(ma, ca, m, 2, buffer=args.buffer)
        bad = bm.verify()
        print("beta commutation: %s" % ("ok" if not bad else "; ".join(bad)))
        if bad:
            return EXIT_FAIL, {"ok": False, "failures": bad}
        trace = invariant_traces(bm.target.meta["y"])[0]
        cls = cyclic_cocycles(bm.source, 0)[0]
        out = crossed_cup_with_trace(cls, trace, bm)
        print("degree-0 crossed cup class: %s" % (_class_rep(out) or "0"))
        details["crossed cup"] = _class_rep(out)
    elif args.via == "cocrossed":
        zc = fx.function_comodule_coalgebra(h)
        mc = fx.regular_module_coalgebra(h)
        xm = xi(zc, mc, m, 2, buffer=args.buffer)
        bad = xm.verify()
        print("xi commutation: %s" % ("ok" if not bad else "; ".join(bad)))
        if bad:
            return EXIT_FAIL, {"ok": False, "failures": bad}
        for p in range(3):
            for i, cls in enumerate(cyclic_cocycles(xm.source, p)):
                out = crossed_cocup_with_invariant(cls, {0: field.one}, xm)
                details["p=%d class %d" % (p, i)] = _class_rep(out)
        print("cocrossed evaluations: %d classes" % len(details))
    elif args.via == "star":
        zc = fx.function_comodule_coalgebra(h)
        st = star(zc, zc, m, m, 2)
        bad = st.verify()
        print("star commutation: %s" % ("ok" if not bad else "; ".join(bad)))
        if bad:
            return EXIT_FAIL, {"ok": False, "failures": bad}
    elif args.via == "epi":
        ma = fx.dual_numbers_module_algebra(h)
        tm = trivial_modcomodule(h)
        rep = diag_tensor_epi_check(ma, ma, tm, tm, 2, buffer=args.buffer,
                                    drop_factor=args.drop_factor)
        for n, row in sorted(rep["degrees"].items()):
            print("degree %d: rank %d of %d" % (n, row["rank"],
                                                row["target_dim"]))
        if not rep["surjective"]:
            print("FAILED: reshuffling map is not surjective"
                  + (" (dropped factor)" if rep["corrupted"] else ""))
            return EXIT_FAIL, {"ok": False, "report": rep}
        print("reshuffling map surjective in every checked degree")
        details = rep
    else:
        raise SystemExit("unknown --via %r" % args.via)
    return EXIT_OK, {"ok": True, "via": args.via, "details": details}


def cmd_fixtures(args):
    import os
    outdir = args.output or "fixtures"
    os.makedirs(outdir, exist_ok=True)
    names = []
    for name, obj in fixture_library(args.field_obj):
        path = os.path.join(outdir, name)
        hio.save(obj, path)
        names.append(name)
        print(path)
    args.output = None  # --output named the directory, not a report file
    return EXIT_OK, {"ok": True, "written": names}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q",
                        help="ground field: Q or a prime (default Q)")
    common.add_argument("--degree", type=int, default=4,
                        help="truncation N, or class degree for char-map")
    common.add_argument("--buffer", type=int, default=2,
                        help="extra degrees for saturation (default 2)")
    common.add_argument("--model", choices=["bicomplex", "mixed", "both"],
                        default="both")
    common.add_argument("--sequential", action="store_true",
                        help="force deterministic sequential evaluation "
                             "(always on)")
    common.add_argument("--output", help="write a JSON report to this path")
    p = argparse.ArgumentParser(
        prog="hopfcyclic",
        description="exact cyclic and Hopf-cyclic cohomology engine")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    c = add("check", help="validate structure files or fixtures")
    c.add_argument("files", nargs="*")
    c.add_argument("--fixtures", action="store_true",
                   help="check the shipped fixture library")

    b = add("build", help="construct complexes and check axioms")
    b.add_argument("file")
    b.add_argument("--coefficients", help="modcomodule file")

    co = add("cohomology", help="cyclic cohomology table")
    co.add_argument("file")
    co.add_argument("--coefficients")

    cm = add("compare", help="bicomplex vs (b,B) model comparison")
    cm.add_argument("file")
    cm.add_argument("--coefficients")
    cm.add_argument("--corrupt-b", action="store_true",
                    help="negative control: damage B and require detection")

    ch = add("char-map", help="characteristic map, both routes")
    ch.add_argument("file", help="pairing file")
    ch.add_argument("--coefficients", help="modcomodule file (default k_(1,eps))")

    pr = add("pair", help="run a pairing scenario on the fixtures")
    pr.add_argument("--via", required=True,
                    choices=["trace-cup", "crossed", "cocrossed", "star", "epi"])
    pr.add_argument("--drop-factor", action="store_true",
                    help="negative control for --via epi")

    fxp = add("fixtures", help="write the shipped fixture library")
    return p


COMMANDS = {"check": cmd_check, "build": cmd_build,
            "cohomology": cmd_cohomology, "compare": cmd_compare,
            "char-map": cmd_char_map, "pair": cmd_pair,
            "fixtures": cmd_fixtures}


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.degree < 1:
        print("--degree must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        args.field_obj = field_by_name(args.field)
    except (ValueError, KeyError):
        print("unknown field %r" % args.field, file=sys.stderr)
        return EXIT_USAGE
    try:
        code, report = COMMANDS[args.command](args)
    except (hio.ParseError, hio.ValidationError) as e:
        print(str(e), file=sys.stderr)
        _emit({"ok": False, "error": str(e)}, args.output)
        return EXIT_USAGE
    report["command"] = args.command
    _emit(report, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
