"""Command-line surface.

Exit codes: 0 when every requested check holds, 1 when a check reports a
violation (witnesses are printed), 2 on parse or structural errors.  Output
is deterministic: instances are generated in enumeration order and results
are sorted before printing.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from . import core, io as gio, mapspace as ms
from .calculus import (comp0_pstransf, comp1_psmod, comp2_pert, whiskl_psmod,
                       whiskr_psmod)
from .errors import GraycatError, ParseError, StructuralError
from .functors import GrayFunctor, enumerate_functors, validate_functor
from .hcomp import (check_hcomp_typing, check_interchange, check_pasteunit,
                    hcomp)
from .transfors import (Perturbation, PseudoModification, PseudoTransformation,
                        enumerate_pert, enumerate_psmod, enumerate_pstransf,
                        rank, validate_perturbation, validate_psmod,
                        validate_pstransf)

THEOREMS = ("pasteunit", "interchange", "hcomp-typing", "L-welldef",
            "L-homomorphism", "i-naturality", "j-extranaturality")


def _load(path) -> gio.Document:
    with open(path, encoding="utf-8") as fh:
        return gio.parse(fh.read())


def _first_category(doc, path):
    for s in doc.sections:
        if s.kind == "category":
            return s.obj
    raise StructuralError(f"{path}: no category section")


def _run_instances(instances, jobs):
    """Evaluate (key, thunk) pairs, optionally across a thread pool, and
    return them sorted by key for stable output."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda kv: (kv[0], kv[1]()), instances))
    else:
        results = [(k, thunk()) for k, thunk in instances]
    return sorted(results, key=lambda kv: kv[0])


def _emit(results, notes=()):
    bad = 0
    for key, rep in results:
        if rep.ok:
            print(f"ok   {key}")
        else:
            bad += 1
            print(f"FAIL {key}")
            for v in rep.violations:
                print(f"     {v}")
    for note in notes:
        print(note)
    print(f"{len(results)} instance(s), {bad} failing")
    return 1 if bad else 0


def cmd_validate(args):
    doc = _load(args.file)
    results = []
    for s in doc.sections:
        if s.kind == "category":
            results.append((f"category {s.name}",
                            core.validate_gray_category(s.obj)))
        elif s.kind == "functor":
            results.append((f"functor {s.name}", validate_functor(s.obj)))
        elif s.kind == "pstransf":
            results.append((f"pstransf {s.name}", validate_pstransf(s.obj)))
        elif s.kind == "psmod":
            results.append((f"psmod {s.name}", validate_psmod(s.obj)))
        elif s.kind == "perturbation":
            results.append((f"perturbation {s.name}",
                            validate_perturbation(s.obj)))
    return _emit(results)


def cmd_compose(args):
    doc = _load(args.file)
    kind = {"comp0": "pstransf", "comp1": "psmod", "whiskr": None,
            "whiskl": None, "comp2": "perturbation"}
    left_kind = {"comp0": "pstransf", "comp1": "psmod", "whiskr": "pstransf",
                 "whiskl": "psmod", "comp2": "perturbation"}[args.op]
    right_kind = {"comp0": "pstransf", "comp1": "psmod", "whiskr": "psmod",
                  "whiskl": "pstransf", "comp2": "perturbation"}[args.op]
    left = doc.find(left_kind, args.left)
    right = doc.find(right_kind, args.right)
    out = {"comp0": comp0_pstransf, "comp1": comp1_psmod,
           "whiskr": whiskr_psmod, "whiskl": whiskl_psmod,
           "comp2": comp2_pert}[args.op](left, right)
    result_kind = {"comp0": "pstransf", "comp1": "psmod", "whiskr": "psmod",
                   "whiskl": "psmod", "comp2": "perturbation"}[args.op]
    doc.add(result_kind, args.name, out)
    text = gio.serialize(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_mapspace(args):
    G = _first_category(_load(args.G), args.G)
    H = _first_category(_load(args.H), args.H)
    space = ms.build_mapping_space(G, H)
    rep = core.validate_gray_category(space.space)
    text = gio.serialize(gio.document_for_space(space))
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"built {space.space.name}: "
          + " ".join(str(len(space.space.dim_cells(k))) for k in range(4))
          + f" cells, validation {'ok' if rep.ok else 'FAILED'}")
    return 0 if rep.ok else 1


def cmd_enumerate(args):
    G = _first_category(_load(args.G), args.G)
    H = _first_category(_load(args.H), args.H)
    functors = enumerate_functors(G, H)
    if args.kind == "functors":
        print(f"functors {G.name} -> {H.name}: {len(functors)}")
        return 0
    transf = []
    for Fi in functors:
        for Fj in functors:
            items = enumerate_pstransf(Fi, Fj)
            transf.extend(items)
            if args.kind == "pstransf":
                print(f"pstransf {Fi.name} -> {Fj.name}: {len(items)}")
    if args.kind == "pstransf":
        print(f"total: {len(transf)}")
        return 0
    mods = []
    for a in transf:
        for b in transf:
            if a.dom == b.dom and a.cod == b.cod:
                mods.extend(enumerate_psmod(a, b))
    if args.kind == "psmod":
        print(f"psmod over {G.name} -> {H.name}: {len(mods)}")
        return 0
    perts = []
    for A in mods:
        for B in mods:
            if A.dom == B.dom and A.cod == B.cod:
                perts.extend(enumerate_pert(A, B))
    print(f"pert over {G.name} -> {H.name}: {len(perts)}")
    return 0


def _space_cells(space, ranks):
    return [space.value_of(c) for k in ranks for c in space.space.dim_cells(k)]


def cmd_check(args):
    cats = [_first_category(_load(f), f) for f in args.files]
    jobs = args.jobs
    if args.theorem in ("pasteunit", "interchange", "hcomp-typing",
                        "L-welldef", "L-homomorphism"):
        if len(cats) != 3:
            raise StructuralError(f"check {args.theorem} wants 3 category files")
        G, H, K = cats
    if args.theorem == "pasteunit":
        hk = ms.build_mapping_space(H, K)
        gs = enumerate_functors(G, H)
        instances = [(f"pasteunit {c} {F.name}",
                      (lambda b=b, F=F: check_pasteunit(b, F)))
                     for c in hk.space.dim_cells(1)
                     for b in [hk.value_of(c)] for F in gs]
        return _emit(_run_instances(instances, jobs))
    if args.theorem == "interchange":
        hk = ms.build_mapping_space(H, K)
        gh = ms.build_mapping_space(G, H)
        ts = [hk.value_of(c) for c in hk.space.dim_cells(1)]
        als = [gh.value_of(c) for c in gh.space.dim_cells(1)]
        instances = []
        for i2, b2 in enumerate(ts):
            for i1, b1 in enumerate(ts):
                if b1.cod != b2.dom:
                    continue
                for j, a in enumerate(als):
                    instances.append(
                        (f"interchange t{i2} t{i1} a{j}",
                         lambda b2=b2, b1=b1, a=a: check_interchange(b2, b1, a)))
        return _emit(_run_instances(instances, jobs))
    if args.theorem == "hcomp-typing":
        hk = ms.build_mapping_space(H, K)
        gh = ms.build_mapping_space(G, H)
        instances = []
        for k1 in range(4):
            for c1 in hk.space.dim_cells(k1):
                for k2 in range(4):
                    for c2 in gh.space.dim_cells(k2):
                        instances.append(
                            (f"typing ({k1},{k2}) {c1} {c2}",
                             lambda l=hk.value_of(c1), r=gh.value_of(c2):
                             check_hcomp_typing(l, r)))
        notes = [
            "note: rank-2 composites carry no composable-pair component;",
            "the questioned pair-table entries are the 1-cell components",
            "(functor image of the modification component, and the",
            "modification component at the image 1-cell), which validate.",
        ]
        return _emit(_run_instances(instances, jobs), notes)
    if args.theorem == "L-welldef":
        S1 = ms.build_mapping_space(G, H)
        S2 = ms.build_mapping_space(G, K)
        hk = ms.build_mapping_space(H, K)
        return _emit([("L-welldef", ms.check_L_welldef(S1, S2, hk))])
    if args.theorem == "L-homomorphism":
        S1 = ms.build_mapping_space(G, H)
        S2 = ms.build_mapping_space(G, K)
        hk = ms.build_mapping_space(H, K)
        ts = [hk.value_of(c) for c in hk.space.dim_cells(1)]
        instances = []
        for i2, b2 in enumerate(ts):
            for i1, b1 in enumerate(ts):
                if b1.cod == b2.dom:
                    instances.append(
                        (f"L-homomorphism t{i2} t{i1}",
                         lambda b2=b2, b1=b1:
                         ms.check_L_homomorphism(S1, S2, b2, b1)))
        return _emit(_run_instances(instances, jobs))
    if args.theorem == "i-naturality":
        G = cats[0]
        H = cats[1] if len(cats) > 1 else G
        from .fixtures import terminal_category
        one = terminal_category()
        S_g = ms.build_mapping_space(one, G)
        S_h = S_g if H is G else ms.build_mapping_space(one, H)
        instances = [(f"i-naturality {F.name}",
                      lambda F=F: ms.check_i_naturality(S_g, S_h, F))
                     for F in enumerate_functors(G, H)]
        return _emit(_run_instances(instances, jobs))
    if args.theorem == "j-extranaturality":
        G = cats[0]
        H = cats[1] if len(cats) > 1 else G
        S_gg = ms.build_mapping_space(G, G)
        S_hh = S_gg if H is G else ms.build_mapping_space(H, H)
        S_gh = S_gg if H is G else ms.build_mapping_space(G, H)
        instances = [(f"j-extranaturality {F.name}",
                      lambda F=F: ms.check_j_extranatural(S_gg, S_hh, S_gh, F))
                     for F in enumerate_functors(G, H)]
        return _emit(_run_instances(instances, jobs))
    raise StructuralError(f"unknown theorem {args.theorem!r}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="graycat",
        description="validate finite Gray-categories and machine-check the "
                    "mapping-space calculus on them")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker threads for check instances")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate every section of a file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("compose", help="apply a composite or whisker")
    p.add_argument("op", choices=("comp0", "comp1", "whiskr", "whiskl", "comp2"))
    p.add_argument("file")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--name", default="result")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("mapspace", help="build and serialize a mapping space")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_mapspace)

    p = sub.add_parser("enumerate", help="count transfors between two categories")
    p.add_argument("kind", choices=("functors", "pstransf", "psmod", "pert"))
    p.add_argument("G")
    p.add_argument("H")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("check", help="machine-check a statement on fixtures")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=cmd_check)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, StructuralError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraycatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
