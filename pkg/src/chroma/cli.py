"""Command-line front end: one binary, JSON answers, fixed exit codes.

Every solver in the package sits behind a subcommand.  Results go to
standard output as JSON (keys sorted, so identical invocations produce
byte-identical output); graph generators emit CGF text instead.  Exit
status is 0 for any computed answer (including "no"), 1 for usage or
input errors, and 2 when an instance is larger than the configured
exact-search caps.

Caps come from, in increasing precedence: the library defaults, the
CHROMA_CAPS environment variable (comma-separated key=value pairs with
keys ``vertices`` and ``models``), and the --cap-vertices/--cap-models
flags.  --cap-vertices N sets the general host ceiling to N; patterns
of at most 4 vertices get twice that, matching the default ratio.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .cgf import load_cgf, serialize_cgf
from .classifier import is_crucial
from .core import CapExceeded, Caps, ColorfulGraph, DEFAULT_CAPS
from .duality import cover_number, half_integral_witness, pack_number
from .families import (crossing_paths, make_grid, make_wall, rainbow,
                       segregated_grid, universal_family)
from .linkage import Linkage, menger, multicolor_linkage
from .minor import (compute_d_folio, find_colorful_minor, find_rooted_minor,
                    solve_wcdp)
from .obstructions import generate_obstructions, obstruction_count
from .reduction import decorate, reduced_minor_check
from .width import (bidimensionality, decomposition_from_json,
                    rainbow_hadwiger, rtw_exact, sbsg,
                    star_decomposition_from_json, treewidth_exact,
                    validate_decomposition, validate_star_decomposition)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; here 2 means "over caps", so
    # route usage problems to exit 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def _json_arg(text: str):
    """Inline JSON, or @path to read it from a file."""
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _resolve_caps(args) -> Caps:
    vertices = models = None
    env = os.environ.get("CHROMA_CAPS", "").strip()
    if env:
        for item in env.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, val = item.partition("=")
            if not sep:
                raise ValueError(
                    f"CHROMA_CAPS entry {item!r} is not key=value")
            key, val = key.strip(), val.strip()
            if key == "vertices":
                vertices = int(val)
            elif key == "models":
                models = int(val)
            else:
                raise ValueError(
                    f"CHROMA_CAPS key {key!r} unknown (use vertices, models)")
    if getattr(args, "cap_vertices", None) is not None:
        vertices = args.cap_vertices
    if getattr(args, "cap_models", None) is not None:
        models = args.cap_models
    caps = DEFAULT_CAPS
    if vertices is not None:
        if vertices < 1:
            raise ValueError("vertex cap must be positive")
        caps = replace(caps, host_vertices=vertices,
                       host_vertices_small_pattern=2 * vertices)
    if models is not None:
        if models < 1:
            raise ValueError("model cap must be positive")
        caps = replace(caps, max_models=models)
    return caps


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _model_json(model) -> dict | None:
    if model is None:
        return None
    return {str(pv): vs for pv, vs in model.as_dict().items()}


# ------------------------------------------------------------- handlers

def _cmd_check_minor(args, caps):
    host = load_cgf(args.host)
    pattern = load_cgf(args.pattern)
    model = find_colorful_minor(host, pattern, caps)
    _emit({"contains": model is not None, "model": _model_json(model)})


def _cmd_check_rooted(args, caps):
    host = load_cgf(args.host)
    pattern = load_cgf(args.pattern)
    model = find_rooted_minor(host, pattern,
                              _vertex_list(args.host_roots),
                              _vertex_list(args.pattern_roots), caps)
    _emit({"contains": model is not None, "model": _model_json(model)})


def _cmd_folio(args, caps):
    host = load_cgf(args.host)
    fol = compute_d_folio(host, _vertex_list(args.roots), args.d, caps)
    members = [{"cgf": serialize_cgf(g), "roots": list(r)}
               for g, r in fol.members]
    _emit({"d": fol.d, "count": len(fol), "members": members})


def _cmd_wcdp(args, caps):
    host = load_cgf(args.host)
    pairs = []
    for part in args.pairs.split(";"):
        st = _vertex_list(part)
        if len(st) != 2:
            raise ValueError(f"terminal pair {part!r} is not two vertices")
        pairs.append((st[0], st[1]))
    raw = _json_arg(args.sigmas)
    sigmas = [[frozenset(colors) for colors in sig] for sig in raw]
    trees = solve_wcdp(host, pairs, sigmas, caps)
    _emit({"feasible": trees is not None,
           "trees": None if trees is None
           else [[list(e) for e in t] for t in trees]})


def _cmd_linkage(args, caps):
    g = load_cgf(args.host)
    sets = [_vertex_list(part) for part in args.sets.split(";")]
    target = _vertex_list(args.target)
    if len(sets) == 1:
        res = menger(g, sets[0], target, args.k)
        if isinstance(res, Linkage):
            _emit({"kind": "linkage",
                   "paths": [{"set": i, "path": list(p)}
                             for i, p in res.paths]})
        else:
            _emit({"kind": "separator", "separator": sorted(res)})
    else:
        res = multicolor_linkage(g, sets, target, args.k)
        if isinstance(res, Linkage):
            _emit({"kind": "linkage",
                   "paths": [{"set": i, "path": list(p)}
                             for i, p in res.paths]})
        else:
            _emit({"kind": "separator", "indices": sorted(res.I),
                   "separator": sorted(res.S)})


def _cmd_obstructions(args, caps):
    catalog = generate_obstructions(args.q)
    os.makedirs(args.out_dir, exist_ok=True)
    members = []
    for idx, (g, tag, _) in enumerate(catalog.members):
        name = f"obstruction_{idx:03d}_{tag}.cgf"
        with open(os.path.join(args.out_dir, name), "w",
                  encoding="utf-8") as fh:
            fh.write(serialize_cgf(g))
        members.append({"file": name, "tag": tag, "n": g.n, "m": g.m})
    manifest = {"q": args.q, "count": len(catalog),
                "closed_form": obstruction_count(args.q),
                "counts_by_tag": catalog.counts_by_tag(),
                "members": members}
    with open(os.path.join(args.out_dir, "manifest.json"), "w",
              encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, indent=2, sort_keys=True))
        fh.write("\n")
    _emit(manifest)


def _cmd_classify(args, caps):
    g = load_cgf(args.graph)
    _emit(is_crucial(g, caps).as_dict())


def _cmd_generate(args, caps):
    kind = args.family
    if kind == "grid":
        g = make_grid(args.rows, args.cols, q=args.q)
    elif kind == "wall":
        g = make_wall(args.rows, args.cols)
    elif kind == "rainbow":
        g = rainbow(args.q, load_cgf(args.base))
    elif kind == "segregated":
        pi = _vertex_list(args.pi) if args.pi else None
        g = segregated_grid(args.q, args.k, pi)
    elif kind == "crossing-paths":
        g = crossing_paths(args.k)
    elif kind == "universal":
        fam = universal_family(args.q, args.k)
        os.makedirs(args.out_dir, exist_ok=True)
        members = []
        for idx, m in enumerate(fam):
            name = f"universal_{idx:03d}.cgf"
            with open(os.path.join(args.out_dir, name), "w",
                      encoding="utf-8") as fh:
                fh.write(serialize_cgf(m))
            members.append({"file": name, "n": m.n, "m": m.m})
        _emit({"q": args.q, "k": args.k, "count": len(fam),
               "members": members})
        return
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {kind!r}")
    sys.stdout.write(serialize_cgf(g))


def _cmd_tw(args, caps):
    _emit({"treewidth": treewidth_exact(load_cgf(args.graph))})


def _cmd_rtw(args, caps):
    value, apex = rtw_exact(load_cgf(args.graph))
    _emit({"rtw": value, "apex_set": sorted(apex)})


def _cmd_rh(args, caps):
    _emit({"rainbow_hadwiger": rainbow_hadwiger(load_cgf(args.graph), caps)})


def _cmd_bidim(args, caps):
    g = load_cgf(args.graph)
    _emit({"bidimensionality":
           bidimensionality(g, _vertex_list(args.x), caps)})


def _cmd_sbsg(args, caps):
    _emit({"sbsg": sbsg(load_cgf(args.graph), caps)})


def _cmd_validate_decomp(args, caps):
    g = load_cgf(args.graph)
    obj = _json_arg("@" + args.decomp)
    if args.kind == "star":
        rep = validate_star_decomposition(
            g, star_decomposition_from_json(obj))
    else:
        rep = validate_decomposition(g, decomposition_from_json(obj))
    _emit(rep.as_dict())


def _cmd_pack(args, caps):
    host = load_cgf(args.host)
    pattern = load_cgf(args.pattern)
    k, witnesses = pack_number(host, pattern, caps)
    _emit({"pack": k, "witnesses": [sorted(w) for w in witnesses]})


def _cmd_cover(args, caps):
    host = load_cgf(args.host)
    pattern = load_cgf(args.pattern)
    k, cover = cover_number(host, pattern, caps)
    _emit({"cover": k, "cover_set": sorted(cover)})


def _cmd_half_integral(args, caps):
    pi = _vertex_list(args.pi) if args.pi else None
    wit = half_integral_witness(args.q, args.k, args.r, pi)
    _emit({"size": wit.size(),
           "max_multiplicity": wit.max_multiplicity,
           "witnesses": [sorted(w) for w in wit.witnesses]})


def _cmd_decorate(args, caps):
    g = load_cgf(args.graph)
    dec = decorate(g, args.r, caps)
    manifest = {
        "r": args.r,
        "core": [list(p) for p in dec.core],
        "decorations": [{"owner": v, "color": i, "vertices": list(vs)}
                        for v, i, vs in dec.decorations],
    }
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        with open(os.path.join(args.out_dir, "decorated.cgf"), "w",
                  encoding="utf-8") as fh:
            fh.write(serialize_cgf(dec.graph))
        with open(os.path.join(args.out_dir, "manifest.json"), "w",
                  encoding="utf-8") as fh:
            fh.write(json.dumps(manifest, indent=2, sort_keys=True))
            fh.write("\n")
        _emit(manifest)
    else:
        manifest["cgf"] = serialize_cgf(dec.graph)
        _emit(manifest)


def _cmd_reduce_check(args, caps):
    host = load_cgf(args.host)
    pattern = load_cgf(args.pattern)
    _emit({"contains": reduced_minor_check(host, pattern, args.r, caps)})


# -------------------------------------------------------------- parser

def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--cap-vertices", type=int, default=None,
                        help="host-vertex ceiling for exact searches")
    common.add_argument("--cap-models", type=int, default=None,
                        help="ceiling on enumerated minimal models")
    common.add_argument("--jobs", type=int, default=1,
                        help="reserved; computations run deterministically "
                             "in-process")

    top = _Parser(prog="chroma",
                  description="exact solvers for colorful graphs")
    sub = top.add_subparsers(dest="command", metavar="SUBCOMMAND")

    p = sub.add_parser("check-minor", parents=[common],
                       help="colorful minor containment")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=_cmd_check_minor)

    p = sub.add_parser("check-rooted", parents=[common],
                       help="rooted colorful minor containment")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--host-roots", required=True,
                   help="comma-separated host vertices")
    p.add_argument("--pattern-roots", required=True,
                   help="comma-separated pattern vertices, matched by "
                        "position")
    p.set_defaults(func=_cmd_check_rooted)

    p = sub.add_parser("folio", parents=[common],
                       help="all rooted minors of bounded detail")
    p.add_argument("--host", required=True)
    p.add_argument("--roots", default="", help="comma-separated vertices")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_folio)

    p = sub.add_parser("wcdp", parents=[common],
                       help="internally disjoint colored connector trees")
    p.add_argument("--host", required=True)
    p.add_argument("--pairs", required=True,
                   help="semicolon-separated terminal pairs, e.g. 0,3;1,4")
    p.add_argument("--sigmas", required=True,
                   help="JSON list (or @file): one list of color lists "
                        "per pair")
    p.set_defaults(func=_cmd_wcdp)

    p = sub.add_parser("linkage", parents=[common],
                       help="disjoint paths or a small separator")
    p.add_argument("--host", required=True)
    p.add_argument("--sets", required=True,
                   help="semicolon-separated source sets, e.g. 0,1;2,3")
    p.add_argument("--target", required=True,
                   help="comma-separated target vertices")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_linkage)

    p = sub.add_parser("obstructions", parents=[common],
                       help="write the obstruction catalog for one q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_obstructions)

    p = sub.add_parser("classify", parents=[common],
                       help="crucial-property report for a colorful graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("generate", parents=[common],
                       help="emit a named graph family as CGF")
    gsub = p.add_subparsers(dest="family", metavar="FAMILY")
    gp = gsub.add_parser("grid", parents=[common])
    gp.add_argument("--rows", type=int, required=True)
    gp.add_argument("--cols", type=int, required=True)
    gp.add_argument("--q", type=int, default=0)
    gp.set_defaults(func=_cmd_generate, family="grid")
    gp = gsub.add_parser("wall", parents=[common])
    gp.add_argument("--rows", type=int, required=True)
    gp.add_argument("--cols", type=int, required=True)
    gp.set_defaults(func=_cmd_generate, family="wall")
    gp = gsub.add_parser("rainbow", parents=[common])
    gp.add_argument("--q", type=int, required=True)
    gp.add_argument("--base", required=True, help="CGF file to recolor")
    gp.set_defaults(func=_cmd_generate, family="rainbow")
    gp = gsub.add_parser("segregated", parents=[common])
    gp.add_argument("--q", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    gp.add_argument("--pi", default="",
                    help="color order as comma-separated permutation")
    gp.set_defaults(func=_cmd_generate, family="segregated")
    gp = gsub.add_parser("crossing-paths", parents=[common])
    gp.add_argument("--k", type=int, required=True)
    gp.set_defaults(func=_cmd_generate, family="crossing-paths")
    gp = gsub.add_parser("universal", parents=[common])
    gp.add_argument("--q", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    gp.add_argument("--out-dir", required=True)
    gp.set_defaults(func=_cmd_generate, family="universal")

    p = sub.add_parser("tw", parents=[common], help="exact treewidth")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_tw)

    p = sub.add_parser("rtw", parents=[common],
                       help="exact restricted treewidth with witness")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_rtw)

    p = sub.add_parser("rh", parents=[common],
                       help="rainbow Hadwiger number")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_rh)

    p = sub.add_parser("bidim", parents=[common],
                       help="colored-grid bidimensionality of a vertex set")
    p.add_argument("graph")
    p.add_argument("--x", required=True, help="comma-separated vertices")
    p.set_defaults(func=_cmd_bidim)

    p = sub.add_parser("sbsg", parents=[common],
                       help="largest segregated grid in the fusion")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_sbsg)

    p = sub.add_parser("validate-decomp", parents=[common],
                       help="check a decomposition against its graph")
    p.add_argument("graph")
    p.add_argument("--decomp", required=True, help="JSON sidecar file")
    p.add_argument("--kind", choices=("tree", "star"), default="tree")
    p.set_defaults(func=_cmd_validate_decomp)

    p = sub.add_parser("pack", parents=[common],
                       help="maximum disjoint packing of a pattern")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser("cover", parents=[common],
                       help="minimum vertex set meeting every model")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("half-integral", parents=[common],
                       help="half-integral packing witness in a "
                            "segregated grid")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--pi", default="",
                   help="color order as comma-separated permutation")
    p.set_defaults(func=_cmd_half_integral)

    p = sub.add_parser("decorate", parents=[common],
                       help="encode colors as marker blocks on a plain "
                            "graph")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True,
                   help="excluded clique order governing the markers")
    p.add_argument("--out-dir", default=None,
                   help="write decorated.cgf and manifest.json here "
                        "instead of inlining the CGF")
    p.set_defaults(func=_cmd_decorate)

    p = sub.add_parser("reduce-check", parents=[common],
                       help="colorful containment via the plain encoding")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_reduce_check)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 1
    if getattr(args, "jobs", 1) < 1:
        print("chroma: error: --jobs must be positive", file=sys.stderr)
        return 1
    try:
        caps = _resolve_caps(args)
        args.func(args, caps)
    except CapExceeded as exc:
        print(f"chroma: instance too large: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"chroma: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
