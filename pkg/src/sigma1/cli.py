"""Batch command-line front end.

One verb per module operation; results go to stdout (text, json, svg or
csv), diagnostics to stderr.  Exit codes: 0 computed, 2 input error,
3 precondition violation.
"""

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from . import bounds, brown, characters, combinators, oracle, raag, regions
from .errors import InputError, PreconditionError, SigmaError
from .words import parse_presentation, parse_word


def _frac(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError("bad rational %r" % text, module="cli")


def _parse_chi(text):
    return tuple(_frac(part.strip()) for part in text.split(","))


def _frac_str(x):
    return str(Fraction(x))


def _load_presentation(args):
    if getattr(args, "inline", None):
        return parse_presentation(args.inline)
    if getattr(args, "presentation", None):
        with open(args.presentation) as fh:
            return parse_presentation(fh.read())
    raise InputError("need --presentation FILE or --inline '<...>'",
                     module="cli")


def _load_graph(args):
    name = args.graph
    if name is None:
        raise InputError("need --graph NAME|FILE", module="cli")
    try:
        return raag.named_graph(name)
    except InputError:
        pass
    try:
        with open(name) as fh:
            return raag.parse_graph_text(fh.read())
    except OSError as exc:
        raise InputError("graph %r is neither a known name nor a readable "
                         "file (%s)" % (name, exc), module="cli")


def _load_json_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read JSON from %r: %s" % (path, exc),
                         module="cli")


def _complement_from_json(data):
    return combinators.ComplementData.make(
        int(data["n"]),
        [tuple(tuple(int(x) for x in row) for row in u)
         for u in data.get("subspheres", [])],
        [tuple(int(x) for x in p) for p in data.get("points", [])])


def _parse_rows(text):
    rows = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        rows.append(tuple(int(x) for x in part.replace(",", " ").split()))
    return tuple(rows)


def _parse_model(spec):
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "gpq":
            p, q = (int(x) for x in parts[1].split(","))
            return oracle.build_gpq(p, q)
        if kind == "free":
            return oracle.build_free(int(parts[1]))
        if kind == "abelian":
            return oracle.build_free_abelian(int(parts[1]))
        if kind == "raag":
            return oracle.build_raag(raag.named_graph(":".join(parts[1:])))
    except (IndexError, ValueError) as exc:
        raise InputError("bad model spec %r: %s" % (spec, exc), module="cli")
    raise InputError("unknown model %r (use gpq:p,q free:n abelian:n "
                     "raag:<graph>)" % spec, module="cli")


def _model_letter_name(model, letter):
    g, s = letter
    names = getattr(model, "generator_names", None)
    name = names[g] if names else "x%d" % g
    return name if s == 1 else name + "^-1"


def _region_payload(region):
    return region.to_json_dict()


def _arcs_csv(region):
    lines = ["start_x,start_y,end_x,end_y,start_closed,end_closed"]
    if isinstance(region, regions.ArcUnionRegion):
        arcs, points = region.arcs_and_points()
        for a, b, fc, tc in arcs:
            lines.append("%d,%d,%d,%d,%s,%s" % (
                a.vector[0], a.vector[1], b.vector[0], b.vector[1],
                str(fc).lower(), str(tc).lower()))
    return "\n".join(lines) + "\n"


def _format_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)):
                lines.append("%s%s:" % (pad, k))
                lines.append(_format_text(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, v))
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join("%s- %s" % (pad, json.dumps(item))
                         for item in payload)
    return "%s%s" % (pad, payload)


def _emit(args, payload, region=None):
    out = args.out
    if out == "json":
        report = {
            "command": args.verb,
            "inputs_digest": hashlib.sha256(
                json.dumps(payload.get("inputs", {}), sort_keys=True)
                .encode()).hexdigest(),
            "result": payload["result"],
            "timing_ms": payload["timing_ms"],
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True))
    elif out == "svg":
        if region is None:
            raise PreconditionError("svg output needs a region result",
                                    module="cli")
        print(regions.region_to_svg(region))
    elif out == "csv":
        if region is None:
            raise PreconditionError("csv output needs a region result",
                                    module="cli")
        sys.stdout.write(_arcs_csv(region))
    else:
        print(_format_text(payload["result"]))
    return 0


def _wrap(args, inputs, result, region=None):
    payload = {
        "inputs": inputs,
        "result": result,
        "timing_ms": round((time.perf_counter() - args._t0) * 1000.0, 3),
    }
    return _emit(args, payload, region)


def _cmd_rank(args):
    p = _load_presentation(args)
    rank, basis = characters.abelianization(p)
    torsion = characters.abelianization_torsion(p)
    result = {
        "rank": rank,
        "torsion": torsion,
        "character_basis": [[_frac_str(x) for x in row] for row in basis],
        "sphere_dim": rank - 1,
    }
    return _wrap(args, {"presentation": repr(p)}, result)


def _cmd_track(args):
    p = _load_presentation(args)
    chi = characters.Character.for_presentation(p, _parse_chi(args.chi))
    if args.word:
        words = [("word", parse_word(args.word, p.generator_names))]
    else:
        words = [("relator %d" % i, r) for i, r in enumerate(p.relators)]
    tracks = []
    for label, w in words:
        t = characters.track(w, chi)
        stats = characters.cyclic_min_stats(t) if len(t) else None
        entry = {"of": label,
                 "values": [_frac_str(x) for x in t]}
        if stats:
            entry.update({
                "min": _frac_str(stats.min_value),
                "positions": list(stats.positions),
                "multiplicity": stats.multiplicity,
                "consecutive": stats.consecutive,
            })
        tracks.append(entry)
    return _wrap(args, {"presentation": repr(p), "chi": args.chi},
                 {"tracks": tracks})


def _cmd_brown(args):
    p = _load_presentation(args)
    kind = brown.classify_one_relator(p)
    if args.full:
        region = brown.one_relator_region(p)
        result = {"classification": kind.value,
                  "region": _region_payload(region)}
        return _wrap(args, {"presentation": repr(p)}, result, region=region)
    if args.chi is None:
        raise InputError("point test needs --chi (or use --full)",
                         module="cli")
    chi = _parse_chi(args.chi)
    if kind is brown.OneRelatorClass.TWO_GEN_BOTH_LETTERS:
        member = brown.brown_point_test(p.relators[0], chi)
    elif kind is brown.OneRelatorClass.CYCLIC:
        member = True
    else:
        member = False
    result = {"member": member, "classification": kind.value}
    return _wrap(args, {"presentation": repr(p), "chi": args.chi}, result)


def _bound_common(args, big):
    p = _load_presentation(args)
    symmetrize = not args.no_symmetrize
    n = p.n_generators
    if args.full:
        fn = bounds.big_psi_full_circle if big else bounds.psi_full_circle
        region = fn(p, symmetrize=symmetrize)
        result = {"region": _region_payload(region)}
        return _wrap(args, {"presentation": repr(p)}, result, region=region)
    if args.chi is None:
        raise InputError("point test needs --chi (or use --full)",
                         module="cli")
    chi = _parse_chi(args.chi)
    if big:
        res = bounds.big_psi_point_test(p.relators, chi, n, symmetrize)
        result = {
            "member": res.member,
            "graph": {
                "vertices": [_letter_name(p, v) for v in res.graph.vertices],
                "edges": [sorted(_letter_name(p, v) for v in e)
                          for e in res.graph.edges],
            },
            "zero_witnesses": {
                p.generator_names[x]: w.relator_index
                for x, w in res.zero_certs.items()},
        }
    else:
        res = bounds.psi_point_test(p.relators, chi, n, symmetrize)
        result = {"member": res.member}
        if res.member:
            result["t"] = _letter_name(p, res.t)
            result["witness_relators"] = sorted(
                {w.relator_index for w in res.witnesses.values()})
    return _wrap(args, {"presentation": repr(p), "chi": args.chi}, result)


def _letter_name(p, letter):
    g, s = letter
    name = p.generator_names[g]
    return name if s == 1 else name + "^-1"


def _cmd_psi(args):
    return _bound_common(args, big=False)


def _cmd_bigpsi(args):
    return _bound_common(args, big=True)


def _cmd_raag(args):
    g = _load_graph(args)
    if args.subverb == "minsep":
        seps = raag.minimal_separating_subsets(g, strategy=args.strategy)
        classes = raag.separator_size_classes(g, seps)
        result = {
            "count": len(seps),
            "size_classes": {str(k): v for k, v in sorted(classes.items())},
            "separators": [sorted(s) for s in seps],
        }
        return _wrap(args, {"graph": args.graph}, result)
    if args.subverb == "region":
        region = raag.raag_complement(g)
        result = {"region": _region_payload(region)}
        return _wrap(args, {"graph": args.graph}, result, region=region)
    if args.subverb == "corank":
        result = {"corank": raag.max_fg_corank(g)}
        return _wrap(args, {"graph": args.graph}, result)
    if args.subverb == "normal":
        rows = raag.explicit_normal_subgroup(g)
        result = {"rows": [list(r) for r in rows], "verified": True}
        return _wrap(args, {"graph": args.graph}, result)
    if args.subverb == "point":
        if args.chi is None:
            raise InputError("raag point needs --chi", module="cli")
        member = raag.raag_point_test(g, _parse_chi(args.chi))
        return _wrap(args, {"graph": args.graph, "chi": args.chi},
                     {"member": member})
    raise InputError("unknown raag subverb %r" % args.subverb, module="cli")


def _cmd_product(args):
    c1 = _complement_from_json(_load_json_file(args.c1))
    c2 = _complement_from_json(_load_json_file(args.c2))
    region = combinators.product_complement(c1, c2)
    return _wrap(args, {"c1": args.c1, "c2": args.c2},
                 {"region": _region_payload(region)}, region=region)


def _cmd_wreath(args):
    region = combinators.wreath_complement(args.nh, args.nq)
    return _wrap(args, {"nh": args.nh, "nq": args.nq},
                 {"region": _region_payload(region)}, region=region)


def _cmd_join(args):
    data = _load_json_file(args.parts)
    flags = [bool(x) for x in data["parts"]]
    witnesses = {}
    for w in data.get("witnesses", []):
        witnesses[(int(w["u"]), int(w["v"]))] = [
            _frac(str(x)) for x in w["values"]]
    member = combinators.join_test(flags, witnesses)
    return _wrap(args, {"parts": args.parts},
                 {"member": member, "sufficient_only": True})


def _cmd_normal_test(args):
    data = _load_json_file(args.complement)
    comp = _complement_from_json(data)
    if comp.points:
        raise PreconditionError(
            "normal-test works with subsphere complements only",
            module="combinators")
    if args.image_file:
        rows = tuple(tuple(int(x) for x in row)
                     for row in _load_json_file(args.image_file))
    else:
        rows = _parse_rows(args.image)
    ok = combinators.fg_normal_test(
        [u for u in comp.subspaces], rows, comp.n)
    return _wrap(args, {"complement": args.complement},
                 {"finitely_generated_certified": ok})


def _cmd_supplement(args):
    if args.subspaces_file:
        subs = [tuple(tuple(int(x) for x in row) for row in u)
                for u in _load_json_file(args.subspaces_file)]
    else:
        subs = [_parse_rows(part) for part in args.subspaces.split("|")]
    n = args.n
    supp = combinators.simultaneous_supplement(subs, n)
    corank = combinators.max_corank(subs, n)
    return _wrap(args, {"n": n},
                 {"basis": [list(r) for r in supp.basis],
                  "codim": n - supp.dim, "corank": corank})


def _cmd_oracle(args):
    model = _parse_model(args.model)
    chi = _parse_chi(args.chi)
    if args.probe:
        if not args.band:
            raise InputError("--probe needs --band lo,hi", module="cli")
        lo, hi = (part.strip() for part in args.band.split(","))
        rep = oracle.connectivity_probe(model, chi, args.radius,
                                        (_frac(lo), _frac(hi)))
        result = {
            "diagnostic": rep.diagnostic,
            "radius": rep.radius,
            "band": [_frac_str(rep.band[0]), _frac_str(rep.band[1])],
            "n_elements": rep.n_elements,
            "n_components": rep.n_components,
            "identity_component_size": rep.identity_component_size,
            "components_touching_boundary":
                rep.components_touching_boundary,
        }
        return _wrap(args, {"model": args.model, "chi": args.chi}, result)
    cert = oracle.certificate_search(model, chi, args.radius)
    if cert is None:
        result = {"found": False, "radius": args.radius,
                  "caveat": "no certificate at this radius; non-membership "
                            "is NOT established"}
        known = model.known_membership(
            characters.as_rationals(chi))
        if known is not None:
            result["known_membership"] = known
    else:
        result = {
            "found": True,
            "radius": args.radius,
            "t": _model_letter_name(model, cert.t),
            "paths": {
                _model_letter_name(model, y):
                    " ".join(_model_letter_name(model, l) for l in w)
                    if w else "1"
                for y, w in sorted(cert.words.items())},
        }
    return _wrap(args, {"model": args.model, "chi": args.chi}, result)


def _cmd_wirtinger(args):
    rows = []
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = args.triples.replace(";", "\n")
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise InputError("bad wirtinger line %r (want: j beta sigma)"
                             % ln, module="cli")
        rows.append((int(parts[0]), int(parts[1]), int(parts[2])))
    rows.sort()
    m = len(rows)
    if [r[0] for r in rows] != list(range(1, m + 1)):
        raise InputError("crossing indices must be 1..m", module="cli")
    beta = [r[1] - 1 for r in rows]
    sigma = [r[2] for r in rows]
    if any(not 0 <= b < m for b in beta):
        raise InputError("beta indices must be 1..m", module="cli")
    gp, gm, fp, fm = bounds.wirtinger_graphs(m, beta, sigma)

    def graph_json(g):
        adj = {v: [] for v in g.vertices}
        for e in g.edges:
            tup = tuple(e)
            u, v = (tup[0], tup[0]) if len(tup) == 1 else tup
            adj[u].append(v)
            adj[v].append(u)
        return {str(v + 1): sorted(x + 1 for x in adj[v])
                for v in g.vertices}

    result = {
        "plus": {"adjacency": graph_json(gp), "member": fp},
        "minus": {"adjacency": graph_json(gm), "member": fm},
    }
    return _wrap(args, {"triples": rows}, result)


def _cmd_deficiency(args):
    p = _load_presentation(args)
    cert = bounds.emptiness_by_deficiency(p)
    if cert is None:
        result = {"empty_invariant_certified": False}
    else:
        result = {"empty_invariant_certified": True, "case": cert.case}
        if cert.prime is not None:
            result["prime"] = cert.prime
        if cert.power_indices:
            result["power_relators"] = list(cert.power_indices)
            result["exponents"] = list(cert.exponents)
    return _wrap(args, {"presentation": repr(p)}, result)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="sigma",
        description="Exact computations around the connectivity invariant "
                    "of finitely generated groups.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(sp, presentation=False, chi=False, graph=False):
        sp.add_argument("--out", choices=("text", "json", "svg", "csv"),
                        default="text")
        sp.add_argument("--jobs", type=int, default=1,
                        help="reserved; computations run sequentially")
        if presentation:
            sp.add_argument("--presentation", metavar="FILE")
            sp.add_argument("--inline", metavar="'<a b | ...>'")
        if chi:
            sp.add_argument("--chi", metavar="q1,q2,...")
        if graph:
            sp.add_argument("--graph", metavar="NAME|FILE")

    sp = sub.add_parser("rank", help="abelianization rank and basis")
    common(sp, presentation=True)
    sp.set_defaults(func=_cmd_rank)

    sp = sub.add_parser("track", help="prefix-value tracks of relators")
    common(sp, presentation=True, chi=True)
    sp.add_argument("--word", help="track this word instead of relators")
    sp.set_defaults(func=_cmd_track)

    sp = sub.add_parser("brown", help="one-relator point test / full circle")
    common(sp, presentation=True, chi=True)
    sp.add_argument("--full", action="store_true")
    sp.set_defaults(func=_cmd_brown)

    for name, func in (("psi", _cmd_psi), ("bigpsi", _cmd_bigpsi)):
        sp = sub.add_parser(name, help="lower-bound point test / full circle")
        common(sp, presentation=True, chi=True)
        sp.add_argument("--full", action="store_true")
        sp.add_argument("--no-symmetrize", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("raag", help="graph-group computations")
    sp.add_argument("subverb",
                    choices=("region", "minsep", "corank", "normal", "point"))
    common(sp, chi=True, graph=True)
    sp.add_argument("--strategy", choices=("auto", "direct", "components"),
                    default="auto")
    sp.set_defaults(func=_cmd_raag)

    sp = sub.add_parser("product", help="invariant of a direct product")
    common(sp)
    sp.add_argument("--c1", required=True, metavar="JSON_FILE")
    sp.add_argument("--c2", required=True, metavar="JSON_FILE")
    sp.set_defaults(func=_cmd_product)

    sp = sub.add_parser("wreath", help="invariant of a wreath product")
    common(sp)
    sp.add_argument("--nh", type=int, required=True)
    sp.add_argument("--nq", type=int, required=True)
    sp.set_defaults(func=_cmd_wreath)

    sp = sub.add_parser("join", help="witness-based join membership")
    common(sp)
    sp.add_argument("--parts", required=True, metavar="JSON_FILE")
    sp.set_defaults(func=_cmd_join)

    sp = sub.add_parser("normal-test",
                        help="finite generation of a normal subgroup")
    common(sp)
    sp.add_argument("--complement", required=True, metavar="JSON_FILE")
    sp.add_argument("--image", metavar="'1 0 1 0; 0 1 0 1'")
    sp.add_argument("--image-file", metavar="JSON_FILE")
    sp.set_defaults(func=_cmd_normal_test)

    sp = sub.add_parser("supplement", help="simultaneous supplement")
    common(sp)
    sp.add_argument("--subspaces", metavar="'rows|rows'")
    sp.add_argument("--subspaces-file", metavar="JSON_FILE")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_supplement)

    sp = sub.add_parser("oracle", help="certificate search / probe")
    common(sp, chi=True)
    sp.add_argument("--model", required=True, metavar="gpq:1,2")
    sp.add_argument("--radius", type=int, default=6)
    sp.add_argument("--probe", action="store_true")
    sp.add_argument("--band", metavar="lo,hi")
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("wirtinger", help="knot-diagram letter graphs")
    common(sp)
    sp.add_argument("--file", metavar="FILE")
    sp.add_argument("--triples", metavar="'1 3 1; 2 1 -1; ...'")
    sp.set_defaults(func=_cmd_wirtinger)

    sp = sub.add_parser("deficiency", help="emptiness by deficiency")
    common(sp, presentation=True)
    sp.set_defaults(func=_cmd_deficiency)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.jobs < 1:
        print("sigma: --jobs must be >= 1", file=sys.stderr)
        return 2
    args._t0 = time.perf_counter()
    try:
        return args.func(args)
    except InputError as exc:
        print("sigma: input error: %s" % exc, file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print("sigma: precondition violated: %s" % exc, file=sys.stderr)
        return 3
    except SigmaError as exc:
        print("sigma: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
