"""Command-line front end.

One subcommand per module; JSON output is canonical (sorted keys, lists
sorted by construction) so identical invocations are byte-identical.
Exit codes: 0 success, 1 computation/cap failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms, cehomology, chow, directions, invariants, oscycle
from . import polytopes, trees, verify
from .graphs import CapExceeded, graph_to_json, graph_to_text, parse_graph


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_graph(args):
    g = parse_graph(args.graph)
    payload = graph_to_json(g)
    payload["tubes"] = len(g.tubes())
    payload["text"] = graph_to_text(g)
    _emit(args, payload, [graph_to_text(g), "tubes: %d" % payload["tubes"]])
    return 0


def _cmd_trees(args):
    g = parse_graph(args.graph)
    found = trees.enumerate_trees(g, stable_only=not args.unstable,
                                  cap=args.max_vertices or 7)
    payload = {"count": len(found)}
    if not args.count_only:
        payload["trees"] = [trees.tree_to_json(t) for t in found]
    _emit(args, payload, ["%d trees" % len(found)])
    return 0


def _cmd_ad(args):
    g = parse_graph(args.graph)
    elements = directions.enumerate_directions(
        g, args.d, ext=args.ext, cap=args.cap or 10 ** 6)
    payload = {"count": len(elements)}
    if not args.count_only:
        payload["elements"] = [directions.direction_to_json(x)
                               for x in elements]
    _emit(args, payload, ["%d directions" % len(elements)])
    return 0


def _cmd_polytope(args):
    g = parse_graph(args.graph)
    census = polytopes.fm1_census(g, cap=args.max_vertices or 8)
    lines = ["f=%s count=%d" % (",".join(map(str, e["f"])), e["count"])
             for e in census]
    _emit(args, census, lines)
    return 0


def _cmd_invariants(args):
    g = parse_graph(args.graph)
    what = args.what
    if what == "chromatic":
        payload = {"chromatic": invariants.chromatic(g)}
    elif what.startswith("betti:"):
        d = int(what.split(":", 1)[1])
        payload = {"betti": invariants.os_poincare(g, d), "d": d}
    elif what.startswith("euler:"):
        chi = int(what.split(":", 1)[1])
        payload = {"chi": chi, "euler": invariants.euler_conf(g, chi)}
    else:
        raise UsageError("unknown invariant %r" % what)
    _emit(args, payload, ["%s: %s" % (k, v) for k, v in sorted(payload.items())])
    return 0


def _cmd_os(args):
    n = args.cycle
    if args.verify:
        ok = (oscycle.bijection_check(n, 6)
              and oscycle.minimality_gap(n, 6)["minimal"] == (n >= 5)
              and oscycle.euler_hilbert_identity(n, 8))
        payload = {"n": n, "ok": ok}
        _emit(args, payload, ["os n=%d %s" % (n, "ok" if ok else "FAIL")])
        return 0 if ok else 1
    if args.chains is None:
        payload = {"n": n, "hilbert": list(oscycle.hilbert_os(n))}
        _emit(args, payload, ["hilbert: %s" % (payload["hilbert"],)])
        return 0
    found = oscycle.anick_chains(n, args.chains, cap=args.cap or 10 ** 6)
    by_degree = {}
    for chain in found:
        key = str(chain.internal_degree)
        by_degree[key] = by_degree.get(key, 0) + 1
    payload = {"n": n, "m": args.chains, "count": len(found),
               "by_internal_degree": by_degree}
    lines = ["%d chains" % len(found)] + \
        ["  s=%s: %d" % (s, c) for s, c in sorted(by_degree.items(),
                                                  key=lambda kv: int(kv[0]))]
    _emit(args, payload, lines)
    return 0


def _cmd_ce(args):
    g = parse_graph(args.graph)
    spec = args.algebra
    if spec.endswith(".json"):
        with open(spec) as fh:
            algebra = cehomology.FiniteCDGA.from_json(json.load(fh))
    else:
        algebra = cehomology.algebra_from_spec(spec)
    if args.euler_only:
        payload = {"euler": cehomology.cf_euler(g, algebra,
                                                cap=args.max_vertices or 10)}
        _emit(args, payload, ["euler: %d" % payload["euler"]])
        return 0
    betti = cehomology.conf_cs_cohomology(g, algebra,
                                          cap=args.max_vertices or 8)
    payload = {"betti": {str(k): v for k, v in sorted(betti.items())},
               "euler": sum((-1) ** k * v for k, v in betti.items())}
    lines = ["deg %s: %d" % (k, v) for k, v in sorted(
        payload["betti"].items(), key=lambda kv: int(kv[0]))]
    _emit(args, payload, lines or ["zero"])
    return 0


def _cmd_chow(args):
    g = parse_graph(args.graph)
    given = [opt for opt in (args.psi, args.h, args.verify) if opt is not None]
    if len(given) != 1:
        raise UsageError("choose exactly one of --psi, --h, --verify")
    if args.verify is not None:
        if args.verify != "prespsi":
            raise UsageError("only --verify prespsi is supported")
        if not args.parts:
            raise UsageError("--verify prespsi needs --parts, e.g. 2,2")
        shape = tuple(int(p) for p in args.parts.split(","))
        ok = chow.verify_prespsi(shape)
        _emit(args, {"ok": ok, "parts": list(shape)},
              ["prespsi %s" % ("ok" if ok else "FAIL")])
        return 0 if ok else 1
    if args.psi is not None:
        cls = (chow.psi_infinity(g) if args.psi == "inf"
               else chow.psi_class(g, int(args.psi)))
    else:
        tube = tuple(int(v) for v in args.h.split(","))
        cls = chow.h_class(g, tube)
    payload = cls.to_json()
    _emit(args, payload, ["%s: %s" % (k, v) for k, v in sorted(payload.items())]
          or ["zero"])
    return 0


def _cmd_verify(args):
    results = verify.run_all(max_vertices=args.max_vertices, seed=args.seed)
    if args.format == "json":
        print(json.dumps(results, sort_keys=True))
    else:
        for r in results:
            print("%-22s %s %6.1fs  %s" % (r["name"],
                                           "PASS" if r["ok"] else "FAIL",
                                           r["seconds"], r["detail"]))
    return 0 if all(r["ok"] for r in results) else 1


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="contractads")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("--graph", required=True,
                           help="P4, C5, K4, St3, K2,2, or n;i-j,...")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--max-vertices", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("graph", help="normalize and describe a graph")
    common(p)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("trees", help="admissible rooted trees")
    common(p)
    p.add_argument("--unstable", action="store_true",
                   help="include non-stable trees")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_trees)

    p = sub.add_parser("ad", help="weighted acyclic directions")
    common(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ext", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_ad)

    p = sub.add_parser("polytope", help="face census of direction polytopes")
    common(p)
    p.add_argument("--census", action="store_true", default=True)
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("invariants", help="chromatic and OS invariants")
    common(p)
    p.add_argument("--what", required=True,
                   help="chromatic | betti:d | euler:chi")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("os", help="cycle algebra chains and series")
    common(p, graph=False)
    p.add_argument("--cycle", type=int, required=True)
    p.add_argument("--chains", type=int, default=None)
    p.add_argument("--verify", nargs="?", const="all", default=None)
    p.set_defaults(func=_cmd_os)

    p = sub.add_parser("ce", help="configuration-space cohomology")
    common(p)
    p.add_argument("--algebra", required=True,
                   help="point | euclidean:d | wedge:g:d | file.json")
    p.add_argument("--euler-only", action="store_true")
    p.set_defaults(func=_cmd_ce)

    p = sub.add_parser("chow", help="divisor and psi classes")
    common(p)
    p.add_argument("--psi", default=None, help="vertex index or 'inf'")
    p.add_argument("--h", default=None, help="tube as comma list, e.g. 0,1,2")
    p.add_argument("--verify", default=None, help="prespsi")
    p.add_argument("--parts", default=None, help="multipartite blocks, 2,2")
    p.set_defaults(func=_cmd_chow)

    p = sub.add_parser("verify", help="run the full property suite")
    common(p, graph=False)
    p.add_argument("--all", action="store_true", default=True)
    p.set_defaults(func=_cmd_verify)

    return top


def run(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return 1
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print("computation failed: %s" % exc, file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
