"""Command line: construct, verify, search, pipeline and tools.

Exit codes: 0 verdict reached / all claims certified, 1 input error,
2 search budget exhausted, 3 a requested claim was refuted.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import io
from .chains import max_antichain, min_chain_cover, symmetric_chain_decomposition
from .constructions import (construct_a2_lower, construct_a3_lower, construct_layered_lower,
                            layered_cover, ramsey_bounds, verify_no_blue_antichain,
                            verify_no_red_cube)
from .embeddings import find_red_cube
from .lattice import MAX_DIM, LatticeColoring, elements, popcount
from .pipeline import BlueAntichainPresent, PipelineError, random_chain_coloring, theorem2_pipeline
from .search import DEFAULT_BUDGET, SEARCH_MAX_DIM, BudgetExhausted, default_workers, ramsey_exact
from .sequences import TripleNotFound, consistent_triple

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_REFUTED = 3


class InputError(Exception):
    pass


def render_lattice(c: LatticeColoring) -> str:
    """Layered picture of a small coloring, top layer first, ``B``/``R`` marks."""
    if c.n > 5:
        return f"(Q_{c.n}: {len(c.blue_vertices())} blue of {1 << c.n} vertices)"
    lines = []
    for i in range(c.n, -1, -1):
        cells = []
        for v in range(1 << c.n):
            if popcount(v) == i:
                name = "{" + ",".join(str(e) for e in elements(v)) + "}"
                cells.append(f"{name}:{'B' if c.is_blue(v) else 'R'}")
        lines.append(f"{i:>2} | " + "  ".join(cells))
    return "\n".join(lines)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _positive(name: str, value, lo: int = 1, hi: int | None = None) -> int:
    if value is None:
        raise InputError(f"--{name} is required")
    if value < lo or (hi is not None and value > hi):
        bound = f" and at most {hi}" if hi is not None else ""
        raise InputError(f"--{name} must be at least {lo}{bound}")
    return value


def _load_coloring(path: str) -> LatticeColoring:
    try:
        obj = io.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    # accept plain colorings, search witnesses and search results
    if isinstance(obj, dict) and "witness" in obj and "blue" not in obj:
        obj = obj["witness"]
    if isinstance(obj, dict) and "coloring" in obj and "blue" not in obj:
        obj = obj["coloring"]
    if obj is None:
        raise InputError(f"{path} holds no coloring")
    try:
        return io.coloring_from_json(obj)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_construct(args) -> int:
    n = _positive("n", args.n)
    cover = None
    if args.kind == "a2":
        _positive("n", n, hi=MAX_DIM - 1)
        c = construct_a2_lower(n)
        t = 2
    elif args.kind == "a3":
        _positive("n", n, hi=MAX_DIM - 2)
        c = construct_a3_lower(n)
        t = 3
    elif args.kind == "random-chains":
        _positive("n", n, hi=MAX_DIM - 3)
        k = _positive("chains", args.chains)
        c = random_chain_coloring(n + 3, k, args.seed, args.density)
        t = k + 1
    else:
        r = _positive("r", args.r, lo=0)
        if n + 2 * r + 1 > MAX_DIM:
            raise InputError(f"n + 2r + 1 must be at most {MAX_DIM}")
        c = construct_layered_lower(n, r)
        t = comb(n + 2 * r + 1, r) + 1
        cover = layered_cover(n, r)
    blue = verify_no_blue_antichain(c, t, cover=cover)
    if args.kind == "random-chains":
        red = {"claim": "none", "certified": None, "kind": "not claimed"}
    else:
        try:
            red = io.cube_check_to_json(verify_no_red_cube(c, n))
        except ValueError as exc:
            red = {"claim": f"no red Q_{n}", "certified": None, "kind": "unchecked",
                   "reason": str(exc)}
    col = io.coloring_to_json(c)
    if args.out:
        io.dump(col, args.out)
    payload = {"kind": args.kind, "N": c.n, "coloring": col if not args.out else args.out,
               "claims": [io.antichain_check_to_json(blue), red]}
    text = [f"{args.kind} construction on Q_{c.n}" + (f" -> {args.out}" if args.out else ""),
            render_lattice(c),
            f"no blue A_{t}: {'certified by ' + str(len(blue.cover)) + ' chains' if blue.certified else 'REFUTED'}",
            f"no red Q_{n}: {red['kind']}"]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_verify(args) -> int:
    c = _load_coloring(args.file)
    if args.t is None and args.n is None:
        raise InputError("give --t and/or --n")
    claims = []
    refuted = False
    lines = [render_lattice(c)] if c.n <= 5 else []
    if args.t is not None:
        _positive("t", args.t)
        chk = verify_no_blue_antichain(c, args.t)
        claims.append(io.antichain_check_to_json(chk))
        refuted |= not chk.certified
        lines.append(f"no blue A_{args.t}: " + (
            f"certified by {len(chk.cover)} chains" if chk.certified
            else f"REFUTED by antichain {sorted(chk.antichain)}"))
    if args.n is not None:
        _positive("n", args.n, lo=0, hi=c.n)
        try:
            chk2 = verify_no_red_cube(c, args.n)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        claims.append(io.cube_check_to_json(chk2))
        refuted |= not chk2.certified
        if chk2.certified:
            lines.append(f"no red Q_{args.n}: certified ({chk2.kind}, red height {chk2.red_height})")
        else:
            e = chk2.embedding
            lines.append(f"no red Q_{args.n}: REFUTED by images {sorted(e.images())}")
    _emit(args, {"file": args.file, "claims": claims, "all_certified": not refuted}, "\n".join(lines))
    return EXIT_REFUTED if refuted else EXIT_OK


def cmd_search(args) -> int:
    t = _positive("t", args.t, lo=2)
    n = _positive("n", args.n)
    nmax = _positive("nmax", args.nmax, lo=0, hi=SEARCH_MAX_DIM)
    budget = _positive("budget", args.budget)
    workers = args.threads if args.threads is not None else default_workers()
    try:
        res = ramsey_exact(t, n, nmax, budget=budget, workers=workers)
    except BudgetExhausted as exc:
        payload = {"kind": "budget-exhausted", "coloring": None, "t": t, "n": n,
                   "nodes": exc.nodes, "budget": exc.budget}
        if args.out:
            io.dump(payload, args.out)
        _emit(args, payload, f"budget of {exc.budget} nodes exhausted; no verdict")
        return EXIT_BUDGET
    payload = io.ramsey_result_to_json(res)
    if args.out:
        io.dump(payload, args.out)
    if res.value is not None:
        text = f"R(A_{t}, Q_{n}) = {res.value}"
    else:
        text = f"R(A_{t}, Q_{n}) >= {res.lower} (every N <= {nmax} escapes)"
    for w in res.runs:
        text += f"\n  N={w.N}: {w.kind} ({w.nodes} nodes, {w.classes} classes)"
    if res.witness is not None and res.witness.coloring is not None:
        text += f"\nescaping coloring at N={res.witness.N}:\n" + render_lattice(res.witness.coloring)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_pipeline(args) -> int:
    c = _load_coloring(args.file)
    t = _positive("t", args.t, lo=2)
    if c.n < 3:
        raise InputError("pipeline needs a coloring of Q_{n+3}")
    try:
        tr = theorem2_pipeline(c, t, allow_small=args.allow_small)
    except BlueAntichainPresent as exc:
        _emit(args, {"error": "blue antichain", "antichain": sorted(exc.antichain)}, str(exc))
        return EXIT_INPUT
    except (PipelineError, TripleNotFound) as exc:
        _emit(args, {"error": type(exc).__name__, "message": str(exc)}, str(exc))
        return EXIT_INPUT
    payload = io.trace_to_json(tr)
    if args.out:
        io.dump(payload, args.out)
    text = "\n".join([
        f"blue cover: {len(tr.chain_cover)} chains",
        f"orderings: {[list(o) for o in tr.orderings]}",
        f"triple (x, y, z) = {tr.triple}; y-order {tr.y_order}",
        f"red Q_{tr.n} over ground {elements(tr.x_ground)}; {len(tr.result.tail)} images verified red",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_tools(args) -> int:
    if args.tool == "scd":
        n = _positive("n", args.n, lo=0, hi=20)
        d = symmetric_chain_decomposition(n)
        _emit(args, io.decomposition_to_json(d),
              f"{len(d)} chains\n" + "\n".join(" < ".join(map(str, ch)) for ch in d.chains))
    elif args.tool == "dilworth":
        c = _load_coloring(args.file)
        blues = c.blue_vertices()
        cover = min_chain_cover(blues)
        anti = max_antichain(blues)
        payload = io.cover_to_json(c.n, cover)
        payload["antichain"] = sorted(anti)
        _emit(args, payload, f"{len(cover)} chains cover the {len(blues)} blue vertices; "
                             f"maximum blue antichain {sorted(anti)}")
    elif args.tool == "triple":
        try:
            obj = io.load(args.file)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {args.file}: {exc}") from None
        orders = obj["orderings"] if isinstance(obj, dict) else obj
        try:
            triple = consistent_triple([tuple(o) for o in orders])
        except TripleNotFound as exc:
            _emit(args, {"error": "no triple", "message": str(exc)}, str(exc))
            return EXIT_REFUTED
        except (ValueError, TypeError) as exc:
            raise InputError(str(exc)) from None
        print(json.dumps(list(triple)))
    elif args.tool == "bounds":
        n = _positive("n", args.n)
        t = _positive("t", args.t, lo=2)
        rep = ramsey_bounds(n, t)
        text = (f"{rep.lower} <= R(A_{t}, Q_{n}) <= {rep.upper}  (lower via {rep.lower_certificate})"
                + (f"\nexact: {rep.exact}" if rep.exact is not None else ""))
        if rep.corollary_lower is not None:
            text += f"\nasymptotic lower bound: {rep.corollary_lower}"
        _emit(args, io.bounds_to_json(rep), text)
    elif args.tool == "redcube":
        c = _load_coloring(args.file)
        n = _positive("n", args.n, lo=0, hi=c.n)
        e = find_red_cube(c, n)
        if e is None:
            _emit(args, {"found": False}, f"no red Q_{n}")
            return EXIT_REFUTED
        _emit(args, {"found": True, "embedding": io.embedding_to_json(e)},
              f"red Q_{n} over ground {elements(e.ground)}: images {sorted(e.images())}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="posetramsey", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a lower-bound coloring")
    c.add_argument("kind", choices=("a2", "a3", "layered", "random-chains"))
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--chains", type=int, default=2,
                   help="random-chains: number of random full chains of Q_{n+3}")
    c.add_argument("--density", type=float, default=0.5)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify or refute claims about a coloring file")
    v.add_argument("file")
    v.add_argument("--t", type=int, help="claim: no blue antichain of this size")
    v.add_argument("--n", type=int, help="claim: no red copy of Q_n")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="compute R(A_t, Q_n) by exhaustive search")
    s.add_argument("--t", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--threads", type=int, default=None,
                   help="parallel workers (default: $POSET_RAMSEY_THREADS or 1)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    pl = sub.add_parser("pipeline", help="extract a red Q_n from a blue-A_t-free coloring of Q_{n+3}")
    pl.add_argument("file")
    pl.add_argument("--t", type=int)
    pl.add_argument("--allow-small", action="store_true",
                    help="proceed even when n is below the proven range")
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_pipeline)

    tl = sub.add_parser("tools", help="single-step helpers")
    tl.add_argument("tool", choices=("scd", "dilworth", "triple", "bounds", "redcube"))
    tl.add_argument("file", nargs="?")
    tl.add_argument("--n", type=int)
    tl.add_argument("--t", type=int)
    tl.set_defaults(func=cmd_tools)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.command == "tools" and args.tool in ("dilworth", "triple", "redcube") and not args.file:
        print(f"error: tools {args.tool} needs a file", file=sys.stderr)
        return EXIT_INPUT
    if args.command == "search" and args.threads is not None and args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
