"""Command line front-end: solve, decide, generate, reduce, play, serve."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import engine
from .dispatch import ALGORITHMS, solve_with
from .docio import document_from_graph, parse_document, serialize_document
from .errors import SpgError
from .generators import gen_random_cactus, gen_random_dag, gen_random_directed_cactus
from .graph import GameGraph, classify, cooperative_shortest_path, load_and_validate
from .reductions import GeographyInstance, QsatInstance, geography_to_spg, qsat_to_spg
from .rules import Parity, apply_move, initial_state, is_terminal, legal_moves


def _read_graph(path: str) -> GameGraph:
    with open(path, encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    return load_and_validate(doc.as_dict())


def _emit(doc, out_path: str | None) -> None:
    text = serialize_document(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _walk_str(g: GameGraph, walk) -> str:
    return ",".join(g.label(v) for v in walk)


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    sol = solve_with(g, args.algorithm)
    print(f"A={sol.cost_a} B={sol.cost_b} path={_walk_str(g, sol.walk)} "
          f"algorithm={sol.algorithm} nodes={sol.node_count}")
    return 0


def cmd_spgd(args) -> int:
    g = _read_graph(args.graph)
    sol = solve_with(g, args.algorithm)
    print("yes" if sol.cost_a <= args.ca and sol.cost_b <= args.cb else "no")
    return 0


def cmd_poa(args) -> int:
    g = _read_graph(args.graph)
    ratio = engine.price_of_anarchy(g)
    print(f"{ratio.numerator}/{ratio.denominator}" if ratio.denominator != 1
          else str(ratio.numerator))
    return 0


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    cls = classify(g)
    print(f"vertices={g.n} edges={len(g.edges)} directed={g.directed}")
    print(f"tree={cls.is_tree} dag={cls.is_dag} cactus={cls.is_cactus} "
          f"directed_cactus={cls.is_directed_cactus} bipartite={cls.is_bipartite}")
    print(f"shortest_path={cooperative_shortest_path(g)}")
    return 0


def cmd_gen(args) -> int:
    cost_range = (args.cost_lo, args.cost_hi)
    if args.family == "cactus":
        doc = gen_random_cactus(args.n, args.seed, cost_range, args.distinct)
    elif args.family == "directed-cactus":
        doc = gen_random_directed_cactus(args.n, args.seed, cost_range, args.distinct)
    else:
        doc = gen_random_dag(args.n, args.seed, args.p, cost_range, args.distinct)
    _emit(doc, args.output)
    return 0


def cmd_reduce(args) -> int:
    with open(args.source, encoding="utf-8") as fh:
        text = fh.read()
    if args.problem == "geography":
        raw = json.loads(text)
        geo = GeographyInstance(
            n=raw["n"], arcs=tuple((u, v) for u, v in raw["arcs"]), start=raw["s"])
        out = geography_to_spg(geo)
    else:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n, m = map(int, lines[0].split())
        clauses = tuple(
            tuple(int(x) for x in ln.split()) for ln in lines[1:1 + m])
        out = qsat_to_spg(QsatInstance(n, clauses))
    sys.stderr.write(f"bounds: C_A={out.c_a} C_B={out.c_b}\n")
    _emit(document_from_graph(out.graph), args.output)
    return 0


def cmd_play(args) -> int:
    g = _read_graph(args.graph)
    human_sides = {"A": {Parity.A_TO_MOVE}, "B": {Parity.B_TO_MOVE},
                   "both": {Parity.A_TO_MOVE, Parity.B_TO_MOVE}}[args.side]
    state = initial_state(g)
    print(f"play from {g.label(g.s)} to {g.label(g.t)}; you are {args.side}")
    while not is_terminal(state, g):
        mover = "A" if state.parity == Parity.A_TO_MOVE else "B"
        moves = legal_moves(g, state)
        if state.parity in human_sides:
            print(f"[{mover} at {g.label(state.current)}] options:")
            for i, mv in enumerate(moves):
                print(f"  {i}: -> {g.label(mv.next)} (cost {mv.edge.cost})")
            while True:
                raw = input("move> ").strip()
                if raw.isdigit() and int(raw) < len(moves):
                    chosen = moves[int(raw)]
                    break
                print("enter one of the listed option numbers")
        else:
            _, per_move = engine.value_at(g, state)
            chosen = min(per_move,
                         key=lambda mp: (mp[1].decider, mp[1].follower, mp[0].next))[0]
            print(f"[{mover}] engine plays -> {g.label(chosen.next)} "
                  f"(cost {chosen.edge.cost})")
        state = apply_move(g, state, chosen)
    print(f"game over at {g.label(state.current)}: "
          f"A paid {state.cost_a}, B paid {state.cost_b}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    rows = []
    for n in sizes:
        if args.family == "dag":
            doc = gen_random_dag(n, args.seed, args.p)
        elif args.family == "cactus":
            doc = gen_random_cactus(n, args.seed)
        else:
            doc = gen_random_directed_cactus(n, args.seed)
        g = load_and_validate(doc.as_dict())
        algo = {"dag": "dag", "cactus": "cactus",
                "directed-cactus": "directed-cactus"}[args.family]
        best = None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            solve_with(g, algo)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        rows.append((n, len(g.edges), best))
        print(f"n={n} edges={len(g.edges)} time={best:.4f}s")
    if len(rows) >= 2:
        import math

        xs = [math.log(r[0]) for r in rows]
        ys = [math.log(max(r[2], 1e-9)) for r in rows]
        mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
            (x - mx) ** 2 for x in xs)
        print(f"log-log slope: {slope:.2f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spg", description="two-player shortest path game solver suite")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the equilibrium walk and costs")
    p.add_argument("graph")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("spgd", help="decide whether both costs meet bounds")
    p.add_argument("graph")
    p.add_argument("--ca", type=int, required=True)
    p.add_argument("--cb", type=int, required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_spgd)

    p = sub.add_parser("poa", help="price of anarchy as an exact fraction")
    p.add_argument("graph")
    p.set_defaults(func=cmd_poa)

    p = sub.add_parser("check", help="validate and classify a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("family", choices=["cactus", "dag", "directed-cactus"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.4, help="DAG arc probability")
    p.add_argument("--cost-lo", type=int, default=1)
    p.add_argument("--cost-hi", type=int, default=20)
    p.add_argument("--distinct", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build a game from a source problem")
    p.add_argument("problem", choices=["geography", "qsat"])
    p.add_argument("source")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("play", help="interactive terminal game")
    p.add_argument("graph")
    p.add_argument("--side", choices=["A", "B", "both"], default="A")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the HTTP session API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("bench", help="time a solver across instance sizes")
    p.add_argument("family", choices=["cactus", "dag", "directed-cactus"])
    p.add_argument("--sizes", default="1000,2000,4000,8000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.4)
    p.add_argument("--repeats", type=int, default=2)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
