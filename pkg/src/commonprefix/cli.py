"""Command-line front end.

Exit codes: 0 success, 1 invalid input or usage, 2 size guard exceeded.
Instances are read from a path or stdin (``-`` or no path); results go to
stdout, diagnostics to stderr.  Every command is a pure function of its input
bytes, flags and seed; wall-clock columns in ``bench`` are opt-in.
"""
from __future__ import annotations

import argparse
import sys
import time

from .analysis import count_subtrees, ratio_experiment
from .errors import InvalidAssignment, InvalidInstance, SizeGuardExceeded
from .exact import DEFAULT_MAX_COMPONENTS, DEFAULT_ORACLE_LIMIT, oracle_solve, solve_exact
from .generators import gen_binary_tree, gen_bipartite, gen_star
from .instance import parse_cp, serialize_cp, serialize_solution
from .layered import choose_block_height, solve_approx
from .nested import nn_to_star, parse_nn, serialize_nn, star_to_nn, tight_family

EXIT_OK, EXIT_INVALID, EXIT_GUARD = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt(q):
    return f"{q.numerator}/{q.denominator}"


# -- commands -----------------------------------------------------------------

def cmd_gen(args, out):
    if args.kind == "tight-family":
        out.write(serialize_nn(tight_family(args.n)))
        return
    if args.kind == "bipartite":
        nv = args.n if args.nv is None else args.nv
        out.write(serialize_nn(gen_bipartite(args.n, nv, args.p, args.seed)))
        return
    gen = gen_binary_tree if args.kind == "binary-tree" else gen_star
    inst = gen(args.n, args.universe, args.min_labels, args.max_labels, args.seed)
    out.write(serialize_cp(inst))


def cmd_solve(args, out):
    inst = parse_cp(_read(args.file))
    if args.mode == "oracle":
        value = oracle_solve(inst, limit=args.oracle_limit)
        out.write(f"value {value}\n")
        return
    if args.mode == "exact":
        res = solve_exact(inst, max_components=args.max_components)
        out.write(serialize_solution(res.assignment, res.value))
        return
    if args.L is not None:
        L = args.L
    elif args.epsilon is not None:
        L = choose_block_height(max(inst.n, 2), args.epsilon)
    else:
        L = choose_block_height(max(inst.n, 2))
    res = solve_approx(inst, args.root, L, max_components=args.max_components)
    comments = [f"layer_value {res.layer_value}", f"L {res.L}", f"class {res.best_class}"]
    out.write(serialize_solution(res.assignment, res.realized_value, comments))


def cmd_reduce(args, out):
    text = _read(args.file)
    if args.direction == "nn-to-star":
        out.write(serialize_cp(nn_to_star(parse_nn(text))))
    else:
        out.write(serialize_nn(star_to_nn(parse_cp(text), args.center)))


def cmd_analyze(args, out):
    text = _read(args.file)
    if args.what == "subtrees":
        rep = count_subtrees(parse_cp(text), args.root)
        out.write(f"height={rep.height}\ntotal={rep.total}\nbound={rep.bound}\n")
        out.write(f"within_bound={'true' if rep.within_bound else 'false'}\n")
        return
    rep = ratio_experiment(parse_nn(text))
    ratio = "undefined" if rep.ratio is None else _fmt(rep.ratio)
    out.write(f"ebcs={rep.ebcs}\nnn={rep.nn}\nratio={ratio}\nharmonic={_fmt(rep.h_bound)}\n")
    out.write(f"sandwich_ok={'true' if rep.sandwich_ok else 'false'}\n")


BENCH_SUITES = {
    "approx-sweep": ((64, 256, 1024), (2, 3, 4)),
    "small-sweep": ((8, 12, 14), (2, 3, 4)),
}


def cmd_bench(args, out):
    if args.suite not in BENCH_SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(BENCH_SUITES))}")
    sizes, Ls = BENCH_SUITES[args.suite]
    head = ["n", "L", "exact", "layer", "realized", "guarantee"]
    if args.timings:
        head += ["exact_s", "approx_s"]
    out.write("\t".join(head) + "\n")
    for n in sizes:
        inst = gen_binary_tree(n, args.universe, 1, args.max_labels, args.seed + n)
        t0 = time.perf_counter()
        try:
            exact = solve_exact(inst, max_components=args.max_components).value
        except SizeGuardExceeded:
            exact = None
        t_exact = time.perf_counter() - t0
        for L in Ls:
            t0 = time.perf_counter()
            res = solve_approx(inst, 0, L, exact_value=exact, max_components=args.max_components)
            t_approx = time.perf_counter() - t0
            g = res.guarantee_holds
            row = [n, L, "-" if exact is None else exact, res.layer_value, res.realized_value,
                   "n/a" if g is None else ("ok" if g else "FAIL")]
            if args.timings:
                row += [f"{t_exact:.4f}" if exact is not None else "-", f"{t_approx:.4f}"]
            out.write("\t".join(map(str, row)) + "\n")


def build_parser():
    p = _Parser(prog="commonprefix", description="Common Prefix on trees: solvers, reductions, analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("kind", choices=["binary-tree", "star", "bipartite", "tight-family"])
    g.add_argument("--n", type=int, required=True, help="vertex count (nU for bipartite)")
    g.add_argument("--nv", type=int, default=None, help="nV for bipartite (default: n)")
    g.add_argument("--universe", type=int, default=4, help="label universe size")
    g.add_argument("--min-labels", type=int, default=1)
    g.add_argument("--max-labels", type=int, default=3)
    g.add_argument("--p", type=float, default=0.5, help="edge probability (bipartite)")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve a cp instance")
    s.add_argument("file", nargs="?")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--approx", dest="mode", action="store_const", const="approx")
    mode.add_argument("--oracle", dest="mode", action="store_const", const="oracle")
    blk = s.add_mutually_exclusive_group()
    blk.add_argument("--L", type=int, default=None)
    blk.add_argument("--epsilon", type=float, default=None)
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--max-components", type=int, default=DEFAULT_MAX_COMPONENTS)
    s.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="star <-> nested-neighbourhoods reduction")
    r.add_argument("direction", choices=["star-to-nn", "nn-to-star"])
    r.add_argument("file", nargs="?")
    r.add_argument("--center", type=int, default=0)
    r.set_defaults(func=cmd_reduce)

    a = sub.add_parser("analyze", help="subtree counts or NN/EBCS ratio")
    a.add_argument("what", choices=["subtrees", "ratio"])
    a.add_argument("file", nargs="?")
    a.add_argument("--root", type=int, default=0)
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bench", help="run a built-in generator sweep")
    b.add_argument("suite")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--universe", type=int, default=4)
    b.add_argument("--max-labels", type=int, default=3)
    b.add_argument("--max-components", type=int, default=DEFAULT_MAX_COMPONENTS)
    b.add_argument("--timings", action="store_true", help="add wall-clock columns (non-deterministic)")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "suite", None) == "":
            raise UsageError("bench: empty suite name")
        if getattr(args, "L", None) is not None and args.L < 2:
            raise UsageError("L must be >= 2")
        args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except SizeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InvalidInstance, InvalidAssignment, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
