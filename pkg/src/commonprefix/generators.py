"""Seeded instance generators (``random.Random``; stable within one Python).

binary tree : vertex i >= 1 attaches to a uniformly random earlier vertex
              that still has fewer than 2 children
tree        : vertex i >= 1 attaches to a uniformly random earlier vertex
star        : vertex 0 is the center, 1..n-1 are leaves
label sets  : size uniform in [lo, hi] (clamped to the universe), sampled
              uniformly without replacement from the universe
bipartite   : each (u, v) pair is an edge independently with probability p
"""
from __future__ import annotations

import random

from .instance import CPInstance
from .nested import NNInstance

__all__ = [
    "universe_tokens",
    "random_binary_edges",
    "random_tree_edges",
    "random_label_sets",
    "gen_binary_tree",
    "gen_tree",
    "gen_star",
    "gen_bipartite",
]


def universe_tokens(size: int) -> list:
    if size <= 26:
        return [chr(ord("a") + i) for i in range(size)]
    width = len(str(size - 1))
    return [f"t{i:0{width}d}" for i in range(size)]


def random_binary_edges(n: int, rng: random.Random) -> list:
    children = [0] * n
    edges = []
    for i in range(1, n):
        open_ = [v for v in range(i) if children[v] < 2]
        p = rng.choice(open_)
        children[p] += 1
        edges.append((p, i))
    return edges


def random_tree_edges(n: int, rng: random.Random) -> list:
    return [(rng.randrange(i), i) for i in range(1, n)]


def random_label_sets(n: int, universe: int, lo: int, hi: int, rng: random.Random) -> list:
    if universe < 0 or lo < 0 or hi < lo:
        raise ValueError("need universe >= 0 and 0 <= min-labels <= max-labels")
    toks = universe_tokens(universe)
    hi = min(hi, universe)
    lo = min(lo, hi)
    return [frozenset(rng.sample(toks, rng.randint(lo, hi))) for _ in range(n)]


def _check_n(n):
    if n < 1:
        raise ValueError("n must be >= 1")


def gen_binary_tree(n, universe, lo, hi, seed) -> CPInstance:
    _check_n(n)
    rng = random.Random(seed)
    edges = random_binary_edges(n, rng)
    return CPInstance(n, tuple(edges), tuple(random_label_sets(n, universe, lo, hi, rng)))


def gen_tree(n, universe, lo, hi, seed) -> CPInstance:
    _check_n(n)
    rng = random.Random(seed)
    edges = random_tree_edges(n, rng)
    return CPInstance(n, tuple(edges), tuple(random_label_sets(n, universe, lo, hi, rng)))


def gen_star(n, universe, lo, hi, seed) -> CPInstance:
    _check_n(n)
    rng = random.Random(seed)
    edges = tuple((0, i) for i in range(1, n))
    return CPInstance(n, edges, tuple(random_label_sets(n, universe, lo, hi, rng)))


def gen_bipartite(n_u, n_v, p, seed) -> NNInstance:
    if n_u < 0 or n_v < 0:
        raise ValueError("side sizes must be >= 0")
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    adj = [frozenset(v for v in range(n_v) if rng.random() < p) for _ in range(n_u)]
    return NNInstance(n_u, n_v, tuple(adj))
