"""Subtree counts, harmonic numbers, and the NN / biclique ratio report."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .instance import CPInstance
from .layered import rooted_depths
from .nested import NNInstance, solve_ebcs_exact, solve_nn_exact

__all__ = ["SubtreeCountReport", "RatioReport", "count_subtrees", "harmonic", "ratio_experiment"]

# exact rationals are plain fractions.Fraction (always reduced, denominator > 0)
Rational = Fraction


@dataclass(frozen=True)
class SubtreeCountReport:
    per_vertex_rooted: dict
    total: int
    height: int
    bound: int

    @property
    def within_bound(self) -> bool:
        return self.total <= self.bound


@dataclass(frozen=True)
class RatioReport:
    ebcs: int
    nn: int
    ratio: Fraction | None   # None when the graph has no edges
    h_bound: Fraction
    sandwich_ok: bool


def count_subtrees(instance: CPInstance, root: int) -> SubtreeCountReport:
    """Count connected subtrees of a rooted binary tree.

    ``per_vertex_rooted[v]`` counts the subtrees whose highest vertex is v,
    f(v) = prod(1 + f(child)); the total sums these.  The bound is
    2**(2**(h+1)) for height h.
    """
    depth, parent, order = rooted_depths(instance, root)
    f = {}
    for v in reversed(order):
        acc = 1
        for w in instance.adjacency[v]:
            if parent[w] == v:
                acc *= 1 + f[w]
        f[v] = acc
    h = max(depth)
    per_vertex = {v: f[v] for v in range(instance.n)}
    return SubtreeCountReport(per_vertex, sum(f.values()), h, 2 ** (2 ** (h + 1)))


def harmonic(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def ratio_experiment(G: NNInstance) -> RatioReport:
    """Solve NN and EBCS exactly and check EBCS <= NN <= H_|U| * EBCS."""
    ebcs = solve_ebcs_exact(G).edge_count
    nn = solve_nn_exact(G).cost
    h = harmonic(max(G.n_u, 1))
    ratio = Fraction(nn, ebcs) if ebcs else None
    ok = ebcs <= nn and nn <= h * ebcs
    return RatioReport(ebcs, nn, ratio, h, ok)
