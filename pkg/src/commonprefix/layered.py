"""Layered approximation for Common Prefix on rooted binary trees.

Class ``c`` of ``L`` deletes every edge whose child endpoint sits at depth
``c`` mod ``L``.  Every edge is deleted in exactly one class, and each class
leaves a forest whose pieces span at most ``L`` depth levels, small enough to
solve exactly.  Summed over classes the optimal edge benefits are counted
``L - 1`` times, so the best class is worth at least ``(1 - 1/L) * OPT``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotBinaryError
from .exact import DEFAULT_MAX_COMPONENTS, SubtreeSolver, _emit, _guard_components, _mask
from .instance import Assignment, CPInstance, check_tree, evaluate

__all__ = [
    "LayerDecomposition",
    "ApproxResult",
    "rooted_depths",
    "decompose",
    "solve_approx",
    "choose_block_height",
]


@dataclass(frozen=True)
class LayerDecomposition:
    L: int
    root: int
    depth: tuple
    classes: tuple          # per class: pieces, each a sorted vertex tuple
    deleted_edges: tuple    # per class: sorted (u, v) edges

    def levels_spanned(self, piece) -> int:
        ds = [self.depth[v] for v in piece]
        return max(ds) - min(ds) + 1


@dataclass(frozen=True)
class ApproxResult:
    best_class: int
    layer_value: int
    realized_value: int
    L: int
    class_values: tuple
    assignment: Assignment
    decomposition: LayerDecomposition
    exact_value: int | None = None

    @property
    def guarantee_holds(self):
        """``layer_value * L >= (L-1) * exact``, or None if no exact value was supplied."""
        if self.exact_value is None:
            return None
        return self.layer_value * self.L >= (self.L - 1) * self.exact_value


def rooted_depths(instance: CPInstance, root: int):
    """BFS from ``root``: (depth, parent, order); raises NotBinaryError past 2 children."""
    check_tree(instance)
    if not 0 <= root < instance.n:
        raise ValueError(f"root {root} out of range")
    depth = [0] * instance.n
    parent = [-1] * instance.n
    order = [root]
    seen = {root}
    for v in order:
        kids = [w for w in instance.adjacency[v] if w not in seen]
        if len(kids) > 2:
            raise NotBinaryError(f"vertex {v} has {len(kids)} children under root {root}")
        for w in kids:
            seen.add(w)
            parent[w] = v
            depth[w] = depth[v] + 1
            order.append(w)
    return depth, parent, order


def decompose(instance: CPInstance, root: int, L: int) -> LayerDecomposition:
    if L < 2:
        raise ValueError("L must be >= 2")
    depth, parent, order = rooted_depths(instance, root)
    classes, deleted = [], []
    for c in range(L):
        top = [0] * instance.n
        for v in order:
            top[v] = v if v == root or depth[v] % L == c else top[parent[v]]
        groups = {}
        for v in range(instance.n):
            groups.setdefault(top[v], []).append(v)
        classes.append(tuple(sorted(tuple(g) for g in groups.values())))
        cut = [(min(v, parent[v]), max(v, parent[v])) for v in order[1:] if depth[v] % L == c]
        deleted.append(tuple(sorted(cut)))
    return LayerDecomposition(L, root, tuple(depth), tuple(classes), tuple(deleted))


def solve_approx(
    instance: CPInstance,
    root: int,
    L: int,
    *,
    exact_value: int | None = None,
    max_components: int | None = DEFAULT_MAX_COMPONENTS,
) -> ApproxResult:
    """Solve every class exactly piece by piece and keep the best class.

    The returned assignment stitches together the optimal permutations of the
    best class's pieces; edges that class deleted may still earn benefit, so
    ``realized_value >= layer_value``.
    """
    dec = decompose(instance, root, L)
    solver = SubtreeSolver(instance)
    values = []
    for pieces in dec.classes:
        total = 0
        for piece in pieces:
            _guard_components(instance, piece, max_components)
            total += solver.solve(_mask(piece))
        values.append(total)
    best = max(range(L), key=lambda c: (values[c], -c))
    perms = [[] for _ in range(instance.n)]
    for piece in dec.classes[best]:
        _emit(instance, solver.trace(_mask(piece)), perms)
    assignment = Assignment(tuple(perms))
    realized = evaluate(instance, assignment).total
    return ApproxResult(best, values[best], realized, L, tuple(values), assignment, dec, exact_value)


def choose_block_height(n: int, epsilon=None) -> int:
    """Block height L: ``ceil(1/epsilon)`` if given, else ``floor(log2 log2 n)``; at least 2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if epsilon is not None:
        eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
        if not 0 < eps < 1:
            raise ValueError("epsilon must satisfy 0 < epsilon < 1")
        return max(2, math.ceil(1 / eps))
    lg = n.bit_length() - 1          # floor(log2 n) >= 1
    return max(2, lg.bit_length() - 1)
