"""Exact Common Prefix on trees by memoized edge-deletion recursion.

For a connected component C of the tree,

    value(C) = |common labels of C| + max over edges e of C of
               value(C1) + value(C2)

where C1, C2 are the two sides of C with e removed, and a single vertex has
value 0.  Components are keyed by vertex bitmask, so the memo table ends up
holding every connected subtree of the input; that count is what the size
guard measures before any work is done.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

from .errors import SizeGuardExceeded
from .instance import Assignment, CPInstance, check_tree, lcp_length

__all__ = [
    "CutNode",
    "ExactResult",
    "DEFAULT_MAX_COMPONENTS",
    "DEFAULT_ORACLE_LIMIT",
    "common_label_count",
    "count_connected_subtrees",
    "solve_exact",
    "reconstruct",
    "oracle_solve",
    "SubtreeSolver",
]

DEFAULT_MAX_COMPONENTS = 200_000
DEFAULT_ORACLE_LIMIT = 10**7


@dataclass(frozen=True)
class CutNode:
    """One node of the recursion: a component, its common-label count, the cut edge.

    Leaves of the trace are single vertices (``edge is None``, no children).
    ``children`` are ordered with the side containing ``edge[0]`` first.
    """

    vertices: tuple
    common: int
    value: int
    edge: tuple | None = None
    children: tuple = ()


@dataclass(frozen=True)
class ExactResult:
    value: int
    assignment: Assignment
    cut_trace: CutNode
    memo_entries: int


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def common_label_count(instance: CPInstance, component) -> int:
    """Size of the intersection of the label sets over ``component``."""
    acc = None
    for v in component:
        acc = instance.label_sets[v] if acc is None else acc & instance.label_sets[v]
    return len(acc) if acc is not None else 0


def count_connected_subtrees(instance: CPInstance, component=None) -> int:
    """Number of connected vertex subsets inside ``component`` (default: whole tree).

    Rooted count f(v) = prod(1 + f(child)); the total sums f over vertices.
    Works for any degree.
    """
    mask = (1 << instance.n) - 1 if component is None else _mask(component)
    if not mask:
        return 0
    root = (mask & -mask).bit_length() - 1
    adj = instance.adjacency
    order, parent = [root], {root: -1}
    for v in order:
        for w in adj[v]:
            if w != parent[v] and mask >> w & 1 and w not in parent:
                parent[w] = v
                order.append(w)
    f = {}
    for v in reversed(order):
        acc = 1
        for w in adj[v]:
            if parent.get(w) == v:
                acc *= 1 + f[w]
        f[v] = acc
    return sum(f.values())


class SubtreeSolver:
    """Memoized recursion over connected components of one instance.

    The memo maps a component bitmask to ``(value, common_mask, edge, side_a, side_b)``.
    It is shared freely between queries on the same instance (the layered
    approximation reuses it across classes).
    """

    def __init__(self, instance: CPInstance):
        self.instance = instance
        self.memo = {}

    def _splits(self, mask):
        """All (edge, side_with_edge[0], other_side) for edges inside ``mask``, sorted by edge."""
        adj = self.instance.adjacency
        root = (mask & -mask).bit_length() - 1
        order, parent = [root], {root: -1}
        for v in order:
            for w in adj[v]:
                if mask >> w & 1 and w not in parent:
                    parent[w] = v
                    order.append(w)
        sub = {}
        for v in reversed(order):
            m = 1 << v
            for w in adj[v]:
                if parent.get(w) == v:
                    m |= sub[w]
            sub[v] = m
        out = []
        for c in order[1:]:
            p = parent[c]
            u, w = min(p, c), max(p, c)
            side_c, side_p = sub[c], mask ^ sub[c]
            out.append(((u, w), side_c, side_p) if u == c else ((u, w), side_p, side_c))
        out.sort()
        return out

    def solve(self, mask: int) -> int:
        memo = self.memo
        if mask in memo:
            return memo[mask][0]
        masks = self.instance.label_masks
        pending = {}
        stack = [mask]
        while stack:
            m = stack[-1]
            if m in memo:
                stack.pop()
                continue
            if m & (m - 1) == 0:
                memo[m] = (0, masks[m.bit_length() - 1], None, 0, 0)
                stack.pop()
                continue
            splits = pending.get(m)
            if splits is None:
                splits = pending[m] = self._splits(m)
            missing = [s for _, a, b in splits for s in (a, b) if s not in memo]
            if missing:
                stack.extend(missing)
                continue
            _, a0, b0 = splits[0]
            common = memo[a0][1] & memo[b0][1]
            best, best_split = -1, None
            for edge, a, b in splits:
                val = memo[a][0] + memo[b][0]
                if val > best:
                    best, best_split = val, (edge, a, b)
            edge, a, b = best_split
            memo[m] = (bin(common).count("1") + best, common, edge, a, b)
            del pending[m]
            stack.pop()
        return memo[mask][0]

    def trace(self, mask: int) -> CutNode:
        self.solve(mask)
        memo = self.memo
        built = {}
        stack = [mask]
        while stack:
            m = stack[-1]
            value, common, edge, a, b = memo[m]
            if edge is not None and (a not in built or b not in built):
                stack.extend(x for x in (a, b) if x not in built)
                continue
            stack.pop()
            if m in built:
                continue
            children = () if edge is None else (built[a], built[b])
            built[m] = CutNode(tuple(_bits(m)), bin(common).count("1"), value, edge, children)
        return built[mask]


def _guard_components(instance, component, limit):
    count = count_connected_subtrees(instance, component)
    if limit is not None and count > limit:
        raise SizeGuardExceeded("max_components", count, limit)
    return count


def _emit(instance: CPInstance, node: CutNode, perms: list) -> None:
    """Append prefix blocks for the subtree of the trace rooted at ``node``."""
    sets = instance.label_sets
    stack = [(node, frozenset())]
    while stack:
        cur, emitted = stack.pop()
        common = frozenset.intersection(*(sets[v] for v in cur.vertices))
        block = sorted(common - emitted)
        for v in cur.vertices:
            perms[v].extend(block)
        emitted = emitted | common
        for child in reversed(cur.children):
            stack.append((child, emitted))


def reconstruct(instance: CPInstance, cut_trace: CutNode) -> Assignment:
    """Build permutations from a cut trace.

    Each trace component appends its not-yet-emitted common labels (sorted) to
    every member's permutation; a single vertex thereby receives all of its
    remaining labels.  Vertices outside the trace get their labels sorted.
    """
    perms = [[] for _ in range(instance.n)]
    _emit(instance, cut_trace, perms)
    covered = set(cut_trace.vertices)
    for v in range(instance.n):
        if v not in covered:
            perms[v] = sorted(instance.label_sets[v])
    return Assignment(tuple(perms))


def solve_exact(instance: CPInstance, max_components: int | None = DEFAULT_MAX_COMPONENTS) -> ExactResult:
    """Optimal Common Prefix value, an optimal assignment and the cut trace.

    Raises SizeGuardExceeded when the tree has more than ``max_components``
    connected subtrees (pass None to disable the guard).
    """
    check_tree(instance)
    count = _guard_components(instance, None, max_components)
    solver = SubtreeSolver(instance)
    full = (1 << instance.n) - 1
    trace = solver.trace(full)
    assignment = reconstruct(instance, trace)
    assert len(solver.memo) == count
    return ExactResult(trace.value, assignment, trace, len(solver.memo))


def oracle_solve(instance: CPInstance, limit: int | None = DEFAULT_ORACLE_LIMIT) -> int:
    """Maximum total benefit by enumerating every assignment."""
    check_tree(instance)
    space = math.prod(math.factorial(len(s)) for s in instance.label_sets)
    if limit is not None and space > limit:
        raise SizeGuardExceeded("oracle_assignments", space, limit)
    edges = instance.edges
    if not edges:
        return 0
    choices = [list(permutations(sorted(s))) for s in instance.label_sets]
    best = 0
    for perms in product(*choices):
        total = 0
        for u, v in edges:
            total += lcp_length(perms[u], perms[v])
        if total > best:
            best = total
    return best
