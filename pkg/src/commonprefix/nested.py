"""Nested Neighborhoods, Maximum Edge Biclique, and their link to stars.

A bipartite graph G = (U, V, E) is stored as one neighbourhood per U vertex.
A Nested Neighborhoods (NN) solution picks V' and a chain u_1..u_k whose
neighbourhoods restricted to V' shrink along the chain; its cost is the sum of
the restricted sizes.  A star with center labels V and leaf labels Gamma(u)
encodes the same graph as a Common Prefix instance.

Note that NN cost never exceeds the Common Prefix optimum of the star, but it
can fall short of it: CP lets a leaf match only part of the center prefix,
while NN charges the whole restricted neighbourhood.  Center {a,b,c} with
leaves {a,b,c}, {a,c}, {a,b} has CP optimum 6 but NN optimum 5.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InfeasibleSolution, NotAStarError, ParseError, SizeGuardExceeded
from .instance import Assignment, CPInstance, _content_lines, _int, check_assignment, check_tree, lcp_length

__all__ = [
    "NNInstance",
    "NNSolution",
    "Biclique",
    "nn_to_star",
    "star_to_nn",
    "translate_nn_to_cp",
    "translate_cp_to_nn",
    "solve_nn_exact",
    "solve_ebcs_exact",
    "biclique_to_nn",
    "extract_prefix_biclique",
    "tight_family",
    "parse_nn",
    "serialize_nn",
    "DEFAULT_MAX_SUBSET_BITS",
]

DEFAULT_MAX_SUBSET_BITS = 24


def _popcount(x):
    return bin(x).count("1")


def _set_of(mask):
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _mask_of(items):
    m = 0
    for i in items:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class NNInstance:
    """Bipartite graph with ``n_u`` x ``n_v`` sides; ``adjacency[u]`` is Gamma(u).

    ``names`` optionally gives label tokens for the V side.  They must be
    strictly increasing so that V index order matches sorted label order.
    """

    n_u: int
    n_v: int
    adjacency: tuple
    names: tuple | None = None

    def __post_init__(self):
        adj = tuple(frozenset(a) for a in self.adjacency)
        if len(adj) != self.n_u:
            raise ValueError(f"expected {self.n_u} neighbourhoods, got {len(adj)}")
        for u, a in enumerate(adj):
            for v in a:
                if not 0 <= v < self.n_v:
                    raise ValueError(f"neighbour {v} of u={u} out of range for n_v={self.n_v}")
        object.__setattr__(self, "adjacency", adj)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.n_v:
                raise ValueError("names must have one entry per V vertex")
            if any(not t or any(c.isspace() for c in t) for t in names):
                raise ValueError("names must be nonempty tokens without whitespace")
            if any(a >= b for a, b in zip(names, names[1:])):
                raise ValueError("names must be strictly increasing")
            object.__setattr__(self, "names", names)

    @cached_property
    def masks(self) -> tuple:
        return tuple(_mask_of(a) for a in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)

    def v_names(self) -> tuple:
        if self.names is not None:
            return self.names
        width = len(str(max(self.n_v - 1, 0)))
        return tuple(f"v{j:0{width}d}" for j in range(self.n_v))

    def structure(self):
        """(n_u, n_v, adjacency) without names, for structural comparison."""
        return self.n_u, self.n_v, self.adjacency


@dataclass(frozen=True)
class NNSolution:
    """A nested chain: ``y[i] = |Gamma(chain[i]) & vprime|``, ``cost = sum(y)``.

    Use :meth:`from_chain` to build one against a graph; it verifies nesting.
    """

    chain: tuple
    vprime: frozenset
    y: tuple
    cost: int

    def __post_init__(self):
        if len(set(self.chain)) != len(self.chain):
            raise InfeasibleSolution("chain repeats a U vertex")
        if len(self.y) != len(self.chain) or self.cost != sum(self.y):
            raise InfeasibleSolution("y / cost inconsistent with chain")
        if any(a < b for a, b in zip(self.y, self.y[1:])):
            raise InfeasibleSolution("y must be non-increasing")

    @classmethod
    def from_chain(cls, G: NNInstance, chain, vprime) -> "NNSolution":
        chain = tuple(chain)
        vprime = frozenset(vprime)
        vmask = _mask_of(vprime)
        restricted = [G.masks[u] & vmask for u in chain]
        for i, (a, b) in enumerate(zip(restricted, restricted[1:])):
            if b & ~a:
                raise InfeasibleSolution(
                    f"not nested: Gamma(u{chain[i + 1]}) & V' is not inside Gamma(u{chain[i]}) & V'"
                )
        y = tuple(_popcount(r) for r in restricted)
        return cls(chain, vprime, y, sum(y))

    def check(self, G: NNInstance) -> None:
        again = NNSolution.from_chain(G, self.chain, self.vprime)
        if again != self:
            raise InfeasibleSolution("stored sizes do not match the graph")


@dataclass(frozen=True)
class Biclique:
    uside: frozenset
    vside: frozenset

    def __post_init__(self):
        object.__setattr__(self, "uside", frozenset(self.uside))
        object.__setattr__(self, "vside", frozenset(self.vside))

    @property
    def edge_count(self) -> int:
        return len(self.uside) * len(self.vside)

    def is_complete(self, G: NNInstance) -> bool:
        return all(self.vside <= G.adjacency[u] for u in self.uside)


# -- reductions ---------------------------------------------------------------

def nn_to_star(G: NNInstance) -> CPInstance:
    """Star with center 0 labelled by all of V and leaf ``u + 1`` labelled Gamma(u)."""
    names = G.v_names()
    labels = [frozenset(names)]
    labels += [frozenset(names[v] for v in a) for a in G.adjacency]
    edges = tuple((0, u + 1) for u in range(G.n_u))
    return CPInstance(G.n_u + 1, edges, tuple(labels))


def _leaves(instance: CPInstance, center: int) -> list:
    check_tree(instance)
    if not 0 <= center < instance.n:
        raise NotAStarError(f"center {center} out of range")
    for u, v in instance.edges:
        if center not in (u, v):
            raise NotAStarError(f"edge ({u}, {v}) is not incident to center {center}")
    return [v for v in range(instance.n) if v != center]


def star_to_nn(instance: CPInstance, center: int) -> NNInstance:
    """U = leaves in id order, V = center labels in sorted order.

    Leaf labels absent from the center cannot match it and are dropped.
    """
    leaves = _leaves(instance, center)
    names = tuple(sorted(instance.label_sets[center]))
    index = {t: j for j, t in enumerate(names)}
    adj = tuple(frozenset(index[t] for t in instance.label_sets[u] if t in index) for u in leaves)
    return NNInstance(len(leaves), len(names), adj, names)


def translate_nn_to_cp(solution: NNSolution, star: CPInstance, center: int = 0) -> Assignment:
    """Assignment on the star worth at least ``solution.cost``.

    The center lists the innermost restricted neighbourhood first, then each
    enclosing layer, then its other labels; each chain leaf starts with its
    own restricted neighbourhood in the same order.
    """
    G = star_to_nn(star, center)
    solution.check(G)
    leaves = _leaves(star, center)
    names = G.names
    vmask = _mask_of(solution.vprime)
    restricted = [G.masks[u] & vmask for u in solution.chain]
    center_order = []
    seen = 0
    for r in reversed(restricted):
        center_order += sorted(_set_of(r & ~seen))
        seen |= r
    center_perm = [names[j] for j in center_order]
    center_perm += sorted(star.label_sets[center] - set(center_perm))
    perms = [None] * star.n
    perms[center] = tuple(center_perm)
    in_chain = {}
    for u, r in zip(solution.chain, restricted):
        in_chain[u] = _popcount(r)
    for u, leaf in enumerate(leaves):
        y = in_chain.get(u, 0)
        head = center_perm[:y]
        perms[leaf] = tuple(head) + tuple(sorted(star.label_sets[leaf] - set(head)))
    return Assignment(tuple(perms))


def _best_chain(restricted):
    """Maximum-weight nested chain over (u, mask) pairs; weight of u is popcount(mask).

    Returns (cost, chain).  Equal masks are all taken; empty masks are skipped.
    """
    groups = {}
    for u, m in restricted:
        if m:
            groups.setdefault(m, []).append(u)
    if not groups:
        return 0, ()
    keys = sorted(groups, key=lambda m: (-_popcount(m), m))
    weight = [len(groups[m]) * _popcount(m) for m in keys]
    best = list(weight)
    pred = [-1] * len(keys)
    for i, m in enumerate(keys):
        for j in range(i):
            # keys[j] comes earlier, so it is at least as large; need a strict superset
            if keys[j] != m and m & ~keys[j] == 0 and best[j] + weight[i] > best[i]:
                best[i] = best[j] + weight[i]
                pred[i] = j
    end = max(range(len(keys)), key=lambda i: (best[i], -i))
    path = []
    while end != -1:
        path.append(end)
        end = pred[end]
    chain = []
    for i in reversed(path):
        chain += sorted(groups[keys[i]])
    return best[path[0]], tuple(chain)


def translate_cp_to_nn(assignment: Assignment, star: CPInstance, center: int = 0) -> NNSolution:
    """NN solution read off a star assignment.

    V' is the longest center prefix that some leaf matches.  Leaves are then
    arranged in the heaviest nested chain over V'; when the benefited leaves'
    restricted neighbourhoods are already nested (e.g. they equal their
    matched prefixes) that chain is the leaves in decreasing benefit order and
    its cost is at least the assignment's total.
    """
    check_assignment(star, assignment)
    G = star_to_nn(star, center)
    leaves = _leaves(star, center)
    cperm = assignment.perms[center]
    benefit = [lcp_length(cperm, assignment.perms[leaf]) for leaf in leaves]
    m = max(benefit, default=0)
    index = {t: j for j, t in enumerate(G.names)}
    vprime = frozenset(index[t] for t in cperm[:m])
    vmask = _mask_of(vprime)
    ranked = sorted((u for u in range(G.n_u) if benefit[u] > 0), key=lambda u: (-benefit[u], u))
    restricted = [G.masks[u] & vmask for u in ranked]
    if all(b & ~a == 0 for a, b in zip(restricted, restricted[1:])):
        return NNSolution.from_chain(G, ranked, vprime)
    _, chain = _best_chain([(u, G.masks[u] & vmask) for u in range(G.n_u)])
    return NNSolution.from_chain(G, chain, vprime)


# -- exact solvers ------------------------------------------------------------

def solve_nn_exact(G: NNInstance, max_bits: int | None = DEFAULT_MAX_SUBSET_BITS) -> NNSolution:
    """Optimal NN solution: best nested chain for every V' subset.

    Ties go to the smallest V' in bitmask order.
    """
    if max_bits is not None and G.n_v > max_bits:
        raise SizeGuardExceeded("nn_subset_bits", G.n_v, max_bits)
    masks = G.masks
    best_cost, best_mask, best_chain = 0, 0, ()
    for vmask in range(1 << G.n_v):
        cost, chain = _best_chain([(u, m & vmask) for u, m in enumerate(masks)])
        if cost > best_cost:
            best_cost, best_mask, best_chain = cost, vmask, chain
    return NNSolution.from_chain(G, best_chain, _set_of(best_mask))


def solve_ebcs_exact(G: NNInstance, max_bits: int | None = DEFAULT_MAX_SUBSET_BITS) -> Biclique:
    """Maximum edge biclique by enumerating subsets of the smaller side.

    Each subset is paired with its full common neighbourhood; ties go to the
    smaller subset mask.
    """
    small = min(G.n_u, G.n_v)
    if max_bits is not None and small > max_bits:
        raise SizeGuardExceeded("ebcs_subset_bits", small, max_bits)
    masks = G.masks
    best = (0, 0, 0)
    if G.n_u <= G.n_v:
        for s in range(1, 1 << G.n_u):
            common = (1 << G.n_v) - 1
            for u in _set_of(s):
                common &= masks[u]
            e = _popcount(s) * _popcount(common)
            if e > best[0]:
                best = (e, s, common)
        return Biclique(_set_of(best[1]), _set_of(best[2]))
    for t in range(1, 1 << G.n_v):
        partner = _mask_of(u for u in range(G.n_u) if masks[u] & t == t)
        e = _popcount(t) * _popcount(partner)
        if e > best[0]:
            best = (e, t, partner)
    return Biclique(_set_of(best[2]), _set_of(best[1]))


def biclique_to_nn(B: Biclique, G: NNInstance | None = None) -> NNSolution:
    """A biclique as an NN solution: every restricted neighbourhood equals ``vside``."""
    chain = tuple(sorted(B.uside))
    if G is not None:
        if not B.is_complete(G):
            raise InfeasibleSolution("not a biclique of G")
        return NNSolution.from_chain(G, chain, B.vside)
    y = (len(B.vside),) * len(chain)
    return NNSolution(chain, B.vside, y, sum(y))


def extract_prefix_biclique(solution: NNSolution, G: NNInstance) -> Biclique:
    """Best prefix biclique ({u_1..u_i}, Gamma(u_i) & V') of a nested chain.

    Its edge count ``i * y_i`` is at least ``cost / H_k`` for chain length k.
    """
    solution.check(G)
    best_e, best = 0, Biclique(frozenset(), frozenset())
    for i, (u, y) in enumerate(zip(solution.chain, solution.y), 1):
        if i * y > best_e:
            best_e = i * y
            best = Biclique(solution.chain[:i], G.adjacency[u] & solution.vprime)
    return best


def tight_family(n: int) -> NNInstance:
    """Gamma(u_i) = {v_1, ..., v_floor(n/i)} for i = 1..n (0-based storage)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return NNInstance(n, n, tuple(frozenset(range(n // i)) for i in range(1, n + 1)))


# -- text format --------------------------------------------------------------

def parse_nn(text: str) -> NNInstance:
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError("empty input: expected 'nn <nU> <nV>' header")
    lineno, fields = first
    if fields[0] != "nn" or len(fields) != 3:
        raise ParseError("expected header 'nn <nU> <nV>'", lineno)
    n_u, n_v = _int(fields[1], lineno), _int(fields[2], lineno)
    adj = [set() for _ in range(n_u)]
    for lineno, fields in lines:
        if fields[0] != "edge" or len(fields) != 3:
            raise ParseError("expected 'edge <u> <v>'", lineno)
        u, v = _int(fields[1], lineno, "vertex id"), _int(fields[2], lineno, "vertex id")
        if u >= n_u:
            raise ParseError(f"u id {u} out of range for nU={n_u}", lineno)
        if v >= n_v:
            raise ParseError(f"v id {v} out of range for nV={n_v}", lineno)
        if v in adj[u]:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        adj[u].add(v)
    return NNInstance(n_u, n_v, tuple(adj))


def serialize_nn(G: NNInstance) -> str:
    out = [f"nn {G.n_u} {G.n_v}"]
    for u, a in enumerate(G.adjacency):
        out += [f"edge {u} {v}" for v in sorted(a)]
    return "\n".join(out) + "\n"
