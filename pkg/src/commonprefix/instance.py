"""Common Prefix instances on trees: data model, benefit evaluation, text I/O.

A vertex carries a set of string labels.  Internally labels are interned to
dense integer ids (their rank in the sorted alphabet) so that label sets can
be handled as integer bitmasks; everything user-facing uses the original
tokens.  The alphabet is always derived from the label sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidAssignment, NotATreeError, ParseError

__all__ = [
    "CPInstance",
    "Assignment",
    "BenefitReport",
    "lcp_length",
    "evaluate",
    "validate",
    "check_tree",
    "parse_cp",
    "serialize_cp",
    "parse_solution",
    "serialize_solution",
]


def _check_token(tok):
    if not isinstance(tok, str) or not tok or any(c.isspace() for c in tok):
        raise ValueError(f"invalid label token {tok!r}: must be nonempty without whitespace")
    return tok


@dataclass(frozen=True)
class CPInstance:
    """A tree on vertices ``0..n-1`` with one label set per vertex.

    Construction normalizes edges to ``(min, max)`` pairs in sorted order but
    does not check the tree shape; use :func:`validate` for that.
    """

    n: int
    edges: tuple
    label_sets: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        sets = tuple(frozenset(_check_token(t) for t in s) for s in self.label_sets)
        if len(sets) != self.n:
            raise ValueError(f"expected {self.n} label sets, got {len(sets)}")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "label_sets", sets)

    @classmethod
    def from_lists(cls, edges: Iterable, label_sets: Sequence[Iterable[str]]) -> "CPInstance":
        label_sets = list(label_sets)
        return cls(len(label_sets), tuple(edges), tuple(label_sets))

    @cached_property
    def alphabet(self) -> tuple:
        return tuple(sorted(frozenset().union(*self.label_sets)))

    @cached_property
    def label_id(self) -> dict:
        return {tok: i for i, tok in enumerate(self.alphabet)}

    @cached_property
    def label_masks(self) -> tuple:
        """Per-vertex label set as a bitmask over interned label ids."""
        ids = self.label_id
        out = []
        for s in self.label_sets:
            m = 0
            for tok in s:
                m |= 1 << ids[tok]
            out.append(m)
        return tuple(out)

    @cached_property
    def adjacency(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def labels_of_mask(self, mask: int) -> list:
        """Tokens for a label bitmask, in sorted order."""
        alpha = self.alphabet
        out = []
        while mask:
            low = mask & -mask
            out.append(alpha[low.bit_length() - 1])
            mask ^= low
        return out


@dataclass(frozen=True)
class Assignment:
    """One label sequence per vertex (meant to be a permutation of its set)."""

    perms: tuple

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))


@dataclass(frozen=True)
class BenefitReport:
    per_edge: dict
    total: int


def lcp_length(a: Sequence, b: Sequence) -> int:
    """Length of the longest common prefix of two sequences."""
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def check_assignment(instance: CPInstance, assignment: Assignment) -> None:
    if len(assignment.perms) != instance.n:
        raise InvalidAssignment(f"expected {instance.n} permutations, got {len(assignment.perms)}")
    for v, (p, s) in enumerate(zip(assignment.perms, instance.label_sets)):
        if len(p) != len(s) or set(p) != s:
            raise InvalidAssignment(f"perm of vertex {v} is not a permutation of its label set")


def evaluate(instance: CPInstance, assignment: Assignment) -> BenefitReport:
    """Per-edge longest-common-prefix benefits and their total."""
    check_assignment(instance, assignment)
    perms = assignment.perms
    per_edge = {(u, v): lcp_length(perms[u], perms[v]) for u, v in instance.edges}
    return BenefitReport(per_edge, sum(per_edge.values()))


def validate(instance: CPInstance):
    """Return None if ``instance`` is a valid tree instance, else a diagnostic string.

    The diagnostic starts with one of ``vertex-out-of-range``, ``self-loop``,
    ``cycle`` or ``disconnected`` and names the first violation found.
    """
    n = instance.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in instance.edges:
        if not (0 <= u < n and 0 <= v < n):
            return f"vertex-out-of-range: edge ({u}, {v}) with n={n}"
        if u == v:
            return f"self-loop: edge ({u}, {v})"
        ru, rv = find(u), find(v)
        if ru == rv:
            return f"cycle: edge ({u}, {v}) closes a cycle"
        parent[ru] = rv
    roots = {find(x) for x in range(n)}
    if len(roots) > 1:
        return f"disconnected: {len(roots)} components"
    return None


def check_tree(instance: CPInstance) -> None:
    diag = validate(instance)
    if diag is not None:
        raise NotATreeError(f"not a tree: {diag}")


# -- text formats -------------------------------------------------------------

def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok, lineno, what="integer"):
    if not tok.isdigit():
        raise ParseError(f"expected nonnegative {what}, got {tok!r}", lineno)
    return int(tok)


def parse_cp(text: str) -> CPInstance:
    """Parse the ``cp`` instance format; raises ParseError or NotATreeError."""
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError("empty input: expected 'cp <n>' header")
    lineno, fields = first
    if fields[0] != "cp" or len(fields) != 2:
        raise ParseError("expected header 'cp <n>'", lineno)
    n = _int(fields[1], lineno)
    if n < 1:
        raise ParseError("n must be >= 1", lineno)
    edges = []
    labels = [None] * n
    last = lineno
    for lineno, fields in lines:
        last = lineno
        kw = fields[0]
        if kw == "edge":
            if len(fields) != 3:
                raise ParseError("expected 'edge <u> <v>'", lineno)
            u, v = _int(fields[1], lineno, "vertex id"), _int(fields[2], lineno, "vertex id")
            for x in (u, v):
                if x >= n:
                    raise ParseError(f"vertex id {x} out of range for n={n}", lineno)
            edges.append((u, v))
        elif kw == "labels":
            if len(fields) < 2:
                raise ParseError("expected 'labels <v> <tok> ...'", lineno)
            v = _int(fields[1], lineno, "vertex id")
            if v >= n:
                raise ParseError(f"vertex id {v} out of range for n={n}", lineno)
            if labels[v] is not None:
                raise ParseError(f"second labels line for vertex {v}", lineno)
            toks = fields[2:]
            if len(set(toks)) != len(toks):
                dup = next(t for t in toks if toks.count(t) > 1)
                raise ParseError(f"duplicate label {dup!r} at vertex {v}", lineno)
            labels[v] = frozenset(toks)
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno)
    missing = [v for v in range(n) if labels[v] is None]
    if missing:
        raise ParseError(f"no labels line for vertex {missing[0]}", last)
    inst = CPInstance(n, tuple(edges), tuple(labels))
    check_tree(inst)
    return inst


def serialize_cp(instance: CPInstance) -> str:
    out = [f"cp {instance.n}"]
    out += [f"edge {u} {v}" for u, v in instance.edges]
    for v, s in enumerate(instance.label_sets):
        out.append(" ".join(["labels", str(v), *sorted(s)]))
    return "\n".join(out) + "\n"


def serialize_solution(assignment: Assignment, value: int, comments: Sequence[str] = ()) -> str:
    out = [f"value {value}"]
    out += [f"# {c}" for c in comments]
    for v, p in enumerate(assignment.perms):
        out.append(" ".join(["perm", str(v), *p]))
    return "\n".join(out) + "\n"


def parse_solution(text: str):
    """Parse a solution file into ``(value, Assignment)``."""
    value = None
    perms = {}
    for lineno, fields in _content_lines(text):
        if fields[0] == "value":
            if len(fields) != 2 or value is not None:
                raise ParseError("expected a single 'value <total>' line", lineno)
            value = _int(fields[1], lineno)
        elif fields[0] == "perm":
            if len(fields) < 2:
                raise ParseError("expected 'perm <v> <tok> ...'", lineno)
            v = _int(fields[1], lineno, "vertex id")
            if v in perms:
                raise ParseError(f"second perm line for vertex {v}", lineno)
            perms[v] = tuple(fields[2:])
        else:
            raise ParseError(f"unknown keyword {fields[0]!r}", lineno)
    if value is None:
        raise ParseError("missing 'value' line")
    if sorted(perms) != list(range(len(perms))):
        raise ParseError("perm lines must cover vertices 0..n-1")
    return value, Assignment(tuple(perms[v] for v in range(len(perms))))
