import pytest
from hypothesis import given, strategies as st

from commonprefix import (
    Assignment,
    CPInstance,
    InvalidAssignment,
    NotATreeError,
    ParseError,
    evaluate,
    lcp_length,
    parse_cp,
    parse_solution,
    serialize_cp,
    serialize_solution,
    validate,
)
from commonprefix.generators import gen_tree

from oracles import brute_lcp

PATH3 = CPInstance.from_lists([(0, 1), (1, 2)], [{"1", "2"}, {"1", "2", "3"}, {"2", "3"}])


@pytest.mark.parametrize("a, b, expected", [
    (["y", "x"], ["y", "z"], 1),
    ([], ["a", "b"], 0),
    ([2, 1], [2, 1, 3], 2),
])
def test_lcp_length(a, b, expected):
    assert lcp_length(a, b) == expected


seqs = st.lists(st.sampled_from("abc"), max_size=6)


@given(seqs, seqs)
def test_lcp_properties(a, b):
    k = lcp_length(a, b)
    assert k == lcp_length(b, a) == brute_lcp(a, b)
    assert k <= min(len(a), len(b))


def test_evaluate_path():
    rep = evaluate(PATH3, Assignment([("2", "1"), ("2", "1", "3"), ("2", "3")]))
    assert rep.per_edge == {(0, 1): 2, (1, 2): 1}
    assert rep.total == 3


def test_evaluate_star():
    star = CPInstance.from_lists([(0, 1), (0, 2), (0, 3)], [set("abc"), set("ab"), {"a"}, set("bc")])
    rep = evaluate(star, Assignment(["abc", "ab", "a", "bc"]))
    assert rep.total == 3


def test_evaluate_disjoint_sets_is_zero():
    inst = CPInstance.from_lists([(0, 1), (1, 2)], [{"a", "b"}, {"c"}, {"d", "e"}])
    assert evaluate(inst, Assignment([("b", "a"), ("c",), ("d", "e")])).total == 0


def test_evaluate_rejects_non_permutation():
    with pytest.raises(InvalidAssignment):
        evaluate(PATH3, Assignment([("2",), ("2", "1", "3"), ("2", "3")]))
    with pytest.raises(InvalidAssignment):
        evaluate(PATH3, Assignment([("2", "2"), ("2", "1", "3"), ("2", "3")]))


def test_validate():
    assert validate(PATH3) is None
    assert validate(CPInstance(3, ((0, 1),), ({"a"}, {"a"}, {"a"}))).startswith("disconnected")
    assert validate(CPInstance(3, ((0, 1), (1, 2), (0, 2)), ({"a"},) * 3)).startswith("cycle")
    assert validate(CPInstance(2, ((0, 0),), ({"a"}, {"a"}))).startswith("self-loop")


def test_label_tokens_checked():
    with pytest.raises(ValueError):
        CPInstance(1, (), ({"a b"},))
    with pytest.raises(ValueError):
        CPInstance(1, (), ({""},))


def test_parse_examples():
    one = parse_cp("cp 1\nlabels 0 a")
    assert one.n == 1 and one.label_sets == (frozenset({"a"}),)
    two = parse_cp("# a comment\ncp 2\nedge 0 1\nlabels 0 x y\n\nlabels 1 y z\n")
    assert two.edges == ((0, 1),)
    assert two.label_sets == (frozenset("xy"), frozenset("yz"))


def test_parse_empty_label_line():
    inst = parse_cp("cp 2\nedge 1 0\nlabels 0\nlabels 1 a\n")
    assert inst.label_sets[0] == frozenset()
    assert serialize_cp(inst) == "cp 2\nedge 0 1\nlabels 0\nlabels 1 a\n"


@pytest.mark.parametrize("text, exc, fragment", [
    ("cp 2\nedge 0 0\nlabels 0 a\nlabels 1 b", NotATreeError, "self-loop"),
    ("cp 3\nedge 0 1\nlabels 0 a\nlabels 1 b\nlabels 2 c", NotATreeError, "disconnected"),
    ("cp 2\nedge 0 1\nlabels 0 a a\nlabels 1 b", ParseError, "duplicate label"),
    ("cp 2\nedge 0 1\nlabels 0 a\nlabel 1 b", ParseError, "line 4"),
    ("cp 2\nedge 0 5\nlabels 0 a\nlabels 1 b", ParseError, "out of range"),
    ("cp x", ParseError, "line 1"),
    ("", ParseError, "empty"),
    ("cp 2\nedge 0 1\nlabels 0 a", ParseError, "vertex 1"),
])
def test_parse_errors(text, exc, fragment):
    with pytest.raises(exc, match=fragment):
        parse_cp(text)


def test_serialize_is_sorted_canonical():
    inst = CPInstance(3, ((2, 1), (1, 0)), ({"b", "a"}, {"c"}, {"z", "y"}))
    assert serialize_cp(inst) == "cp 3\nedge 0 1\nedge 1 2\nlabels 0 a b\nlabels 1 c\nlabels 2 y z\n"


@given(st.integers(1, 9), st.integers(0, 10**6))
def test_serialize_parse_roundtrip(n, seed):
    inst = gen_tree(n, 5, 0, 4, seed)
    text = serialize_cp(inst)
    assert parse_cp(text) == inst
    assert serialize_cp(parse_cp(text)) == text


@given(st.integers(1, 7), st.integers(0, 10**6))
def test_total_bounded_by_min_set_sizes(n, seed):
    inst = gen_tree(n, 4, 0, 4, seed)
    perms = [tuple(sorted(s)) for s in inst.label_sets]
    rep = evaluate(inst, Assignment(perms))
    sets = inst.label_sets
    for (u, v), b in rep.per_edge.items():
        assert b <= min(len(sets[u]), len(sets[v]))
    assert rep.total == sum(rep.per_edge.values())
    assert rep.total <= sum(min(len(sets[u]), len(sets[v])) for u, v in inst.edges)


def test_solution_roundtrip():
    a = Assignment([("2", "1"), ("2", "1", "3"), ()])
    text = serialize_solution(a, 3, ["L 2"])
    assert text == "value 3\n# L 2\nperm 0 2 1\nperm 1 2 1 3\nperm 2\n"
    assert parse_solution(text) == (3, a)


def test_interning():
    assert PATH3.alphabet == ("1", "2", "3")
    assert PATH3.label_masks == (0b011, 0b111, 0b110)
    assert PATH3.labels_of_mask(0b101) == ["1", "3"]
