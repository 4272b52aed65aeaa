"""Formal-vector denotations: single prospects, option sets, judgments."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from coordsem import (
    And,
    Atom,
    AtomNode,
    Category,
    Not,
    OptionSet,
    Or,
    Prospect,
    UnsupportedConnectiveError,
    WorkbenchError,
    Xor,
    corpus_lookup,
    denote_one,
    denote_options,
    judge,
    option_equivalent,
    parse,
)
from coordsem.formula import renumber_coefficients

A, B, C = (AtomNode(Atom(n)) for n in "ABC")


def options_as_dicts(f) -> list[dict[str, int]]:
    return [p.as_dict() for p in denote_options(f).sorted()]


def test_denote_one_addition():
    assert denote_one(parse("A and A"), {}).as_dict() == {"A": 2}
    assert denote_one(parse("A and (B and A)"), {}).as_dict() == {"A": 2, "B": 1}


def test_denote_one_branch_choice():
    f = parse("A and (A or B)")
    assert denote_one(f, {0: 1}).as_dict() == {"A": 2}
    assert denote_one(f, {0: 0}).as_dict() == {"A": 1, "B": 1}


def test_denote_one_requires_total_assignment():
    with pytest.raises(WorkbenchError):
        denote_one(parse("A or B"), {})
    with pytest.raises(WorkbenchError):
        denote_one(parse("A or B"), {0: 2})


def test_denotation_rejects_negation_and_xor():
    for text in ("not A", "A xor B", "A and not B", "A or (B xor C)"):
        with pytest.raises(UnsupportedConnectiveError):
            denote_options(parse(text))
        with pytest.raises(UnsupportedConnectiveError):
            judge(parse(text))


OPTION_SETS = {
    "1a": [{"A": 1, "B": 1}, {"A": 1, "C": 1}],
    "1b": [{"A": 1, "B": 1}, {"A": 1, "C": 1}],
    "2a": [{"A": 1}, {"B": 1, "C": 1}],
    "2b": [{"A": 1, "B": 1}, {"A": 1, "C": 1}, {"A": 2}, {"B": 1, "C": 1}],
    "2b'": [{"A": 1, "B": 1}, {"A": 1, "C": 1}, {"A": 2}, {"B": 1, "C": 1}],
    "5a": [{"A": 1}, {"A": 1, "B": 1}],
    "5b": [{"A": 1}],
    "5c": [{"A": 1, "B": 1}, {"A": 2}],
    "5c'": [{"A": 1, "B": 1}, {"A": 2}],
    "6a": [{"A": 1}],
    "6b": [{"A": 1}],
    "6c": [{"A": 2}],
}


@pytest.mark.parametrize("label", sorted(OPTION_SETS))
def test_corpus_option_sets(label):
    assert options_as_dicts(corpus_lookup(label)) == OPTION_SETS[label]


def test_option_equivalent_pairs():
    assert option_equivalent(corpus_lookup("1a"), corpus_lookup("1b")).equal

    cmp = option_equivalent(corpus_lookup("2a"), corpus_lookup("2b"))
    assert not cmp.equal
    assert cmp.witness.as_dict() == {"A": 2}

    cmp = option_equivalent(corpus_lookup("5a"), corpus_lookup("5b"))
    assert not cmp.equal
    assert cmp.witness.as_dict() == {"A": 1, "B": 1}


def test_option_equivalence_is_or_idempotent():
    # "A or A" denotes exactly what "A" denotes, option-wise
    assert option_equivalent(corpus_lookup("6a"), corpus_lookup("6b")).equal


def test_non_idempotence_of_and():
    assert not option_equivalent(corpus_lookup("6c"), corpus_lookup("6b")).equal


@pytest.mark.parametrize("name", ["A", "B", "tall", "Q_1"])
def test_non_idempotence_for_any_atom(name):
    assert not option_equivalent(parse(f"{name} and {name}"), parse(name)).equal
    assert option_equivalent(parse(f"{name} or {name}"), parse(name)).equal


JUDGMENTS = {
    "1a": Category.ACCEPTABLE,
    "1b": Category.ACCEPTABLE,
    "2a": Category.ACCEPTABLE,
    "5a": Category.ACCEPTABLE,
    "5b": Category.ACCEPTABLE,
    "6b": Category.ACCEPTABLE,
    "6a": Category.ODD_HOBSON,
    "2b": Category.WEIRD_DOUBLE_IMAGE,
    "2b'": Category.WEIRD_DOUBLE_IMAGE,
    "5c": Category.WEIRD_DOUBLE_IMAGE,
    "5c'": Category.WEIRD_DOUBLE_IMAGE,
    "6c": Category.WEIRD_DOUBLE_IMAGE,
}


@pytest.mark.parametrize("label", sorted(JUDGMENTS))
def test_corpus_judgments(label):
    assert judge(corpus_lookup(label)).category is JUDGMENTS[label]


def test_double_image_diagnostics():
    j = judge(corpus_lookup("2b"))
    assert [(p.as_dict(), name, coeff) for p, name, coeff in j.double_images] == \
        [({"A": 2}, "A", 2)]


def test_hobson_diagnostics():
    j = judge(corpus_lookup("6a"))
    assert j.hobson_nodes == (0,)
    assert j.double_images == ()


def test_hobson_detection_is_semantic():
    # branches differ syntactically but denote the same options
    j = judge(parse("A or (A or A)"))
    assert j.category is Category.ODD_HOBSON
    assert j.hobson_nodes == (0, 1)


def test_double_image_outranks_hobson():
    j = judge(parse("(A or A) and A"))
    assert j.category is Category.WEIRD_DOUBLE_IMAGE
    assert j.hobson_nodes == (0,)  # both defects diagnosed, stronger one reported


def test_iterable_repetition_is_acceptable():
    j = judge(parse("talks:iterable and talks:iterable"))
    assert j.category is Category.ACCEPTABLE
    assert options_as_dicts(parse("talks:iterable and talks:iterable")) == [{"talks": 2}]


def test_mixed_aspects():
    # a stative double image is weird even next to an iterable one
    j = judge(parse("(talks:iterable and talks) and (A and A)"))
    assert j.category is Category.WEIRD_DOUBLE_IMAGE
    assert [(name, coeff) for _, name, coeff in j.double_images] == [("A", 2)]


def test_prospect_invariants():
    with pytest.raises(ValueError):
        Prospect(())
    with pytest.raises(ValueError):
        Prospect((("A", 0),))
    assert str(Prospect((("A", 2), ("B", 1)))) == "A + A + B"


def test_option_set_equality_is_order_insensitive():
    p1, p2 = Prospect((("A", 1),)), Prospect((("B", 1),))
    assert OptionSet((p1, p2)) == OptionSet((p2, p1))
    assert OptionSet((p1,)) != OptionSet((p1, p2))


# ---------------------------------------------------------------------------
# Properties over random denotable formulas

_leaf = st.builds(lambda n: AtomNode(Atom(n)), st.sampled_from(["A", "B", "C", "D"]))
_denotable = st.recursive(
    _leaf,
    lambda kids: st.one_of(
        st.builds(And, kids, kids),
        st.builds(lambda l, r: Or(l, r, 0), kids, kids),
    ),
    max_leaves=10,
).map(renumber_coefficients)


def _swap_children_everywhere(f):
    if isinstance(f, AtomNode):
        return f
    if isinstance(f, And):
        return And(_swap_children_everywhere(f.right), _swap_children_everywhere(f.left))
    return Or(_swap_children_everywhere(f.right), _swap_children_everywhere(f.left),
              f.coeff_id)


@given(_denotable)
def test_options_invariant_under_commutation(f):
    assert denote_options(f) == denote_options(_swap_children_everywhere(f))


@given(_denotable)
def test_option_count_bounded_by_choices(f):
    k = sum(1 for p in _paths(f))
    assert 1 <= len(denote_options(f)) <= 2 ** k


def _paths(f):
    if isinstance(f, Or):
        yield f
    if isinstance(f, (And, Or)):
        yield from _paths(f.left)
        yield from _paths(f.right)


@given(_denotable)
def test_or_free_formulas_denote_occurrence_counts(f):
    if any(True for _ in _paths(f)):
        return
    counts: dict[str, int] = {}
    def count(node):
        if isinstance(node, AtomNode):
            counts[node.atom.name] = counts.get(node.atom.name, 0) + 1
        else:
            count(node.left)
            count(node.right)
    count(f)
    assert [p.as_dict() for p in denote_options(f)] == [counts]


def test_and_associativity_of_options():
    left = parse("(A and B) and C")
    right = parse("A and (B and C)")
    assert denote_options(left) == denote_options(right)


@given(st.sampled_from("ABC"), st.sampled_from("ABC"), st.sampled_from("ABC"))
def test_arithmetic_distributivity_of_options(x, y, z):
    lhs = parse(f"{x} and ({y} or {z})")
    rhs = parse(f"({x} and {y}) or ({x} and {z})")
    assert option_equivalent(lhs, rhs).equal
