"""Exact-rational probability engine and the relevance theorem searches."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from coordsem import (
    And,
    MissingAtomError,
    Or,
    RationalDist,
    SearchStatus,
    SizeLimitError,
    ZeroProbabilityError,
    check_disjunction_corollary,
    check_explosion_irrelevance,
    check_frege_theorem,
    check_relevance_ordering,
    cond_prob,
    grid,
    llr,
    parse,
    prob,
)
from coordsem.relevance import LikelihoodPair, grid_size

F = Fraction


def dist(atoms, **cells):
    """Shorthand: keys like ``tf`` give the cell (True, False) in atom order."""
    table = {tuple(ch == "t" for ch in key): value for key, value in cells.items()}
    return RationalDist.from_cells(atoms, table)


def test_distribution_validation():
    with pytest.raises(ValueError):
        RationalDist(("A",), (F(1, 2), F(1, 4)))  # does not sum to 1
    with pytest.raises(ValueError):
        RationalDist(("A",), (F(3, 2), F(-1, 2)))  # negative mass
    with pytest.raises(ValueError):
        RationalDist(("B", "A"), (F(1, 4),) * 4)  # unsorted atoms
    with pytest.raises(ValueError):
        RationalDist(("A",), (F(1),))  # wrong arity


def test_prob_basics():
    u1 = RationalDist.uniform(["A"])
    assert prob(u1, parse("A")) == F(1, 2)
    assert prob(u1, parse("A or not A")) == 1
    assert prob(u1, parse("A and not A")) == 0
    skewed = dist(["A"], t=F(1, 3), f=F(2, 3))
    assert prob(skewed, parse("A")) == F(1, 3)


def test_prob_unknown_atom():
    with pytest.raises(MissingAtomError):
        prob(RationalDist.uniform(["A"]), parse("B"))


def test_cond_prob():
    u2 = RationalDist.uniform(["A", "C"])
    assert cond_prob(u2, parse("C"), parse("A")) == F(1, 2)  # independent
    assert cond_prob(u2, parse("A"), parse("A")) == 1
    # P(A and not C) = 0 with both marginals strictly between 0 and 1
    d = dist(["A", "C"], tt=F(1, 2), ff=F(1, 2))
    assert cond_prob(d, parse("C"), parse("A")) == 1
    assert prob(d, parse("C")) == F(1, 2)


def test_cond_prob_zero_event():
    d = dist(["A", "C"], tt=F(1))
    with pytest.raises(ZeroProbabilityError):
        cond_prob(d, parse("C"), parse("not A"))


def test_grid_counts_match_stars_and_bars():
    assert len(list(grid(["A"], 2))) == 3 == grid_size(1, 2)
    assert len(list(grid(["A", "B"], 4))) == 35 == grid_size(2, 4)
    assert grid_size(2, 4) == comb(4 + 3, 3)


def test_grid_masses_sum_to_one_exactly():
    for d in grid(["A", "B"], 5):
        assert sum(d.masses, F(0)) == 1


def test_grid_limits():
    with pytest.raises(SizeLimitError):
        list(grid(["A", "B", "C", "D"], 2))
    with pytest.raises(SizeLimitError):
        list(grid(["A"], 13))


EVENTS = [parse(t) for t in ("A", "B", "not A", "A and B", "A or B", "A xor B")]


def test_prob_is_finitely_additive():
    for d in grid(["A", "B"], 3):
        for f in EVENTS:
            for g in EVENTS:
                assert prob(d, Or(f, g, 0)) + prob(d, And(f, g)) == \
                    prob(d, f) + prob(d, g)


@pytest.mark.parametrize("den", [2, 4, 6, 12])
def test_frege_theorem_no_counterexample(den):
    result = check_frege_theorem(den)
    assert result.status is SearchStatus.NO_COUNTEREXAMPLE
    assert result.checked > 0
    assert result.witness is None


def test_frege_checked_counts_both_premise_variants():
    # at denominator 6 each variant admits the same 15 premise-satisfying
    # distributions (delta plus alpha entails beta)
    assert check_frege_theorem(6).checked == 30


def test_frege_without_uncertainty_premise_fails():
    result = check_frege_theorem(6, premise_variants=("none",))
    assert result.status is SearchStatus.COUNTEREXAMPLE
    d = result.witness
    assert prob(d, parse("not (A and not C)")) == 1  # alpha holds
    pa = prob(d, parse("A"))
    assert pa > 0
    assert cond_prob(d, parse("C"), parse("A")) <= prob(d, parse("C"))


def test_frege_rejects_unknown_variant():
    with pytest.raises(ValueError):
        check_frege_theorem(4, premise_variants=("gamma",))


@pytest.mark.parametrize("den", [2, 4, 6, 12])
def test_disjunction_corollary_no_counterexample(den):
    result = check_disjunction_corollary(den)
    assert result.status is SearchStatus.NO_COUNTEREXAMPLE
    assert result.checked > 0


def test_disjunction_corollary_checked_count():
    assert check_disjunction_corollary(6).checked == 15


def test_extreme_negative_relevance():
    d = dist(["A", "B"], tf=F(1, 2), ft=F(1, 2))
    assert prob(d, parse("A and B")) == 0
    assert cond_prob(d, parse("B"), parse("A")) == 0
    assert cond_prob(d, parse("B"), parse("A")) < prob(d, parse("B"))


def test_explosion_irrelevance_on_grid():
    events = [parse(t) for t in ("B", "not B", "A", "A and B", "A or B")]
    for d in grid(["A", "B"], 4):
        for b in events:
            assert check_explosion_irrelevance(d, b)


def test_explosion_irrelevance_degenerate_point_mass():
    d = dist(["A", "B"], tt=F(1))
    assert check_explosion_irrelevance(d, parse("B or not B"))


def test_llr_self_evidence_is_infinitely_positive():
    d = dist(["A", "H"], tt=F(1, 4), tf=F(1, 4), ft=F(1, 4), ff=F(1, 4))
    pair = llr(d, parse("H"), parse("H"))
    assert pair == LikelihoodPair(F(1), F(0))
    assert pair.sign() == 1
    finite = llr(d, parse("A"), parse("H"))
    assert finite < pair  # infinite relevance dominates by cross-multiplication


def test_llr_independence_is_zero():
    d = RationalDist.uniform(["A", "H"])
    assert llr(d, parse("A"), parse("H")).sign() == 0


def test_llr_requires_uncertain_hypothesis():
    d = dist(["A", "H"], tt=F(1, 2), ft=F(1, 2))
    with pytest.raises(ZeroProbabilityError):
        llr(d, parse("A"), parse("H"))


def test_relevance_ordering_denominator_4_is_vacuous():
    # no quarter-mass distribution meets the conditional-independence filter
    result = check_relevance_ordering(4)
    assert result.status is SearchStatus.NO_COUNTEREXAMPLE
    assert result.checked == 0


def test_relevance_ordering_nonvacuous_denominators():
    result6 = check_relevance_ordering(6)
    assert result6.status is SearchStatus.NO_COUNTEREXAMPLE
    assert result6.checked == 1
    result8 = check_relevance_ordering(8)
    assert result8.status is SearchStatus.NO_COUNTEREXAMPLE
    assert result8.checked == 9


def test_relevance_ordering_denominator_limit():
    with pytest.raises(SizeLimitError):
        check_relevance_ordering(9)


def test_conditional_independence_filter_accepts_product_distribution():
    # H-part concentrated on A,B; not-H-part uniform: independent given each
    d = dist(["A", "B", "H"],
             ttt=F(1, 2), ttf=F(1, 8), tff=F(1, 8), ftf=F(1, 8), fff=F(1, 8))
    h, not_h = parse("H"), parse("not H")
    conj = parse("A and B")
    assert cond_prob(d, conj, h) == cond_prob(d, parse("A"), h) * cond_prob(d, parse("B"), h)
    assert cond_prob(d, conj, not_h) == \
        cond_prob(d, parse("A"), not_h) * cond_prob(d, parse("B"), not_h)
    assert llr(d, parse("A"), h).sign() == 1
    assert llr(d, parse("B"), h).sign() == 1
    assert cond_prob(d, h, conj) < 1
    # and the ordering itself holds here
    strongest = max(llr(d, parse("A"), h), llr(d, parse("B"), h))
    assert llr(d, parse("A or B"), h) <= strongest
    assert strongest <= llr(d, conj, h)


def test_equirelevant_disjuncts_with_disjoint_support():
    # with P(A and B) = 0 and equally relevant disjuncts, the disjunction is
    # exactly as relevant as either disjunct (mediant of equal ratios)
    d = dist(["A", "B", "H"],
             tft=F(1, 4), ftt=F(1, 4), tff=F(1, 8), ftf=F(1, 8), fff=F(1, 4))
    h = parse("H")
    lr_a, lr_b = llr(d, parse("A"), h), llr(d, parse("B"), h)
    assert lr_a.same_relevance(lr_b)
    assert llr(d, parse("A or B"), h).same_relevance(lr_a)


@given(st.integers(min_value=1, max_value=8))
def test_grid_sizes_formula(den):
    assert sum(1 for _ in grid(["A"], den)) == grid_size(1, den)
