from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from redwords.coxeter import SymmetricGroup
from redwords.crystal import decreasing_factorizations
from redwords.partitions import dominates, staircase
from redwords.stanley import (
    TruncationError,
    omega_duality_check,
    reduced_word_count_from_squarefree,
    schur_expansion,
    schur_expansion_via_eg,
    schur_expansion_via_linear_algebra,
    skew_by_s1_check,
    stanley_monomial,
    support_interval,
)
from redwords.symfunc import SymFuncExpansion, omega, s1_perp, support_interval as interval_of


def mono(terms):
    return SymFuncExpansion.from_dict("monomial", terms)


def schur(terms):
    return SymFuncExpansion.from_dict("schur", terms)


# ----------------------------------------------------------------------
# expansion container


def test_expansion_formatting():
    assert str(mono({(1, 1, 1): 2, (2, 1): 1})) == "2*m[1,1,1] + m[2,1]"
    assert str(schur({(2, 1): 1})) == "s[2,1]"
    assert str(schur({(): 1})) == "1"
    assert str(SymFuncExpansion.zero("schur")) == "0"


def test_expansion_json_roundtrip():
    expansion = mono({(3, 1): 4, (2, 2): 1})
    data = expansion.to_json_dict()
    assert SymFuncExpansion.from_json_dict(data) == expansion


def test_expansion_rejects_bad_terms():
    with pytest.raises(ValueError):
        SymFuncExpansion("schur", (((1, 2), 1),))
    with pytest.raises(ValueError):
        SymFuncExpansion("weird", ())


def test_omega_and_s1perp():
    assert omega(schur({(2, 1): 1, (3,): 2})) == schur({(2, 1): 1, (1, 1, 1): 2})
    assert s1_perp(schur({(2, 1): 1})) == schur({(2,): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        omega(mono({(1,): 1}))


def test_interval_of_support():
    assert interval_of(schur({(2, 1): 1})) == ((2, 1), (2, 1))
    assert interval_of(schur({(3, 1): 1, (2, 2): 2, (2, 1, 1): 1})) == (
        (2, 1, 1),
        (3, 1),
    )
    with pytest.raises(ValueError):
        interval_of(schur({(3, 1): 1, (2, 2): 2}))  # incomparable extremes


# ----------------------------------------------------------------------
# monomial expansion


def test_monomial_pinned(s3):
    w0 = s3.longest_element
    assert stanley_monomial(s3, w0) == mono({(1, 1, 1): 2, (2, 1): 1})
    assert stanley_monomial(s3, s3.identity) == mono({(): 1})
    assert stanley_monomial(s3, s3.generator(1)) == mono({(1,): 1})


def test_monomial_brute_force_oracle(s4):
    # oracle: enumerate the factorizations and tally exact weight vectors
    for g in [s4.evaluate((1, 2, 3, 2)), s4.evaluate((2, 1, 3)), s4.longest_element]:
        length = s4.length(g)
        counts = Counter(
            fz.weight() for fz in decreasing_factorizations(s4, g, length)
        )
        expected = {
            mu: counts[tuple(mu) + (0,) * (length - len(mu))]
            for mu in set(stanley_monomial(s4, g).support())
        }
        assert stanley_monomial(s4, g).as_dict() == expected


def test_monomial_truncation_rejected(s4):
    with pytest.raises(TruncationError):
        stanley_monomial(s4, s4.longest_element, 5)


def test_squarefree_coefficient_counts_reduced_words(s4):
    for g in s4.elements():
        assert reduced_word_count_from_squarefree(s4, g) == s4.reduced_word_count(g)


def test_squarefree_coefficient_sampled_s5():
    import random

    s5 = SymmetricGroup(5)
    rng = random.Random(7)
    for g in rng.sample(s5.elements(), 8):
        assert reduced_word_count_from_squarefree(s5, g) == s5.reduced_word_count(g)


# ----------------------------------------------------------------------
# Schur expansions three ways


def test_schur_pinned(s3, s4):
    assert schur_expansion(s3, s3.longest_element) == schur({(2, 1): 1})
    assert schur_expansion(s3, s3.identity) == schur({(): 1})
    assert schur_expansion(s4, s4.evaluate((1, 2, 3, 2))) == schur({(2, 1, 1): 1})
    assert schur_expansion_via_eg(s3, s3.longest_element) == schur({(2, 1): 1})
    assert schur_expansion_via_linear_algebra(s3, s3.generator(1)) == schur({(1,): 1})


def test_longest_element_is_single_staircase():
    for n in (2, 3, 4):
        system = SymmetricGroup(n)
        assert schur_expansion(system, system.longest_element) == schur(
            {staircase(n): 1}
        )


def test_three_way_agreement_exhaustive(s4):
    for g in s4.elements():
        a = schur_expansion(s4, g)
        b = schur_expansion_via_eg(s4, g)
        c = schur_expansion_via_linear_algebra(s4, g)
        assert a == b == c, g


def test_schur_positivity(s4):
    for g in s4.elements():
        assert all(coeff >= 1 for _, coeff in schur_expansion(s4, g).terms)


def test_support_interval(s3, s4):
    assert support_interval(s3, s3.longest_element) == ((2, 1), (2, 1))
    assert support_interval(s3, s3.generator(1)) == ((1,), (1,))
    assert support_interval(s4, s4.evaluate((1, 2, 3, 2))) == ((2, 1, 1), (2, 1, 1))


def test_support_interval_brackets_everything(s4):
    for g in s4.elements():
        expansion = schur_expansion(s4, g)
        lo, hi = support_interval(s4, g)
        assert expansion.coefficient(lo) == 1
        assert expansion.coefficient(hi) == 1
        for shape in expansion.support():
            assert dominates(shape, lo)
            assert dominates(hi, shape)


def test_omega_duality_exhaustive(s4):
    for g in s4.elements():
        if s4.length(g) >= 1:
            assert omega_duality_check(s4, g).passed


def test_skew_by_s1(s3, s4):
    # the smallest case reduces to the empty shape
    assert skew_by_s1_check(s3, s3.generator(1)).passed
    report = skew_by_s1_check(s3, s3.longest_element)
    assert report.passed
    lhs = s1_perp(schur_expansion(s3, s3.longest_element))
    assert lhs == schur({(2,): 1, (1, 1): 1})
    for g in s4.elements():
        if s4.length(g) >= 1:
            assert skew_by_s1_check(s4, g).passed
    with pytest.raises(ValueError):
        skew_by_s1_check(s3, s3.identity)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 119))
def test_three_way_agreement_sampled_s5(index):
    s5 = SymmetricGroup(5)
    g = s5.elements()[index]
    assert (
        schur_expansion(s5, g)
        == schur_expansion_via_eg(s5, g)
        == schur_expansion_via_linear_algebra(s5, g)
    )
