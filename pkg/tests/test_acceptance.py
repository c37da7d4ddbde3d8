"""Acceptance criteria, one test per criterion, each printing a PASS line.

Everything here is exact integer or rational arithmetic except criterion 10,
which is a seeded statistical bound.  The larger S5 enumerations run when
REDWORDS_MAX_RANK is at least 5.
"""

import random
import time
from fractions import Fraction

from conftest import requires_s5

from redwords.coxeter import SymmetricGroup
from redwords.crystal import factorization_crystal, parse_factorization
from redwords.edelman_greene import (
    crystal_component_correspondence,
    eg_insert,
    intertwining_check,
    p_transpose_reading_word,
    q_tableaux,
    same_p_tableau_iff_ck_equivalent,
)
from redwords.markov import (
    NaturalPoset,
    ProbabilityMeasure,
    build_chain,
    charpoly,
    eigenvalues_by_value,
    poly_from_eigenvalues,
    promotion_chain,
    simulate,
    spectrum,
    stationary_distribution,
    total_variation,
    tsetlin_chain,
)
from redwords.partitions import dominates, hook_length_count, staircase
from redwords.stanley import (
    omega_duality_check,
    schur_expansion,
    schur_expansion_via_eg,
    schur_expansion_via_linear_algebra,
    skew_by_s1_check,
    stanley_monomial,
    support_interval,
)
from redwords.symfunc import SymFuncExpansion
from redwords.tableaux import Tableau, tableau_crystal


def report(n, message):
    print(f"ACCEPTANCE {n}: PASS - {message}")


def test_criterion_1_reduced_word_counts(s3, s4):
    start = time.monotonic()
    assert s3.reduced_word_count(s3.longest_element) == 2
    assert len(s3.reduced_words(s3.longest_element)) == 2
    assert hook_length_count(staircase(3)) == 2
    assert s4.reduced_word_count(s4.longest_element) == 16
    assert len(set(s4.reduced_words(s4.longest_element))) == 16
    assert hook_length_count(staircase(4)) == 16
    elapsed = time.monotonic() - start
    assert elapsed < 10
    report(1, f"counts 2 and 16 match staircase hook counts ({elapsed:.2f}s)")


@requires_s5
def test_criterion_1_reduced_word_counts_s5():
    start = time.monotonic()
    s5 = SymmetricGroup(5)
    enumerated = len(set(s5.reduced_words(s5.longest_element)))
    counted = s5.reduced_word_count(s5.longest_element)
    hooks = hook_length_count(staircase(5))
    assert enumerated == counted == hooks == 768
    elapsed = time.monotonic() - start
    assert elapsed < 300
    report(1, f"S5 enumeration {enumerated} equals hook count {hooks} ({elapsed:.2f}s)")


def test_criterion_2_stanley_function_of_long_element(s3):
    w0 = s3.longest_element
    assert stanley_monomial(s3, w0) == SymFuncExpansion.from_dict(
        "monomial", {(1, 1, 1): 2, (2, 1): 1}
    )
    assert schur_expansion(s3, w0) == SymFuncExpansion.from_dict("schur", {(2, 1): 1})
    report(2, "monomial 2*m[1,1,1] + m[2,1] and schur s[2,1], exact")


def test_criterion_3_crystal_fixtures_and_isomorphism(s3):
    start = time.monotonic()
    left = factorization_crystal(s3, s3.longest_element, 3)
    assert len(left.vertices) == 8 and len(left.f_edges) == 8
    expected_left_edges = {
        (((), (1,), (2, 1)), 1, ((), (2, 1), (2,))),
        (((), (1,), (2, 1)), 2, ((1,), (), (2, 1))),
        (((), (2, 1), (2,)), 2, ((2,), (1,), (2,))),
        (((2,), (1,), (2,)), 2, ((2, 1), (), (2,))),
        (((1,), (), (2, 1)), 1, ((1,), (2,), (1,))),
        (((1,), (2,), (1,)), 1, ((1,), (2, 1), ())),
        (((2, 1), (), (2,)), 1, ((2, 1), (2,), ())),
        (((1,), (2, 1), ()), 2, ((2, 1), (2,), ())),
    }
    got = {(u.display_factors(), i, v.display_factors()) for u, i, v in left.edges()}
    assert got == expected_left_edges

    right = tableau_crystal((2, 1), 3)
    assert len(right.vertices) == 8 and len(right.f_edges) == 8
    expected_right_edges = {
        (((1, 1), (2,)), 1, ((1, 2), (2,))),
        (((1, 1), (2,)), 2, ((1, 1), (3,))),
        (((1, 1), (3,)), 1, ((1, 2), (3,))),
        (((1, 2), (2,)), 2, ((1, 3), (2,))),
        (((1, 2), (3,)), 1, ((2, 2), (3,))),
        (((1, 3), (2,)), 2, ((1, 3), (3,))),
        (((1, 3), (3,)), 1, ((2, 3), (3,))),
        (((2, 2), (3,)), 2, ((2, 3), (3,))),
    }
    assert {(u.rows, i, v.rows) for u, i, v in right.edges()} == expected_right_edges

    # the recording tableau realizes the unique isomorphism: walking the same
    # arrow sequence from both highest weights lands on matching vertices
    _, q_of = q_tableaux(s3, s3.longest_element, 3)
    (left_top, _), = left.highest_weights()
    (right_top, _), = right.highest_weights()
    pairs = {(left_top, right_top)}
    frontier = [(left_top, right_top)]
    while frontier:
        nxt = []
        for a, b in frontier:
            for i in left.index_set:
                fa, fb = left.f(a, i), right.f(b, i)
                assert (fa is None) == (fb is None)
                if fa is not None and (fa, fb) not in pairs:
                    pairs.add((fa, fb))
                    nxt.append((fa, fb))
        frontier = nxt
    assert len(pairs) == 8
    assert all(q_of[a] == b for a, b in pairs)
    elapsed = time.monotonic() - start
    assert elapsed < 1
    report(3, f"both 8-vertex crystals pinned and intertwined ({elapsed:.2f}s)")


def test_criterion_4_intertwining_exhaustive(s4):
    start = time.monotonic()
    for g in s4.elements():
        result = intertwining_check(s4, g)
        assert result.passed, (g, result)
    elapsed = time.monotonic() - start
    assert elapsed < 60
    report(4, f"insertion commutes with e/f over all of S4 ({elapsed:.2f}s)")


def test_criterion_5_three_way_schur_agreement(s4):
    for g in s4.elements():
        a = schur_expansion(s4, g)
        assert a == schur_expansion_via_eg(s4, g) == schur_expansion_via_linear_algebra(s4, g)
    s5 = SymmetricGroup(5)
    rng = random.Random(20240517)
    sample = rng.sample(s5.elements(), 20)
    for g in sample:
        a = schur_expansion(s5, g)
        assert a == schur_expansion_via_eg(s5, g) == schur_expansion_via_linear_algebra(s5, g)
    report(5, "highest-weight, insertion, and linear-solve expansions agree "
              "(all of S4 plus 20 seeded S5 draws)")


def test_criterion_6_expansion_identities(s4):
    w0 = s4.longest_element
    for g in s4.elements():
        expansion = schur_expansion(s4, g)
        lo, hi = support_interval(s4, g)
        assert expansion.coefficient(lo) == 1 and expansion.coefficient(hi) == 1
        for shape in expansion.support():
            assert dominates(shape, lo) and dominates(hi, shape)
        if s4.length(g) >= 1:
            # the involution pairs g with its inverse (equivalently with its
            # conjugate by w0); the degree-preserving form of the duality
            assert omega_duality_check(s4, g).passed
            assert skew_by_s1_check(s4, g).passed
    report(6, "dominance-interval support, transpose duality, and the "
              "one-box skew identity hold over S4")


def test_criterion_7_component_correspondence(s4):
    for g in s4.elements():
        assert crystal_component_correspondence(s4, g).passed
        assert same_p_tableau_iff_ck_equivalent(s4, g).passed
    report(7, "relation classes match crystal components in number and "
              "membership; P-equality is relation equivalence")


def test_criterion_8_exchange_chain_exact(s3, s4):
    start = time.monotonic()
    for system in (s3, s4):
        measures = [ProbabilityMeasure.uniform(system.index_set)] + [
            ProbabilityMeasure.random_rational(system.index_set, seed)
            for seed in (11, 12, 13)
        ]
        state_count = system.reduced_word_count(system.longest_element)
        for measure in measures:
            matrix = build_chain(system, measure)
            assert matrix.is_column_stochastic()  # (a)
            lines = spectrum(system, measure)  # corrected alternating sum
            assert charpoly(matrix) == poly_from_eigenvalues(
                eigenvalues_by_value(lines)
            )  # (b)
            pi = stationary_distribution(system, measure)
            vector = [pi[s] for s in matrix.states]
            assert matrix.fixes(vector) and sum(vector) == 1  # (c)
            assert sum(line.multiplicity for line in lines) == state_count  # (d)
            assert all(line.multiplicity >= 0 for line in lines)
    elapsed = time.monotonic() - start
    assert elapsed < 30
    report(8, f"stochastic, spectral, and stationary identities exact for "
              f"S3 and S4, uniform plus three seeded measures ({elapsed:.2f}s)")


def test_criterion_9_promotion_specializes_to_tsetlin():
    for n in (1, 2, 3, 4):
        for seed in (50 + n, 60 + n):
            measure = ProbabilityMeasure.random_rational(range(1, n + 1), seed)
            move_to_front = tsetlin_chain(n, measure)
            promo = promotion_chain(NaturalPoset.antichain(n), measure)
            assert promo.states == move_to_front.states
            assert promo.entries == move_to_front.entries
    report(9, "promotion on antichains equals move-to-front entry for entry, n <= 4")


def test_criterion_10_monte_carlo(s3):
    uniform = ProbabilityMeasure.uniform(s3.index_set)
    empirical = simulate(s3, uniform, steps=100_000, seed=20240101)
    tv = total_variation(empirical, stationary_distribution(s3, uniform))
    assert tv < Fraction(2, 100)
    report(10, f"seeded 100k-step walk sits at tv {float(tv):.5f} < 0.02")


def test_criterion_11_micro_examples(s3, s4):
    x = parse_factorization(s4, "(32)(31)(2)")
    assert x.e(2) == parse_factorization(s4, "(2)(321)(2)")
    assert x.f(2) == parse_factorization(s4, "(321)(3)(2)")

    pair = eg_insert(parse_factorization(s4, "(1)(2)(32)"))
    assert pair.p == Tableau.from_rows([[1, 3], [2], [3]])
    assert pair.q == Tableau.from_rows([[1, 1], [2], [3]])
    assert p_transpose_reading_word(pair.p) == (3, 1, 2, 3)

    assert s4.exchange(2, (1, 2, 3, 1, 2, 1)) == (2, 1, 2, 3, 2, 1)
    report(11, "pinned operator, insertion, and exchange micro-examples hold")
