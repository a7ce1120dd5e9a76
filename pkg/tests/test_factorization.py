"""Factorization sets, distances, R-classes, catenary degrees."""

import random

import pytest

from satsemi import (Factorization, FactorizationSet, NumericalSemigroup,
                     betti_candidates, distance, element_catenary,
                     factorizations, factorizations_with_support, length_set,
                     r_classes, semigroup_catenary)

import oracles


def exps(Z):
    return [f.exps for f in Z.factorizations]


def test_factorizations_examples(example):
    assert exps(factorizations(example, 0)) == [(0, 0, 0, 0, 0)]
    assert set(exps(factorizations(example, 66))) == {(0, 2, 0, 0, 0), (6, 0, 0, 1, 0)}
    assert set(exps(factorizations(example, 70))) == {
        (14, 0, 0, 0, 0), (0, 1, 0, 0, 1), (0, 0, 1, 1, 0)}
    assert exps(factorizations(example, 7)) == []  # not a member
    assert exps(factorizations(example, -3)) == []


def test_factorizations_order_is_lex_descending(example):
    for s in (66, 70, 74, 100):
        vectors = exps(factorizations(example, s))
        assert vectors == sorted(vectors, reverse=True)


def test_factorizations_complete_against_product_oracle():
    rng = random.Random(31)
    for _ in range(15):
        gens = oracles.random_coprime_gens(rng, low=2, high=25, k_max=4)
        S = NumericalSemigroup.from_generators(gens)
        for s in rng.sample(range(0, 3 * max(S.conductor, 2)), 6):
            expected = oracles.factorizations_by_product(S.min_gens, s)
            assert sorted(exps(factorizations(S, s))) == expected, (gens, s)


def test_length_set(example):
    assert length_set(example, 0) == (0,)
    assert length_set(example, 66) == (2, 7)
    assert length_set(example, 70) == (2, 14)
    with pytest.raises(ValueError):
        length_set(example, 32)


def test_support_is_one_based():
    f = Factorization((0, 2, 0, 1, 0))
    assert f.support == (2, 4)
    assert f.length == 3
    assert Factorization((0, 0)).support == ()


def test_distance_examples():
    x = Factorization((0, 2, 0, 0, 0))
    y = Factorization((6, 0, 0, 1, 0))
    assert distance(x, x) == 0
    assert distance(x, y) == 7
    assert distance(Factorization((0, 1, 0, 0, 1)), Factorization((0, 0, 1, 1, 0))) == 2
    with pytest.raises(ValueError):
        distance(Factorization((1, 2)), Factorization((1, 2, 3)))


def test_distance_metric_axioms(example):
    rng = random.Random(37)
    batches = [factorizations(example, s).factorizations for s in range(66, 75)]
    for _ in range(8):
        gens = oracles.random_coprime_gens(rng, low=2, high=15, k_max=4)
        S = NumericalSemigroup.from_generators(gens)
        s = rng.randrange(0, 2 * max(S.conductor, 4))
        batches.append(factorizations(S, s).factorizations)
    for facs in batches:
        for x in facs:
            for y in facs:
                d = distance(x, y)
                assert d >= 0
                assert (d == 0) == (x == y)
                assert d == distance(y, x)
                for z in facs:
                    assert d <= distance(x, z) + distance(z, y)


def test_r_classes_example_70(example):
    part = r_classes(factorizations(example, 70))
    assert len(part.classes) == 3
    assert part.min_lengths == (14, 2, 2)
    assert part.m_value == 14
    assert len(r_classes(factorizations(example, 66)).classes) == 2


def test_r_classes_mixed_support():
    S = NumericalSemigroup.from_generators([5, 7, 8, 9, 11])
    part = r_classes(factorizations(S, 22))
    grouped = [set(f.exps for f in cl) for cl in part.classes]
    assert {(0, 2, 1, 0, 0), (1, 0, 1, 1, 0), (3, 1, 0, 0, 0)} in grouped
    assert {(0, 0, 0, 0, 2)} in grouped
    assert len(part.classes) == 2


def test_r_classes_cross_support_disjoint():
    rng = random.Random(41)
    for _ in range(15):
        gens = oracles.random_coprime_gens(rng, low=2, high=20, k_max=5)
        S = NumericalSemigroup.from_generators(gens)
        s = rng.randrange(0, 2 * max(S.conductor, 4))
        Z = factorizations(S, s)
        if not Z.factorizations:
            continue
        part = r_classes(Z)
        assert sum(len(cl) for cl in part.classes) == len(Z.factorizations)
        for a, cl_a in enumerate(part.classes):
            for cl_b in part.classes[a + 1:]:
                for x in cl_a:
                    for y in cl_b:
                        assert not set(x.support) & set(y.support)


def test_r_classes_empty_set_rejected():
    with pytest.raises(ValueError):
        r_classes(FactorizationSet(7, ()))


def test_element_catenary(example):
    assert element_catenary(example, 0) == 0
    assert element_catenary(example, 70) == 14
    assert element_catenary(example, 66) == 7
    with pytest.raises(ValueError):
        element_catenary(example, 31)


def test_element_catenary_matches_chain_oracle():
    rng = random.Random(43)
    for _ in range(10):
        gens = oracles.random_coprime_gens(rng, low=2, high=18, k_max=4)
        S = NumericalSemigroup.from_generators(gens)
        for s in S.elements_up_to(2 * (S.conductor + max(gens)))[:40]:
            vectors = oracles.factorizations_by_product(S.min_gens, s)
            assert element_catenary(S, s) == oracles.chain_catenary(vectors)


def test_betti_candidates(example):
    assert betti_candidates(example) == tuple(range(66, 75))
    assert betti_candidates(NumericalSemigroup.from_generators([2, 3])) == (6,)
    assert betti_candidates(NumericalSemigroup.from_generators([1])) == ()


def test_betti_candidates_cover_multi_class_elements():
    rng = random.Random(47)
    for _ in range(10):
        gens = oracles.random_coprime_gens(rng, low=2, high=15, k_max=4)
        S = NumericalSemigroup.from_generators(gens)
        candidates = set(betti_candidates(S))
        for s in S.elements_up_to(2 * (S.conductor + max(gens))):
            Z = factorizations(S, s)
            if len(Z.factorizations) >= 2 and len(r_classes(Z).classes) >= 2:
                assert s in candidates, (gens, s)


def test_semigroup_catenary(example):
    assert semigroup_catenary(example) == 14
    assert semigroup_catenary(NumericalSemigroup.from_generators([2, 3])) == 3
    assert semigroup_catenary(NumericalSemigroup.from_generators([1])) == 0
    # brute-force truth for this one: the maximum sits at 20 = 9 + 11
    assert semigroup_catenary(NumericalSemigroup.from_generators([5, 9, 11, 12, 13])) == 4


def test_semigroup_catenary_equals_full_scan():
    rng = random.Random(53)
    for _ in range(8):
        gens = oracles.random_coprime_gens(rng, low=2, high=15, k_max=4)
        S = NumericalSemigroup.from_generators(gens)
        window = 2 * (S.conductor + max(gens))
        full = max(element_catenary(S, s) for s in S.elements_up_to(window))
        assert semigroup_catenary(S) == full, gens


def test_factorizations_with_support(example):
    only = factorizations_with_support(example, 70, 1)
    assert [f.exps for f in only] == [(14, 0, 0, 0, 0)]
    assert [f.exps for f in factorizations_with_support(example, 70, 2)] == [(0, 1, 0, 0, 1)]
    assert factorizations_with_support(example, 0, 1) == ()
    with pytest.raises(ValueError):
        factorizations_with_support(example, 70, 0)
    with pytest.raises(ValueError):
        factorizations_with_support(example, 70, 6)


def test_factorizations_with_support_nonempty_when_shiftable(example):
    for i, a in enumerate(example.min_gens, start=1):
        for s in (66, 70, 74):
            if example.contains(s - a):
                assert factorizations_with_support(example, s, i), (s, i)
