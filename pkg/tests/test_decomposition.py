"""Irreducible decomposition, associated primes, and the degree-2 criteria."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidalkit import (DomainError, Monomial, MonomialIdeal, Partition,
                          StructuralError, associated_primes, criteria_check,
                          irreducible_decomposition, make_ideal, p1_classify,
                          partition_degree2, squarefree_veronese, veronese)
from matroidalkit.decomposition import MATROIDAL, POWER_OF_M
from matroidalkit.matroids import enumerate_matroidal


def intersect_all(ideals):
    result = ideals[0]
    for other in ideals[1:]:
        result = result.intersect(other)
    return result


class TestIrreducibleDecomposition:
    def test_squared_pivot(self, squared_pivot_n3):
        comps = irreducible_decomposition(squared_pivot_n3)
        assert set(comps) == {make_ideal(3, [(2, 0, 0)]),
                              make_ideal(3, [(0, 1, 0), (0, 0, 1)])}

    def test_single_squarefree_gen(self):
        comps = irreducible_decomposition(make_ideal(2, [(1, 1)]))
        assert set(comps) == {make_ideal(2, [(1, 0)]), make_ideal(2, [(0, 1)])}

    def test_two_block_example(self, two_blocks_n4):
        comps = irreducible_decomposition(two_blocks_n4)
        assert set(comps) == {
            MonomialIdeal.from_supports(4, [{1}, {2}]),
            MonomialIdeal.from_supports(4, [{3}, {4}])}

    def test_squared_maximal(self):
        comps = irreducible_decomposition(veronese(2, 2))
        assert set(comps) == {make_ideal(2, [(2, 0), (0, 1)]),
                              make_ideal(2, [(1, 0), (0, 2)])}

    def test_irreducible_input_fixed(self):
        ideal = make_ideal(3, [(2, 0, 0), (0, 3, 0)])
        assert irreducible_decomposition(ideal) == (ideal,)

    def test_zero_unit_rejected(self):
        for bad in (MonomialIdeal.zero(2), MonomialIdeal.unit(2)):
            with pytest.raises(DomainError):
                irreducible_decomposition(bad)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_intersection_reproduces_ideal(self, data):
        n = data.draw(st.integers(2, 5), label="n")
        exps = st.tuples(*[st.integers(0, 2)] * n)
        ideal = make_ideal(n, data.draw(st.lists(exps, min_size=1, max_size=5)))
        if ideal.is_unit:
            return
        comps = irreducible_decomposition(ideal)
        assert intersect_all(comps) == ideal
        # components are irreducible: generated by pure variable powers
        for comp in comps:
            assert all(len(g.support) == 1 for g in comp.gens)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_membership_splits_across_components(self, data):
        # m in I iff m lies in every component, probed on random monomials
        n = data.draw(st.integers(2, 4), label="n")
        exps = st.tuples(*[st.integers(0, 2)] * n)
        ideal = make_ideal(n, data.draw(st.lists(exps, min_size=1, max_size=4)))
        if ideal.is_unit:
            return
        comps = irreducible_decomposition(ideal)
        for probe_exp in itertools.product(range(3), repeat=n):
            probe = Monomial(probe_exp)
            assert ideal.contains(probe) == all(c.contains(probe) for c in comps)

    def test_irredundant(self):
        # no component may be dropped
        rng = random.Random(41)
        for _ in range(25):
            n = rng.randint(2, 4)
            gens = [tuple(rng.randint(0, 2) for _ in range(n))
                    for _ in range(rng.randint(1, 4))]
            ideal = make_ideal(n, gens)
            if ideal.is_unit or ideal.is_zero:
                continue
            comps = irreducible_decomposition(ideal)
            for k in range(len(comps)):
                rest = comps[:k] + comps[k + 1:]
                assert not rest or intersect_all(rest) != ideal


class TestAssociatedPrimes:
    def test_two_block_example(self, two_blocks_n4):
        dec = associated_primes(two_blocks_n4)
        assert dec.ass == frozenset({frozenset({1, 2}), frozenset({3, 4})})
        assert dec.minimal == dec.ass
        assert dec.height == 2 and dec.big_height == 2
        assert dec.is_unmixed

    def test_mixed_heights_example(self, two_blocks_n5):
        dec = associated_primes(two_blocks_n5)
        assert dec.ass == frozenset({frozenset({1, 2}), frozenset({3, 4, 5})})
        assert (dec.height, dec.big_height) == (2, 3)
        assert not dec.is_unmixed

    def test_squared_pivot_example(self, squared_pivot_n3):
        dec = associated_primes(squared_pivot_n3)
        assert dec.ass == frozenset({frozenset({1}), frozenset({2, 3})})
        assert dec.ass == dec.minimal

    def test_embedded_prime(self):
        # (x1^2, x1x2) = (x1) meet (x1^2, x2): ass gains the embedded {1,2}
        ideal = make_ideal(2, [(2, 0), (1, 1)])
        dec = associated_primes(ideal)
        assert dec.minimal == frozenset({frozenset({1})})
        assert dec.ass == frozenset({frozenset({1}), frozenset({1, 2})})
        assert (dec.height, dec.big_height) == (1, 2)
        assert not dec.is_unmixed

    def test_squarefree_ass_equals_min(self):
        rng = random.Random(97)
        for _ in range(40):
            n = rng.randint(2, 6)
            pool = [tuple(rng.randint(0, 1) for _ in range(n))
                    for _ in range(rng.randint(1, 5))]
            ideal = make_ideal(n, [p for p in pool if any(p)] or [(1,) * n])
            dec = associated_primes(ideal)
            assert dec.ass == dec.minimal

    def test_minimal_primes_are_covers(self, two_blocks_n5):
        dec = associated_primes(two_blocks_n5)
        supports = [g.support for g in two_blocks_n5.gens]
        for prime in dec.minimal:
            assert all(prime & s for s in supports)
            for var in prime:
                smaller = prime - {var}
                assert any(not (smaller & s) for s in supports)

    def test_zero_unit_rejected(self):
        for bad in (MonomialIdeal.zero(3), MonomialIdeal.unit(3)):
            with pytest.raises(DomainError):
                associated_primes(bad)


class TestPartition:
    def test_two_block_example(self, two_blocks_n4):
        part = partition_degree2(two_blocks_n4)
        assert set(part.blocks) == {frozenset({1, 2}), frozenset({3, 4})}
        assert part.m == 2

    def test_veronese_blocks_are_singletons(self):
        part = partition_degree2(squarefree_veronese(3, 2))
        assert set(part.blocks) == {frozenset({1}), frozenset({2}), frozenset({3})}
        assert part.m == 3

    def test_unbalanced_blocks(self, two_blocks_n5):
        part = partition_degree2(two_blocks_n5)
        assert set(part.blocks) == {frozenset({1, 2}), frozenset({3, 4, 5})}

    def test_block_membership_characterizes_ideal(self):
        # xy in I iff x and y land in different blocks, all pairs, all ideals
        for n in range(2, 6):
            for ideal in enumerate_matroidal(n, 2):
                part = partition_degree2(ideal)
                for x, y in itertools.combinations(range(1, n + 1), 2):
                    pair = Monomial.from_support(n, {x, y})
                    same = part.block_of(x) == part.block_of(y)
                    assert ideal.contains(pair) == (not same)

    def test_partition_is_partition(self):
        for ideal in enumerate_matroidal(5, 2):
            part = partition_degree2(ideal)
            assert part.m >= 2
            union = set()
            for block in part.blocks:
                assert block and not (union & block)
                union |= block
            assert union == set(range(1, 6))

    def test_preconditions(self, squared_pivot_n3):
        with pytest.raises(DomainError):
            partition_degree2(squared_pivot_n3)  # degree 3
        with pytest.raises(DomainError):
            partition_degree2(make_ideal(4, [(1, 1, 0, 0), (0, 0, 1, 1)]))
        with pytest.raises(DomainError):
            partition_degree2(make_ideal(3, [(1, 1, 0)]))  # not full support

    def test_partition_type_validation(self):
        with pytest.raises(StructuralError):
            Partition(3, (frozenset({1, 2}), frozenset({2, 3})))
        with pytest.raises(StructuralError):
            Partition(3, (frozenset({1, 2}),))


class TestCriteria:
    def test_n4_report(self, two_blocks_n4):
        report = criteria_check(two_blocks_n4)
        assert report.n == 4 and report.degree == 2
        assert report.height == 2 and report.is_unmixed
        assert report.block_count == 2
        assert report.c1_identity is True
        assert report.ass_count == 2
        assert report.t2_condition is True
        assert len(report.colon_facts) == 4
        assert all(h == 2 and unmixed for _, h, unmixed in report.colon_facts)

    def test_n5_report(self, two_blocks_n5):
        report = criteria_check(two_blocks_n5)
        assert not report.is_unmixed
        assert report.c1_identity is False  # 2*(5-2) = 6 != 5
        # every colon is unmixed but the heights split, so T2 fails
        assert all(unmixed for _, _, unmixed in report.colon_facts)
        assert {h for _, h, unmixed in report.colon_facts} == {2, 3}
        assert report.t2_condition is False

    def test_colon_heights_n5(self, two_blocks_n5):
        facts = {i: h for i, h, _ in criteria_check(two_blocks_n5).colon_facts}
        # colon by x1 leaves the big block, colon by x3 the small one
        assert facts[1] == 3 and facts[2] == 3
        assert facts[3] == 2 and facts[4] == 2 and facts[5] == 2

    def test_veronese_n5(self):
        report = criteria_check(squarefree_veronese(5, 2))
        assert report.height == 4
        assert report.block_count == 5
        assert report.ass_count == 5
        assert report.c1_identity is True  # 5*(5-4) = 5
        assert report.is_unmixed

    def test_degree3_skips_partition_fields(self):
        report = criteria_check(squarefree_veronese(4, 3))
        assert report.degree == 3
        assert report.block_count is None and report.c1_identity is None
        assert report.t2_condition == report.is_unmixed

    def test_preconditions(self, squared_pivot_n3):
        with pytest.raises(DomainError):
            criteria_check(squared_pivot_n3)  # not squarefree
        with pytest.raises(DomainError):
            criteria_check(MonomialIdeal.maximal(3))  # d = 1


class TestClassification:
    def test_squared_maximal_branch(self):
        assert p1_classify(veronese(3, 2)) == POWER_OF_M
        assert p1_classify(veronese(1, 2)) == POWER_OF_M

    def test_matroidal_branch(self):
        assert p1_classify(make_ideal(3, [(1, 1, 0), (1, 0, 1)])) == MATROIDAL
        assert p1_classify(squarefree_veronese(4, 2)) == MATROIDAL

    def test_preconditions(self):
        with pytest.raises(DomainError):
            p1_classify(make_ideal(2, [(2, 0)]))  # not full support
        with pytest.raises(DomainError):
            p1_classify(make_ideal(2, [(1, 0)]))  # degree 1
        with pytest.raises(DomainError):
            p1_classify(make_ideal(4, [(1, 1, 0, 0), (0, 0, 1, 1)]))
        # embedded prime breaks Ass = Min
        with pytest.raises(DomainError):
            p1_classify(make_ideal(2, [(2, 0), (1, 1)]))
