"""Layered witness construction and arithmetical rank bounds."""

import itertools

import pytest

from matroidalkit import (DomainError, Monomial, MonomialIdeal, ara_report,
                          build_sv_witness, make_ideal, squarefree_monomials,
                          squarefree_veronese, verify_sv_conditions)
from matroidalkit.matroids import enumerate_matroidal
from matroidalkit.schmitt_vogel import (CONDITION_PRODUCTS, CONDITION_SINGLETON,
                                        CONDITION_UNION)


class TestWitnessConstruction:
    def test_veronese_layers(self):
        witness = build_sv_witness(squarefree_veronese(3, 2))
        assert witness.d == 2 and witness.r == 1
        assert [sorted(str(m) for m in layer) for layer in witness.layers] == [
            ["x1*x2*x3"],
            ["x1*x2", "x1*x3", "x2*x3"],
        ]
        assert [str(q) for q in witness.q] == \
            ["x1*x2*x3", "x1*x2 + x1*x3 + x2*x3"]
        assert witness.ara_upper == 2

    def test_two_block_layers(self, two_blocks_n4):
        witness = build_sv_witness(two_blocks_n4)
        assert witness.r == 2
        assert [len(layer) for layer in witness.layers] == [1, 4, 4]
        assert witness.layers[0] == (Monomial((1, 1, 1, 1)),)
        # bottom layer is exactly the generating set
        assert set(witness.layers[2]) == set(two_blocks_n4.gens)
        assert (witness.ara_lower, witness.ara_upper) == (3, 3)
        assert witness.ara_exact

    def test_layer_elements_are_members(self, two_blocks_n5):
        witness = build_sv_witness(two_blocks_n5)
        for layer in witness.layers:
            for m in layer:
                assert two_blocks_n5.contains(m)

    def test_union_is_all_squarefree_members(self, two_blocks_n4):
        witness = build_sv_witness(two_blocks_n4)
        union = set(itertools.chain.from_iterable(witness.layers))
        members = set()
        for bits in range(1 << 4):
            u = Monomial.from_bitmask(4, bits)
            if two_blocks_n4.contains(u):
                members.add(u)
        assert union == members

    def test_bottom_layer_counts_generators(self):
        for n in (3, 4, 5):
            for d in (2, 3):
                if d > n:
                    continue
                for ideal in enumerate_matroidal(n, d):
                    witness = build_sv_witness(ideal)
                    assert witness.layers[-1] == ideal.gens
                    assert len(witness.layers[-1]) == ideal.mu
                    assert witness.ara_upper == n - d + 1

    def test_member_layering_matches_divisor_route(self, path_n4):
        # squarefree members by degree == monomials some generator divides
        for deg in range(2, 5):
            by_degree = set(path_n4.squarefree_members(deg))
            brute = {m for m in squarefree_monomials(4, deg)
                     if any(g.divides(m) for g in path_n4.gens)}
            assert by_degree == brute

    def test_preconditions(self, squared_pivot_n3):
        with pytest.raises(DomainError):
            build_sv_witness(squared_pivot_n3)  # not squarefree
        with pytest.raises(DomainError):
            build_sv_witness(make_ideal(3, [(1, 1, 0)]))  # support gap
        with pytest.raises(DomainError):
            build_sv_witness(MonomialIdeal.maximal(3))  # d=1 has its own path
        with pytest.raises(DomainError):
            build_sv_witness(MonomialIdeal.zero(3))


class TestConditionChecks:
    def test_constructed_witnesses_always_pass(self):
        for n in (3, 4):
            for d in (2, 3):
                if d > n:
                    continue
                for ideal in enumerate_matroidal(n, d):
                    witness = build_sv_witness(ideal)
                    report = verify_sv_conditions(witness.layers, ideal)
                    assert report
                    assert report.violated is None

    def test_double_first_layer(self):
        ideal = squarefree_veronese(3, 2)
        witness = build_sv_witness(ideal)
        layers = ((Monomial((1, 1, 1)), Monomial((1, 1, 0))),
                  tuple(m for m in witness.layers[1] if m != Monomial((1, 1, 0))))
        report = verify_sv_conditions(layers, ideal)
        assert not report
        assert report.violated == CONDITION_SINGLETON

    def test_stray_monomial(self):
        ideal = squarefree_veronese(3, 2)
        witness = build_sv_witness(ideal)
        layers = (witness.layers[0], witness.layers[1][:-1])
        report = verify_sv_conditions(layers, ideal)
        assert report.violated == CONDITION_UNION
        assert report.witness is not None

    def test_unabsorbed_pair_product(self, path_n4):
        # P_0 = {x1x2} cannot divide x2x3 * x3x4
        members = []
        for deg in (2, 3, 4):
            members.extend(path_n4.squarefree_members(deg))
        first = Monomial((1, 1, 0, 0))
        layers = ((first,), tuple(m for m in members if m != first))
        report = verify_sv_conditions(layers, path_n4)
        assert report.violated == CONDITION_PRODUCTS
        layer_index, p, q = report.witness
        assert layer_index == 1
        assert not first.divides(p.lcm(q) * p.gcd(q))


class TestAraReport:
    def test_two_block_example(self, two_blocks_n4):
        report = ara_report(two_blocks_n4)
        assert (report.lower, report.upper, report.exact) == (3, 3, True)
        assert report.witness is not None
        assert len(report.elements) == 3

    def test_degree_one_uses_variables(self):
        report = ara_report(MonomialIdeal.maximal(3))
        assert (report.degree, report.lower, report.upper) == (1, 3, 3)
        assert report.exact and report.witness is None
        assert [str(e) for e in report.elements] == ["x1", "x2", "x3"]

    def test_veronese_is_complete_intersection(self):
        from matroidalkit import associated_primes
        for n, d in [(3, 2), (4, 2), (4, 3), (5, 4)]:
            ideal = squarefree_veronese(n, d)
            report = ara_report(ideal)
            assert report.exact
            assert report.lower == n - d + 1
            assert report.lower == associated_primes(ideal).height

    def test_element_count_matches_upper(self):
        for ideal in enumerate_matroidal(4, 2):
            report = ara_report(ideal)
            assert len(report.elements) == report.upper == 3
            assert report.exact

    def test_non_matroidal_rejected(self):
        with pytest.raises(DomainError):
            ara_report(make_ideal(4, [(1, 1, 0, 0), (0, 0, 1, 1)]))

    def test_support_gap_rejected(self):
        with pytest.raises(DomainError):
            ara_report(make_ideal(3, [(1, 1, 0)]))
