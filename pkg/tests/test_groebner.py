"""The polynomial engine: Buchberger, normal forms, radical membership."""

import random
from fractions import Fraction

import pytest

from matroidalkit import (DomainError, Monomial, PairBudgetExceeded,
                          Polynomial, StructuralError, buchberger,
                          certify_witness, normal_form, radical_membership,
                          squarefree_veronese)
from matroidalkit.groebner import MonomialOrder, _spoly
from matroidalkit.schmitt_vogel import build_sv_witness


def poly(nvars, terms, field=None):
    return Polynomial(nvars, terms, field)


def random_poly(rng, nvars, field=None):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        ev = tuple(rng.randint(0, 2) for _ in range(nvars))
        terms[ev] = rng.randint(-3, 3)
    return Polynomial(nvars, terms, field)


class TestPolynomialArithmetic:
    def test_normalization(self):
        p = poly(2, {(1, 0): 1, (0, 1): 0})
        assert list(p.terms) == [(1, 0)]
        assert poly(2, {}).is_zero

    def test_add_mul(self):
        x, y = poly(2, {(1, 0): 1}), poly(2, {(0, 1): 1})
        assert (x + y) * (x - y) == x * x - y * y
        assert (x + y) * (x + y) == x * x + poly(2, {(1, 1): 2}) + y * y

    def test_gf2_squaring(self):
        xp1 = poly(1, {(1,): 1, (0,): 1}, field=2)
        assert xp1 * xp1 == poly(1, {(2,): 1, (0,): 1}, field=2)

    def test_field_conversion(self):
        p = poly(2, {(1, 0): Fraction(1, 2)})
        q = p.in_field(32003)
        assert q.terms[(1, 0)] == pow(2, -1, 32003)
        with pytest.raises(StructuralError):
            q.in_field(None)

    def test_rejects_bad_terms(self):
        with pytest.raises(StructuralError):
            poly(2, {(1,): 1})
        with pytest.raises(StructuralError):
            poly(2, {(-1, 0): 1})

    def test_display_order(self):
        p = poly(3, {(1, 1, 0): 1, (0, 0, 1): -1, (2, 0, 0): 1})
        assert str(p) == "x1^2 + x1*x2 - x3"


class TestBuchberger:
    def test_monomial_ideal_is_its_own_basis(self):
        basis = buchberger([poly(2, {(1, 0): 3}), poly(2, {(0, 1): 5})])
        assert [g.terms for g in basis.generators] == \
            [{(1, 0): 1}, {(0, 1): 1}]

    def test_zero_input(self):
        assert buchberger([poly(2, {})]).generators == ()

    def test_mixed_fields_rejected(self):
        with pytest.raises(StructuralError):
            buchberger([poly(1, {(1,): 1}), poly(1, {(1,): 1}, field=2)])

    def test_unit_short_circuit(self):
        basis = buchberger([poly(2, {(0, 0): 2})])
        assert basis.is_trivial
        assert [g.terms for g in basis.generators] == [{(0, 0): 1}]

    def test_witness_pair_example(self):
        # q1 = x1x2 + x1x3 + x2x3, q0 = x1x2x3; (x1x2)^2 lies in (q0, q1)
        q1 = poly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
        q0 = poly(3, {(1, 1, 1): 1})
        basis = buchberger([q1, q0])
        square = poly(3, {(2, 2, 0): 1})
        assert normal_form(square, basis).is_zero
        # and the membership identity behind it checks out directly
        x1x2 = poly(3, {(1, 1, 0): 1})
        x1_plus_x2 = poly(3, {(1, 0, 0): 1, (0, 1, 0): 1})
        assert square == x1x2 * q1 - x1_plus_x2 * q0

    def test_classic_two_polynomial_run(self):
        # x1^2 - x2, x1x2 - x1: basis must expose x2^2 - x2
        f = poly(2, {(2, 0): 1, (0, 1): -1})
        g = poly(2, {(1, 1): 1, (1, 0): -1})
        basis = buchberger([f, g])
        probe = poly(2, {(0, 2): 1, (0, 1): -1})
        assert normal_form(probe, basis).is_zero
        assert not normal_form(poly(2, {(0, 1): 1}), basis).is_zero

    def test_reduced_basis_shape(self):
        rng = random.Random(11)
        for trial in range(10):
            gens = [random_poly(rng, 3) for _ in range(3)]
            basis = buchberger(gens)
            order = basis.order
            leads = [g.leading(order)[0] for g in basis.generators]
            for k, g in enumerate(basis.generators):
                # monic
                assert g.leading(order)[1] == 1
                # no leading term divides another's
                for j, other_lead in enumerate(leads):
                    if j != k:
                        assert not all(a <= b for a, b in
                                       zip(other_lead, g.leading(order)[0]))
                # fully reduced: no term of g is divisible by another lead
                for ev in g.terms:
                    for j, other_lead in enumerate(leads):
                        if j != k:
                            assert not all(a <= b for a, b in zip(other_lead, ev))

    def test_s_polynomials_reduce_to_zero(self):
        rng = random.Random(13)
        for trial in range(8):
            gens = [random_poly(rng, 3) for _ in range(3)]
            basis = buchberger(gens)
            order = basis.order
            for i in range(len(basis.generators)):
                for j in range(i + 1, len(basis.generators)):
                    s = _spoly(basis.generators[i], basis.generators[j],
                               order, basis.generators[i].field)
                    assert normal_form(s, basis).is_zero

    def test_input_membership(self):
        rng = random.Random(17)
        for trial in range(10):
            gens = [random_poly(rng, 3) for _ in range(3)]
            basis = buchberger(gens)
            for g in gens:
                assert normal_form(g, basis).is_zero

    def test_reduced_basis_unique_under_shuffle(self):
        rng = random.Random(19)
        for trial in range(8):
            gens = [random_poly(rng, 3) for _ in range(4)]
            reference = buchberger(gens).generators
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled).generators == reference

    def test_pair_budget(self):
        f = poly(2, {(2, 0): 1, (0, 1): -1})
        g = poly(2, {(1, 1): 1, (1, 0): -1})
        with pytest.raises(PairBudgetExceeded):
            buchberger([f, g], pair_budget=0)


class TestNormalForm:
    def test_member_reduces_to_zero(self):
        f = poly(2, {(1, 1): 1, (1, 0): 2})
        basis = buchberger([f])
        assert normal_form(f, basis).is_zero

    def test_partial_reduction(self):
        f = poly(3, {(1, 1, 0): 1, (0, 0, 1): 1})  # x1x2 + x3
        assert normal_form(f, buchberger([poly(3, {(1, 0, 0): 1})])) == \
            poly(3, {(0, 0, 1): 1})

    def test_membership_via_basis(self):
        basis = buchberger([poly(4, {(0, 0, 1, 0): 1}),
                            poly(4, {(0, 0, 0, 1): 1})])
        assert normal_form(poly(4, {(0, 0, 1, 0): 1}), basis).is_zero

    def test_ideal_member_invariance(self):
        # normal_form(f*g + h) = normal_form(h) for f in the ideal
        rng = random.Random(29)
        for trial in range(12):
            gens = [random_poly(rng, 3) for _ in range(2)]
            basis = buchberger(gens)
            if basis.is_trivial or not basis.generators:
                continue
            f = gens[0]
            g = random_poly(rng, 3)
            h = random_poly(rng, 3)
            assert normal_form(f * g + h, basis) == normal_form(h, basis)

    def test_accepts_raw_generator_list(self):
        raw = [poly(2, {(1, 0): 1})]
        assert normal_form(poly(2, {(1, 1): 1}), raw).is_zero


class TestRadicalMembership:
    def test_square_root(self):
        x1 = poly(1, {(1,): 1})
        assert radical_membership(x1, [x1 * x1])

    def test_non_member(self):
        x1 = poly(2, {(1, 0): 1})
        x2 = poly(2, {(0, 1): 1})
        assert not radical_membership(x2, [x1])

    def test_witness_sum_system(self):
        q1 = poly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
        q0 = poly(3, {(1, 1, 1): 1})
        assert radical_membership(poly(3, {(1, 1, 0): 1}), [q0, q1])

    def test_monotone_in_generators(self):
        rng = random.Random(37)
        for trial in range(10):
            gens = [random_poly(rng, 2) for _ in range(2)]
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            f = random_poly(rng, 2)
            if f.is_zero:
                continue
            extra = random_poly(rng, 2)
            if radical_membership(f, gens):
                assert radical_membership(f, gens + [extra])

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            radical_membership(poly(1, {}), [poly(1, {(1,): 1})])

    def test_gf_path(self):
        x1 = poly(1, {(1,): 1}, field=32003)
        assert radical_membership(x1, [x1 * x1 * x1])


class TestCertifyWitness:
    def test_veronese_witness_passes(self):
        ideal = squarefree_veronese(3, 2)
        witness = build_sv_witness(ideal)
        for field in (None, 32003):
            cert = certify_witness(ideal, witness, field)
            assert cert.passed
            assert cert.subset_failure is None
            assert cert.failing_generators == ()

    def test_two_block_witness_passes(self, two_blocks_n4):
        cert = certify_witness(two_blocks_n4, build_sv_witness(two_blocks_n4))
        assert cert.passed

    def test_truncated_witness_fails(self):
        # dropping q_0 loses the radical: q_1 alone vanishes where two
        # variables do, without killing the pair products
        ideal = squarefree_veronese(3, 2)
        witness = build_sv_witness(ideal)
        cert = certify_witness(ideal, witness.q[1:])
        assert not cert.passed
        assert cert.subset_failure is None  # still inside the ideal
        assert len(cert.failing_generators) > 0

    def test_alien_monomial_reported(self):
        ideal = squarefree_veronese(3, 2)
        bad = [Polynomial.sum_of([Monomial((1, 0, 0))])]
        cert = certify_witness(ideal, bad)
        assert not cert.passed
        assert cert.subset_failure is not None
        j, monomial = cert.subset_failure
        assert j == 0 and str(monomial) == "x1"
