import math
from fractions import Fraction
from itertools import product

import pytest

from hooklab.macdonald import (
    lattice_spec,
    lattice_terms,
    lattice_weight,
    macdonald_constant,
    macdonald_series,
    minimal_vector,
    verify_macdonald,
)
from hooklab.series import eta_power

ADMISSIBLE = [("A", 3), ("A", 5), ("C", 2), ("C", 3), ("C", 4), ("B", 3), ("B", 4), ("BC", 1), ("BC", 2), ("BC", 3)]


def brute_terms(spec, order):
    # box search over every coordinate, no pruning
    budget = spec.exponent_divisor * (spec.offset + order)
    r = math.isqrt(math.floor(budget))
    found = {}
    for v in product(range(-r, r + 1), repeat=spec.t):
        if spec.admissible(v) and sum(x * x for x in v) <= budget:
            w = lattice_weight(spec.family, v)
            if w:
                found[v] = w
    return found


class TestSpecs:
    def test_invariants(self):
        a = lattice_spec("A", 5)
        assert (a.modulus, a.exponent_divisor, a.eta_exponent) == (5, 10, 24)
        c = lattice_spec("C", 3)
        assert (c.modulus, c.residues, c.exponent_divisor, c.eta_exponent) == (8, (1, 2, 3), 16, 21)
        b = lattice_spec("B", 3)
        assert (b.modulus, b.residues, b.exponent_divisor, b.sum_constraint) == (10, (1, 3, 5), 40, ("congruence", 9, 20))
        bc = lattice_spec("BC", 2)
        assert (bc.modulus, bc.residues, bc.exponent_divisor, bc.eta_exponent) == (10, (1, 3), 40, 6)

    @pytest.mark.parametrize("family, t", [("A", 2), ("A", 1), ("C", 1), ("B", 2), ("BC", 0), ("D", 4)])
    def test_rejected(self, family, t):
        with pytest.raises(ValueError):
            lattice_spec(family, t)

    @pytest.mark.parametrize("family, t", ADMISSIBLE + [("A", 7), ("C", 5), ("C", 6), ("B", 5), ("B", 6), ("BC", 4), ("BC", 6)])
    def test_minimal_exponent(self, family, t):
        spec = lattice_spec(family, t)
        v = minimal_vector(spec)
        assert spec.admissible(v)
        assert Fraction(sum(x * x for x in v), spec.exponent_divisor) == spec.offset
        assert macdonald_constant(family, t) * lattice_weight(family, v) == 1


class TestTerms:
    def test_examples(self):
        c2 = {v: (e, w) for v, e, w in lattice_terms(lattice_spec("C", 2), 0)}
        assert c2[(1, 2)] == (Fraction(5, 12), -6)
        a3 = {v: w for v, _, w in lattice_terms(lattice_spec("A", 3), 2)}
        assert a3[(0, 1, -1)] == -2
        bc1 = list(lattice_terms(lattice_spec("BC", 1), 0))
        assert bc1 == [((1,), Fraction(1, 24), 1)]

    @pytest.mark.parametrize("family, t, order", [("A", 3, 8), ("C", 2, 8), ("C", 3, 5), ("B", 3, 4), ("BC", 2, 6)])
    def test_complete_against_box_search(self, family, t, order):
        spec = lattice_spec(family, t)
        got = {v: w for v, _, w in lattice_terms(spec, order)}
        assert got == brute_terms(spec, order)

    @pytest.mark.parametrize("family, t", ADMISSIBLE)
    def test_widening_adds_nothing(self, family, t):
        spec = lattice_spec(family, t)
        assert list(lattice_terms(spec, 10)) == list(lattice_terms(spec, 10, widen=3 * spec.modulus))

    @pytest.mark.parametrize("family, t", ADMISSIBLE)
    def test_integral_steps(self, family, t):
        spec = lattice_spec(family, t)
        for _, e, _ in lattice_terms(spec, 12):
            step = e - spec.offset
            assert step.denominator == 1 and step >= 0


class TestConstants:
    def test_values(self):
        assert macdonald_constant("A", 3) == Fraction(-1, 2)
        assert macdonald_constant("C", 2) == Fraction(-1, 6)
        assert macdonald_constant("C", 3) == Fraction(-1, 720)
        assert macdonald_constant("B", 3) == Fraction(-1, 720 * 64)
        assert macdonald_constant("BC", 1) == 1
        assert macdonald_constant("BC", 2) == Fraction(1, 8)

    def test_leading_coefficient(self):
        assert macdonald_constant("C", 2) * -6 == 1
        assert macdonald_series("C", 2, 3)[0] == 1


class TestSeries:
    def test_small_identities(self):
        assert macdonald_series("A", 3, 10) == eta_power(8, 10)
        assert macdonald_series("BC", 1, 10) == eta_power(1, 10)

    @pytest.mark.parametrize("family, t", ADMISSIBLE)
    def test_verify(self, family, t):
        rep = verify_macdonald(family, t, 15)
        assert rep.ok, rep.mismatch
        assert rep.terms > 0

    def test_family_b_needs_sum_congruence(self):
        spec = lattice_spec("B", 3)
        loose = spec.__class__(**{**spec.__dict__, "sum_constraint": None})
        total = {}
        for v, e, w in lattice_terms(loose, 6):
            total[e] = total.get(e, 0) + w
        c = macdonald_constant("B", 3)
        eta = eta_power(21, 6)
        assert any(c * total.get(spec.offset + k, 0) != eta[k] for k in range(7))
