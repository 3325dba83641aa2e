"""Reduction maps from cyclotomic integers to finite fields."""

import random
from fractions import Fraction

import pytest

from charcond.cyclo import CycloNum
from charcond.residue import ResidueError, build_residue_map, reduce_cyclo


class TestFieldShape:
    @pytest.mark.parametrize("N,p,f", [
        (5, 2, 4),    # 2 has order 4 mod 5
        (3, 2, 2),
        (7, 2, 3),
        (4, 3, 2),    # prime-to-3 part is 4; 3 has order 2 mod 4
        (8, 7, 2),
        (12, 5, 2),
        (1, 5, 1),
        (9, 3, 1),    # the prime-to-3 part is trivial
    ])
    def test_residue_degree(self, N, p, f):
        m = build_residue_map(N, p)
        assert m.p == p and m.field_degree == f

    def test_deterministic(self):
        a = build_residue_map(20, 3)
        b = build_residue_map(20, 3)
        assert a.modulus == b.modulus and a.root_image == b.root_image


class TestReduction:
    def test_p_power_roots_collapse_to_one(self):
        m = build_residue_map(12, 2)
        assert reduce_cyclo(m, CycloNum.zeta(4)) == m.one

    def test_root_has_right_order(self):
        m = build_residue_map(12, 2)
        img = reduce_cyclo(m, CycloNum.zeta(3))
        assert img.mult_order() == 3

    def test_rejects_non_integral(self):
        m = build_residue_map(5, 2)
        with pytest.raises(ResidueError):
            reduce_cyclo(m, CycloNum.from_rational(Fraction(1, 2)))

    def test_ring_homomorphism(self):
        rng = random.Random(11)
        for N, p in [(5, 2), (12, 5), (8, 3), (15, 2), (20, 3)]:
            m = build_residue_map(N, p)
            for _ in range(40):
                a = CycloNum.from_exponents(
                    N, {rng.randrange(N): rng.randint(-5, 5) for _ in range(3)})
                b = CycloNum.from_exponents(
                    N, {rng.randrange(N): rng.randint(-5, 5) for _ in range(3)})
                assert reduce_cyclo(m, a + b) == \
                    reduce_cyclo(m, a) + reduce_cyclo(m, b)
                assert reduce_cyclo(m, a * b) == \
                    reduce_cyclo(m, a) * reduce_cyclo(m, b)

    def test_integers_reduce_mod_p(self):
        m = build_residue_map(7, 3)
        assert reduce_cyclo(m, CycloNum.from_rational(10)) == m.one
        assert not reduce_cyclo(m, CycloNum.from_rational(9))
