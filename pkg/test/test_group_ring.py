# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from fermatpy.errors import DescentError, DimensionMismatchError, NotAUnitError
from fermatpy.group_ring import (
    DifferentialElt,
    Ring0Elt,
    Ring1Elt,
    at_eps0,
    at_eps01,
    d,
    derivative,
    divided_power,
    dlog,
    exp0,
    exp1,
    filtration_component,
    ideal_power_degree,
    invert_unit,
    norm,
    twist,
)
from fermatpy.scalars import artin_schreier_ring, prime_field

pytestmark = pytest.mark.parametrize("p", [3, 5, 7])


def _random_ring1(p, seed, ring=None):
    ring = prime_field(p) if ring is None else ring
    rng = np.random.default_rng(seed)
    return Ring1Elt(ring, rng.integers(0, p, size=(p, p, ring.degree())), "y")


def _random_augmentation(cls, p, rng):
    coeffs = rng.integers(0, p, size=(p,) * cls.nvars + (1,))
    coeffs[(0,) * cls.nvars] = 0
    return cls(prime_field(p), coeffs, "y")


class TestClass:
    def test_basis_change(self, p):
        u = _random_ring1(p, 0)
        assert u.to_eps().basis() == "eps"
        assert u.to_eps().to_y() == u
        assert u.to_eps() == u

    def test_eps_and_y(self, p):
        ring = prime_field(p)
        assert Ring0Elt.eps(ring) == Ring0Elt.y(ring) + 1
        assert Ring0Elt.eps(ring) ** p == 1
        assert (Ring0Elt.y(ring) ** p).is_zero()
        assert (Ring1Elt.y(ring, 0) ** (p - 1) * Ring1Elt.y(ring, 1) ** (p - 1)).coefficient(p - 1, p - 1) == 1

    def test_ring_axioms(self, p):
        a, b, c = (_random_ring1(p, seed) for seed in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == 0

    def test_artin_schreier_coefficients(self, p):
        ring = artin_schreier_ring(p, 1)
        a = _random_ring1(p, 4, ring)
        b = _random_ring1(p, 5, ring)
        assert (a * b).to_eps() == a.to_eps() * b.to_eps()
        assert a.ring() == ring

    def test_mixed_rings(self, p):
        ring = artin_schreier_ring(p, 1)
        a = _random_ring1(p, 6, ring)
        b = _random_ring1(p, 7)
        assert a + b == a + b.embed(ring)
        with pytest.raises(DimensionMismatchError):
            b + a

    def test_descend(self, p):
        ring = artin_schreier_ring(p, 2)
        b = _random_ring1(p, 8)
        assert b.embed(ring).descend() == b
        with pytest.raises(DescentError):
            _random_ring1(p, 9, ring).descend()

    def test_invert_unit(self, p):
        ring = prime_field(p)
        u = _random_ring1(p, 10) * Ring1Elt.y(ring, 0) + 2
        assert u * invert_unit(u) == 1
        assert u ** -1 == invert_unit(u)
        with pytest.raises(NotAUnitError):
            invert_unit(Ring1Elt.y(ring, 1))

    def test_exp0_is_a_homomorphism_on_small_arguments(self, p):
        ring = prime_field(p)
        y = Ring0Elt.y(ring)
        f, g = y ** (p - 1), 2 * y ** (p - 1)
        assert exp0(f + g) == exp0(f) * exp0(g)
        assert exp0(Ring0Elt.zero(ring)) == 1

    def test_exp_requires_augmentation_zero(self, p):
        with pytest.raises(NotAUnitError):
            exp0(Ring0Elt.one(prime_field(p)))
        with pytest.raises(NotAUnitError):
            exp1(Ring1Elt.eps(prime_field(p), 0))

    def test_exp0_inverse(self, p):
        rng = np.random.default_rng(p)
        for _ in range(10):
            f = _random_augmentation(Ring0Elt, p, rng)
            assert exp0(f) * exp0(-f) == 1

    def test_dlog_of_exp0(self, p):
        ring = prime_field(p)
        y = Ring0Elt.y(ring)
        rng = np.random.default_rng(p + 1)
        for _ in range(10):
            f = _random_augmentation(Ring0Elt, p, rng)
            factor = 1 + f.coefficient(1) ** (p - 1) * y ** (p - 1)
            assert dlog(exp0(f)) == DifferentialElt(derivative(f) * factor)

    def test_exp1_is_a_homomorphism(self, p):
        rng = np.random.default_rng(p + 2)
        for _ in range(10):
            f = _random_augmentation(Ring1Elt, p, rng)
            g = _random_augmentation(Ring1Elt, p, rng)
            assert exp1(f) * exp1(g) == exp1(f + g)
            assert exp1(f) * exp1(-f) == 1

    def test_exp1_does_not_depend_on_the_lift(self, p):
        rng = np.random.default_rng(p + 3)
        for seed in range(5):
            f = _random_augmentation(Ring1Elt, p, rng)
            lift = f.lift() + _random_ring1(p, seed).lift() * p
            assert exp1(f, lift=lift) == exp1(f)
            assert divided_power(f, 2 * p - 2, lift=lift) == divided_power(f, 2 * p - 2)
        with pytest.raises(ValueError, match="lift"):
            exp1(f, lift=(f + Ring1Elt.y(prime_field(p), 0)).lift())

    def test_norm_of_exp1(self, p):
        rng = np.random.default_rng(p + 4)
        for _ in range(10):
            f = _random_augmentation(Ring1Elt, p, rng)
            assert norm(exp1(f)) == f ** (p - 1) - divided_power(f, 2 * p - 2)

    def test_exp1_agrees_with_exp0_below_degree_p(self, p):
        ring = prime_field(p)
        f = Ring1Elt.y(ring, 0) * Ring1Elt.y(ring, 1)
        # f^n = 0 for n >= p, so both exponentials are the same polynomial
        assert exp1(f) == exp0(f)

    def test_divided_powers(self, p):
        ring = prime_field(p)
        f = Ring0Elt.y(ring)
        assert divided_power(f, 0) == 1
        assert divided_power(f, 1) == f
        assert divided_power(f, 2) * 2 == f * f
        with pytest.raises(ValueError):
            divided_power(f, 2 * p - 1)

    def test_dlog_of_eps(self, p):
        ring = prime_field(p)
        eps = Ring0Elt.eps(ring)
        assert dlog(eps).is_multiple_of_dlog_eps()
        assert d(eps).coefficient() == 1
        assert dlog(eps).coefficient() == eps ** (p - 1)

    def test_norm(self, p):
        ring = prime_field(p)
        eps0 = Ring1Elt.eps(ring, 0)
        assert norm(eps0) == Ring1Elt.y(ring, 0) ** (p - 1)
        assert norm(Ring1Elt.one(ring)) == 0

    def test_ideal_power_degree(self, p):
        ring = prime_field(p)
        y0, y1 = Ring1Elt.y(ring, 0), Ring1Elt.y(ring, 1)
        assert ideal_power_degree(y0 * y1 + y0**3) == 2
        assert ideal_power_degree(Ring1Elt.one(ring)) == 0
        assert ideal_power_degree(Ring1Elt.zero(ring)) == 2 * (p - 1) + 1

    def test_ideal_power_degree_of_products(self, p):
        rng = np.random.default_rng(p + 5)
        top = 2 * (p - 1) + 1
        for _ in range(10):
            u = _random_augmentation(Ring1Elt, p, rng)
            v = _random_augmentation(Ring1Elt, p, rng) * Ring1Elt.y(prime_field(p), 1)
            assert ideal_power_degree(u * v) >= min(ideal_power_degree(u) + ideal_power_degree(v), top)
        y0, y1 = Ring1Elt.y(prime_field(p), 0), Ring1Elt.y(prime_field(p), 1)
        assert ideal_power_degree(y0 * (y0 + y1)) == 2
        assert ideal_power_degree(y0 ** (p - 1) * y0) == top

    def test_swap_and_twist(self, p):
        ring = prime_field(p)
        u = _random_ring1(p, 11)
        assert u.swap().swap() == u
        assert (u * u.swap()).swap() == u * u.swap()
        assert twist(1, u) == u
        assert u.twist(2).twist(pow(2, -1, p)) == u
        assert twist(2, Ring1Elt.eps(ring, 0)) == Ring1Elt.eps(ring, 0) ** 2
        with pytest.raises(ValueError):
            twist(p, u)

    def test_ring_maps(self, p):
        ring = prime_field(p)
        eps = Ring0Elt.eps(ring)
        assert at_eps0(eps) == Ring1Elt.eps(ring, 0)
        assert at_eps01(eps) == Ring1Elt.eps(ring, 0) * Ring1Elt.eps(ring, 1)
        assert at_eps01(eps**2 + 1) == at_eps01(eps) ** 2 + 1

    def test_filtration_component(self, p):
        u = _random_ring1(p, 12)
        total = sum((filtration_component(u, k) for k in range(p)), Ring1Elt.zero(prime_field(p)))
        assert total == u

    def test_exports(self, p):
        ring = prime_field(p)
        u = Ring1Elt.from_monomials(ring, {(1, 2): 2, (0, 0): 1})
        assert u.coefficient(1, 2) == 2
        assert u.to_numpy().shape == (p, p)
        assert len(u.to_df()) == 2
        assert u.to_dict()["basis"] == "y"
        with pytest.raises(DimensionMismatchError):
            Ring1Elt.from_monomials(ring, {(p, 0): 1})
