# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import pytest

from fermatpy.galois_action import b_unit, tau
from fermatpy.group_ring import Ring1Elt
from fermatpy.reference import B_MINUS_ONE, FACTORED_B
from fermatpy.render import monomials, parse_xy, to_xy_string
from fermatpy.scalars import prime_field


@pytest.mark.parametrize("p", [3, 5, 7])
class TestClass:
    def test_trivial_elements(self, p):
        ring = prime_field(p)
        assert to_xy_string(Ring1Elt.zero(ring)) == "0"
        assert to_xy_string(Ring1Elt.one(ring)) == "1"
        assert to_xy_string(Ring1Elt.one(ring), "table") == "1"

    def test_parse_simple(self, p):
        ring = prime_field(p)
        x, y = Ring1Elt.y(ring, 0), Ring1Elt.y(ring, 1)
        assert parse_xy(p, "x") == x
        assert parse_xy(p, "2x^2y - xy") == 2 * x * x * y - x * y
        assert parse_xy(p, "xy(x+y)") == x * y * (x + y)
        assert parse_xy(p, "-(x + 1)^2") == -((x + 1) * (x + 1))
        assert parse_xy(p, f"x^{p}").is_zero()

    def test_parse_errors(self, p):
        with pytest.raises(ValueError):
            parse_xy(p, "x + z")
        with pytest.raises(ValueError):
            parse_xy(p, "(x + y")
        with pytest.raises(ValueError):
            parse_xy(p, "x +")

    def test_round_trip_of_reference_units(self, p):
        for text in B_MINUS_ONE[p]:
            u = parse_xy(p, text)
            assert parse_xy(p, to_xy_string(u, "table")) == u
            assert parse_xy(p, to_xy_string(u, "factored")) == u

    def test_monomials(self, p):
        u = parse_xy(p, "4 + 2xy^2")
        assert sorted(monomials(u)) == sorted([(0, 0, 4 % p), (1, 2, 2)])

    def test_invalid_style(self, p):
        with pytest.raises(ValueError):
            to_xy_string(Ring1Elt.one(prime_field(p)), "latex")


def test_generators_at_p3():
    for j, text in enumerate(FACTORED_B[3]):
        assert to_xy_string(b_unit(tau(3, j)).element) == text
    assert to_xy_string(b_unit(tau(3, 0)).element, "table") == "2x^2y + 2xy^2 + xy + 1"
