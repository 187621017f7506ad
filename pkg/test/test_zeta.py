# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import pytest

from fermatpy.errors import PointCountCapError
from fermatpy.finite_field import finite_field
from fermatpy.zeta import (
    CyclotomicInt,
    character_pairs,
    count_identity_check,
    count_points,
    genus,
    jacobi_matrix,
    jacobi_sum,
    l_polynomial_residue,
    point_count_breakdown,
    predicted_count,
    zeta_mod_p_report,
)


@pytest.mark.parametrize("p,ell", [(3, 7), (3, 13), (5, 11)])
class TestClass:
    def test_counts_are_divisible_by_p(self, p, ell):
        count = point_count_breakdown(p, finite_field(ell))
        assert count.total % p == 0
        assert count.at_infinity == p
        assert count.orbit_decomposition() is not None

    def test_count_identity(self, p, ell):
        check = count_identity_check(p, finite_field(ell))
        assert check.rational
        assert check.holds
        assert check.to_dict()["discrepancy"] == 0

    def test_jacobi_sums(self, p, ell):
        fld = finite_field(ell)
        sums = jacobi_matrix(p, fld)
        assert len(sums) == (p - 1) * (p - 2) == 2 * genus(p)
        for (i, j), value in sums.items():
            assert value * value.conjugate() == ell
            assert value == sums[(j, i)]
            # J ≡ -1 modulo (1 - ζ)
            assert value.residue_mod_lambda() == p - 1

    def test_galois_conjugates(self, p, ell):
        fld = finite_field(ell)
        for a in range(2, p):
            assert jacobi_sum(p, fld, 1, 1).galois(a) == jacobi_sum(p, fld, a, a)

    def test_predicted_count(self, p, ell):
        fld = finite_field(ell)
        assert predicted_count(p, fld, 1) == count_points(p, fld)

    def test_l_polynomial_residue(self, p, ell):
        residue = l_polynomial_residue(p, finite_field(ell))
        assert residue.plus_matches
        assert len(residue.expected) == 2 * genus(p) + 1
        assert residue.to_dict()["plus_matches"]

    def test_character_pairs(self, p, ell):
        pairs = character_pairs(p)
        assert all((i + j) % p for i, j in pairs)
        assert (1, p - 1) not in pairs
        with pytest.raises(ValueError):
            jacobi_sum(p, finite_field(ell), 1, p - 1)


def test_fermat_cubic_counts():
    assert count_points(3, finite_field(7)) == 9
    assert count_points(3, finite_field(13)) == 9
    count = point_count_breakdown(3, finite_field(7))
    assert (count.affine, count.at_infinity) == (6, 3)
    assert count.orbit_decomposition() == 0


def test_predicted_counts_over_extensions():
    fld = finite_field(7)
    for m in (2, 3):
        assert predicted_count(3, fld, m) == count_points(3, fld, m)


def test_minus_sign_does_not_match_at_p3():
    assert not l_polynomial_residue(3, finite_field(7)).minus_matches


def test_zeta_report():
    report = zeta_mod_p_report(3, finite_field(7), 3)
    assert report.vanishes
    assert report.series_holds
    assert report.orbits_hold
    assert report.genus == 1
    assert [m for m, _, _ in report.rows] == [1, 2, 3]
    assert report.to_dict()["counts"][0]["N"] == 9
    assert list(report.to_df().columns) == ["m", "N", "N_mod_p", "orbit_k"]


def test_point_count_errors():
    with pytest.raises(PointCountCapError):
        count_points(3, finite_field(13), cap=100)
    with pytest.raises(ValueError):
        count_points(3, finite_field(3))
    with pytest.raises(ValueError):
        jacobi_sum(3, finite_field(5), 1, 1)


def test_count_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FERMATPY_POINT_COUNT_CAP", "10")
    with pytest.raises(PointCountCapError):
        count_points(3, finite_field(7))


def test_cyclotomic_arithmetic():
    p = 5
    z = CyclotomicInt.zeta(p)
    assert z**p == 1
    assert sum((z**k for k in range(p)), CyclotomicInt.from_int(p, 0)) == 0
    assert z.conjugate() == z ** (p - 1)
    assert z * z.conjugate() == 1
    assert (z + 2) - 2 == z
    assert 3 - z == -(z - 3)
    assert CyclotomicInt.from_exponents(p, [1] * p) == 0
    assert CyclotomicInt.from_int(p, 4).is_rational()
    assert CyclotomicInt.from_int(p, 4).rational_value() == 4
    assert CyclotomicInt.from_int(p, 4).residue_mod_lambda() == 4
    assert z.residue_mod_lambda() == 1
    assert str(CyclotomicInt.from_int(p, 0)) == "0"
    assert z.coefficients() == [0, 1, 0, 0]


def test_cyclotomic_errors():
    z = CyclotomicInt.zeta(5)
    with pytest.raises(ValueError):
        z ** -1
    with pytest.raises(ValueError):
        z.rational_value()
    with pytest.raises(ValueError):
        z.galois(5)
    with pytest.raises(ValueError):
        z + CyclotomicInt.zeta(3)
