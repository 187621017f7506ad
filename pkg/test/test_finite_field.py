# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from fermatpy.finite_field import FiniteField, finite_field, residue_field


@pytest.mark.parametrize("ell,f", [(7, 1), (13, 1), (5, 2), (7, 2), (2, 4)])
class TestClass:
    def test_accessors(self, ell, f):
        fld = finite_field(ell, f)
        assert fld.characteristic() == ell
        assert fld.degree() == f
        assert fld.order() == ell**f
        assert len(fld.modulus()) == f + 1
        assert len(fld.elements()) == fld.order()

    def test_tables(self, ell, f):
        fld = finite_field(ell, f)
        q = fld.order()
        assert fld.log_table()[0] == -1
        assert fld.exp_table()[0] == 1
        nonzero = np.arange(1, q)
        assert np.array_equal(fld.exp_table()[fld.log_table()[nonzero]], nonzero)
        assert sorted(fld.exp_table().tolist()) == nonzero.tolist()

    def test_generator_order(self, ell, f):
        fld = finite_field(ell, f)
        q = fld.order()
        g = fld.generator()
        powers = [int(fld.power(g, k)) for k in range(1, q)]
        assert powers[-1] == 1
        assert 1 not in powers[:-1]

    def test_field_axioms(self, ell, f):
        fld = finite_field(ell, f)
        a, b, c = np.meshgrid(fld.elements(), fld.elements()[:5], fld.elements()[-3:], indexing="ij")
        a, b, c = a.ravel(), b.ravel(), c.ravel()
        assert np.array_equal(fld.mul(a, fld.add(b, c)), fld.add(fld.mul(a, b), fld.mul(a, c)))
        assert np.array_equal(fld.mul(fld.mul(a, b), c), fld.mul(a, fld.mul(b, c)))
        assert np.array_equal(fld.add(a, fld.neg(a)), np.zeros_like(a))
        assert np.array_equal(fld.sub(a, b), fld.add(a, fld.neg(b)))
        assert np.array_equal(fld.mul(a, 1), a)

    def test_inverses(self, ell, f):
        fld = finite_field(ell, f)
        q = fld.order()
        nonzero = np.arange(1, q)
        assert np.array_equal(fld.mul(nonzero, fld.power(nonzero, q - 2)), np.ones_like(nonzero))
        assert np.array_equal(fld.power(nonzero, 0), np.ones_like(nonzero))
        assert fld.power(0, 3) == 0

    def test_extension(self, ell, f):
        fld = finite_field(ell, f)
        assert fld.extension(1) is fld
        ext = fld.extension(2)
        assert ext.order() == fld.order() ** 2
        assert ext.characteristic() == ell


def test_prime_field_arithmetic():
    fld = FiniteField(7)
    a, b = np.meshgrid(np.arange(7), np.arange(7), indexing="ij")
    assert np.array_equal(fld.mul(a, b), (a * b) % 7)
    assert np.array_equal(fld.add(a, b), (a + b) % 7)
    assert fld == finite_field(7)
    assert hash(fld) == hash(finite_field(7))


def test_residue_field():
    assert residue_field(3, 7).degree() == 1
    assert residue_field(3, 5).degree() == 2
    assert residue_field(5, 2).degree() == 4
    assert (residue_field(5, 11).order() - 1) % 5 == 0
    with pytest.raises(ValueError):
        residue_field(3, 3)


def test_invalid_fields():
    with pytest.raises(ValueError):
        FiniteField(4)
    with pytest.raises(ValueError):
        FiniteField(5, 0)
