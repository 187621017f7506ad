# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import itertools

import numpy as np
import pytest

from fermatpy.cohomology import build_complex, d2_kernel_test, translate_bar_2cocycle
from fermatpy.errors import DimensionMismatchError, NotNormalizedError
from fermatpy.extensions import (
    CentralExtension,
    d2_instance_from_extension,
    omega_from_extension,
    transgression_table,
)

pytestmark = pytest.mark.parametrize("p", [3, 5])


def _rank(p):
    return (p + 1) // 2


def _fixtures(p):
    rank = _rank(p)
    return [CentralExtension.fixture(name, p, rank, seed=p) for name in ("split", "cyclic_p2", "heisenberg", "generic")]


def _sample(ext, rng, size=6):
    return [
        (tuple(int(v) for v in rng.integers(0, ext.p, size=ext.rank)), int(rng.integers(0, ext.p))) for _ in range(size)
    ]


class TestClass:
    def test_group_law(self, p):
        rng = np.random.default_rng(p)
        for ext in _fixtures(p):
            e = ext.identity()
            sample = _sample(ext, rng)
            for g in sample:
                assert ext.multiply(g, e) == ext.multiply(e, g) == g
                assert ext.multiply(g, ext.inverse(g)) == e
                assert ext.multiply(ext.inverse(g), g) == e
            for g, h, k in itertools.islice(itertools.product(sample, repeat=3), 40):
                assert ext.multiply(ext.multiply(g, h), k) == ext.multiply(g, ext.multiply(h, k))

    def test_section(self, p):
        for ext in _fixtures(p):
            assert ext.section((0,) * ext.rank) == ext.identity()
            for j in range(ext.rank):
                assert ext.section(ext.generator(j)[0]) == ext.generator(j)

    def test_split(self, p):
        data = omega_from_extension(CentralExtension.split(p, _rank(p)))
        assert data.a == (0,) * _rank(p)
        assert all(v == 0 for v in data.c.values())

    def test_cyclic(self, p):
        ext = CentralExtension.cyclic_p2(p, _rank(p))
        assert ext.power(ext.generator(0), p) == ((0,) * ext.rank, 1)
        data = omega_from_extension(ext)
        assert data.a == (1,) + (0,) * (_rank(p) - 1)
        assert all(v == 0 for v in data.c.values())

    def test_heisenberg(self, p):
        ext = CentralExtension.heisenberg(p, _rank(p))
        data = omega_from_extension(ext)
        assert data.a == (0,) * _rank(p)
        # [s(τ_1), s(τ_0)] = B_10 - B_01
        assert data.c[(0, 1)] == p - 1
        assert data.to_dict()["c"]["0,1"] == p - 1
        comm = ext.commutator(ext.generator(0), ext.generator(1))
        assert comm == ((0,) * ext.rank, 1)

    def test_transgression(self, p):
        cx = build_complex(p)
        rng = np.random.default_rng(p + 1)
        phi = rng.integers(0, p, size=p * p)
        for ext in _fixtures(p):
            inst = d2_instance_from_extension(ext, phi)
            table = transgression_table(cx, ext, phi)
            assert translate_bar_2cocycle(table) == inst.target()

    def test_split_extension_is_in_the_kernel(self, p):
        phi = np.random.default_rng(p).integers(0, p, size=p * p)
        inst = d2_instance_from_extension(CentralExtension.split(p, _rank(p)), phi)
        assert d2_kernel_test(inst).in_kernel

    def test_errors(self, p):
        ext = CentralExtension.split(p, _rank(p))
        with pytest.raises(NotNormalizedError):
            omega_from_extension(ext, lambda q: (tuple(q), 1))
        with pytest.raises(DimensionMismatchError):
            d2_instance_from_extension(CentralExtension.split(p, _rank(p) + 1), np.zeros(p * p))
        with pytest.raises(DimensionMismatchError):
            ext.multiply(((0,), 0), ext.identity())
        with pytest.raises(DimensionMismatchError):
            CentralExtension(p, 2, ((0, 0),), (0, 0))
        with pytest.raises(ValueError):
            CentralExtension.heisenberg(p, 1)
        with pytest.raises(ValueError):
            CentralExtension.fixture("dihedral", p, 2)
