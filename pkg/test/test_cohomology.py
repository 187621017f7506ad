# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import json

import numpy as np
import pytest

from fermatpy.cohomology import (
    BarCocycleTable,
    Cochain1,
    Cochain2,
    D2Instance,
    bar_coboundary_1,
    bar_coboundary_2,
    build_complex,
    crossed_homomorphism,
    d2_kernel_test,
    d2_kernel_test_vanishing_norm,
    h1_dimension,
    h1_report,
    image_d0,
    kernel_d1,
    random_kernel_element,
    required_pairs,
    rho,
    translate_bar_1cocycle,
    translate_bar_2cocycle,
)
from fermatpy.errors import DimensionMismatchError, MissingTableEntryError
from fermatpy.galois_action import CVector, tau
from fermatpy.reference import H1_DIMENSIONS


@pytest.mark.parametrize("p", [3, 5])
class TestClass:
    def test_complex_shapes(self, p):
        cx = build_complex(p)
        n = (p + 1) // 2
        assert cx.rank_q() == n
        assert rho(p) == (p + 1) * (p + 3) // 8
        assert cx.d0.shape() == (n * p * p, p * p)
        assert cx.d1.shape() == (rho(p) * p * p, n * p * p)
        assert (cx.d1 @ cx.d0).is_zero()

    def test_h1(self, p):
        report = h1_report(p)
        assert report.dim_h1 == H1_DIMENSIONS[p]
        assert h1_dimension(p) == report.dim_ker_d1 - report.rank_d0
        assert report.to_df().loc[0, "dim_H1"] == H1_DIMENSIONS[p]

    def test_zero_instance(self, p):
        verdict = d2_kernel_test(D2Instance.zero(p))
        assert verdict.in_kernel
        assert not verdict.certificate.values.any()

    def test_instances_in_the_image(self, p):
        rng = np.random.default_rng(p)
        for _ in range(3):
            inst = D2Instance.random_in_image(p, rng)
            verdict = d2_kernel_test(inst)
            assert verdict.in_kernel
            assert verdict.certificate is not None
            assert verdict.to_dict()["method"] == "full"

    def test_instance_io(self, p, tmp_path):
        inst = D2Instance.random(p, np.random.default_rng(1))
        path = tmp_path / "instance.json"
        path.write_text(json.dumps(inst.to_dict()))
        loaded = D2Instance.from_json(path)
        assert np.array_equal(loaded.u, inst.u)
        assert np.array_equal(loaded.w, inst.w)
        with pytest.raises(ValueError):
            D2Instance.from_dict({"p": p, "u": []})
        with pytest.raises(DimensionMismatchError):
            D2Instance(p, np.zeros((1, p * p)), np.zeros((0, p * p)))

    def test_target_layout(self, p):
        inst = D2Instance.random(p, np.random.default_rng(2))
        target = inst.target()
        assert np.array_equal(target.u_part(), (-inst.u) % p)
        assert np.array_equal(target.t_part(), inst.w)

    def test_coboundaries_translate_into_the_image_of_d0(self, p):
        cx = build_complex(p)
        m = np.random.default_rng(3).integers(0, p, size=p * p)
        translated = translate_bar_1cocycle(bar_coboundary_1(cx, m))
        assert np.array_equal(translated.flat(), cx.d0.apply(m))
        assert image_d0(p).contains(translated.flat())

    def test_crossed_homomorphisms(self, p):
        cx = build_complex(p)
        x = random_kernel_element(p, np.random.default_rng(4))
        assert kernel_d1(p).contains(x.flat())
        phi = crossed_homomorphism(cx, x)
        assert len(phi) == p ** cx.rank_q()
        assert phi.is_cocycle(cx)
        assert translate_bar_1cocycle(phi) == x
        # a cocycle has a vanishing bar coboundary
        assert translate_bar_2cocycle(bar_coboundary_2(cx, phi)) == Cochain2.from_flat(p, np.zeros(rho(p) * p * p))

    def test_degree_two_translation_commutes_with_coboundaries(self, p):
        cx = build_complex(p)
        rng = np.random.default_rng(5)
        psi = BarCocycleTable.from_function(p, 1, lambda q: rng.integers(0, p, size=p * p))
        lhs = translate_bar_2cocycle(bar_coboundary_2(cx, psi))
        rhs = Cochain2.from_flat(p, cx.d1.apply(translate_bar_1cocycle(psi).flat()))
        assert lhs == rhs

    def test_bar_tables(self, p):
        table = BarCocycleTable.from_function(p, 2, lambda g, h: np.zeros(p * p, dtype=np.int64))
        assert len(table) == len(required_pairs(p))
        assert (tau(p, 0), tau(p, 1)) in table
        with pytest.raises(MissingTableEntryError):
            table[(tau(p, 0) * 2, tau(p, 1))]
        with pytest.raises(ValueError):
            BarCocycleTable(p, 3, {})

    def test_cochain_shapes(self, p):
        with pytest.raises(DimensionMismatchError):
            Cochain1(p, np.zeros((1, p)))
        zero = Cochain1.from_flat(p, np.zeros((p + 1) // 2 * p * p))
        assert zero == Cochain1(p, np.zeros(((p + 1) // 2, p * p)))


def test_vanishing_norm_test_at_p5():
    p = 5
    rng = np.random.default_rng(0)
    for _ in range(3):
        inst = D2Instance.random_in_image(p, rng)
        assert d2_kernel_test_vanishing_norm(inst).in_kernel
        inst = D2Instance.random(p, rng)
        assert d2_kernel_test_vanishing_norm(inst).in_kernel == d2_kernel_test(inst).in_kernel

    u = np.zeros((3, p * p), dtype=np.int64)
    u[0, 0] = 1
    inst = D2Instance(p, u, np.zeros((3, p * p)))
    assert not d2_kernel_test(inst).in_kernel
    assert not d2_kernel_test_vanishing_norm(inst).in_kernel
    assert d2_kernel_test_vanishing_norm(D2Instance.zero(p)).in_kernel


def test_vanishing_norm_test_requires_p5():
    with pytest.raises(ValueError):
        d2_kernel_test_vanishing_norm(D2Instance.zero(3))


def test_h1_at_p7():
    assert h1_dimension(7) == H1_DIMENSIONS[7]


def test_exhaustive_cocycle_translation_at_p3():
    cx = build_complex(3)
    for v in np.eye(9, dtype=np.int64):
        phi = bar_coboundary_1(cx, v)
        assert phi.is_cocycle(cx)
        assert image_d0(3).contains(translate_bar_1cocycle(phi).flat())
    assert all(q in phi for q in CVector.all(3))
