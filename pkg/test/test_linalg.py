# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from fermatpy.errors import DimensionMismatchError
from fermatpy.linalg import FpMatrix, Subspace, subspace_codim, subspace_intersect

pytestmark = pytest.mark.parametrize("p", [3, 5, 7, 13])


def _random_matrix(p, nrows, ncols, seed):
    rng = np.random.default_rng(seed)
    return FpMatrix(p, rng.integers(0, p, size=(nrows, ncols)))


class TestClass:
    def test_trivial_ranks(self, p):
        assert FpMatrix.identity(p, 4).rank() == 4
        assert FpMatrix.identity(p, 4).kernel_basis().dim() == 0
        assert FpMatrix.zeros(p, 3, 5).rank() == 0
        assert FpMatrix.zeros(p, 3, 5).kernel_basis().dim() == 5

    def test_rank_nullity(self, p):
        for seed in range(5):
            a = _random_matrix(p, 6, 9, seed)
            kernel = a.kernel_basis()
            assert a.rank() + kernel.dim() == a.ncols()
            for v in kernel.basis():
                assert not a.apply(v).any()

    def test_rank_deficient(self, p):
        a = _random_matrix(p, 3, 7, p)
        b = FpMatrix.vstack([a, a * 2, a + a])
        assert b.rank() == a.rank()
        assert b.kernel_basis() == a.kernel_basis()

    def test_rref_is_idempotent(self, p):
        a = _random_matrix(p, 5, 8, 1)
        reduced, pivots = a.rref()
        again, pivots2 = reduced.rref()
        assert again == reduced
        assert pivots == pivots2

    def test_solve(self, p):
        rng = np.random.default_rng(2)
        a = _random_matrix(p, 7, 5, 3)
        x = rng.integers(0, p, size=5)
        b = a.apply(x)
        solution = a.solve(b)
        assert solution is not None
        assert np.array_equal(a.apply(solution), b)

    def test_solve_inconsistent(self, p):
        a = FpMatrix(p, [[1, 0], [0, 0]])
        assert a.solve([0, 1]) is None
        with pytest.raises(DimensionMismatchError):
            a.solve([1, 2, 3])

    def test_power(self, p):
        a = _random_matrix(p, 4, 4, 4)
        assert a.power(0) == FpMatrix.identity(p, 4)
        assert a.power(3) == a @ a @ a

    def test_blocks(self, p):
        eye = FpMatrix.identity(p, 2)
        zero = FpMatrix.zeros(p, 2, 2)
        block = FpMatrix.from_blocks(p, [[eye, zero], [zero, eye]])
        assert block == FpMatrix.identity(p, 4)
        assert FpMatrix.hstack([eye, zero]).shape() == (2, 4)

    def test_exports(self, p):
        a = FpMatrix(p, [[0, 1], [p + 2, 0]])
        df = a.to_df()
        assert list(df.columns) == ["row", "col", "value"]
        assert len(df) == 2
        assert a.to_coo().nnz == 2
        assert a.to_dict()["entries"] == [[0, 1], [2, 0]]

    def test_subspace_basics(self, p):
        n = 6
        e = np.eye(n, dtype=np.int64)
        u = Subspace.span(p, [e[0], e[1], e[0] + e[1]])
        assert u.dim() == 2
        assert u.codim() == n - 2
        assert u.contains(3 * e[0] + e[1])
        assert not u.contains(e[2])
        assert np.array_equal(u.coordinates(2 * e[0] + e[1]), [2, 1])
        assert Subspace.zero(p, n).dim() == 0
        assert Subspace.full(p, n).dim() == n

    def test_subspace_equality_is_basis_independent(self, p):
        e = np.eye(4, dtype=np.int64)
        u = Subspace.span(p, [e[0] + e[1], e[1]])
        v = Subspace.span(p, [e[0], 2 * e[1]])
        assert u == v
        assert hash(u) == hash(v)

    def test_intersection(self, p):
        e = np.eye(5, dtype=np.int64)
        u = Subspace.span(p, [e[0], e[1], e[2]])
        v = Subspace.span(p, [e[1] + e[2], e[3]])
        w = u.intersect(v)
        assert w == Subspace.span(p, [e[1] + e[2]])
        assert w.is_subspace_of(u)
        assert w.is_subspace_of(v)
        assert (u + v).dim() == u.dim() + v.dim() - w.dim()
        assert u.sum(v) == u + v
        assert subspace_codim(w, u) == 2
        assert subspace_intersect(v, u) == w
        with pytest.raises(DimensionMismatchError, match="not contained"):
            subspace_codim(u, w)

    def test_image_under(self, p):
        e = np.eye(3, dtype=np.int64)
        swap = FpMatrix(p, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        assert Subspace.span(p, [e[0]]).image_under(swap) == Subspace.span(p, [e[1]])

    def test_mismatched_primes(self, p):
        with pytest.raises(DimensionMismatchError):
            FpMatrix.identity(p, 2) + FpMatrix.identity(p + 2, 2)
