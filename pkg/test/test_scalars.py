# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from fermatpy.errors import DescentError, NotAUnitError
from fermatpy.scalars import artin_schreier_ring, as_ring_new, context, prime_field

pytestmark = pytest.mark.parametrize("p", [3, 5, 7])


class TestClass:
    def test_context(self, p):
        ctx = context(p)
        assert ctx.r == (p - 1) // 2
        assert ctx.p2 == p * p
        assert all(a * ctx.inv(a) % p == 1 for a in range(1, p))
        with pytest.raises(ZeroDivisionError):
            ctx.inv(0)

    def test_basis_change_matrices(self, p):
        ctx = context(p)
        assert np.array_equal((ctx.eps_to_y @ ctx.y_to_eps) % p, np.eye(p, dtype=np.int64))

    def test_invalid_primes(self, p):
        with pytest.raises(ValueError):
            context(p + 1)
        with pytest.raises(ValueError):
            context(2)

    def test_prime_field(self, p):
        ring = prime_field(p)
        assert ring.degree() == 1
        assert ring.modulus() == p
        x = ring.scalar(2)
        assert ring.equal(ring.mul(x, ring.inverse(x)), ring.one())
        with pytest.raises(NotAUnitError):
            ring.inverse(ring.zero())
        assert not ring.is_unit(ring.zero())
        assert ring.format(ring.scalar(p + 2)) == "2"

    def test_artin_schreier_root(self, p):
        ring = artin_schreier_ring(p, 1)
        t = ring.root()
        # t^p - t + c = 0
        lhs = ring.add(ring.add(ring.power(t, p), ring.neg(t)), ring.scalar(1))
        assert ring.is_zero(lhs)
        assert ring.format(ring.add(ring.one(), ring.mul(ring.scalar(2), t))) == "1 + 2F"

    def test_artin_schreier_inverse(self, p):
        ring = artin_schreier_ring(p, 1)
        rng = np.random.default_rng(p)
        for _ in range(5):
            x = rng.integers(0, p, size=p)
            if not x.any():
                continue
            assert ring.equal(ring.mul(x, ring.inverse(x)), ring.one())
            assert ring.equal(ring.power(x, -2), ring.power(ring.inverse(x), 2))

    def test_lift_ring(self, p):
        base = artin_schreier_ring(p, 1)
        lift = base.lift()
        assert lift.is_lift()
        assert lift.modulus() == p * p
        assert lift.base() == base
        x = lift.scalar(p + 1)
        x[1] = 1
        y = lift.inverse(x)
        assert lift.equal(lift.mul(x, y), lift.one())

    def test_divide_by_p(self, p):
        lift = prime_field(p).lift()
        assert np.array_equal(lift.divide_by_p(lift.scalar(3 * p)), [3 % p])
        with pytest.raises(DescentError):
            lift.divide_by_p(lift.scalar(1))

    def test_as_ring_new(self, p):
        ring, root = as_ring_new(context(p), p)
        assert ring == prime_field(p)
        assert ring.is_zero(root)

        ring, root = as_ring_new(context(p), 2)
        assert ring == artin_schreier_ring(p, 2)
        assert ring.constant() == 2
        assert np.array_equal(root, ring.root())

    def test_ring_keys(self, p):
        assert prime_field(p) != artin_schreier_ring(p, 1)
        assert artin_schreier_ring(p, 1) != artin_schreier_ring(p, 2)
        assert artin_schreier_ring(p, 1) == artin_schreier_ring(p, p + 1)
        assert hash(prime_field(p)) == hash(prime_field(p))
