# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Scalar rings used as coefficients of group ring elements.

Elements of every ring are plain ``numpy.int64`` arrays whose last axis has length
:py:meth:`ScalarRing.degree` (1 for F_p, p for F_p[t]/(t^p - t + c)).
Rings never own their elements: they only know how to add, multiply and reduce them.
"""

import functools
import math
from typing import Tuple

import numpy as np
import sympy

from .errors import DescentError, DimensionMismatchError, NotAUnitError


class PrimeContext:
    """
    Odd prime p together with the tables shared by every computation at that prime.
    Use :py:func:`context` to obtain the (cached) instance for a given prime.
    """

    def __init__(self, p: int):
        p = int(p)
        if p < 3 or not sympy.isprime(p):
            raise ValueError(f"p must be an odd prime, found {p}")
        self.p = p
        self.r = (p - 1) // 2
        self.p2 = p * p

        self.inverses = np.array([0] + [pow(i, -1, p) for i in range(1, p)], dtype=np.int64)
        self.factorials = np.array([math.factorial(i) % p for i in range(p)], dtype=np.int64)
        self.factorials_p2 = np.array([math.factorial(i) % self.p2 for i in range(2 * p - 1)], dtype=np.int64)

        # binom[i, k] = C(i, k) mod p
        binom = np.array([[math.comb(i, k) % p for k in range(p)] for i in range(p)], dtype=np.int64)
        self.binomials = binom
        # eps -> y: a_k = sum_i C(i, k) e_i
        self.eps_to_y = binom.T.copy()
        # y -> eps: e_i = sum_k (-1)^(k - i) C(k, i) a_k
        signs = np.array([[(-1) ** ((k - i) % 2) for k in range(p)] for i in range(p)], dtype=np.int64)
        self.y_to_eps = (binom.T * signs) % p

        for arr in (self.inverses, self.factorials, self.factorials_p2, self.binomials, self.eps_to_y, self.y_to_eps):
            arr.setflags(write=False)

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return int(self.inverses[a])

    def __repr__(self) -> str:
        return f"PrimeContext(p={self.p})"


@functools.lru_cache(maxsize=None)
def context(p: int) -> PrimeContext:
    return PrimeContext(p)


class ScalarRing:
    """Base class of the coefficient rings. Subclasses fix the modulus, the degree and the constant c."""

    def __init__(self, ctx: PrimeContext, modulus: int, degree: int, c: int):
        self.ctx = ctx
        self._modulus = int(modulus)
        self._degree = int(degree)
        self._c = int(c) % ctx.p

    def prime(self) -> int:
        return self.ctx.p

    def modulus(self) -> int:
        return self._modulus

    def degree(self) -> int:
        return self._degree

    def constant(self) -> int:
        """The c of t^p - t + c (0 for F_p)."""
        return self._c

    def is_lift(self) -> bool:
        return self._modulus != self.ctx.p

    def _key(self) -> Tuple[str, int, int, int, int]:
        return type(self).__name__, self.ctx.p, self._modulus, self._degree, self._c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarRing):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def zero(self) -> np.ndarray:
        return np.zeros(self._degree, dtype=np.int64)

    def one(self) -> np.ndarray:
        return self.scalar(1)

    def scalar(self, k: int) -> np.ndarray:
        x = self.zero()
        x[0] = int(k) % self._modulus
        return x

    def embed(self, x: np.ndarray) -> np.ndarray:
        """Embed coefficients of a ring of degree 1 (F_p or Z/p^2) into this ring."""
        x = np.asarray(x, dtype=np.int64)
        if x.shape[-1] == self._degree:
            return x % self._modulus
        if x.shape[-1] != 1:
            raise DimensionMismatchError(f"cannot embed scalars of degree {x.shape[-1]} into {self!r}")
        out = np.zeros(x.shape[:-1] + (self._degree,), dtype=np.int64)
        out[..., 0] = x[..., 0] % self._modulus
        return out

    def reduce(self, x: np.ndarray) -> np.ndarray:
        """Fold a coefficient array whose last axis has length at most 2*degree-1 and reduce it."""
        x = np.asarray(x, dtype=np.int64)
        d = self._degree
        n = x.shape[-1]
        if n > 2 * d - 1:
            raise DimensionMismatchError(f"cannot reduce scalars of length {n} in a ring of degree {d}")
        if n <= d:
            out = np.zeros(x.shape[:-1] + (d,), dtype=np.int64)
            out[..., :n] = x
            return out % self._modulus
        # t^k = t^(k-p) * (t - c) for p <= k <= 2p - 2
        high = x[..., d:]
        m = high.shape[-1]
        low = x[..., :d].copy()
        low[..., 1 : 1 + m] += high
        low[..., :m] -= self._c * high
        return low % self._modulus

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (np.asarray(a) + np.asarray(b)) % self._modulus

    def neg(self, a: np.ndarray) -> np.ndarray:
        return (-np.asarray(a)) % self._modulus

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Product of scalars, broadcasting over the leading axes."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        d = self._degree
        if d == 1:
            return (a * b) % self._modulus
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1]) + (2 * d - 1,)
        out = np.zeros(shape, dtype=np.int64)
        for k in range(d):
            out[..., k : k + d] += a[..., k : k + 1] * b
        return self.reduce(out)

    def power(self, x: np.ndarray, n: int) -> np.ndarray:
        if n < 0:
            return self.power(self.inverse(x), -n)
        result = self.one()
        base = np.asarray(x, dtype=np.int64) % self._modulus
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, x: np.ndarray) -> bool:
        return not (np.asarray(x) % self._modulus).any()

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        return self.is_zero(np.asarray(a) - np.asarray(b))

    def is_unit(self, x: np.ndarray) -> bool:
        try:
            self.inverse(x)
        except NotAUnitError:
            return False
        return True

    def inverse(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def format(self, x: np.ndarray, var: str = "F") -> str:
        """Render a scalar as a polynomial in the root ``var``."""
        x = np.asarray(x) % self._modulus
        terms = []
        for k, a in enumerate(x.tolist()):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
                continue
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if a == 1 else f"{a}{mono}")
        return " + ".join(terms) if terms else "0"

    def lift(self) -> "LiftRing":
        """The mod-p^2 ring with the same defining relation."""
        if self.is_lift():
            raise DimensionMismatchError(f"{self!r} is already a lift ring")
        return LiftRing(self)


class PrimeField(ScalarRing):
    """F_p, degree one."""

    def __init__(self, ctx: PrimeContext):
        super().__init__(ctx, ctx.p, 1, 0)

    def inverse(self, x: np.ndarray) -> np.ndarray:
        a = int(np.asarray(x).reshape(-1)[0]) % self.ctx.p
        if a == 0:
            raise NotAUnitError(f"0 is not a unit of F_{self.ctx.p}")
        return self.scalar(self.ctx.inv(a))

    def __repr__(self) -> str:
        return f"PrimeField(p={self.ctx.p})"


class ArtinSchreierRing(ScalarRing):
    """
    F_p[t]/(t^p - t + c). When c != 0 the polynomial is irreducible and the ring is the
    field with p^p elements; when c == 0 it is a product of p copies of F_p.
    In both cases every element satisfies x^(p^p) = x, which is what :py:meth:`inverse` uses.
    """

    def __init__(self, ctx: PrimeContext, c: int):
        super().__init__(ctx, ctx.p, ctx.p, c)

    def root(self) -> np.ndarray:
        """The class of t, a root of X^p - X + c."""
        x = self.zero()
        x[1] = 1
        return x

    def inverse(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64) % self.ctx.p
        if not x.any():
            raise NotAUnitError("0 is not a unit")
        p = self.ctx.p
        y = self.power(x, p**p - 2)
        if not self.equal(self.mul(x, y), self.one()):
            raise NotAUnitError(f"{self.format(x)} is not a unit of {self!r}")
        return y

    def __repr__(self) -> str:
        return f"ArtinSchreierRing(p={self.ctx.p}, c={self._c})"


class LiftRing(ScalarRing):
    """
    The lift of a mod-p ring R to coefficients mod p^2: (Z/p^2)[t]/(t^p - t + c) or Z/p^2.
    Supports exact division by p of elements that vanish mod p.
    """

    def __init__(self, base: ScalarRing):
        super().__init__(base.ctx, base.ctx.p2, base.degree(), base.constant())
        self._base = base

    def base(self) -> ScalarRing:
        return self._base

    def reduce_mod_p(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(x, dtype=np.int64) % self.ctx.p

    def divide_by_p(self, x: np.ndarray) -> np.ndarray:
        """x / p as an element of the base ring; x must vanish mod p."""
        x = np.asarray(x, dtype=np.int64) % self._modulus
        if (x % self.ctx.p).any():
            raise DescentError(f"coefficients are not divisible by {self.ctx.p}")
        return (x // self.ctx.p) % self.ctx.p

    def inverse(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64) % self._modulus
        y0 = self._base.inverse(x % self.ctx.p)
        # Newton step: y = y0 (2 - x y0)
        y = self.mul(y0, self.add(self.scalar(2), self.neg(self.mul(x, y0))))
        if not self.equal(self.mul(x, y), self.one()):
            raise NotAUnitError("lift inverse did not converge")
        return y

    def __repr__(self) -> str:
        return f"LiftRing({self._base!r})"


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(context(p))


@functools.lru_cache(maxsize=None)
def artin_schreier_ring(p: int, c: int) -> ArtinSchreierRing:
    return ArtinSchreierRing(context(p), int(c) % p)


def as_ring_new(ctx: PrimeContext, c: int) -> Tuple[ScalarRing, np.ndarray]:
    """
    Return the ring F_p[t]/(t^p - t + c) together with the chosen root F = t.
    When c = 0 the ring is F_p itself and F = 0.
    """
    c = int(c) % ctx.p
    if c == 0:
        ring: ScalarRing = prime_field(ctx.p)
        return ring, ring.zero()
    as_ring = artin_schreier_ring(ctx.p, c)
    return as_ring, as_ring.root()
