# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Small finite fields F_q, q = ell^f, with table-driven vectorized arithmetic.

An element is encoded as the integer Σ a_k ell^k, where Σ a_k t^k is its representative
modulo the defining polynomial. Zero encodes 0 and one encodes 1.
"""

import functools
import logging
from typing import List, Tuple, Union

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_eval, gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem, gf_strip

from .errors import VerificationError

log = logging.getLogger(__name__)

ArrayOrInt = Union[np.ndarray, int]


def _random_modulus(ell: int, f: int, rng: np.random.Generator) -> List[int]:
    """Monic irreducible polynomial of degree f over F_ell, coefficients high to low."""
    if f == 1:
        return [1, 0]
    while True:
        tail = [int(v) for v in rng.integers(0, ell, size=f)]
        if tail[-1] == 0:
            continue
        candidate = [1] + tail
        if any(gf_eval(candidate, a, ell, ZZ) == 0 for a in range(ell)):
            continue
        if gf_irreducible_p(candidate, ell, ZZ):
            return candidate


class FiniteField:
    """
    F_q for q = ell^f built from a random monic irreducible modulus. A generator g of
    F_q^* is fixed together with the tables g^k and log_g.
    """

    def __init__(self, ell: int, f: int = 1, seed: int = 0):
        if not sympy.isprime(ell):
            raise ValueError(f"the characteristic must be prime, found {ell}")
        if f < 1:
            raise ValueError(f"the extension degree must be positive, found {f}")
        self._ell = int(ell)
        self._f = int(f)
        self._q = self._ell**self._f
        self._seed = int(seed)

        rng = np.random.default_rng(seed)
        self._modulus = _random_modulus(self._ell, self._f, rng)

        weights = self._ell ** np.arange(self._f, dtype=np.int64)
        self._weights = weights
        self._digits = (np.arange(self._q, dtype=np.int64)[:, None] // weights[None, :]) % self._ell

        self._generator, self._exp, self._log = self._build_tables()
        log.debug(
            "built F_%d = F_%d[t]/(%s) with generator %d",
            self._q,
            self._ell,
            self._modulus,
            self._generator,
        )

    # encoding

    def _poly(self, a: int) -> List[int]:
        return gf_strip([int(v) for v in self._digits[a][::-1]])

    def _encode(self, poly: List[int]) -> int:
        coeffs = [0] * self._f
        for k, c in enumerate(reversed(poly)):
            coeffs[k] = int(c) % self._ell
        return int(np.dot(coeffs, self._weights))

    def _is_generator(self, a: int) -> bool:
        poly = self._poly(a)
        for r in sympy.factorint(self._q - 1):
            if gf_pow_mod(poly, (self._q - 1) // r, self._modulus, self._ell, ZZ) == [1]:
                return False
        return True

    def _build_tables(self) -> Tuple[int, np.ndarray, np.ndarray]:
        generator = next(a for a in range(1, self._q) if self._is_generator(a))
        exp = np.zeros(self._q - 1, dtype=np.int64)
        logs = np.full(self._q, -1, dtype=np.int64)
        current = [1]
        g = self._poly(generator)
        for k in range(self._q - 1):
            a = self._encode(current)
            exp[k] = a
            logs[a] = k
            current = gf_rem(gf_mul(current, g, self._ell, ZZ), self._modulus, self._ell, ZZ)
        if np.count_nonzero(logs[1:] >= 0) != self._q - 1:
            raise VerificationError("g generates F_q^*", f"q={self._q}, g={generator}")
        exp.setflags(write=False)
        logs.setflags(write=False)
        return generator, exp, logs

    # accessors

    def characteristic(self) -> int:
        return self._ell

    def degree(self) -> int:
        return self._f

    def order(self) -> int:
        return self._q

    def modulus(self) -> List[int]:
        return list(self._modulus)

    def generator(self) -> int:
        return self._generator

    def elements(self) -> np.ndarray:
        return np.arange(self._q, dtype=np.int64)

    def log_table(self) -> np.ndarray:
        """log_g of every element; -1 at zero."""
        return self._log

    def exp_table(self) -> np.ndarray:
        return self._exp

    def extension(self, m: int) -> "FiniteField":
        """F_{q^m}, built directly as a degree f m extension of F_ell."""
        if m == 1:
            return self
        return finite_field(self._ell, self._f * m, self._seed)

    # arithmetic

    def add(self, a: ArrayOrInt, b: ArrayOrInt) -> np.ndarray:
        digits = (self._digits[a] + self._digits[b]) % self._ell
        return digits @ self._weights

    def neg(self, a: ArrayOrInt) -> np.ndarray:
        return ((-self._digits[a]) % self._ell) @ self._weights

    def sub(self, a: ArrayOrInt, b: ArrayOrInt) -> np.ndarray:
        digits = (self._digits[a] - self._digits[b]) % self._ell
        return digits @ self._weights

    def mul(self, a: ArrayOrInt, b: ArrayOrInt) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        k = (self._log[a] + self._log[b]) % (self._q - 1)
        return np.where((a == 0) | (b == 0), 0, self._exp[k])

    def power(self, a: ArrayOrInt, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if n == 0:
            return np.ones_like(a)
        k = (self._log[a] * n) % (self._q - 1)
        return np.where(a == 0, 0, self._exp[k])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self._ell == other._ell and self._f == other._f and self._modulus == other._modulus

    def __hash__(self) -> int:
        return hash((self._ell, self._f, tuple(self._modulus)))

    def __repr__(self) -> str:
        return f"FiniteField(ell={self._ell}, f={self._f})"


@functools.lru_cache(maxsize=None)
def finite_field(ell: int, f: int = 1, seed: int = 0) -> FiniteField:
    return FiniteField(ell, f, seed)


def residue_field(p: int, ell: int, seed: int = 0) -> FiniteField:
    """The smallest field of characteristic ell containing the p-th roots of unity."""
    if ell == p:
        raise ValueError("the characteristic must differ from p")
    return finite_field(ell, int(sympy.n_order(ell, p)), seed)
