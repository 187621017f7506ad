# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Central extensions 1 -> N -> G -> Q -> 1 with N = Z/p and Q = (Z/p)^n, used to produce
the data a_j = s(τ_j)^p and c_{j,k} = [s(τ_k), s(τ_j)] of a transgression.

G is the set Q x Z/p with (q, n)(q', n') = (q + q', n + n' + f(q, q')) where
f(q, q') = Σ_{j,k} B_{jk} q_j q'_k + Σ_j e_j floor((q_j + q'_j) / p) on representatives in [0, p).
N is written additively.
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from .cohomology import BarCocycleTable, D2Instance, TensorComplex, required_pairs
from .errors import DimensionMismatchError, NotNormalizedError, VerificationError
from .galois_action import CVector
from .scalars import context

log = logging.getLogger(__name__)

Element = Tuple[Tuple[int, ...], int]
Section = Callable[[Tuple[int, ...]], Element]


@dataclass(frozen=True)
class CentralExtension:
    p: int
    rank: int
    bilinear: Tuple[Tuple[int, ...], ...]
    carries: Tuple[int, ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        if len(self.bilinear) != self.rank or any(len(row) != self.rank for row in self.bilinear):
            raise DimensionMismatchError(f"bilinear form must be {self.rank}x{self.rank}")
        if len(self.carries) != self.rank:
            raise DimensionMismatchError(f"expected {self.rank} carry coefficients, found {len(self.carries)}")
        object.__setattr__(self, "bilinear", tuple(tuple(int(b) % self.p for b in row) for row in self.bilinear))
        object.__setattr__(self, "carries", tuple(int(e) % self.p for e in self.carries))

    # fixtures

    @classmethod
    def split(cls, p: int, rank: int) -> "CentralExtension":
        """G = Q x N."""
        return cls(p, rank, ((0,) * rank,) * rank, (0,) * rank, "split")

    @classmethod
    def cyclic_p2(cls, p: int, rank: int = 1) -> "CentralExtension":
        """The first factor of Q is replaced by Z/p^2, the other factors split off."""
        return cls(p, rank, ((0,) * rank,) * rank, (1,) + (0,) * (rank - 1), "cyclic_p2")

    @classmethod
    def heisenberg(cls, p: int, rank: int = 2) -> "CentralExtension":
        """Upper unitriangular 3x3 matrices mod p on the first two factors of Q."""
        if rank < 2:
            raise ValueError("the Heisenberg fixture needs rank >= 2")
        bilinear = [[0] * rank for _ in range(rank)]
        bilinear[0][1] = 1
        return cls(p, rank, tuple(map(tuple, bilinear)), (0,) * rank, "heisenberg")

    @classmethod
    def generic(cls, p: int, rank: int, rng: np.random.Generator) -> "CentralExtension":
        bilinear = rng.integers(0, p, size=(rank, rank))
        carries = rng.integers(0, p, size=rank)
        return cls(p, rank, tuple(map(tuple, bilinear.tolist())), tuple(carries.tolist()), "generic")

    @classmethod
    def fixture(cls, name: str, p: int, rank: int, seed: int = 0) -> "CentralExtension":
        if name == "split":
            return cls.split(p, rank)
        if name == "cyclic_p2":
            return cls.cyclic_p2(p, rank)
        if name == "heisenberg":
            return cls.heisenberg(p, rank)
        if name == "generic":
            return cls.generic(p, rank, np.random.default_rng(seed))
        raise ValueError(f"unknown extension fixture {name!r}")

    # group law

    def cocycle(self, q1: Sequence[int], q2: Sequence[int]) -> int:
        p = self.p
        total = 0
        for j, k in itertools.product(range(self.rank), repeat=2):
            total += self.bilinear[j][k] * q1[j] * q2[k]
        for j in range(self.rank):
            total += self.carries[j] * ((q1[j] + q2[j]) // p)
        return total % p

    def _q(self, q: Sequence[int]) -> Tuple[int, ...]:
        if len(q) != self.rank:
            raise DimensionMismatchError(f"expected an element of (Z/p)^{self.rank}, found {tuple(q)}")
        return tuple(int(v) % self.p for v in q)

    def identity(self) -> Element:
        return (0,) * self.rank, 0

    def multiply(self, g: Element, h: Element) -> Element:
        q1, n1 = self._q(g[0]), g[1]
        q2, n2 = self._q(h[0]), h[1]
        q = tuple((a + b) % self.p for a, b in zip(q1, q2))
        return q, (n1 + n2 + self.cocycle(q1, q2)) % self.p

    def inverse(self, g: Element) -> Element:
        q = self._q(g[0])
        qi = tuple((-a) % self.p for a in q)
        return qi, (-g[1] - self.cocycle(q, qi)) % self.p

    def power(self, g: Element, n: int) -> Element:
        acc = self.identity()
        for _ in range(n):
            acc = self.multiply(acc, g)
        return acc

    def commutator(self, g: Element, h: Element) -> Element:
        """g h g^-1 h^-1."""
        return self.multiply(self.multiply(g, h), self.multiply(self.inverse(g), self.inverse(h)))

    def generator(self, j: int) -> Element:
        return tuple(int(k == j) for k in range(self.rank)), 0

    def section(self, q: Sequence[int]) -> Element:
        """s(τ_0^t0 ... τ_r^tr) = s(τ_0)^t0 ... s(τ_r)^tr with s(τ_j) = (e_j, 0)."""
        q = self._q(q)
        acc = self.identity()
        for j, t in enumerate(q):
            acc = self.multiply(acc, self.power(self.generator(j), t))
        return acc


@dataclass
class ExtensionData:
    """ω(q1, q2) = s(q1) s(q2) s(q1 q2)^-1 together with a_j and c_{j,k}."""

    extension: CentralExtension
    omega: Callable[[Tuple[int, ...], Tuple[int, ...]], int] = field(repr=False)
    a: Tuple[int, ...]
    c: Dict[Tuple[int, int], int]

    def to_dict(self) -> Dict[str, object]:
        return {
            "fixture": self.extension.name,
            "p": self.extension.p,
            "a": list(self.a),
            "c": {f"{j},{k}": v for (j, k), v in sorted(self.c.items())},
        }


def omega_from_extension(ext: CentralExtension, section: Optional[Section] = None) -> ExtensionData:
    """
    Factor set of the section and the transgression data. Checks ω(τ_j^t, τ_j) = 0 for
    t < p - 1, a_j = ω(τ_j^(p-1), τ_j) and c_{j,k} = ω(τ_k, τ_j) - ω(τ_j, τ_k).
    """
    p = ext.p
    s = ext.section if section is None else section
    if s((0,) * ext.rank) != ext.identity():
        raise NotNormalizedError("the section does not send 1 to 1")

    @functools.lru_cache(maxsize=None)
    def omega(q1: Tuple[int, ...], q2: Tuple[int, ...]) -> int:
        q12 = tuple((a + b) % p for a, b in zip(q1, q2))
        value = ext.multiply(ext.multiply(s(q1), s(q2)), ext.inverse(s(q12)))
        if any(value[0]):
            raise VerificationError("s(q1) s(q2) s(q1 q2)^-1 lies in N", f"q1={q1}, q2={q2}")
        return value[1]

    def e(j: int, t: int = 1) -> Tuple[int, ...]:
        return tuple(t % p if k == j else 0 for k in range(ext.rank))

    a = []
    for j in range(ext.rank):
        for t in range(p - 1):
            if omega(e(j, t), e(j)) != 0:
                raise VerificationError("ω(τ_j^t, τ_j) == 1 for t < p - 1", f"j={j}, t={t}")
        a_j = ext.power(s(e(j)), p)
        if any(a_j[0]):
            raise VerificationError("s(τ_j)^p lies in N", f"j={j}")
        if a_j[1] != omega(e(j, p - 1), e(j)):
            raise VerificationError("a_j == ω(τ_j^(p-1), τ_j)", f"j={j}")
        a.append(a_j[1])

    c = {}
    for j, k in itertools.combinations(range(ext.rank), 2):
        comm = ext.commutator(s(e(k)), s(e(j)))
        if any(comm[0]):
            raise VerificationError("[s(τ_k), s(τ_j)] lies in N", f"(j, k)=({j}, {k})")
        if comm[1] != (omega(e(k), e(j)) - omega(e(j), e(k))) % p:
            raise VerificationError("c_jk == ω(τ_k, τ_j) ω(τ_j, τ_k)^-1", f"(j, k)=({j}, {k})")
        c[(j, k)] = comm[1]

    log.debug("extension %s at p=%d: a=%s c=%s", ext.name, p, a, c)
    return ExtensionData(ext, omega, tuple(a), c)


def _check_rank(ext: CentralExtension) -> None:
    n = context(ext.p).r + 1
    if ext.rank != n:
        raise DimensionMismatchError(f"the extension has rank {ext.rank}, Q has rank {n} at p={ext.p}")


def d2_instance_from_extension(ext: CentralExtension, phi: Sequence[int]) -> D2Instance:
    """u_j = a_j φ and w_{j,k} = c_{j,k} φ for the homomorphism N -> M sending 1 to ``phi``."""
    _check_rank(ext)
    data = omega_from_extension(ext)
    phi = np.asarray(phi, dtype=np.int64)
    u = np.vstack([a * phi for a in data.a])
    w = np.vstack([data.c[jk] * phi for jk in sorted(data.c)]) if data.c else np.zeros((0, phi.shape[0]))
    return D2Instance(ext.p, u, w)


def transgression_table(cx: TensorComplex, ext: CentralExtension, phi: Sequence[int]) -> BarCocycleTable:
    """The bar 2-cochain (q1, q2) -> ω(q1, q2) φ on the pairs read by the tensor translation."""
    _check_rank(ext)
    data = omega_from_extension(ext)
    phi = np.asarray(phi, dtype=np.int64)

    def value(g: CVector, h: CVector) -> np.ndarray:
        return data.omega(g.c, h.c) * phi

    return BarCocycleTable.from_function(cx.p, 2, value, required_pairs(cx.p))
