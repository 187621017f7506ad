# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
The module M = H1(U, Y; Z/p) ≅ Λ1 as a p^2-dimensional F_p vector space on which Q acts
through the units B_q. The monomial y0^i y1^j has index i * p + j.
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .errors import DimensionMismatchError
from .galois_action import CVector, b_unit, b_unit_from_generators, fold_index, tau
from .group_ring import Ring1Elt
from .linalg import FpMatrix, Subspace
from .reference import A2_P7, S2_P7
from .render import parse_xy
from .scalars import context, prime_field

log = logging.getLogger(__name__)


class ModuleM:
    """Coordinates on Λ1 over F_p and the matrices of the Q-action."""

    def __init__(self, p: int):
        self._ctx = context(p)
        self._p = p

    def prime(self) -> int:
        return self._p

    def dim(self) -> int:
        return self._p * self._p

    def index(self, i: int, j: int) -> int:
        return i * self._p + j

    def vector(self, u: Ring1Elt) -> np.ndarray:
        if u.prime() != self._p:
            raise DimensionMismatchError(f"element at p={u.prime()} in the module at p={self._p}")
        return u.descend().to_y().to_numpy().reshape(-1)

    def element(self, v: Sequence[int]) -> Ring1Elt:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.dim(),):
            raise DimensionMismatchError(f"expected a vector of length {self.dim()}, found shape {v.shape}")
        return Ring1Elt(prime_field(self._p), v.reshape(self._p, self._p), "y")

    def monomial(self, i: int, j: int) -> np.ndarray:
        v = np.zeros(self.dim(), dtype=np.int64)
        v[self.index(i, j)] = 1
        return v

    def action_matrix(self, u: Ring1Elt) -> FpMatrix:
        """Matrix of m -> u m; column i * p + j holds u y0^i y1^j."""
        p = self._p
        grid = u.descend().to_y().to_numpy()
        i, j, a, b = np.meshgrid(*(np.arange(p),) * 4, indexing="ij")
        di, dj = i - a, j - b
        valid = (di >= 0) & (dj >= 0)
        entries = np.where(valid, grid[di.clip(0), dj.clip(0)], 0)
        return FpMatrix(p, entries.reshape(p * p, p * p))

    def action_of(self, q: CVector) -> FpMatrix:
        return self.action_matrix(b_unit_from_generators(q).element)

    def twist_matrix(self, a: int) -> FpMatrix:
        """Matrix of the permutation ε0^i ε1^j -> ε0^(ia) ε1^(ja) in the y-basis."""
        p = self._p
        if a % p == 0:
            raise ValueError("twist requires a unit mod p")
        idx = (np.arange(p) * a) % p
        target = (idx[:, None] * p + idx[None, :]).reshape(-1)
        perm = np.zeros((p * p, p * p), dtype=np.int64)
        perm[target, np.arange(p * p)] = 1
        eps_to_y = np.kron(self._ctx.eps_to_y, self._ctx.eps_to_y)
        y_to_eps = np.kron(self._ctx.y_to_eps, self._ctx.y_to_eps)
        return FpMatrix(p, eps_to_y) @ FpMatrix(p, perm) @ FpMatrix(p, y_to_eps)

    def span(self, elements: Sequence[Ring1Elt]) -> Subspace:
        return Subspace.span(self._p, [self.vector(u) for u in elements], self.dim())

    def ideal(self, generators: Sequence[Ring1Elt]) -> Subspace:
        """The ideal of Λ1 generated by ``generators``."""
        if not generators:
            return Subspace.zero(self._p, self.dim())
        return FpMatrix.hstack([self.action_matrix(g) for g in generators]).image_basis()

    def __repr__(self) -> str:
        return f"ModuleM(p={self._p})"


@functools.lru_cache(maxsize=None)
def module(p: int) -> ModuleM:
    return ModuleM(p)


def action_matrix(u: Ring1Elt) -> FpMatrix:
    return module(u.prime()).action_matrix(u)


def twist_matrix(p: int, a: int) -> FpMatrix:
    return module(p).twist_matrix(a)


def ideal_subspace(generators: Sequence[Ring1Elt]) -> Subspace:
    if not generators:
        raise ValueError("at least one generator is required")
    return module(generators[0].prime()).ideal(generators)


@functools.lru_cache(maxsize=None)
def generator_matrices(p: int) -> Tuple[FpMatrix, ...]:
    """Action matrices of B_{τ_0}, ..., B_{τ_r}."""
    m = module(p)
    return tuple(m.action_matrix(b_unit(tau(p, j)).element) for j in range(context(p).r + 1))


def _fixed_space(matrix: FpMatrix) -> Subspace:
    return (matrix - FpMatrix.identity(matrix.prime(), matrix.nrows())).kernel_basis()


def kernel_of(q: CVector) -> Subspace:
    """ker(B_q - 1)."""
    return _fixed_space(module(q.p).action_of(q))


@functools.lru_cache(maxsize=None)
def generator_kernels(p: int) -> Tuple[Subspace, ...]:
    return tuple(_fixed_space(a) for a in generator_matrices(p))


@functools.lru_cache(maxsize=None)
def invariants_mq(p: int) -> Subspace:
    """M^Q as the intersection of the fixed spaces of the generators."""
    kernels = generator_kernels(p)
    result = kernels[0]
    for k in kernels[1:]:
        result = result.intersect(k)
    log.debug("dim M^Q = %d at p=%d", result.dim(), p)
    return result


@functools.lru_cache(maxsize=None)
def h1u_subspace(p: int) -> Subspace:
    """H1(U) = span of y0^i y1^j with i, j >= 1, the ideal (y0 y1)."""
    m = module(p)
    return Subspace.span(p, [m.monomial(i, j) for i in range(1, p) for j in range(1, p)], m.dim())


def invariants_intersection(p: int) -> Subspace:
    """M^Q ∩ H1(U)."""
    return invariants_mq(p).intersect(h1u_subspace(p))


def h1u_invariants(p: int) -> Subspace:
    """H1(U)^Q, which coincides with M^Q ∩ H1(U)."""
    return invariants_intersection(p)


@dataclass(frozen=True)
class DistinguishedVectors:
    p: int
    eta: Tuple[Ring1Elt, ...] = field(compare=False)
    gamma: Tuple[Ring1Elt, ...] = field(compare=False)
    s1: Optional[Ring1Elt] = field(compare=False)
    a1: Optional[Ring1Elt] = field(compare=False)
    s2: Optional[Ring1Elt] = field(compare=False)
    a2: Optional[Ring1Elt] = field(compare=False)

    def extra(self) -> List[Ring1Elt]:
        """s1, a1 (p >= 5) and s2, a2 (p = 7)."""
        return [v for v in (self.s1, self.a1, self.s2, self.a2) if v is not None]


@functools.lru_cache(maxsize=None)
def distinguished_vectors(p: int) -> DistinguishedVectors:
    """
    η_k = (y1 + 1)^k y0^(p-1), γ_k = (y0 + 1)^k y1^(p-1), s1 = y0^(p-2) y1^(p-2),
    a1 = y0^(p-3) y1^(p-3) (y0 - y1) and, at p = 7, the two further invariants s2, a2.
    """
    ring = prime_field(p)
    y0, y1 = Ring1Elt.y(ring, 0), Ring1Elt.y(ring, 1)
    eta = tuple((y1 + 1) ** k * y0 ** (p - 1) for k in range(p))
    gamma = tuple((y0 + 1) ** k * y1 ** (p - 1) for k in range(p))
    s1 = a1 = s2 = a2 = None
    if p >= 5:
        s1 = y0 ** (p - 2) * y1 ** (p - 2)
        a1 = y0 ** (p - 3) * y1 ** (p - 3) * (y0 - y1)
    if p == 7:
        s2, a2 = parse_xy(p, S2_P7), parse_xy(p, A2_P7)
    return DistinguishedVectors(p, eta, gamma, s1, a1, s2, a2)


@functools.lru_cache(maxsize=None)
def l_subspace(p: int) -> Subspace:
    """L = span(η_k, γ_k), of dimension 2p - 1."""
    vecs = distinguished_vectors(p)
    return module(p).span(list(vecs.eta) + list(vecs.gamma))


def max_exponent_subspace(p: int) -> Subspace:
    """Span of the monomials y0^i y1^j with max(i, j) = p - 1."""
    m = module(p)
    mono = [m.monomial(i, j) for i in range(p) for j in range(p) if max(i, j) == p - 1]
    return Subspace.span(p, mono, m.dim())


def h1u_invariants_codim(p: int) -> int:
    """Codimension of M^Q ∩ H1(U) in M^Q."""
    return invariants_mq(p).dim() - invariants_intersection(p).dim()


def kernel_transport_check(a: int, i: int, p: int) -> bool:
    """ρ_a maps ker(B_{τ_i} - 1) onto ker(B_{τ_j} - 1), j = ±ia folded into [1, r]."""
    r = context(p).r
    if not 1 <= i <= r:
        raise ValueError(f"kernel transport is stated for 1 <= i <= {r}, found {i}")
    if a % p == 0:
        raise ValueError("twist requires a unit mod p")
    kernels = generator_kernels(p)
    image = kernels[i].image_under(module(p).twist_matrix(a))
    return image == kernels[fold_index(p, i * a)]


def twist_preserves_invariants(a: int, p: int) -> bool:
    """ρ_a(M^Q) = M^Q."""
    return invariants_mq(p).image_under(module(p).twist_matrix(a)) == invariants_mq(p)


@dataclass
class QuestionProbe:
    """Do the fixed spaces of B_{τ_1}, ..., B_{τ_r} agree, and does M^Q equal ker(B_τ0 - 1) ∩ ker(B_τ1 - 1)?"""

    p: int
    kernel_dims: List[int]
    kernels_coincide: bool
    mq_from_two_kernels: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "kernel_dims": self.kernel_dims,
            "kernels_coincide": self.kernels_coincide,
            "mq_from_two_kernels": self.mq_from_two_kernels,
        }


def question_probe(p: int) -> QuestionProbe:
    kernels = generator_kernels(p)
    others = kernels[1:]
    coincide = all(k == others[0] for k in others[1:])
    two = kernels[0].intersect(kernels[1]) == invariants_mq(p)
    log.info("fixed spaces of τ_1..τ_r at p=%d coincide: %s", p, coincide)
    return QuestionProbe(p, [k.dim() for k in kernels], coincide, two)


@dataclass
class InvariantReport:
    p: int
    dim_mq: int
    dim_mq_cap_h1u: int
    dim_l: int
    codim: int
    kernel_dims: List[int]
    mq_basis: np.ndarray = field(repr=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "dim_MQ": self.dim_mq,
            "dim_MQ_cap_H1U": self.dim_mq_cap_h1u,
            "dim_L": self.dim_l,
            "codim": self.codim,
            "kernel_dims": self.kernel_dims,
            "MQ_basis": self.mq_basis.tolist(),
        }

    def to_df(self) -> pd.DataFrame:
        """One row per statistic."""
        rows = [
            ("dim_MQ", self.dim_mq),
            ("dim_MQ_cap_H1U", self.dim_mq_cap_h1u),
            ("dim_L", self.dim_l),
            ("codim", self.codim),
        ]
        rows += [(f"dim_ker_tau{j}", d) for j, d in enumerate(self.kernel_dims)]
        return pd.DataFrame(rows, columns=["statistic", "value"]).assign(p=self.p)


def invariant_report(p: int) -> InvariantReport:
    mq = invariants_mq(p)
    inter = invariants_intersection(p)
    return InvariantReport(
        p,
        mq.dim(),
        inter.dim(),
        l_subspace(p).dim(),
        mq.dim() - inter.dim(),
        [k.dim() for k in generator_kernels(p)],
        mq.basis(),
    )
