# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Low-degree cohomology of Q ≅ (Z/p)^(r+1) with coefficients in M.

The cochain complex Hom(A_•, M) of the tensor-product resolution reads
M -D0-> M^(r+1) -D1-> M^ρ with ρ = (r+1) + C(r+1, 2). Degree-2 summands are ordered
u_0, ..., u_r followed by t_{j,k} for j < k in lexicographic order.
"""

import functools
import itertools
import json
import logging
import pathlib
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .errors import DimensionMismatchError, MissingTableEntryError, VerificationError
from .galois_action import CVector, tau
from .homology import generator_matrices
from .linalg import FpMatrix, Subspace
from .scalars import context

log = logging.getLogger(__name__)

QLike = Union[CVector, Sequence[int]]
PairKey = Tuple[CVector, CVector]


def rho(p: int) -> int:
    """Number of degree-2 summands, (p + 1)(p + 3) / 8."""
    n = context(p).r + 1
    return n + n * (n - 1) // 2


def summand_pairs(p: int) -> List[Tuple[int, int]]:
    n = context(p).r + 1
    return list(itertools.combinations(range(n), 2))


@dataclass(frozen=True)
class TensorComplex:
    p: int
    generators: Tuple[FpMatrix, ...] = field(repr=False, compare=False)
    norms: Tuple[FpMatrix, ...] = field(repr=False, compare=False)
    d0: FpMatrix = field(repr=False, compare=False)
    d1: FpMatrix = field(repr=False, compare=False)
    _q_matrices: Dict[CVector, FpMatrix] = field(default_factory=dict, init=False, repr=False, compare=False)

    def rank_q(self) -> int:
        return len(self.generators)

    def rho(self) -> int:
        return rho(self.p)

    def module_dim(self) -> int:
        return self.p * self.p

    def pairs(self) -> List[Tuple[int, int]]:
        return summand_pairs(self.p)

    def d1_commutator_block(self) -> FpMatrix:
        """Rows of D1 belonging to the t_{j,k} summands."""
        n = self.module_dim()
        return FpMatrix(self.p, self.d1.to_numpy()[self.rank_q() * n :])

    def q_matrix(self, q: CVector) -> FpMatrix:
        """Matrix of B_q = Π_j B_{τ_j}^(c_j)."""
        acc = self._q_matrices.get(q)
        if acc is None:
            acc = FpMatrix.identity(self.p, self.module_dim())
            for a, c in zip(self.generators, q.c):
                if c:
                    acc = acc @ a.power(c)
            self._q_matrices[q] = acc
        return acc

    def act(self, q: CVector, v: np.ndarray) -> np.ndarray:
        return self.q_matrix(q).apply(v)


def _identity(p: int) -> FpMatrix:
    return FpMatrix.identity(p, p * p)


@functools.lru_cache(maxsize=None)
def build_complex(p: int) -> TensorComplex:
    """
    D0 stacks the blocks (1 - τ_j). D1 sends (m_j) to (N_{τ_j} m_j) on the u_j summands
    and to (1 - τ_k) m_j - (1 - τ_j) m_k on t_{j,k}.
    """
    gens = generator_matrices(p)
    n = len(gens)
    eye = _identity(p)
    zero = FpMatrix.zeros(p, p * p, p * p)
    norms = []
    for a in gens:
        acc = FpMatrix.zeros(p, p * p, p * p)
        power = eye
        for _ in range(p):
            acc = acc + power
            power = power @ a
        norms.append(acc)

    d0 = FpMatrix.from_blocks(p, [[eye - a] for a in gens])
    rows = []
    for j in range(n):
        rows.append([norms[j] if k == j else zero for k in range(n)])
    for j, k in summand_pairs(p):
        row = [zero] * n
        row[j] = eye - gens[k]
        row[k] = -(eye - gens[j])
        rows.append(row)
    d1 = FpMatrix.from_blocks(p, rows)

    if not (d1 @ d0).is_zero():
        raise VerificationError("D1 D0 == 0", f"p={p}")
    log.debug("built tensor complex at p=%d: D0 %s, D1 %s", p, d0.shape(), d1.shape())
    return TensorComplex(p, gens, tuple(norms), d0, d1)


@dataclass
class H1Report:
    p: int
    dim_ker_d1: int
    rank_d0: int
    dim_h1: int

    def to_dict(self) -> Dict[str, int]:
        return {"p": self.p, "dim_ker_D1": self.dim_ker_d1, "rank_D0": self.rank_d0, "dim_H1": self.dim_h1}

    def to_df(self) -> pd.DataFrame:
        return pd.DataFrame([self.to_dict()])


def h1_report(p: int) -> H1Report:
    cx = build_complex(p)
    ker = cx.d1.ncols() - cx.d1.rank()
    rk = cx.d0.rank()
    return H1Report(p, ker, rk, ker - rk)


def h1_dimension(p: int) -> int:
    """dim H^1(Q, M) = dim ker D1 - rank D0."""
    return h1_report(p).dim_h1


# cochains


@dataclass(frozen=True)
class Cochain1:
    """(m_0, ..., m_r), one vector of M per generator."""

    p: int
    values: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        n = context(self.p).r + 1
        arr = np.asarray(self.values, dtype=np.int64) % self.p
        if arr.shape != (n, self.p * self.p):
            raise DimensionMismatchError(f"expected a cochain of shape {(n, self.p * self.p)}, found {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_flat(cls, p: int, v: np.ndarray) -> "Cochain1":
        return cls(p, np.asarray(v).reshape(context(p).r + 1, p * p))

    def flat(self) -> np.ndarray:
        return self.values.reshape(-1).copy()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain1):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.p, self.values.tobytes()))

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "m": self.values.tolist()}


@dataclass(frozen=True)
class Cochain2:
    """(n_0, ..., n_r, n_{0,1}, ..., n_{r-1,r})."""

    p: int
    values: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.int64) % self.p
        if arr.shape != (rho(self.p), self.p * self.p):
            raise DimensionMismatchError(
                f"expected a cochain of shape {(rho(self.p), self.p * self.p)}, found {arr.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_flat(cls, p: int, v: np.ndarray) -> "Cochain2":
        return cls(p, np.asarray(v).reshape(rho(p), p * p))

    def flat(self) -> np.ndarray:
        return self.values.reshape(-1).copy()

    def u_part(self) -> np.ndarray:
        return self.values[: context(self.p).r + 1].copy()

    def t_part(self) -> np.ndarray:
        return self.values[context(self.p).r + 1 :].copy()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain2):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.p, self.values.tobytes()))


# d2 membership


@dataclass(frozen=True)
class D2Instance:
    """Values u_j = φ(a_j) and w_{j,k} = φ(c_{j,k}) in M."""

    p: int
    u: np.ndarray = field(compare=False)
    w: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        n = context(self.p).r + 1
        dim = self.p * self.p
        u = np.asarray(self.u, dtype=np.int64).reshape(-1, dim) % self.p
        w = np.asarray(self.w, dtype=np.int64).reshape(-1, dim) % self.p
        if u.shape[0] != n or w.shape[0] != n * (n - 1) // 2:
            raise DimensionMismatchError(
                f"an instance at p={self.p} needs {n} values u_j and {n * (n - 1) // 2} values w_jk"
            )
        u.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)

    @classmethod
    def zero(cls, p: int) -> "D2Instance":
        n = context(p).r + 1
        return cls(p, np.zeros((n, p * p)), np.zeros((n * (n - 1) // 2, p * p)))

    @classmethod
    def from_image(cls, p: int, m: Cochain1) -> "D2Instance":
        """The instance whose target (-u, w) is D1 m."""
        image = Cochain2.from_flat(p, build_complex(p).d1.apply(m.flat()))
        return cls(p, -image.u_part(), image.t_part())

    @classmethod
    def random_in_image(cls, p: int, rng: np.random.Generator) -> "D2Instance":
        n = context(p).r + 1
        return cls.from_image(p, Cochain1(p, rng.integers(0, p, size=(n, p * p))))

    @classmethod
    def random(cls, p: int, rng: np.random.Generator) -> "D2Instance":
        n = context(p).r + 1
        return cls(p, rng.integers(0, p, size=(n, p * p)), rng.integers(0, p, size=(n * (n - 1) // 2, p * p)))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "D2Instance":
        try:
            return cls(int(data["p"]), np.asarray(data["u"]), np.asarray(data["w"]))
        except KeyError as e:
            raise ValueError(f"instance is missing the {e.args[0]!r} field") from None

    @classmethod
    def from_json(cls, path: Union[str, pathlib.Path]) -> "D2Instance":
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))

    def target(self) -> Cochain2:
        """(-u_j, w_{j,k}) in the summand order of D1."""
        return Cochain2(self.p, np.vstack([-self.u, self.w]))

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "u": self.u.tolist(), "w": self.w.tolist()}


@dataclass
class D2Verdict:
    in_kernel: bool
    certificate: Optional[Cochain1]
    method: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "in_kernel": self.in_kernel,
            "method": self.method,
            "certificate": None if self.certificate is None else self.certificate.values.tolist(),
        }


def verify_certificate(inst: D2Instance, m: Cochain1) -> None:
    """Check φ(a_j) = -N_{τ_j} m_j and φ(c_{j,k}) = (1 - τ_k) m_j - (1 - τ_j) m_k."""
    cx = build_complex(inst.p)
    eye = _identity(inst.p)
    for j, norm in enumerate(cx.norms):
        if not np.array_equal(inst.u[j], (-norm.apply(m.values[j])) % inst.p):
            raise VerificationError("φ(a_j) == -N_τj m_j", f"j={j}")
    for idx, (j, k) in enumerate(cx.pairs()):
        rhs = (eye - cx.generators[k]).apply(m.values[j]) - (eye - cx.generators[j]).apply(m.values[k])
        if not np.array_equal(inst.w[idx], rhs % inst.p):
            raise VerificationError("φ(c_jk) == (1 - τ_k) m_j - (1 - τ_j) m_k", f"(j, k)=({j}, {k})")


def d2_kernel_test(inst: D2Instance) -> D2Verdict:
    """φ lies in ker d2 iff (-φ(a_j), φ(c_{j,k})) lies in the image of D1."""
    cx = build_complex(inst.p)
    x = cx.d1.solve(inst.target().flat())
    if x is None:
        return D2Verdict(False, None, "full")
    m = Cochain1.from_flat(inst.p, x)
    verify_certificate(inst, m)
    return D2Verdict(True, m, "full")


def d2_kernel_test_vanishing_norm(inst: D2Instance) -> D2Verdict:
    """
    Same verdict as :py:func:`d2_kernel_test` when every N_{τ_j} vanishes (p >= 5):
    φ(a_j) must be zero and only the commutator block is solved.
    """
    if inst.p < 5:
        raise ValueError("the vanishing-norm test requires p >= 5")
    if inst.u.any():
        return D2Verdict(False, None, "vanishing-norm")
    cx = build_complex(inst.p)
    x = cx.d1_commutator_block().solve(inst.w.reshape(-1))
    if x is None:
        return D2Verdict(False, None, "vanishing-norm")
    m = Cochain1.from_flat(inst.p, x)
    verify_certificate(inst, m)
    return D2Verdict(True, m, "vanishing-norm")


# bar resolution


def _key1(p: int, q: QLike) -> CVector:
    return q if isinstance(q, CVector) else CVector(p, tuple(q))


class BarCocycleTable:
    """
    Values of an inhomogeneous bar cochain Q^degree -> M. Only the entries that were
    provided are stored; reading a missing one raises MissingTableEntryError.
    """

    def __init__(self, p: int, degree: int, values: Mapping[Any, np.ndarray]):
        if degree not in (1, 2):
            raise ValueError(f"bar tables have degree 1 or 2, found {degree}")
        self.p = p
        self.degree = degree
        self._values: Dict[Any, np.ndarray] = {}
        for key, v in values.items():
            self._values[self._key(key)] = np.asarray(v, dtype=np.int64) % p

    def _key(self, key: Any) -> Any:
        if self.degree == 1:
            return _key1(self.p, key)
        g, h = key
        return _key1(self.p, g), _key1(self.p, h)

    def __getitem__(self, key: Any) -> np.ndarray:
        try:
            return self._values[self._key(key)]
        except KeyError:
            raise MissingTableEntryError(f"bar cochain of degree {self.degree} has no value at {key}") from None

    def __contains__(self, key: Any) -> bool:
        return self._key(key) in self._values

    def __len__(self) -> int:
        return len(self._values)

    def keys(self) -> Iterable[Any]:
        return self._values.keys()

    @classmethod
    def from_function(
        cls, p: int, degree: int, fn: Callable[..., np.ndarray], keys: Optional[Iterable[Any]] = None
    ) -> "BarCocycleTable":
        """Tabulate ``fn``: over all of Q in degree 1, over :py:func:`required_pairs` in degree 2."""
        if keys is None:
            keys = CVector.all(p) if degree == 1 else required_pairs(p)
        if degree == 1:
            return cls(p, 1, {q: fn(q) for q in keys})
        return cls(p, 2, {(g, h): fn(g, h) for g, h in keys})

    def is_cocycle(self, cx: TensorComplex) -> bool:
        """φ(gh) = φ(g) + g φ(h) on every pair of stored arguments (degree 1 only)."""
        if self.degree != 1:
            raise ValueError("the pointwise cocycle test is implemented for degree-1 tables")
        for g, h in itertools.product(self._values, repeat=2):
            gh = g + h
            if gh not in self._values:
                continue
            rhs = (self._values[g] + cx.act(g, self._values[h])) % self.p
            if not np.array_equal(self._values[gh], rhs):
                return False
        return True


def required_pairs(p: int) -> List[PairKey]:
    """Arguments read by the degree-2 translation: (τ_j^i, τ_j) and (τ_j, τ_k)."""
    n = context(p).r + 1
    keys: List[PairKey] = []
    for j in range(n):
        t = tau(p, j)
        keys.extend((t * i, t) for i in range(p))
    for j, k in itertools.permutations(range(n), 2):
        keys.append((tau(p, j), tau(p, k)))
    return keys


def translate_bar_1cocycle(tbl: BarCocycleTable) -> Cochain1:
    """m_j = -φ(τ_j)."""
    p = tbl.p
    n = context(p).r + 1
    return Cochain1(p, np.vstack([-tbl[tau(p, j)] for j in range(n)]))


def translate_bar_2cocycle(tbl: BarCocycleTable) -> Cochain2:
    """n_j = -Σ_i φ(τ_j^i, τ_j) and n_{j,k} = φ(τ_k, τ_j) - φ(τ_j, τ_k)."""
    p = tbl.p
    n = context(p).r + 1
    rows = []
    for j in range(n):
        t = tau(p, j)
        rows.append(-sum((tbl[(t * i, t)] for i in range(p)), np.zeros(p * p, dtype=np.int64)))
    for j, k in summand_pairs(p):
        rows.append(tbl[(tau(p, k), tau(p, j))] - tbl[(tau(p, j), tau(p, k))])
    return Cochain2(p, np.vstack(rows))


def bar_coboundary_1(cx: TensorComplex, m: np.ndarray) -> BarCocycleTable:
    """φ(g) = (g - 1) m over all of Q."""
    m = np.asarray(m, dtype=np.int64)
    return BarCocycleTable.from_function(cx.p, 1, lambda q: cx.act(q, m) - m)


def bar_coboundary_2(cx: TensorComplex, psi: BarCocycleTable) -> BarCocycleTable:
    """δψ(g, h) = g ψ(h) - ψ(gh) + ψ(g) on :py:func:`required_pairs`."""
    if psi.degree != 1:
        raise ValueError("the coboundary of a degree-1 table is taken here")
    return BarCocycleTable.from_function(cx.p, 2, lambda g, h: cx.act(g, psi[h]) - psi[g + h] + psi[g])


def crossed_homomorphism(cx: TensorComplex, x: Cochain1) -> BarCocycleTable:
    """
    The bar 1-cocycle with φ(τ_j) = -x_j for x in ker D1, extended by
    φ(τ_0^t0 ... τ_r^tr) = Σ_j (Π_{i<j} τ_i^ti) (1 + τ_j + ... + τ_j^(tj-1)) φ(τ_j).
    """
    if cx.d1.apply(x.flat()).any():
        raise ValueError("the tuple does not lie in ker D1")
    p = cx.p
    n = cx.rank_q()
    # partial[j][t] = (1 + τ_j + ... + τ_j^(t-1)) φ(τ_j)
    partial = []
    for j in range(n):
        phi = (-x.values[j]) % p
        row = [np.zeros(p * p, dtype=np.int64)]
        for _ in range(1, p):
            row.append((phi + cx.generators[j].apply(row[-1])) % p)
        partial.append(row)

    def value(q: CVector) -> np.ndarray:
        acc = np.zeros(p * p, dtype=np.int64)
        prefix = CVector.zero(p)
        for j, t in enumerate(q.c):
            acc = acc + cx.act(prefix, partial[j][t])
            prefix = prefix + tau(p, j) * t
        return acc % p

    return BarCocycleTable.from_function(p, 1, value)


def image_d0(p: int) -> Subspace:
    return build_complex(p).d0.image_basis()


def kernel_d1(p: int) -> Subspace:
    return build_complex(p).d1.kernel_basis()


def image_d1(p: int) -> Subspace:
    return build_complex(p).d1.image_basis()


def random_kernel_element(p: int, rng: np.random.Generator) -> Cochain1:
    """A random element of ker D1."""
    basis = kernel_d1(p).basis()
    coeffs = rng.integers(0, p, size=basis.shape[0])
    return Cochain1.from_flat(p, (coeffs @ basis) % p)
