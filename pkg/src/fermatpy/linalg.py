# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Exact linear algebra over F_p.

Matrices are dense ``numpy.int64`` arrays with entries in [0, p). Entries stay below p
and every product is reduced right away, so no intermediate ever gets close to overflowing.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
import scipy.sparse as ss

from .errors import DimensionMismatchError

ArrayLike = Union[np.ndarray, Sequence[Sequence[int]], Sequence[int]]


def _rref(arr: np.ndarray, p: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Reduced row echelon form of ``arr`` mod p and the pivot columns."""
    a = np.array(arr, dtype=np.int64) % p
    if a.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D array, found shape {a.shape}")
    nrows, ncols = a.shape
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        pivot = row + int(nz[0])
        if pivot != row:
            a[[row, pivot]] = a[[pivot, row]]
        a[row] = (a[row] * pow(int(a[row, col]), -1, p)) % p
        factors = a[:, col].copy()
        factors[row] = 0
        mask = factors != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(factors[mask], a[row])) % p
        pivots.append(col)
        row += 1
    return a, tuple(pivots)


class FpMatrix:
    """Immutable dense matrix over F_p."""

    def __init__(self, p: int, entries: ArrayLike):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"FpMatrix requires a 2-D array, found shape {arr.shape}")
        self._p = int(p)
        self._arr = arr % self._p
        self._arr.setflags(write=False)
        self._rref: Optional[Tuple[np.ndarray, Tuple[int, ...]]] = None

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, p: int, nrows: int, ncols: int) -> "FpMatrix":
        return cls(p, np.zeros((nrows, ncols), dtype=np.int64))

    @classmethod
    def from_blocks(cls, p: int, blocks: Sequence[Sequence["FpMatrix"]]) -> "FpMatrix":
        return cls(p, np.block([[b.to_numpy() for b in row] for row in blocks]))

    @classmethod
    def hstack(cls, matrices: Sequence["FpMatrix"]) -> "FpMatrix":
        return cls(matrices[0].prime(), np.hstack([m.to_numpy() for m in matrices]))

    @classmethod
    def vstack(cls, matrices: Sequence["FpMatrix"]) -> "FpMatrix":
        return cls(matrices[0].prime(), np.vstack([m.to_numpy() for m in matrices]))

    def prime(self) -> int:
        return self._p

    def shape(self) -> Tuple[int, int]:
        return self._arr.shape  # type: ignore[return-value]

    def nrows(self) -> int:
        return self._arr.shape[0]

    def ncols(self) -> int:
        return self._arr.shape[1]

    def _check(self, other: "FpMatrix") -> None:
        if other._p != self._p:
            raise DimensionMismatchError(f"matrices over F_{self._p} and F_{other._p} cannot be combined")

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix(self._p, self._arr + other._arr)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix(self._p, self._arr - other._arr)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(self._p, -self._arr)

    def __mul__(self, k: int) -> "FpMatrix":
        return FpMatrix(self._p, self._arr * (int(k) % self._p))

    __rmul__ = __mul__

    def __matmul__(self, other: Union["FpMatrix", np.ndarray]) -> Any:
        if isinstance(other, FpMatrix):
            self._check(other)
            if self.ncols() != other.nrows():
                raise DimensionMismatchError(f"cannot multiply {self.shape()} by {other.shape()}")
            return FpMatrix(self._p, self._arr @ other._arr)
        return self.apply(other)

    def apply(self, v: ArrayLike) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if v.shape[0] != self.ncols():
            raise DimensionMismatchError(f"cannot apply a {self.shape()} matrix to a vector of length {v.shape[0]}")
        return (self._arr @ (v % self._p)) % self._p

    def power(self, n: int) -> "FpMatrix":
        if self.nrows() != self.ncols():
            raise DimensionMismatchError("only square matrices have powers")
        result = FpMatrix.identity(self._p, self.nrows())
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self._p, self._arr.T)

    @property
    def T(self) -> "FpMatrix":
        return self.transpose()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self._p == other._p and self.shape() == other.shape() and np.array_equal(self._arr, other._arr)

    def __hash__(self) -> int:
        return hash((self._p, self.shape(), self._arr.tobytes()))

    def is_zero(self) -> bool:
        return not self._arr.any()

    def rref(self) -> Tuple["FpMatrix", Tuple[int, ...]]:
        if self._rref is None:
            self._rref = _rref(self._arr, self._p)
        reduced, pivots = self._rref
        return FpMatrix(self._p, reduced), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Subspace":
        """Right kernel {v : A v = 0}."""
        reduced, pivots = self.rref()
        ncols = self.ncols()
        red = reduced.to_numpy()
        pivot_set = set(pivots)
        free = [c for c in range(ncols) if c not in pivot_set]
        vectors = np.zeros((len(free), ncols), dtype=np.int64)
        for k, f in enumerate(free):
            vectors[k, f] = 1
            for i, c in enumerate(pivots):
                vectors[k, c] = -red[i, f]
        return Subspace(self._p, ncols, vectors)

    def image_basis(self) -> "Subspace":
        """Column space."""
        return Subspace(self._p, self.nrows(), self._arr.T)

    def solve(self, b: ArrayLike) -> Optional[np.ndarray]:
        """One solution x of A x = b, or None when b is not in the image."""
        b = np.asarray(b, dtype=np.int64) % self._p
        if b.shape != (self.nrows(),):
            raise DimensionMismatchError(f"right-hand side of length {b.shape} for a {self.shape()} system")
        n = self.ncols()
        reduced, pivots = _rref(np.hstack([self._arr, b[:, None]]), self._p)
        if n in pivots:
            return None
        x = np.zeros(n, dtype=np.int64)
        for i, c in enumerate(pivots):
            x[c] = reduced[i, n]
        return x

    def to_numpy(self) -> np.ndarray:
        return self._arr.copy()

    def to_coo(self) -> ss.coo_matrix:
        return ss.coo_matrix(self._arr)

    def to_df(self) -> pd.DataFrame:
        """Non-zero entries as a table with columns row, col, value."""
        rows, cols = np.nonzero(self._arr)
        return pd.DataFrame({"row": rows, "col": cols, "value": self._arr[rows, cols]})

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self._p, "shape": list(self.shape()), "entries": self._arr.tolist()}

    def __repr__(self) -> str:
        return f"FpMatrix(p={self._p}, shape={self.shape()})"


class Subspace:
    """
    Subspace of F_p^n stored through the reduced row echelon form of a spanning set,
    so that two equal subspaces always carry the same basis.
    """

    def __init__(self, p: int, ambient_dim: int, vectors: ArrayLike):
        self._p = int(p)
        self._n = int(ambient_dim)
        arr = np.array(vectors, dtype=np.int64).reshape(-1, self._n)
        if arr.shape[0] == 0:
            self._basis = np.zeros((0, self._n), dtype=np.int64)
            self._pivots: Tuple[int, ...] = ()
        else:
            reduced, pivots = _rref(arr, self._p)
            self._basis = reduced[: len(pivots)]
            self._pivots = pivots
        self._basis.setflags(write=False)

    @classmethod
    def span(cls, p: int, vectors: Sequence[ArrayLike], ambient_dim: Optional[int] = None) -> "Subspace":
        vectors = [np.asarray(v, dtype=np.int64) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise ValueError("ambient_dim is required to span an empty set")
            ambient_dim = vectors[0].shape[0]
        if not vectors:
            return cls(p, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64))
        return cls(p, ambient_dim, np.vstack(vectors))

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(p, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64))

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(p, ambient_dim, np.eye(ambient_dim, dtype=np.int64))

    def prime(self) -> int:
        return self._p

    def ambient_dim(self) -> int:
        return self._n

    def dim(self) -> int:
        return self._basis.shape[0]

    def codim(self) -> int:
        return self._n - self.dim()

    def basis(self) -> np.ndarray:
        return self._basis.copy()

    def _check(self, other: "Subspace") -> None:
        if other._p != self._p or other._n != self._n:
            raise DimensionMismatchError(
                f"subspaces of F_{self._p}^{self._n} and F_{other._p}^{other._n} cannot be compared"
            )

    def contains(self, v: ArrayLike) -> bool:
        v = np.asarray(v, dtype=np.int64) % self._p
        if v.shape != (self._n,):
            raise DimensionMismatchError(f"vector of shape {v.shape} in a subspace of F_p^{self._n}")
        if self.dim() == 0:
            return not v.any()
        residual = (v - v[list(self._pivots)] @ self._basis) % self._p
        return not residual.any()

    def coordinates(self, v: ArrayLike) -> np.ndarray:
        """Coordinates of v in :py:meth:`basis`."""
        if not self.contains(v):
            raise ValueError("vector does not belong to the subspace")
        return np.asarray(v, dtype=np.int64)[list(self._pivots)] % self._p

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self._basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self._p == other._p
            and self._n == other._n
            and self._pivots == other._pivots
            and np.array_equal(self._basis, other._basis)
        )

    def __hash__(self) -> int:
        return hash((self._p, self._n, self._basis.tobytes()))

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self._p, self._n, np.vstack([self._basis, other._basis]))

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim() == 0 or other.dim() == 0:
            return Subspace.zero(self._p, self._n)
        # a U + b V = 0 <=> a U = -b V lies in both
        stacked = np.vstack([self._basis, other._basis])
        relations = FpMatrix(self._p, stacked.T).kernel_basis().basis()
        if relations.shape[0] == 0:
            return Subspace.zero(self._p, self._n)
        return Subspace(self._p, self._n, relations[:, : self.dim()] @ self._basis)

    def image_under(self, matrix: FpMatrix) -> "Subspace":
        if matrix.ncols() != self._n:
            raise DimensionMismatchError(f"cannot map F_p^{self._n} through a {matrix.shape()} matrix")
        if self.dim() == 0:
            return Subspace.zero(self._p, matrix.nrows())
        return Subspace(self._p, matrix.nrows(), (matrix.to_numpy() @ self._basis.T).T)

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self._p, "ambient_dim": self._n, "dim": self.dim(), "basis": self._basis.tolist()}

    def __repr__(self) -> str:
        return f"Subspace(p={self._p}, dim={self.dim()}, ambient_dim={self._n})"


def rref(matrix: FpMatrix) -> Tuple[FpMatrix, Tuple[int, ...]]:
    return matrix.rref()


def rank(matrix: FpMatrix) -> int:
    return matrix.rank()


def kernel_basis(matrix: FpMatrix) -> Subspace:
    return matrix.kernel_basis()


def image_basis(matrix: FpMatrix) -> Subspace:
    return matrix.image_basis()


def solve(matrix: FpMatrix, b: ArrayLike) -> Optional[np.ndarray]:
    return matrix.solve(b)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def subspace_contains(u: Subspace, v: ArrayLike) -> bool:
    return u.contains(v)


def subspace_codim(sub: Subspace, ambient: Subspace) -> int:
    """dim(ambient) - dim(sub); ``sub`` must lie in ``ambient``."""
    if not sub.is_subspace_of(ambient):
        raise DimensionMismatchError("first subspace is not contained in the second one")
    return ambient.dim() - sub.dim()
