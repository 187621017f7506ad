# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Point counts of the Fermat curve x^p + y^p = z^p over finite fields, Jacobi sums in Z[ζ_p]
and the mod-p behaviour of the zeta function.
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ

from . import config
from .errors import PointCountCapError, VerificationError
from .finite_field import FiniteField

log = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _phi(p: int) -> List[int]:
    """Φ_p = x^(p-1) + ... + x + 1, coefficients high to low."""
    return [ZZ(1)] * p


class CyclotomicInt:
    """
    Element of Z[ζ_p] = Z[x]/(Φ_p) with exact integer coordinates in the basis 1, x, ..., x^(p-2).
    """

    def __init__(self, p: int, coeffs: Sequence[int]):
        self._p = int(p)
        self._coeffs = self._reduce(self._p, coeffs)

    @staticmethod
    def _reduce(p: int, coeffs: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of Σ coeffs[k] x^k modulo Φ_p, for any number of coefficients."""
        dup = dup_strip([ZZ(int(c)) for c in reversed(coeffs)])
        rem = dup_rem(dup, _phi(p), ZZ)
        out = [0] * (p - 1)
        for k, c in enumerate(reversed(rem)):
            out[k] = int(c)
        return tuple(out)

    @classmethod
    def from_exponents(cls, p: int, counts: Sequence[int]) -> "CyclotomicInt":
        """Σ_k counts[k] ζ^k."""
        return cls(p, counts)

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInt":
        return cls(p, [n])

    @classmethod
    def zeta(cls, p: int) -> "CyclotomicInt":
        return cls(p, [0, 1])

    def prime(self) -> int:
        return self._p

    def coefficients(self) -> List[int]:
        return list(self._coeffs)

    def _dup(self) -> List[int]:
        return dup_strip([ZZ(c) for c in reversed(self._coeffs)])

    @classmethod
    def _from_dup(cls, p: int, dup: List[int]) -> "CyclotomicInt":
        return cls(p, [int(c) for c in reversed(dup)])

    def _coerce(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        if isinstance(other, CyclotomicInt):
            if other._p != self._p:
                raise ValueError(f"cannot combine elements of Z[ζ_{self._p}] and Z[ζ_{other._p}]")
            return other
        return CyclotomicInt.from_int(self._p, int(other))

    def __add__(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        return self._from_dup(self._p, dup_add(self._dup(), self._coerce(other)._dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        return self._from_dup(self._p, dup_sub(self._dup(), self._coerce(other)._dup(), ZZ))

    def __rsub__(self, other: int) -> "CyclotomicInt":
        return self._coerce(other) - self

    def __neg__(self) -> "CyclotomicInt":
        return self._from_dup(self._p, dup_neg(self._dup(), ZZ))

    def __mul__(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        return self._from_dup(self._p, dup_mul(self._dup(), self._coerce(other)._dup(), ZZ))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CyclotomicInt":
        if n < 0:
            raise ValueError("only non-negative powers are defined in Z[ζ_p]")
        result = CyclotomicInt.from_int(self._p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self._p, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self._p == other._p and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._p, self._coeffs))

    def galois(self, a: int) -> "CyclotomicInt":
        """σ_a: ζ -> ζ^a."""
        p = self._p
        if a % p == 0:
            raise ValueError("σ_a requires a unit mod p")
        counts = [0] * p
        for k, c in enumerate(self._coeffs):
            counts[(k * a) % p] += c
        return CyclotomicInt(p, counts)

    def conjugate(self) -> "CyclotomicInt":
        return self.galois(-1)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self._coeffs[0]

    def residue_mod_lambda(self) -> int:
        """Image in F_p under ζ -> 1, the reduction modulo the prime (1 - ζ) above p."""
        return sum(self._coeffs) % self._p

    def __repr__(self) -> str:
        return f"CyclotomicInt(p={self._p}, coeffs={list(self._coeffs)})"

    def __str__(self) -> str:
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self._coeffs) if c]
        return " + ".join(terms) if terms else "0"


# point counts


def _check_prime_to_field(p: int, fld: FiniteField) -> None:
    if fld.characteristic() == p:
        raise ValueError(f"the characteristic of F_{fld.order()} must differ from p={p}")


@dataclass(frozen=True)
class PointCount:
    p: int
    q: int
    affine: int
    at_infinity: int

    @property
    def total(self) -> int:
        return self.affine + self.at_infinity

    def orbit_decomposition(self) -> Optional[int]:
        """k with total = 3p + p^2 k, or None when no such k >= 0 exists."""
        rest = self.total - 3 * self.p
        if rest < 0 or rest % (self.p * self.p):
            return None
        return rest // (self.p * self.p)


def point_count_breakdown(p: int, fld: FiniteField, m: int = 1, cap: Optional[int] = None) -> PointCount:
    """
    Projective points of x^p + y^p = z^p over F_{q^m}: affine solutions of x^p + y^p = 1
    by visiting every pair (x, y), and points [x : 1 : 0] with x^p = -1.
    """
    _check_prime_to_field(p, fld)
    ext = fld.extension(m)
    q = ext.order()
    cap = config.point_count_cap() if cap is None else cap
    if q * q > cap:
        raise PointCountCapError(f"counting over F_{q} visits {q * q} pairs, above the cap of {cap}")

    elements = ext.elements()
    pth = ext.power(elements, p)
    one = 1
    affine = 0
    for x in elements:
        affine += int(np.count_nonzero(ext.add(pth[x], pth) == one))
    minus_one = int(ext.neg(one))
    at_infinity = int(np.count_nonzero(pth == minus_one))

    log.debug("counted F_%d points of the degree %d Fermat curve: %d pairs visited", q, p, q * q)
    result = PointCount(p, q, affine, at_infinity)
    if (q - 1) % p == 0 and result.total % p:
        raise VerificationError("N_m ≡ 0 mod p", f"p={p}, q^m={q}, N={result.total}")
    return result


def count_points(p: int, fld: FiniteField, m: int = 1, cap: Optional[int] = None) -> int:
    """N_m = #X(F_{q^m})."""
    return point_count_breakdown(p, fld, m, cap).total


# Jacobi sums


def character_pairs(p: int) -> List[Tuple[int, int]]:
    """S = {(i, j) : 1 <= i, j <= p - 1, i + j ≢ 0 mod p}."""
    return [(i, j) for i, j in itertools.product(range(1, p), repeat=2) if (i + j) % p]


def _check_character_field(p: int, fld: FiniteField) -> None:
    _check_prime_to_field(p, fld)
    if (fld.order() - 1) % p:
        raise ValueError(f"characters of order {p} need q ≡ 1 mod p, found q={fld.order()}")


def jacobi_sum(p: int, fld: FiniteField, i: int, j: int) -> CyclotomicInt:
    """J(χ^i, χ^j) = Σ_{a + b = 1} χ^i(a) χ^j(b) with χ(g^k) = ζ^k."""
    _check_character_field(p, fld)
    if not (1 <= i <= p - 1 and 1 <= j <= p - 1 and (i + j) % p):
        raise ValueError(f"(i, j) = ({i}, {j}) is not in S at p={p}")
    logs = fld.log_table()
    elements = fld.elements()
    a = elements[(elements != 0) & (elements != 1)]
    b = fld.sub(1, a)
    exponents = (i * logs[a] + j * logs[b]) % p
    counts = np.bincount(exponents, minlength=p)
    return CyclotomicInt.from_exponents(p, counts.tolist())


def jacobi_matrix(p: int, fld: FiniteField) -> Dict[Tuple[int, int], CyclotomicInt]:
    return {(i, j): jacobi_sum(p, fld, i, j) for i, j in character_pairs(p)}


def jacobi_total(p: int, fld: FiniteField) -> CyclotomicInt:
    total = CyclotomicInt.from_int(p, 0)
    for value in jacobi_matrix(p, fld).values():
        total = total + value
    return total


@dataclass(frozen=True)
class IdentityCheck:
    p: int
    q: int
    holds: bool
    rational: bool
    predicted: Optional[int]
    count: int

    @property
    def discrepancy(self) -> Optional[int]:
        return None if self.predicted is None else self.predicted - self.count

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "q": self.q,
            "holds": self.holds,
            "rational": self.rational,
            "predicted": self.predicted,
            "count": self.count,
            "discrepancy": self.discrepancy,
        }


def count_identity_check(p: int, fld: FiniteField) -> IdentityCheck:
    """N_1 = q + 1 + Σ_S J_{i,j}, with the sum checked to be a rational integer."""
    q = fld.order()
    total = jacobi_total(p, fld) + (q + 1)
    count = count_points(p, fld, 1)
    rational = total.is_rational()
    predicted = total.rational_value() if rational else None
    return IdentityCheck(p, q, rational and predicted == count, rational, predicted, count)


def predicted_count(p: int, fld: FiniteField, m: int) -> int:
    """q^m + 1 - Σ_S (-J_{i,j})^m: the count predicted by Frobenius eigenvalues -J_{i,j}."""
    total = CyclotomicInt.from_int(p, fld.order() ** m + 1)
    for value in jacobi_matrix(p, fld).values():
        total = total - (-value) ** m
    if not total.is_rational():
        raise VerificationError("Σ_S (-J)^m is rational", f"p={p}, q={fld.order()}, m={m}")
    return total.rational_value()


def _poly_mod_p(factors: Iterable[Tuple[int, int]], p: int) -> List[int]:
    """Π (c0 + c1 T) mod p, coefficients low to high."""
    out = np.array([1], dtype=np.int64)
    for c0, c1 in factors:
        out = np.convolve(out, np.array([c0, c1], dtype=np.int64)) % p
    return out.tolist()


@dataclass(frozen=True)
class LPolynomialResidue:
    """
    Reductions modulo (1 - ζ) of Π_S (1 + J T) and Π_S (1 - J T) next to (1 - T)^(2g) mod p.
    """

    p: int
    plus_j: List[int]
    minus_j: List[int]
    expected: List[int]

    @property
    def plus_matches(self) -> bool:
        return self.plus_j == self.expected

    @property
    def minus_matches(self) -> bool:
        return self.minus_j == self.expected

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "prod_1_plus_JT": self.plus_j,
            "prod_1_minus_JT": self.minus_j,
            "one_minus_T_2g": self.expected,
            "plus_matches": self.plus_matches,
            "minus_matches": self.minus_matches,
        }


def l_polynomial_residue(p: int, fld: FiniteField) -> LPolynomialResidue:
    residues = [v.residue_mod_lambda() for v in jacobi_matrix(p, fld).values()]
    plus = _poly_mod_p(((1, r) for r in residues), p)
    minus = _poly_mod_p(((1, -r) for r in residues), p)
    expected = _poly_mod_p(((1, -1) for _ in residues), p)
    return LPolynomialResidue(p, plus, minus, expected)


# zeta function mod p


def genus(p: int) -> int:
    return (p - 1) * (p - 2) // 2


@dataclass
class CountReport:
    p: int
    ell: int
    f: int
    rows: List[Tuple[int, int, int]]
    genus: int
    series_lhs: List[int] = field(default_factory=list)
    series_rhs: List[int] = field(default_factory=list)
    orbit_k: List[Optional[int]] = field(default_factory=list)

    @property
    def series_holds(self) -> bool:
        return self.series_lhs == self.series_rhs

    @property
    def vanishes(self) -> bool:
        return all(r == 0 for _, _, r in self.rows)

    @property
    def orbits_hold(self) -> bool:
        return all(k is not None for k in self.orbit_k)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "ell": self.ell,
            "f": self.f,
            "genus": self.genus,
            "counts": [{"m": m, "N": n, "N_mod_p": r} for m, n, r in self.rows],
            "series_lhs": self.series_lhs,
            "series_rhs": self.series_rhs,
            "series_holds": self.series_holds,
            "orbit_k": self.orbit_k,
        }

    def to_df(self) -> pd.DataFrame:
        df = pd.DataFrame(self.rows, columns=["m", "N", "N_mod_p"])
        df["orbit_k"] = self.orbit_k
        return df


def zeta_mod_p_report(p: int, fld: FiniteField, m_max: int, cap: Optional[int] = None) -> CountReport:
    """
    N_m mod p for m <= m_max next to the coefficients of d/dT log (1 - T)^(2g-2) mod p,
    which is -(2g - 2) Σ T^(m-1).
    """
    g = genus(p)
    rows = []
    orbit_k = []
    for m in range(1, m_max + 1):
        count = point_count_breakdown(p, fld, m, cap)
        rows.append((m, count.total, count.total % p))
        orbit_k.append(count.orbit_decomposition())
    lhs = [r for _, _, r in rows]
    rhs = [(-(2 * g - 2)) % p] * m_max
    return CountReport(p, fld.characteristic(), fld.degree(), rows, g, lhs, rhs, orbit_k)
