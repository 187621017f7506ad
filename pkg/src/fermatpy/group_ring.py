# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Truncated group rings R[ε]/(ε^p - 1) and R[ε0, ε1]/(ε0^p - 1, ε1^p - 1).

An element is stored as an ``int64`` array of shape ``(p,) * nvars + (ring.degree(),)``
together with a basis tag: ``"eps"`` (coefficients of ε^i) or ``"y"`` (coefficients of
y^k with y = ε - 1). Both bases describe the same element; arithmetic between
elements in different bases converts the right operand first.
Elements over a :py:class:`~fermatpy.scalars.LiftRing` only exist in the y-basis.
"""

from typing import Dict, Iterable, Optional, Tuple, Type, TypeVar, Union

import numpy as np
import pandas as pd
import scipy.signal

from .errors import DescentError, DimensionMismatchError, NotAUnitError, VerificationError
from .scalars import LiftRing, PrimeField, ScalarRing, prime_field

_BASES = ("eps", "y")

EltT = TypeVar("EltT", bound="_GroupRingElt")
Operand = Union["_GroupRingElt", int]


def _take(arr: np.ndarray, axis: int, sl: slice) -> np.ndarray:
    index = [slice(None)] * arr.ndim
    index[axis] = sl
    return arr[tuple(index)]


def _change_basis(arr: np.ndarray, nvars: int, matrix: np.ndarray) -> np.ndarray:
    for axis in range(nvars):
        arr = np.moveaxis(np.tensordot(matrix, arr, axes=([1], [axis])), 0, axis)
    return arr


class _GroupRingElt:
    nvars = 0

    def __init__(self, ring: ScalarRing, coeffs: np.ndarray, basis: str = "y"):
        if basis not in _BASES:
            raise ValueError(f"basis must be one of {_BASES}, found {basis!r}")
        p = ring.prime()
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim == self.nvars:
            coeffs = ring.embed(coeffs[..., None])
        expected = (p,) * self.nvars + (ring.degree(),)
        if coeffs.shape != expected:
            raise DimensionMismatchError(
                f"{type(self).__name__} expects coefficients of shape {expected}, found {coeffs.shape}"
            )
        if basis == "eps" and ring.is_lift():
            raise DimensionMismatchError("elements over a mod-p^2 ring only exist in the y-basis")
        self._ring = ring
        self._basis = basis
        self._coeffs = coeffs % ring.modulus()
        self._coeffs.setflags(write=False)

    # constructors

    @classmethod
    def zero(cls: Type[EltT], ring: ScalarRing, basis: str = "y") -> EltT:
        p = ring.prime()
        return cls(ring, np.zeros((p,) * cls.nvars + (ring.degree(),), dtype=np.int64), basis)

    @classmethod
    def from_scalar(cls: Type[EltT], ring: ScalarRing, s: Union[int, np.ndarray], basis: str = "y") -> EltT:
        """The constant element s (a Python int or a scalar array of ``ring``)."""
        p = ring.prime()
        coeffs = np.zeros((p,) * cls.nvars + (ring.degree(),), dtype=np.int64)
        value = ring.scalar(s) if isinstance(s, (int, np.integer)) else ring.embed(np.asarray(s).reshape(-1))
        # 1 = ε^0 = y^0, so the constant sits at the origin in both bases
        coeffs[(0,) * cls.nvars] = value
        return cls(ring, coeffs, basis)

    @classmethod
    def one(cls: Type[EltT], ring: ScalarRing, basis: str = "y") -> EltT:
        return cls.from_scalar(ring, 1, basis)

    @classmethod
    def from_monomials(
        cls: Type[EltT], ring: ScalarRing, terms: Dict[Tuple[int, ...], int], basis: str = "y"
    ) -> EltT:
        """Element with integer coefficients ``terms[exponents]`` on the monomials of ``basis``."""
        p = ring.prime()
        coeffs = np.zeros((p,) * cls.nvars + (ring.degree(),), dtype=np.int64)
        for exps, value in terms.items():
            exps = (exps,) if isinstance(exps, int) else tuple(exps)
            if len(exps) != cls.nvars or any(not 0 <= e < p for e in exps):
                raise DimensionMismatchError(f"invalid exponent {exps} for {cls.__name__} at p={p}")
            coeffs[exps + (0,)] += int(value)
        return cls(ring, coeffs, basis)

    # accessors

    def ring(self) -> ScalarRing:
        return self._ring

    def basis(self) -> str:
        return self._basis

    def prime(self) -> int:
        return self._ring.prime()

    def coefficients(self) -> np.ndarray:
        return self._coeffs.copy()

    def to_numpy(self) -> np.ndarray:
        """Coefficient grid; the scalar axis is dropped for elements over F_p or Z/p^2."""
        if self._ring.degree() == 1:
            return self._coeffs[..., 0].copy()
        return self._coeffs.copy()

    def __getitem__(self, exps: Union[int, Tuple[int, ...]]) -> np.ndarray:
        exps = (exps,) if isinstance(exps, int) else tuple(exps)
        return self._coeffs[exps].copy()

    def coefficient(self, *exps: int) -> int:
        """Integer coefficient of a monomial of an element over a ring of degree one."""
        if self._ring.degree() != 1:
            raise DimensionMismatchError("coefficient() requires scalars of degree one, use [] instead")
        return int(self._coeffs[tuple(exps) + (0,)])

    def constant_term(self) -> np.ndarray:
        """Value at ε = 1, i.e. the y^0 coefficient."""
        return self.to_y()._coeffs[(0,) * self.nvars].copy()

    def augmentation(self) -> np.ndarray:
        return self.constant_term()

    def _new(self: EltT, coeffs: np.ndarray, basis: Optional[str] = None, ring: Optional[ScalarRing] = None) -> EltT:
        return type(self)(self._ring if ring is None else ring, coeffs, self._basis if basis is None else basis)

    # basis changes

    def to_basis(self: EltT, basis: str) -> EltT:
        if basis == self._basis:
            return self
        if basis not in _BASES:
            raise ValueError(f"basis must be one of {_BASES}, found {basis!r}")
        if self._ring.is_lift():
            raise DimensionMismatchError("elements over a mod-p^2 ring only exist in the y-basis")
        ctx = self._ring.ctx
        matrix = ctx.eps_to_y if basis == "y" else ctx.y_to_eps
        return self._new(_change_basis(self._coeffs, self.nvars, matrix), basis)

    def to_y(self: EltT) -> EltT:
        return self.to_basis("y")

    def to_eps(self: EltT) -> EltT:
        return self.to_basis("eps")

    # ring changes

    def lift(self: EltT) -> EltT:
        """The lift to mod-p^2 coefficients whose residues are the same integers in [0, p)."""
        if self._ring.is_lift():
            raise DimensionMismatchError("element already has mod-p^2 coefficients")
        return self._new(self.to_y()._coeffs, "y", self._ring.lift())

    def reduce_mod_p(self: EltT) -> EltT:
        ring = self._ring
        if not isinstance(ring, LiftRing):
            raise DimensionMismatchError("only elements over a mod-p^2 ring can be reduced mod p")
        return self._new(ring.reduce_mod_p(self._coeffs), "y", ring.base())

    def divide_by_p(self: EltT) -> EltT:
        ring = self._ring
        if not isinstance(ring, LiftRing):
            raise DimensionMismatchError("only elements over a mod-p^2 ring can be divided by p")
        return self._new(ring.divide_by_p(self._coeffs), "y", ring.base())

    def descend(self: EltT) -> EltT:
        """The same element over F_p; raises DescentError if a coefficient is not in F_p."""
        ring = self._ring
        if isinstance(ring, PrimeField):
            return self
        if ring.is_lift():
            raise DimensionMismatchError("cannot descend an element with mod-p^2 coefficients")
        if self._coeffs[..., 1:].any():
            raise DescentError(f"{type(self).__name__} has coefficients outside F_{ring.prime()}")
        return self._new(self._coeffs[..., :1], ring=prime_field(ring.prime()))

    def embed(self: EltT, ring: ScalarRing) -> EltT:
        """The same element over a ring containing this one's scalars."""
        if ring == self._ring:
            return self
        if self._ring.degree() != 1 or ring.prime() != self.prime() or ring.is_lift() != self._ring.is_lift():
            raise DimensionMismatchError(f"cannot embed {self._ring!r} into {ring!r}")
        return self._new(ring.embed(self._coeffs), ring=ring)

    # arithmetic

    def _coerce(self: EltT, other: Operand) -> EltT:
        if isinstance(other, (int, np.integer)):
            return type(self).from_scalar(self._ring, int(other), self._basis)
        if type(other) is not type(self):
            raise DimensionMismatchError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other._ring != self._ring:
            if other._ring.degree() == 1 and not other._ring.is_lift() and not self._ring.is_lift():
                other = other.embed(self._ring)
            elif self._ring.degree() == 1 and not self._ring.is_lift() and not other._ring.is_lift():
                raise DimensionMismatchError("promote the left operand first: call .embed(ring)")
            else:
                raise DimensionMismatchError(f"cannot combine elements over {self._ring!r} and {other._ring!r}")
        return other.to_basis(self._basis)  # type: ignore[return-value]

    def __add__(self: EltT, other: Operand) -> EltT:
        o = self._coerce(other)
        return self._new(self._coeffs + o._coeffs)

    __radd__ = __add__

    def __sub__(self: EltT, other: Operand) -> EltT:
        o = self._coerce(other)
        return self._new(self._coeffs - o._coeffs)

    def __rsub__(self: EltT, other: Operand) -> EltT:
        o = self._coerce(other)
        return self._new(o._coeffs - self._coeffs)

    def __neg__(self: EltT) -> EltT:
        return self._new(-self._coeffs)

    def scale(self: EltT, s: np.ndarray) -> EltT:
        """Multiply by a scalar of the coefficient ring."""
        s = np.asarray(s, dtype=np.int64).reshape(-1)
        return self._new(self._ring.mul(self._coeffs, self._ring.embed(s)))

    def __mul__(self: EltT, other: Operand) -> EltT:
        if isinstance(other, (int, np.integer)):
            return self._new(self._coeffs * (int(other) % self._ring.modulus()))
        o = self._coerce(other)
        return self._new(_multiply(self._ring, self._basis, self.nvars, self._coeffs, o._coeffs))

    def __rmul__(self: EltT, other: Operand) -> EltT:
        return self.__mul__(other)

    def __pow__(self: EltT, n: int) -> EltT:
        if n < 0:
            return invert_unit(self) ** (-n)
        result = type(self).one(self._ring, self._basis)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            other = type(self).from_scalar(self._ring, int(other), self._basis)
        if not isinstance(other, _GroupRingElt) or type(other) is not type(self):
            return NotImplemented
        if other._ring != self._ring:
            return False
        return bool(np.array_equal(self._coeffs, other.to_basis(self._basis)._coeffs))

    def __hash__(self) -> int:
        y = self.to_y() if not self._ring.is_lift() else self
        return hash((type(self).__name__, self._ring, y._coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self._coeffs.any()

    def is_one(self) -> bool:
        return self == 1

    # export

    def to_df(self) -> pd.DataFrame:
        """Non-zero coefficients, one row per (monomial, power of the root)."""
        idx = np.nonzero(self._coeffs)
        columns = {f"deg{k}": idx[k] for k in range(self.nvars)}
        columns["root_power"] = idx[-1]
        columns["coefficient"] = self._coeffs[idx]
        return pd.DataFrame(columns)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.prime(),
            "basis": self._basis,
            "ring": repr(self._ring),
            "coefficients": self.to_numpy().tolist(),
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}(p={self.prime()}, ring={self._ring!r}, basis={self._basis!r})"


def _multiply(ring: ScalarRing, basis: str, nvars: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    p = ring.prime()
    full = scipy.signal.convolve(a, b, mode="full", method="direct")
    for axis in range(nvars):
        low = _take(full, axis, slice(0, p))
        if basis == "eps":
            # ε^(p+k) = ε^k
            low = low.copy()
            _take(low, axis, slice(0, p - 1))[...] += _take(full, axis, slice(p, 2 * p - 1))
        full = low
    return ring.reduce(full)


class Ring0Elt(_GroupRingElt):
    """Element of Λ0 = R[ε]/(ε^p - 1)."""

    nvars = 1

    @classmethod
    def eps(cls, ring: ScalarRing) -> "Ring0Elt":
        return cls.from_monomials(ring, {(1,): 1}, "eps")

    @classmethod
    def y(cls, ring: ScalarRing) -> "Ring0Elt":
        return cls.from_monomials(ring, {(1,): 1}, "y")


class Ring1Elt(_GroupRingElt):
    """Element of Λ1 = R[ε0, ε1]/(ε0^p - 1, ε1^p - 1)."""

    nvars = 2

    @classmethod
    def eps(cls, ring: ScalarRing, var: int) -> "Ring1Elt":
        exps = (1, 0) if var == 0 else (0, 1)
        return cls.from_monomials(ring, {exps: 1}, "eps")

    @classmethod
    def y(cls, ring: ScalarRing, var: int) -> "Ring1Elt":
        exps = (1, 0) if var == 0 else (0, 1)
        return cls.from_monomials(ring, {exps: 1}, "y")

    def swap(self) -> "Ring1Elt":
        return swap(self)

    def twist(self, a: int) -> "Ring1Elt":
        return twist(a, self)


class DifferentialElt:
    """The Kähler differential g dε of Λ0, stored through g in the ε-basis."""

    def __init__(self, g: Ring0Elt):
        if not isinstance(g, Ring0Elt):
            raise DimensionMismatchError("differentials are only defined on Λ0")
        self._g = g.to_eps()

    def coefficient(self) -> Ring0Elt:
        return self._g

    def ring(self) -> ScalarRing:
        return self._g.ring()

    def __add__(self, other: "DifferentialElt") -> "DifferentialElt":
        return DifferentialElt(self._g + other._g)

    def __sub__(self, other: "DifferentialElt") -> "DifferentialElt":
        return DifferentialElt(self._g - other._g)

    def __neg__(self) -> "DifferentialElt":
        return DifferentialElt(-self._g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialElt):
            return NotImplemented
        return self._g == other._g

    def __hash__(self) -> int:
        return hash(self._g)

    def is_multiple_of_dlog_eps(self) -> bool:
        """True iff the form is a constant times dε/ε = ε^(p-1) dε."""
        p = self._g.prime()
        return not self._g.coefficients()[: p - 1].any()

    def __repr__(self) -> str:
        return f"DifferentialElt({self._g!r})"


# unit group helpers


def _require_augmentation(u: _GroupRingElt, value: int) -> None:
    ring = u.ring()
    if not ring.equal(u.constant_term(), ring.scalar(value)):
        raise NotAUnitError(f"expected an element with augmentation {value}")


def invert_unit(u: EltT) -> EltT:
    """Inverse of a unit: u0^(-1) (1 - n + n^2 - ...) where u = u0 (1 + n) with n nilpotent."""
    ring = u.ring()
    basis = u.basis()
    y = u.to_y()
    u0 = y.constant_term()
    try:
        inv0 = ring.inverse(u0)
    except NotAUnitError as e:
        raise NotAUnitError(f"{type(u).__name__} with augmentation {ring.format(u0)} is not a unit") from e
    n = y.scale(inv0) - 1
    acc = type(u).one(ring)
    term = acc
    for _ in range(u.nvars * (u.prime() - 1)):
        term = -(term * n)
        if term.is_zero():
            break
        acc = acc + term
    inv = acc.scale(inv0)
    if not (inv * y).is_one():
        raise VerificationError("u * invert_unit(u) == 1")
    return inv.to_basis(basis)


def _check_exp_argument(f: _GroupRingElt) -> None:
    if f.ring().is_lift():
        raise DimensionMismatchError("exponentials take arguments with mod-p coefficients")
    _require_augmentation(f, 0)


def exp0(f: EltT) -> EltT:
    """Truncated exponential sum_{i<p} f^i / i!; the argument must lie in the augmentation ideal."""
    _check_exp_argument(f)
    ctx = f.ring().ctx
    y = f.to_y()
    acc = type(f).one(f.ring())
    power = acc
    for i in range(1, ctx.p):
        power = power * y
        if power.is_zero():
            break
        acc = acc + power * int(ctx.inv(int(ctx.factorials[i])))
    return acc.to_basis(f.basis())


def _lifted_powers(f: EltT, lift: Optional[EltT], top: int) -> Iterable[EltT]:
    f_y = f.to_y()
    f_tilde = f_y.lift() if lift is None else lift
    if not f_tilde.ring().is_lift() or f_tilde.reduce_mod_p() != f_y:
        raise ValueError("lift must be a mod-p^2 element reducing to the argument")
    power = type(f).one(f_tilde.ring())
    yield power
    for _ in range(top):
        power = power * f_tilde
        yield power


def _divide_power(power: EltT, n: int) -> EltT:
    """f^n / n! mod p from a mod-p^2 power f~^n, n <= 2p - 2."""
    ctx = power.ring().ctx
    p = ctx.p
    if n < p:
        return power.reduce_mod_p() * ctx.inv(int(ctx.factorials[n]))
    try:
        quotient = power.divide_by_p()
    except DescentError as e:
        raise DescentError(f"f^{n} is not divisible by p although f lies in the augmentation ideal") from e
    # n! / p mod p
    reduced_factorial = 1
    for k in range(1, n + 1):
        if k != p:
            reduced_factorial = reduced_factorial * k % p
    return quotient * ctx.inv(reduced_factorial)


def divided_power(f: EltT, n: int, lift: Optional[EltT] = None) -> EltT:
    """γ_n(f) = f^n / n! for 0 <= n <= 2p - 2, computed through a mod-p^2 lift of f."""
    p = f.prime()
    if not 0 <= n <= 2 * p - 2:
        raise ValueError(f"divided powers are available for 0 <= n <= {2 * p - 2}, found {n}")
    _check_exp_argument(f)
    power = None
    for power in _lifted_powers(f, lift, n):
        pass
    assert power is not None
    return _divide_power(power, n).to_basis(f.basis())


def exp1(f: EltT, lift: Optional[EltT] = None) -> EltT:
    """
    Exponential through degree 2p - 2. The terms of degree >= p are computed as
    (f~^n / p) / (n! / p) mod p for a mod-p^2 lift f~, which does not depend on the lift.
    """
    _check_exp_argument(f)
    acc = type(f).zero(f.ring())
    for n, power in enumerate(_lifted_powers(f, lift, 2 * f.prime() - 2)):
        acc = acc + _divide_power(power, n)
    return acc.to_basis(f.basis())


def derivative(u: Ring0Elt) -> Ring0Elt:
    """d/dε in the ε-basis, d/dy in the y-basis (the same operator since dy = dε)."""
    c = u.coefficients()
    k = np.arange(u.prime(), dtype=np.int64).reshape(-1, 1)
    out = np.zeros_like(c)
    out[:-1] = (k[1:] * c[1:]) % u.ring().modulus()
    # for the ε-basis ε^p = 1 contributes p ε^(p-1) = 0
    return u._new(out)


def d(u: Ring0Elt) -> DifferentialElt:
    return DifferentialElt(derivative(u))


def dlog(u: Ring0Elt) -> DifferentialElt:
    """du / u for a unit u of Λ0."""
    return DifferentialElt(derivative(u) * invert_unit(u))


def norm(u: EltT) -> EltT:
    """N_u = 1 + u + ... + u^(p-1)."""
    acc = type(u).zero(u.ring(), u.basis())
    power = type(u).one(u.ring(), u.basis())
    for _ in range(u.prime()):
        acc = acc + power
        power = power * u
    return acc


def ideal_power_degree(u: _GroupRingElt) -> int:
    """
    Largest k such that u lies in (y0, y1)^k, i.e. the minimal total degree of a non-zero
    y-monomial. The zero element returns nvars * (p - 1) + 1.
    """
    y = u.to_y() if not u.ring().is_lift() else u
    nonzero = y.coefficients().any(axis=-1)
    if not nonzero.any():
        return u.nvars * (u.prime() - 1) + 1
    return int(np.sum(np.nonzero(nonzero), axis=0).min())


def swap(u: Ring1Elt) -> Ring1Elt:
    """ε0 <-> ε1."""
    return u._new(np.swapaxes(u.coefficients(), 0, 1))


def twist(a: int, u: EltT) -> EltT:
    """The automorphism ε_i -> ε_i^a, a a unit mod p."""
    p = u.prime()
    if a % p == 0:
        raise ValueError("twist requires a unit mod p")
    e = u.to_eps()
    idx = (np.arange(p) * a) % p
    out = np.zeros_like(e.coefficients())
    if u.nvars == 1:
        out[idx] = e.coefficients()
    else:
        out[np.ix_(idx, idx)] = e.coefficients()
    return e._new(out).to_basis(u.basis())


def filtration_component(u: Ring1Elt, k: int) -> Ring1Elt:
    """Part of u spanned by y0^i y1^j with min(i, j) = k."""
    y = u.to_y() if not u.ring().is_lift() else u
    p = u.prime()
    i, j = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    mask = (np.minimum(i, j) == k)[..., None]
    return y._new(np.where(mask, y.coefficients(), 0))


def _embed_axis(u: Ring0Elt, axis: int) -> Ring1Elt:
    y = u.to_y() if not u.ring().is_lift() else u
    p = u.prime()
    out = np.zeros((p, p, u.ring().degree()), dtype=np.int64)
    if axis == 0:
        out[:, 0] = y.coefficients()
    else:
        out[0, :] = y.coefficients()
    return Ring1Elt(u.ring(), out, "y")


def at_eps0(u: Ring0Elt) -> Ring1Elt:
    """ε -> ε0."""
    return _embed_axis(u, 0)


def at_eps1(u: Ring0Elt) -> Ring1Elt:
    """ε -> ε1."""
    return _embed_axis(u, 1)


def at_eps01(u: Ring0Elt) -> Ring1Elt:
    """ε -> ε0 ε1."""
    e = u.to_eps()
    p = u.prime()
    out = np.zeros((p, p, u.ring().degree()), dtype=np.int64)
    out[np.arange(p), np.arange(p)] = e.coefficients()
    return Ring1Elt(u.ring(), out, "eps")
