# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Action of Q = Gal(L/K) on the relative homology of the Fermat curve.

An element q of Q is addressed by its coordinate vector (c0, ..., cr), r = (p - 1) / 2,
and acts on Λ1 by multiplication by the unit B_q. B_q is computed through the
Artin-Schreier ring F_p[t]/(t^p - t + c) and descended to F_p once, at the end.
"""

import functools
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DescentError, DimensionMismatchError, VerificationError
from .group_ring import (
    DifferentialElt,
    Ring0Elt,
    Ring1Elt,
    at_eps0,
    at_eps1,
    at_eps01,
    dlog,
    exp0,
    exp1,
    ideal_power_degree,
    invert_unit,
    norm,
    swap,
    twist,
)
from .linalg import FpMatrix, Subspace
from .render import to_xy_string
from .scalars import PrimeContext, ScalarRing, as_ring_new, context, prime_field

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CVector:
    """Coordinates (c0, ..., cr) of an element of Q ≅ (Z/p)^(r+1); τ_j is the j-th standard basis vector."""

    p: int
    c: Tuple[int, ...]

    def __post_init__(self) -> None:
        ctx = context(self.p)
        c = tuple(int(v) % self.p for v in self.c)
        if len(c) != ctx.r + 1:
            raise DimensionMismatchError(f"a c-vector at p={self.p} has {ctx.r + 1} entries, found {len(c)}")
        object.__setattr__(self, "c", c)

    @classmethod
    def zero(cls, p: int) -> "CVector":
        return cls(p, (0,) * (context(p).r + 1))

    @classmethod
    def tau(cls, p: int, j: int) -> "CVector":
        r = context(p).r
        if not 0 <= j <= r:
            raise ValueError(f"τ_j is defined for 0 <= j <= {r}, found {j}")
        return cls(p, tuple(int(k == j) for k in range(r + 1)))

    @classmethod
    def parse(cls, p: int, text: str) -> "CVector":
        """Parse ``"c0,c1,...,cr"``."""
        try:
            values = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"invalid c-vector {text!r}: expected comma-separated integers") from None
        return cls(p, values)

    @classmethod
    def all(cls, p: int) -> Iterator["CVector"]:
        r = context(p).r
        for c in itertools.product(range(p), repeat=r + 1):
            yield cls(p, c)

    @classmethod
    def random(cls, p: int, rng: np.random.Generator) -> "CVector":
        return cls(p, tuple(int(v) for v in rng.integers(0, p, size=context(p).r + 1)))

    def context(self) -> PrimeContext:
        return context(self.p)

    def rank(self) -> int:
        return len(self.c)

    def _check(self, other: "CVector") -> None:
        if other.p != self.p:
            raise DimensionMismatchError(f"cannot combine c-vectors at p={self.p} and p={other.p}")

    def __add__(self, other: "CVector") -> "CVector":
        self._check(other)
        return CVector(self.p, tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: "CVector") -> "CVector":
        self._check(other)
        return CVector(self.p, tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self) -> "CVector":
        return CVector(self.p, tuple(-a for a in self.c))

    def __mul__(self, k: int) -> "CVector":
        return CVector(self.p, tuple(k * a for a in self.c))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.c)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.c)


@dataclass(frozen=True)
class ExtendedC:
    """(c0, c1, ..., c_{p-1}) with c_i = c_{p-i} - i c0 for i > r, and c = c1 + ... + c_{p-1}."""

    p: int
    values: Tuple[int, ...]
    c_sum: int

    @property
    def c0(self) -> int:
        return self.values[0]

    def __getitem__(self, i: int) -> int:
        return self.values[i]


@dataclass(frozen=True)
class GammaData:
    q: CVector
    ring: ScalarRing
    root: np.ndarray = field(compare=False)
    f_coeffs: np.ndarray = field(compare=False)
    gamma: Ring0Elt = field(compare=False)


@dataclass(frozen=True)
class BUnit:
    """The unit B_q of Λ1 over F_p by which q acts on homology."""

    q: CVector
    element: Ring1Elt = field(compare=False)

    def minus_one(self) -> Ring1Elt:
        return self.element - 1

    def to_string(self, style: str = "factored") -> str:
        return to_xy_string(self.element, style)

    def __mul__(self, other: "BUnit") -> "BUnit":
        return BUnit(self.q + other.q, self.element * other.element)

    def __pow__(self, n: int) -> "BUnit":
        return BUnit(self.q * n, self.element**n)

    def to_dict(self) -> Dict[str, object]:
        p = self.q.p
        out: Dict[str, object] = {
            "p": p,
            "c_vector": list(self.q.c),
            "B": self.element.to_numpy().tolist(),
            "norm": norm(self.element).to_numpy().tolist(),
            "alpha": alpha_coefficient(self.q) if p >= 5 else None,
        }
        return out


def tau(p: int, j: int) -> CVector:
    """τ_j for 0 <= j <= p - 1, using τ_j = τ_{p-j} for j > r."""
    if not 0 <= j < p:
        raise ValueError(f"τ_j is defined for 0 <= j <= {p - 1}, found {j}")
    return CVector.tau(p, fold_index(p, j))


def extend_c(q: CVector) -> ExtendedC:
    p = q.p
    r = q.rank() - 1
    values = list(q.c) + [0] * (p - 1 - r)
    for i in range(r + 1, p):
        values[i] = (values[p - i] - i * values[0]) % p
    return ExtendedC(p, tuple(values), sum(values[1:]) % p)


@functools.lru_cache(maxsize=1024)
def gamma_poly(q: CVector, root_shift: int = 0) -> GammaData:
    """
    γ(ε) = Σ_{i≥1} (c_i + c - F)/i ε^i - Σ_{i≥1} c_i/i where F is the root t of
    X^p - X + c (or 0 when c = 0). ``root_shift`` replaces F with F + root_shift,
    which is again a root.
    """
    ctx = q.context()
    p = ctx.p
    ext = extend_c(q)
    ring, root = as_ring_new(ctx, ext.c_sum)
    if root_shift % p:
        root = ring.add(root, ring.scalar(root_shift))
    f = np.zeros((p, ring.degree()), dtype=np.int64)
    for i in range(1, p):
        num = ring.add(ring.scalar(ext[i] + ext.c_sum), ring.neg(root))
        f[i] = (num * ctx.inv(i)) % p
    f[0] = (-f[1:].sum(axis=0)) % p
    f.setflags(write=False)
    root.setflags(write=False)
    return GammaData(q, ring, root, f, Ring0Elt(ring, f, "eps"))


def big_gamma(q: CVector) -> Ring0Elt:
    """Γ_q = E0(γ(ε)); its coefficients sum to 1."""
    return exp0(gamma_poly(q).gamma)


def dlog_target(q: CVector) -> DifferentialElt:
    """Σ_{i≥1} c_i ε^i dlog ε = Σ c_i ε^(i-1) dε, which dlog Γ_q matches up to a multiple of dlog ε."""
    data = gamma_poly(q)
    ext = extend_c(q)
    terms = {(i - 1,): ext[i] for i in range(1, q.p)}
    return DifferentialElt(Ring0Elt.from_monomials(data.ring, terms, "eps"))


def dlog_defect(q: CVector) -> DifferentialElt:
    """dlog Γ_q minus :py:func:`dlog_target`; supported on the ε^(p-1) dε line."""
    return dlog(big_gamma(q)) - dlog_target(q)


def _gamma_images(data: GammaData) -> Tuple[Ring1Elt, Ring1Elt, Ring1Elt]:
    g = data.gamma
    return at_eps0(g), at_eps1(g), at_eps01(g).to_y()


def error_term(q: CVector) -> Ring1Elt:
    """T = E1(γ(ε0 ε1)) - E0(γ(ε0 ε1)), an element of (y0, y1)^p."""
    _, _, g01 = _gamma_images(gamma_poly(q))
    return exp1(g01) - exp0(g01)


def _descend(u: Ring1Elt, what: str) -> Ring1Elt:
    try:
        return u.descend()
    except DescentError as e:
        raise DescentError(f"{what} has coefficients outside F_{u.prime()}") from e


@functools.lru_cache(maxsize=1024)
def _b_unit(q: CVector, root_shift: int) -> Ring1Elt:
    data = gamma_poly(q, root_shift)
    gamma = data.gamma
    log.debug("computing B_q for q=(%s) at p=%d over %r", q, q.p, data.ring)

    # E0 commutes with the ring maps ε -> ε0, ε1, ε0 ε1, so every exponential is taken in Λ0
    big = exp0(gamma)
    e0, e1 = at_eps0(big), at_eps1(big)
    e01 = at_eps01(big).to_y()
    e01_inv = invert_unit(e01)
    b_bar = e0 * e1 * e01_inv

    # second form E1(γ0 + γ1) / E0(γ01) with both exponentials taken in Λ1. It agrees with the
    # first one when E0 commutes with ε -> ε0 ε1 and E1(γ0 + γ1) = E0(γ0) E0(γ1)
    g0, g1, g01 = _gamma_images(data)
    if exp1(g0 + g1) != b_bar * exp0(g01):
        raise VerificationError("E0 quotient equals E1(γ0 + γ1) / E0(γ01)", f"q=({q}), p={q.p}")
    return _descend(b_bar, f"B_q for q=({q})")


def b_unit(q: CVector, root_shift: int = 0) -> BUnit:
    """
    B_q = E0(γ(ε0)) E0(γ(ε1)) / E0(γ(ε0 ε1)), cross-checked against the
    E1 form of the same quotient and descended to F_p.
    """
    return BUnit(q, _b_unit(q, int(root_shift) % q.p))


def b_unit_inverse(q: CVector) -> BUnit:
    """B_{q^-1} = E1(γ01 - γ0 - γ1) - E1(-γ0 - γ1) T."""
    g0, g1, g01 = _gamma_images(gamma_poly(q))
    t = exp1(g01) - exp0(g01)
    value = exp1(g01 - g0 - g1) - exp1(-(g0 + g1)) * t
    return BUnit(-q, _descend(value, f"B_q^-1 for q=({q})"))


def tilde_gamma(q: CVector) -> Ring1Elt:
    """γ̃ = γ(ε0) + γ(ε1) - γ(ε0 ε1), a multiple of y0 y1."""
    g0, g1, g01 = _gamma_images(gamma_poly(q))
    return g0 + g1 - g01


def norm_of_b(q: CVector) -> Ring1Elt:
    """N_q = 1 + B_q + ... + B_q^(p-1), checked against γ̃^(p-1)."""
    n = norm(b_unit(q).element)
    expected = _descend(tilde_gamma(q) ** (q.p - 1), "γ̃^(p-1)")
    if n != expected:
        raise VerificationError("N_q == γ̃^(p-1)", f"q=({q}), p={q.p}")
    return n


def alpha_coefficient(q: CVector) -> int:
    """α = Σ_{i=2}^{p-1} c_i C(i, 2); B_q^-1 - 1 ≡ α y0 y1 (y0 + y1) mod (y0, y1)^4."""
    if q.p < 5:
        raise ValueError("the α coefficient is defined for p >= 5")
    ext = extend_c(q)
    return sum(ext[i] * math.comb(i, 2) for i in range(2, q.p)) % q.p


def alpha_vanishing_hyperplane(p: int) -> Subspace:
    """{q : α(q) = 0}. α is linear in q, so this is the kernel of the row (α(τ_0), ..., α(τ_r))."""
    row = [alpha_coefficient(tau(p, j)) for j in range(context(p).r + 1)]
    return FpMatrix(p, [row]).kernel_basis()


# generators and products


def generator_units(p: int) -> Tuple[BUnit, ...]:
    """B_{τ_0}, ..., B_{τ_r}."""
    return tuple(b_unit(tau(p, j)) for j in range(context(p).r + 1))


@functools.lru_cache(maxsize=None)
def _generator_powers(p: int) -> Tuple[Tuple[Ring1Elt, ...], ...]:
    powers = []
    for unit in generator_units(p):
        row = [Ring1Elt.one(prime_field(p))]
        for _ in range(p - 1):
            row.append(row[-1] * unit.element)
        powers.append(tuple(row))
    return tuple(powers)


def b_unit_from_generators(q: CVector) -> BUnit:
    """B_q as the product Π_j B_{τ_j}^{c_j}."""
    powers = _generator_powers(q.p)
    acc = powers[0][q.c[0]]
    for j in range(1, q.rank()):
        if q.c[j]:
            acc = acc * powers[j][q.c[j]]
    return BUnit(q, acc)


def all_b_units(p: int) -> Iterator[BUnit]:
    """B_q for every q in Q, built from the generators."""
    for q in CVector.all(p):
        yield b_unit_from_generators(q)


# twists


def fold_index(p: int, j: int) -> int:
    """Representative of ±j mod p in [0, (p-1)/2]."""
    j %= p
    return min(j, p - j)


def twist_c_vector(a: int, q: CVector) -> CVector:
    """
    The c-vector q' with ρ_a(B_q) = B_{q'}: c'_{ia} = a c_i for 1 <= i <= p-1 and c'_0 = c_0.
    The result is read off the extended vector, so it is again a valid c-vector.
    """
    p = q.p
    if a % p == 0:
        raise ValueError("twist requires a unit mod p")
    ext = extend_c(q)
    values = [0] * p
    values[0] = ext.c0
    for i in range(1, p):
        values[(i * a) % p] = (a * ext[i]) % p
    return CVector(p, tuple(values[: q.rank()]))


def twisted_b_unit(a: int, q: CVector) -> Ring1Elt:
    return twist(a, b_unit(q).element)


# annihilation


def annihilation_exponents(p: int) -> Tuple[int, int]:
    """(s, s') = (floor(2p/3), floor((2p+1)/3))."""
    if p < 5:
        raise ValueError("annihilation exponents are defined for p >= 5")
    return (2 * p) // 3, (2 * p + 1) // 3


@dataclass
class AnnihilationReport:
    p: int
    s: int
    s_prime: int
    trials: int
    annihilates_y0y1: bool
    vanishes: bool
    sharpness_witness: Optional[List[CVector]]

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "s": self.s,
            "s_prime": self.s_prime,
            "trials": self.trials,
            "annihilates_y0y1": self.annihilates_y0y1,
            "vanishes": self.vanishes,
            "sharpness_witness": (
                None if self.sharpness_witness is None else [list(q.c) for q in self.sharpness_witness]
            ),
        }


def _product_minus_one(qs: Sequence[CVector]) -> Ring1Elt:
    p = qs[0].p
    acc = Ring1Elt.one(prime_field(p))
    for q in qs:
        acc = acc * b_unit_from_generators(q).minus_one()
    return acc


def annihilation_probe(p: int, trials: int = 100, seed: int = 0) -> AnnihilationReport:
    """
    Products of s factors B_q - 1 kill y0 y1, products of s' factors vanish. A witness of
    sharpness is a tuple of s - 1 factors whose product does not kill y0 y1. Powers of
    B_τ0 - 1 are tried first, then random tuples.
    """
    s, s_prime = annihilation_exponents(p)
    ring = prime_field(p)
    y0y1 = Ring1Elt.from_monomials(ring, {(1, 1): 1})
    rng = np.random.default_rng(seed)

    annihilates = True
    vanishes = True
    for _ in range(trials):
        qs = [CVector.random(p, rng) for _ in range(s_prime)]
        if not (_product_minus_one(qs[:s]) * y0y1).is_zero():
            annihilates = False
        if not _product_minus_one(qs).is_zero():
            vanishes = False

    witness: Optional[List[CVector]] = [tau(p, 0)] * (s - 1)
    if (_product_minus_one(witness) * y0y1).is_zero():
        witness = None
        for _ in range(trials):
            candidate = [CVector.random(p, rng) for _ in range(s - 1)]
            if not (_product_minus_one(candidate) * y0y1).is_zero():
                witness = candidate
                break

    log.info("annihilation probe at p=%d: s=%d, s'=%d, %d trials", p, s, s_prime, trials)
    return AnnihilationReport(p, s, s_prime, trials, annihilates, vanishes, witness)


def augmentation_depth(q: CVector) -> int:
    """ideal_power_degree(B_q - 1)."""
    return ideal_power_degree(b_unit(q).minus_one())


def is_swap_symmetric(u: Ring1Elt) -> bool:
    return swap(u) == u
