"""Macdonald's eta-power identities as exact lattice sums.

Each family sums ``weight(v) * x**(|v|^2 / divisor)`` over integer vectors
with prescribed residues; multiplied by a rational constant the sum is
``eta(x)**eta_exponent``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .series import TruncatedSeries, eta_power

__all__ = [
    "FAMILIES",
    "LatticeSpec",
    "lattice_spec",
    "macdonald_constant",
    "lattice_terms",
    "lattice_weight",
    "minimal_vector",
    "macdonald_series",
    "MacdonaldReport",
    "verify_macdonald",
]

FAMILIES = ("A", "B", "C", "BC")


@dataclass(frozen=True)
class LatticeSpec:
    family: str
    t: int
    modulus: int
    residues: tuple[int, ...]
    sum_constraint: tuple[str, int, int] | None  # ("zero", 0, 0) or ("congruence", value, modulus)
    exponent_divisor: int
    eta_exponent: int

    @property
    def offset(self) -> Fraction:
        return Fraction(self.eta_exponent, 24)

    def admissible(self, v) -> bool:
        if len(v) != self.t or any((x - r) % self.modulus for x, r in zip(v, self.residues)):
            return False
        if self.sum_constraint is None:
            return True
        kind, value, mod = self.sum_constraint
        if kind == "zero":
            return sum(v) == 0
        return (sum(v) - value) % mod == 0


def lattice_spec(family: str, t: int) -> LatticeSpec:
    """Lattice data for ``family`` at rank ``t``; raises ``ValueError`` if inadmissible."""
    if family == "A":
        if t < 3 or t % 2 == 0:
            raise ValueError(f"family A needs an odd t >= 3, got {t}")
        return LatticeSpec("A", t, t, tuple(range(t)), ("zero", 0, 0), 2 * t, t * t - 1)
    if family == "C":
        if t < 2:
            raise ValueError(f"family C needs t >= 2, got {t}")
        m = 2 * t + 2
        return LatticeSpec("C", t, m, tuple(range(1, t + 1)), None, 2 * m, 2 * t * t + t)
    if family == "B":
        if t < 3:
            raise ValueError(f"family B needs t >= 3, got {t}")
        m = 4 * t - 2
        return LatticeSpec("B", t, m, tuple(range(1, 2 * t, 2)), ("congruence", t * t, 2 * m), 4 * m, 2 * t * t + t)
    if family == "BC":
        if t < 1:
            raise ValueError(f"family BC needs t >= 1, got {t}")
        m = 4 * t + 2
        return LatticeSpec("BC", t, m, tuple(range(1, 2 * t, 2)), None, 4 * m, 2 * t * t - t)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _superfactorial(ks) -> int:
    return math.prod(math.factorial(k) for k in ks)


def macdonald_constant(family: str, t: int) -> Fraction:
    """The normalising constant, built from factorials.

    A: ``(-1)^((t-1)/2) / (1! 2! ... (t-1)!)``
    C: ``(-1)^(t//2) / (1! 3! ... (2t-1)!)``
    B: the C constant divided by ``2^(t(t-1))``
    BC: ``1 / (2^(t(t-1)) 0! 2! 4! ... (2t-2)!)``

    In every family this is ``1 / lattice_weight(minimal_vector)``, which
    pins the leading coefficient of the eta power to 1.
    """
    lattice_spec(family, t)
    if family == "A":
        return Fraction((-1) ** ((t - 1) // 2), _superfactorial(range(1, t)))
    c = Fraction((-1) ** (t // 2), _superfactorial(range(1, 2 * t, 2)))
    if family == "C":
        return c
    if family == "B":
        return c / 2 ** (t * (t - 1))
    return Fraction(1, 2 ** (t * (t - 1)) * _superfactorial(range(0, 2 * t - 1, 2)))


def lattice_weight(family: str, v) -> int:
    """The integrand attached to ``v`` (an exact integer)."""
    if family == "A":
        return math.prod(a - b for a, b in combinations(v, 2))
    sq = math.prod(a * a - b * b for a, b in combinations(v, 2))
    if family in ("B", "C"):
        return math.prod(v) * sq
    half = (sum(v) - len(v)) // 2
    return (-1) ** half * sq


def minimal_vector(spec: LatticeSpec) -> tuple[int, ...]:
    """The admissible vector of least norm: residues taken nearest to zero."""
    if spec.family == "A":
        m = spec.modulus
        return tuple(r if r <= m // 2 else r - m for r in spec.residues)
    return spec.residues


def lattice_terms(
    spec: LatticeSpec, order: int, widen: int = 0
) -> Iterator[tuple[tuple[int, ...], Fraction, int]]:
    """Admissible vectors with exponent at most ``offset + order``, zero weights dropped.

    Yields ``(v, exponent, weight)``.  Coordinates are walked per residue
    class under the remaining norm budget ``divisor * (offset + order)``;
    ``widen`` enlarges the per-coordinate range without changing the budget.
    """
    budget = spec.exponent_divisor * (spec.offset + order)
    limit = math.isqrt(math.floor(budget)) + widen
    m = spec.modulus
    columns = []
    for r in spec.residues:
        start = -limit + ((r + limit) % m)
        columns.append([x for x in range(start, limit + 1, m)])

    def walk(k: int, prefix: tuple[int, ...], norm: int) -> Iterator[tuple[int, ...]]:
        if k == spec.t:
            yield prefix
            return
        for x in columns[k]:
            n2 = norm + x * x
            if n2 > budget:
                continue
            # these would make the weight vanish
            if spec.family != "A" and (x == 0 or any(abs(x) == abs(y) for y in prefix)):
                continue
            yield from walk(k + 1, prefix + (x,), n2)

    for v in walk(0, (), 0):
        if not spec.admissible(v):
            continue
        w = lattice_weight(spec.family, v)
        if w:
            yield v, Fraction(sum(x * x for x in v), spec.exponent_divisor), w


def macdonald_series(family: str, t: int, order: int) -> TruncatedSeries:
    """``constant * sum weight(v) x**(|v|^2/divisor)`` as a series with offset ``eta_exponent/24``."""
    spec = lattice_spec(family, t)
    bins: dict[int, int] = defaultdict(int)
    for v, exponent, w in lattice_terms(spec, order):
        step = exponent - spec.offset
        if step.denominator != 1 or step < 0:
            raise ArithmeticError(f"vector {v} has exponent {exponent}, not offset {spec.offset} plus a natural number")
        bins[int(step)] += w
    c = macdonald_constant(family, t)
    return TruncatedSeries(spec.offset, [c * bins[k] for k in range(order + 1)])


@dataclass
class MacdonaldReport:
    family: str
    t: int
    order: int
    ok: bool
    terms: int
    mismatch: tuple[int, Fraction, Fraction] | None = None  # (index, lattice, eta)

    def __bool__(self) -> bool:
        return self.ok


def verify_macdonald(family: str, t: int, order: int) -> MacdonaldReport:
    """Compare the lattice sum against ``eta_power`` coefficient by coefficient."""
    spec = lattice_spec(family, t)
    terms = sum(1 for _ in lattice_terms(spec, order))
    lhs = macdonald_series(family, t, order)
    rhs = eta_power(spec.eta_exponent, order)
    if lhs.offset != rhs.offset:
        return MacdonaldReport(family, t, order, False, terms, (-1, lhs.offset, rhs.offset))
    for k in range(order + 1):
        if lhs[k] != rhs[k]:
            return MacdonaldReport(family, t, order, False, terms, (k, lhs[k], rhs[k]))
    return MacdonaldReport(family, t, order, True, terms)
