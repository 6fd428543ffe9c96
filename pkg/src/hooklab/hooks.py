"""Hook-length sides of the eta-power expansions, and compact sets.

All sums are exact; parameters ``z`` and ``t`` may be integers or
``Fraction`` values.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .cores import (
    PairSCDD,
    delta_profile,
    delta_set,
    is_t_core,
    pair_to_dd,
    varphi,
    varphi_inv,
    varphi_weight,
)
from .macdonald import macdonald_constant
from .partitions import (
    Partition,
    durfee,
    enumerate_partitions,
    hook_lengths,
    hook_multiset,
    principal_hooks,
    self_conjugate_from_hooks,
    doubled_distinct_from_hooks,
)
from .series import TruncatedSeries, pochhammer_inf, power_product, series

__all__ = [
    "no_rhs",
    "typeC_term",
    "typeC_rhs",
    "distinct_signed_sum",
    "pair_Q",
    "pair_rhs",
    "sc_dd_pairs",
    "BridgeReport",
    "bij_product_check",
    "symplectic_hook_sum",
    "genfunc_pair",
    "CompactSet",
    "compact_ops",
    "random_compact_set",
    "compact_lemma_sides",
    "compact_lemma_check",
    "LemmaReport",
    "lemma_ratio_check",
    "lemma_E",
    "random_pairs",
    "no_product",
    "typeC_product",
]

Param = int | Fraction


@lru_cache(maxsize=None)
def _classes(kind: str, n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(kind, n))


# --- Nekrasov-Okounkov ------------------------------------------------------

def no_rhs(z: Param, order: int) -> TruncatedSeries:
    """``sum_lambda x^|lambda| prod_h (1 - z/h^2)`` over all partitions."""
    z = Fraction(z)
    coeffs = []
    for n in range(order + 1):
        total = Fraction(0)
        for p in _classes("all", n):
            total += math.prod((1 - z / (h * h) for h in hook_lengths(p)), start=Fraction(1))
        coeffs.append(total)
    return series(coeffs, order)


# --- type C expansion ---------------------------------------------------------

def typeC_term(p: Partition, t: Param) -> Fraction:
    """``delta_p prod_h (1 - (2t+2)/(h eps_h))`` for one doubled distinct partition."""
    k = 2 * Fraction(t) + 2
    _, sign = durfee(p)
    return sign * math.prod((1 - k / (b.hook * b.epsilon) for b in hook_multiset(p)), start=Fraction(1))


def typeC_rhs(t: Param, order: int) -> TruncatedSeries:
    """Sum over doubled distinct partitions of weight up to ``2 * order``, in ``x^(|lambda|/2)``."""
    return series([sum((typeC_term(p, t) for p in _classes("doubled_distinct", 2 * n)), Fraction(0))
                   for n in range(order + 1)], order)


def distinct_signed_sum(order: int) -> TruncatedSeries:
    """``sum (-1)^(number of parts) x^|lambda|`` over partitions into distinct parts."""
    return series([sum((-1) ** len(p) for p in _classes("distinct", n)) for n in range(order + 1)], order)


# --- pairs (self-conjugate, doubled distinct) ----------------------------------

def sc_dd_pairs(max_weight: int) -> Iterator[PairSCDD]:
    """All pairs with ``|lambda| + |mu| <= max_weight``, by weight convolution."""
    for total in range(max_weight + 1):
        for a in range(total + 1):
            for lam in _classes("self_conjugate", a):
                for mu in _classes("doubled_distinct", total - a):
                    yield PairSCDD(lam, mu)


def pair_Q(pair: PairSCDD, t: Param) -> Fraction:
    """The principal-hook product attached to a pair.

    For each principal hook ``h``: ``(1 - (2t+2)/h)(1 - (t+1)/h)`` times
    ``prod_{j<h} (1 - ((2t+2)/(h + tau_j j))^2)`` where ``tau_j = +1`` when
    ``j`` is itself a principal hook and ``-1`` otherwise.
    """
    t = Fraction(t)
    k = 2 * t + 2
    delta = delta_set(pair)
    q = Fraction(1)
    for h in sorted(delta, reverse=True):
        q *= (1 - k / h) * (1 - (t + 1) / h)
        if not q:
            return q
        for j in range(1, h):
            d = h + (j if j in delta else -j)
            assert d > 0
            q *= 1 - (k / d) ** 2
            if not q:
                return q
    return q


def pair_rhs(t: Param, order: int, cores_only: bool = False) -> TruncatedSeries:
    """``sum delta_lambda delta_mu x^(|lambda|+|mu|) Q`` over pairs up to ``order``.

    With ``cores_only`` the sum is restricted to pairs of (t+1)-cores
    (``t`` must then be a positive integer).
    """
    coeffs = [Fraction(0)] * (order + 1)
    for pair in sc_dd_pairs(order):
        if cores_only and not (is_t_core(pair.lam, t + 1) and is_t_core(pair.mu, t + 1)):
            continue
        sign = durfee(pair.lam)[1] * durfee(pair.mu)[1]
        coeffs[pair.weight] += sign * pair_Q(pair, t)
    return series(coeffs, order)


@dataclass
class BridgeReport:
    ok: bool
    q: Fraction
    hook_product: Fraction
    weight_ok: bool
    sign_ok: bool

    def __bool__(self) -> bool:
        return self.ok


def bij_product_check(pair: PairSCDD, t: Param) -> BridgeReport:
    """Compare ``pair_Q`` with the signed hook product of the associated doubled distinct partition."""
    nu = pair_to_dd(pair)
    k = 2 * Fraction(t) + 2
    q = pair_Q(pair, t)
    hp = math.prod((1 - k / (b.hook * b.epsilon) for b in hook_multiset(nu)), start=Fraction(1))
    weight_ok = nu.weight == 2 * pair.weight
    sign_ok = durfee(nu)[1] == durfee(pair.lam)[1] * durfee(pair.mu)[1]
    return BridgeReport(q == hp and weight_ok and sign_ok, q, hp, weight_ok, sign_ok)


def random_pairs(rng: random.Random, count: int, max_weight: int) -> list[PairSCDD]:
    """``count`` pairs drawn uniformly from all pairs of weight at most ``max_weight``."""
    pool = list(sc_dd_pairs(max_weight))
    return [rng.choice(pool) for _ in range(count)]


# --- symplectic hook formula --------------------------------------------------

def symplectic_hook_sum(n: int) -> Fraction:
    """``sum 1/prod(hooks)`` over doubled distinct partitions of weight ``2n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum((Fraction(1, math.prod(hook_lengths(p))) for p in _classes("doubled_distinct", 2 * n)), Fraction(0))


# --- generating function of core pairs ------------------------------------------

def _pair_vectors(t: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    # each summand (t+1) n^2 + i n is >= 0, so it prunes exactly
    T = t + 1

    def rec(prefix: tuple[int, ...], budget: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > t:
            yield prefix
            return
        x = 0
        while True:
            moved = False
            for v in ((x,) if x == 0 else (x, -x)):
                cost = T * v * v + i * v
                if cost <= budget:
                    moved = True
                    yield from rec(prefix + (v,), budget - cost)
            if not moved:
                return
            x += 1

    yield from rec((), max_weight)


def genfunc_pair(t_plus_1: int, order: int, mode: str = "enumerate") -> TruncatedSeries:
    """Generating function of pairs of ``t_plus_1``-cores (self-conjugate, doubled distinct).

    ``mode="enumerate"`` maps every vector within budget through the pair
    bijection and counts the resulting pairs; ``mode="product"`` builds
    ``(q^2;q^2)/(q;q) * (q^T;q^T) * (q^2T;q^2T)^(T-2)`` with ``T = t_plus_1``.
    """
    if t_plus_1 < 1:
        raise ValueError("t_plus_1 must be >= 1")
    t = t_plus_1 - 1
    if mode == "enumerate":
        coeffs = [0] * (order + 1)
        if t == 0:
            coeffs[0] = 1
        else:
            for n in _pair_vectors(t, order):
                pair = varphi_inv(n, t)
                assert pair.weight == varphi_weight(n)
                coeffs[pair.weight] += 1
        return series(coeffs, order)
    if mode == "product":
        s = pochhammer_inf(2, order) / pochhammer_inf(1, order)
        s = s * pochhammer_inf(t_plus_1, order)
        return s * pochhammer_inf(2 * t_plus_1, order) ** (t - 1)
    raise ValueError(f"unknown mode {mode!r}")


# --- compact sets -------------------------------------------------------------

@dataclass(frozen=True)
class CompactSet:
    t: int
    elements: frozenset[int]

    @property
    def modulus(self) -> int:
        return 2 * self.t + 2

    def maxima(self) -> frozenset[int]:
        """Largest element in each residue class modulo ``2t + 2``."""
        best: dict[int, int] = {}
        for a in self.elements:
            r = a % self.modulus
            best[r] = max(best.get(r, a), a)
        return frozenset(best.values())


def compact_ops(elements: Iterable[int], t: int) -> tuple[bool, frozenset[int]]:
    """Check the three compactness axioms; return ``(is_compact, maxima)``."""
    A = frozenset(elements)
    m = 2 * t + 2
    base = set(range(-2 * t - 1, 0))
    ok = base <= A
    for a in A - base:
        if a < 1 or a % m == 0:
            ok = False
        elif a > m and a - m not in A:
            ok = False
    return ok, CompactSet(t, A).maxima()


def random_compact_set(rng: random.Random, t: int, max_positive: int = 40) -> CompactSet:
    """A compact set whose positive part in each class is an initial run of ``r, r+m, ...``."""
    m = 2 * t + 2
    elements = set(range(-2 * t - 1, 0))
    for r in range(1, m):
        run = list(range(r, max_positive + 1, m))
        elements.update(run[: rng.randint(0, len(run))])
    return CompactSet(t, frozenset(elements))


def compact_lemma_sides(A: CompactSet) -> tuple[Fraction, Fraction]:
    """``-prod_{a>0} (1 - ((2t+2)/a)^2)`` and ``prod_{a in maxima} (a+2t+2)/a``."""
    m = A.modulus
    lhs = -math.prod((1 - Fraction(m, a) ** 2 for a in A.elements if a > 0), start=Fraction(1))
    rhs = math.prod((Fraction(a + m, a) for a in A.maxima()), start=Fraction(1))
    return lhs, rhs


def compact_lemma_check(A: CompactSet) -> tuple[bool, Fraction, Fraction]:
    ok, _ = compact_ops(A.elements, A.t)
    if not ok:
        raise ValueError("set is not compact")
    lhs, rhs = compact_lemma_sides(A)
    return lhs == rhs, lhs, rhs


# --- the induction lemmas on principal hooks ----------------------------------

def lemma_E(pair: PairSCDD, t: int, reading: str = "minus") -> list[int]:
    """The candidate maxima set built from the largest principal hook.

    ``reading="minus"`` uses ``h - 2t - 2`` and ``2h - 2t - 2`` for the
    two shifted members, ``reading="plus"`` uses ``h - 2t + 2`` and
    ``2h - 2t + 2``.
    """
    prof = delta_profile(pair, t)
    h = max(prof.delta)
    i0 = next(i for i, d in prof.delta_i.items() if d == h)
    out = []
    for j, d in prof.delta_i.items():
        if j != i0:
            out += [h + d, h - d - 2 * t - 2]
    s = -1 if reading == "minus" else 1
    out += [h - t - 1, h - 2 * t + 2 * s, 2 * h - 2 * t + 2 * s]
    return out


def _delta_products(prof, t: int) -> tuple[Fraction, Fraction]:
    a = [prof.sigma_i[i] * (t + 1 + prof.delta_i[i]) for i in sorted(prof.delta_i)]
    b = [t + 1 + prof.delta_i[i] for i in sorted(prof.delta_i)]
    return (Fraction(math.prod(a)), Fraction(math.prod(x * x - y * y for x, y in combinations(b, 2))))


@dataclass
class LemmaReport:
    ratio_ok: bool
    recap_ok: bool
    e_reading: dict[str, bool]
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.ratio_ok and self.recap_ok and self.e_reading["minus"]

    def __bool__(self) -> bool:
        return self.ok


def lemma_ratio_check(pair: PairSCDD, t: int) -> LemmaReport:
    """Check the one-step ratio of Delta_i products and the closed product form.

    Ratio: removing the largest principal hook ``h`` divides the
    ``Delta_i``-products by ``(1-(2t+2)/h)(1-(t+1)/h) * prod_{a in E} (a+2t+2)/a``.
    Recap: ``prod v_i prod_{i<j}(v_i^2 - v_j^2)`` with ``v_i = (2t+2) n_i + i``
    equals ``delta_lambda delta_mu / c * Q``.  For an empty pair only the
    recap (base case) is checked.  Both readings of ``E`` are tested for
    being the maxima of the compact set with positives ``{h + tau_j j}``.
    """
    n = varphi(pair, t).entries
    v = [(2 * t + 2) * x + i for i, x in enumerate(n, start=1)]
    lhs = math.prod(v) * math.prod(a * a - b * b for a, b in combinations(v, 2))
    sign = durfee(pair.lam)[1] * durfee(pair.mu)[1]
    rhs = sign / macdonald_constant("C", t) * pair_Q(pair, t) if t >= 2 else None
    recap_ok = rhs is None or lhs == rhs
    delta = delta_set(pair)
    if not delta:
        return LemmaReport(True, recap_ok, {"minus": True, "plus": True}, "base case")

    h = max(delta)
    smaller = PairSCDD(
        self_conjugate_from_hooks([x for x in principal_hooks(pair.lam) if x != h]),
        doubled_distinct_from_hooks([x for x in principal_hooks(pair.mu) if x != h]),
    )
    p1, p2 = _delta_products(delta_profile(pair, t), t)
    q1, q2 = _delta_products(delta_profile(smaller, t), t)
    left = (p1 / q1) * (p2 / q2)
    m = 2 * t + 2
    head = (1 - Fraction(m, h)) * (1 - Fraction(t + 1, h))
    E = lemma_E(pair, t, "minus")
    right = head * math.prod((Fraction(a + m, a) for a in E), start=Fraction(1))
    ratio_ok = left == right

    positives = {h + (j if j in delta else -j) for j in range(1, h)}
    H = CompactSet(t, frozenset(positives | set(range(-2 * t - 1, 0))))
    compact, maxima = compact_ops(H.elements, t)
    readings = {r: compact and sorted(maxima) == sorted(lemma_E(pair, t, r)) for r in ("minus", "plus")}
    detail = "" if ratio_ok else f"ratio lhs={left} rhs={right}"
    return LemmaReport(ratio_ok, recap_ok, readings, detail)


# --- product sides, as picklable module-level callables ------------------------

def no_product(z: int, order: int) -> TruncatedSeries:
    """``prod (1 - x^k)^(z-1)``."""
    return power_product(z - 1, order)


def typeC_product(t: int, order: int) -> TruncatedSeries:
    """``prod (1 - x^k)^(2t^2+t)``."""
    return power_product(2 * t * t + t, order)
