"""t-cores, ribbon removal and the vector bijections on cores.

The Garvan-Kim-Stanton map reads a t-core off its extended t-residue
diagram.  Row ``i`` ends in the exposed box ``(i, parts[i])`` (column 0 for
empty rows) whose content is ``c = parts[i] - i``; its label is ``c mod t``
and it sits in region ``c // t + 1``.  Component ``k`` of the vector is the
largest region holding an exposed box labelled ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import (
    Partition,
    PartitionError,
    classify,
    double_distinct,
    doubled_distinct_from_hooks,
    hook_multiset,
    make_distinct,
    principal_hooks,
    self_conjugate_from_hooks,
    undouble,
)

__all__ = [
    "CoreError",
    "CoreVector",
    "PairSCDD",
    "DeltaProfile",
    "is_t_core",
    "beta_numbers",
    "from_beta_numbers",
    "remove_ribbon",
    "ribbon_boxes",
    "t_core_reduce",
    "all_reductions",
    "gks_phi",
    "gks_phi_inv",
    "gks_weight",
    "phi1",
    "phi1_inv",
    "phi2",
    "phi2_inv",
    "sc_weight_vector",
    "dd_weight_vector",
    "make_pair",
    "delta_profile",
    "delta_set",
    "varphi",
    "varphi_inv",
    "varphi_inv_recursive",
    "varphi_weight",
    "pair_to_dd",
    "dd_to_pair",
    "t_cores",
    "core_vectors",
]


class CoreError(ValueError):
    """Input violates a core or class-membership requirement."""


@dataclass(frozen=True)
class CoreVector:
    """Integer vector image of a core.

    ``t`` is the modulus of the cores involved (for ``kind="pair"`` this is
    ``t + 1`` in the pair bijection, and the vector has ``t`` entries).
    """

    t: int
    entries: tuple[int, ...]
    kind: str = "gks"

    def __post_init__(self) -> None:
        n, t = len(self.entries), self.t
        expected = {"gks": t, "sc": t // 2, "dd": (t - 1) // 2, "pair": t - 1}
        if self.kind not in expected:
            raise CoreError(f"unknown vector kind {self.kind!r}")
        if n != expected[self.kind]:
            raise CoreError(f"{self.kind} vector for modulus {t} needs {expected[self.kind]} entries, got {n}")
        if self.kind == "gks" and sum(self.entries) != 0:
            raise CoreError(f"GKS vector entries must sum to 0: {self.entries}")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class PairSCDD:
    """A self-conjugate partition paired with a doubled distinct one.

    ``t_plus_1`` is the core modulus used by the pair bijection; it is
    carried as metadata and not enforced here (non-core pairs are valid).
    """

    lam: Partition
    mu: Partition
    t_plus_1: int | None = None

    def __post_init__(self) -> None:
        if not classify(self.lam)[0]:
            raise CoreError(f"{self.lam} is not self-conjugate")
        if not classify(self.mu)[1]:
            raise CoreError(f"{self.mu} is not doubled distinct")

    @property
    def weight(self) -> int:
        return self.lam.weight + self.mu.weight


@dataclass(frozen=True)
class DeltaProfile:
    delta: frozenset[int]
    delta_i: dict[int, int]
    sigma_i: dict[int, int]


def is_t_core(p: Partition, t: int) -> bool:
    """True iff no hook length equals ``t``."""
    if t < 1:
        raise ValueError("t must be positive")
    return all(b.hook != t for b in hook_multiset(p))


def beta_numbers(p: Partition, length: int | None = None) -> list[int]:
    """Contents ``parts[i] - i`` of the exposed boxes of the first ``length`` rows."""
    length = len(p) if length is None else length
    return [p.row(i) - i for i in range(1, length + 1)]


def from_beta_numbers(beads: Sequence[int]) -> Partition:
    """Partition from a finite bead set that is 'full below' after ``len(beads)`` rows."""
    bs = sorted(beads, reverse=True)
    rows = [b + i for i, b in enumerate(bs, start=1)]
    if any(r < 0 for r in rows):
        raise PartitionError(f"bead set {bs} does not describe a partition")
    return Partition(tuple(r for r in rows if r > 0))


def ribbon_boxes(p: Partition, t: int) -> list[tuple[int, int]]:
    """Boxes of hook length ``t``, lexicographically sorted.

    Each one is the corner of a removable ribbon of length ``t``.
    """
    return sorted((b.row, b.col) for b in hook_multiset(p) if b.hook == t)


def remove_ribbon(p: Partition, box: tuple[int, int]) -> Partition:
    """Remove the rim hook attached to ``box``: slide its bead down by the hook length."""
    i, j = box
    hooks = {(b.row, b.col): b.hook for b in hook_multiset(p)}
    if (i, j) not in hooks:
        raise PartitionError(f"box {box} is not in {p}")
    h = hooks[(i, j)]
    beads = beta_numbers(p, len(p) + h)
    beads[i - 1] -= h
    return from_beta_numbers(beads)


def t_core_reduce(p: Partition, t: int) -> Partition:
    """The t-core of ``p``: strip ribbons of length ``t`` until none remain.

    The ribbon removed at each step is the one whose box of hook length
    ``t`` is lexicographically smallest.
    """
    while True:
        boxes = ribbon_boxes(p, t)
        if not boxes:
            return p
        p = remove_ribbon(p, boxes[0])


def all_reductions(p: Partition, t: int) -> set[Partition]:
    """Every end state reachable by removing length-``t`` ribbons in any order."""
    seen: dict[Partition, set[Partition]] = {}

    def walk(q: Partition) -> set[Partition]:
        if q not in seen:
            boxes = ribbon_boxes(q, t)
            if not boxes:
                seen[q] = {q}
            else:
                seen[q] = set().union(*(walk(remove_ribbon(q, b)) for b in boxes))
        return seen[q]

    return walk(p)


# --- Garvan-Kim-Stanton ---------------------------------------------------

def gks_phi(p: Partition, t: int) -> CoreVector:
    if not is_t_core(p, t):
        raise CoreError(f"{p} is not a {t}-core")
    best: dict[int, int] = {}
    # rows beyond len(p) + t contribute only regions already beaten on each runner
    for c in beta_numbers(p, len(p) + t):
        label, region = c % t, c // t + 1
        best[label] = max(best.get(label, region), region)
    return CoreVector(t, tuple(best[k] for k in range(t)), "gks")


def gks_phi_inv(v: CoreVector | Sequence[int], t: int | None = None) -> Partition:
    """The t-core with bead count ``v[k]`` on runner ``k``."""
    if not isinstance(v, CoreVector):
        v = CoreVector(len(v) if t is None else t, tuple(v), "gks")
    t, n = v.t, v.entries
    floor = t * min(n)
    # runner k holds beads t*q + k for every q < n[k]; all positions below `floor` are filled
    beads = [t * q + k for k in range(t) for q in range(min(n), n[k])]
    if len(beads) != -floor:
        raise CoreError("bead configuration has nonzero charge")
    return from_beta_numbers(beads)


def gks_weight(n: Sequence[int]) -> int:
    """``t/2 |n|^2 + b.n`` with ``b = (0, 1, ..., t-1)``."""
    t = len(n)
    twice = t * sum(x * x for x in n) + 2 * sum(i * x for i, x in enumerate(n))
    return twice // 2


def sc_weight_vector(t: int) -> tuple[int, ...]:
    """The linear coefficients ``c`` in ``|lambda| = t |n|^2 + c.n``."""
    return tuple(range(1, t, 2)) if t % 2 == 0 else tuple(range(2, t, 2))


def dd_weight_vector(t: int) -> tuple[int, ...]:
    """The linear coefficients ``d`` in ``|mu| = t |n|^2 + d.n``."""
    return tuple(range(2, t - 1, 2)) if t % 2 == 0 else tuple(range(1, t - 1, 2))


def phi1(p: Partition, t: int) -> CoreVector:
    """Self-conjugate t-core -> last ``t//2`` components of its GKS vector."""
    if not classify(p)[0]:
        raise CoreError(f"{p} is not self-conjugate")
    full = gks_phi(p, t).entries
    return CoreVector(t, full[t - t // 2:], "sc")


def phi1_inv(v: CoreVector | Sequence[int], t: int) -> Partition:
    # self-conjugate cores satisfy n_k = -n_{t-1-k}
    tail = tuple(v)
    if len(tail) != t // 2:
        raise CoreError(f"need {t // 2} entries for modulus {t}")
    full = [0] * t
    for k, x in zip(range(t - t // 2, t), tail):
        full[k], full[t - 1 - k] = x, -x
    return gks_phi_inv(full)


def phi2(p: Partition, t: int) -> CoreVector:
    """Doubled distinct t-core -> last ``(t-1)//2`` components of its GKS vector."""
    if not classify(p)[1]:
        raise CoreError(f"{p} is not doubled distinct")
    full = gks_phi(p, t).entries
    m = (t - 1) // 2
    return CoreVector(t, full[t - m:] if m else (), "dd")


def phi2_inv(v: CoreVector | Sequence[int], t: int) -> Partition:
    # doubled distinct cores satisfy n_0 = 0 and n_k = -n_{t-k}
    tail = tuple(v)
    m = (t - 1) // 2
    if len(tail) != m:
        raise CoreError(f"need {m} entries for modulus {t}")
    full = [0] * t
    for k, x in zip(range(t - m, t), tail):
        full[k], full[t - k] = x, -x
    return gks_phi_inv(full)


# --- pairs (self-conjugate, doubled distinct) -----------------------------

def make_pair(lam: Partition | Sequence[int], mu: Partition | Sequence[int], t_plus_1: int | None = None) -> PairSCDD:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    return PairSCDD(lam, mu, t_plus_1)


def delta_set(pair: PairSCDD) -> frozenset[int]:
    """Principal hook lengths of both partitions."""
    return frozenset(principal_hooks(pair.lam)) | frozenset(principal_hooks(pair.mu))


def delta_profile(pair: PairSCDD, t: int | None = None) -> DeltaProfile:
    """Per-class maxima of the principal hooks modulo ``2t + 2``.

    ``t`` defaults to ``pair.t_plus_1 - 1``.  The sign ``sigma_i`` is the
    sign of ``n_i`` read back from ``t + 1 + Delta_i = sigma_i ((2t+2) n_i + i)``.
    """
    if t is None:
        if pair.t_plus_1 is None:
            raise CoreError("modulus unknown: pass t or set pair.t_plus_1")
        t = pair.t_plus_1 - 1
    delta = delta_set(pair)
    m = 2 * t + 2
    delta_i, sigma_i = {}, {}
    for i in range(1, t + 1):
        classes = {(i - t - 1) % m, (-i - t - 1) % m}
        d = max([h for h in delta if h % m in classes] + [i - t - 1])
        delta_i[i] = d
        # n_i >= 0 exactly when t+1+Delta_i is congruent to i (mod 2t+2) and positive
        s = t + 1 + d
        sigma_i[i] = 1 if s > 0 and s % m == i else -1
    return DeltaProfile(delta, delta_i, sigma_i)


def _slots(t: int) -> tuple[list[int], list[int]]:
    """1-based positions of the vector fed by phi1 (lambda) and by phi2 (mu)."""
    even = list(range(2, t + 1, 2))
    odd = list(range(1, t + 1, 2))
    return (even, odd) if (t + 1) % 2 == 1 else (odd, even)


def varphi(pair: PairSCDD, t: int | None = None) -> CoreVector:
    """Pair of (t+1)-cores -> Z^t by interleaving phi1(lambda) and phi2(mu)."""
    if t is None:
        if pair.t_plus_1 is None:
            raise CoreError("modulus unknown: pass t or set pair.t_plus_1")
        t = pair.t_plus_1 - 1
    if t < 1:
        raise CoreError("pair bijection needs t >= 1")
    T = t + 1
    for p in (pair.lam, pair.mu):
        if not is_t_core(p, T):
            raise CoreError(f"{p} is not a {T}-core")
    a, b = phi1(pair.lam, T).entries, phi2(pair.mu, T).entries
    lam_slots, mu_slots = _slots(t)
    n = [0] * t
    for pos, x in zip(lam_slots, a):
        n[pos - 1] = x
    for pos, x in zip(mu_slots, b):
        n[pos - 1] = x
    return CoreVector(T, tuple(n), "pair")


def varphi_inv(v: CoreVector | Sequence[int], t: int | None = None) -> PairSCDD:
    entries = tuple(v)
    t = len(entries) if t is None else t
    if len(entries) != t:
        raise CoreError(f"need {t} entries")
    T = t + 1
    lam_slots, mu_slots = _slots(t)
    lam = phi1_inv([entries[p - 1] for p in lam_slots], T)
    mu = phi2_inv([entries[p - 1] for p in mu_slots], T)
    return PairSCDD(lam, mu, T)


def varphi_inv_recursive(v: Sequence[int]) -> PairSCDD:
    """Build the preimage hook by hook.

    ``n_i = k > 0`` contributes principal hooks ``(t+1)(2m-1) + i`` and
    ``n_i = -k`` contributes ``(t+1)(2m-1) - i`` for ``m = 1..k``; odd hooks
    go to the self-conjugate partition, even ones to the doubled distinct one.
    """
    t = len(v)
    T = t + 1
    hooks = []
    for i, n in enumerate(v, start=1):
        sign = 1 if n > 0 else -1
        hooks += [T * (2 * m - 1) + sign * i for m in range(1, abs(n) + 1)]
    lam = self_conjugate_from_hooks([h for h in hooks if h % 2])
    mu = doubled_distinct_from_hooks([h for h in hooks if h % 2 == 0])
    return PairSCDD(lam, mu, T)


def varphi_weight(n: Sequence[int]) -> int:
    """``(t+1)|n|^2 + e.n`` with ``e = (1, ..., t)``."""
    T = len(n) + 1
    return T * sum(x * x for x in n) + sum(i * x for i, x in enumerate(n, start=1))


def pair_to_dd(pair: PairSCDD) -> Partition:
    """The doubled distinct partition whose principal hooks are twice those of the pair."""
    hooks = sorted(delta_set(pair), reverse=True)
    return double_distinct(make_distinct(hooks))


def dd_to_pair(nu: Partition, t_plus_1: int | None = None) -> PairSCDD:
    if not classify(nu)[1]:
        raise CoreError(f"{nu} is not doubled distinct")
    hooks = undouble(nu).parts
    lam = self_conjugate_from_hooks([h for h in hooks if h % 2])
    mu = doubled_distinct_from_hooks([h for h in hooks if h % 2 == 0])
    return PairSCDD(lam, mu, t_plus_1)


# --- enumeration ------------------------------------------------------------

def core_vectors(t: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    """Zero-sum vectors of length ``t`` whose GKS weight is at most ``max_weight``.

    On zero-sum vectors the weight splits as ``sum_k (t n_k^2 + (2k-t+1) n_k) / 2``
    and every summand is non-negative, which gives an exact pruning budget.
    """
    def term(k: int, x: int) -> int:
        return t * x * x + (2 * k - t + 1) * x

    bound = 0
    while t * (bound + 1) ** 2 - (t - 1) * (bound + 1) <= 2 * max_weight:
        bound += 1

    def rec(prefix: list[int], budget: int) -> Iterator[tuple[int, ...]]:
        k = len(prefix)
        if k == t - 1:
            last = -sum(prefix)
            if term(k, last) <= budget:
                yield tuple(prefix + [last])
            return
        for x in range(-bound, bound + 1):
            cost = term(k, x)
            if cost <= budget:
                yield from rec(prefix + [x], budget - cost)

    yield from rec([], 2 * max_weight)


def t_cores(t: int, max_weight: int) -> list[Partition]:
    """All t-cores of weight at most ``max_weight``, via the inverse GKS map."""
    return sorted(gks_phi_inv(n) for n in core_vectors(t, max_weight))
