"""Integer partitions and Ferrers-diagram geometry.

Diagrams are drawn in French convention: row ``i`` counts from the bottom,
column ``j`` from the left, both starting at 1.  Box ``(i, j)`` exists when
``j <= parts[i-1]``.  A box lies strictly above the main diagonal when its
row index exceeds its column index (``i > j``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Partition",
    "BoxHook",
    "PartitionError",
    "make_partition",
    "make_distinct",
    "conjugate",
    "hook_multiset",
    "hook_lengths",
    "durfee",
    "principal_hooks",
    "from_frobenius",
    "frobenius",
    "double_distinct",
    "undouble",
    "self_conjugate_from_hooks",
    "doubled_distinct_from_hooks",
    "classify",
    "partitions",
    "distinct_partitions",
    "enumerate_partitions",
]


class PartitionError(ValueError):
    """Raised when a sequence is not a valid (or suitably shaped) partition."""


@dataclass(frozen=True, order=True)
class Partition:
    """A non-increasing tuple of positive integers.

    Use :func:`make_partition` to build one from untrusted input; the
    constructor validates too, but accepts only tuples.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        p = self.parts
        if any(x <= 0 for x in p):
            raise PartitionError(f"parts must be positive: {p}")
        if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
            raise PartitionError(f"parts must be non-increasing: {p}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-based), zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


class BoxHook(NamedTuple):
    row: int
    col: int
    hook: int
    epsilon: int


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and wrap it as a :class:`Partition`."""
    parts = tuple(int(x) for x in parts)
    return Partition(parts)


def make_distinct(parts: Sequence[int]) -> Partition:
    """Build a partition whose parts must be strictly decreasing."""
    p = make_partition(parts)
    if any(p[k] == p[k + 1] for k in range(len(p) - 1)):
        raise PartitionError(f"parts must be distinct: {p.parts}")
    return p


def conjugate(p: Partition) -> Partition:
    if not p:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x >= j) for j in range(1, p.parts[0] + 1)))


def hook_multiset(p: Partition) -> list[BoxHook]:
    """All boxes with their hook length ``arm + leg + 1`` and sign.

    The sign is -1 for boxes strictly above the diagonal (row > column).
    """
    cols = conjugate(p).parts
    out = []
    for i, li in enumerate(p.parts, start=1):
        for j in range(1, li + 1):
            h = (li - j) + (cols[j - 1] - i) + 1
            out.append(BoxHook(i, j, h, -1 if i > j else 1))
    return out


def hook_lengths(p: Partition) -> list[int]:
    return [b.hook for b in hook_multiset(p)]


def durfee(p: Partition) -> tuple[int, int]:
    """Durfee length ``D`` and the sign ``(-1)**D``."""
    d = sum(1 for i, x in enumerate(p.parts, start=1) if x >= i)
    return d, -1 if d % 2 else 1


def frobenius(p: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Frobenius coordinates (arms, legs) along the diagonal."""
    d, _ = durfee(p)
    cols = conjugate(p).parts
    arms = tuple(p.parts[i] - i - 1 for i in range(d))
    legs = tuple(cols[i] - i - 1 for i in range(d))
    return arms, legs


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Inverse of :func:`frobenius`; both sequences strictly decreasing, >= 0."""
    d = len(arms)
    if len(legs) != d:
        raise PartitionError("arms and legs must have the same length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(seq[k] <= seq[k + 1] for k in range(d - 1)):
            raise PartitionError(f"Frobenius coordinates must be strictly decreasing and >= 0: {seq}")
    rows = [arms[i] + i + 1 for i in range(d)]
    # rows above the Durfee square only meet the first d columns
    height = legs[0] + 1 if d else 0
    for i in range(d + 1, height + 1):
        rows.append(sum(1 for k in range(d) if legs[k] + k + 1 >= i))
    return Partition(tuple(rows))


def principal_hooks(p: Partition) -> list[int]:
    """Hook lengths of the diagonal boxes, largest first."""
    arms, legs = frobenius(p)
    return [a + b + 1 for a, b in zip(arms, legs)]


def double_distinct(d: Partition) -> Partition:
    """The doubled distinct partition of a partition with distinct parts.

    Row ``i`` of ``d`` is shifted right by ``i`` and ``d_i`` boxes are stacked
    in column ``i``; in Frobenius terms the arms are ``d_i`` and the legs
    ``d_i - 1``.
    """
    d = make_distinct(d.parts)
    return from_frobenius(d.parts, tuple(x - 1 for x in d.parts))


def undouble(p: Partition) -> Partition:
    """Recover the distinct partition behind a doubled distinct partition."""
    arms, legs = frobenius(p)
    if any(a != b + 1 for a, b in zip(arms, legs)):
        raise PartitionError(f"{p} is not doubled distinct")
    return Partition(tuple(arms))


def self_conjugate_from_hooks(hooks: Sequence[int]) -> Partition:
    """The self-conjugate partition with the given (odd, distinct) principal hooks."""
    hs = sorted(hooks, reverse=True)
    if any(h <= 0 or h % 2 == 0 for h in hs):
        raise PartitionError(f"principal hooks of a self-conjugate partition are odd: {hs}")
    half = [(h - 1) // 2 for h in hs]
    return from_frobenius(half, half)


def doubled_distinct_from_hooks(hooks: Sequence[int]) -> Partition:
    """The doubled distinct partition with the given (even, distinct) principal hooks."""
    hs = sorted(hooks, reverse=True)
    if any(h <= 0 or h % 2 for h in hs):
        raise PartitionError(f"principal hooks of a doubled distinct partition are even: {hs}")
    return double_distinct(make_distinct([h // 2 for h in hs]))


def classify(p: Partition) -> tuple[bool, bool]:
    """Return ``(self_conjugate, doubled_distinct)``."""
    arms, legs = frobenius(p)
    return arms == legs, all(a == b + 1 for a, b in zip(arms, legs))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    for parts in _parts(n, n if max_part is None else max_part, 0):
        yield Partition(parts)


def _parts(n: int, max_part: int, gap: int) -> Iterator[tuple[int, ...]]:
    # gap=0: non-increasing, gap=1: strictly decreasing
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _parts(n - first, first - gap, gap):
            yield (first,) + rest


def distinct_partitions(n: int) -> Iterator[Partition]:
    for parts in _parts(n, n, 1):
        yield Partition(parts)


def _self_conjugate(n: int) -> Iterator[Partition]:
    # self-conjugate partitions <-> partitions into distinct odd parts (their principal hooks)
    def odd_distinct(m: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        top = min(m, max_part)
        if top % 2 == 0:
            top -= 1
        for first in range(top, 0, -2):
            for rest in odd_distinct(m - first, first - 2):
                yield (first,) + rest

    found = [self_conjugate_from_hooks(h) for h in odd_distinct(n, n)]
    yield from sorted(found, reverse=True)


def _doubled_distinct(n: int) -> Iterator[Partition]:
    if n % 2:
        return
    found = [double_distinct(d) for d in distinct_partitions(n // 2)]
    yield from sorted(found, reverse=True)


def enumerate_partitions(kind: str, n: int) -> Iterator[Partition]:
    """Partitions of weight ``n`` in the class ``kind``.

    ``kind`` is one of ``"all"``, ``"distinct"``, ``"self_conjugate"``,
    ``"doubled_distinct"``.  Output is in lexicographically decreasing order.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    if kind == "all":
        return partitions(n)
    if kind == "distinct":
        return distinct_partitions(n)
    if kind == "self_conjugate":
        return _self_conjugate(n)
    if kind == "doubled_distinct":
        return _doubled_distinct(n)
    raise ValueError(f"unknown partition class: {kind!r}")
