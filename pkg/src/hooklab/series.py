"""Truncated formal power series with exact rational coefficients.

A series stands for ``x**offset * (c_0 + c_1 x + ... + c_N x**N) + O(x**(offset+N+1))``
where ``offset`` is an exact rational (``1/24`` for the eta function).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

__all__ = [
    "SeriesError",
    "TruncatedSeries",
    "series",
    "power_product",
    "eta_power",
    "pochhammer_inf",
    "exp_cross_check",
    "sigma",
    "IdentityReport",
    "poly_identity_check",
    "sample_points",
    "format_series",
    "parse_series",
]

Number = int | Fraction


class SeriesError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class TruncatedSeries:
    offset: Fraction
    coeffs: tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "offset", _frac(self.offset))
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        """Index of the last known coefficient."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of ``x**(offset + k)``; beyond the order it is unknown."""
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise IndexError(f"coefficient {k} lies beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, n: int) -> TruncatedSeries:
        if n > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {n}")
        return TruncatedSeries(self.offset, self.coeffs[: n + 1])

    def _aligned(self, other: TruncatedSeries) -> tuple[int, int]:
        gap = other.offset - self.offset
        if gap.denominator != 1:
            raise SeriesError(f"offsets {self.offset} and {other.offset} differ by a non-integer")
        return int(gap), min(self.order, other.order + int(gap))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.offset, (other,) + (0,) * self.order)
        gap, n = self._aligned(other)
        if gap < 0:
            return other + self
        out = [self.coeffs[k] + (other.coeffs[k - gap] if k >= gap else 0) for k in range(n + 1)]
        return TruncatedSeries(self.offset, out)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = _frac(other)
            return TruncatedSeries(self.offset, [c * a for a in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return TruncatedSeries(self.offset + other.offset, out)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the leading coefficient must be nonzero."""
        a = self.coeffs
        if a[0] == 0:
            raise SeriesError("cannot invert a series with zero leading coefficient")
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            s = sum((a[i] * inv[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            inv.append(-s / a[0])
        return TruncatedSeries(-self.offset, inv)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self * (1 / _frac(other))
        return self * other.inverse()

    def __pow__(self, m: int) -> TruncatedSeries:
        if m < 0:
            return self.inverse() ** (-m)
        result = series([1], self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def terms(self) -> list[tuple[Fraction, Fraction]]:
        """``(exponent, coefficient)`` pairs, ascending, zeros included."""
        return [(self.offset + k, c) for k, c in enumerate(self.coeffs)]

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(offset={self.offset}, [{shown}{more}], order={self.order})"


def series(coeffs: Sequence[Number], order: int | None = None, offset: Number = 0) -> TruncatedSeries:
    """Series from a coefficient list, zero padded (or cut) to ``order``."""
    coeffs = list(coeffs)
    if order is None:
        order = len(coeffs) - 1
    coeffs = (coeffs + [0] * (order + 1))[: order + 1]
    return TruncatedSeries(_frac(offset), coeffs)


def _int_mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _euler(n: int) -> list[int]:
    # prod_{k>=1} (1 - x^k) by multiplying sparse factors in place
    c = [1] + [0] * n
    for k in range(1, n + 1):
        for i in range(n, k - 1, -1):
            c[i] -= c[i - k]
    return c


def _int_inverse(a: list[int], n: int) -> list[int]:
    # a[0] == 1 so the inverse stays integral
    inv = [1] + [0] * n
    for k in range(1, n + 1):
        inv[k] = -sum(a[i] * inv[k - i] for i in range(1, k + 1) if a[i])
    return inv


def power_product(m: int, n: int) -> TruncatedSeries:
    """``prod_{k>=1} (1 - x^k)**m`` up to ``x**n``, for any integer ``m``."""
    base = _euler(n)
    if m < 0:
        base = _int_inverse(base, n)
        m = -m
    result = [1] + [0] * n
    while m:
        if m & 1:
            result = _int_mul(result, base, n)
        m >>= 1
        if m:
            base = _int_mul(base, base, n)
    return series(result, n)


def eta_power(e: int, n: int) -> TruncatedSeries:
    """``eta(x)**e`` with its ``x**(e/24)`` prefactor kept in the offset."""
    s = power_product(e, n)
    return TruncatedSeries(Fraction(e, 24), s.coeffs)


def pochhammer_inf(a: int, n: int) -> TruncatedSeries:
    """``(x^a; x^a)_inf = prod_{j>=1} (1 - x^(a j))`` up to ``x**n``."""
    if a < 1:
        raise SeriesError("pochhammer base exponent must be positive")
    c = [1] + [0] * n
    for k in range(a, n + 1, a):
        for i in range(n, k - 1, -1):
            c[i] -= c[i - k]
    return series(c, n)


def sigma(k: int) -> int:
    """Sum of the divisors of ``k``."""
    return sum(d for d in range(1, k + 1) if k % d == 0)


def exp_cross_check(e: int, n: int) -> TruncatedSeries:
    """``prod (1 - x^k)**e`` computed as ``exp(-e * sum_k x^k / (k (1 - x^k)))``.

    The exponent equals ``-e * sum_m sigma(m)/m x^m``; the exponential is
    expanded through ``m f_m = sum_k k g_k f_{m-k}``.
    """
    g = [Fraction(0)] + [Fraction(-e * sigma(m), m) for m in range(1, n + 1)]
    f = [Fraction(1)]
    for m in range(1, n + 1):
        f.append(sum((k * g[k] * f[m - k] for k in range(1, m + 1)), Fraction(0)) / m)
    return series(f, n)


@dataclass
class IdentityReport:
    ok: bool
    order: int
    samples: list[int]
    mismatch: tuple[int, int, Fraction, Fraction] | None = None  # (t, m, lhs, rhs)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"identity holds to order {self.order} at {len(self.samples)} sample points"
        t, m, a, b = self.mismatch
        return f"mismatch at t={t}, coefficient {m}: lhs={a}, rhs={b}"


def sample_points(count: int) -> list[int]:
    """``count`` distinct integers centred on zero: 0, 1, -1, 2, -2, ..."""
    return sorted(((k + 1) // 2) * (1 if k % 2 else -1) for k in range(count))


def _both(lhs_at, rhs_at, t):
    return lhs_at(t), rhs_at(t)


def poly_identity_check(
    lhs_at: Callable[[int], TruncatedSeries],
    rhs_at: Callable[[int], TruncatedSeries],
    n: int,
    degree_bound: int | Callable[[int], int],
    samples: Iterable[int] | None = None,
    jobs: int = 1,
) -> IdentityReport:
    """Decide whether two series families agree as polynomials in ``t``.

    Every coefficient of ``x**m`` (``m <= n``) on each side must be a
    polynomial in ``t`` of degree at most ``degree_bound(m)``; agreement at
    ``max_m degree_bound(m) + 1`` distinct integers then forces equality.
    ``jobs > 1`` evaluates sample points in worker processes (the callables
    must be picklable); results do not depend on ``jobs``.
    """
    bound = degree_bound if callable(degree_bound) else (lambda m: degree_bound)
    need = max(bound(m) for m in range(n + 1)) + 1
    pts = sample_points(need) if samples is None else sorted(set(samples))
    if len(pts) < need:
        raise SeriesError(f"need {need} distinct sample points, got {len(pts)}")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(_both, [lhs_at] * len(pts), [rhs_at] * len(pts), pts))
    else:
        pairs = [_both(lhs_at, rhs_at, t) for t in pts]
    for t, (a, b) in zip(pts, pairs):
        if a.offset != b.offset:
            raise SeriesError(f"offsets differ at t={t}: {a.offset} vs {b.offset}")
        for m in range(n + 1):
            if a[m] != b[m]:
                return IdentityReport(False, n, pts, (t, m, a[m], b[m]))
    return IdentityReport(True, n, pts)


def format_series(s: TruncatedSeries) -> str:
    """One ``exponent<TAB>numerator/denominator`` line per coefficient."""
    return "".join(f"{e}\t{c.numerator}/{c.denominator}\n" for e, c in s.terms())


def parse_series(text: str) -> TruncatedSeries:
    rows = [line.split("\t") for line in text.splitlines() if line.strip()]
    exps = [Fraction(e) for e, _ in rows]
    if any(b - a != 1 for a, b in zip(exps, exps[1:])):
        raise SeriesError("exponents must be consecutive")
    return TruncatedSeries(exps[0], [Fraction(c) for _, c in rows])
