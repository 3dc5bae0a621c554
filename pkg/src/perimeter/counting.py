"""Recurrences and closed formulas for counts over partitions of fixed perimeter."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "CountTable",
    "IntPolynomial",
    "table_A",
    "table_B",
    "table_C",
    "extraordinary_count",
    "h_poly",
    "h_zero_pattern",
    "a_odd",
    "a_even",
    "sum_dif",
    "fibonacci",
]


@dataclass(frozen=True)
class CountTable:
    """Row ``n`` of a triangular count table, ``values[k]`` for each ``k``."""

    n: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.values.get(k, 0)

    def as_list(self) -> list[int]:
        if not self.values:
            return []
        return [self[k] for k in range(min(self.values), max(self.values) + 1)]

    def total(self) -> int:
        return sum(self.values.values())


class IntPolynomial(tuple):
    """Univariate integer polynomial in ``p``, coefficients from degree 0 up."""

    __slots__ = ()

    def __new__(cls, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    def __call__(self, p):
        acc = 0
        for c in reversed(self):
            acc = acc * p + c
        return acc

    def __add__(self, other):
        m = max(len(self), len(other))
        return IntPolynomial(
            (self[i] if i < len(self) else 0) + (other[i] if i < len(other) else 0)
            for i in range(m)
        )

    def __neg__(self):
        return IntPolynomial(-c for c in self)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            for j, b in enumerate(other):
                out[i + j] += a * b
        return IntPolynomial(out)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def __repr__(self):
        return f"IntPolynomial({list(self)})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self):
            if c == 0:
                continue
            mono = "" if k == 0 else ("p" if k == 1 else f"p^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _check_n(n):
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")


@lru_cache(maxsize=None)
def _rep_row(n: int) -> tuple:
    # A(n,k) = A(n-1,k) + A(n-1,k-1) + A(n-2,k) - A(n-2,k-1), A(1,0) = 1,
    # with zero rows for n <= 0
    if n <= 0:
        return ()
    if n == 1:
        return (1,)
    r1, r2 = _rep_row(n - 1), _rep_row(n - 2)

    def at(row, k):
        return row[k] if 0 <= k < len(row) else 0

    return tuple(
        at(r1, k) + at(r1, k - 1) + at(r2, k) - at(r2, k - 1) for k in range(n)
    )


def _row(n):
    for m in range(1, n):
        _rep_row(m)
    return _rep_row(n)


def table_A(n: int) -> CountTable:
    """Number of partitions of perimeter ``n`` with ``k`` repeated parts, by recurrence."""
    _check_n(n)
    return CountTable(n, dict(enumerate(_row(n))))


def table_B(n: int) -> CountTable:
    """Number of partitions of perimeter ``n`` with ``k`` even parts.

    Same recurrence and initial value as :func:`table_A`, so the rows are
    generated by the same function; the enumeration tests check both
    statistics against it independently.
    """
    _check_n(n)
    return CountTable(n, dict(enumerate(_row(n))))


@lru_cache(maxsize=None)
def extraordinary_count(n: int, k: int) -> int:
    """``C(n, k)``: the number of ``k``-extraordinary subsets of ``{1..n}``.

    Grimaldi's recursion ``C(n,k) = C(n-1,k) + sum_{i=1..k} C(n-k-2+i, i)``
    started from ``C(1,1) = 1``.  The recursion alone misses the diagonal,
    so ``C(n,n) = 1`` (the full set) is used as a second boundary.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    if k == n:
        return 1
    return extraordinary_count(n - 1, k) + sum(
        extraordinary_count(n - k - 2 + i, i) for i in range(1, k + 1)
    )


def table_C(n: int) -> CountTable:
    _check_n(n)
    for m in range(1, n):
        extraordinary_count(m, 1)
    return CountTable(n, {k: extraordinary_count(n, k) for k in range(1, n + 1)})


@lru_cache(maxsize=None)
def _h(n: int) -> IntPolynomial:
    if n == 1:
        return IntPolynomial([-1])
    if n == 2:
        return IntPolynomial([-1, 1])
    return IntPolynomial([1, -1]) * (_h(n - 1) - _h(n - 2))


def h_poly(n: int) -> IntPolynomial:
    """Signed distribution of ``rep`` over perimeter ``n``, each partition
    weighted by ``(-1)**length``.

    ``h_n = (1 - p)(h_{n-1} - h_{n-2})`` with ``h_1 = -1``, ``h_2 = p - 1``.
    """
    _check_n(n)
    for m in range(1, n):
        _h(m)
    return _h(n)


def h_zero_pattern(n: int) -> int:
    """Predicted ``h_n(0)``: ``(-1)**m`` when ``n`` is ``3m - 2`` or ``3m - 1``, else 0."""
    _check_n(n)
    if n % 3 == 0:
        return 0
    m = (n + 2) // 3
    return (-1) ** m


def a_odd(n: int) -> int:
    """Total number of odd parts over all partitions of perimeter ``n``."""
    if n < 2:
        raise DomainError(f"closed formula holds for n >= 2, got {n}")
    return ((n + 2) << n) >> 3


def a_even(n: int) -> int:
    """Total number of even parts over all partitions of perimeter ``n``."""
    if n < 2:
        raise DomainError(f"closed formula holds for n >= 2, got {n}")
    return (n << n) >> 3


def sum_dif(n: int, d: int, allow_degenerate: bool = False) -> int:
    """Total of ``dif_d`` over the partitions of perimeter ``n``.

    The closed formula ``(n-1) 2^(n-2) - (n-d-1) 2^(n-d-2)`` is used for
    ``1 <= d <= n - 1``.  For ``d >= n`` every adjacent gap is below ``d``
    and the total is ``(n-1) 2^(n-2)``; that range must be requested with
    ``allow_degenerate``.
    """
    _check_n(n)
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    if d >= n:
        if not allow_degenerate:
            raise DomainError(f"closed formula is stated for d <= n-1, got n={n}, d={d}")
        return ((n - 1) << n) >> 2
    # exponent n-d-2 may be -1 only when its factor n-d-1 is 0
    return (((n - 1) << n) >> 2) - (((n - d - 1) << n) >> (d + 2))


def fibonacci(n: int) -> int:
    _check_n(n)
    a, b = 1, 1
    for _ in range(n - 2):
        a, b = b, a + b
    return b if n > 1 else a
