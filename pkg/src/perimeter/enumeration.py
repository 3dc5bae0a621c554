"""Exhaustive generators over the finite families that get quantified over.

Every generator is deterministic and duplicate-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import DomainError
from .partitions import LabeledPartition, Partition

__all__ = [
    "FAMILIES",
    "EnumerationRequest",
    "enum_perimeter",
    "perimeter_word",
    "enum_words",
    "enum_size",
    "enum_extraordinary",
    "enum_labeled_D",
    "enum_labeled_M",
    "run_request",
]

FAMILIES = ("perimeter", "size", "extraordinary", "labeled-d", "labeled-m")


def _check_positive(name, value):
    if value is None or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value}")


def perimeter_word(n: int, index: int) -> str:
    """The ``index``-th word of perimeter ``n`` in lexicographic order.

    The ``n - 1`` free middle bits are ``index`` written in binary, most
    significant bit first.
    """
    if n == 1:
        return "01"
    return "0" + format(index, "b").zfill(n - 1) + "1"


def enum_words(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[str]:
    """Boundary words of perimeter ``n``, optionally restricted to an index range."""
    _check_positive("n", n)
    total = 1 << (n - 1)
    stop = total if stop is None else min(stop, total)
    if n == 1:
        if start < stop:
            yield "01"
        return
    width = n - 1
    for index in range(start, stop):
        yield "0" + format(index, "b").zfill(width) + "1"


def _decode(word: str) -> Partition:
    parts = []
    zeros = 0
    for c in word:
        if c == "0":
            zeros += 1
        else:
            parts.append(zeros)
    parts.reverse()
    return Partition._trusted(parts)


def enum_perimeter(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Partition]:
    """All ``2**(n-1)`` partitions with perimeter ``n``, in lexicographic
    order of their boundary words."""
    for word in enum_words(n, start, stop):
        yield _decode(word)


def enum_size(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    _check_positive("n", n)
    # standard successor rule on the descending part list
    parts = [n]
    while True:
        yield Partition._trusted(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        a = parts.pop() - 1
        rest = a + 1 + ones
        while rest >= a:
            parts.append(a)
            rest -= a
        if rest:
            parts.append(rest)


def enum_extraordinary(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Subsets ``S`` of ``{1..n}`` whose size equals their ``k``-th smallest element.

    Subsets are sorted tuples, grouped by size.
    """
    _check_positive("n", n)
    if k is None or not 1 <= k <= n:
        raise DomainError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    for s in range(k, n + 1):
        for low in combinations(range(1, s), k - 1):
            for high in combinations(range(s + 1, n + 1), s - k):
                yield low + (s,) + high


def enum_labeled_D(n: int, d: int) -> Iterator[LabeledPartition]:
    """Pairs ``(lam, i)`` in H_n with ``2 <= i`` and ``lam[i-1] - lam[i] < d`` (1-based)."""
    _check_positive("n", n)
    _check_positive("d", d)
    for lam in enum_perimeter(n):
        for i in range(1, len(lam)):
            if lam[i - 1] - lam[i] < d:
                yield LabeledPartition(lam, i + 1)


def enum_labeled_M(n: int, d: int) -> Iterator[LabeledPartition]:
    """Pairs ``(lam, i)`` in H_n whose starred part is not 1 modulo ``d + 1``."""
    _check_positive("n", n)
    _check_positive("d", d)
    for lam in enum_perimeter(n):
        for i, a in enumerate(lam, 1):
            if a % (d + 1) != 1:
                yield LabeledPartition(lam, i)


@dataclass(frozen=True)
class EnumerationRequest:
    family: str
    n: int
    d: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        wants_d = self.family in ("labeled-d", "labeled-m")
        wants_k = self.family == "extraordinary"
        if wants_d != (self.d is not None):
            raise DomainError(f"family {self.family!r} {'needs' if wants_d else 'takes no'} d")
        if wants_k != (self.k is not None):
            raise DomainError(f"family {self.family!r} {'needs' if wants_k else 'takes no'} k")


def run_request(req: EnumerationRequest) -> Iterator:
    if req.family == "perimeter":
        return enum_perimeter(req.n)
    if req.family == "size":
        return enum_size(req.n)
    if req.family == "extraordinary":
        return enum_extraordinary(req.n, req.k)
    if req.family == "labeled-d":
        return enum_labeled_D(req.n, req.d)
    return enum_labeled_M(req.n, req.d)
