"""Partitions, labeled partitions, the boundary 01-word codec and the
partition statistics.

A partition is stored as its weakly decreasing tuple of parts.  Its
boundary word is read along the Young diagram from the bottom-left
corner to the top-right corner, writing ``1`` for a vertical edge and
``0`` for a horizontal one; the word is kept left-to-right, ``w_0``
first, so ``(6, 3, 3, 1)`` encodes as ``"0100110001"``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, NamedTuple

from .errors import CodecError, DomainError

__all__ = [
    "Partition",
    "BoundarySequence",
    "LabeledPartition",
    "parse_partition",
    "parse_labeled",
    "format_partition",
    "format_labeled",
    "perimeter",
    "to_bits",
    "from_bits",
    "stat_rep",
    "stat_even",
    "stat_dist",
    "stat_rep_star",
    "stat_even_star",
    "stat_dif",
    "stat_mod",
    "stat_mod_prime",
    "bits_length",
    "bits_rep",
    "bits_even",
    "bits_dif",
    "bits_mod_prime",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    The empty partition is allowed so that the codec and the recursive
    maps have a base case; the statistics reject it.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(a) for a in parts)
        for i, a in enumerate(parts):
            if a < 1:
                raise DomainError(f"parts must be positive, got {a}")
            if i and parts[i - 1] < a:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        return tuple.__new__(cls, parts)

    def __repr__(self):
        return f"Partition({format_partition(self)!r})"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def perimeter(self) -> int:
        return perimeter(self)

    def multiplicities(self) -> dict[int, int]:
        """Map each part value ``i`` to ``m_i``, its number of occurrences."""
        return dict(sorted(Counter(self).items()))


class BoundarySequence(str):
    """A 01-word ``w_0 ... w_n`` with ``w_0 = 0`` and ``w_n = 1`` (or empty)."""

    __slots__ = ()

    def __new__(cls, bits=""):
        if not isinstance(bits, str):
            bits = "".join(str(int(b)) for b in bits)
        if bits.strip("01"):
            raise CodecError(f"not a 01-word: {bits!r}")
        if bits and (bits[0] != "0" or bits[-1] != "1"):
            raise CodecError(f"boundary word must start with 0 and end with 1: {bits!r}")
        return super().__new__(cls, bits)

    def __repr__(self):
        return f"BoundarySequence({str(self)!r})"

    @property
    def n(self) -> int:
        """Perimeter of the encoded partition."""
        return len(self) - 1

    def to_list(self) -> list[int]:
        return [int(c) for c in self]


class LabeledPartition(NamedTuple):
    """A partition with its ``star``-th part (1-based) marked."""

    partition: Partition
    star: int

    def __str__(self):
        return format_labeled(self)

    @classmethod
    def make(cls, parts, star: int) -> "LabeledPartition":
        lam = parts if isinstance(parts, Partition) else Partition(parts)
        if not 1 <= star <= len(lam):
            raise DomainError(f"star {star} out of range for {format_partition(lam)}")
        return cls(lam, star)

    @property
    def starred_part(self) -> int:
        return self.partition[self.star - 1]


# -- text forms ---------------------------------------------------------------


def format_partition(lam) -> str:
    return ",".join(str(a) for a in lam)


def parse_partition(text: str) -> Partition:
    """Parse ``"6,3,3,1"``; the empty string gives the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"cannot parse partition {text!r}") from None


def format_labeled(lp: LabeledPartition) -> str:
    return ",".join(
        f"{a}*" if i == lp.star else str(a) for i, a in enumerate(lp.partition, 1)
    )


def parse_labeled(text: str) -> LabeledPartition:
    """Parse ``"4,3*,1"``: exactly one part carries a trailing star."""
    tokens = [tok.strip() for tok in text.strip().split(",")]
    stars = [i for i, tok in enumerate(tokens, 1) if tok.endswith("*")]
    if len(stars) != 1 or text.count("*") != 1:
        raise DomainError(f"labeled partition needs exactly one star: {text!r}")
    try:
        parts = [int(tok.removesuffix("*")) for tok in tokens]
    except ValueError:
        raise DomainError(f"cannot parse labeled partition {text!r}") from None
    return LabeledPartition.make(parts, stars[0])


# -- codec --------------------------------------------------------------------


def _require_nonempty(lam):
    if not lam:
        raise DomainError("statistic undefined on the empty partition")


def perimeter(lam) -> int:
    """Largest part plus number of parts minus one."""
    _require_nonempty(lam)
    return lam[0] + len(lam) - 1


def to_bits(lam) -> BoundarySequence:
    """Boundary word of ``lam``; the empty partition maps to the empty word."""
    out = []
    prev = 0
    for a in reversed(lam):
        out.append("0" * (a - prev))
        out.append("1")
        prev = a
    return str.__new__(BoundarySequence, "".join(out))


def from_bits(w) -> Partition:
    """Inverse of :func:`to_bits`.

    The ``j``-th ``1`` from the left is a part equal to the number of
    ``0``s before it.
    """
    if not isinstance(w, BoundarySequence):
        w = BoundarySequence(w)
    parts = []
    zeros = 0
    for c in w:
        if c == "0":
            zeros += 1
        else:
            parts.append(zeros)
    parts.reverse()
    return Partition._trusted(parts)


# -- statistics ---------------------------------------------------------------


def stat_rep(lam) -> int:
    """Number of indices ``i`` with ``lam[i] == lam[i+1]``."""
    _require_nonempty(lam)
    return sum(1 for a, b in zip(lam, lam[1:]) if a == b)


def stat_even(lam) -> int:
    _require_nonempty(lam)
    return sum(1 for a in lam if a % 2 == 0)


def stat_dist(lam) -> int:
    """Number of distinct part values."""
    _require_nonempty(lam)
    return len(set(lam))


def stat_rep_star(lam) -> int:
    """Number of distinct part values occurring at least twice."""
    _require_nonempty(lam)
    return len({a for a, b in zip(lam, lam[1:]) if a == b})


def stat_even_star(lam) -> int:
    """Number of distinct even part values."""
    _require_nonempty(lam)
    return len({a for a in lam if a % 2 == 0})


def stat_dif(lam, d: int) -> int:
    """Number of adjacent pairs whose difference is less than ``d``."""
    _require_nonempty(lam)
    _check_d(d)
    return sum(1 for a, b in zip(lam, lam[1:]) if a - b < d)


def _check_d(d):
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")


def stat_mod(lam, d: int) -> int:
    """Number of parts congruent to 1 modulo ``d + 1``."""
    _require_nonempty(lam)
    _check_d(d)
    return sum(1 for a in lam if a % (d + 1) == 1)


def stat_mod_prime(lam, d: int) -> int:
    """Number of parts not congruent to 1 modulo ``d + 1``."""
    return len(lam) - stat_mod(lam, d)


# -- the same statistics read directly off a boundary word ----------------------
#
# These follow the positional formulas (index i runs over 1..n of w_0..w_n)
# and exist so the part-level definitions can be cross-checked.


def bits_length(w: str) -> int:
    return w.count("1")


def bits_rep(w: str) -> int:
    return sum(1 for i in range(1, len(w)) if w[i] == w[i - 1] == "1")


def bits_even(w: str) -> int:
    count = 0
    zeros = 0
    for c in w:
        if c == "0":
            zeros += 1
        elif zeros % 2 == 0:
            count += 1
    return count


def bits_dif(w: str, d: int) -> int:
    """Pairs of 1s at positions ``i < i + k`` (``1 <= k <= d``) with only 0s between."""
    ones = [i for i, c in enumerate(w) if c == "1"]
    return sum(1 for i, j in zip(ones, ones[1:]) if j - i <= d)


def bits_mod_prime(w: str, d: int) -> int:
    """1s at positions ``2 <= i`` preceded by a number of 0s not ``== 1 (mod d+1)``."""
    count = 0
    zeros = 0
    for i, c in enumerate(w):
        if c == "0":
            zeros += 1
        elif i >= 2 and zeros % (d + 1) != 1:
            count += 1
    return count
