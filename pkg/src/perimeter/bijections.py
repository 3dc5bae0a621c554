"""The recursive bijections on boundary words and the injection ``xi``.

``phi_d`` permutes the words of each length.  It is defined by recursion
on the word:

* ``00u``: take the image of ``0u`` and insert a ``1`` right after its
  leading ``0``;
* ``01u``: cut the word just before its ``(d+1)``-th ``0`` (or keep all
  of it if there are fewer zeros), replace the leading ``01`` of the head
  by ``00`` and append the image of the tail;

with ``"" -> ""`` and ``"01" -> "01"`` as base cases.  ``d = 1`` gives the
map that carries ``rep`` to ``even``.

Both directions are evaluated with a loop over suffixes rather than
recursion, so the call depth never depends on the word length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, DomainError
from .partitions import (
    BoundarySequence,
    LabeledPartition,
    Partition,
    from_bits,
    to_bits,
)
from .enumeration import enum_labeled_D, enum_labeled_M

__all__ = [
    "OrbitReport",
    "phi_d",
    "phi_d_inverse",
    "phi_on_partition",
    "phi_inverse_on_partition",
    "orbit",
    "xi",
    "xi_complement",
    "xi_complement_direct",
    "xi_complement_literal",
    "xi_complement_by_difference",
]


def _validate(w, d):
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    if isinstance(w, BoundarySequence):
        return str(w)
    return str(BoundarySequence(w))


def _nth_zero(w: str, count: int, start: int = 0) -> int:
    """Index of the ``count``-th ``0`` of ``w`` at or after ``start``, else ``len(w)``."""
    pos = start - 1
    for _ in range(count):
        pos = w.find("0", pos + 1)
        if pos < 0:
            return len(w)
    return pos


def _phi(w: str, d: int) -> str:
    out = []
    pos = 0
    n = len(w)
    while pos < n:
        # suffix is 0^a 1 v with a >= 1; unrolling the 00-case a-1 times
        # reduces it to the 01-case applied to 0 1 v
        one = w.find("1", pos)
        a = one - pos
        if one == n - 1:
            # 0 1 v with v empty is the base case "01"
            out.append("0" + "1" * a)
            break
        # the core word is "0" + w[one:]; its (d+1)-th zero is the d-th zero
        # from `one` onward
        cut = _nth_zero(w, d, one)
        out.append("0" + "1" * (a - 1) + "0" + w[one + 1:cut])
        pos = cut
    return "".join(out)


def _phi_inv(w: str, d: int) -> str:
    out = []
    pos = 0
    n = len(w)
    while pos < n:
        # suffix is 0 1^b y, where y is empty or starts with 0
        zero = w.find("0", pos + 1)
        b = (zero if zero >= 0 else n) - pos - 1
        if zero < 0:
            out.append("0" * b + "1")
            break
        # b applications of the 01-case reduce to 0y, which starts with 00;
        # cut 0y at its (d+2)-th zero, i.e. the (d+1)-th zero of y
        cut = _nth_zero(w, d + 1, zero)
        out.append("0" * (b + 1) + "1" + w[zero + 1:cut])
        pos = cut
    return "".join(out)


def phi_d(w, d: int = 1) -> BoundarySequence:
    """Image of the boundary word ``w`` under the bijection ``phi_d``."""
    return str.__new__(BoundarySequence, _phi(_validate(w, d), d))


def phi_d_inverse(w, d: int = 1) -> BoundarySequence:
    """Inverse of :func:`phi_d`."""
    return str.__new__(BoundarySequence, _phi_inv(_validate(w, d), d))


def phi_on_partition(lam, d: int = 1) -> Partition:
    """``phi_d`` transported to partitions through the boundary word."""
    if not lam:
        raise DomainError("phi is applied to nonempty partitions")
    return from_bits(phi_d(to_bits(lam), d))


def phi_inverse_on_partition(lam, d: int = 1) -> Partition:
    if not lam:
        raise DomainError("phi is applied to nonempty partitions")
    return from_bits(phi_d_inverse(to_bits(lam), d))


@dataclass(frozen=True)
class OrbitReport:
    start: BoundarySequence
    cycle: tuple
    length: int


def orbit(w, d: int = 1) -> OrbitReport:
    """The cycle of ``w`` under repeated application of ``phi_d``."""
    start = _validate(w, d)
    if not start:
        raise DomainError("orbit of the empty word")
    cap = 1 << (len(start) - 2)
    cycle = [start]
    cur = _phi(start, d)
    while cur != start:
        if len(cycle) >= cap:
            raise RuntimeError(
                f"internal error: no return to {start} after {cap} steps of phi_{d}"
            )
        cycle.append(cur)
        cur = _phi(cur, d)
    return OrbitReport(
        start=BoundarySequence(start),
        cycle=tuple(BoundarySequence(c) for c in cycle),
        length=len(cycle),
    )


def _residue_is_one(a: int, d: int) -> bool:
    return a % (d + 1) == 1


def xi(lp: LabeledPartition, d: int) -> LabeledPartition:
    """Inject a labeled partition whose starred part is not 1 mod ``d+1``
    into the set of labeled partitions starred at a small gap.

    Write the starred part as ``l*(d+1) + k`` with ``2 <= k <= d+1`` and
    treat the part after the last one as ``0``.  If the gap below the star
    is at most ``k - 2`` the star moves down one position.  Otherwise the
    parts up to the star lose one cell each and a new part ``l*(d+1) + 1``
    is inserted right after the star, which then moves onto it.
    """
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    lam, i = lp.partition, lp.star
    if not 1 <= i <= len(lam):
        raise PreconditionError(f"star {i} out of range")
    part = lam[i - 1]
    if _residue_is_one(part, d):
        raise PreconditionError(
            f"starred part {part} is 1 mod {d + 1}; not a member of M_(n,{d})"
        )
    k = (part - 2) % (d + 1) + 2
    l = (part - k) // (d + 1)
    below = lam[i] if i < len(lam) else 0
    if part - below <= k - 2:
        return LabeledPartition(lam, i + 1)
    new = tuple(a - 1 for a in lam[:i]) + (l * (d + 1) + 1,) + lam[i:]
    return LabeledPartition(Partition._trusted(new), i + 1)


def _crosses_residue_one(upper: int, lower: int, d: int) -> bool:
    """True when some integer ``== 1 (mod d+1)`` lies in ``(lower, upper]``."""
    return (upper - 1) // (d + 1) > (lower - 1) // (d + 1)


def xi_complement_literal(n: int, d: int) -> set:
    """Elements of D_(n,d) whose starred part is not 1 mod ``d+1`` while the
    part above it is.

    A shorter description of the complement of the image of ``xi``.  It
    is exact for ``d <= 2`` only; from ``d = 3`` on it misses
    elements such as ``(6, 4*)`` for ``n = 7``, where ``5 == 1 (mod 4)``
    sits strictly between the two parts.
    """
    return {
        lp
        for lp in enum_labeled_D(n, d)
        if _residue_is_one(lp.partition[lp.star - 2], d)
        and not _residue_is_one(lp.starred_part, d)
    }


def xi_complement_direct(n: int, d: int) -> set:
    """Elements of D_(n,d) whose starred part is not 1 mod ``d+1`` and for
    which a value ``== 1 (mod d+1)`` lies above the starred part and at or
    below the part before it."""
    return {
        lp
        for lp in enum_labeled_D(n, d)
        if not _residue_is_one(lp.starred_part, d)
        and _crosses_residue_one(lp.partition[lp.star - 2], lp.starred_part, d)
    }


def xi_complement_by_difference(n: int, d: int) -> set:
    image = {xi(lp, d) for lp in enum_labeled_M(n, d)}
    return set(enum_labeled_D(n, d)) - image


def xi_complement(n: int, d: int) -> set:
    """``D_(n,d)`` minus the image of ``xi``.

    Computed both from the residue characterization and as a plain set
    difference; a disagreement raises.
    """
    direct = xi_complement_direct(n, d)
    diff = xi_complement_by_difference(n, d)
    if direct != diff:
        raise RuntimeError(
            f"xi complement mismatch at n={n}, d={d}: "
            f"{sorted(map(str, direct ^ diff))[:5]}"
        )
    return direct
