"""Integer partitions, Young diagram statistics and restricted partition counts.

A partition is stored as a weakly decreasing tuple of positive integers
without trailing zeros.  :class:`Partition` is a ``tuple`` subclass, so any
function here also accepts plain tuples or lists, and results compare equal
to (and hash like) the corresponding plain tuples.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError


class Partition(tuple):
    """Immutable integer partition.

    >>> lam = Partition((4, 3, 1))
    >>> lam.size, lam.part(2), lam.part(9)
    (8, 3, 0)
    >>> str(lam.conjugate())
    '3,2,2,1'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise DomainError(f"partition parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated text form (``"4,3,1"``; ``""`` is empty)."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise DomainError(f"cannot parse partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {text!r}")
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), zero beyond the length."""
        return part(self, i)

    def conjugate(self) -> "Partition":
        return conjugate(self)


def as_partition(parts: Sequence[int]) -> Partition:
    if isinstance(parts, Partition):
        return parts
    if isinstance(parts, str):
        return Partition.parse(parts)
    return Partition(parts)


def part(lam: Sequence[int], i: int) -> int:
    if i < 1:
        raise DomainError(f"row index must be >= 1, got {i}")
    return lam[i - 1] if i <= len(lam) else 0


def padded(lam: Sequence[int], length: int) -> list[int]:
    """The parts of ``lam`` zero-padded (never truncated) to ``length``."""
    return list(lam) + [0] * (length - len(lam))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def cells(lam: Sequence[int]) -> Iterator[tuple[int, int]]:
    """All cells ``(i, j)`` of the Young diagram, 1-based, row by row."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def hook_and_content(lam: Sequence[int], cell: tuple[int, int]) -> tuple[int, int]:
    """Hook length and content of ``cell`` in the diagram of ``lam``."""
    i, j = cell
    if i < 1 or j < 1 or j > part(lam, i):
        raise DomainError(f"cell {cell} is not in the diagram of {tuple(lam)}")
    leg = sum(1 for r in lam[i:] if r >= j)
    return lam[i - 1] - j + leg + 1, j - i


def hook_lengths(lam: Sequence[int]) -> list[int]:
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(lam)]


def durfee(lam: Sequence[int]) -> int:
    d = 0
    while d < len(lam) and lam[d] >= d + 1:
        d += 1
    return d


def add(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    n = max(len(lam), len(mu))
    return Partition(a + b for a, b in zip(padded(lam, n), padded(mu, n)))


def union_intersection(lam: Sequence[int], mu: Sequence[int]) -> tuple[Partition, Partition]:
    n = max(len(lam), len(mu))
    a, b = padded(lam, n), padded(mu, n)
    return (Partition(max(x, y) for x, y in zip(a, b)),
            Partition(min(x, y) for x, y in zip(a, b)))


def is_self_conjugate(lam: Sequence[int]) -> bool:
    return tuple(lam) == tuple(conjugate(lam))


def principal_hooks(mu: Sequence[int]) -> Partition:
    """Lengths of the diagonal hooks ``h(i, i)`` for ``i <= durfee(mu)``.

    For self-conjugate ``mu`` these are ``2*mu_i - (2i - 1)``: distinct odd
    parts summing to ``|mu|``.
    """
    conj = conjugate(mu)
    return Partition(mu[i] + conj[i] - 2 * i - 1 for i in range(durfee(mu)))


def staircase(m: int) -> Partition:
    if m < 1:
        raise DomainError(f"staircase needs m >= 1, got {m}")
    return Partition(range(m, 0, -1))


def rectangle(rows: int, width: int) -> Partition:
    """The partition ``(width^rows)``."""
    return Partition([width] * rows if width > 0 else [])


def enumerate_partitions(n: int, max_length: int | None = None,
                         max_part: int | None = None) -> list[Partition]:
    """Partitions of ``n`` with optional length/part caps, reverse lexicographic.

    The order starts at ``(n)`` and ends at ``(1^n)``.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part,
                                              n if max_length is None else max_length)]


@lru_cache(maxsize=4096)
def _partitions(n: int, max_part: int, max_length: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_length == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_length - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _partition_counts(limit: int) -> tuple[int, ...]:
    counts = [1] + [0] * limit
    for k in range(1, limit + 1):
        for total in range(k, limit + 1):
            counts[total] += counts[total - k]
    return tuple(counts)


def count_partitions(n: int) -> int:
    """The number of partitions of ``n`` (0 for negative ``n``)."""
    if n < 0:
        return 0
    limit = 64
    while limit < n:
        limit *= 2
    return _partition_counts(limit)[n]


def count_partitions_minpart2(n: int) -> int:
    """The number of partitions of ``n`` with every part at least 2."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    return count_partitions(n) - count_partitions(n - 1)


def count_parts_in_set(k: int, allowed: Iterable[int]) -> int:
    """The number of partitions of ``k`` using only parts from ``allowed``."""
    if k < 0:
        return 0
    ways = [1] + [0] * k
    for p in sorted(set(allowed)):
        if p <= 0:
            raise DomainError(f"allowed parts must be positive, got {p}")
        for total in range(p, k + 1):
            ways[total] += ways[total - p]
    return ways[k]
