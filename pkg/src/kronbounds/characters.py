"""Irreducible characters of S_n and dimension formulas.

Character values come from the Murnaghan-Nakayama rule, peeling cycle
lengths in decreasing order.  Worst-case cost is exponential (the problem is
#P-hard); in practice single values are cheap up to about n = 40.
"""

from __future__ import annotations

import threading
from collections import Counter
from math import factorial, prod
from typing import Sequence

from . import _backend
from .errors import ConsistencyError, DomainError
from .partitions import Partition, as_partition, cells, conjugate, hook_lengths


class CharacterStore:
    """Memo table of exact values ``chi^shape[cycle_type]``.

    Entries are computed at most once per key in the single-threaded case;
    concurrent callers may duplicate work but only ever store identical
    values.  When ``max_entries`` is exceeded the table is flushed.
    """

    def __init__(self, max_entries: int = 2_000_000, kernels=None):
        self.max_entries = max_entries
        self.kernels = kernels if kernels is not None else _backend.kernels
        self._values: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._tables: dict[tuple[int, ...], dict] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key) -> bool:
        shape, cycle = key
        return (tuple(shape), tuple(cycle)) in self._values

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self._tables.clear()

    def value(self, shape: Sequence[int], cycle: Sequence[int]) -> int:
        key = (tuple(shape), tuple(cycle))
        hit = self._values.get(key)
        if hit is not None:
            return hit
        table = self._tables.get(key[1])
        if table is None:
            table = self._tables.setdefault(key[1], {})
        result = self.kernels.mn_character(key[0], key[1], table)
        if len(self._values) >= self.max_entries:
            self.clear()
        self._values[key] = result
        return result


default_store = CharacterStore()


def character(lam: Sequence[int], alpha: Sequence[int],
              store: CharacterStore | None = None) -> int:
    """``chi^lam`` evaluated on the conjugacy class of cycle type ``alpha``."""
    lam, alpha = as_partition(lam), as_partition(alpha)
    if lam.size != alpha.size:
        raise DomainError(f"size mismatch: |{lam}| = {lam.size} but |{alpha}| = {alpha.size}")
    return (store or default_store).value(lam, alpha)


def dimension(lam: Sequence[int]) -> int:
    """``f^lam`` by the hook length formula."""
    lam = as_partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam))


def gl_dimension(lam: Sequence[int], m: int) -> int:
    """Dimension of the GL_m irreducible indexed by ``lam`` (hook-content formula)."""
    lam = as_partition(lam)
    if len(lam) > m:
        return 0
    num = prod(m + j - i for i, j in cells(lam))
    den = prod(hook_lengths(lam))
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"hook-content quotient not integral for {lam}, m={m}")
    return q


def z_factor(alpha: Sequence[int]) -> int:
    """Centralizer order ``prod_j j^{m_j} m_j!`` of a permutation of cycle type alpha."""
    return prod(j ** m * factorial(m) for j, m in Counter(alpha).items())


def class_size(alpha: Sequence[int]) -> int:
    alpha = as_partition(alpha)
    return factorial(alpha.size) // z_factor(alpha)


def sign(alpha: Sequence[int]) -> int:
    """Sign of a permutation with cycle type ``alpha``."""
    return -1 if (sum(alpha) - len(alpha)) % 2 else 1


__all__ = [
    "CharacterStore", "Partition", "character", "class_size", "default_store",
    "dimension", "gl_dimension", "sign", "z_factor",
]
