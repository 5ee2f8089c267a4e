"""Kronecker coefficients by two independent routes.

``kronecker`` averages triple products of characters over conjugacy
classes.  ``kronecker_alternating`` never touches characters: it is the
signed sum, over three permutations, of counts of 3-dimensional contingency
arrays whose margins are staircase-shifted copies of the input partitions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

from . import _backend
from .characters import CharacterStore, default_store, z_factor
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .partitions import Partition, as_partition, conjugate, enumerate_partitions

DEFAULT_MAX_TERMS = 10**12

_ca_cache: dict[tuple, int] = {}
_CA_CACHE_LIMIT = 500_000


def _common_size(*parts: Partition) -> int:
    sizes = {p.size for p in parts}
    if len(sizes) != 1:
        shown = ", ".join(f"|{p}|={p.size}" for p in parts)
        raise DomainError(f"partitions must have equal size ({shown})")
    return sizes.pop()


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
              store: CharacterStore | None = None) -> int:
    """``g(lam, mu, nu)`` from the class-sum character formula."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = _common_size(lam, mu, nu)
    if n == 0:
        return 1
    store = store or default_store
    nfact = factorial(n)
    total = 0
    for alpha in enumerate_partitions(n):
        a = store.value(lam, alpha)
        if not a:
            continue
        b = store.value(mu, alpha)
        if not b:
            continue
        c = store.value(nu, alpha)
        if c:
            total += (nfact // z_factor(alpha)) * a * b * c
    g, rem = divmod(total, nfact)
    if rem:
        raise ConsistencyError(f"character sum for {lam}, {mu}, {nu} is not divisible by {n}!")
    return g


@dataclass(frozen=True)
class ContingencySpec:
    """Three margin vectors of a 3-dimensional array, plus the 0/1 restriction."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    binary: bool = False

    def count(self) -> int:
        return count_contingency(self.alpha, self.beta, self.gamma, binary=self.binary)


def _canonical_margins(alpha, beta, gamma):
    """Sorted, zero-free margins; ``None`` when no array can exist."""
    margins = []
    for vec in (alpha, beta, gamma):
        if any(v < 0 for v in vec):
            return None
        margins.append(tuple(sorted((int(v) for v in vec if v), reverse=True)))
    if len({sum(m) for m in margins}) != 1:
        return None
    # the slice axis is the longest margin: fewer, larger cross-sections
    margins.sort(key=lambda m: (len(m), m), reverse=True)
    return tuple(margins)


def count_contingency(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int],
                      binary: bool = False) -> int:
    """Number of 3-dimensional arrays with the given 2-dimensional marginal sums.

    Margins may be arbitrary integer vectors: order and zero entries do not
    change the count, and a negative entry makes it 0.
    """
    canon = _canonical_margins(alpha, beta, gamma)
    if canon is None:
        return 0
    key = canon + (binary,)
    hit = _ca_cache.get(key)
    if hit is None:
        hit = _backend.kernels.count_arrays(*canon, binary)
        if len(_ca_cache) >= _CA_CACHE_LIMIT:
            _ca_cache.clear()
        _ca_cache[key] = hit
    return hit


def alternating_terms(lam: Sequence[int]) -> Iterator[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """Permutations ``sigma`` of ``S_len(lam)`` whose shifted margin is nonnegative.

    Yields ``(sigma, sign, lam + delta - sigma.delta)`` with ``sigma`` one-based.
    Permutations giving a negative entry contribute no arrays and are skipped.
    """
    a = len(lam)
    used = [False] * (a + 1)
    sigma: list[int] = []

    def walk(i: int, inversions: int):
        if i > a:
            vec = tuple(lam[k] - (k + 1) + sigma[k] for k in range(a))
            yield tuple(sigma), (-1) ** inversions, vec
            return
        # entry lam_i - i + sigma(i) must stay nonnegative
        for s in range(max(1, i - lam[i - 1]), a + 1):
            if used[s]:
                continue
            extra = sum(1 for t in sigma if t > s)
            used[s] = True
            sigma.append(s)
            yield from walk(i + 1, inversions + extra)
            sigma.pop()
            used[s] = False

    yield from walk(1, 0)


def _grouped_terms(lam: Partition) -> Counter:
    terms: Counter = Counter()
    for _, sgn, vec in alternating_terms(lam):
        terms[tuple(sorted((v for v in vec if v), reverse=True))] += sgn
    return Counter({k: v for k, v in terms.items() if v})


def alternating_estimate(lam, mu, nu) -> int:
    return factorial(len(lam)) * factorial(len(mu)) * factorial(len(nu))


def kronecker_alternating(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
                          max_terms: int = DEFAULT_MAX_TERMS) -> int:
    """``g(lam, mu, nu)`` as a signed sum of contingency-array counts.

    The nominal number of summands is ``a! b! c!`` for lengths a, b, c; a
    :class:`ResourceLimitError` is raised when that exceeds ``max_terms``.
    Summands with equal margins (up to reordering) are merged before any
    array is counted.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _common_size(lam, mu, nu)
    estimate = alternating_estimate(lam, mu, nu)
    if estimate > max_terms:
        raise ResourceLimitError(
            f"alternating sum has a!b!c! = {estimate} nominal terms (limit {max_terms})",
            estimate)
    wl, wm, wn = _grouped_terms(lam), _grouped_terms(mu), _grouped_terms(nu)
    total = 0
    for x, cx in wl.items():
        for y, cy in wm.items():
            for z, cz in wn.items():
                total += cx * cy * cz * count_contingency(x, y, z)
    return total


def kronecker_alternating_literal(lam, mu, nu) -> int:
    """Unpruned, ungrouped signed sum over all of ``S_a x S_b x S_c``.

    Only usable for tiny lengths; kept as a check on the grouped evaluation.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _common_size(lam, mu, nu)

    def shifted(p):
        a = len(p)
        delta = [a - i for i in range(1, a + 1)]
        for perm in permutations(range(a)):
            inv = sum(1 for i in range(a) for j in range(i + 1, a) if perm[i] > perm[j])
            yield (-1) ** inv, [p[i] + delta[i] - delta[perm[i]] for i in range(a)]

    total = 0
    for s1, x in shifted(lam):
        for s2, y in shifted(mu):
            for s3, z in shifted(nu):
                total += s1 * s2 * s3 * count_contingency(x, y, z)
    return total


def symmetry_values(lam, mu, nu, method=kronecker) -> list[int]:
    """``g`` at the six permutations of the triple and the three conjugate pairs."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    triples = list(dict.fromkeys(permutations((lam, mu, nu))))
    lc, mc, nc = conjugate(lam), conjugate(mu), conjugate(nu)
    triples += [(lc, mc, nu), (lc, mu, nc), (lam, mc, nc)]
    return [method(*t) for t in triples]


def symmetry_check(lam, mu, nu, method=kronecker) -> bool:
    return len(set(symmetry_values(lam, mu, nu, method))) == 1
