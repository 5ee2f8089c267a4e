"""Reduction map, k-stability criterion and stable Kronecker coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .characters import dimension
from .errors import ConsistencyError, DomainError
from .kronecker import _common_size, kronecker
from .partitions import (Partition, add, as_partition, durfee, padded,
                         union_intersection)


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of the size-reducing map on a triple.

    ``kind`` is ``"zero"`` (``g`` vanishes, witnessed by row ``witness``) or
    ``"reduced"`` (``g`` equals ``g(phi_lambda, phi_mu, phi_nu)``).
    """

    kind: str
    ell: int
    s: int
    witness: int | None = None
    omega: Partition = Partition()
    rho: Partition = Partition()
    index_set: tuple[int, ...] = ()
    anchors: tuple[int, ...] = ()
    phi_lambda: Partition | None = None
    phi_mu: Partition | None = None
    phi_nu: Partition | None = None
    r: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    def triple(self) -> tuple[Partition, Partition, Partition]:
        if self.is_zero:
            raise DomainError("a zero certificate carries no reduced triple")
        return self.phi_lambda, self.phi_mu, self.phi_nu


def reduce(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
           ell: int | None = None) -> ReductionOutcome:
    """Apply the reduction map with common length bound ``ell``.

    Rows ``j`` past the last element of the index set get the anchor
    ``ell + 1`` (with ``rho_{ell+1} = 0``), i.e. they are left unchanged.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = _common_size(lam, mu, nu)
    longest = max(len(lam), len(mu), len(nu))
    if ell is None:
        ell = longest
    if ell < longest:
        raise DomainError(f"length bound {ell} is below the longest partition ({longest})")
    s = n - nu.part(1) if n else 0
    a, b = padded(lam, ell), padded(mu, ell)
    for i in range(ell):
        if abs(a[i] - b[i]) > s:
            return ReductionOutcome("zero", ell, s, witness=i + 1)

    omega, rho = union_intersection(lam, mu)
    om = padded(omega, ell + 1)
    rh = padded(rho, ell + 1)
    index_set = tuple(i for i in range(1, ell + 1) if rh[i - 1] >= om[i] + s)
    anchors = []
    for j in range(1, ell + 1):
        anchors.append(next((i for i in index_set if i >= j), ell + 1))

    def phi(vec):
        return [vec[j] - rh[i - 1] + s * (ell + 1 - i) for j, i in enumerate(anchors)]

    pl, pm = phi(a), phi(b)
    r = sum(pl)
    if r != sum(pm):
        raise ConsistencyError(f"reduced sizes differ: {pl} vs {pm}")
    pn = [r - s] + list(nu[1:])
    for vec in (pl, pm, pn):
        if any(v < 0 for v in vec) or any(vec[i] < vec[i + 1] for i in range(len(vec) - 1)):
            raise ConsistencyError(f"reduction of {lam}, {mu}, {nu} produced non-partition {vec}")
    return ReductionOutcome(
        "reduced", ell, s, omega=omega, rho=rho, index_set=index_set,
        anchors=tuple(anchors), phi_lambda=Partition(pl), phi_mu=Partition(pm),
        phi_nu=Partition(pn), r=r)


def sort_triple(lam, mu, nu) -> tuple[Partition, Partition, Partition]:
    """Order a triple by first part, ties broken by length then parts."""
    triple = [as_partition(p) for p in (lam, mu, nu)]
    triple.sort(key=lambda p: (p.part(1) if p else 0, len(p), tuple(p)))
    return tuple(triple)


def _minmax_holds(lam, mu, nu, k: int) -> bool:
    n = sum(nu)
    s = n - (nu[0] if nu else 0)
    a, b = padded(lam, k + 1), padded(mu, k + 1)
    return min(a[k - 1], b[k - 1]) >= max(a[k], b[k]) + s


def kstab_condition(lam, mu, nu, k: int) -> bool:
    """Min-max criterion for row ``k`` after sorting the triple by first part."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    lam, mu, nu = sort_triple(lam, mu, nu)
    _common_size(lam, mu, nu)
    return _minmax_holds(lam, mu, nu, k)


def shifted_triple(lam, mu, nu, k: int, t: int) -> tuple[Partition, Partition, Partition]:
    """``(lam + (t^k), mu + (t^k), nu + (tk))``."""
    return add(lam, [t] * k), add(mu, [t] * k), add(nu, [t * k])


def _sequence_condition(lam, mu, nu, k: int) -> bool:
    if k == 1:
        # every entry gains t in row 1, so roles may be permuted freely
        return kstab_condition(lam, mu, nu, 1)
    if max(lam.part(1), mu.part(1)) > nu.part(1):
        return False
    return _minmax_holds(lam, mu, nu, k)


def stabilization_onset(lam, mu, nu, k: int) -> int:
    """Least ``t`` for which the shifted triple meets the k-stability criterion."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _common_size(lam, mu, nu)
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    t = 0
    while not _sequence_condition(*shifted_triple(lam, mu, nu, k, t), k):
        t += 1
    return t


@dataclass
class StabilitySequence:
    base: tuple[Partition, Partition, Partition]
    k: int
    values: list[int]
    onset: int
    stabilized: bool
    stable_value: int | None = field(default=None)

    @property
    def t_max(self) -> int:
        return len(self.values) - 1


def stability_sequence(lam, mu, nu, k: int, t_max: int) -> StabilitySequence:
    """``G_k(t) = g(lam + (t^k), mu + (t^k), nu + (tk))`` for ``t = 0..t_max``."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    onset = stabilization_onset(lam, mu, nu, k)
    values = [kronecker(*shifted_triple(lam, mu, nu, k, t)) for t in range(t_max + 1)]
    stabilized = t_max >= onset
    stable = None
    if stabilized:
        tail = set(values[onset:])
        if len(tail) != 1:
            raise ConsistencyError(f"G_{k} not constant past onset {onset}: {values}")
        stable = values[onset]
    return StabilitySequence((lam, mu, nu), k, values, onset, stabilized, stable)


def stable_kronecker(alpha, beta, gamma) -> int:
    """Stable Kronecker coefficient of the row-2-onward data ``alpha, beta, gamma``.

    Prepends a first row to each so all three have size N, for the least N
    at which the k = 1 criterion holds, and evaluates at N, N+1, N+2.
    """
    tails = [as_partition(p) for p in (alpha, beta, gamma)]
    size = max(p.size + p.part(1) for p in tails)

    def padded_triple(total):
        return tuple(Partition((total - p.size,) + tuple(p)) for p in tails)

    while not kstab_condition(*padded_triple(size), 1):
        size += 1
    values = [kronecker(*padded_triple(size + d)) for d in range(3)]
    if len(set(values)) != 1:
        raise ConsistencyError(f"stable value not reached for {tails}: {values}")
    return values[-1]


@dataclass(frozen=True)
class TailBound:
    mode: str
    u: int
    bound: int
    g: int | None
    applicable: bool

    @property
    def holds(self) -> bool | None:
        if not self.applicable or self.g is None:
            return None
        return self.g <= self.bound


def tail_bound_u(nu_tail: Sequence[int], ell: int | None = None, mode: str = "length",
                 h: int | None = None) -> int:
    """Size threshold ``u`` beyond which ``g(lam, mu, (n-s, nu))`` is bounded.

    ``mode="length"``: ``u = (ell+1) * ell * s`` for partitions of length <= ell.
    ``mode="durfee"``: ``u = 2 * (h+1)**2 * s`` for Durfee squares <= h.
    """
    s = sum(nu_tail)
    if mode == "length":
        if ell is None:
            raise DomainError("length mode needs ell")
        return (ell + 1) * ell * s
    if mode == "durfee":
        if h is None:
            raise DomainError("durfee mode needs h")
        return 2 * (h + 1) ** 2 * s
    raise DomainError(f"unknown mode {mode!r}")


def tail_bound_check(lam, mu, nu_tail, mode: str = "length", ell: int | None = None,
                     h: int | None = None, compute_g: bool = True) -> TailBound:
    """Evaluate ``g(lam, mu, (n - s, nu_tail)) <= f^{(u - s, nu_tail)}``."""
    lam, mu, nu_tail = as_partition(lam), as_partition(mu), as_partition(nu_tail)
    n, s = lam.size, nu_tail.size
    if mode == "length":
        ell = ell if ell is not None else max(len(lam), len(mu), len(nu_tail))
        fits = max(len(lam), len(mu), len(nu_tail)) <= ell
    else:
        h = h if h is not None else max(durfee(lam), durfee(mu))
        fits = max(durfee(lam), durfee(mu)) <= h
    u = tail_bound_u(nu_tail, ell, mode, h)
    applicable = (fits and mu.size == n and n >= u and n - s >= nu_tail.part(1)
                  and u - s >= nu_tail.part(1))
    bound = dimension(Partition((u - s,) + tuple(nu_tail))) if u - s >= nu_tail.part(1) else 0
    g = None
    if compute_g and applicable:
        g = kronecker(lam, mu, Partition((n - s,) + tuple(nu_tail)))
    return TailBound(mode, u, bound, g, applicable)
