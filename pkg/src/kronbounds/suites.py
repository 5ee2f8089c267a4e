"""Exhaustive verification suites behind ``kronbounds verify``.

A suite is a list of instances plus a checker.  Each instance carries a
sort key (size first, then parameters) so the smallest witness of a
failure can be reported the same way in every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from .bounds import (lower_character, upper_binomial_product, upper_contingency,
                     upper_dimension, upper_min, upper_schur)
from .errors import DomainError
from .kronecker import kronecker, symmetry_check
from .partitions import (Partition, enumerate_partitions, is_self_conjugate,
                         rectangle)
from .qbinomial import (almkvist_ranges, almkvist_recurrence_check, delta,
                        diamond_sequence, gaussian_binomial, is_symmetric_unimodal,
                        odd_count, stanley_difference)
from .stability import (_sequence_condition, reduce, shifted_triple)

# bounds on --kmax / --tmax for the kstab suite
KMAX_LIMIT, TMAX_LIMIT = 4, 6


@dataclass(frozen=True)
class Instance:
    suite: str
    key: tuple
    args: tuple

    def label(self) -> str:
        return " ".join(str(a) for a in self.args)


@dataclass(frozen=True)
class Outcome:
    instance: Instance
    ok: bool
    detail: str = ""


def _triples(n_max: int):
    for n in range(n_max + 1):
        parts = enumerate_partitions(n)
        for lam, mu, nu in product(parts, repeat=3):
            yield n, (lam, mu, nu)


def _triple_key(n, t):
    return (n,) + tuple(tuple(p) for p in t)


def symmetry_instances(n_max: int):
    return [Instance("symmetry", _triple_key(n, t), t) for n, t in _triples(n_max)]


def check_symmetry(inst: Instance) -> Outcome:
    return Outcome(inst, symmetry_check(*inst.args))


def reduction_instances(n_max: int):
    return [Instance("reduction", _triple_key(n, t), t) for n, t in _triples(n_max)]


def check_reduction(inst: Instance) -> Outcome:
    lam, mu, nu = inst.args
    g = kronecker(lam, mu, nu)
    out = reduce(lam, mu, nu)
    if out.is_zero:
        return Outcome(inst, g == 0, f"zero certificate at row {out.witness}, g={g}")
    g2 = kronecker(*out.triple())
    ok = g == g2 and out.r <= 2 * out.s * out.ell ** 2
    return Outcome(inst, ok, f"g={g}, reduced g={g2}, r={out.r}, 2sl^2={2 * out.s * out.ell ** 2}")


def kstab_instances(n_max: int, k_max: int = 3, t_max: int = 3):
    out = []
    for n, t in _triples(n_max):
        for k in range(1, k_max + 1):
            if _sequence_condition(*t, k):
                out.append(Instance("kstab", _triple_key(n, t) + (k,), t + (k, t_max)))
    return out


def check_kstab(inst: Instance) -> Outcome:
    lam, mu, nu, k, t_max = inst.args
    values = [kronecker(*shifted_triple(lam, mu, nu, k, t)) for t in range(t_max + 1)]
    return Outcome(inst, len(set(values)) == 1, "G = " + " ".join(map(str, values)))


def bounds_instances(n_max: int):
    return [Instance("bounds", _triple_key(n, t), t) for n, t in _triples(n_max)]


def check_bounds(inst: Instance) -> Outcome:
    lam, mu, nu = inst.args
    g = kronecker(lam, mu, nu)
    ca, ca_star = upper_contingency(lam, mu, nu)
    uppers = {
        "dimension": upper_dimension(lam, mu, nu), "min": upper_min(lam, mu, nu),
        "schur": upper_schur(lam, mu, nu), "binomial": upper_binomial_product(lam, mu, nu),
        "CA": ca, "CA*": ca_star,
    }
    bad = [name for name, v in uppers.items() if v < g]
    if mu == nu and is_self_conjugate(mu) and lower_character(lam, mu) > g:
        bad.append("character")
    return Outcome(inst, not bad, f"g={g}" + (f", violated: {','.join(bad)}" if bad else ""))


def lemma14_instances(l_max: int):
    out = []
    for ell in range(1, l_max + 1):
        for m in range(1, l_max + 1):
            for k in range(1, ell * m // 2 + 1):
                out.append(Instance("lemma14", (ell * m, ell, m, k), (ell, m, k)))
    return out


def check_lemma14(inst: Instance) -> Outcome:
    ell, m, k = inst.args
    box = rectangle(ell, m)
    g = kronecker(box, box, Partition((ell * m - k, k)))
    d = delta(ell, m, k)
    return Outcome(inst, g == d, f"g={g}, delta={d}")


def qbin_instances(l_max: int):
    out = [Instance("qbin", (ell * m, ell, m), (ell, m, None))
           for ell in range(1, l_max + 1) for m in range(1, l_max + 1)]
    out += [Instance("qbin", (ell * m, ell, m, k), (ell, m, k))
            for ell in range(8, l_max + 1) for m in range(8, l_max + 1)
            for k in range(2, ell * m // 2 + 1)]
    return out


def check_qbin(inst: Instance) -> Outcome:
    ell, m, k = inst.args
    if k is None:
        sym, uni = is_symmetric_unimodal(gaussian_binomial(ell, m))
        return Outcome(inst, sym and uni, f"symmetric={sym}, unimodal={uni}")
    d = delta(ell, m, k)
    return Outcome(inst, d >= 1, f"delta={d}")


def almkvist_instances(n_max: int):
    out = []
    for n in range(2, n_max + 1):
        short, long_ = almkvist_ranges(n)
        out += [Instance("almkvist", (n, 0, k), (n, k)) for k in list(short) + list(long_)]
        out.append(Instance("almkvist", (n, 1, 0), (n, None)))
    return out


def check_almkvist(inst: Instance) -> Outcome:
    n, k = inst.args
    if k is None:
        _, uni = is_symmetric_unimodal(diamond_sequence(n))
        return Outcome(inst, uni, f"b_2..b_{n * n - 2} unimodal={uni}")
    ok = almkvist_recurrence_check(n, k)
    return Outcome(inst, ok, f"b_k(n)-b_(k-1)(n)={odd_count(k, n) - odd_count(k - 1, n)}")


def stanley_instances(n_max: int):
    return [Instance("stanley", (n,), (n,)) for n in range(1, n_max + 1)]


def check_stanley(inst: Instance) -> Outcome:
    (n,) = inst.args
    diff = stanley_difference(n)
    sym, uni = is_symmetric_unimodal(diff, center=Fraction(n * n, 2))
    ok = sym and uni and all(c >= 0 for c in diff)
    return Outcome(inst, ok, f"symmetric={sym}, unimodal={uni}")


@dataclass(frozen=True)
class Suite:
    """``option`` names the size flag (``n`` or ``lmax``); requests above ``limit`` are refused."""

    name: str
    build: Callable[..., list]
    check: Callable[[Instance], Outcome]
    option: str
    default: int
    limit: int


SUITES = {
    "symmetry": Suite("symmetry", symmetry_instances, check_symmetry, "n", 6, 9),
    "reduction": Suite("reduction", reduction_instances, check_reduction, "n", 6, 9),
    "kstab": Suite("kstab", kstab_instances, check_kstab, "n", 6, 9),
    "bounds": Suite("bounds", bounds_instances, check_bounds, "n", 6, 9),
    "qbin": Suite("qbin", qbin_instances, check_qbin, "lmax", 10, 16),
    "almkvist": Suite("almkvist", almkvist_instances, check_almkvist, "n", 30, 40),
    "stanley": Suite("stanley", stanley_instances, check_stanley, "n", 10, 40),
    "lemma14": Suite("lemma14", lemma14_instances, check_lemma14, "lmax", 4, 6),
}


def run_check(inst: Instance) -> Outcome:
    return SUITES[inst.suite].check(inst)


def build_instances(name: str, size: int | None = None, k_max: int = 3,
                    t_max: int = 3) -> list[Instance]:
    """Instances of one suite, sorted by key; raises DomainError when out of range."""
    suite = SUITES[name]
    size = suite.default if size is None else size
    if not 0 <= size <= suite.limit:
        raise DomainError(f"--{suite.option} {size} outside the supported range 0..{suite.limit} for {name}")
    if name == "kstab":
        if not 1 <= k_max <= KMAX_LIMIT or not 0 <= t_max <= TMAX_LIMIT:
            raise DomainError(f"kstab needs 1 <= kmax <= {KMAX_LIMIT} and 0 <= tmax <= {TMAX_LIMIT}")
        items = suite.build(size, k_max, t_max)
    else:
        items = suite.build(size)
    return sorted(items, key=lambda i: i.key)
