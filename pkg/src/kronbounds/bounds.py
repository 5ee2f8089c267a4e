"""Upper and lower bounds on Kronecker coefficients, and LR coefficients.

Rational bounds are kept as :class:`fractions.Fraction`; every verdict
compares exact values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb
from typing import Sequence

from .characters import character, dimension, gl_dimension
from .errors import DomainError
from .kronecker import _common_size, count_contingency, kronecker
from .partitions import (Partition, add, as_partition, conjugate, count_partitions,
                         is_self_conjugate, principal_hooks)
from .stability import tail_bound_check

DEFAULT_BUDGET = 10**8


def _triple(lam, mu, nu):
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _common_size(lam, mu, nu)
    return lam, mu, nu


def upper_dimension(lam, mu, nu) -> Fraction:
    """``f^lam f^mu / f^nu``; use ``math.ceil`` on the result for the integer bound."""
    lam, mu, nu = _triple(lam, mu, nu)
    return Fraction(dimension(lam) * dimension(mu), dimension(nu))


def upper_min(lam, mu, nu) -> int:
    lam, mu, nu = _triple(lam, mu, nu)
    return min(dimension(lam), dimension(mu), dimension(nu))


def upper_schur(lam, mu, nu) -> Fraction:
    """``d_nu(ab) / (d_lam(a) d_mu(b))`` with ``a, b`` the lengths of lam, mu."""
    lam, mu, nu = _triple(lam, mu, nu)
    a, b = len(lam), len(mu)
    return Fraction(gl_dimension(nu, a * b), gl_dimension(lam, a) * gl_dimension(mu, b))


def _binom(top: int, bottom: int) -> int:
    return comb(top, bottom) if top >= 0 else 0


def upper_binomial_product(lam, mu, nu) -> int:
    """``prod_i C(nu_i - i + ab, nu_i)``; a negative top gives 0."""
    lam, mu, nu = _triple(lam, mu, nu)
    ab = len(lam) * len(mu)
    out = 1
    for i, v in enumerate(nu, start=1):
        out *= _binom(v - i + ab, v)
    return out


def upper_contingency(lam, mu, nu) -> tuple[int, int]:
    """``(CA(lam, mu, nu), CA*(lam', mu, nu))``."""
    lam, mu, nu = _triple(lam, mu, nu)
    return (count_contingency(lam, mu, nu),
            count_contingency(conjugate(lam), mu, nu, binary=True))


def lower_character(lam, mu) -> int:
    """``|chi^lam[principal hooks of mu]|``, a lower bound for ``g(lam, mu, mu)``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_self_conjugate(mu):
        raise DomainError(f"{mu} is not self-conjugate")
    if lam.size != mu.size:
        raise DomainError(f"size mismatch: |{lam}| != |{mu}|")
    return abs(character(lam, principal_hooks(mu)))


def check_manivel(lam, mu, nu, alpha, beta, gamma) -> bool | None:
    """Whether ``g`` of the sum dominates both summands; ``None`` if a summand has ``g = 0``."""
    lam, mu, nu = _triple(lam, mu, nu)
    alpha, beta, gamma = _triple(alpha, beta, gamma)
    g1, g2 = kronecker(lam, mu, nu), kronecker(alpha, beta, gamma)
    if g1 == 0 or g2 == 0:
        return None
    g = kronecker(add(lam, alpha), add(mu, beta), add(nu, gamma))
    return g >= max(g1, g2)


def lr_coefficient(alpha, beta, gamma) -> int:
    """``c^alpha_{beta gamma}``: LR tableaux of shape alpha/beta and content gamma.

    Cells are filled in reading order (rows top to bottom, each right to
    left) so the lattice condition can be enforced on the fly.
    """
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    if beta.size + gamma.size != alpha.size:
        return 0
    if any(beta.part(i) > alpha.part(i) for i in range(1, len(beta) + 1)):
        return 0
    order = [(i, j) for i in range(len(alpha))
             for j in range(alpha[i] - 1, beta.part(i + 1) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(gamma) + 1)

    def walk(pos: int) -> int:
        if pos == len(order):
            return 1
        i, j = order[pos]
        hi = filling.get((i, j + 1), len(gamma))
        lo = filling.get((i - 1, j), 0) + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= gamma[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[i, j] = v
            total += walk(pos + 1)
            del filling[i, j]
            counts[v] -= 1
        return total

    return walk(0)


def lr_upper_bound(alpha, beta, gamma) -> Fraction:
    """``f^alpha / (f^beta f^gamma)``."""
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    if beta.size + gamma.size != alpha.size:
        raise DomainError(f"|{beta}| + |{gamma}| != |{alpha}|")
    return Fraction(dimension(alpha), dimension(beta) * dimension(gamma))


def _encode(value):
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass
class BoundEntry:
    name: str
    value: int | Fraction | None
    direction: str
    applicable: bool
    satisfied: bool | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "direction": self.direction,
               "applicable": self.applicable, "satisfied": self.satisfied,
               "value": None if self.value is None else _encode(self.value)}
        if isinstance(self.value, Fraction):
            out["ceiling"] = str(ceil(self.value))
        return out


@dataclass
class BoundReport:
    triple: tuple[Partition, Partition, Partition]
    true_g: int | None
    entries: list[BoundEntry] = field(default_factory=list)

    def entry(self, name: str) -> BoundEntry:
        return next(e for e in self.entries if e.name == name)

    def consistent(self) -> bool:
        return all(e.satisfied is not False for e in self.entries)

    def to_dict(self) -> dict:
        return {"triple": [str(p) for p in self.triple],
                "true_g": None if self.true_g is None else str(self.true_g),
                "entries": [e.to_dict() for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def character_cost(n: int) -> int:
    """Rough work estimate for the character-sum evaluation of one triple."""
    return count_partitions(n) ** 2


def full_report(lam, mu, nu, budget: int = DEFAULT_BUDGET) -> BoundReport:
    """Every applicable bound for one triple, checked against ``g`` when affordable."""
    lam, mu, nu = _triple(lam, mu, nu)
    n = lam.size
    g = kronecker(lam, mu, nu) if character_cost(n) <= budget else None
    entries = [
        BoundEntry("dimension", upper_dimension(lam, mu, nu), "upper", True),
        BoundEntry("min_dimension", upper_min(lam, mu, nu), "upper", True),
        BoundEntry("schur", upper_schur(lam, mu, nu), "upper", True),
        BoundEntry("binomial_product", upper_binomial_product(lam, mu, nu), "upper", True),
    ]
    ca, ca_star = upper_contingency(lam, mu, nu)
    entries.append(BoundEntry("contingency", ca, "upper", True))
    entries.append(BoundEntry("binary_contingency", ca_star, "upper", True))

    if mu == nu and is_self_conjugate(mu):
        entries.append(BoundEntry("character", lower_character(lam, mu), "lower", True))
    else:
        entries.append(BoundEntry("character", None, "lower", False))

    tail = Partition(nu[1:])
    for mode in ("length", "durfee"):
        tb = tail_bound_check(lam, mu, tail, mode=mode, compute_g=False)
        entries.append(BoundEntry(f"tail_{mode}", tb.bound, "upper", tb.applicable))

    if g is not None:
        for e in entries:
            if e.applicable:
                e.satisfied = e.value >= g if e.direction == "upper" else e.value <= g
    return BoundReport((lam, mu, nu), g, entries)


__all__ = [
    "BoundEntry", "BoundReport", "check_manivel", "full_report", "lower_character",
    "lr_coefficient", "lr_upper_bound", "upper_binomial_product", "upper_contingency",
    "upper_dimension", "upper_min", "upper_schur",
]
