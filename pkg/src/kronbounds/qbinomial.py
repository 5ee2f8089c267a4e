"""Gaussian binomials, distinct-odd-part generating functions and gap bounds.

``p_k(l, m)`` is the number of partitions of ``k`` fitting in an
``l x m`` box (the coefficients of the Gaussian binomial), and ``b_k(n)``
the number of partitions of ``k`` into distinct odd parts at most ``2n-1``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .errors import DomainError

PRECISION_DIGITS = 40


class IntPolynomial:
    """Polynomial in ``q`` with exact integer coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[k] - other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def shift(self, power: int) -> "IntPolynomial":
        """Multiply by ``q**power``."""
        return IntPolynomial([0] * power + list(self.coeffs)) if self.coeffs else self

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(c) for c in json.loads(text))


def gaussian_binomial(ell: int, m: int) -> IntPolynomial:
    """``binom(ell + m, m)_q``: generating function of partitions in an ell x m box."""
    if ell < 0 or m < 0:
        raise DomainError(f"box sides must be nonnegative, got {ell}, {m}")
    return IntPolynomial(_box_counts(ell, m))


@lru_cache(maxsize=None)
def _box_counts(ell: int, m: int) -> tuple[int, ...]:
    if ell == 0 or m == 0:
        return (1,)
    # largest part < m, or largest part == m and the rest fit in (ell-1) x m
    narrower = _box_counts(ell, m - 1)
    shorter = _box_counts(ell - 1, m)
    out = [0] * (ell * m + 1)
    for k, c in enumerate(narrower):
        out[k] += c
    for k, c in enumerate(shorter):
        out[k + m] += c
    return tuple(out)


def box_count(k: int, ell: int, m: int) -> int:
    """``p_k(ell, m)``; zero outside ``0..ell*m``."""
    counts = _box_counts(ell, m)
    return counts[k] if 0 <= k < len(counts) else 0


def delta(ell: int, m: int, k: int) -> int:
    """``p_k(ell, m) - p_{k-1}(ell, m)``."""
    return box_count(k, ell, m) - box_count(k - 1, ell, m)


def distinct_odd_poly(n: int) -> IntPolynomial:
    """``prod_{i=1..n} (1 + q^{2i-1})``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return IntPolynomial(_odd_counts(n))


@lru_cache(maxsize=None)
def _odd_counts(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _odd_counts(n - 1)
    e = 2 * n - 1
    out = list(prev) + [0] * e
    for k, c in enumerate(prev):
        out[k + e] += c
    return tuple(out)


def odd_count(k: int, n: int) -> int:
    """``b_k(n)``; zero outside ``0..n^2``."""
    counts = _odd_counts(n)
    return counts[k] if 0 <= k < len(counts) else 0


def almkvist_ranges(n: int) -> tuple[range, range]:
    """The ``k`` ranges of the short and long recurrences for ``b(n)``."""
    return range(3, 2 * n + 2), range(2 * n + 2, (n - 1) ** 2 // 2 + 1)


def almkvist_recurrence_check(n: int, k: int) -> bool:
    """Check the recurrence for consecutive differences of ``b(n)``.

    For ``3 <= k <= 2n+1`` the claim is ``b_k(n) - b_{k-1}(n) = b_k(n-1) - b_{k-1}(n-1)``;
    for ``2n+2 <= k <= (n-1)^2/2`` the right side gains
    ``b_{k-2n+1}(n-1) - b_{k-2n}(n-1)``.
    """
    if n < 2:
        raise DomainError(f"recurrence needs n >= 2, got {n}")
    short, long_ = almkvist_ranges(n)
    lhs = odd_count(k, n) - odd_count(k - 1, n)
    rhs = odd_count(k, n - 1) - odd_count(k - 1, n - 1)
    if k in short:
        return lhs == rhs
    if k in long_:
        return lhs == rhs + odd_count(k - 2 * n + 1, n - 1) - odd_count(k - 2 * n, n - 1)
    raise DomainError(
        f"k={k} outside both ranges 3..{2 * n + 1} and {2 * n + 2}..{(n - 1) ** 2 // 2}")


def stanley_difference(n: int) -> IntPolynomial:
    """``binom(2n, n)_q - prod_{i=1..n} (1 + q^{2i-1})``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return gaussian_binomial(n, n) - distinct_odd_poly(n)


def is_symmetric_unimodal(coeffs: Sequence[int], center=None) -> tuple[bool, bool]:
    """Symmetry about ``center`` and unimodality of a coefficient sequence.

    ``coeffs`` may be an :class:`IntPolynomial` or any integer sequence
    indexed from 0.  ``center`` defaults to half the last index.
    """
    c = list(coeffs)
    if not c:
        return True, True
    center = Fraction(len(c) - 1, 2) if center is None else Fraction(center)
    symmetric = True
    for k, v in enumerate(c):
        mirror = 2 * center - k
        if mirror.denominator != 1:
            symmetric = False
            break
        mirror = int(mirror)
        other = c[mirror] if 0 <= mirror < len(c) else 0
        if other != v:
            symmetric = False
            break
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return symmetric, i + 1 >= len(c)


def diamond_sequence(n: int) -> list[int]:
    """``b_2(n), b_3(n), ..., b_{n^2-2}(n)``."""
    return [odd_count(k, n) for k in range(2, n * n - 1)]


def _mp():
    ctx = mpmath.mp.clone()
    ctx.dps = PRECISION_DIGITS
    return ctx


def almkvist_constant():
    """``3 sqrt(3) / (sqrt(2) pi^2)``, about 0.3723."""
    ctx = _mp()
    return 3 * ctx.sqrt(3) / (ctx.sqrt(2) * ctx.pi ** 2)


def square_constant():
    """``sqrt(27/8) / pi^2``, about 0.1861 (the constant stated for n x n squares)."""
    ctx = _mp()
    return ctx.sqrt(ctx.mpf(27) / 8) / ctx.pi ** 2


def gap_constant():
    """``2^{-9/sqrt 2}`` times :func:`almkvist_constant`, about 0.00449."""
    ctx = _mp()
    return ctx.power(2, -9 / ctx.sqrt(2)) * almkvist_constant()


def growth_term(x, constant=None):
    """``constant * 2^{sqrt x} / x^{9/4}`` at high precision."""
    ctx = _mp()
    x = ctx.mpf(x)
    c = almkvist_constant() if constant is None else constant
    return c * ctx.power(2, ctx.sqrt(x)) / ctx.power(x, ctx.mpf(9) / 4)


def almkvist_bound(k: int):
    """Lower bound ``C 2^{sqrt(2k)} / (2k)^{9/4}`` for ``b_k(n) - b_{k-1}(n)``."""
    return growth_term(2 * k)


def effective_gap_bound(ell: int, m: int, k: int):
    """Lower bound ``A 2^{sqrt s} / s^{9/4}``, ``s = min(2k, ell^2)``, on ``delta(ell, m, k)``."""
    if not (m >= ell >= 8):
        raise DomainError(f"gap bound needs m >= l >= 8, got l={ell}, m={m}")
    if not (2 <= k <= ell * m / 2):
        raise DomainError(f"gap bound needs 2 <= k <= l*m/2, got k={k}")
    return growth_term(min(2 * k, ell * ell), gap_constant())


def auxiliary_square_side(ell: int, m: int) -> int:
    """Side of the square used to bound rectangles: ``2 floor((l-8)/2)``, minus 1 if l*m odd."""
    side = 2 * ((ell - 8) // 2)
    return side - 1 if (ell * m) % 2 else side


def rectangle_gap_bound(ell: int, m: int, k: int):
    """Lower bound ``C 2^{sqrt v} / v^{9/4}`` with ``v = min(k, n^2/2)`` for the auxiliary side n."""
    if not (8 <= ell <= m):
        raise DomainError(f"rectangle bound needs 8 <= l <= m, got l={ell}, m={m}")
    if not (1 <= k <= ell * m / 2):
        raise DomainError(f"rectangle bound needs 1 <= k <= l*m/2, got k={k}")
    side = auxiliary_square_side(ell, m)
    if side < 1:
        raise DomainError(f"auxiliary square side is {side} for l={ell}; bound undefined")
    v = min(Fraction(k), Fraction(side * side, 2))
    ctx = _mp()
    return growth_term(ctx.mpf(v.numerator) / v.denominator)
