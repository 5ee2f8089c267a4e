"""Slow, independent reference implementations used only by the tests.

None of these call into the library's character or counting kernels.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial


def partitions(n, max_part=None):
    """Reverse-lex partitions by plain recursion."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam):
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


def cycle_type(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def _poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def frobenius_character(lam, alpha):
    """chi^lam[alpha] as the coefficient of x^(lam+delta) in a_delta * p_alpha."""
    n = sum(lam)
    if n == 0:
        return 1
    k = len(lam)
    # Vandermonde a_delta = sum over S_k of sign * x^(sigma . delta)
    delta = tuple(range(k - 1, -1, -1))
    poly = Counter()
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        poly[tuple(delta[perm[i]] for i in range(k))] += (-1) ** inv
    for r in alpha:
        p_r = Counter({tuple(r if i == j else 0 for i in range(k)): 1 for j in range(k)})
        poly = _poly_mul(poly, p_r)
        # drop monomials that can no longer reach the target exponent
        target = tuple(lam[i] + delta[i] for i in range(k))
        poly = Counter({e: c for e, c in poly.items() if c and all(x <= t for x, t in zip(e, target))})
    return poly.get(tuple(lam[i] + delta[i] for i in range(k)), 0)


def kronecker_by_permutations(lam, mu, nu):
    """g as an average over every permutation of S_n (n <= 6)."""
    n = sum(lam)
    cache = {}
    total = 0
    for perm in permutations(range(n)):
        ct = cycle_type(perm)
        if ct not in cache:
            cache[ct] = (frobenius_character(lam, ct) * frobenius_character(mu, ct)
                         * frobenius_character(nu, ct))
        total += cache[ct]
    assert total % factorial(n) == 0
    return total // factorial(n)


def standard_tableaux(lam):
    """Count SYT by removing corners."""
    lam = tuple(p for p in lam if p)
    if not lam:
        return 1
    total = 0
    for i, p in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < p:
            total += standard_tableaux(lam[:i] + (p - 1,) + lam[i + 1:])
    return total


def semistandard_tableaux(lam, m):
    """Count SSYT with entries in 1..m by filling cells row by row."""
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    fill = {}

    def walk(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = max(fill.get((i, j - 1), 1), fill.get((i - 1, j), 0) + 1)
        total = 0
        for v in range(lo, m + 1):
            fill[i, j] = v
            total += walk(idx + 1)
        fill.pop((i, j), None)
        return total

    return walk(0)


def contingency_brute(a, b, c, binary=False):
    """Count arrays by trying every entry vector (tiny margins only)."""
    la, lb, lc = len(a), len(b), len(c)
    n = sum(a)
    top = 1 if binary else n
    count = 0
    for entries in product(range(top + 1), repeat=la * lb * lc):
        def at(i, j, k):
            return entries[(i * lb + j) * lc + k]
        if all(sum(at(i, j, k) for j in range(lb) for k in range(lc)) == a[i] for i in range(la)) \
                and all(sum(at(i, j, k) for i in range(la) for k in range(lc)) == b[j] for j in range(lb)) \
                and all(sum(at(i, j, k) for i in range(la) for j in range(lb)) == c[k] for k in range(lc)):
            count += 1
    return count


def box_partition_counts(ell, m):
    """Coefficients of the Gaussian binomial by listing partitions in an ell x m box."""
    counts = Counter()
    for parts in product(range(m + 1), repeat=ell):
        if all(parts[i] >= parts[i + 1] for i in range(ell - 1)):
            counts[sum(parts)] += 1
    return [counts[k] for k in range(ell * m + 1)]


def distinct_odd_counts(n):
    odds = [2 * i - 1 for i in range(1, n + 1)]
    counts = Counter()
    for r in range(n + 1):
        for combo in combinations(odds, r):
            counts[sum(combo)] += 1
    return [counts[k] for k in range(n * n + 1)]


def z(alpha):
    out = 1
    for j, mult in Counter(alpha).items():
        out *= j ** mult * factorial(mult)
    return out


def lr_by_restriction(alpha, beta, gamma):
    """c^alpha_{beta gamma} as the multiplicity in the restriction to S_p x S_q."""
    p, q = sum(beta), sum(gamma)
    if p + q != sum(alpha):
        return 0
    total = Fraction(0)
    for rho in partitions(p):
        for sigma in partitions(q):
            ct = tuple(sorted(rho + sigma, reverse=True))
            total += Fraction(frobenius_character(alpha, ct) * frobenius_character(beta, rho)
                              * frobenius_character(gamma, sigma), z(rho) * z(sigma))
    assert total.denominator == 1
    return int(total)
