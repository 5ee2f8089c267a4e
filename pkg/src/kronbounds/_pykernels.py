"""Pure-Python hot kernels.

This module mirrors the compiled ``_ckernels`` extension function for
function; :mod:`kronbounds._backend` picks one at import time.

Shapes are encoded as beta-sets packed into an int bitmask: a partition
with ``L`` parts sets bit ``parts[i] + L - 1 - i`` for every row.  Removing
a rim hook of length ``r`` moves one bead from ``x`` to an empty ``x - r``;
the sign is ``(-1)**(beads strictly between)``.  Masks are kept canonical by
shifting out the run of set low bits (empty rows).
"""

from __future__ import annotations

from math import factorial

BACKEND = "python"


def beta_mask(parts) -> int:
    length = len(parts)
    mask = 0
    for i, p in enumerate(parts):
        mask |= 1 << (p + length - 1 - i)
    return _canonical(mask)


def _canonical(mask: int) -> int:
    # drop empty rows: low beads packed against position 0
    while mask & 1:
        mask >>= 1
    return mask


def _dimension_from_mask(mask: int) -> int:
    beads = []
    x = 0
    m = mask
    while m:
        if m & 1:
            beads.append(x)
        m >>= 1
        x += 1
    length = len(beads)
    size = sum(beads) - length * (length - 1) // 2
    num = factorial(size)
    den = 1
    for i, bi in enumerate(beads):
        den *= factorial(bi)
        for bj in beads[i + 1:]:
            num *= bj - bi
    return num // den


def mn_character(parts, cycle, memo: dict) -> int:
    """Murnaghan-Nakayama evaluation of ``chi^parts[cycle]``.

    ``cycle`` is consumed left to right; ``memo`` must be private to this
    ``cycle`` and is keyed by ``(mask, position)``.
    """
    cycle = tuple(cycle)
    ones_from = len(cycle)
    while ones_from and cycle[ones_from - 1] == 1:
        ones_from -= 1
    return _mn(beta_mask(parts), cycle, 0, ones_from, memo)


def _mn(mask: int, cycle, idx: int, ones_from: int, memo: dict) -> int:
    if idx >= ones_from:
        return _dimension_from_mask(mask)
    key = (mask, idx)
    hit = memo.get(key)
    if hit is not None:
        return hit
    r = cycle[idx]
    total = 0
    m = mask >> r
    x = r
    while m:
        if m & 1 and not (mask >> (x - r)) & 1:
            between = (mask >> (x - r + 1)) & ((1 << (r - 1)) - 1)
            sign = -1 if between.bit_count() & 1 else 1
            new = _canonical(mask ^ (1 << x) ^ (1 << (x - r)))
            total += sign * _mn(new, cycle, idx + 1, ones_from, memo)
        m >>= 1
        x += 1
    memo[key] = total
    return total


def count_arrays(a, b, c, binary: bool) -> int:
    """Number of ``len(a) x len(b) x len(c)`` arrays with slice sums a, b, c.

    Margins must be positive, weakly decreasing and of equal total.  Entries
    are nonnegative integers, or 0/1 when ``binary``.
    """
    if not a:
        return 1
    cap = 1 if binary else None
    memo: dict = {}
    memo2: dict = {}
    return _slices(tuple(a), 0, tuple(b), tuple(c), cap, memo, memo2)


def _slices(a, i, rb, rc, cap, memo, memo2) -> int:
    if i == len(a) - 1:
        return _count2(rb, rc, cap, memo2)
    key = (i, rb, rc)
    hit = memo.get(key)
    if hit is not None:
        return hit
    nb, nc = len(rb), len(rc)
    total = 0
    rows = list(rb)
    cols = list(rc)
    rest_after = sum(a[i + 1:])

    def fill(cell: int, left: int) -> None:
        nonlocal total
        if left == 0:
            nxt_b = tuple(sorted((v for v in rows if v), reverse=True))
            nxt_c = tuple(sorted((v for v in cols if v), reverse=True))
            total += _slices(a, i + 1, nxt_b, nxt_c, cap, memo, memo2)
            return
        if cell == nb * nc:
            return
        j, k = divmod(cell, nc)
        hi = min(left, rows[j], cols[k])
        if cap is not None and hi > cap:
            hi = cap
        for x in range(hi, -1, -1):
            rows[j] -= x
            cols[k] -= x
            fill(cell + 1, left - x)
            rows[j] += x
            cols[k] += x

    if sum(rb) - a[i] == rest_after:
        fill(0, a[i])
    memo[key] = total
    return total


def _count2(rows, cols, cap, memo) -> int:
    """Matrices with exact row sums ``rows`` and column sums ``cols``."""
    rows = tuple(sorted((r for r in rows if r), reverse=True))
    cols = tuple(sorted((c for c in cols if c), reverse=True))
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1
    if len(rows) == 1:
        return 1 if cap is None or all(c <= cap for c in cols) else 0
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    total = 0
    first = rows[0]
    rest = rows[1:]
    residual = list(cols)
    nc = len(cols)

    def fill(k: int, left: int) -> None:
        nonlocal total
        if k == nc:
            if left == 0:
                total += _count2(rest, tuple(sorted(residual, reverse=True)), cap, memo)
            return
        # what the remaining columns can still take
        room = sum(residual[k + 1:]) if cap is None else sum(min(cap, v) for v in residual[k + 1:])
        hi = min(left, residual[k])
        if cap is not None and hi > cap:
            hi = cap
        lo = max(0, left - room)
        for x in range(lo, hi + 1):
            residual[k] -= x
            fill(k + 1, left - x)
            residual[k] += x

    fill(0, first)
    memo[key] = total
    return total
