# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and results as ``_pykernels``.

Beta-set masks live in a ``uint64`` while the largest bead position fits
below bit 58 (so ``mask << 6 | idx`` is a single machine word key).  Wider
shapes fall through to the pure-Python routine.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

from . import _pykernels
from ._pykernels import _dimension_from_mask, beta_mask

BACKEND = "cython"

cdef enum:
    MASK_BITS = 58
    MAX_CELLS = 4096


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline uint64_t _canonical(uint64_t mask) nogil:
    if mask & 1:
        mask >>= __builtin_ctzll(~mask)
    return mask


def mn_character(parts, cycle, dict memo):
    cycle = tuple(cycle)
    cdef int ones_from = len(cycle)
    while ones_from and cycle[ones_from - 1] == 1:
        ones_from -= 1
    mask = beta_mask(parts)
    if mask.bit_length() > MASK_BITS:
        return _pykernels.mn_character(parts, cycle, memo)
    cdef int n = len(cycle)
    cdef int *cyc = <int *> malloc((n + 1) * sizeof(int))
    cdef int i
    try:
        for i in range(n):
            cyc[i] = cycle[i]
        return _mn(<uint64_t> mask, cyc, 0, ones_from, memo)
    finally:
        free(cyc)


cdef object _mn(uint64_t mask, int *cycle, int idx, int ones_from, dict memo):
    if idx >= ones_from:
        return _dimension_from_mask(mask)
    key = (mask << 6) | <uint64_t> idx
    hit = memo.get(key)
    if hit is not None:
        return hit
    cdef int r = cycle[idx]
    cdef int x
    cdef uint64_t between, new
    total = 0
    for x in range(r, MASK_BITS):
        if (mask >> x) == 0:
            break
        if (mask >> x) & 1 and not (mask >> (x - r)) & 1:
            between = (mask >> (x - r + 1)) & ((<uint64_t> 1 << (r - 1)) - 1)
            new = _canonical(mask ^ (<uint64_t> 1 << x) ^ (<uint64_t> 1 << (x - r)))
            if _popcount(between) & 1:
                total -= _mn(new, cycle, idx + 1, ones_from, memo)
            else:
                total += _mn(new, cycle, idx + 1, ones_from, memo)
    memo[key] = total
    return total


def count_arrays(a, b, c, bint binary):
    if not a:
        return 1
    cdef int cap = 1 if binary else -1
    return _slices(tuple(a), 0, tuple(b), tuple(c), cap, {}, {})


cdef tuple _sorted_nonzero(int *vals, int n):
    return tuple(sorted([vals[i] for i in range(n) if vals[i]], reverse=True))


cdef class _SliceFill:
    """Enumerates one 2-D cross-section with prescribed total."""
    cdef int nb, nc, cap, i
    cdef int rows[MAX_CELLS]
    cdef int cols[MAX_CELLS]
    cdef tuple a
    cdef dict memo, memo2
    cdef object total

    cdef object run(self, int left):
        self.total = 0
        self._fill(0, left)
        return self.total

    cdef void _fill(self, int cell, int left) except *:
        cdef int j, k, hi, x
        if left == 0:
            nxt_b = _sorted_nonzero(self.rows, self.nb)
            nxt_c = _sorted_nonzero(self.cols, self.nc)
            self.total += _slices(self.a, self.i + 1, nxt_b, nxt_c, self.cap, self.memo, self.memo2)
            return
        if cell == self.nb * self.nc:
            return
        j = cell // self.nc
        k = cell % self.nc
        hi = left
        if self.rows[j] < hi:
            hi = self.rows[j]
        if self.cols[k] < hi:
            hi = self.cols[k]
        if self.cap >= 0 and hi > self.cap:
            hi = self.cap
        x = hi
        while x >= 0:
            self.rows[j] -= x
            self.cols[k] -= x
            self._fill(cell + 1, left - x)
            self.rows[j] += x
            self.cols[k] += x
            x -= 1


cdef object _slices(tuple a, int i, tuple rb, tuple rc, int cap, dict memo, dict memo2):
    if i == len(a) - 1:
        return _count2(rb, rc, cap, memo2)
    key = (i, rb, rc)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rb) > MAX_CELLS or len(rc) > MAX_CELLS:
        raise ValueError("margin too long for the compiled kernel")
    total = 0
    cdef _SliceFill f
    cdef int j
    if sum(rb) - a[i] == sum(a[i + 1:]):
        f = _SliceFill()
        f.nb, f.nc, f.cap, f.i = len(rb), len(rc), cap, i
        for j in range(f.nb):
            f.rows[j] = rb[j]
        for j in range(f.nc):
            f.cols[j] = rc[j]
        f.a, f.memo, f.memo2 = a, memo, memo2
        total = f.run(a[i])
    memo[key] = total
    return total


cdef class _RowFill:
    """Distributes one matrix row over the columns, then recurses on the rest."""
    cdef int nc, cap
    cdef int residual[MAX_CELLS]
    cdef tuple rest
    cdef dict memo
    cdef object total

    cdef object run(self, int first):
        self.total = 0
        self._fill(0, first)
        return self.total

    cdef void _fill(self, int k, int left) except *:
        cdef int hi, lo, x, j, v, room
        if k == self.nc:
            if left == 0:
                nxt = _sorted_nonzero(self.residual, self.nc)
                self.total += _count2(self.rest, nxt, self.cap, self.memo)
            return
        room = 0
        for j in range(k + 1, self.nc):
            v = self.residual[j]
            if self.cap >= 0 and v > self.cap:
                v = self.cap
            room += v
        hi = left if left < self.residual[k] else self.residual[k]
        if self.cap >= 0 and hi > self.cap:
            hi = self.cap
        lo = left - room
        if lo < 0:
            lo = 0
        x = lo
        while x <= hi:
            self.residual[k] -= x
            self._fill(k + 1, left - x)
            self.residual[k] += x
            x += 1


cdef object _count2(rows, cols, int cap, dict memo):
    rows = tuple(sorted([r for r in rows if r], reverse=True))
    cols = tuple(sorted([c for c in cols if c], reverse=True))
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1
    if len(rows) == 1:
        return 1 if cap < 0 or all(c <= cap for c in cols) else 0
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    cdef _RowFill f = _RowFill()
    cdef int j
    f.nc, f.cap = len(cols), cap
    for j in range(f.nc):
        f.residual[j] = cols[j]
    f.rest, f.memo = rows[1:], memo
    total = f.run(rows[0])
    memo[key] = total
    return total
