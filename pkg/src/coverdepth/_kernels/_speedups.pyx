# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; mirrors coverdepth._kernels.pure exactly.

Masks are limited to 62 bits here; the dispatcher falls back to the pure
module beyond that.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector


cdef int _cycle_runs(uint64_t mask, int n, int* blocks, int* gaps) nogil:
    cdef int start = 0, i, pos, consumed, b, g, r
    for i in range(n):
        if (mask >> i) & 1 and not (mask >> ((i - 1 + n) % n)) & 1:
            start = i
            break
    r = 0
    pos = start
    consumed = 0
    while consumed < n:
        b = 0
        while (mask >> (pos % n)) & 1:
            b += 1
            pos += 1
        g = 0
        while consumed + b + g < n and not (mask >> (pos % n)) & 1:
            g += 1
            pos += 1
        blocks[r] = b
        gaps[r] = g
        r += 1
        consumed += b + g
    return r


cdef bint _cycle_feasible(int* blocks, int* gaps, int r, int t) nogil:
    cdef int u1, u, v, i
    cdef bint ok
    for u1 in range(t):
        u = u1
        ok = True
        for i in range(r):
            if blocks[i] == 1:
                v = t - 1 - u
            else:
                v = t - 1
            if gaps[i] == 1:
                u = t - v
                if u < 0:
                    u = 0
                elif u > t - 1:
                    ok = False
                    break
            else:
                u = 0
        if ok and u <= u1:
            return True
    return False


def cycle_admissible_masks(int n, int t, uint64_t start, uint64_t stop):
    """Feasible proper nonempty edge masks of C_n in [start, stop), ascending."""
    if n < 3 or n > 62:
        raise ValueError("compiled kernel supports 3 <= n <= 62")
    if t < 1:
        raise ValueError("threshold must be >= 1")
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef vector[uint64_t] found
    cdef uint64_t mask
    cdef int blocks[64]
    cdef int gaps[64]
    cdef int r
    with nogil:
        mask = start
        while mask < stop:
            if mask != 0 and mask != full:
                r = _cycle_runs(mask, n, blocks, gaps)
                if _cycle_feasible(blocks, gaps, r, t):
                    found.push_back(mask)
            mask += 1
    return [found[i] for i in range(found.size())]


cdef void _apply_delta(
    int j, int delta, int t,
    int* inc_flat, int* inc_off,
    int64_t* sums, uint64_t* low,
) nogil:
    cdef int k, e
    for k in range(inc_off[j], inc_off[j + 1]):
        e = inc_flat[k]
        sums[e] += delta
        if sums[e] < t:
            low[0] |= (<uint64_t>1) << e
        else:
            low[0] &= ~((<uint64_t>1) << e)


cdef class _BoxState:
    cdef int n, m, t, n_free
    cdef vector[int] inc_flat
    cdef vector[int] inc_off
    cdef vector[int] a
    cdef vector[int64_t] sums
    cdef uint64_t low

    def __cinit__(self, edge_vmasks, int n, int t, int fixed_last):
        cdef int v, e
        cdef uint64_t vm
        self.n = n
        self.m = len(edge_vmasks)
        self.t = t
        self.a = vector[int](n, 0)
        self.sums = vector[int64_t](self.m, 0)
        self.inc_off = vector[int](n + 1, 0)
        masks = [int(x) for x in edge_vmasks]
        for v in range(n):
            self.inc_off[v + 1] = self.inc_off[v]
            for e in range(self.m):
                vm = masks[e]
                if (vm >> v) & 1:
                    self.inc_flat.push_back(e)
                    self.inc_off[v + 1] += 1
        self.n_free = n
        if fixed_last >= 0:
            self.n_free = n - 1
            self.a[n - 1] = fixed_last
            for e in range(self.inc_off[n - 1], self.inc_off[n]):
                self.sums[self.inc_flat[e]] += fixed_last
        self.low = 0
        for e in range(self.m):
            if self.sums[e] < t:
                self.low |= (<uint64_t>1) << e


def box_admissible_masks(edge_vmasks, int n, int t, int fixed_last=-1):
    """Distinct nonzero low-edge masks over the exponent box {0..t}^n."""
    if n < 1 or n > 62 or len(edge_vmasks) > 62:
        raise ValueError("compiled kernel supports at most 62 vertices/edges")
    if t < 1:
        raise ValueError("threshold must be >= 1")
    cdef _BoxState st = _BoxState(edge_vmasks, n, t, fixed_last)
    cdef unordered_set[uint64_t] seen
    cdef int j
    cdef int* inc_flat = st.inc_flat.data()
    cdef int* inc_off = st.inc_off.data()
    cdef int* a = st.a.data()
    cdef int64_t* sums = st.sums.data()
    cdef uint64_t low = st.low
    cdef uint64_t last = 0
    cdef int n_free = st.n_free
    with nogil:
        while True:
            if low != 0 and low != last:
                seen.insert(low)
                last = low
            j = 0
            while j < n_free and a[j] == t:
                a[j] = 0
                _apply_delta(j, -t, t, inc_flat, inc_off, sums, &low)
                j += 1
            if j == n_free:
                break
            a[j] += 1
            _apply_delta(j, 1, t, inc_flat, inc_off, sums, &low)
    return sorted(seen)


def box_find_witness(edge_vmasks, int n, int t, uint64_t target):
    """First exponent vector (odometer order) whose low mask equals target."""
    if n < 1 or n > 62 or len(edge_vmasks) > 62:
        raise ValueError("compiled kernel supports at most 62 vertices/edges")
    if t < 1:
        raise ValueError("threshold must be >= 1")
    cdef _BoxState st = _BoxState(edge_vmasks, n, t, -1)
    cdef int j
    cdef bint found = False
    cdef int* inc_flat = st.inc_flat.data()
    cdef int* inc_off = st.inc_off.data()
    cdef int* a = st.a.data()
    cdef int64_t* sums = st.sums.data()
    cdef uint64_t low = st.low
    cdef int n_free = st.n_free
    with nogil:
        while True:
            if low == target:
                found = True
                break
            j = 0
            while j < n_free and a[j] == t:
                a[j] = 0
                _apply_delta(j, -t, t, inc_flat, inc_off, sums, &low)
                j += 1
            if j == n_free:
                break
            a[j] += 1
            _apply_delta(j, 1, t, inc_flat, inc_off, sums, &low)
    if not found:
        return None
    return tuple(st.a[i] for i in range(st.n))
