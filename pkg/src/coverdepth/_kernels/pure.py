"""Pure-Python enumeration kernels.

These are the fallback implementations of the hot loops; the compiled
backend in ``_speedups`` mirrors them bit for bit. Both must return the same
values in the same order for identical arguments, so either can back the
public enumeration APIs.

Edge subsets of C_n are bitmasks with bit i-1 for cycle edge e_i; exponent
boxes are walked in odometer order with coordinate 1 varying fastest.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def _cycle_runs(mask: int, n: int) -> tuple[list[int], list[int]]:
    """Maximal circular runs of a proper nonempty edge mask of C_n."""
    start = 0
    for i in range(n):
        if (mask >> i) & 1 and not (mask >> ((i - 1) % n)) & 1:
            start = i
            break
    blocks: list[int] = []
    gaps: list[int] = []
    pos, consumed = start, 0
    while consumed < n:
        b = 0
        while (mask >> (pos % n)) & 1:
            b += 1
            pos += 1
        g = 0
        while consumed + b + g < n and not (mask >> (pos % n)) & 1:
            g += 1
            pos += 1
        blocks.append(b)
        gaps.append(g)
        consumed += b + g
    return blocks, gaps


def _cycle_feasible(blocks: list[int], gaps: list[int], t: int) -> bool:
    """Greedy endpoint-value propagation around the cycle.

    For each trial start value, take the largest legal block-exit value and
    the smallest legal next-entry value; both choices are extremal, so the
    subset admits endpoint values iff some trial closes the loop.
    """
    r = len(blocks)
    for u1 in range(t):
        u = u1
        ok = True
        for i in range(r):
            v = (t - 1 - u) if blocks[i] == 1 else (t - 1)
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


def cycle_admissible_masks(n: int, t: int, start: int, stop: int) -> list[int]:
    """Feasible proper nonempty edge masks of C_n in [start, stop), ascending."""
    full = (1 << n) - 1
    out: list[int] = []
    for mask in range(start, stop):
        if mask == 0 or mask == full:
            continue
        blocks, gaps = _cycle_runs(mask, n)
        if _cycle_feasible(blocks, gaps, t):
            out.append(mask)
    return out


def _box_state(edge_vmasks, n, t, fixed_last):
    incident: list[list[int]] = [[] for _ in range(n)]
    for e, vm in enumerate(edge_vmasks):
        for v in range(n):
            if (vm >> v) & 1:
                incident[v].append(e)
    a = [0] * n
    sums = [0] * len(edge_vmasks)
    n_free = n
    if fixed_last >= 0:
        n_free = n - 1
        a[n - 1] = fixed_last
        for e in incident[n - 1]:
            sums[e] += fixed_last
    low = 0
    for e, s in enumerate(sums):
        if s < t:
            low |= 1 << e
    return incident, a, sums, n_free, low


def box_admissible_masks(edge_vmasks: list[int], n: int, t: int, fixed_last: int = -1) -> list[int]:
    """Distinct nonzero low-edge masks over the exponent box {0..t}^n.

    ``edge_vmasks[e]`` holds the vertex bitmask of edge e; an edge is "low"
    for an exponent vector when its coordinate sum is < t. With
    ``fixed_last >= 0`` the last coordinate is pinned to that value (used for
    deterministic sharding).
    """
    incident, a, sums, n_free, low = _box_state(edge_vmasks, n, t, fixed_last)
    seen: set[int] = set()
    last = -1
    while True:
        if low and low != last:
            seen.add(low)
            last = low
        j = 0
        while j < n_free and a[j] == t:
            a[j] = 0
            for e in incident[j]:
                sums[e] -= t
                if sums[e] < t:
                    low |= 1 << e
                else:
                    low &= ~(1 << e)
            j += 1
        if j == n_free:
            break
        a[j] += 1
        for e in incident[j]:
            sums[e] += 1
            if sums[e] < t:
                low |= 1 << e
            else:
                low &= ~(1 << e)
    return sorted(seen)


def box_find_witness(edge_vmasks: list[int], n: int, t: int, target: int):
    """First exponent vector (odometer order) whose low mask equals target."""
    incident, a, sums, n_free, low = _box_state(edge_vmasks, n, t, -1)
    while True:
        if low == target:
            return tuple(a)
        j = 0
        while j < n_free and a[j] == t:
            a[j] = 0
            for e in incident[j]:
                sums[e] -= t
                if sums[e] < t:
                    low |= 1 << e
                else:
                    low &= ~(1 << e)
            j += 1
        if j == n_free:
            return None
        a[j] += 1
        for e in incident[j]:
            sums[e] += 1
            if sums[e] < t:
                low |= 1 << e
            else:
                low &= ~(1 << e)
