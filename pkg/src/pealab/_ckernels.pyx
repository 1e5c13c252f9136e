# cython: language_level=3
"""Compiled kernels; see _pykernels.py for the reference semantics."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t


def associativity_violations(const int32_t[:, ::1] plus):
    cdef Py_ssize_t n = plus.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int32_t s, r, left, right
    bad = set()
    for a in range(n):
        for b in range(n):
            s = plus[a, b]
            if s >= 0:
                for c in range(n):
                    left = plus[s, c]
                    r = plus[b, c]
                    right = plus[a, r] if r >= 0 else -1
                    if left != right:
                        bad.add((a, b, c))
    for b in range(n):
        for c in range(n):
            r = plus[b, c]
            if r >= 0:
                for a in range(n):
                    right = plus[a, r]
                    if right < 0:
                        continue
                    s = plus[a, b]
                    left = plus[s, c] if s >= 0 else -1
                    if left != right:
                        bad.add((a, b, c))
    return sorted(bad)


def difference_tables(const int32_t[:, ::1] plus):
    cdef Py_ssize_t n = plus.shape[0]
    rd_arr = np.full((n, n), -1, dtype=np.int32)
    ld_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int32_t[:, ::1] rd = rd_arr
    cdef int32_t[:, ::1] ld = ld_arr
    cdef Py_ssize_t a, c
    cdef int32_t s
    clashes = []
    for a in range(n):
        for c in range(n):
            s = plus[a, c]
            if s < 0:
                continue
            if rd[a, s] < 0:
                rd[a, s] = c
            else:
                clashes.append(("right", a, s))
            if ld[c, s] < 0:
                ld[c, s] = a
            else:
                clashes.append(("left", c, s))
    return rd_arr, ld_arr, sorted(clashes)


def fold_step(const int32_t[::1] ta, const int32_t[::1] tb, const int32_t[::1] tc,
              const int64_t[::1] prev, const int64_t[::1] cur, Py_ssize_t n, bint maximize):
    out_arr = np.zeros(n, dtype=np.int64)
    seen_arr = np.zeros(n, dtype=np.uint8)
    cdef int64_t[::1] out = out_arr
    cdef uint8_t[::1] seen = seen_arr
    cdef Py_ssize_t k, m = ta.shape[0]
    cdef int32_t c
    cdef int64_t v
    for k in range(m):
        c = tc[k]
        v = prev[ta[k]] + cur[tb[k]]
        if not seen[c]:
            out[c] = v
            seen[c] = 1
        elif maximize:
            if v > out[c]:
                out[c] = v
        elif v < out[c]:
            out[c] = v
    return [int(out[k]) if seen[k] else None for k in range(n)]


def fold_step_objects(ta, tb, tc, prev, cur, n, maximize):
    out = [None] * n
    for a, b, c in zip(ta, tb, tc):
        v = prev[a] + cur[b]
        o = out[c]
        if o is None or (v > o if maximize else v < o):
            out[c] = v
    return out


def rip_scan(const uint8_t[:, ::1] leq):
    cdef Py_ssize_t n = leq.shape[0]
    cdef Py_ssize_t a1, a2, b1, b2, c
    cdef bint ok
    for a1 in range(n):
        for a2 in range(a1, n):
            for b1 in range(n):
                if not (leq[a1, b1] and leq[a2, b1]):
                    continue
                for b2 in range(b1, n):
                    if not (leq[a1, b2] and leq[a2, b2]):
                        continue
                    ok = False
                    for c in range(n):
                        if leq[a1, c] and leq[a2, c] and leq[c, b1] and leq[c, b2]:
                            ok = True
                            break
                    if not ok:
                        return (a1, a2, b1, b2)
    return None


def rdp0_scan(const int32_t[:, ::1] right_diff, const uint8_t[:, ::1] leq,
              const int32_t[::1] ta, const int32_t[::1] tb, const int32_t[::1] tc):
    cdef Py_ssize_t n = leq.shape[0]
    cdef Py_ssize_t m = ta.shape[0]
    cdef Py_ssize_t a, k, d1
    cdef int32_t b1, b2, s, d2
    cdef bint ok
    for a in range(n):
        for k in range(m):
            b1 = ta[k]
            b2 = tb[k]
            s = tc[k]
            if not leq[a, s]:
                continue
            ok = False
            for d1 in range(n):
                d2 = right_diff[d1, a]
                if d2 >= 0 and leq[d1, b1] and leq[d2, b2]:
                    ok = True
                    break
            if not ok:
                return (a, int(b1), int(b2))
    return None


def rdp_scan(const int32_t[:, ::1] plus, const int32_t[:, ::1] right_diff,
             const int32_t[::1] pa, const int32_t[::1] pb, const int64_t[::1] offsets,
             const uint8_t[:, ::1] com, const uint8_t[:, ::1] disjoint):
    cdef Py_ssize_t n = plus.shape[0]
    cdef Py_ssize_t g, i, j, lo, hi, d1
    cdef int32_t a1, a2, b1, b2, d2, d3, d4
    cdef bint f0, f1, f2
    found = [None, None, None]
    for g in range(offsets.shape[0] - 1):
        lo = offsets[g]
        hi = offsets[g + 1]
        for i in range(lo, hi):
            a1 = pa[i]
            a2 = pb[i]
            for j in range(lo, hi):
                b1 = pa[j]
                b2 = pb[j]
                f0 = f1 = f2 = False
                for d1 in range(n):
                    d2 = right_diff[d1, a1]
                    if d2 < 0:
                        continue
                    d3 = right_diff[d1, b1]
                    if d3 < 0:
                        continue
                    d4 = right_diff[d3, a2]
                    if d4 < 0 or plus[d2, d4] != b2:
                        continue
                    f0 = True
                    if com[d2, d3]:
                        f1 = True
                    if disjoint[d2, d3]:
                        f2 = True
                    if f1 and f2:
                        break
                if not (f0 and f1 and f2):
                    w = (int(a1), int(a2), int(b1), int(b2))
                    if not f0 and found[0] is None:
                        found[0] = w
                    if not f1 and found[1] is None:
                        found[1] = w
                    if not f2 and found[2] is None:
                        found[2] = w
                    if found[0] is not None:
                        return tuple(found)
    return tuple(found)
