"""Pure-Python kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors every
function here with the same signature, the same iteration order and hence the
same witnesses.  Array arguments are numpy arrays; ``-1`` marks an undefined sum.
"""

import numpy as np


def associativity_violations(plus):
    """All (a, b, c) where (a+b)+c and a+(b+c) disagree in definedness or value."""
    p = plus.tolist()
    n = len(p)
    bad = set()
    for a in range(n):
        row_a = p[a]
        for b in range(n):
            s = row_a[b]
            if s >= 0:
                row_s = p[s]
                row_b = p[b]
                for c in range(n):
                    left = row_s[c]
                    r = row_b[c]
                    right = row_a[r] if r >= 0 else -1
                    if left != right:
                        bad.add((a, b, c))
    for b in range(n):
        row_b = p[b]
        for c in range(n):
            r = row_b[c]
            if r >= 0:
                for a in range(n):
                    right = p[a][r]
                    if right < 0:
                        continue
                    s = p[a][b]
                    left = p[s][c] if s >= 0 else -1
                    if left != right:
                        bad.add((a, b, c))
    return sorted(bad)


def difference_tables(plus):
    """Return (right_diff, left_diff, clashes).

    ``right_diff[a, s]`` is the smallest c with a + c = s, ``left_diff[a, s]``
    the smallest d with d + a = s.  ``clashes`` lists ("right"|"left", a, s)
    whenever that element is not unique (a cancellation failure).
    """
    p = plus.tolist()
    n = len(p)
    rd = [[-1] * n for _ in range(n)]
    ld = [[-1] * n for _ in range(n)]
    clashes = []
    for a in range(n):
        row = p[a]
        for c in range(n):
            s = row[c]
            if s < 0:
                continue
            if rd[a][s] < 0:
                rd[a][s] = c
            else:
                clashes.append(("right", a, s))
            if ld[c][s] < 0:
                ld[c][s] = a
            else:
                clashes.append(("left", c, s))
    return np.array(rd, dtype=np.int32), np.array(ld, dtype=np.int32), sorted(clashes)


def fold_step(ta, tb, tc, prev, cur, n, maximize):
    """One step of the decomposition DP: out[c] = opt over a+b=c of prev[a] + cur[b]."""
    prev = prev.tolist()
    cur = cur.tolist()
    out = [None] * n
    if maximize:
        for a, b, c in zip(ta.tolist(), tb.tolist(), tc.tolist()):
            v = prev[a] + cur[b]
            o = out[c]
            if o is None or v > o:
                out[c] = v
    else:
        for a, b, c in zip(ta.tolist(), tb.tolist(), tc.tolist()):
            v = prev[a] + cur[b]
            o = out[c]
            if o is None or v < o:
                out[c] = v
    return out


def fold_step_objects(ta, tb, tc, prev, cur, n, maximize):
    """Same as :func:`fold_step` for arbitrary-precision Python numbers (lists in, list out)."""
    out = [None] * n
    better = (lambda v, o: v > o) if maximize else (lambda v, o: v < o)
    for a, b, c in zip(ta, tb, tc):
        v = prev[a] + cur[b]
        o = out[c]
        if o is None or better(v, o):
            out[c] = v
    return out


def _masks(leq):
    n = len(leq)
    down = [0] * n
    up = [0] * n
    for a in range(n):
        row = leq[a]
        for b in range(n):
            if row[b]:
                up[a] |= 1 << b
                down[b] |= 1 << a
    return down, up


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def rip_scan(leq):
    """First (a1, a2, b1, b2) with a1, a2 <= b1, b2 and no c in between, else None."""
    lq = leq.tolist()
    n = len(lq)
    down, up = _masks(lq)
    seen = set()
    for a1 in range(n):
        for a2 in range(a1, n):
            u = up[a1] & up[a2]
            if u in seen:
                continue
            seen.add(u)
            members = _bits(u)
            for i, b1 in enumerate(members):
                ub1 = u & down[b1]
                for b2 in members[i:]:
                    if not ub1 & down[b2]:
                        return (a1, a2, b1, b2)
    return None


def rdp0_scan(right_diff, leq, ta, tb, tc):
    """First (a, b1, b2) with a <= b1+b2 admitting no a = d1+d2, d1 <= b1, d2 <= b2."""
    rd = right_diff.tolist()
    lq = leq.tolist()
    n = len(lq)
    triples = list(zip(ta.tolist(), tb.tolist(), tc.tolist()))
    for a in range(n):
        splits = [(d1, rd[d1][a]) for d1 in range(n) if rd[d1][a] >= 0]
        for b1, b2, s in triples:
            if not lq[a][s]:
                continue
            if not any(lq[d1][b1] and lq[d2][b2] for d1, d2 in splits):
                return (a, b1, b2)
    return None


def rdp_scan(plus, right_diff, pa, pb, offsets, com, disjoint):
    """Scan all equalities a1+a2 = b1+b2 for common refinements.

    ``pa``/``pb`` list the defined pairs grouped by their sum; group g occupies
    ``offsets[g]:offsets[g+1]``.  Returns three witnesses (or None) for the
    first equality lacking a refinement, a refinement with d2 com d3, and a
    refinement with d2, d3 disjoint.
    """
    p = plus.tolist()
    rd = right_diff.tolist()
    cm = com.tolist()
    dj = disjoint.tolist()
    pa = pa.tolist()
    pb = pb.tolist()
    offsets = offsets.tolist()
    n = len(p)
    found = [None, None, None]
    for g in range(len(offsets) - 1):
        lo, hi = offsets[g], offsets[g + 1]
        for i in range(lo, hi):
            a1, a2 = pa[i], pb[i]
            for j in range(lo, hi):
                b1, b2 = pa[j], pb[j]
                f0 = f1 = f2 = False
                for d1 in range(n):
                    d2 = rd[d1][a1]
                    if d2 < 0:
                        continue
                    d3 = rd[d1][b1]
                    if d3 < 0:
                        continue
                    d4 = rd[d3][a2]
                    if d4 < 0 or p[d2][d4] != b2:
                        continue
                    f0 = True
                    if cm[d2][d3]:
                        f1 = True
                    if dj[d2][d3]:
                        f2 = True
                    if f1 and f2:
                        break
                w = (a1, a2, b1, b2)
                if not f0 and found[0] is None:
                    found[0] = w
                if not f1 and found[1] is None:
                    found[1] = w
                if not f2 and found[2] is None:
                    found[2] = w
                if found[0] is not None:
                    return tuple(found)
    return tuple(found)
