"""Exact rational linear algebra over :class:`fractions.Fraction`."""

from fractions import Fraction
from math import gcd

import numpy as np

# rows are screened modulo this prime before exact elimination
PRIME = 2_147_483_647


def rref(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot columns).  Input is not modified."""
    M = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        piv = M[r][c]
        if piv != 1:
            M[r] = [v / piv for v in M[r]]
        Mr = M[r]
        support = [j for j in range(c, len(Mr)) if Mr[j]]
        for i in range(len(M)):
            Mi = M[i]
            if i != r and Mi[c] != 0:
                f = Mi[c]
                for j in support:
                    Mi[j] -= f * Mr[j]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(vectors):
    if not vectors:
        return 0
    return len(rref(vectors, len(vectors[0]))[1])


def _spanning_rows_mod_p(aug, p=PRIME):
    """Indices of rows that are independent modulo p and span the rest modulo p."""
    M = np.array(aug, dtype=np.int64) % p
    idx = np.arange(len(aug))
    r = 0
    for c in range(M.shape[1]):
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
            idx[[r, pr]] = idx[[pr, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        below = M[r + 1:, c].copy()
        M[r + 1:] = (M[r + 1:] - np.outer(below, M[r]) % p) % p
        r += 1
        if r == len(aug):
            break
    return sorted(idx[:r].tolist())


def _satisfies_all(A, b, x0, basis):
    for row, bi in zip(A, b):
        nz = [(j, v) for j, v in enumerate(row) if v]
        if sum(v * x0[j] for j, v in nz) != bi:
            return False
        if any(sum(v * vec[j] for j, v in nz) for vec in basis):
            return False
    return True


def _is_small_int(v):
    return (isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)) and abs(v) < 1 << 30


def solve_affine(A, b, ncols):
    """Solution set of A x = b as (particular solution, nullspace basis), or None if inconsistent.

    Tall integer systems are first cut down to rows that span modulo a large
    prime; the exact answer on that subset is then checked against every
    original row, falling back to full elimination if the screen was unlucky.
    """
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    if len(aug) > 2 * (ncols + 1) and all(_is_small_int(v) for row in aug for v in row):
        keep = _spanning_rows_mod_p([[int(v) for v in row] for row in aug])
        sol = _solve_rows([aug[i] for i in keep], ncols)
        if sol is not None and _satisfies_all(A, b, *sol):
            return sol
    return _solve_rows(aug, ncols)


def _solve_rows(aug, ncols):
    R, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x0 = [Fraction(0)] * ncols
    for row, c in zip(R, piv):
        x0[c] = row[ncols]
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(R, piv):
            v[c] = -row[f]
        basis.append(v)
    return x0, basis


def solve_square(A, b):
    """Unique solution of a square nonsingular system, else None."""
    n = len(A)
    sol = solve_affine(A, b, n)
    if sol is None or sol[1]:
        return None
    return sol[0]


def primitive(vec):
    """Scale a rational vector to the primitive integer vector with the same direction."""
    den = 1
    for v in vec:
        v = Fraction(v)
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))
