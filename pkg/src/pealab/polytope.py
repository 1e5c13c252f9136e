"""Exact vertex enumeration by the double description method.

Polytopes are given as ``{y : b_i + a_i . y >= 0}``.  The problem is
homogenized to the cone ``{(t, y) : t >= 0, b_i t + a_i . y >= 0}`` whose
extreme rays with ``t > 0`` are the vertices.  Rays and constraint rows are
kept as primitive integer vectors, so the iteration runs on Python ints.
"""

from fractions import Fraction

from .exact import dot, primitive, rank, solve_square


class UnboundedPolytope(ValueError):
    pass


def _initial_basis(H, D):
    """Indices of D linearly independent rows, chosen greedily in order."""
    chosen = []
    for i, row in enumerate(H):
        if rank([H[j] for j in chosen] + [row]) > len(chosen):
            chosen.append(i)
            if len(chosen) == D:
                return chosen
    return None


def cone_extreme_rays(H):
    """Extreme rays of the pointed cone {z : h . z >= 0 for h in H} (integer rows)."""
    D = len(H[0])
    basis = _initial_basis(H, D)
    if basis is None:
        raise UnboundedPolytope("constraint system does not define a pointed cone")
    A = [[Fraction(v) for v in H[i]] for i in basis]
    rays = []
    zeros = []
    for j in range(D):
        e = [0] * D
        e[j] = 1
        r = solve_square(A, e)
        rays.append(primitive(r))
        z = 0
        for k, i in enumerate(basis):
            if k != j:
                z |= 1 << i
        zeros.append(z)
    in_basis = set(basis)
    for i, h in enumerate(H):
        if i in in_basis:
            continue
        vals = [dot(h, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        if not neg:
            for k in zer:
                zeros[k] |= 1 << i
            continue
        new_rays, new_zeros = [], []
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if common.bit_count() < D - 2:
                    continue
                if any(k != p and k != q and zeros[k] & common == common for k in range(len(rays))):
                    continue
                w = [vals[p] * b - vals[q] * a for a, b in zip(rays[p], rays[q])]
                new_rays.append(primitive(w))
                new_zeros.append(common | (1 << i))
        keep = pos + zer
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | ((1 << i) if k in set(zer) else 0) for k in keep] + new_zeros
    return rays


def polytope_vertices(rows):
    """Vertices of {y : b + a . y >= 0 for (b, a) in rows}, sorted lexicographically.

    ``rows`` holds ``(b, a)`` pairs with rational entries.  Raises
    UnboundedPolytope if the region is unbounded.
    """
    H = []
    seen = set()
    for b, a in rows:
        h = tuple(primitive([b] + list(a)))
        if any(h) and h not in seen:
            seen.add(h)
            H.append(list(h))
    d = len(rows[0][1]) if rows else 0
    t_row = tuple([1] + [0] * d)
    if t_row not in seen:
        H.insert(0, list(t_row))
    verts = []
    for r in cone_extreme_rays(H):
        if r[0] == 0:
            raise UnboundedPolytope("region has a recession direction")
        verts.append(tuple(Fraction(v, r[0]) for v in r[1:]))
    return sorted(set(verts))
