"""Ideals, faces of the state simplex and the face decomposition engine.

Faces are represented by subsets of the extreme states.  The engine splits a
measure ``m`` along a face ``F`` into ``m1 + m2`` where ``m1`` is the largest
element of ``{t in cone(F) : t <= m}`` and ``m2`` dominates no nonzero
element of that cone.  ``m1`` is found by an exact LP maximizing total mass;
the maximizer is unique because the feasible set is directed upward, so any
other optimum would sit below it with the same total and hence coincide with
it.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInconsistency, LPInfeasible, NotAMeasure, NotASimplex
from .jordan import is_disjoint
from .lp import solve_lp
from .measures import SignedMeasure, additivity_violations, combine, is_simplex
from .riesz import has_rdp


@dataclass(frozen=True)
class Ideal:
    algebra: object = field(repr=False, compare=False)
    members: frozenset
    is_ideal: bool
    is_normal: bool

    def __contains__(self, x):
        return self.algebra.idx(x) in self.members

    def __len__(self):
        return len(self.members)

    def labels(self):
        return [self.algebra.labels[i] for i in sorted(self.members)]


def _sum_sets(E, a, members):
    left = frozenset(c for i in members if (c := E.add(a, i)) is not None)
    right = frozenset(c for i in members if (c := E.add(i, a)) is not None)
    return left, right


def make_ideal(E, members):
    """Wrap a set of elements, computing the ideal and normality flags."""
    I = frozenset(E.idx(x) for x in members)
    ok = E.zero in I
    ok = ok and all(y in I for x in I for y in E.below(x))
    ok = ok and all(c in I for a, b, c in E.triples if a in I and b in I)
    normal = False
    if ok:
        normal = True
        for a in range(len(E)):
            left, right = _sum_sets(E, a, I)
            if left != right:
                normal = False
                break
    return Ideal(E, I, ok, normal)


def ideal_closure(E, X):
    """Least ideal containing X."""
    I = {E.zero} | {E.idx(x) for x in X}
    frontier = list(I)
    while frontier:
        new = set()
        for x in frontier:
            new.update(y for y in E.below(x) if y not in I)
        for a, b, c in E.triples:
            if a in I and b in I and c not in I:
                new.add(c)
        I |= new
        frontier = list(new)
    return make_ideal(E, I)


@dataclass(frozen=True)
class Face:
    vertex_indices: tuple
    defining_kernel: frozenset = None

    def __len__(self):
        return len(self.vertex_indices)

    def __contains__(self, i):
        return i in self.vertex_indices

    def vertices(self, P):
        return [P.vertices[i] for i in self.vertex_indices]


def face_from_vertices(P, indices):
    idx = tuple(sorted(set(indices)))
    if any(not 0 <= i < len(P.vertices) for i in idx):
        raise IndexError("vertex index out of range")
    return Face(idx)


def whole_face(P):
    return Face(tuple(range(len(P.vertices))))


def kernel_face(E, P, X):
    """Face of states vanishing on X."""
    X = frozenset(E.idx(x) for x in X)
    idx = tuple(i for i, v in enumerate(P.vertices) if all(v.values[x] == 0 for x in X))
    return Face(idx, X)


def _require_simplex(P):
    if not is_simplex(P):
        raise NotASimplex(f"state space has {len(P.vertices)} affinely dependent extreme states")


def complementary_face(E, P, F):
    """Face spanned by the extreme states outside F; requires a simplex.

    When E has the Riesz decomposition property the result is cross-checked
    against the disjointness description: a vertex belongs to the complement
    iff its meet with every vertex of F is 0.
    """
    _require_simplex(P)
    comp = Face(tuple(i for i in range(len(P.vertices)) if i not in F.vertex_indices))
    if F.vertex_indices and has_rdp(E):
        by_meet = tuple(
            i
            for i, v in enumerate(P.vertices)
            if all(is_disjoint(v, P.vertices[j]) for j in F.vertex_indices)
        )
        if by_meet != comp.vertex_indices:
            raise InternalInconsistency("vertex complement and disjointness complement disagree")
    return comp


def face_intersection_complement_law(E, P, faces):
    """Complement of an intersection equals the span of the union of complements."""
    faces = list(faces)
    if not faces:
        raise ValueError("need at least one face")
    _require_simplex(P)
    common = set(faces[0].vertex_indices)
    for F in faces[1:]:
        common &= set(F.vertex_indices)
    lhs = complementary_face(E, P, Face(tuple(sorted(common))))
    union = set()
    for F in faces:
        union |= set(complementary_face(E, P, F).vertex_indices)
    return set(lhs.vertex_indices) == union


@dataclass(frozen=True)
class DecompositionCertificate:
    lp_optimum: Fraction
    weights: tuple
    singular_optimum: Fraction
    constraint_order: tuple
    note: str = (
        "the feasible cone elements below m form an upward directed set, so the "
        "total-mass maximizer is its greatest element and is unique"
    )

    def as_dict(self):
        return {
            "lp_optimum": str(self.lp_optimum),
            "weights": [[i, str(w)] for i, w in self.weights],
            "singular_optimum": str(self.singular_optimum),
            "uniqueness": self.note,
        }


def _largest_below(E, P, F, m, order):
    """LP: maximize sum(l_i) s.t. sum(l_i s_i(x)) <= m(x), l >= 0.  Returns (optimum, weights)."""
    verts = F.vertices(P)
    if not verts:
        return Fraction(0), []
    A = [[v.values[x] for v in verts] for x in order]
    b = [m.values[x] for x in order]
    res = solve_lp([1] * len(verts), A_ub=A, b_ub=b)
    if res.status != "optimal":
        raise LPInfeasible(f"face decomposition LP returned {res.status}")
    return res.objective, res.x


def _check_measure(E, m):
    if not m.is_positive():
        raise NotAMeasure("face decomposition needs a nonnegative measure")
    if additivity_violations(E, m):
        raise NotAMeasure("input is not additive")


WHOLE_SPACE_NOTE = (
    "the face is the whole state space: any t <= m with t(1) = m(1) equals m, "
    "since t(x) + t(x-) = m(x) + m(x-), so m itself is the unique maximizer"
)


def face_decompose(E, P, F, m, constraint_order=None):
    """Unique split m = m1 + m2 with m1 in the cone over F and m2 singular to it.

    Returns (m1, m2, certificate).  ``constraint_order`` permutes the LP rows;
    the output does not depend on it.  A simplex is required unless F is the
    whole state space, whose cone contains every measure.
    """
    whole = len(F) == len(P.vertices)
    if not whole:
        _require_simplex(P)
    _check_measure(E, m)
    order = tuple(range(len(E))) if constraint_order is None else tuple(constraint_order)
    if sorted(order) != list(range(len(E))):
        raise ValueError("constraint_order must be a permutation of the element indices")
    verts = F.vertices(P)
    opt, lam = _largest_below(E, P, F, m, order)
    m1 = combine(E, verts, lam)
    m2 = m - m1
    if not m2.is_positive():
        raise LPInfeasible("remainder is not a measure")
    sing, _ = _largest_below(E, P, F, m2, order)
    if sing != 0:
        raise LPInfeasible(f"remainder still dominates cone mass {sing}")
    weights = tuple((F.vertex_indices[i], w) for i, w in enumerate(lam))
    if whole and not is_simplex(P):
        if m1 != m:
            raise LPInfeasible("whole-space decomposition did not recover m")
        cert = DecompositionCertificate(opt, weights, sing, order, WHOLE_SPACE_NOTE)
    else:
        cert = DecompositionCertificate(opt, weights, sing, order)
    return m1, m2, cert


@dataclass(frozen=True)
class ConvexSplit:
    lam1: Fraction
    s1: SignedMeasure
    lam2: Fraction
    s2: SignedMeasure


def convex_state_decompose(E, P, F, s):
    """s = lam1 s1 + lam2 s2 with s1 in F and s2 in the complementary face.

    A component whose weight is 0 is returned as None.
    """
    m1, m2, _ = face_decompose(E, P, F, s)
    l1, l2 = m1.total, m2.total
    if l1 + l2 != 1:
        raise NotAMeasure("input is not a state")
    return ConvexSplit(l1, m1 / l1 if l1 else None, l2, m2 / l2 if l2 else None)
