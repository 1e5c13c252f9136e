"""Signed measures, measures and states with exact rational values, and the state polytope."""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import AdditivityViolation, AlgebraMismatch, EmptyStateSpace, NotAMeasure
from .exact import rank, solve_affine
from .polytope import polytope_vertices


def _frac(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q' strings")
    return Fraction(v)


class SignedMeasure:
    """An element-indexed vector of rationals attached to an algebra.

    Construction does not check additivity; use :func:`validate_signed_measure`
    for untrusted input.  Sums, differences and rational multiples of additive
    functions are additive, so arithmetic results need no re-check.
    """

    __slots__ = ("algebra", "values")

    def __init__(self, E, values):
        self.algebra = E
        if isinstance(values, dict):
            vals = [Fraction(0)] * len(E)
            for k, v in values.items():
                vals[E.idx(k)] = _frac(v)
            values = vals
        self.values = tuple(_frac(v) for v in values)
        if len(self.values) != len(E):
            raise ValueError(f"expected {len(E)} values, got {len(self.values)}")

    @classmethod
    def zero(cls, E):
        return cls(E, [Fraction(0)] * len(E))

    def __getitem__(self, x):
        return self.values[self.algebra.idx(x)]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def _same(self, other):
        if not isinstance(other, SignedMeasure):
            raise TypeError(f"expected a SignedMeasure, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra.digest != self.algebra.digest:
            raise AlgebraMismatch("measures live on different algebras")

    def __add__(self, other):
        self._same(other)
        return SignedMeasure(self.algebra, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return SignedMeasure(self.algebra, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return SignedMeasure(self.algebra, [-a for a in self.values])

    def __mul__(self, k):
        k = _frac(k)
        return SignedMeasure(self.algebra, [k * a for a in self.values])

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = _frac(k)
        return SignedMeasure(self.algebra, [a / k for a in self.values])

    def __eq__(self, other):
        if not isinstance(other, SignedMeasure):
            return NotImplemented
        return self.values == other.values and (
            other.algebra is self.algebra or other.algebra.digest == self.algebra.digest
        )

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        L = self.algebra.labels
        body = ", ".join(f"{L[i]}: {v}" for i, v in enumerate(self.values))
        return f"SignedMeasure({{{body}}})"

    def leq(self, other):
        """Pointwise order."""
        self._same(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def is_zero(self):
        return not any(self.values)

    def is_positive(self):
        return all(v >= 0 for v in self.values)

    @property
    def total(self):
        return self.values[self.algebra.one]

    def support(self):
        return [i for i, v in enumerate(self.values) if v != 0]

    def as_dict(self):
        return {lab: str(v) for lab, v in zip(self.algebra.labels, self.values)}


def _coerce(E, values):
    if isinstance(values, SignedMeasure):
        if values.algebra is not E and values.algebra.digest != E.digest:
            raise AlgebraMismatch("measure belongs to a different algebra")
        return values
    return SignedMeasure(E, values)


def additivity_violations(E, values):
    """List of (a, b, c, lhs, rhs) with a+b=c but m(a)+m(b) != m(c); a 0 at index zero is included."""
    m = _coerce(E, values).values
    out = []
    z = E.zero
    if m[z] != 0:
        out.append((z, z, z, m[z] + m[z], m[z]))
    for a, b, c in E.triples:
        lhs = m[a] + m[b]
        if lhs != m[c]:
            out.append((a, b, c, lhs, m[c]))
    return out


def validate_signed_measure(E, values):
    m = _coerce(E, values)
    bad = additivity_violations(E, m)
    if bad:
        raise AdditivityViolation(bad, E.labels)
    return m


def validate_measure(E, values):
    m = validate_signed_measure(E, values)
    for i, v in enumerate(m.values):
        if v < 0:
            raise NotAMeasure(f"negative value {v} at {E.labels[i]}")
    return m


def validate_state(E, values):
    m = validate_measure(E, values)
    if m.total != 1:
        raise NotAMeasure(f"value at the unit is {m.total}, not 1")
    return m


def is_measure(m):
    return m.is_positive() and not additivity_violations(m.algebra, m)


def is_state(m):
    return is_measure(m) and m.total == 1


def state_equalities(E):
    """Linear system (rows, rhs) over one variable per element describing additive normalized functions."""
    n = len(E)
    rows, rhs = [], []
    seen = set()

    def push(coeffs, b):
        key = (tuple(sorted(coeffs.items())), b)
        if key in seen:
            return
        seen.add(key)
        row = [0] * n
        for k, v in coeffs.items():
            row[k] += v
        if any(row) or b:
            rows.append(row)
            rhs.append(b)

    push({E.zero: 1}, 0)
    push({E.one: 1}, 1)
    for a, b, c in E.triples:
        coeffs = {}
        for k, v in ((a, 1), (b, 1), (c, -1)):
            coeffs[k] = coeffs.get(k, 0) + v
        push({k: v for k, v in coeffs.items() if v}, 0)
    return rows, rhs


@dataclass(frozen=True)
class StatePolytope:
    """Exact description of the state space.

    States are the points ``particular + sum(y_j * directions[j])`` that are
    nonnegative; ``vertices`` lists the extreme states in lexicographic order
    of their value vectors.
    """

    algebra: object
    equalities: tuple
    particular: tuple
    directions: tuple
    vertices: tuple
    affine_dim: int

    @property
    def is_empty(self):
        return not self.vertices

    def __len__(self):
        return len(self.vertices)

    def satisfies(self, values):
        """Does the vector satisfy every defining constraint (equalities and positivity)?"""
        rows, rhs = self.equalities
        v = list(values)
        return all(x >= 0 for x in v) and all(
            sum(c * x for c, x in zip(r, v)) == b for r, b in zip(rows, rhs)
        )

    def vertex_index(self, m):
        return self.vertices.index(m)


def state_space(E):
    """Extreme states of E, computed exactly (cached on the algebra)."""
    if "state_space" in E.cache:
        return E.cache["state_space"]
    n = len(E)
    rows, rhs = state_equalities(E)
    sol = solve_affine(rows, rhs, n)
    if sol is None:
        P = StatePolytope(E, (tuple(map(tuple, rows)), tuple(rhs)), (), (), (), -1)
    else:
        x0, basis = sol
        d = len(basis)
        if d == 0:
            pts = [tuple(x0)] if all(v >= 0 for v in x0) else []
        else:
            ineq = [(x0[x], [b[x] for b in basis]) for x in range(n)]
            pts = []
            for y in polytope_vertices(ineq):
                pts.append(tuple(x0[x] + sum(yj * b[x] for yj, b in zip(y, basis)) for x in range(n)))
        verts = tuple(SignedMeasure(E, p) for p in sorted(pts))
        dim = rank([[a - b for a, b in zip(v.values, verts[0].values)] for v in verts[1:]]) if verts else -1
        P = StatePolytope(
            E,
            (tuple(map(tuple, rows)), tuple(rhs)),
            tuple(x0),
            tuple(tuple(b) for b in basis),
            verts,
            dim,
        )
    E.cache["state_space"] = P
    return P


def is_simplex(P):
    """Extreme states affinely independent (vacuously true when empty)."""
    k = len(P.vertices)
    if k <= 1:
        return True
    v0 = P.vertices[0].values
    diffs = [[a - b for a, b in zip(v.values, v0)] for v in P.vertices[1:]]
    return rank(diffs) == k - 1


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def sample_measure(E, P, seed, scale_bound=1, denominator=4):
    """Seeded nonnegative rational combination of the extreme states.

    Coefficients are multiples of ``1/denominator`` in ``[0, scale_bound]``.
    """
    if P.is_empty:
        raise EmptyStateSpace("the algebra has no states")
    rng = _rng(seed)
    top = int(scale_bound * denominator)
    coeffs = [Fraction(rng.randint(0, top), denominator) for _ in P.vertices]
    return combine(E, P.vertices, coeffs)


def sample_state(E, P, seed):
    """Seeded convex combination of the extreme states."""
    if P.is_empty:
        raise EmptyStateSpace("the algebra has no states")
    rng = _rng(seed)
    w = [rng.randint(0, 6) for _ in P.vertices]
    if not any(w):
        w[rng.randrange(len(w))] = 1
    tot = sum(w)
    return combine(E, P.vertices, [Fraction(x, tot) for x in w])


def sample_signed_measure(E, P, seed, scale_bound=1):
    rng = _rng(seed)
    return sample_measure(E, P, rng, scale_bound) - sample_measure(E, P, rng, scale_bound)


def combine(E, measures, coeffs):
    out = [Fraction(0)] * len(E)
    for m, c in zip(measures, coeffs):
        if c:
            out = [o + c * v for o, v in zip(out, m.values)]
    return SignedMeasure(E, out)


def kernel(m):
    """Zero set of a measure, as an Ideal carrying ideal/normality flags."""
    from .faces import make_ideal

    E = m.algebra
    return make_ideal(E, [i for i, v in enumerate(m.values) if v == 0])


def label_values(E, mapping, default=0):
    """Measure from a partial label->value mapping; unspecified elements get ``default``."""
    vals = [_frac(default)] * len(E)
    for k, v in mapping.items():
        vals[E.idx(k)] = _frac(v)
    return SignedMeasure(E, vals)


__all__ = [
    "SignedMeasure",
    "StatePolytope",
    "additivity_violations",
    "combine",
    "is_measure",
    "is_simplex",
    "is_state",
    "kernel",
    "label_values",
    "sample_measure",
    "sample_signed_measure",
    "sample_state",
    "state_equalities",
    "state_space",
    "validate_measure",
    "validate_signed_measure",
    "validate_state",
]

