"""Lattice operations on Jordan signed measures.

The join of ``m_1..m_n`` at ``x`` is the supremum of
``m_1(x_1) + ... + m_n(x_n)`` over ordered decompositions
``x = x_1 + ... + x_n`` (parts may be 0); the meet is the infimum.  Both are
computed by a left-to-right dynamic program over the defined sums::

    best_1 = m_1
    best_k(c) = max over a + b = c of best_{k-1}(a) + m_k(b)

which is well defined because addition is associative.  The result is only
additive when the algebra has the Riesz decomposition property; a failure
raises NotAdditive with the offending triple.
"""

from fractions import Fraction
from math import lcm

import numpy as np

from . import kernels
from .errors import InternalInconsistency, NotAChain, NotAdditive, NotJordan
from .measures import SignedMeasure, additivity_violations


class JordanMeasure(SignedMeasure):
    """A signed measure stored with measures p, q such that it equals p - q."""

    __slots__ = ("p", "q")

    def __init__(self, E, values, p, q):
        super().__init__(E, values)
        self.p = p
        self.q = q

    def witness_ok(self):
        return (
            self.p.is_positive()
            and self.q.is_positive()
            and not additivity_violations(self.algebra, self.p)
            and not additivity_violations(self.algebra, self.q)
            and (self.p - self.q).values == self.values
        )


def _fold(E, measures, maximize):
    """Raw decomposition extremum, no additivity check."""
    n = len(E)
    if len(measures) == 1:
        return SignedMeasure(E, measures[0].values)
    den = 1
    for m in measures:
        for v in m.values:
            den = lcm(den, v.denominator)
    scaled = [[int(v * den) for v in m.values] for m in measures]
    bound = sum(max((abs(v) for v in row), default=0) for row in scaled)
    ta, tb, tc = E.triple_columns
    if bound < kernels.FOLD_INT_LIMIT:
        prev = np.array(scaled[0], dtype=np.int64)
        for row in scaled[1:]:
            cur = np.array(row, dtype=np.int64)
            prev = np.array(kernels.fold_step(ta, tb, tc, prev, cur, n, maximize), dtype=np.int64)
        out = prev.tolist()
    else:
        ta_l, tb_l, tc_l = ta.tolist(), tb.tolist(), tc.tolist()
        out = scaled[0]
        for row in scaled[1:]:
            out = kernels.fold_step_objects(ta_l, tb_l, tc_l, out, row, n, maximize)
    return SignedMeasure(E, [Fraction(v, den) for v in out])


def decomposition_extremum(E, measures, maximize=True):
    """The join (``maximize``) or meet formula evaluated at every element, unchecked."""
    return _fold(E, list(measures), maximize)


def _first_violation(E, m):
    bad = additivity_violations(E, m)
    if not bad:
        return None
    a, b, c, lhs, rhs = bad[0]
    L = E.labels
    return (L[a], L[b], L[c])


def negative_part_witness(m):
    """A measure q with m + q a measure: q = (-m) v 0, or the stored witness."""
    E = m.algebra
    if isinstance(m, JordanMeasure):
        return m.q
    if m.is_positive():
        return SignedMeasure.zero(E)
    q = _fold(E, [-m, SignedMeasure.zero(E)], True)
    w = _first_violation(E, q)
    if w is not None:
        raise NotJordan(w, f"(-m) v 0 is not additive at {w[0]}+{w[1]}={w[2]}")
    if not (m + q).is_positive():
        raise NotJordan(None, "m + ((-m) v 0) is not positive")
    return q


def _lattice(E, measures, maximize):
    measures = list(measures)
    if not measures:
        raise ValueError("need at least one measure")
    Q = SignedMeasure.zero(E)
    for m in measures:
        Q = Q + negative_part_witness(m)
    shifted = [m + Q for m in measures]
    p = _fold(E, shifted, maximize)
    w = _first_violation(E, p)
    if w is not None:
        op = "join" if maximize else "meet"
        raise NotAdditive(w, f"{op} formula is not additive at {w[0]}+{w[1]}={w[2]}")
    return JordanMeasure(E, (p - Q).values, p, Q)


def join(E, measures):
    """Least upper bound in the pointwise order, as a JordanMeasure."""
    return _lattice(E, measures, True)


def meet(E, measures):
    """Greatest lower bound in the pointwise order, as a JordanMeasure."""
    return _lattice(E, measures, False)


def jordan_decompose(m):
    """(m+, m-) with m = m+ - m-, m+ = m v 0, m- = (-m) v 0 and m+ ^ m- = 0."""
    E = m.algebra
    zero = SignedMeasure.zero(E)
    plus = _fold(E, [m, zero], True)
    w = _first_violation(E, plus)
    if w is not None:
        raise NotJordan(w, f"m v 0 is not additive at {w[0]}+{w[1]}={w[2]}")
    minus = _fold(E, [-m, zero], True)
    w = _first_violation(E, minus)
    if w is not None:
        raise NotJordan(w, f"(-m) v 0 is not additive at {w[0]}+{w[1]}={w[2]}")
    if (plus - minus).values != m.values:
        bad = next(i for i, (a, b, c) in enumerate(zip(plus.values, minus.values, m.values)) if a - b != c)
        raise NotJordan((E.labels[bad],), f"m+ - m- differs from m at {E.labels[bad]}")
    if not meet(E, [plus, minus]).is_zero():
        raise InternalInconsistency("positive and negative parts are not disjoint")
    return plus, minus


def as_jordan(m):
    if isinstance(m, JordanMeasure):
        return m
    plus, minus = jordan_decompose(m)
    return JordanMeasure(m.algebra, m.values, plus, minus)


def chain_sup(E, measures):
    """Pointwise supremum of a finite increasing chain; checked against the join formula."""
    measures = list(measures)
    if not measures:
        raise NotAChain("empty chain")
    for i, (lo, hi) in enumerate(zip(measures, measures[1:])):
        if not lo.leq(hi):
            raise NotAChain(f"element {i} is not below element {i + 1}")
        if not lo.is_positive():
            raise NotAChain(f"element {i} is not a measure")
    top = measures[-1]
    if not top.is_positive() or additivity_violations(E, top):
        raise NotAChain("top of the chain is not a measure")
    sup = SignedMeasure(E, [max(vals) for vals in zip(*(m.values for m in measures))])
    if sup.values != join(E, measures).values:
        raise InternalInconsistency("pointwise supremum of a chain differs from its join")
    return sup


def is_disjoint(m1, m2):
    return meet(m1.algebra, [m1, m2]).is_zero()
