"""Finite pseudo effect algebras as validated partial-addition tables.

Elements are dense integer indices ``0..n-1`` with an attached tuple of string
labels.  Every public function taking an "element" accepts either its index or
its label and returns indices.
"""

from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import (
    AxiomViolation,
    DuplicateLabel,
    IntervalInfinite,
    InvalidUnit,
    SizeLimitExceeded,
    UnknownLabel,
)

MAX_ELEMENTS = 4096
UNDEF = -1
_LABEL_RE = re.compile(r'^[^\s+=#"\[\]]+$')


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        w = ", ".join(self.witness)
        return f"({self.axiom}) [{w}]" + (f" {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations

    def axioms(self):
        return sorted({v.axiom for v in self.violations})


class PseudoEffectAlgebra:
    """A validated finite pseudo effect algebra.

    Do not instantiate directly; use :func:`build_algebra` or the constructors
    in :mod:`pealab.zoo`.  Instances are treated as immutable.
    """

    def __init__(self, labels, zero, one, plus, right_diff, left_diff):
        self.labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.zero = zero
        self.one = one
        plus.setflags(write=False)
        right_diff.setflags(write=False)
        left_diff.setflags(write=False)
        self.plus_array = plus
        self.right_diff_array = right_diff
        self.left_diff_array = left_diff
        self._plus = plus.tolist()
        self._rd = right_diff.tolist()
        self._ld = left_diff.tolist()
        n = len(self.labels)
        self.triples = tuple(
            (a, b, c) for a in range(n) for b in range(n) if (c := self._plus[a][b]) >= 0
        )
        leq = right_diff >= 0
        self.leq_array = leq.astype(np.uint8)
        self.leq_array.setflags(write=False)
        self._leq = leq.tolist()
        self.down_mask = [0] * n
        self.up_mask = [0] * n
        for a in range(n):
            for b in range(n):
                if self._leq[a][b]:
                    self.up_mask[a] |= 1 << b
                    self.down_mask[b] |= 1 << a
        self._meets = {}
        self._joins = {}
        # memo for derived results (property scans, state space); keyed by name
        self.cache = {}

    # basic access

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"<PseudoEffectAlgebra n={len(self)} sums={len(self.triples)} {self.digest[:12]}>"

    def __eq__(self, other):
        if not isinstance(other, PseudoEffectAlgebra):
            return NotImplemented
        return self.canonical_text() == other.canonical_text()

    def __hash__(self):
        return hash(self.digest)

    @property
    def size(self):
        return len(self.labels)

    def idx(self, x):
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < len(self.labels):
                raise UnknownLabel(f"element index {x} out of range")
            return int(x)
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(f"unknown element label {x!r}") from None

    def label(self, i):
        return self.labels[i]

    def add(self, a, b):
        """Index of a+b, or None when the sum is undefined."""
        c = self._plus[a][b]
        return c if c >= 0 else None

    def defined(self, a, b):
        return self._plus[a][b] >= 0

    # order and differences

    def leq(self, a, b):
        return self._leq[a][b]

    def below(self, a):
        return [x for x in range(len(self.labels)) if self._leq[x][a]]

    def above(self, a):
        return [x for x in range(len(self.labels)) if self._leq[a][x]]

    def right_diff(self, a, b):
        """``a \\r b``: the c with a + c = b (None unless a <= b)."""
        c = self._rd[a][b]
        return c if c >= 0 else None

    def left_diff(self, b, a):
        """``b \\l a``: the d with d + a = b (None unless a <= b)."""
        d = self._ld[a][b]
        return d if d >= 0 else None

    def minus(self, a):
        """a⁻ = 1 \\l a, the unique e with e + a = 1."""
        return self._ld[a][self.one]

    def tilde(self, a):
        """a∼ = a \\r 1, the unique d with a + d = 1."""
        return self._rd[a][self.one]

    @cached_property
    def is_commutative(self):
        p = self.plus_array
        return bool((p == p.T).all())

    # partial lattice operations (exhaustive bound scans)

    def meet(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._meets:
            self._meets[key] = _extremum(self.down_mask[a] & self.down_mask[b], self.down_mask)
        return self._meets[key]

    def join(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._joins:
            self._joins[key] = _extremum(self.up_mask[a] & self.up_mask[b], self.up_mask)
        return self._joins[key]

    # serialization

    def canonical_text(self):
        lines = [
            "elements: " + " ".join(self.labels),
            f"zero: {self.labels[self.zero]}",
            f"one: {self.labels[self.one]}",
        ]
        L = self.labels
        lines.extend(f"{L[a]} + {L[b]} = {L[c]}" for a, b, c in self.triples)
        return "\n".join(lines) + "\n"

    @cached_property
    def digest(self):
        return hashlib.sha256(self.canonical_text().encode("utf-8")).hexdigest()

    @cached_property
    def triple_columns(self):
        """The defined sums as three contiguous int32 columns (a, b, a+b)."""
        t = np.array(self.triples, dtype=np.int32).reshape(-1, 3)
        cols = tuple(np.ascontiguousarray(t[:, k]) for k in range(3))
        for c in cols:
            c.setflags(write=False)
        return cols

    def export_triples(self):
        L = self.labels
        return [(L[a], L[b], L[c]) for a, b, c in self.triples]


def _extremum(bounds, cone_mask):
    """The element m in ``bounds`` whose cone contains all of ``bounds``, else None.

    For a meet, ``bounds`` are the common lower bounds and ``cone_mask[m]`` the
    down-set of m; dually for joins.
    """
    m = bounds
    i = 0
    while m:
        if m & 1 and bounds & ~cone_mask[i] == 0:
            return i
        m >>= 1
        i += 1
    return None


# construction and validation


def _prepare(elements, zero, one, plus_triples):
    labels = [str(e) for e in elements]
    if len(labels) > MAX_ELEMENTS:
        raise SizeLimitExceeded(f"{len(labels)} elements exceeds the limit of {MAX_ELEMENTS}")
    index = {}
    for i, lab in enumerate(labels):
        if not _LABEL_RE.match(lab):
            raise UnknownLabel(f"invalid element label {lab!r}")
        if lab in index:
            raise DuplicateLabel(f"duplicate element label {lab!r}")
        index[lab] = i

    def look(x):
        try:
            return index[str(x)]
        except KeyError:
            raise UnknownLabel(f"unknown element label {x!r}") from None

    n = len(labels)
    plus = np.full((n, n), UNDEF, dtype=np.int32)
    conflicts = []
    for t in plus_triples:
        a, b, c = (look(x) for x in t)
        if plus[a, b] >= 0 and plus[a, b] != c:
            conflicts.append(Violation("table", (labels[a], labels[b]), "sum given twice with different results"))
        plus[a, b] = c
    return labels, look(zero), look(one), plus, conflicts


def _check_axioms(labels, z, o, plus):
    """Return (violations, right_diff, left_diff) for an index-level table."""
    n = len(labels)
    L = labels
    out = []
    for a, b, c in kernels.associativity_violations(plus):
        out.append(Violation("i", (L[a], L[b], L[c]), "(a+b)+c and a+(b+c) disagree"))
    p = plus.tolist()
    for a in range(n):
        rights = [d for d in range(n) if p[a][d] == o]
        lefts = [e for e in range(n) if p[e][a] == o]
        if len(rights) != 1:
            out.append(Violation("ii", (L[a],) + tuple(L[d] for d in rights), f"{len(rights)} elements d with a+d=1"))
        if len(lefts) != 1:
            out.append(Violation("ii", (L[a],) + tuple(L[e] for e in lefts), f"{len(lefts)} elements e with e+a=1"))
    rd, ld, clashes = kernels.difference_tables(plus)
    rdl, ldl = rd.tolist(), ld.tolist()
    for a in range(n):
        for b in range(n):
            s = p[a][b]
            if s < 0:
                continue
            if ldl[a][s] < 0:
                out.append(Violation("iii", (L[a], L[b]), "no d with a+b = d+a"))
            if rdl[b][s] < 0:
                out.append(Violation("iii", (L[a], L[b]), "no e with a+b = b+e"))
    for a in range(n):
        if a != z and (p[o][a] >= 0 or p[a][o] >= 0):
            out.append(Violation("iv", (L[a],), "1+a or a+1 defined for a != 0"))
    for kind, a, s in clashes:
        out.append(Violation("cancellation", (L[a], L[s]), f"{kind} difference not unique"))

    right_leq = rd >= 0
    left_leq = ld >= 0
    for a, b in zip(*np.nonzero(right_leq != left_leq)):
        out.append(Violation("order", (L[a], L[b]), "a+c=b and d+a=b characterizations differ"))
    ups = [0] * n
    for a in range(n):
        for b in range(n):
            if right_leq[a, b]:
                ups[a] |= 1 << b
    for a in range(n):
        if not right_leq[a, a]:
            out.append(Violation("order", (L[a],), "not reflexive"))
        if not right_leq[z, a] or not right_leq[a, o]:
            out.append(Violation("order", (L[a],), "0 <= a <= 1 fails"))
        for b in range(a + 1, n):
            if right_leq[a, b] and right_leq[b, a]:
                out.append(Violation("order", (L[a], L[b]), "not antisymmetric"))
        m = ups[a]
        for b in range(n):
            if m >> b & 1 and ups[b] & ~m:
                out.append(Violation("order", (L[a], L[b]), "not transitive"))
    return out, rd, ld


def validate_table(elements, zero, one, plus_triples):
    """Check the four axioms and derived order facts; never raises on axiom failure."""
    labels, z, o, plus, conflicts = _prepare(elements, zero, one, plus_triples)
    found, _, _ = _check_axioms(labels, z, o, plus)
    return ValidationReport(tuple(conflicts + found))


def build_algebra(elements, zero, one, plus_triples):
    """Validate a partial addition table and return the algebra.

    ``plus_triples`` is an iterable of ``(a, b, c)`` label triples meaning
    a + b = c; the table must be complete (sums with 0 included).  Raises
    :class:`AxiomViolation` carrying a :class:`ValidationReport` with every
    violated instance.
    """
    labels, z, o, plus, conflicts = _prepare(elements, zero, one, plus_triples)
    found, rd, ld = _check_axioms(labels, z, o, plus)
    if conflicts or found:
        raise AxiomViolation(ValidationReport(tuple(conflicts + found)))
    return PseudoEffectAlgebra(labels, z, o, plus, rd, ld)


# label-level helpers


def complement_left(E, a):
    """a⁻: the unique e with e + a = 1."""
    return E.minus(E.idx(a))


def complement_right(E, a):
    """a∼: the unique d with a + d = 1."""
    return E.tilde(E.idx(a))


def poset_meet(E, a, b):
    """Greatest lower bound of a and b, or None when it does not exist."""
    return E.meet(E.idx(a), E.idx(b))


def poset_join(E, a, b):
    return E.join(E.idx(a), E.idx(b))


def relabel(E, mapping):
    """Copy of E with labels replaced through ``mapping`` (old label -> new label)."""
    new = [mapping[lab] for lab in E.labels]
    triples = [(mapping[a], mapping[b], mapping[c]) for a, b, c in E.export_triples()]
    return build_algebra(new, mapping[E.labels[E.zero]], mapping[E.labels[E.one]], triples)


def same_table(E, F, mapping):
    """True when ``mapping`` (labels of E -> labels of F) is an isomorphism of tables."""
    if len(E) != len(F):
        return False
    img = {(mapping[a], mapping[b], mapping[c]) for a, b, c in E.export_triples()}
    return (
        img == set(F.export_triples())
        and mapping[E.labels[E.zero]] == F.labels[F.zero]
        and mapping[E.labels[E.one]] == F.labels[F.one]
    )


# interval algebras Γ(ℤᵏ, u)


@dataclass(frozen=True)
class PoGroupSpec:
    """ℤᵏ with coordinatewise or lexicographic order and a unit u."""

    rank: int
    order: str
    unit: tuple

    def __post_init__(self):
        if self.order not in ("coordinatewise", "lexicographic"):
            raise ValueError(f"unknown order {self.order!r}")
        object.__setattr__(self, "unit", tuple(int(x) for x in self.unit))
        if self.rank < 1 or len(self.unit) != self.rank:
            raise ValueError("unit must have exactly `rank` coordinates")

    def positive(self, x):
        if self.order == "coordinatewise":
            return all(v >= 0 for v in x)
        for v in x:
            if v:
                return v > 0
        return True

    def leq(self, x, y):
        return self.positive(tuple(b - a for a, b in zip(x, y)))


def interval_points(spec):
    """Lattice points of [0, u]; raises when the interval is infinite or u is not a strong unit."""
    u = spec.unit
    if not spec.positive(u) or not any(u):
        raise InvalidUnit(f"unit {u} must be positive and nonzero")
    if spec.order == "coordinatewise" or spec.rank == 1:
        if any(v <= 0 for v in u):
            raise InvalidUnit(f"unit {u} is not a strong unit for the coordinatewise order")
        return list(itertools.product(*(range(v + 1) for v in u)))
    # lexicographic, rank >= 2: [0,u] is finite only for u = (0,..,0,n), which is
    # not a strong unit
    if any(u[:-1]):
        raise IntervalInfinite(f"[0,{u}] is infinite in lexicographic ℤ^{spec.rank}")
    raise InvalidUnit(f"unit {u} is not a strong unit of lexicographic ℤ^{spec.rank}")


def _point_label(x):
    return str(x[0]) if len(x) == 1 else "(" + ",".join(map(str, x)) + ")"


def interval_algebra(spec):
    """Γ(ℤᵏ, u): the lattice points of [0, u] with x + y defined iff x <= u - y."""
    pts = interval_points(spec)
    if len(pts) > MAX_ELEMENTS:
        raise SizeLimitExceeded(f"interval has {len(pts)} elements")
    u = spec.unit
    labels = [_point_label(x) for x in pts]
    lab = dict(zip(pts, labels))
    triples = []
    for x in pts:
        for y in pts:
            s = tuple(a + b for a, b in zip(x, y))
            if spec.leq(s, u):
                triples.append((lab[x], lab[y], lab[s]))
    zero = tuple(0 for _ in u)
    return build_algebra(labels, lab[zero], lab[u], triples)
