"""Continuity relations between measures and the named decompositions.

Everything here reduces to the face engine in :mod:`pealab.faces` except the
central decomposition, which cuts a measure along a Boolean element.

On a finite algebra every increasing sequence and every directed family has a
largest member, so all measures are completely additive, sigma-additive and
upwards continuous; the continuity-type splittings therefore always return
``(m, 0)``.  They still run through the full engine so that the certificate
path is exercised.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import AlgebraMismatch, InternalInconsistency, NotAdditive, NotCommutative, RDPRequired
from .faces import DecompositionCertificate, Face, face_decompose, kernel_face
from .jordan import meet
from .measures import SignedMeasure, additivity_violations
from .riesz import has_rdp

ABS, EPS, ORTH, CENTRAL = "<<", "<<_eps", "_|_", "<<_C"

JAUCH_PIRON_READING = "null pairs need a common upper bound c with t(c) = 0"


@dataclass(frozen=True)
class ContinuityVerdict:
    relation: str
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def _same_algebra(m1, m2):
    if m1.algebra is not m2.algebra and m1.algebra.digest != m2.algebra.digest:
        raise AlgebraMismatch("measures live on different algebras")
    return m1.algebra


def check_abs_continuous(m1, m2):
    """m1 << m2: every m2-null element is m1-null.  Witness: first element breaking it."""
    _same_algebra(m1, m2)
    for i, (a, b) in enumerate(zip(m1.values, m2.values)):
        if b == 0 and a != 0:
            return ContinuityVerdict(ABS, False, i)
    return ContinuityVerdict(ABS, True)


def eps_delta_table(m1, m2):
    """For each positive value v of m1: the largest admissible delta for epsilon in (previous value, v].

    delta(v) = min{m2(a) : m1(a) >= v}; below that bound m2(a) < delta forces
    m1(a) < epsilon.  Epsilons above the largest value of m1 need no condition.
    """
    levels = sorted({v for v in m1.values if v > 0})
    table = []
    for v in levels:
        d, arg = min((b, i) for i, (a, b) in enumerate(zip(m1.values, m2.values)) if a >= v)
        table.append((v, d, arg))
    return table


def check_eps_continuous(m1, m2):
    """m1 <<_eps m2 via the epsilon/delta table; the table is the witness either way.

    Fails iff some level has delta 0; the failing entry comes first in the witness.
    """
    _same_algebra(m1, m2)
    table = eps_delta_table(m1, m2)
    bad = [row for row in table if row[1] == 0]
    if bad:
        return ContinuityVerdict(EPS, False, tuple(bad) + tuple(table))
    return ContinuityVerdict(EPS, True, tuple(table))


def check_orthogonal(m1, m2):
    """m1 _|_ m2: some a has m2(a) = 0 = m1(a-).  Witness: the first such a."""
    E = _same_algebra(m1, m2)
    for a in range(len(E)):
        if m2.values[a] == 0 and m1.values[E.minus(a)] == 0:
            return ContinuityVerdict(ORTH, True, a)
    return ContinuityVerdict(ORTH, False)


def verify_orthogonal_witness(m1, m2, a):
    E = m1.algebra
    return m2.values[a] == 0 and m1.values[E.minus(a)] == 0


def check_eps_equiv_abs(E, m1, m2):
    return check_abs_continuous(m1, m2).holds == check_eps_continuous(m1, m2).holds


# Lebesgue type splittings


@dataclass(frozen=True)
class LebesgueCertificate:
    face: Face
    engine: DecompositionCertificate
    continuity: ContinuityVerdict
    eps_table: tuple = None
    meet_with_t_zero: bool = None
    notes: tuple = ()


def lebesgue_decompose(E, P, m, t):
    """m = m1 + m2 with m1 << t and m2 dominating no nonzero measure << t.

    For t = 0 every t-null face is empty, so the answer is (0, m).
    """
    _same_algebra(m, t)
    null = [i for i, v in enumerate(t.values) if v == 0]
    F = kernel_face(E, P, null)
    m1, m2, cert = face_decompose(E, P, F, m)
    cont = check_abs_continuous(m1, t)
    if not cont.holds:
        raise InternalInconsistency("absolutely continuous part fails << t")
    return m1, m2, LebesgueCertificate(F, cert, cont)


def eps_lebesgue_decompose(E, P, m, t):
    """Same split, with the face chosen by the epsilon-delta relation and m2 ^ t = 0 checked."""
    _same_algebra(m, t)
    idx = tuple(i for i, v in enumerate(P.vertices) if check_eps_continuous(v, t).holds)
    F = Face(idx)
    m1, m2, cert = face_decompose(E, P, F, m)
    cont = check_eps_continuous(m1, t)
    if not cont.holds:
        raise InternalInconsistency("continuous part fails <<_eps t")
    notes = ()
    try:
        zero_meet = meet(E, [m2, t]).is_zero()
    except NotAdditive as exc:
        zero_meet = None
        notes = (f"meet with t unavailable: {exc}",)
    if zero_meet is False:
        raise InternalInconsistency("singular part has a nonzero meet with t")
    return m1, m2, LebesgueCertificate(F, cert, cont, cont.witness, zero_meet, notes)


# central elements


@dataclass(frozen=True)
class CentralElements:
    members: tuple
    boolean_algebra_check: bool
    failures: dict = field(default_factory=dict, compare=False)

    def __contains__(self, a):
        return a in self.members

    def __len__(self):
        return len(self.members)


def _central_failure(E, a):
    am, at = E.minus(a), E.tilde(a)
    if am != at:
        return "left and right complements differ"
    if E.meet(a, am) != E.zero:
        return "a ^ a- is not 0"
    for x in range(len(E)):
        xa, xb = E.meet(x, a), E.meet(x, am)
        if xa is None or xb is None:
            return f"meet with {E.labels[x]} missing"
        if E.add(xa, xb) != x:
            return f"splitting fails at {E.labels[x]}"
    return None


def _is_boolean_subalgebra(E, members):
    C = set(members)
    if E.zero not in C or E.one not in C:
        return False
    for a in C:
        if E.minus(a) not in C:
            return False
    for a, b in combinations(sorted(C), 2):
        j, m = E.join(a, b), E.meet(a, b)
        if j is None or m is None or j not in C or m not in C:
            return False
    return True


def center(E, measures=None):
    """Elements passing the full central characterization.

    ``measures`` (default: the extreme states, when computed) are used to spot
    check t(a) + t(b) = t(a ^ b) + t(a v b) on central pairs.
    """
    explicit = measures is not None
    if not explicit and "center" in E.cache:
        return E.cache["center"]
    members, failures = [], {}
    for a in range(len(E)):
        why = _central_failure(E, a)
        if why is None:
            members.append(a)
        else:
            failures[a] = why
    ok = _is_boolean_subalgebra(E, members)
    if not explicit:
        measures = E.cache["state_space"].vertices if "state_space" in E.cache else ()
    for t in measures:
        for a, b in combinations(members, 2):
            v = t.values
            if v[a] + v[b] != v[E.meet(a, b)] + v[E.join(a, b)]:
                raise InternalInconsistency(
                    f"measure is not modular on central pair {E.labels[a]}, {E.labels[b]}"
                )
    C = CentralElements(tuple(members), ok, failures)
    if not explicit:
        E.cache["center"] = C
    return C


def check_central_continuous(m1, t, C):
    """m1 <<_C t: no central a with t(a) = 0 < m1(a)."""
    for a in C.members:
        if t.values[a] == 0 and m1.values[a] != 0:
            return ContinuityVerdict(CENTRAL, False, a)
    return ContinuityVerdict(CENTRAL, True)


@dataclass(frozen=True)
class CentralCertificate:
    central_null: tuple
    a0: int
    maximal: bool
    continuity: ContinuityVerdict
    orthogonal: bool


def central_lebesgue_decompose(E, m, t):
    """m1(x) = m(x ^ a0-), m2(x) = m(x ^ a0), a0 the join of the t-null central elements.

    Returns (m1, m2, a0, certificate).
    """
    _same_algebra(m, t)
    if not has_rdp(E):
        raise RDPRequired("central decomposition needs the Riesz decomposition property")
    C = center(E)
    null = tuple(a for a in C.members if t.values[a] == 0)
    a0 = E.zero
    for a in null:
        a0 = E.join(a0, a)
        if a0 is None or a0 not in C.members:
            raise InternalInconsistency("join of central null elements left the center")
    if t.values[a0] != 0:
        raise InternalInconsistency("join of central null elements is not null")
    maximal = all(E.leq(a, a0) for a in null)
    a0m = E.minus(a0)
    m1 = SignedMeasure(E, [m.values[E.meet(x, a0m)] for x in range(len(E))])
    m2 = SignedMeasure(E, [m.values[E.meet(x, a0)] for x in range(len(E))])
    if additivity_violations(E, m1) or additivity_violations(E, m2) or m1 + m2 != m:
        raise InternalInconsistency("central cut is not an additive splitting")
    cont = check_central_continuous(m1, t, C)
    orth = verify_orthogonal_witness(m2, t, a0)
    if not (cont.holds and orth):
        raise InternalInconsistency("central decomposition certificate failed")
    return m1, m2, a0, CentralCertificate(null, a0, maximal, cont, orth)


# continuity checks over finite families


@dataclass(frozen=True)
class AdditivityTrace:
    kind: str
    holds: bool
    families_checked: int
    truncated: bool = False
    witness: object = None

    def __bool__(self):
        return self.holds


SUBSET_ENUMERATION_LIMIT = 12
FAMILY_LIMIT = 20000


def check_sigma_additive(E, m):
    """Increasing sequences stabilize at their last term; check m(sup) = lim m(a_n) on every comparable pair.

    Any increasing sequence is eventually constant, and its supremum is its
    final value; the limit condition reduces to monotonicity along the steps,
    which is what is enumerated.
    """
    n = 0
    for a in range(len(E)):
        for b in E.above(a):
            n += 1
            if m.values[a] > m.values[b]:
                return AdditivityTrace("sigma", False, n, witness=(a, b))
    return AdditivityTrace("sigma", True, n)


def _directed(E, D):
    return all(any(E.leq(a, c) and E.leq(b, c) for c in D) for a, b in combinations(D, 2))


def check_upwards_continuous(E, m):
    """For directed families D with supremum a: m(a) = sup m(D).

    All subsets are enumerated for small algebras; otherwise the principal
    down-sets and comparable pairs are used.
    """
    n = len(E)
    count = 0
    if n <= SUBSET_ENUMERATION_LIMIT:
        families = (
            [i for i in range(n) if mask >> i & 1] for mask in range(1, 1 << n)
        )
        truncated = False
    else:
        families = [list(E.below(a)) for a in range(n)]
        families += [[a, b] for a in range(n) for b in E.above(a) if a != b]
        truncated = True
    for D in families:
        if not _directed(E, D):
            continue
        count += 1
        sup = None
        for x in D:
            sup = x if sup is None else E.join(sup, x)
        if sup is None or m.values[sup] != max(m.values[x] for x in D):
            return AdditivityTrace("uc", False, count, truncated, tuple(D))
    return AdditivityTrace("uc", True, count, truncated)


def _summable_systems(E, limit):
    """Finite multisets of nonzero elements whose sum is defined, with the sum."""
    nonzero = [a for a in range(len(E)) if a != E.zero]
    stack = [((), E.zero, 0)]
    out = 0
    while stack:
        fam, s, start = stack.pop()
        if len(fam) >= 2:
            yield fam, s
            out += 1
            if out >= limit:
                return
        for k in range(start, len(nonzero)):
            a = nonzero[k]
            t = E.add(s, a)
            if t is not None:
                stack.append((fam + (a,), t, k))


def check_completely_additive(E, m):
    """m(sum of a summable system) = sum of m over the system; needs a commutative table."""
    if not E.is_commutative:
        raise NotCommutative("complete additivity is defined for commutative tables only")
    count = 0
    for fam, s in _summable_systems(E, FAMILY_LIMIT):
        count += 1
        if m.values[s] != sum(m.values[a] for a in fam):
            return AdditivityTrace("ca", False, count, witness=fam)
    return AdditivityTrace("ca", True, count, truncated=count >= FAMILY_LIMIT)


MODES = {
    "ca": check_completely_additive,
    "sigma": check_sigma_additive,
    "uc": check_upwards_continuous,
}


@dataclass(frozen=True)
class ContinuityCertificate:
    mode: str
    face: Face
    engine: DecompositionCertificate
    traces: tuple
    note: str = "finite algebra: every state passes the check, so the face is the whole state space"


def yosida_hewitt_decompose(E, P, m, mode):
    """m = m1 + m2 with m1 in the cone over the mode's continuous states.

    On a finite algebra the result is always (m, 0).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {sorted(MODES)}")
    check = MODES[mode]
    if mode == "ca" and not E.is_commutative:
        raise NotCommutative("mode 'ca' needs a commutative table")
    traces = tuple(check(E, v) for v in P.vertices)
    F = Face(tuple(i for i, tr in enumerate(traces) if tr.holds))
    m1, m2, cert = face_decompose(E, P, F, m)
    if not m2.is_zero():
        raise InternalInconsistency("nonzero purely finitely additive part on a finite algebra")
    return m1, m2, ContinuityCertificate(mode, F, cert, traces)


@dataclass(frozen=True)
class JauchPironVerdict:
    holds: bool
    witness: tuple = None
    reading: str = JAUCH_PIRON_READING

    def __bool__(self):
        return self.holds


def check_jauch_piron(E, t):
    null = [i for i, v in enumerate(t.values) if v == 0]
    for a, b in combinations(null, 2):
        if not any(E.leq(a, c) and E.leq(b, c) for c in null):
            return JauchPironVerdict(False, (a, b))
    return JauchPironVerdict(True)


__all__ = [
    "AdditivityTrace",
    "CentralElements",
    "ContinuityVerdict",
    "JauchPironVerdict",
    "center",
    "central_lebesgue_decompose",
    "check_abs_continuous",
    "check_central_continuous",
    "check_completely_additive",
    "check_eps_continuous",
    "check_eps_equiv_abs",
    "check_jauch_piron",
    "check_orthogonal",
    "check_sigma_additive",
    "check_upwards_continuous",
    "eps_delta_table",
    "eps_lebesgue_decompose",
    "lebesgue_decompose",
    "yosida_hewitt_decompose",
]

