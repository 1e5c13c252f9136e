"""Riesz-type properties with witnesses.

Global checks run through :mod:`pealab.kernels`; single-instance helpers and
:func:`verify_verdict` are written directly from the definitions so that a
kernel bug cannot certify itself.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InternalInconsistency

PROPERTIES = ("COM", "RIP", "RDP0", "RDP", "RDP1", "RDP2")
CHAIN = ("RDP2", "RDP1", "RDP", "RDP0", "RIP")


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a property check.

    ``witness`` (element indices) falsifies the property when ``holds`` is
    False; ``certificate`` holds the realizing elements for single-instance
    checks that succeed.
    """

    property: str
    holds: bool
    witness: tuple = None
    certificate: tuple = None
    instance: tuple = None

    def __bool__(self):
        return self.holds

    def describe(self, E):
        if self.holds:
            return f"{self.property}: yes"
        w = [E.labels[i] for i in self.witness]
        if self.property == "RDP0":
            text = f"{w[0]}; {w[1]}, {w[2]}"
        elif self.property in ("RIP",):
            text = f"{w[0]}, {w[1]} <= {w[2]}, {w[3]}"
        elif self.property.startswith("RDP"):
            text = f"{w[0]}+{w[1]} = {w[2]}+{w[3]}"
        else:
            text = ", ".join(w)
        return f"{self.property}: no (witness {text})"

    def as_dict(self, E):
        return {
            "property": self.property,
            "holds": self.holds,
            "witness": None if self.witness is None else [E.labels[i] for i in self.witness],
            "certificate": None if self.certificate is None else [E.labels[i] for i in self.certificate],
        }


# commutation


def check_com(E, a, b):
    """a com b: every a1 <= a commutes with every b1 <= b."""
    a, b = E.idx(a), E.idx(b)
    for a1 in E.below(a):
        for b1 in E.below(b):
            if E._plus[a1][b1] != E._plus[b1][a1]:
                return PropertyVerdict("COM", False, (a1, b1))
    return PropertyVerdict("COM", True)


def check_commutative(E):
    """com aggregated over all pairs, i.e. whether the table is symmetric."""
    p = E._plus
    for a in range(len(E)):
        for b in range(a + 1, len(E)):
            if p[a][b] != p[b][a]:
                return PropertyVerdict("COM", False, (a, b))
    return PropertyVerdict("COM", True)


def com_matrix(E):
    """uint8 matrix with entry [a, b] = 1 iff a com b."""
    if "com_matrix" in E.cache:
        return E.cache["com_matrix"]
    n = len(E)
    p = E._plus
    noncom = [0] * n
    for x in range(n):
        for y in range(n):
            if p[x][y] != p[y][x]:
                noncom[x] |= 1 << y
    out = np.ones((n, n), dtype=np.uint8)
    if any(noncom):
        # bad[b] = elements that fail to commute with something below b
        for a in range(n):
            reach = 0
            m = E.down_mask[a]
            x = 0
            while m:
                if m & 1:
                    reach |= noncom[x]
                m >>= 1
                x += 1
            for b in range(n):
                if reach & E.down_mask[b]:
                    out[a, b] = 0
    E.cache["com_matrix"] = out
    return out


def disjoint_matrix(E):
    """uint8 matrix with entry [a, b] = 1 iff 0 is the only common lower bound.

    This is the reading of "d2 ∧ d3 = 0" used for RDP2; it agrees with the
    meet whenever the meet exists.
    """
    if "disjoint_matrix" in E.cache:
        return E.cache["disjoint_matrix"]
    n = len(E)
    zero_bit = 1 << E.zero
    out = np.zeros((n, n), dtype=np.uint8)
    for a in range(n):
        for b in range(n):
            if E.down_mask[a] & E.down_mask[b] == zero_bit:
                out[a, b] = 1
    E.cache["disjoint_matrix"] = out
    return out


# global scans


def check_rip(E):
    if "RIP" not in E.cache:
        w = kernels.rip_scan(E.leq_array)
        E.cache["RIP"] = PropertyVerdict("RIP", w is None, w)
    return E.cache["RIP"]


def check_rdp0(E):
    if "RDP0" not in E.cache:
        ta, tb, tc = E.triple_columns
        w = kernels.rdp0_scan(E.right_diff_array, E.leq_array, ta, tb, tc)
        E.cache["RDP0"] = PropertyVerdict("RDP0", w is None, w)
    return E.cache["RDP0"]


def _refinement_scan(E):
    if "RDP" in E.cache:
        return
    groups = {}
    for a, b, c in E.triples:
        groups.setdefault(c, []).append((a, b))
    pa, pb, offsets = [], [], [0]
    for c in sorted(groups):
        for a, b in groups[c]:
            pa.append(a)
            pb.append(b)
        offsets.append(len(pa))
    w0, w1, w2 = kernels.rdp_scan(
        E.plus_array,
        E.right_diff_array,
        np.array(pa, dtype=np.int32),
        np.array(pb, dtype=np.int32),
        np.array(offsets, dtype=np.int64),
        com_matrix(E),
        disjoint_matrix(E),
    )
    E.cache["RDP"] = PropertyVerdict("RDP", w0 is None, w0)
    E.cache["RDP1"] = PropertyVerdict("RDP1", w1 is None, w1)
    E.cache["RDP2"] = PropertyVerdict("RDP2", w2 is None, w2)


def check_rdp(E):
    _refinement_scan(E)
    return E.cache["RDP"]


def check_rdp1(E):
    _refinement_scan(E)
    return E.cache["RDP1"]


def check_rdp2(E):
    _refinement_scan(E)
    return E.cache["RDP2"]


def rdp_profile(E):
    """Verdicts for COM, RIP, RDP0, RDP, RDP1, RDP2 (in that order).

    Raises InternalInconsistency if the verdicts contradict
    RDP2 => RDP1 => RDP => RDP0 => RIP, or, for a commutative table,
    RDP1 <=> RDP <=> RDP0.
    """
    verdicts = [check_commutative(E), check_rip(E), check_rdp0(E), check_rdp(E), check_rdp1(E), check_rdp2(E)]
    by = {v.property: v.holds for v in verdicts}
    for stronger, weaker in zip(CHAIN, CHAIN[1:]):
        if by[stronger] and not by[weaker]:
            raise InternalInconsistency(f"{stronger} holds but {weaker} fails on {E!r}")
    if by["COM"] and not by["RDP1"] == by["RDP"] == by["RDP0"]:
        raise InternalInconsistency(f"commutative table with RDP1/RDP/RDP0 = {by['RDP1']}/{by['RDP']}/{by['RDP0']}")
    return verdicts


def has_rdp(E):
    return check_rdp(E).holds


# single instances, straight from the definitions


def find_rdp0_split(E, a, b1, b2):
    """(d1, d2) with d1 <= b1, d2 <= b2 and a = d1 + d2, or None."""
    for d1 in E.below(b1):
        for d2 in E.below(b2):
            if E._plus[d1][d2] == a:
                return (d1, d2)
    return None


def find_refinements(E, a1, a2, b1, b2):
    """All (d1, d2, d3, d4) with d1+d2=a1, d3+d4=a2, d1+d3=b1, d2+d4=b2."""
    p = E._plus
    out = []
    n = len(E)
    for d1 in range(n):
        for d2 in range(n):
            if p[d1][d2] != a1:
                continue
            for d3 in range(n):
                if p[d1][d3] != b1:
                    continue
                for d4 in range(n):
                    if p[d3][d4] == a2 and p[d2][d4] == b2:
                        out.append((d1, d2, d3, d4))
    return out


def _no_common_lower(E, x, y):
    return all(z == E.zero for z in range(len(E)) if E.leq(z, x) and E.leq(z, y))


def check_rdp_instance(E, a1, a2, b1, b2, variant="RDP"):
    """Single equality a1+a2 = b1+b2: certificate is a suitable (d1, d2, d3, d4)."""
    a1, a2, b1, b2 = (E.idx(x) for x in (a1, a2, b1, b2))
    if E.add(a1, a2) is None or E.add(a1, a2) != E.add(b1, b2):
        raise ValueError("need a defined equality a1+a2 = b1+b2")
    for d in find_refinements(E, a1, a2, b1, b2):
        if variant == "RDP1" and not check_com(E, d[1], d[2]).holds:
            continue
        if variant == "RDP2" and not _no_common_lower(E, d[1], d[2]):
            continue
        return PropertyVerdict(variant, True, certificate=d, instance=(a1, a2, b1, b2))
    return PropertyVerdict(variant, False, witness=(a1, a2, b1, b2), instance=(a1, a2, b1, b2))


def check_rip_instance(E, a1, a2, b1, b2):
    a1, a2, b1, b2 = (E.idx(x) for x in (a1, a2, b1, b2))
    for c in range(len(E)):
        if E.leq(a1, c) and E.leq(a2, c) and E.leq(c, b1) and E.leq(c, b2):
            return PropertyVerdict("RIP", True, certificate=(c,), instance=(a1, a2, b1, b2))
    return PropertyVerdict("RIP", False, witness=(a1, a2, b1, b2), instance=(a1, a2, b1, b2))


def verify_verdict(E, v):
    """Re-check a verdict against the definitions.

    For a failure, the witness must satisfy the hypothesis and falsify the
    conclusion; for a single-instance success, the certificate must satisfy
    the conclusion.  Global successes carry nothing to re-check and return True.
    """
    if v.holds:
        if v.certificate is None:
            return True
        if v.property == "RIP":
            (c,), (a1, a2, b1, b2) = v.certificate, v.instance
            return all(E.leq(x, c) for x in (a1, a2)) and all(E.leq(c, y) for y in (b1, b2))
        d1, d2, d3, d4 = v.certificate
        a1, a2, b1, b2 = v.instance
        p = E._plus
        ok = p[d1][d2] == a1 and p[d3][d4] == a2 and p[d1][d3] == b1 and p[d2][d4] == b2
        if v.property == "RDP1":
            ok = ok and check_com(E, d2, d3).holds
        elif v.property == "RDP2":
            ok = ok and _no_common_lower(E, d2, d3)
        return ok
    w = v.witness
    if v.property == "COM":
        a1, b1 = w
        return E._plus[a1][b1] != E._plus[b1][a1]
    if v.property == "RIP":
        a1, a2, b1, b2 = w
        hyp = all(E.leq(x, y) for x in (a1, a2) for y in (b1, b2))
        return hyp and not check_rip_instance(E, *w).holds
    if v.property == "RDP0":
        a, b1, b2 = w
        s = E.add(b1, b2)
        return s is not None and E.leq(a, s) and find_rdp0_split(E, a, b1, b2) is None
    a1, a2, b1, b2 = w
    s = E.add(a1, a2)
    if s is None or s != E.add(b1, b2):
        return False
    return not check_rdp_instance(E, *w, variant=v.property).holds
