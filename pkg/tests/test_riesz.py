import itertools

import pytest

import corpus
from pealab import diamond
from pealab.riesz import (
    PROPERTIES,
    check_com,
    check_commutative,
    check_rdp0,
    check_rdp_instance,
    check_rip,
    check_rip_instance,
    find_rdp0_split,
    rdp_profile,
    verify_verdict,
)


def fresh(name):
    E = corpus.get(name)
    E.cache.clear()
    return E


def brute_profile(E):
    n = len(E)
    R = range(n)
    leq = E.leq
    com = all(E.add(a, b) == E.add(b, a) for a in R for b in R)
    rip = all(
        any(leq(a1, c) and leq(a2, c) and leq(c, b1) and leq(c, b2) for c in R)
        for a1, a2, b1, b2 in itertools.product(R, repeat=4)
        if leq(a1, b1) and leq(a1, b2) and leq(a2, b1) and leq(a2, b2)
    )
    rdp0 = all(
        find_rdp0_split(E, a, b1, b2) is not None
        for a in R
        for b1 in R
        for b2 in R
        if E.add(b1, b2) is not None and leq(a, E.add(b1, b2))
    )
    eqs = [
        (a1, a2, b1, b2)
        for a1, a2, b1, b2 in itertools.product(R, repeat=4)
        if E.add(a1, a2) is not None and E.add(a1, a2) == E.add(b1, b2)
    ]
    rdp = [all(check_rdp_instance(E, *q, variant=v).holds for q in eqs) for v in ("RDP", "RDP1", "RDP2")]
    return [com, rip, rdp0] + rdp


SMALL = [n for n in corpus.NAMES if len(corpus.get(n)) <= 9]


@pytest.mark.parametrize("name", SMALL)
def test_profile_matches_brute_force(name, backend):
    E = fresh(name)
    assert [v.holds for v in rdp_profile(E)] == brute_profile(E)


@pytest.mark.parametrize("name", corpus.NAMES)
def test_failure_witnesses_verify(name, backend):
    E = fresh(name)
    for v in rdp_profile(E):
        assert verify_verdict(E, v), v.describe(E)
        if not v.holds:
            assert v.witness is not None


@pytest.mark.parametrize("name", corpus.NAMES)
def test_implication_chain(name):
    E = fresh(name)
    by = {v.property: v.holds for v in rdp_profile(E)}
    chain_ = ["RDP2", "RDP1", "RDP", "RDP0", "RIP"]
    for strong, weak in zip(chain_, chain_[1:]):
        assert not by[strong] or by[weak]
    if by["COM"]:
        assert by["RDP1"] == by["RDP"] == by["RDP0"]


def test_diamond_profile():
    E = diamond()
    lines = [v.describe(E) for v in rdp_profile(E)]
    assert lines == [
        "COM: yes",
        "RIP: yes",
        "RDP0: no (witness a; b, b')",
        "RDP: no (witness a+a' = b+b')",
        "RDP1: no (witness a+a' = b+b')",
        "RDP2: no (witness a+a' = b+b')",
    ]
    v = check_rdp0(E)
    a, b1, b2 = v.witness
    assert E.add(b1, b2) == E.one
    assert find_rdp0_split(E, a, b1, b2) is None


def test_boolean_profile_all_yes():
    E = fresh("boolean(3)")
    assert all(v.holds for v in rdp_profile(E))
    assert [v.property for v in rdp_profile(E)] == list(PROPERTIES)


def test_wright_triangle_fails_interpolation():
    E = corpus.wright_triangle()
    v = check_rip(E)
    assert not v.holds
    a1, a2, b1, b2 = (E.labels[i] for i in v.witness)
    assert (a1, a2, b1, b2) == ("a", "c", "b'", "e'")
    assert verify_verdict(E, v)


def test_twisted_s3_profile():
    E = fresh("twisted_s3")
    p = {v.property: v for v in rdp_profile(E)}
    assert not p["COM"].holds and p["RIP"].holds
    assert not p["RDP0"].holds and not p["RDP"].holds
    g, h = p["COM"].witness
    assert E.add(g, h) != E.add(h, g)


def test_single_instances():
    E = corpus.get("boolean(2)")
    v = check_rdp_instance(E, "a", "b", "b", "a", "RDP2")
    assert v.holds and verify_verdict(E, v)
    d1, d2, d3, d4 = (E.labels[i] for i in v.certificate)
    assert (d1, d2, d3, d4) == ("0", "a", "b", "0")
    r = check_rip_instance(E, "0", "a", "a", "1")
    assert r.holds and verify_verdict(E, r)
    D = diamond()
    bad = check_rdp_instance(D, "a", "a'", "b", "b'")
    assert not bad.holds and verify_verdict(D, bad)
    with pytest.raises(ValueError):
        check_rdp_instance(D, "a", "b", "a", "b")


def test_com_relation():
    E = corpus.get("twisted_s3")
    assert check_com(E, "0", "g012").holds
    assert not check_com(E, "1", "1").holds
    assert check_commutative(corpus.get("chain(3)")).holds


def test_profile_is_cached_and_stable():
    E = fresh("product(chain(2),chain(2))")
    first = rdp_profile(E)
    assert rdp_profile(E) == first
