from itertools import product
from math import gcd, lcm

import pytest
from hypothesis import given, settings, strategies as st

from conftest import triples_upto
from zmgroups.lattice import enumerate_L, materialize
from zmgroups.numtheory import divisors
from zmgroups.posets import Poset


def from_edges(size, edges):
    """Poset generated by ``edges`` (i <= j), reflexive-transitive closure."""
    leq = {(i, i) for i in range(size)} | set(edges)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return Poset(size, lambda i, j: (i, j) in leq)


def distributive_by_identity(p):
    idx = range(p.size)
    return all(
        p.meet(x, p.join(y, z)) == p.join(p.meet(x, y), p.meet(x, z))
        for x, y, z in product(idx, repeat=3)
    )


M3 = from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
N5 = from_edges(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def test_m3_detected():
    kind, nodes = M3.find_m3_or_n5()
    assert kind == "M3" and sorted(nodes) == [0, 1, 2, 3, 4]


def test_n5_detected():
    kind, nodes = N5.find_m3_or_n5()
    assert kind == "N5" and sorted(nodes) == [0, 1, 2, 3, 4]


def test_chain_and_boolean_are_distributive():
    chain = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert chain.is_total() and chain.is_distributive()
    assert chain.linear_order() == [0, 1, 2, 3]
    square = from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert not square.is_total() and square.is_distributive()
    assert square.linear_order() is None


def test_divisor_lattices():
    for n in range(1, 200):
        ds = divisors(n)
        p = Poset(len(ds), lambda i, j: ds[j] % ds[i] == 0)
        assert p.is_lattice() and p.is_distributive()
        for i, j in product(range(len(ds)), repeat=2):
            assert ds[p.meet(i, j)] == gcd(ds[i], ds[j])
            assert ds[p.join(i, j)] == lcm(ds[i], ds[j])


def test_covers():
    assert N5.covers() == [(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)]


def test_not_antisymmetric_rejected():
    with pytest.raises(ValueError):
        Poset(2, lambda i, j: True)


def test_full_subgroup_lattices_agree_with_identity():
    # full subgroup lattices are often non-distributive, exercising both outcomes
    seen = set()
    for t in triples_upto(48):
        subs = [materialize(t, sub).element_set for sub in enumerate_L(t)]
        p = Poset.from_sets(subs)
        assert p.is_lattice()
        dist = p.is_distributive()
        assert dist == distributive_by_identity(p), t
        seen.add(dist)
    assert seen == {True, False}


@settings(max_examples=300, deadline=None)
@given(st.lists(st.frozensets(st.integers(0, 4)), min_size=1, max_size=9))
def test_random_closure_systems(family):
    # intersection-closed families with a top element are lattices
    sets = {frozenset(range(5))} | set(family)
    while True:
        more = {a & b for a in sets for b in sets} - sets
        if not more:
            break
        sets |= more
    p = Poset.from_sets(sorted(sets, key=sorted))
    assert p.is_lattice()
    assert p.is_distributive() == distributive_by_identity(p)
