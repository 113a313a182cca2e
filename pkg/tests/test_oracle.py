import pytest

from conftest import SMALL, triples_upto
from zmgroups import oracle
from zmgroups.core import GroupElement as E, validate_triple
from zmgroups.lattice import SubgroupTriple as T, enumerate_L, materialize
from zmgroups.oracle import (
    OracleBoundError,
    all_elements,
    all_subgroups_bruteforce,
    cayley_table,
    closure,
    is_normal_bruteforce,
)


def test_all_elements(f21, f20):
    assert len(all_elements(f21)) == 21
    assert len(all_elements(f20)) == 20
    assert all_elements(validate_triple(1, 1, 0)) == [E(0, 0)]
    els = all_elements(f21)
    assert els == sorted(els)


def test_bound_refused():
    big = validate_triple(1, 501, 0)
    with pytest.raises(OracleBoundError):
        all_elements(big)
    assert len(all_elements(big, bound=600)) == 501
    with pytest.raises(OracleBoundError):
        all_elements(validate_triple(7, 3, 2), bound=20)


def test_bound_is_configurable(monkeypatch):
    monkeypatch.setattr(oracle, "MAX_ORDER", 10)
    with pytest.raises(OracleBoundError):
        all_elements(validate_triple(7, 3, 2))


def test_closure_examples(f21):
    assert closure(f21, [E(0, 0)]) == (E(0, 0),)
    assert closure(f21, [E(0, 1)]) == tuple(E(0, y) for y in range(7))
    assert len(closure(f21, [E(1, 0), E(0, 1)])) == 21


def test_lagrange():
    for t in SMALL:
        for sub in all_subgroups_bruteforce(t):
            assert t.order % len(sub) == 0


def test_subgroup_counts(f21, f20):
    subs = all_subgroups_bruteforce(f21)
    assert len(subs) == 10
    assert sorted(len(s) for s in subs) == [1] + [3] * 7 + [7, 21]
    assert len(all_subgroups_bruteforce(f20)) == 14
    for q in (2, 3, 5, 7, 13):
        assert len(all_subgroups_bruteforce(validate_triple(1, q, 0))) == 2


def test_pairs_exhaust_subgroups():
    # adding any further element to a found subgroup never yields a new one
    for t in SMALL:
        table = cayley_table(t)
        family = {frozenset(table.index[g] for g in sub) for sub in all_subgroups_bruteforce(t)}
        for sub in family:
            for g in range(len(table.elements)):
                if g not in sub:
                    assert table.closure(list(sub) + [g]) in family


def test_pair_closure_literal(f21, f20):
    # the cyclic-subgroup shortcut equals closing every literal pair
    for t in (f21, f20, validate_triple(3, 4, 2), validate_triple(9, 2, 8)):
        els = all_elements(t)
        literal = {closure(t, [g, h]) for g in els for h in els}
        assert literal == all_subgroups_bruteforce(t)


def test_normal_examples(f21):
    assert is_normal_bruteforce(f21, all_elements(f21))
    assert not is_normal_bruteforce(f21, materialize(f21, T(7, 1, 0)).elements)
    assert is_normal_bruteforce(f21, materialize(f21, T(1, 3, 0)).elements)


def test_generator_conjugation_suffices():
    for t in SMALL:
        for sub in all_subgroups_bruteforce(t):
            assert is_normal_bruteforce(t, sub) == is_normal_bruteforce(t, sub, all_conjugators=True)


def test_family_matches_triples():
    for t in triples_upto(100):
        family = {materialize(t, st).elements for st in enumerate_L(t)}
        assert family == all_subgroups_bruteforce(t)
