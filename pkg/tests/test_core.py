import random
from itertools import product
from math import gcd

import pytest

from conftest import SMALL, triples_upto
from zmgroups.core import (
    WORD_BOUND,
    GroupElement as E,
    InvalidTripleError,
    conjugate,
    elem_inv,
    elem_mul,
    elem_pow,
    identity,
    validate_triple,
)
from zmgroups.scan import iter_triples

ONE = E(0, 0)


def fold_pow(t, g, k):
    acc = ONE
    for _ in range(k):
        acc = elem_mul(t, acc, g)
    return acc


def elements(t):
    return [E(x, y) for x in range(t.n) for y in range(t.m)]


class TestValidate:
    def test_f21(self):
        t = validate_triple(7, 3, 2)
        assert (t.m, t.n, t.r, t.d, t.order) == (7, 3, 2, 3, 21)

    @pytest.mark.parametrize(
        "args, condition",
        [
            ((4, 2, 3), "gcd_m_n"),
            ((5, 2, 1), "gcd_m_r_minus_1"),
            ((7, 2, 2), "r_pow_n"),
            ((0, 3, 0), "nonpositive"),
            ((3, 0, 2), "nonpositive"),
            ((3, 2, -1), "negative_r"),
            ((2**16 + 1, 2**15 + 1, 0), "too_large"),
        ],
    )
    def test_errors_name_condition(self, args, condition):
        with pytest.raises(InvalidTripleError) as info:
            validate_triple(*args)
        assert info.value.condition == condition

    def test_cyclic(self):
        t = validate_triple(1, 6, 0)
        assert t.d == 1 and t.is_cyclic and t.r == 0

    def test_r_canonicalized(self):
        assert validate_triple(7, 3, 9) == validate_triple(7, 3, 2)
        assert validate_triple(1, 5, 17).r == 0

    def test_trivial_group(self):
        t = validate_triple(1, 1, 0)
        assert t.order == 1
        for m in range(2, 20):
            with pytest.raises(InvalidTripleError):
                validate_triple(m, 1, 1)

    def test_bound(self):
        assert validate_triple(1, WORD_BOUND, 0).order == WORD_BOUND

    def test_d_divides_n(self):
        for t in triples_upto(300):
            assert t.n % t.d == 0
            assert (t.d == 1) == (t.m == 1)

    def test_iter_triples_exhaustive(self):
        # independent enumeration straight from the defining conditions
        bound = 120
        expected = [
            (m, n, r)
            for m in range(1, bound + 1)
            for n in range(1, bound // m + 1)
            for r in range(m)
            if gcd(m, n) == 1 and gcd(m, r - 1) == 1 and (r**n - 1) % m == 0
        ]
        got = [(t.m, t.n, t.r) for t in iter_triples(bound)]
        assert len(got) == len(set(got))
        assert sorted(got) == sorted(expected)


class TestArithmeticExamples:
    def test_mul(self, f21):
        assert elem_mul(f21, E(1, 0), E(0, 1)) == E(1, 1)
        assert elem_mul(f21, E(0, 1), E(1, 0)) == E(1, 2)
        for g in elements(f21):
            assert elem_mul(f21, identity(f21), g) == g

    def test_pow(self, f21, f20):
        assert elem_pow(f21, E(1, 1), 3) == ONE
        assert elem_pow(f20, E(1, 1), 2) == E(2, 3)
        for g in elements(f21):
            assert elem_pow(f21, g, 0) == ONE

    def test_inv(self, f21):
        assert elem_inv(f21, ONE) == ONE
        assert elem_inv(f21, E(1, 1)) == E(2, 3)
        assert elem_mul(f21, E(1, 1), E(2, 3)) == ONE
        assert elem_inv(validate_triple(1, 6, 0), E(5, 0)) == E(1, 0)

    def test_conjugate(self, f21):
        g = E(1, 4)
        assert conjugate(f21, g, ONE) == g
        assert conjugate(f21, E(0, 1), E(1, 0)) == E(0, 2)
        assert conjugate(f21, E(1, 0), E(0, 1)) == E(1, 6)

    def test_out_of_range_rejected(self, f21):
        with pytest.raises(ValueError):
            elem_mul(f21, E(3, 0), ONE)
        with pytest.raises(ValueError):
            elem_inv(f21, E(0, 7))


class TestGroupLaws:
    def test_associativity(self):
        rng = random.Random(1)
        for t in triples_upto(200):
            els = elements(t)
            if t.order <= 60:
                # every triple, via a table of elem_mul products
                idx = {g: i for i, g in enumerate(els)}
                mul = [[idx[elem_mul(t, g, h)] for h in els] for g in els]
                for g, h in product(range(len(els)), repeat=2):
                    gh, row_g = mul[g][h], mul[g]
                    assert all(mul[gh][k] == row_g[mul[h][k]] for k in range(len(els)))
            else:
                for _ in range(1000):
                    g, h, k = (rng.choice(els) for _ in range(3))
                    assert elem_mul(t, elem_mul(t, g, h), k) == elem_mul(t, g, elem_mul(t, h, k))

    def test_inverse_both_sides(self):
        for t in triples_upto(200):
            for g in elements(t):
                h = elem_inv(t, g)
                assert elem_mul(t, g, h) == ONE == elem_mul(t, h, g)

    def test_pow_matches_fold(self):
        for t in triples_upto(100):
            for g in elements(t):
                acc = ONE
                for k in range(2 * t.n + 1):
                    assert elem_pow(t, g, k) == acc
                    acc = elem_mul(t, acc, g)

    def test_negative_pow(self):
        for t in SMALL:
            for g in elements(t):
                for k in range(1, 4):
                    assert elem_pow(t, g, -k) == fold_pow(t, elem_inv(t, g), k)

    def test_defining_relations(self):
        for t in triples_upto(300):
            assert elem_pow(t, t.a, t.m) == ONE
            assert elem_pow(t, t.b, t.n) == ONE
            assert conjugate(t, t.a, t.b) == E(0, t.r)
            assert elem_mul(t, elem_mul(t, elem_inv(t, t.b), t.a), t.b) == E(0, t.r)

    def test_normal_form(self):
        # b^x a^y built from generator words is exactly (x, y)
        for t in SMALL:
            for x, y in product(range(t.n), range(t.m)):
                word = elem_mul(t, fold_pow(t, t.b, x), fold_pow(t, t.a, y))
                assert word == E(x, y)

    def test_conjugation_closed_form(self):
        for t in SMALL:
            for g, h in product(elements(t), repeat=2):
                direct = elem_mul(t, elem_mul(t, elem_inv(t, h), g), h)
                assert conjugate(t, g, h) == direct
