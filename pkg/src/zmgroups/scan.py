"""Exhaustive verification over all ZM triples up to a given group order.

Three check families are available:

``counts``
    The divisor-sum count and its prime-m / prime-n specializations agree
    with the enumerated normal family, normal triples lie in L and pick out
    exactly the criterion-normal subgroups, and normal subgroups have
    pairwise distinct orders.
``chains``
    The chain test agrees with totality of the (materialized) inclusion order
    and returns the sorted family; the normal lattice is distributive; the
    subgroups ``H_(1,n1,0)`` form a copy of the divisor lattice of ``n``.
``all``
    Both of the above, plus the brute-force oracle: the triple family equals
    the closure-enumerated subgroups and both normality tests agree.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import IO, Iterable, Iterator

from .core import InvalidTripleError, ZmTriple, validate_triple
from .lattice import enumerate_L, includes, materialize, normal_includes, subgroup_order
from .normal import count_eq1, count_eq2, count_eq3, enumerate_normal, is_chain, is_normal_criterion
from .numtheory import divisors, is_prime
from .oracle import all_subgroups_bruteforce, is_normal_bruteforce
from .posets import Poset

__all__ = [
    "CHECKS",
    "CSV_COLUMNS",
    "TripleResult",
    "iter_triples",
    "check_triple",
    "run_scan",
    "write_csv",
]

CHECKS = ("all", "counts", "chains")

CSV_COLUMNS = (
    "m", "n", "r", "d", "order", "n_subgroups", "n_normal",
    "eq2_applicable", "eq3_applicable", "is_chain", "checks_passed",
)


@dataclass
class TripleResult:
    group: ZmTriple
    n_subgroups: int
    n_normal: int
    is_chain: bool
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def row(self) -> list:
        t = self.group
        return [
            t.m, t.n, t.r, t.d, t.order, self.n_subgroups, self.n_normal,
            _flag(is_prime(t.m)), _flag(is_prime(t.n)), _flag(self.is_chain),
            _flag(self.passed),
        ]


def _flag(v: bool) -> str:
    return "true" if v else "false"


def iter_triples(max_order: int) -> Iterator[ZmTriple]:
    """Every valid canonical triple with ``m * n <= max_order``.

    Ordered by group order, then ``m``, then ``r``.
    """
    for order in range(1, max_order + 1):
        for m in divisors(order):
            n = order // m
            if gcd(m, n) != 1:
                continue
            for r in range(m):
                try:
                    yield validate_triple(m, n, r)
                except InvalidTripleError:
                    pass


def _check_counts(t: ZmTriple, triples, normal, fail) -> None:
    eq1 = count_eq1(t)
    if eq1 != len(normal):
        fail(f"count_eq1={eq1} but {len(normal)} normal triples")
    if is_prime(t.m) and count_eq2(t) != eq1:
        fail(f"count_eq2={count_eq2(t)} != count_eq1={eq1}")
    if is_prime(t.n) and count_eq3(t) != eq1:
        fail(f"count_eq3={count_eq3(t)} != count_eq1={eq1}")
    by_criterion = [st for st in triples if is_normal_criterion(t, st)]
    if by_criterion != normal:
        fail("normal triples differ from criterion-normal members of L")
    orders = [subgroup_order(t, st) for st in normal]
    if len(set(orders)) != len(orders):
        fail(f"repeated normal subgroup orders {orders}")


def _check_chains(t: ZmTriple, normal, fail) -> None:
    subs = [materialize(t, st) for st in normal]
    poset = Poset(len(subs), lambda i, j: includes(subs[j], subs[i]))
    for i in range(len(subs)):
        for j in range(len(subs)):
            if poset.leq(i, j) != normal_includes(normal[i], normal[j]):
                fail(f"normal_includes wrong for {normal[i]} <= {normal[j]}")
    verdict = is_chain(t)
    if verdict.is_chain != poset.is_total():
        fail(f"is_chain={verdict.is_chain} but totality={poset.is_total()}")
    if verdict.is_chain and list(verdict.chain) != normal:
        fail(f"chain {verdict.chain} differs from sorted normal family")
    witness = poset.find_m3_or_n5()
    if witness is not None:
        fail(f"normal lattice contains {witness[0]}: {[str(normal[k]) for k in witness[1]]}")
    ns = divisors(t.n)
    pos = {st: k for k, st in enumerate(normal)}
    try:
        idx = [pos[(1, n1, 0)] for n1 in ns]
    except KeyError:
        fail("some H_(1,n1,0) is not normal")
        return
    for a, na in zip(idx, ns):
        for b, nb in zip(idx, ns):
            if poset.leq(a, b) != (na % nb == 0):
                fail(f"H_(1,{na},0) <= H_(1,{nb},0) disagrees with divisibility")


def _check_oracle(t: ZmTriple, triples, fail) -> None:
    subs = {st: materialize(t, st) for st in triples}
    family = {h.elements for h in subs.values()}
    if len(family) != len(triples):
        fail("distinct triples give equal subgroups")
    brute = all_subgroups_bruteforce(t)
    if family != brute:
        fail(f"{len(family)} triple subgroups vs {len(brute)} brute-force subgroups")
    brute_normal = 0
    for st, h in subs.items():
        bf = is_normal_bruteforce(t, h.elements)
        brute_normal += bf
        if bf != is_normal_criterion(t, st):
            fail(f"{st}: criterion={not bf} but conjugation test={bf}")
    if brute_normal != count_eq1(t):
        fail(f"count_eq1={count_eq1(t)} but {brute_normal} normal by conjugation")


def check_triple(t: ZmTriple, check: str = "all") -> TripleResult:
    if check not in CHECKS:
        raise ValueError(f"unknown check family {check!r}")
    triples = enumerate_L(t)
    normal = enumerate_normal(t)
    result = TripleResult(t, len(triples), len(normal), is_chain(t).is_chain)
    fail = result.failures.append
    if check in ("all", "counts"):
        _check_counts(t, triples, normal, fail)
    if check in ("all", "chains"):
        _check_chains(t, normal, fail)
    if check == "all":
        _check_oracle(t, triples, fail)
    return result


def _check_args(args):
    return check_triple(*args)


def run_scan(max_order: int, check: str = "all", jobs: int = 1) -> Iterator[TripleResult]:
    """Check every triple up to ``max_order``; results come in triple order."""
    work = ((t, check) for t in iter_triples(max_order))
    if jobs <= 1:
        yield from map(_check_args, work)
        return
    with ProcessPoolExecutor(jobs) as pool:
        # map() hands results back in submission order
        yield from pool.map(_check_args, work, chunksize=8)


def write_csv(results: Iterable[TripleResult], fh: IO[str]) -> list[TripleResult]:
    """Write one row per result; return the failing ones."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    failed = []
    for res in results:
        writer.writerow(res.row())
        if not res.passed:
            failed.append(res)
    return failed
