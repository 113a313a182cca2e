"""
When the normal subgroups form a chain
======================================

The normal subgroups of ZM(m, n, r) are totally ordered exactly when either
``m = 1`` and ``n`` is a prime power, or ``m = p^u`` and ``n = q^v`` are prime
powers and no ``r^k`` with ``1 <= k < n`` is ``1`` modulo any prime of ``m``.
The chain then has length ``u + v``, which gives groups with a prescribed
chain of normal subgroups.
"""

from zmgroups import enumerate_normal, is_chain, validate_triple
from zmgroups.normal import normal_lattice_report
from zmgroups.scan import iter_triples

for args in [(5, 4, 2), (3, 4, 2), (1, 8, 0), (7, 6, 3)]:
    G = validate_triple(*args)
    v = is_chain(G)
    chain = " < ".join(map(str, v.chain)) if v else "-"
    print(f"{G}: chain={bool(v)}  {chain}")

##############################################################################
# Non-abelian groups of order <= 500 whose normal lattice is a chain of
# length at least 3.
for G in iter_triples(500):
    v = is_chain(G)
    if v and G.m > 1 and len(v.chain) >= 4:
        print(f"{G}: length {len(v.chain) - 1}")

##############################################################################
# Cross-check one non-chain: its Hasse diagram branches.
rep = normal_lattice_report(validate_triple(15, 4, 2))
print("ZM(15,4,2) normal subgroups:", [str(st) for st in rep.normal_triples])
print("covering pairs:", rep.hasse)
print("sorted normal family equals enumerate_normal:", list(rep.normal_triples) == enumerate_normal(validate_triple(15, 4, 2)))
