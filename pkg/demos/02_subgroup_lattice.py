"""
The full subgroup lattice
=========================

Subgroups of ZM(m, n, r) are indexed by triples ``(m1, n1, s)``.  Here we list
them for the Frobenius group of order 20, build each one explicitly, compare
with a brute-force search, and write the Hasse diagram as Graphviz DOT.
"""

import sys

from zmgroups import enumerate_L, hasse_edges, materialize, validate_triple
from zmgroups.export import lattice_document, to_dot
from zmgroups.oracle import all_subgroups_bruteforce

G = validate_triple(5, 4, 2)
triples = enumerate_L(G)
print(len(triples), "subgroups of", G)
for st in triples:
    h = materialize(G, st)
    print(f"  {st}  order {h.order:2d}  elements {[str(e) for e in h.elements[:4]]}...")

##############################################################################
# The same family comes out of a blind closure search over all pairs of
# elements.
family = {materialize(G, st).elements for st in triples}
print("matches brute force:", family == all_subgroups_bruteforce(G))

##############################################################################
# Covering relations of the inclusion order.
subs = [materialize(G, st) for st in triples]
print("Hasse edges:", hasse_edges(subs))

##############################################################################
# Render with ``dot -Tpng``; normal subgroups get a double border.
sys.stdout.write(to_dot(lattice_document(G, "full")))
