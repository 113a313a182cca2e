"""
Counting normal subgroups
=========================

The number of normal subgroups of ZM(m, n, r) is a divisor sum over ``n1 | n``
of ``tau(gcd(m, r^n1 - 1))``.  It simplifies to ``tau(n) + tau(n/d)`` when
``m`` is prime and to ``tau(m) + 1`` when ``n`` is prime.  We tabulate all
three over small groups and plot the count against the group order.
"""

from zmgroups import count_eq1, count_eq2, count_eq3, dihedral_normal_count
from zmgroups.normal import dihedral
from zmgroups.numtheory import is_prime
from zmgroups.scan import iter_triples

print(f"{'group':>14} {'divisor sum':>12} {'m prime':>8} {'n prime':>8}")
for G in iter_triples(60):
    if G.m == 1:
        continue
    eq2 = count_eq2(G) if is_prime(G.m) else "-"
    eq3 = count_eq3(G) if is_prime(G.n) else "-"
    print(f"{str(G):>14} {count_eq1(G):>12} {eq2:>8} {eq3:>8}")

##############################################################################
# Dihedral groups of order 2m with m odd are ZM(m, 2, m - 1).
for m in (3, 9, 15, 21):
    print(f"D_{2 * m}: {count_eq1(dihedral(m))} normal subgroups (tau(m)+1 = {dihedral_normal_count(m)})")

##############################################################################
# A scatter of counts; skipped quietly if matplotlib is missing.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    groups = list(iter_triples(300))
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.scatter([G.order for G in groups], [count_eq1(G) for G in groups], s=6)
    ax.set_xlabel("|ZM(m,n,r)|")
    ax.set_ylabel("# normal subgroups")
    fig.tight_layout()
    fig.savefig("normal_counts.png", dpi=120)
    print("wrote normal_counts.png")
