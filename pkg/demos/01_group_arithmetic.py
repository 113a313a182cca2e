"""
Element arithmetic in ZM(m, n, r)
=================================

A ZM-group is generated by ``a`` of order ``m`` and ``b`` of order ``n`` with
``b^-1 a b = a^r``.  Each element is written once as ``b^x a^y``; zmgroups
stores it as ``GroupElement(x, y)``.
"""

from zmgroups import conjugate, elem_inv, elem_mul, elem_pow, validate_triple
from zmgroups.core import GroupElement as E, InvalidTripleError

# The Frobenius group of order 21.
G = validate_triple(7, 3, 2)
print(G, "order", G.order, "d =", G.d)

# Not every triple is allowed: m and n must be coprime, and so on.
for bad in [(4, 2, 3), (5, 2, 1), (7, 2, 2)]:
    try:
        validate_triple(*bad)
    except InvalidTripleError as exc:
        print(bad, "->", exc.condition, ":", exc)

##############################################################################
# Products do not commute: ``b a != a b``.
a, b = G.a, G.b
print("b*a =", elem_mul(G, b, a), "  a*b =", elem_mul(G, a, b))

##############################################################################
# Powers and inverses have closed forms; they agree with repeated products.
g = E(1, 1)
print("g^3 =", elem_pow(G, g, 3), "  g^-1 =", elem_inv(G, g))
print("g * g^-1 =", elem_mul(G, g, elem_inv(G, g)))

##############################################################################
# The defining relation ``b^-1 a b = a^r`` holds.
print("b^-1 a b =", conjugate(G, a, b), "= a^r with r =", G.r)
