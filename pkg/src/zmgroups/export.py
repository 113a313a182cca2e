"""JSON and Graphviz DOT renderings of a subgroup or normal-subgroup lattice.

Both renderings are deterministic: the same triple always yields the same
bytes.
"""

from __future__ import annotations

import json

from .core import ZmTriple
from .lattice import enumerate_L, hasse_edges, materialize, subgroup_order
from .normal import (
    count_eq1,
    count_eq2,
    count_eq3,
    enumerate_normal,
    is_chain,
    is_normal_criterion,
)
from .numtheory import is_prime

__all__ = ["LATTICES", "lattice_document", "to_json", "to_dot"]

LATTICES = ("full", "normal")


def lattice_document(t: ZmTriple, lattice: str = "full") -> dict:
    """The export document for the full or the normal lattice.

    Keys, in order: ``m, n, r, d, order, subgroups, normal_count_eq1,
    normal_count_eq2, normal_count_eq3, is_chain, hasse``.  ``hasse`` holds
    ``[i, j]`` index pairs into ``subgroups`` with ``i`` covered by ``j``.
    """
    if lattice not in LATTICES:
        raise ValueError(f"lattice must be one of {LATTICES}, got {lattice!r}")
    triples = enumerate_L(t) if lattice == "full" else enumerate_normal(t)
    edges = hasse_edges([materialize(t, st) for st in triples])
    return {
        "m": t.m,
        "n": t.n,
        "r": t.r,
        "d": t.d,
        "order": t.order,
        "subgroups": [
            {
                "m1": st.m1,
                "n1": st.n1,
                "s": st.s,
                "order": subgroup_order(t, st),
                "normal": is_normal_criterion(t, st),
            }
            for st in triples
        ],
        "normal_count_eq1": count_eq1(t),
        "normal_count_eq2": count_eq2(t) if is_prime(t.m) else None,
        "normal_count_eq3": count_eq3(t) if is_prime(t.n) else None,
        "is_chain": is_chain(t).is_chain,
        "hasse": [list(e) for e in edges],
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_dot(doc: dict) -> str:
    """Hasse diagram as a bottom-to-top digraph; normal subgroups get a double border."""
    name = f"ZM({doc['m']},{doc['n']},{doc['r']})"
    lines = [
        f'digraph "{name}" {{',
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for i, sub in enumerate(doc["subgroups"]):
        label = f"({sub['m1']},{sub['n1']},{sub['s']}) |H|={sub['order']}"
        extra = ", peripheries=2" if sub["normal"] else ""
        lines.append(f'  n{i} [label="{label}"{extra}];')
    for i, j in doc["hasse"]:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
