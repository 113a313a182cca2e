"""Subgroups and normal subgroups of Zassenhaus metacyclic groups ZM(m, n, r)."""

from .core import (
    GroupElement,
    InvalidTripleError,
    ZmTriple,
    conjugate,
    elem_inv,
    elem_mul,
    elem_pow,
    validate_triple,
)
from .lattice import (
    MaterializedSubgroup,
    SubgroupTriple,
    enumerate_L,
    hasse_edges,
    includes,
    materialize,
)
from .normal import (
    count_eq1,
    count_eq2,
    count_eq3,
    dihedral_normal_count,
    enumerate_normal,
    is_chain,
    is_normal_criterion,
    normal_lattice_report,
)

__version__ = "0.1.0"
