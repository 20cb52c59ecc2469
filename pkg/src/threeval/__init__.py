"""Finite T-structures, HT-algebras, and their rough-set and relational
representations."""

from .examples import enumerate_t_structures, make_b, make_bt, product
from .fileformat import dump_algebra, load_algebra
from .htalgebra import HTAlgebra, to_t
from .lattice import FiniteLattice, Report, check_homomorphism, find_isomorphism
from .relational import represent_relational
from .rough import represent_rough
from .spectrum import chain_decomposition, stone_map
from .tstructure import TStructure, to_ht

__all__ = [
    "FiniteLattice",
    "HTAlgebra",
    "Report",
    "TStructure",
    "chain_decomposition",
    "check_homomorphism",
    "dump_algebra",
    "enumerate_t_structures",
    "find_isomorphism",
    "load_algebra",
    "make_b",
    "make_bt",
    "product",
    "represent_relational",
    "represent_rough",
    "stone_map",
    "to_ht",
    "to_t",
]
